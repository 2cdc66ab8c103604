//! The fast construction: Euclid-like descent on the period set, then
//! periodic re-extension on the way back up.
//!
//! With `m = min P`, one reduction step maps
//!
//! ```text
//! P  ->  Q = { p - m : p ∈ P, p != m } ∪ { m }
//! ```
//!
//! and the canonical word of length `n` for `P` is determined by the one of
//! length `n - m` for `Q`:
//!
//! ```text
//! FW(P, n)[i] = FW(Q, n - m)[i mod m]   if (i mod m) < n - m
//!             = i mod m                 otherwise
//! ```
//!
//! Lengths `n <= m` give `0 1 ... (n - 1)`, and a set whose minimum equals
//! its gcd gives the periodic extension of `0 1 ... (m - 1)`.
//!
//! A literal descent takes about `n / m` steps, hopeless for `n = 10^12` and
//! `m = 3`. While the minimum stays fixed a run of `k` steps only subtracts
//! `k * m` from the other periods and from `n`, and the letter formula
//! collapses to a single comparison against `n - k * m`. [`batched_reduce`]
//! computes such a run in one go, the same way the quotient form of Euclid's
//! algorithm replaces repeated subtraction. The one-step-at-a-time
//! definitions live in [`unbatched`] and are what the batched code is tested
//! against.

use std::fmt;

use crate::error::{Error, Result};
use crate::period::PeriodSet;
use crate::word::{to_len, LabeledWord};

/// Applies one reduction step.
pub fn reduce(periods: &PeriodSet) -> PeriodSet {
    reduce_times(periods, 1)
}

/// Applies `k` reduction steps during which the minimum stays put.
/// Requires `k == 1` or `k * m <= p2 - m`.
fn reduce_times(periods: &PeriodSet, k: u64) -> PeriodSet {
    let m = periods.min();
    let shift = k * m;
    let mut next: Vec<u64> = periods.periods()[1..].iter().map(|&p| p - shift).collect();
    next.push(m);
    next.sort_unstable();
    next.dedup();
    PeriodSet::from_sorted(next)
}

/// Runs as many reduction steps as possible (at most `budget`) in one
/// arithmetic pass, as long as the minimum stays fixed.
///
/// The step count is `min(budget, (p2 - m) / m)` clamped to at least one,
/// where `p2` is the second smallest period. A singleton is a fixed point and
/// reports one step.
pub fn batched_reduce(periods: &PeriodSet, budget: u64) -> (PeriodSet, u64) {
    let m = periods.min();
    let Some(p2) = periods.second() else {
        return (periods.clone(), 1);
    };
    let k = ((p2 - m) / m).min(budget).max(1);
    (reduce_times(periods, k), k)
}

/// Why a descent stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Termination {
    /// `n <= min Q`: every position is its own class.
    LengthAtMostMin,
    /// `min Q == gcd Q`: the word is `0 1 ... (m - 1)` repeated.
    GcdEqualsMin,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Termination::LengthAtMostMin => "LengthAtMostMin",
            Termination::GcdEqualsMin => "GcdEqualsMin",
        })
    }
}

fn stop_reason(periods: &PeriodSet, n: u64) -> Option<Termination> {
    if n <= periods.min() {
        Some(Termination::LengthAtMostMin)
    } else if periods.min() == periods.gcd() {
        Some(Termination::GcdEqualsMin)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub periods: PeriodSet,
    pub length: u64,
}

/// The literal sequence `(Q_0, n_0) = (P, n), (Q_1, n_1), ...`, one entry per
/// reduction step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionChain {
    pub steps: Vec<ChainStep>,
    pub termination: Termination,
}

/// Builds the literal reduction chain.
///
/// The chain has roughly `n / m` entries for unfavourable inputs; use
/// [`descent`] for a compressed form.
pub fn reduction_chain(periods: &PeriodSet, n: u64) -> ReductionChain {
    let mut steps = Vec::new();
    let (mut q, mut n) = (periods.clone(), n);
    loop {
        let stop = stop_reason(&q, n);
        let next = reduce(&q);
        let m = q.min();
        steps.push(ChainStep {
            periods: q,
            length: n,
        });
        if let Some(termination) = stop {
            return ReductionChain { steps, termination };
        }
        q = next;
        n -= m;
    }
}

/// One level of a batched descent: `steps` literal reductions lead from this
/// level to the next (zero on the last level).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub periods: PeriodSet,
    pub length: u64,
    pub steps: u64,
}

/// The reduction chain with runs of equal minimum folded into single levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    pub levels: Vec<Level>,
    pub termination: Termination,
}

impl Descent {
    /// Number of entries in the equivalent literal chain.
    pub fn literal_len(&self) -> u64 {
        self.levels.iter().map(|l| l.steps).sum::<u64>() + 1
    }
}

/// Batched counterpart of [`reduction_chain`].
pub fn descent(periods: &PeriodSet, n: u64) -> Descent {
    let mut levels = Vec::new();
    let (mut q, mut n) = (periods.clone(), n);
    loop {
        if let Some(termination) = stop_reason(&q, n) {
            levels.push(Level {
                periods: q,
                length: n,
                steps: 0,
            });
            return Descent {
                levels,
                termination,
            };
        }
        let (next, k, child) = batch_step(&q, n);
        levels.push(Level {
            periods: q,
            length: n,
            steps: k,
        });
        q = next;
        n = child;
    }
}

/// One batched step from a non-terminal `(Q, n)`: the number of literal
/// steps is also capped so that every skipped level still has `n > m`.
fn batch_step(q: &PeriodSet, n: u64) -> (PeriodSet, u64, u64) {
    let m = q.min();
    let (next, k) = batched_reduce(q, (n - 1) / m);
    (next, k, n - k * m)
}

/// The canonical maximal-alphabet word of length `n` with periods `P`.
///
/// Bit-identical to [`crate::fw_oracle`]. Only the length-`m` generator of
/// each level is materialized, plus the final word.
pub fn fw_fast(periods: &PeriodSet, n: u64) -> Result<LabeledWord> {
    let len = to_len(n)?;
    let d = descent(periods, n);
    let (base, upper) = d.levels.split_last().expect("descent has a level");
    let mut generator: Vec<u64> = match d.termination {
        Termination::LengthAtMostMin => (0..base.length).collect(),
        Termination::GcdEqualsMin => (0..base.periods.min()).collect(),
    };
    let mut child_len = base.length;
    for level in upper.iter().rev() {
        let m = level.periods.min();
        to_len(m)?;
        let child = &generator;
        generator = (0..m)
            .map(|x| {
                if x < child_len {
                    child[(x % child.len() as u64) as usize]
                } else {
                    x
                }
            })
            .collect();
        child_len = level.length;
    }
    let generator = LabeledWord::new(generator);
    let word = generator.extend_periodically(n)?;
    debug_assert_eq!(word.len(), len);
    Ok(word)
}

/// The letter at position `i` of the canonical word of length `n`, without
/// building the word. Cost is proportional to the batched descent length.
pub fn letter_at(periods: &PeriodSet, n: u64, i: u64) -> Result<u64> {
    if i >= n {
        return Err(Error::OutOfRange { index: i, len: n });
    }
    let (mut q, mut n, mut i) = (periods.clone(), n, i);
    loop {
        match stop_reason(&q, n) {
            Some(Termination::LengthAtMostMin) => return Ok(i),
            Some(Termination::GcdEqualsMin) => return Ok(i % q.min()),
            None => {}
        }
        let r = i % q.min();
        let (next, _, child) = batch_step(&q, n);
        if r >= child {
            return Ok(r);
        }
        (q, n, i) = (next, child, r);
    }
}

/// Length of the longest non-trivial maximal-alphabet word, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtremalResult {
    pub value: Option<u64>,
}

impl ExtremalResult {
    pub fn get(&self) -> Option<u64> {
        self.value
    }

    pub fn is_absent(&self) -> bool {
        self.value.is_none()
    }
}

impl fmt::Display for ExtremalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("none"),
        }
    }
}

/// Extremal length via `L(P) = m + max(L(Q), m - 1)`.
///
/// The recursion bottoms out at a set whose minimum equals its gcd, with the
/// formal value `m - 1`. If `P` itself is such a set every word with periods
/// `P` is trivial and the result is absent.
///
/// A run of `k` steps with the same minimum telescopes to
/// `k * m + max(L, m - 1)`, since every intermediate value is already at
/// least `2m - 1`.
pub fn extremal_length(periods: &PeriodSet) -> Result<ExtremalResult> {
    if periods.min() == periods.gcd() {
        return Ok(ExtremalResult { value: None });
    }
    let mut runs: Vec<(u64, u64)> = Vec::new();
    let mut q = periods.clone();
    while q.min() != q.gcd() {
        let (next, k) = batched_reduce(&q, u64::MAX);
        runs.push((q.min(), k));
        q = next;
    }
    let mut value = q.min() - 1;
    for &(m, k) in runs.iter().rev() {
        value = k
            .checked_mul(m)
            .and_then(|km| km.checked_add(value.max(m - 1)))
            .ok_or(Error::ArithmeticOverflow)?;
    }
    Ok(ExtremalResult { value: Some(value) })
}

/// One-step-at-a-time definitions, kept as references for the batched code.
pub mod unbatched {
    use super::*;

    pub fn letter_at(periods: &PeriodSet, n: u64, i: u64) -> Result<u64> {
        if i >= n {
            return Err(Error::OutOfRange { index: i, len: n });
        }
        let (mut q, mut n, mut i) = (periods.clone(), n, i);
        loop {
            let m = q.min();
            if n <= m {
                return Ok(i);
            }
            let r = i % m;
            if r >= n - m {
                return Ok(r);
            }
            (q, n, i) = (reduce(&q), n - m, r);
        }
    }

    /// Builds every word of the literal chain from the bottom up.
    pub fn fw_word(periods: &PeriodSet, n: u64) -> Result<LabeledWord> {
        let chain = reduction_chain(periods, n);
        let (base, upper) = chain.steps.split_last().expect("chain has a step");
        let mut u = match chain.termination {
            Termination::LengthAtMostMin => LabeledWord::identity(base.length)?,
            Termination::GcdEqualsMin => {
                LabeledWord::identity(base.periods.min())?.extend_periodically(base.length)?
            }
        };
        for step in upper.iter().rev() {
            let m = step.periods.min();
            let w = if m <= u.len() as u64 {
                u.pref(m)?
            } else {
                u.letters()
                    .iter()
                    .copied()
                    .chain(u.len() as u64..m)
                    .collect()
            };
            u = w.extend_periodically(step.length)?;
        }
        Ok(u)
    }

    pub fn extremal_length(periods: &PeriodSet) -> Result<ExtremalResult> {
        if periods.min() == periods.gcd() {
            return Ok(ExtremalResult { value: None });
        }
        let mut mins = Vec::new();
        let mut q = periods.clone();
        while q.min() != q.gcd() {
            mins.push(q.min());
            q = reduce(&q);
        }
        let mut value = q.min() - 1;
        for &m in mins.iter().rev() {
            value = m
                .checked_add(value.max(m - 1))
                .ok_or(Error::ArithmeticOverflow)?;
        }
        Ok(ExtremalResult { value: Some(value) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fw_oracle;
    use crate::properties::{is_palindrome, is_palindrome_up_to_renaming, is_trivial};

    fn ps(v: &[u64]) -> PeriodSet {
        PeriodSet::new(v.iter().copied()).unwrap()
    }

    fn small_sets(max: u64) -> Vec<PeriodSet> {
        let mut out = Vec::new();
        for a in 1..=max {
            out.push(ps(&[a]));
            for b in a + 1..=max {
                out.push(ps(&[a, b]));
                for c in b + 1..=max {
                    out.push(ps(&[a, b, c]));
                }
            }
        }
        out
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&ps(&[5, 7])), ps(&[2, 5]));
        assert_eq!(reduce(&ps(&[2, 5])), ps(&[2, 3]));
        assert_eq!(reduce(&ps(&[4])), ps(&[4]));
        // collapse: 6 - 3 == 3
        assert_eq!(reduce(&ps(&[3, 6, 8])), ps(&[3, 5]));
    }

    #[test]
    fn reduce_preserves_gcd() {
        for p in small_sets(15) {
            assert_eq!(reduce(&p).gcd(), p.gcd(), "P={p}");
        }
    }

    #[test]
    fn batched_examples() {
        let (q, k) = batched_reduce(&ps(&[3, 100]), u64::MAX);
        assert_eq!((q, k), (ps(&[3, 4]), 32));
        let mut lit = ps(&[3, 100]);
        for _ in 0..32 {
            lit = reduce(&lit);
        }
        assert_eq!(lit, ps(&[3, 4]));

        assert_eq!(batched_reduce(&ps(&[5, 7]), u64::MAX), (ps(&[2, 5]), 1));
        assert_eq!(batched_reduce(&ps(&[6]), 40), (ps(&[6]), 1));
        assert_eq!(batched_reduce(&ps(&[3, 100]), 5), (ps(&[3, 85]), 5));
    }

    #[test]
    fn chain_worked_example() {
        let chain = reduction_chain(&ps(&[5, 7]), 8);
        let got: Vec<_> = chain
            .steps
            .iter()
            .map(|s| (s.periods.periods().to_vec(), s.length))
            .collect();
        assert_eq!(got, vec![(vec![5, 7], 8), (vec![2, 5], 3), (vec![2, 3], 1)]);
        assert_eq!(chain.termination, Termination::LengthAtMostMin);
    }

    #[test]
    fn chain_stops_immediately() {
        let chain = reduction_chain(&ps(&[2, 4]), 100);
        assert_eq!(chain.steps.len(), 1);
        assert_eq!(chain.termination, Termination::GcdEqualsMin);

        let chain = reduction_chain(&ps(&[5, 7]), 4);
        assert_eq!(chain.steps.len(), 1);
        assert_eq!(chain.termination, Termination::LengthAtMostMin);

        // both conditions hold: length wins
        let chain = reduction_chain(&ps(&[2, 4]), 2);
        assert_eq!(chain.termination, Termination::LengthAtMostMin);
    }

    #[test]
    fn chain_invariants() {
        for p in small_sets(10) {
            for n in 0..30 {
                let chain = reduction_chain(&p, n);
                for pair in chain.steps.windows(2) {
                    let (a, b) = (&pair[0], &pair[1]);
                    assert_eq!(b.length, a.length - a.periods.min());
                    assert_eq!(b.periods.gcd(), a.periods.gcd());
                    assert_eq!(b.periods, reduce(&a.periods));
                }
                let d = descent(&p, n);
                assert_eq!(d.termination, chain.termination, "P={p} n={n}");
                assert_eq!(d.literal_len(), chain.steps.len() as u64);
                assert_eq!(
                    d.levels.last().unwrap(),
                    &Level {
                        periods: chain.steps.last().unwrap().periods.clone(),
                        length: chain.steps.last().unwrap().length,
                        steps: 0,
                    }
                );
            }
        }
    }

    #[test]
    fn fast_word_examples() {
        assert_eq!(
            fw_fast(&ps(&[5, 7]), 8).unwrap().letters(),
            &[0, 1, 0, 3, 4, 0, 1, 0]
        );
        assert_eq!(fw_fast(&ps(&[5, 7]), 3).unwrap().letters(), &[0, 1, 2]);
        assert_eq!(
            fw_fast(&ps(&[2, 4]), 5).unwrap().letters(),
            &[0, 1, 0, 1, 0]
        );
        assert_eq!(
            fw_fast(&ps(&[2, 4]), 5).unwrap(),
            fw_oracle(&ps(&[2, 4]), 5).unwrap()
        );
        assert!(fw_fast(&ps(&[5, 7]), 0).unwrap().is_empty());
    }

    #[test]
    fn fast_matches_oracle_and_unbatched() {
        for p in small_sets(9) {
            for n in 0..=30 {
                let fast = fw_fast(&p, n).unwrap();
                assert_eq!(fast, fw_oracle(&p, n).unwrap(), "P={p} n={n}");
                assert_eq!(fast, unbatched::fw_word(&p, n).unwrap(), "P={p} n={n}");
                for i in 0..n {
                    let a = letter_at(&p, n, i).unwrap();
                    assert_eq!(a, fast[i as usize], "P={p} n={n} i={i}");
                    assert_eq!(a, unbatched::letter_at(&p, n, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn letter_examples() {
        let p = ps(&[5, 7]);
        assert_eq!(letter_at(&p, 8, 4), Ok(4));
        assert_eq!(letter_at(&p, 8, 7), Ok(0));
        assert_eq!(
            letter_at(&p, 8, 8),
            Err(Error::OutOfRange { index: 8, len: 8 })
        );
        assert!(letter_at(&p, 0, 0).is_err());
    }

    #[test]
    fn letter_at_huge_length() {
        // far beyond the extremal length 10^9 + 8, so the word is constant
        let p = ps(&[3, 1_000_000_007]);
        let n = 1_000_000_000_000;
        for i in [0, 1, 2, 100_000_000_001, 999_999_999_999] {
            assert_eq!(letter_at(&p, n, i), Ok(0));
        }
        // just inside the extremal length the word still has many letters
        // at the extremal length the single long edge 0 -- 10^9 + 7 joins
        // residues 0 and 2 mod 3
        let n = 1_000_000_008;
        assert_eq!(letter_at(&p, n, 1), Ok(1));
        assert_eq!(letter_at(&p, n, 2), Ok(0));
        assert_eq!(letter_at(&p, n, n - 1), Ok(0));
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(extremal_length(&ps(&[5, 7])).unwrap().get(), Some(10));
        assert_eq!(extremal_length(&ps(&[2, 3])).unwrap().get(), Some(3));
        assert_eq!(extremal_length(&ps(&[3, 4])).unwrap().get(), Some(5));
        assert_eq!(extremal_length(&ps(&[4, 6])).unwrap().get(), Some(7));
        assert!(extremal_length(&ps(&[2, 4])).unwrap().is_absent());
        assert_eq!(
            extremal_length(&ps(&[3, 1_000_000_007])).unwrap().get(),
            Some(1_000_000_008)
        );
    }

    #[test]
    fn extremal_overflow_is_reported() {
        let p = ps(&[u64::MAX - 1, u64::MAX]);
        assert_eq!(extremal_length(&p), Err(Error::ArithmeticOverflow));
    }

    #[test]
    fn extremal_batched_matches_unbatched_and_oracle() {
        for p in small_sets(12) {
            let fast = extremal_length(&p).unwrap();
            assert_eq!(fast, unbatched::extremal_length(&p).unwrap(), "P={p}");
            let Some(l) = fast.get() else {
                assert_eq!(p.min(), p.gcd());
                continue;
            };
            let w = fw_oracle(&p, l).unwrap();
            assert!(!is_trivial(&w, &p), "P={p} L={l}");
            assert!(is_palindrome_up_to_renaming(&w), "P={p} L={l}");
            if p.gcd() == 1 {
                assert!(is_palindrome(&w), "P={p} L={l}");
            }
            for j in 1..=2 * p.min() {
                assert!(
                    is_trivial(&fw_oracle(&p, l + j).unwrap(), &p),
                    "P={p} n={}",
                    l + j
                );
            }
        }
    }

    #[test]
    fn corollary_prefix_property() {
        for p in small_sets(8) {
            let q = reduce(&p);
            for k in 0..25 {
                let big = fw_fast(&p, k + p.min()).unwrap();
                assert_eq!(fw_fast(&q, k).unwrap(), big.pref(k).unwrap(), "P={p} k={k}");
            }
        }
    }

    #[test]
    fn words_have_period_min() {
        for p in small_sets(8) {
            for n in 0..25 {
                let w = fw_fast(&p, n).unwrap();
                let m = p.min() as usize;
                for i in 0..w.len() {
                    assert_eq!(w[i], w[i % m]);
                }
            }
        }
    }
}
