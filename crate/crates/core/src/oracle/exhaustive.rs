use crate::error::{Error, Result};
use crate::period::PeriodSet;
use crate::properties::has_period;
use crate::word::LabeledWord;

/// Largest length accepted by [`max_alphabet_exhaustive`]; `B(9) = 21147`
/// candidate words.
pub const DEFAULT_EXHAUSTIVE_BOUND: u64 = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveResult {
    pub max_alphabet: usize,
    /// All words attaining `max_alphabet`, canonically labeled, in
    /// lexicographic order.
    pub maximizers: Vec<LabeledWord>,
}

/// Brute-force maximal alphabet over every word of length `n` having all
/// periods in `P`.
pub fn max_alphabet_exhaustive(periods: &PeriodSet, n: u64) -> Result<ExhaustiveResult> {
    max_alphabet_exhaustive_with_bound(periods, n, DEFAULT_EXHAUSTIVE_BOUND)
}

pub fn max_alphabet_exhaustive_with_bound(
    periods: &PeriodSet,
    n: u64,
    bound: u64,
) -> Result<ExhaustiveResult> {
    if n > bound {
        return Err(Error::TooLargeForExhaustive { n, bound });
    }
    let mut best = ExhaustiveResult {
        max_alphabet: 0,
        maximizers: Vec::new(),
    };
    for word in RestrictedGrowth::new(n as usize) {
        let word = LabeledWord::new(word);
        if !periods.iter().all(|p| has_period(&word, p)) {
            continue;
        }
        let size = word.letters().iter().max().map_or(0, |&a| a as usize + 1);
        if size > best.max_alphabet || best.maximizers.is_empty() {
            best.max_alphabet = size;
            best.maximizers.clear();
        }
        if size == best.max_alphabet {
            best.maximizers.push(word);
        }
    }
    // restricted growth strings carry labels 0,1,2,...; rename to
    // first-occurrence positions
    for w in &mut best.maximizers {
        *w = crate::properties::canonicalize(w.letters());
    }
    Ok(best)
}

/// Iterates over all set partitions of `0..n` as restricted growth strings
/// (`a[0] = 0`, `a[i] <= 1 + max(a[..i])`), in lexicographic order.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    current: Option<Vec<u64>>,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        Self {
            current: Some(vec![0; n]),
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.take()?;
        let mut a = out.clone();
        let mut prefix_max = Vec::with_capacity(a.len());
        let mut mx = 0;
        for &x in &a {
            prefix_max.push(mx);
            mx = mx.max(x);
        }
        for i in (1..a.len()).rev() {
            if a[i] <= prefix_max[i] {
                a[i] += 1;
                a[i + 1..].fill(0);
                self.current = Some(a);
                break;
            }
        }
        Some(out)
    }
}
