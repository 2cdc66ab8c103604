//! Direct construction by equivalence closure over positions.
//!
//! Positions `i` and `j` of a word with periods `P` must carry the same
//! letter whenever `i ≡ j (mod m)` or their residues mod `m` have in-range
//! representatives at distance `p ∈ P`. The finest partition compatible with
//! that relation gives the word with the most letters.
//!
//! Rather than enumerating residue representatives, [`build_partition`]
//! joins `i` with `i + p` for every `p ∈ P` (which includes `m`). Chains of
//! in-range `m`-steps connect all positions of a residue class, so both
//! generator sets have the same closure. The test module checks this against
//! a literal implementation of the two-clause relation.
//!
//! Memory is `O(k)`; use [`crate::reduction`] for long words.

mod exhaustive;
mod union_find;

pub use exhaustive::{
    max_alphabet_exhaustive, max_alphabet_exhaustive_with_bound, ExhaustiveResult,
    RestrictedGrowth, DEFAULT_EXHAUSTIVE_BOUND,
};
pub use union_find::UnionFind;

use crate::error::Result;
use crate::partition::EquivalencePartition;
use crate::period::PeriodSet;
use crate::word::{to_len, LabeledWord};

pub fn build_partition(periods: &PeriodSet, k: u64) -> Result<EquivalencePartition> {
    let len = to_len(k)?;
    let mut uf = UnionFind::new(len);
    for p in periods.iter() {
        // periods >= k contribute no edges
        let Ok(p) = usize::try_from(p) else { break };
        if p >= len {
            break;
        }
        for i in 0..len - p {
            uf.union(i, i + p);
        }
    }
    Ok(EquivalencePartition::from_reps(uf.min_labels()))
}

/// The canonical maximal-alphabet word of length `n` with periods `P`.
pub fn fw_oracle(periods: &PeriodSet, n: u64) -> Result<LabeledWord> {
    Ok(build_partition(periods, n)?.into_word())
}

/// Size of the largest alphabet a length-`n` word with periods `P` can use.
pub fn class_count(periods: &PeriodSet, n: u64) -> Result<usize> {
    Ok(build_partition(periods, n)?.class_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::{alphabet, canonicalize, has_period};

    fn ps(v: &[u64]) -> PeriodSet {
        PeriodSet::new(v.iter().copied()).unwrap()
    }

    /// The relation exactly as defined over residues, closed by repeated
    /// relaxation. Quadratic and slow; only for small `k`.
    fn literal_closure(periods: &PeriodSet, k: usize) -> Vec<u64> {
        let m = periods.min() as usize;
        let related = |i: usize, j: usize| -> bool {
            if i % m == j % m {
                return true;
            }
            (0..k).any(|a| {
                a % m == i % m
                    && (0..k).any(|b| b % m == j % m && periods.contains(a.abs_diff(b) as u64))
            })
        };
        let mut label: Vec<usize> = (0..k).collect();
        loop {
            let mut changed = false;
            for i in 0..k {
                for j in 0..k {
                    if related(i, j) {
                        let lo = label[i].min(label[j]);
                        if label[i] != lo || label[j] != lo {
                            label[i] = lo;
                            label[j] = lo;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        label.into_iter().map(|l| l as u64).collect()
    }

    #[test]
    fn worked_example_partition() {
        let part = build_partition(&ps(&[5, 7]), 8).unwrap();
        assert_eq!(part.reps(), &[0, 1, 0, 3, 4, 0, 1, 0]);
        assert_eq!(
            part.classes(),
            vec![vec![0, 2, 5, 7], vec![1, 6], vec![3], vec![4]]
        );
        assert_eq!(part.class_count(), 4);
    }

    #[test]
    fn short_words_are_all_singletons() {
        let part = build_partition(&ps(&[5, 7]), 3).unwrap();
        assert_eq!(part.classes(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(fw_oracle(&ps(&[5, 7]), 3).unwrap().letters(), &[0, 1, 2]);
        for n in 0..=5 {
            assert_eq!(class_count(&ps(&[5, 7]), n).unwrap(), n as usize);
        }
    }

    #[test]
    fn single_period() {
        let part = build_partition(&ps(&[2]), 5).unwrap();
        assert_eq!(part.classes(), vec![vec![0, 2, 4], vec![1, 3]]);
    }

    #[test]
    fn collapsing_to_one_class() {
        assert_eq!(fw_oracle(&ps(&[2, 3]), 4).unwrap().letters(), &[0, 0, 0, 0]);
        assert_eq!(class_count(&ps(&[2, 3]), 4).unwrap(), 1);
        assert_eq!(class_count(&ps(&[5, 7]), 8).unwrap(), 4);
        assert!(build_partition(&ps(&[5, 7]), 0).unwrap().is_empty());
    }

    #[test]
    fn huge_periods_add_no_edges() {
        let w = fw_oracle(&ps(&[3, 1_000_000_000_007]), 7).unwrap();
        assert_eq!(w.letters(), &[0, 1, 2, 0, 1, 2, 0]);
    }

    #[test]
    fn matches_literal_relation() {
        let mut sets = Vec::new();
        for a in 1..=7u64 {
            sets.push(vec![a]);
            for b in a + 1..=7 {
                sets.push(vec![a, b]);
                for c in b + 1..=7 {
                    sets.push(vec![a, b, c]);
                }
            }
        }
        for s in &sets {
            let p = ps(s);
            for k in 0..=16 {
                let fast = build_partition(&p, k as u64).unwrap();
                assert_eq!(
                    fast.reps(),
                    literal_closure(&p, k).as_slice(),
                    "P={p} k={k}"
                );
            }
        }
    }

    #[test]
    fn oracle_word_properties() {
        for s in [&[5u64, 7][..], &[3, 5, 7], &[4, 6], &[1], &[6, 9, 10]] {
            let p = ps(s);
            for n in 0..30u64 {
                let word = fw_oracle(&p, n).unwrap();
                assert_eq!(word.len() as u64, n);
                for q in p.iter() {
                    assert!(has_period(&word, q));
                }
                assert_eq!(canonicalize(word.letters()), word);
                assert_eq!(alphabet(&word).len(), class_count(&p, n).unwrap());
                for (i, &r) in word.letters().iter().enumerate() {
                    assert!(r <= i as u64);
                    assert_eq!(word[r as usize], r);
                }
            }
        }
    }
}
