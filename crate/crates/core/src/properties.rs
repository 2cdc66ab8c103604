//! Predicates on words, and the first-occurrence normal form.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use crate::period::PeriodSet;
use crate::word::LabeledWord;

/// `true` iff `w[i] == w[i + p]` wherever both positions exist.
///
/// Any `p >= |w|` is a period of `w`.
pub fn has_period(w: &LabeledWord, p: u64) -> bool {
    assert!(p >= 1, "period must be positive");
    let letters = w.letters();
    match usize::try_from(p) {
        Ok(p) if p < letters.len() => letters.iter().zip(&letters[p..]).all(|(a, b)| a == b),
        _ => true,
    }
}

/// `true` iff `gcd(P)` is a period of `w`.
///
/// A word shorter than or equal to `gcd(P)` is trivial by vacuity; this is
/// what makes the extremal length undefined when `gcd(P) == min(P)`.
pub fn is_trivial(w: &LabeledWord, periods: &PeriodSet) -> bool {
    has_period(w, periods.gcd())
}

/// Renames letters so that each one equals the position of its first
/// occurrence. Two words agree up to renaming iff their canonical forms are
/// equal.
pub fn canonicalize<T: Eq + Hash>(w: &[T]) -> LabeledWord {
    let mut first: HashMap<&T, u64> = HashMap::new();
    w.iter()
        .enumerate()
        .map(|(i, a)| *first.entry(a).or_insert(i as u64))
        .collect()
}

/// The empty word counts as a palindrome.
pub fn is_palindrome(w: &LabeledWord) -> bool {
    let letters = w.letters();
    letters.iter().eq(letters.iter().rev())
}

/// `true` iff reversing `w` gives the same word after renaming letters.
///
/// When `gcd(P) > 1` the extremal word is in general only a palindrome in
/// this sense, e.g. `0 1 2 0 1 5 0 1 2 0 1` for `{6, 9}`.
pub fn is_palindrome_up_to_renaming(w: &LabeledWord) -> bool {
    let reversed: Vec<u64> = w.letters().iter().rev().copied().collect();
    canonicalize(&reversed) == canonicalize(w.letters())
}

pub fn alphabet(w: &LabeledWord) -> BTreeSet<u64> {
    w.letters().iter().copied().collect()
}
