use std::ops::Index;

use crate::error::{Error, Result};

/// A finite word over the non-negative integers.
///
/// Letters are plain integers; the canonical labeling used throughout the
/// crate names each letter after the first position where it occurs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LabeledWord {
    letters: Vec<u64>,
}

impl LabeledWord {
    pub fn new(letters: Vec<u64>) -> Self {
        Self { letters }
    }

    /// The word `0 1 2 ... (n - 1)`.
    pub fn identity(n: u64) -> Result<Self> {
        to_len(n)?;
        Ok((0..n).collect())
    }

    pub fn letters(&self) -> &[u64] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u64> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.letters.get(i).copied()
    }

    /// The prefix of length `k`.
    pub fn pref(&self, k: u64) -> Result<Self> {
        match usize::try_from(k) {
            Ok(k) if k <= self.letters.len() => Ok(Self::new(self.letters[..k].to_vec())),
            _ => Err(Error::OutOfRange {
                index: k,
                len: self.letters.len() as u64,
            }),
        }
    }

    /// The length-`n` prefix of `self` repeated forever.
    pub fn extend_periodically(&self, n: u64) -> Result<Self> {
        let n = to_len(n)?;
        if n == 0 {
            return Ok(Self::default());
        }
        if self.letters.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        let letters = self.letters.iter().copied().cycle().take(n).collect();
        Ok(Self::new(letters))
    }
}

pub(crate) fn to_len(n: u64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::ArithmeticOverflow)
}

impl From<Vec<u64>> for LabeledWord {
    fn from(letters: Vec<u64>) -> Self {
        Self::new(letters)
    }
}

impl FromIterator<u64> for LabeledWord {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl Index<usize> for LabeledWord {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.letters[i]
    }
}

impl AsRef<[u64]> for LabeledWord {
    fn as_ref(&self) -> &[u64] {
        &self.letters
    }
}
