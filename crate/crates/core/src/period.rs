use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A non-empty set of positive periods, kept sorted and deduplicated.
///
/// The minimum and the gcd are computed once at construction, since every
/// algorithm in the crate branches on them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodSet {
    periods: Vec<u64>,
    gcd: u64,
}

impl PeriodSet {
    /// Builds a period set. Duplicates are collapsed and order is irrelevant.
    pub fn new<I: IntoIterator<Item = u64>>(values: I) -> Result<Self> {
        let mut periods: Vec<u64> = values.into_iter().collect();
        if periods.is_empty() {
            return Err(Error::EmptyPeriodSet);
        }
        if periods.contains(&0) {
            return Err(Error::InvalidPeriod("0".into()));
        }
        periods.sort_unstable();
        periods.dedup();
        Ok(Self::from_sorted(periods))
    }

    /// `periods` must be non-empty, strictly increasing and free of zeros.
    pub(crate) fn from_sorted(periods: Vec<u64>) -> Self {
        debug_assert!(!periods.is_empty());
        debug_assert!(periods.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(periods[0] > 0);
        let gcd = periods.iter().fold(0u64, |g, &p| g.gcd(&p));
        Self { periods, gcd }
    }

    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    /// The smallest period, `m`.
    pub fn min(&self) -> u64 {
        self.periods[0]
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// The second smallest period, if there is one.
    pub fn second(&self) -> Option<u64> {
        self.periods.get(1).copied()
    }

    pub fn len(&self) -> usize {
        self.periods.len()
    }

    /// Always `false`; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: u64) -> bool {
        self.periods.binary_search(&p).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.periods.iter().copied()
    }
}

impl fmt::Display for PeriodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.periods.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Parses the comma separated form used on the command line, e.g. `5,7`.
impl FromStr for PeriodSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::EmptyPeriodSet);
        }
        let values = s
            .split(',')
            .map(|tok| {
                tok.parse::<u64>()
                    .ok()
                    .filter(|&p| p > 0)
                    .ok_or_else(|| Error::InvalidPeriod(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}
