//! Exhaustive cross-check of the fast construction against the oracle on a
//! grid of small inputs.

use std::fmt;

use crate::error::Result;
use crate::oracle::fw_oracle;
use crate::period::PeriodSet;
use crate::properties::{is_palindrome, is_palindrome_up_to_renaming, is_trivial};
use crate::reduction::{extremal_length, fw_fast, letter_at, reduce, unbatched};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridConfig {
    pub max_period: u64,
    pub max_len: u64,
    pub max_set_size: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            max_period: 12,
            max_len: 40,
            max_set_size: 3,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GridReport {
    /// `(P, n)` pairs visited.
    pub cases: u64,
    pub period_sets: u64,
    pub letters_checked: u64,
    pub prefix_checks: u64,
    pub singleton_checks: u64,
    pub extremal_checks: u64,
}

impl fmt::Display for GridReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cases {}", self.cases)?;
        writeln!(f, "period_sets {}", self.period_sets)?;
        writeln!(f, "letters_checked {}", self.letters_checked)?;
        writeln!(f, "prefix_checks {}", self.prefix_checks)?;
        writeln!(f, "singleton_checks {}", self.singleton_checks)?;
        write!(f, "extremal_checks {}", self.extremal_checks)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: &'static str,
    pub periods: PeriodSet,
    pub length: u64,
    pub position: Option<u64>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} failed: P={} n={}",
            self.check, self.periods, self.length
        )?;
        if let Some(i) = self.position {
            write!(f, " i={i}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Counterexample {}

/// Every subset of `1..=max_period` with between 1 and `max_size` elements,
/// in lexicographic order.
pub fn period_sets(max_period: u64, max_size: usize) -> Vec<PeriodSet> {
    fn go(start: u64, max: u64, left: usize, cur: &mut Vec<u64>, out: &mut Vec<PeriodSet>) {
        for p in start..=max {
            cur.push(p);
            out.push(PeriodSet::from_sorted(cur.clone()));
            if left > 1 {
                go(p + 1, max, left - 1, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_size > 0 {
        go(1, max_period, max_size, &mut Vec::new(), &mut out);
    }
    out
}

/// Runs every check on the grid and stops at the first mismatch.
///
/// Per `(P, n)`: fast word equals oracle word; batched and unbatched letter
/// queries equal the word at every position; the oracle word for the reduced
/// set is a prefix of the one for `P` at length `n + m`; positions
/// `n - m ..= m - 1` are singletons. Per `P` with `gcd < min`: batched and
/// unbatched extremal lengths agree, the extremal word is non-trivial and a
/// palindrome (letter for letter when `gcd = 1`, up to renaming otherwise),
/// and the next `2m` lengths are trivial.
pub fn run_grid(config: &GridConfig) -> Result<std::result::Result<GridReport, Counterexample>> {
    let mut report = GridReport::default();
    for p in period_sets(config.max_period, config.max_set_size) {
        report.period_sets += 1;
        let m = p.min();
        let fail = |check, length, position| Counterexample {
            check,
            periods: p.clone(),
            length,
            position,
        };
        let reduced = reduce(&p);
        for n in 0..=config.max_len {
            report.cases += 1;
            let oracle = fw_oracle(&p, n)?;
            let fast = fw_fast(&p, n)?;
            if let Some(i) = first_mismatch(oracle.letters(), fast.letters()) {
                return Ok(Err(fail("fast-vs-oracle", n, Some(i))));
            }
            for i in 0..n {
                let want = oracle[i as usize];
                if letter_at(&p, n, i)? != want {
                    return Ok(Err(fail("letter_at", n, Some(i))));
                }
                if unbatched::letter_at(&p, n, i)? != want {
                    return Ok(Err(fail("letter_at-unbatched", n, Some(i))));
                }
                report.letters_checked += 1;
            }

            let longer = fw_oracle(&p, n + m)?;
            let small = fw_oracle(&reduced, n)?;
            if let Some(i) = first_mismatch(small.letters(), &longer.letters()[..n as usize]) {
                return Ok(Err(fail("reduced-prefix", n, Some(i))));
            }
            report.prefix_checks += 1;

            if n > m {
                for i in n - m..m {
                    let count = oracle.letters().iter().filter(|&&a| a == i).count();
                    if oracle[i as usize] != i || count != 1 {
                        return Ok(Err(fail("singleton", n, Some(i))));
                    }
                    report.singleton_checks += 1;
                }
            }
        }

        let ext = extremal_length(&p)?;
        if ext != unbatched::extremal_length(&p)? {
            return Ok(Err(fail("extremal-batched", 0, None)));
        }
        if let Some(l) = ext.get() {
            let w = fw_fast(&p, l)?;
            if is_trivial(&w, &p) {
                return Ok(Err(fail("extremal-nontrivial", l, None)));
            }
            if !is_palindrome_up_to_renaming(&w) || (p.gcd() == 1 && !is_palindrome(&w)) {
                return Ok(Err(fail("extremal-palindrome", l, None)));
            }
            for j in 1..=2 * m {
                if !is_trivial(&fw_fast(&p, l + j)?, &p) {
                    return Ok(Err(fail("extremal-window", l + j, None)));
                }
            }
            report.extremal_checks += 1;
        }
    }
    Ok(Ok(report))
}

fn first_mismatch(a: &[u64], b: &[u64]) -> Option<u64> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()) as u64);
    }
    a.iter().zip(b).position(|(x, y)| x != y).map(|i| i as u64)
}
