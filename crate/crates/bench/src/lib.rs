//! Shared inputs for the criterion benchmarks.

/// `(periods, length)` pairs timed by every engine.
pub const WORD_CASES: &[(&[u64], u64)] = &[
    (&[5, 7], 1_000),
    (&[5, 7], 100_000),
    (&[13, 21, 34], 100_000),
    (&[1_000, 1_001], 1_000_000),
];
