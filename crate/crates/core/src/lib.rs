//! Words of maximal alphabet having every period in a prescribed set.
//!
//! For a set of periods `P` and a length `n` there is, up to renaming of
//! letters, exactly one word of length `n` that has all periods in `P` and
//! uses as many distinct letters as possible. This crate builds that word in
//! its canonical labeling (every letter is the least position carrying it)
//! in two independent ways:
//!
//! * [`oracle`] closes the "equal letter" relation over positions with a
//!   union-find and labels each class by its minimum. Simple, `O(n)` memory.
//! * [`reduction`] walks the Euclid-like descent `P -> {p - m : p != m} ∪ {m}`
//!   (with `m = min P`) and rebuilds the word from a short generator on the
//!   way back up. Single letters can be queried for lengths far beyond what
//!   fits in memory.
//!
//! The two are kept in lock-step by the [`selftest`] grid.
//!
//! ```
//! use fwword::{fw_fast, fw_oracle, PeriodSet};
//!
//! let periods = PeriodSet::new([5, 7]).unwrap();
//! let word = fw_fast(&periods, 8).unwrap();
//! assert_eq!(word.letters(), &[0, 1, 0, 3, 4, 0, 1, 0]);
//! assert_eq!(word, fw_oracle(&periods, 8).unwrap());
//! ```

pub mod error;
pub mod oracle;
pub mod partition;
pub mod period;
pub mod properties;
pub mod reduction;
pub mod selftest;
pub mod word;

pub use error::{Error, Result};
pub use oracle::{
    build_partition, class_count, fw_oracle, max_alphabet_exhaustive, ExhaustiveResult,
    DEFAULT_EXHAUSTIVE_BOUND,
};
pub use partition::EquivalencePartition;
pub use period::PeriodSet;
pub use properties::{
    alphabet, canonicalize, has_period, is_palindrome, is_palindrome_up_to_renaming, is_trivial,
};
pub use reduction::{
    batched_reduce, descent, extremal_length, fw_fast, letter_at, reduce, reduction_chain,
    ChainStep, Descent, ExtremalResult, ReductionChain, Termination,
};
pub use word::LabeledWord;
