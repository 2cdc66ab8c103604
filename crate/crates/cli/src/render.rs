use std::fmt;

use clap::ValueEnum;
use fwword::{alphabet, is_trivial, LabeledWord, PeriodSet};
use serde::{Deserialize, Serialize};

const DENSE_DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Space separated decimal letters.
    Ints,
    /// One base-36 digit per letter; fails on letters >= 36.
    Dense,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetTooLargeForDense {
    pub letter: u64,
}

impl fmt::Display for AlphabetTooLargeForDense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlphabetTooLargeForDense: letter {} has no base-36 digit",
            self.letter
        )
    }
}

/// The `--format json` object for `word`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub periods: Vec<u64>,
    pub length: u64,
    pub letters: Vec<u64>,
    pub alphabet_size: usize,
    pub trivial: bool,
}

impl WordJson {
    pub fn new(periods: &PeriodSet, word: &LabeledWord) -> Self {
        Self {
            periods: periods.periods().to_vec(),
            length: word.len() as u64,
            letters: word.letters().to_vec(),
            alphabet_size: alphabet(word).len(),
            trivial: is_trivial(word, periods),
        }
    }
}

pub fn ints(word: &LabeledWord) -> String {
    word.letters()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn dense(word: &LabeledWord) -> Result<String, AlphabetTooLargeForDense> {
    word.letters()
        .iter()
        .map(|&a| {
            DENSE_DIGITS
                .get(a as usize)
                .map(|&d| d as char)
                .ok_or(AlphabetTooLargeForDense { letter: a })
        })
        .collect()
}

/// Renders without the trailing newline.
pub fn render(
    format: OutputFormat,
    periods: &PeriodSet,
    word: &LabeledWord,
) -> Result<String, AlphabetTooLargeForDense> {
    match format {
        OutputFormat::Ints => Ok(ints(word)),
        OutputFormat::Dense => dense(word),
        OutputFormat::Json => {
            Ok(serde_json::to_string(&WordJson::new(periods, word))
                .expect("plain struct serializes"))
        }
    }
}
