use clap::{Parser, Subcommand, ValueEnum};
use fwword::selftest::{run_grid, GridConfig};
use fwword::{descent, extremal_length, fw_fast, fw_oracle, letter_at, reduction_chain, PeriodSet};

use crate::bench::{self, DEFAULT_GUARD};
use crate::render::{render, OutputFormat};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Maximal-alphabet words with a prescribed set of periods.
#[derive(Debug, Parser)]
#[command(name = "fwword", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Fast,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical word of the given length.
    Word {
        /// Comma separated, e.g. `5,7`.
        #[arg(long)]
        periods: PeriodSet,
        #[arg(long)]
        length: u64,
        #[arg(long, value_enum, default_value = "ints")]
        format: OutputFormat,
        #[arg(long, value_enum, default_value = "fast")]
        engine: Engine,
    },
    /// Print a single letter without building the word.
    At {
        #[arg(long)]
        periods: PeriodSet,
        #[arg(long)]
        length: u64,
        #[arg(long)]
        index: u64,
    },
    /// Print the length of the longest non-trivial word, or `none`.
    Extremal {
        #[arg(long)]
        periods: PeriodSet,
    },
    /// Print the reduction chain, one line per step.
    Chain {
        #[arg(long)]
        periods: PeriodSet,
        #[arg(long)]
        length: u64,
        /// Fold runs with the same minimum into one line.
        #[arg(long)]
        batched: bool,
    },
    /// Cross-check the fast construction against the oracle on a grid.
    Selftest {
        #[arg(long, default_value_t = 12)]
        max_period: u64,
        #[arg(long, default_value_t = 40)]
        max_n: u64,
    },
    /// Time the engines.
    Bench {
        #[arg(long)]
        periods: PeriodSet,
        #[arg(long)]
        length: u64,
        #[arg(long, default_value_t = 5)]
        repetitions: u32,
        /// Position queried by the letter_at leg; defaults to the last one.
        #[arg(long)]
        index: Option<u64>,
        /// Word builds above this many positions are skipped.
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: BenchFormat,
    },
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    /// Printed with a single trailing newline when present.
    pub stdout: Option<String>,
    pub stderr: Option<String>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout: Some(stdout),
            stderr: None,
        }
    }

    fn fail(code: u8, message: impl ToString) -> Self {
        Self {
            code,
            stdout: None,
            stderr: Some(format!("error: {}", message.to_string())),
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Word {
            periods,
            length,
            format,
            engine,
        } => {
            let word = match engine {
                Engine::Fast => fw_fast(periods, *length),
                Engine::Oracle => fw_oracle(periods, *length),
            };
            match word {
                Ok(word) => match render(*format, periods, &word) {
                    Ok(s) => Outcome::ok(s),
                    Err(e) => Outcome::fail(EXIT_USAGE, e),
                },
                Err(e) => Outcome::fail(EXIT_USAGE, e),
            }
        }
        Command::At {
            periods,
            length,
            index,
        } => match letter_at(periods, *length, *index) {
            Ok(a) => Outcome::ok(a.to_string()),
            Err(e) => Outcome::fail(EXIT_USAGE, e),
        },
        Command::Extremal { periods } => match extremal_length(periods) {
            Ok(r) => Outcome::ok(r.to_string()),
            Err(e) => Outcome::fail(EXIT_USAGE, e),
        },
        Command::Chain {
            periods,
            length,
            batched,
        } => Outcome::ok(chain_text(periods, *length, *batched)),
        Command::Selftest { max_period, max_n } => selftest(*max_period, *max_n),
        Command::Bench {
            periods,
            length,
            repetitions,
            index,
            guard,
            format,
        } => {
            let report = bench::run(&bench::Params {
                periods,
                length: *length,
                index: *index,
                repetitions: *repetitions,
                guard: *guard,
            });
            Outcome::ok(match format {
                BenchFormat::Text => bench::render_text(&report),
                BenchFormat::Json => {
                    serde_json::to_string(&report).expect("plain struct serializes")
                }
            })
        }
    }
}

pub fn chain_text(periods: &PeriodSet, length: u64, batched: bool) -> String {
    let mut lines = Vec::new();
    let termination = if batched {
        let d = descent(periods, length);
        for (i, level) in d.levels.iter().enumerate() {
            lines.push(format!(
                "Q{i}={} n{i}={} steps={}",
                level.periods, level.length, level.steps
            ));
        }
        d.termination
    } else {
        let chain = reduction_chain(periods, length);
        for (i, step) in chain.steps.iter().enumerate() {
            lines.push(format!("Q{i}={} n{i}={}", step.periods, step.length));
        }
        chain.termination
    };
    lines.push(format!("termination {termination}"));
    lines.join("\n")
}

fn selftest(max_period: u64, max_len: u64) -> Outcome {
    let config = GridConfig {
        max_period,
        max_len,
        ..GridConfig::default()
    };
    match run_grid(&config) {
        Ok(Ok(report)) => Outcome::ok(format!("{report}\nok")),
        Ok(Err(counterexample)) => Outcome {
            code: EXIT_CHECK_FAILED,
            stdout: None,
            stderr: Some(format!("FAIL {counterexample}")),
        },
        Err(e) => Outcome::fail(EXIT_USAGE, e),
    }
}
