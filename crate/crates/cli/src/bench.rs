use std::hint::black_box;
use std::time::Instant;

use fwword::{extremal_length, fw_fast, fw_oracle, letter_at, PeriodSet};
use serde::Serialize;

/// Default cap on materialized word lengths, in positions.
pub const DEFAULT_GUARD: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub engine: &'static str,
    /// `None` when the leg was skipped.
    pub median_ns: Option<u128>,
    pub runs: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub periods: Vec<u64>,
    pub length: u64,
    pub index: Option<u64>,
    pub rows: Vec<Row>,
}

pub struct Params<'a> {
    pub periods: &'a PeriodSet,
    pub length: u64,
    pub index: Option<u64>,
    pub repetitions: u32,
    pub guard: u64,
}

fn time<T>(runs: u32, mut f: impl FnMut() -> T) -> Row {
    let mut samples: Vec<u128> = (0..runs.max(1))
        .map(|_| {
            let start = Instant::now();
            black_box(f());
            start.elapsed().as_nanos()
        })
        .collect();
    samples.sort_unstable();
    Row {
        engine: "",
        median_ns: Some(samples[samples.len() / 2]),
        runs: samples.len() as u32,
        skipped: None,
    }
}

fn skipped(engine: &'static str, why: &'static str) -> Row {
    Row {
        engine,
        median_ns: None,
        runs: 0,
        skipped: Some(why),
    }
}

pub fn run(params: &Params<'_>) -> Report {
    let Params {
        periods,
        length: n,
        repetitions: runs,
        guard,
        ..
    } = *params;
    let mut rows = Vec::new();

    // fw_fast still materializes the whole word, so it shares the guard
    rows.push(if n > guard {
        skipped("fast-word", "guard")
    } else {
        Row {
            engine: "fast-word",
            ..time(runs, || fw_fast(periods, n))
        }
    });
    rows.push(if n > guard {
        skipped("oracle-word", "guard")
    } else {
        Row {
            engine: "oracle-word",
            ..time(runs, || fw_oracle(periods, n))
        }
    });

    let index = params.index.or(n.checked_sub(1));
    rows.push(match index {
        Some(i) if i < n => Row {
            engine: "letter_at",
            ..time(runs, || letter_at(periods, n, black_box(i)))
        },
        _ => skipped("letter_at", "empty"),
    });
    rows.push(Row {
        engine: "extremal",
        ..time(runs, || extremal_length(black_box(periods)))
    });

    Report {
        periods: periods.periods().to_vec(),
        length: n,
        index,
        rows,
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = format!(
        "periods {:?} length {}\n{:<12} {:>14} {:>5}\n",
        report.periods, report.length, "engine", "median_ns", "runs"
    );
    for row in &report.rows {
        let median = match (row.median_ns, row.skipped) {
            (Some(ns), _) => ns.to_string(),
            (None, Some(why)) => format!("skipped ({why})"),
            (None, None) => "-".to_string(),
        };
        out.push_str(&format!(
            "{:<12} {:>14} {:>5}\n",
            row.engine, median, row.runs
        ));
    }
    out.pop();
    out
}
