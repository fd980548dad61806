//! File formats and glue between the ingest, replay and analysis stages.

use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metrics::{MetricSuite, SEMANTIC_PREFIX};
use crate::solver::{PolicySummary, ReplayResult};
use crate::stats::{
    bucket_and_compare, emit_report, paired_histogram, BinSpec, ComparisonRow, PairedObservation, StateHistogram,
};
use crate::word::Word;

pub const REPLAY_HEADER: [&str; 6] =
    ["game_id", "step", "state_key", "human_guess", "human_prev_guess", "near_optimal_guess"];
pub const METRICS_HEADER: [&str; 6] = ["game_id", "step", "state_key", "metric", "human_value", "model_value"];
pub const BENCH_HEADER: [&str; 2] = ["guess_count", "games"];

/// Bins used for real-valued (semantic) metrics.
const SEMANTIC_BINS: usize = 20;

/// One human guess next to the solver's guess from the same position.
/// `step` is the 1-based index of `human_guess` within its game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayRow {
    pub game_id: String,
    pub step: usize,
    pub state_key: String,
    pub human_guess: Word,
    pub human_prev_guess: Word,
    pub near_optimal_guess: Word,
}

pub fn replay_rows(results: &[ReplayResult]) -> Vec<ReplayRow> {
    let mut rows = Vec::new();
    for r in results {
        for (i, (near, state)) in r.near_optimal_guesses.iter().zip(&r.per_step_state).enumerate() {
            rows.push(ReplayRow {
                game_id: r.game_id.clone(),
                step: i + 2,
                state_key: state.key(),
                human_guess: r.human_guesses[i + 1],
                human_prev_guess: r.human_guesses[i],
                near_optimal_guess: *near,
            });
        }
    }
    rows
}

pub fn write_replay(path: &Path, rows: &[ReplayRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(REPLAY_HEADER).map_err(|e| Error::csv(path, e))?;
    for r in rows {
        w.write_record([
            r.game_id.as_str(),
            &r.step.to_string(),
            &r.state_key,
            r.human_guess.as_str(),
            r.human_prev_guess.as_str(),
            r.near_optimal_guess.as_str(),
        ])
        .map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn read_replay(path: &Path) -> Result<Vec<ReplayRow>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
    let src = path.display().to_string();
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::csv(path, e))?;
        let bad = |m: String| Error::format(&src, i + 2, m);
        if rec.len() != REPLAY_HEADER.len() {
            return Err(bad(format!("expected {} columns", REPLAY_HEADER.len())));
        }
        let word = |s: &str| Word::new(s).map_err(|e| bad(e.to_string()));
        out.push(ReplayRow {
            game_id: rec[0].to_string(),
            step: rec[1].parse().map_err(|_| bad(format!("bad step {:?}", &rec[1])))?,
            state_key: rec[2].to_string(),
            human_guess: word(&rec[3])?,
            human_prev_guess: word(&rec[4])?,
            near_optimal_guess: word(&rec[5])?,
        });
    }
    Ok(out)
}

/// One metric evaluated on (prev, human) and on (prev, solver).
#[derive(Clone, Debug, PartialEq)]
pub struct MetricRow {
    pub game_id: String,
    pub step: usize,
    pub state_key: String,
    pub metric: String,
    pub human: Option<f64>,
    pub model: Option<f64>,
}

/// Evaluates every metric of `suite` on each replay row. Output is grouped
/// by row, metrics in suite order.
pub fn compute_metrics(rows: &[ReplayRow], suite: &MetricSuite) -> Vec<MetricRow> {
    rows.par_iter()
        .map(|r| {
            let human = suite.compare(&r.human_prev_guess, &r.human_guess).values();
            let model = suite.compare(&r.human_prev_guess, &r.near_optimal_guess).values();
            human
                .into_iter()
                .zip(model)
                .map(|((metric, h), (_, m))| MetricRow {
                    game_id: r.game_id.clone(),
                    step: r.step,
                    state_key: r.state_key.clone(),
                    metric,
                    human: h,
                    model: m,
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn fmt_value(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_metrics(path: &Path, rows: &[MetricRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(METRICS_HEADER).map_err(|e| Error::csv(path, e))?;
    for r in rows {
        w.write_record([
            r.game_id.as_str(),
            &r.step.to_string(),
            &r.state_key,
            &r.metric,
            &fmt_value(r.human),
            &fmt_value(r.model),
        ])
        .map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn read_metrics(path: &Path) -> Result<Vec<MetricRow>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
    let src = path.display().to_string();
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::csv(path, e))?;
        let bad = |m: String| Error::format(&src, i + 2, m);
        if rec.len() != METRICS_HEADER.len() {
            return Err(bad(format!("expected {} columns", METRICS_HEADER.len())));
        }
        let value = |s: &str| -> Result<Option<f64>> {
            if s.is_empty() {
                return Ok(None);
            }
            s.parse().map(Some).map_err(|_| bad(format!("bad value {s:?}")))
        };
        out.push(MetricRow {
            game_id: rec[0].to_string(),
            step: rec[1].parse().map_err(|_| bad(format!("bad step {:?}", &rec[1])))?,
            state_key: rec[2].to_string(),
            metric: rec[3].to_string(),
            human: value(&rec[4])?,
            model: value(&rec[5])?,
        });
    }
    Ok(out)
}

fn bin_spec(metric: &str) -> BinSpec {
    if metric.starts_with(SEMANTIC_PREFIX) {
        BinSpec::Count(SEMANTIC_BINS)
    } else {
        BinSpec::Unit
    }
}

/// Which values play the two roles in a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// Human against solver.
    HumanVsModel,
    /// Solver against itself; every effect size must come out zero.
    ModelVsModel,
}

/// Per-state comparison rows and histograms for every metric in `rows`.
/// Output is sorted by state, then metric.
pub fn build_report(rows: &[MetricRow], pairing: Pairing) -> (Vec<ComparisonRow>, Vec<StateHistogram>) {
    let mut metrics: Vec<&str> = rows.iter().map(|r| r.metric.as_str()).collect();
    metrics.sort_unstable();
    metrics.dedup();

    let mut table = Vec::new();
    let mut histograms = Vec::new();
    for metric in metrics {
        let obs: Vec<PairedObservation> = rows
            .iter()
            .filter(|r| r.metric == metric)
            .map(|r| PairedObservation {
                state: r.state_key.clone(),
                human: match pairing {
                    Pairing::HumanVsModel => r.human,
                    Pairing::ModelVsModel => r.model,
                },
                model: r.model,
            })
            .collect();
        let compared = bucket_and_compare(&obs, metric);
        let spec = bin_spec(metric);
        for row in &compared {
            let in_state = obs.iter().filter(|o| o.state == row.state);
            let (h, m): (Vec<_>, Vec<_>) = in_state.map(|o| (o.human, o.model)).unzip();
            let h: Vec<f64> = h.into_iter().flatten().collect();
            let m: Vec<f64> = m.into_iter().flatten().collect();
            histograms.push(StateHistogram {
                state: row.state.clone(),
                metric: metric.to_string(),
                bins: paired_histogram(&h, &m, &spec),
            });
        }
        table.extend(compared);
    }
    table.sort_by(|a, b| (&a.state, &a.metric).cmp(&(&b.state, &b.metric)));
    histograms.sort_by(|a, b| (&a.state, &a.metric).cmp(&(&b.state, &b.metric)));
    (table, histograms)
}

/// Writes `report/` (human vs solver) and `control/` (solver vs itself)
/// under `dir`.
pub fn emit_analysis(rows: &[MetricRow], dir: &Path) -> Result<Vec<ComparisonRow>> {
    let (table, hist) = build_report(rows, Pairing::HumanVsModel);
    emit_report(&table, &hist, &dir.join("report"))?;
    let (control, control_hist) = build_report(rows, Pairing::ModelVsModel);
    emit_report(&control, &control_hist, &dir.join("control"))?;
    Ok(table)
}

pub fn write_bench(path: &Path, summary: &PolicySummary) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(BENCH_HEADER).map_err(|e| Error::csv(path, e))?;
    for (count, games) in &summary.histogram {
        w.write_record([count.to_string(), games.to_string()])
            .map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn bench_summary_line(summary: &PolicySummary) -> String {
    format!(
        "heuristic={} opener={} games={} average={:.4} max={} losses={}",
        summary.heuristic, summary.opener, summary.games, summary.average_guesses, summary.max_guesses, summary.losses
    )
}
