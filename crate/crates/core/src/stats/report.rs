use std::path::Path;

use crate::error::{Error, Result};

use super::compare::ComparisonRow;
use super::histogram::PairedBin;

pub const COMPARISON_HEADER: [&str; 9] =
    ["state", "metric", "n_human", "n_model", "mean_human", "mean_model", "cohens_d", "t", "p"];
pub const HISTOGRAM_HEADER: [&str; 6] = ["state", "metric", "bin_lo", "bin_hi", "count_human", "count_model"];

#[derive(Clone, Debug, PartialEq)]
pub struct StateHistogram {
    pub state: String,
    pub metric: String,
    pub bins: Vec<PairedBin>,
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn parse_opt(s: &str) -> std::result::Result<Option<f64>, String> {
    if s.is_empty() {
        Ok(None)
    } else {
        s.parse().map(Some).map_err(|_| format!("bad number {s:?}"))
    }
}

/// Writes `comparison.csv` and one `histograms/<state>.csv` per state into
/// `dir`. Rows are written sorted by state then metric; histogram files
/// from earlier runs are replaced.
pub fn emit_report(rows: &[ComparisonRow], histograms: &[StateHistogram], dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut rows: Vec<&ComparisonRow> = rows.iter().collect();
    rows.sort_by(|a, b| (&a.state, &a.metric).cmp(&(&b.state, &b.metric)));

    let path = dir.join("comparison.csv");
    let mut w = csv::Writer::from_path(&path).map_err(|e| Error::csv(&path, e))?;
    w.write_record(COMPARISON_HEADER).map_err(|e| Error::csv(&path, e))?;
    for r in rows {
        w.write_record([
            r.state.clone(),
            r.metric.clone(),
            r.n_human.to_string(),
            r.n_model.to_string(),
            opt(r.mean_human),
            opt(r.mean_model),
            opt(r.cohens_d),
            opt(r.t),
            opt(r.p),
        ])
        .map_err(|e| Error::csv(&path, e))?;
    }
    w.flush().map_err(|e| Error::io(&path, e))?;

    let hist_dir = dir.join("histograms");
    if hist_dir.exists() {
        std::fs::remove_dir_all(&hist_dir).map_err(|e| Error::io(&hist_dir, e))?;
    }
    std::fs::create_dir_all(&hist_dir).map_err(|e| Error::io(&hist_dir, e))?;
    let mut sorted: Vec<&StateHistogram> = histograms.iter().collect();
    sorted.sort_by(|a, b| (&a.state, &a.metric).cmp(&(&b.state, &b.metric)));
    for group in sorted.chunk_by(|a, b| a.state == b.state) {
        let path = hist_dir.join(format!("{}.csv", group[0].state));
        let mut w = csv::Writer::from_path(&path).map_err(|e| Error::csv(&path, e))?;
        w.write_record(HISTOGRAM_HEADER).map_err(|e| Error::csv(&path, e))?;
        for h in group {
            for b in &h.bins {
                w.write_record([
                    h.state.clone(),
                    h.metric.clone(),
                    b.lo.to_string(),
                    b.hi.to_string(),
                    b.human.to_string(),
                    b.model.to_string(),
                ])
                .map_err(|e| Error::csv(&path, e))?;
            }
        }
        w.flush().map_err(|e| Error::io(&path, e))?;
    }
    Ok(())
}

/// Reads a `comparison.csv` back.
pub fn read_comparison(path: &Path) -> Result<Vec<ComparisonRow>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
    let src = path.display().to_string();
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::csv(path, e))?;
        let bad = |m: String| Error::format(&src, i + 2, m);
        if rec.len() != COMPARISON_HEADER.len() {
            return Err(bad(format!("expected {} columns", COMPARISON_HEADER.len())));
        }
        let count = |s: &str| s.parse::<usize>().map_err(|_| bad(format!("bad count {s:?}")));
        out.push(ComparisonRow {
            state: rec[0].to_string(),
            metric: rec[1].to_string(),
            n_human: count(&rec[2])?,
            n_model: count(&rec[3])?,
            mean_human: parse_opt(&rec[4]).map_err(bad)?,
            mean_model: parse_opt(&rec[5]).map_err(bad)?,
            cohens_d: parse_opt(&rec[6]).map_err(bad)?,
            t: parse_opt(&rec[7]).map_err(bad)?,
            p: parse_opt(&rec[8]).map_err(bad)?,
        });
    }
    Ok(out)
}
