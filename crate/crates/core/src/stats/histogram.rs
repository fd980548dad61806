/// How to bin a sample.
#[derive(Clone, Debug, PartialEq)]
pub enum BinSpec {
    /// Width-one bins `[k, k + 1)` from `floor(min)` to `floor(max)`; for
    /// integer-valued metrics.
    Unit,
    /// `n` equal-width bins over `[min, max]`.
    Count(usize),
    /// Explicit ascending edges; values outside are clamped to the end bins.
    Edges(Vec<f64>),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairedBin {
    pub lo: f64,
    pub hi: f64,
    pub human: usize,
    pub model: usize,
}

fn edges_for(values: &[f64], spec: &BinSpec) -> Vec<f64> {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    match spec {
        BinSpec::Unit => {
            let (a, b) = (lo.floor() as i64, hi.floor() as i64);
            (a..=b + 1).map(|k| k as f64).collect()
        }
        BinSpec::Count(n) => {
            let n = (*n).max(1);
            if hi == lo {
                return vec![lo, lo + 1.0];
            }
            let width = (hi - lo) / n as f64;
            (0..=n).map(|k| if k == n { hi } else { lo + k as f64 * width }).collect()
        }
        BinSpec::Edges(e) => e.clone(),
    }
}

fn bin_index(edges: &[f64], v: f64) -> usize {
    let bins = edges.len() - 1;
    // first edge strictly above v, minus one; the last bin is closed
    let above = edges.partition_point(|&e| e <= v);
    above.saturating_sub(1).min(bins - 1)
}

fn count_into(edges: &[f64], values: &[f64]) -> Vec<usize> {
    let mut counts = vec![0; edges.len() - 1];
    for &v in values {
        counts[bin_index(edges, v)] += 1;
    }
    counts
}

/// Bins a sample. An empty sample yields no bins.
pub fn histogram(values: &[f64], spec: &BinSpec) -> Vec<Bin> {
    if values.is_empty() {
        return Vec::new();
    }
    let edges = edges_for(values, spec);
    if edges.len() < 2 {
        return Vec::new();
    }
    count_into(&edges, values)
        .into_iter()
        .zip(edges.windows(2))
        .map(|(count, e)| Bin {
            lo: e[0],
            hi: e[1],
            count,
        })
        .collect()
}

/// Bins two samples on shared edges covering both.
pub fn paired_histogram(human: &[f64], model: &[f64], spec: &BinSpec) -> Vec<PairedBin> {
    let all: Vec<f64> = human.iter().chain(model).copied().collect();
    if all.is_empty() {
        return Vec::new();
    }
    let edges = edges_for(&all, spec);
    if edges.len() < 2 {
        return Vec::new();
    }
    let h = count_into(&edges, human);
    let m = count_into(&edges, model);
    edges
        .windows(2)
        .zip(h.into_iter().zip(m))
        .map(|(e, (human, model))| PairedBin {
            lo: e[0],
            hi: e[1],
            human,
            model,
        })
        .collect()
}
