use std::collections::BTreeMap;

use super::effect::{cohens_d, mean, welch_t};
use super::SampleSet;

/// One human step and its solver counterpart, both measured by one metric.
/// `None` marks an unknown value (e.g. a word without an embedding); it is
/// left out of that side's sample only.
#[derive(Clone, Debug, PartialEq)]
pub struct PairedObservation {
    pub state: String,
    pub human: Option<f64>,
    pub model: Option<f64>,
}

/// Human vs. solver statistics for one state and metric.
///
/// `cohens_d`, `t` and `p` are absent when either side has fewer than two
/// values or both sides have zero variance. `d` is human minus model.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow {
    pub state: String,
    pub metric: String,
    pub n_human: usize,
    pub n_model: usize,
    pub mean_human: Option<f64>,
    pub mean_model: Option<f64>,
    pub cohens_d: Option<f64>,
    pub t: Option<f64>,
    pub p: Option<f64>,
}

/// Groups observations by state and compares the two samples in each.
/// Rows come out sorted by state key.
pub fn bucket_and_compare(observations: &[PairedObservation], metric: &str) -> Vec<ComparisonRow> {
    let mut groups: BTreeMap<&str, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
    for obs in observations {
        let (human, model) = groups.entry(obs.state.as_str()).or_default();
        human.extend(obs.human);
        model.extend(obs.model);
    }
    groups
        .into_iter()
        .map(|(state, (human, model))| compare_samples(state, metric, human, model))
        .collect()
}

fn compare_samples(state: &str, metric: &str, human: Vec<f64>, model: Vec<f64>) -> ComparisonRow {
    let mean_or_none = |v: &[f64]| (!v.is_empty()).then(|| mean(v));
    let mut row = ComparisonRow {
        state: state.to_string(),
        metric: metric.to_string(),
        n_human: human.len(),
        n_model: model.len(),
        mean_human: mean_or_none(&human),
        mean_model: mean_or_none(&model),
        cohens_d: None,
        t: None,
        p: None,
    };
    let (Ok(h), Ok(m)) = (SampleSet::new("human", human), SampleSet::new("model", model)) else {
        return row;
    };
    if let (Ok(d), Ok(w)) = (cohens_d(&h, &m), welch_t(&h, &m)) {
        row.cohens_d = Some(d);
        row.t = Some(w.t);
        row.p = Some(w.p);
    }
    row
}
