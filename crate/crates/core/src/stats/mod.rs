//! Effect sizes, significance tests and per-state comparison tables.

mod compare;
mod effect;
mod histogram;
mod report;

pub use compare::{bucket_and_compare, ComparisonRow, PairedObservation};
pub use effect::{
    cohens_d, ln_gamma, mean, regularized_incomplete_beta, student_t_cdf, two_sided_p, variance, welch_t, WelchT,
};
pub use histogram::{histogram, paired_histogram, Bin, BinSpec, PairedBin};
pub use report::{emit_report, read_comparison, StateHistogram, COMPARISON_HEADER, HISTOGRAM_HEADER};

use crate::error::{Error, Result};

/// A labelled sample of finite values.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSet {
    pub values: Vec<f64>,
    pub label: String,
    pub state_key: Option<String>,
}

impl SampleSet {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Config(format!("sample value {bad} is not finite")));
        }
        Ok(SampleSet {
            values,
            label: label.into(),
            state_key: None,
        })
    }

    pub fn with_state(mut self, key: impl Into<String>) -> Self {
        self.state_key = Some(key.into());
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
