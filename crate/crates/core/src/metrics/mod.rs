//! Pairwise comparisons between consecutive guesses.

mod edit;
mod embedding;
mod phonetic;
mod syllable;

pub use edit::{char_difference, levenshtein, levenshtein_bytes, shared_chars};
pub use embedding::{
    embedding_distance, pairwise_candidate_distances, DistanceConvention, EmbeddingTable, PairwiseSummary,
};
pub use phonetic::{is_perfect_rhyme, rhyme_tail, PhoneticLexicon, Rhyme};
pub use syllable::{shared_syllables, syllabify, SonorityHierarchy};

use crate::word::Word;

pub const LEVENSHTEIN: &str = "levenshtein";
pub const CHAR_DIFFERENCE: &str = "char_difference";
pub const SHARED_CHARS: &str = "shared_chars";
pub const SHARED_SYLLABLES: &str = "shared_syllables";
pub const RHYME: &str = "rhyme";
pub const SEMANTIC_PREFIX: &str = "semantic_distance:";

/// All metrics for one ordered pair of guesses.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricVector {
    pub levenshtein: u32,
    pub char_difference: u32,
    pub shared_chars: u32,
    pub shared_syllables: u32,
    pub rhymes: Rhyme,
    /// One entry per embedding table, in suite order.
    pub semantic_distance: Vec<(String, Option<f64>)>,
}

impl MetricVector {
    /// `(metric name, value)` with `None` for unknown values.
    pub fn values(&self) -> Vec<(String, Option<f64>)> {
        let mut out = vec![
            (LEVENSHTEIN.to_string(), Some(self.levenshtein as f64)),
            (CHAR_DIFFERENCE.to_string(), Some(self.char_difference as f64)),
            (SHARED_CHARS.to_string(), Some(self.shared_chars as f64)),
            (SHARED_SYLLABLES.to_string(), Some(self.shared_syllables as f64)),
            (RHYME.to_string(), self.rhymes.as_value()),
        ];
        out.extend(
            self.semantic_distance
                .iter()
                .map(|(name, d)| (format!("{SEMANTIC_PREFIX}{name}"), *d)),
        );
        out
    }
}

/// Immutable tables needed to compute a [`MetricVector`].
#[derive(Clone, Debug, Default)]
pub struct MetricSuite {
    pub hierarchy: SonorityHierarchy,
    pub phonetic: PhoneticLexicon,
    pub embeddings: Vec<EmbeddingTable>,
    pub convention: DistanceConvention,
}

impl MetricSuite {
    pub fn new(phonetic: PhoneticLexicon, embeddings: Vec<EmbeddingTable>, convention: DistanceConvention) -> Self {
        MetricSuite {
            hierarchy: SonorityHierarchy::default(),
            phonetic,
            embeddings,
            convention,
        }
    }

    pub fn metric_names(&self) -> Vec<String> {
        let mut names: Vec<String> = [LEVENSHTEIN, CHAR_DIFFERENCE, SHARED_CHARS, SHARED_SYLLABLES, RHYME]
            .iter()
            .map(|s| s.to_string())
            .collect();
        names.extend(self.embeddings.iter().map(|t| format!("{SEMANTIC_PREFIX}{}", t.name())));
        names
    }

    pub fn compare(&self, a: &Word, b: &Word) -> MetricVector {
        MetricVector {
            levenshtein: levenshtein(a, b),
            char_difference: char_difference(a, b),
            shared_chars: shared_chars(a, b),
            shared_syllables: shared_syllables(a, b, &self.hierarchy),
            rhymes: is_perfect_rhyme(a.as_str(), b.as_str(), &self.phonetic),
            semantic_distance: self
                .embeddings
                .iter()
                .map(|t| (t.name().to_string(), embedding_distance(a, b, t, self.convention)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_for_stale_slums() {
        let suite = MetricSuite::new(PhoneticLexicon::bundled(), vec![], DistanceConvention::default());
        let a = Word::new("stale").unwrap();
        let b = Word::new("slums").unwrap();
        let m = suite.compare(&a, &b);
        assert_eq!(m.levenshtein, 4);
        assert_eq!(m.char_difference, 4);
        assert_eq!(m.shared_chars, 2);
        assert_eq!(m.rhymes, Rhyme::No);
        assert_eq!(m.values().len(), 5);
        assert_eq!(suite.metric_names().len(), 5);
    }
}
