//! Pretrained word vectors and cosine-based semantic distance.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::word::Word;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DistanceConvention {
    /// `1 - cos`, in `[0, 2]`.
    #[default]
    OneMinusCosine,
    /// `-cos`, in `[-1, 1]`.
    NegativeCosine,
}

impl DistanceConvention {
    pub fn apply(self, cosine: f64) -> f64 {
        match self {
            DistanceConvention::OneMinusCosine => 1.0 - cosine,
            DistanceConvention::NegativeCosine => -cosine,
        }
    }

    pub fn range(self) -> (f64, f64) {
        match self {
            DistanceConvention::OneMinusCosine => (0.0, 2.0),
            DistanceConvention::NegativeCosine => (-1.0, 1.0),
        }
    }
}

impl FromStr for DistanceConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one-minus-cos" => Ok(DistanceConvention::OneMinusCosine),
            "neg-cos" => Ok(DistanceConvention::NegativeCosine),
            other => Err(Error::Config(format!(
                "unknown distance convention {other:?} (expected one-minus-cos or neg-cos)"
            ))),
        }
    }
}

impl fmt::Display for DistanceConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistanceConvention::OneMinusCosine => "one-minus-cos",
            DistanceConvention::NegativeCosine => "neg-cos",
        })
    }
}

/// Unit-normalised vectors for five-letter words, all of one dimension.
#[derive(Clone, Debug)]
pub struct EmbeddingTable {
    name: String,
    dim: usize,
    vectors: HashMap<Word, Vec<f64>>,
    /// Zero-norm rows dropped during loading.
    pub zero_norm_skipped: usize,
}

impl EmbeddingTable {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        EmbeddingTable {
            name: name.into(),
            dim,
            vectors: HashMap::new(),
            zero_norm_skipped: 0,
        }
    }

    /// Adds a vector, normalising it. Zero-norm vectors are refused.
    pub fn insert(&mut self, word: Word, vector: &[f64]) -> Result<bool> {
        if vector.len() != self.dim {
            return Err(Error::Config(format!(
                "vector for {word} has dimension {}, expected {}",
                vector.len(),
                self.dim
            )));
        }
        let norm = vector.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            self.zero_norm_skipped += 1;
            return Ok(false);
        }
        let unit = vector.iter().map(|x| x / norm).collect();
        self.vectors.entry(word).or_insert(unit);
        Ok(true)
    }

    /// Reads the standard text layout: `token x1 x2 ... xd` per line.
    ///
    /// Tokens that are not lowercase five-letter words, or not in `keep`
    /// when given, are skipped without parsing their floats. A leading
    /// `count dim` header line is tolerated. The first occurrence of a word
    /// wins.
    pub fn load(path: &Path, name: &str, dim: usize, keep: Option<&HashSet<Word>>) -> Result<Self> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let src = path.display().to_string();
        let mut table = EmbeddingTable::new(name, dim);
        let mut values = Vec::with_capacity(dim);
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let mut fields = line.split_ascii_whitespace();
            let Some(token) = fields.next() else { continue };
            let Ok(word) = Word::new(token) else { continue };
            if keep.is_some_and(|k| !k.contains(&word)) {
                continue;
            }
            values.clear();
            for f in fields {
                let v: f64 = f
                    .parse()
                    .map_err(|_| Error::format(&src, i + 1, format!("bad float {f:?}")))?;
                values.push(v);
            }
            if values.len() != dim {
                return Err(Error::format(
                    &src,
                    i + 1,
                    format!("{token} has {} values, expected {dim}", values.len()),
                ));
            }
            table.insert(word, &values)?;
        }
        Ok(table)
    }

    /// Vector dimension of a text embedding file, from its first vector
    /// line. A `count dim` header line is skipped.
    pub fn sniff_dim(path: &Path) -> Result<usize> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let fields = line.split_ascii_whitespace().count();
            if fields > 2 {
                return Ok(fields - 1);
            }
        }
        Err(Error::format(path.display().to_string(), 1, "no vector lines"))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.vectors.contains_key(word)
    }

    pub fn cosine(&self, a: &Word, b: &Word) -> Option<f64> {
        let va = self.vectors.get(a)?;
        let vb = self.vectors.get(b)?;
        let dot: f64 = va.iter().zip(vb).map(|(x, y)| x * y).sum();
        Some(dot.clamp(-1.0, 1.0))
    }
}

/// Semantic distance between two words, `None` if either has no vector.
pub fn embedding_distance(a: &Word, b: &Word, table: &EmbeddingTable, convention: DistanceConvention) -> Option<f64> {
    if a == b && table.contains(a) {
        return Some(convention.apply(1.0));
    }
    table.cosine(a, b).map(|c| convention.apply(c))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairwiseSummary {
    pub mean: f64,
    pub pairs: usize,
    /// Solutions with a vector.
    pub covered_words: usize,
    pub total_words: usize,
    /// `(lo, hi, count)` over the convention's range.
    pub bins: Vec<(f64, f64, usize)>,
}

/// Distance over every unordered pair of distinct solutions with vectors.
pub fn pairwise_candidate_distances(
    lexicon: &Lexicon,
    table: &EmbeddingTable,
    convention: DistanceConvention,
    bin_count: usize,
) -> PairwiseSummary {
    let covered: Vec<Word> = lexicon.solutions().iter().copied().filter(|w| table.contains(w)).collect();
    let bin_count = bin_count.max(1);
    let (lo, hi) = convention.range();
    let width = (hi - lo) / bin_count as f64;
    let per_row: Vec<(f64, Vec<usize>)> = (0..covered.len())
        .into_par_iter()
        .map(|i| {
            let mut sum = 0.0;
            let mut counts = vec![0usize; bin_count];
            for j in i + 1..covered.len() {
                let d = embedding_distance(&covered[i], &covered[j], table, convention).expect("covered");
                sum += d;
                let bin = (((d - lo) / width) as usize).min(bin_count - 1);
                counts[bin] += 1;
            }
            (sum, counts)
        })
        .collect();
    let mut total = 0.0;
    let mut counts = vec![0usize; bin_count];
    for (sum, row) in per_row {
        total += sum;
        for (c, r) in counts.iter_mut().zip(row) {
            *c += r;
        }
    }
    let n = covered.len();
    let pairs = n * n.saturating_sub(1) / 2;
    PairwiseSummary {
        mean: if pairs > 0 { total / pairs as f64 } else { f64::NAN },
        pairs,
        covered_words: n,
        total_words: lexicon.solutions().len(),
        bins: counts
            .into_iter()
            .enumerate()
            .map(|(k, c)| (lo + k as f64 * width, lo + (k + 1) as f64 * width, c))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn w(s: &str) -> Word {
        Word::new(s).unwrap()
    }

    fn table() -> EmbeddingTable {
        let mut t = EmbeddingTable::new("t", 3);
        t.insert(w("crane"), &[1.0, 0.0, 0.0]).unwrap();
        t.insert(w("crate"), &[0.0, 1.0, 0.0]).unwrap();
        t.insert(w("slate"), &[2.0, 0.0, 0.0]).unwrap();
        t.insert(w("abbey"), &[-1.0, 0.0, 0.0]).unwrap();
        t
    }

    #[test]
    fn conventions() {
        let t = table();
        let one = DistanceConvention::OneMinusCosine;
        let neg = DistanceConvention::NegativeCosine;
        assert_eq!(embedding_distance(&w("crane"), &w("crane"), &t, one), Some(0.0));
        assert_eq!(embedding_distance(&w("crane"), &w("slate"), &t, one), Some(0.0));
        assert_eq!(embedding_distance(&w("crane"), &w("crate"), &t, one), Some(1.0));
        assert_eq!(embedding_distance(&w("crane"), &w("abbey"), &t, one), Some(2.0));
        assert_eq!(embedding_distance(&w("crane"), &w("abbey"), &t, neg), Some(1.0));
        assert_eq!(embedding_distance(&w("crane"), &w("level"), &t, one), None);
        assert_eq!("neg-cos".parse::<DistanceConvention>().unwrap(), neg);
        assert!("cos".parse::<DistanceConvention>().is_err());
    }

    #[test]
    fn zero_vectors_refused() {
        let mut t = EmbeddingTable::new("t", 2);
        assert!(!t.insert(w("crane"), &[0.0, 0.0]).unwrap());
        assert_eq!(t.zero_norm_skipped, 1);
        assert!(t.insert(w("crane"), &[1.0]).is_err());
        assert!(t.is_empty());
    }

    #[test]
    fn load_text_vectors() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "5 3").unwrap();
        writeln!(f, "the 0.1 0.2 0.3").unwrap();
        writeln!(f, "crane 1 0 0").unwrap();
        writeln!(f, "Crate 0 1 0").unwrap();
        writeln!(f, "slate 0 0 0").unwrap();
        writeln!(f, "abbey 0 2 0").unwrap();
        f.flush().unwrap();
        let t = EmbeddingTable::load(f.path(), "x", 3, None).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.zero_norm_skipped, 1);
        let keep: HashSet<Word> = [w("abbey")].into_iter().collect();
        let t = EmbeddingTable::load(f.path(), "x", 3, Some(&keep)).unwrap();
        assert_eq!(t.len(), 1);
        assert!(EmbeddingTable::load(f.path(), "x", 4, None).is_err());
    }

    #[test]
    fn pairwise_small() {
        let lex = Lexicon::new(vec![w("crane"), w("crate")], vec![w("crane"), w("crate")]).unwrap();
        let s = pairwise_candidate_distances(&lex, &table(), DistanceConvention::OneMinusCosine, 4);
        assert_eq!(s.pairs, 1);
        assert_eq!(s.mean, 1.0);
        assert_eq!(s.bins.iter().map(|b| b.2).sum::<usize>(), 1);

        let mut same = EmbeddingTable::new("same", 2);
        for word in ["crane", "crate"] {
            same.insert(w(word), &[0.3, 0.4]).unwrap();
        }
        let s = pairwise_candidate_distances(&lex, &same, DistanceConvention::OneMinusCosine, 4);
        assert!(s.mean.abs() < 1e-12);
    }
}
