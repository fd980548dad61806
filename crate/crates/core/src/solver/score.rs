use rayon::prelude::*;

use crate::error::Result;
use crate::feedback::PATTERN_COUNT;
use crate::game::partition_counts;
use crate::lexicon::Lexicon;
use crate::word::Word;

use super::Heuristic;

/// Entropies closer than this are treated as equal when picking a guess.
pub const ENTROPY_TIE_TOLERANCE: f64 = 1e-9;

/// Entropy in bits of the feedback distribution `guess` induces on `candidates`.
pub fn entropy_of_guess(guess: &Word, candidates: &[Word]) -> Result<f64> {
    let counts = partition_counts(guess, candidates)?;
    let n = candidates.len() as f64;
    Ok(counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum())
}

/// Size of the largest feedback class `guess` leaves among `candidates`.
pub fn minimax_score(guess: &Word, candidates: &[Word]) -> Result<u32> {
    let counts = partition_counts(guess, candidates)?;
    Ok(counts.into_iter().max().unwrap_or(0))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Score {
    Entropy(f64),
    Minimax(u32),
}

impl Score {
    pub(crate) fn value(self) -> f64 {
        match self {
            Score::Entropy(e) => e,
            Score::Minimax(m) => m as f64,
        }
    }
}

/// Scores the whole guess pool against a candidate id set using the
/// precomputed pattern matrix.
pub(crate) struct PoolScorer<'a> {
    lexicon: &'a Lexicon,
    /// `xlogx[k] = k * log2(k)`
    xlogx: Vec<f64>,
}

impl<'a> PoolScorer<'a> {
    pub(crate) fn new(lexicon: &'a Lexicon) -> Self {
        let xlogx = (0..=lexicon.solutions().len())
            .map(|k| if k == 0 { 0.0 } else { k as f64 * (k as f64).log2() })
            .collect();
        PoolScorer { lexicon, xlogx }
    }

    pub(crate) fn lexicon(&self) -> &'a Lexicon {
        self.lexicon
    }

    /// One score per guess id, in guess-id (lexicographic) order.
    pub(crate) fn score_pool(&self, candidates: &[u16], heuristic: Heuristic) -> Vec<Score> {
        let n_guess = self.lexicon.guessable().len();
        (0..n_guess)
            .into_par_iter()
            .map_init(
                || [0u32; PATTERN_COUNT],
                |counts, gid| self.score_one(counts, gid, candidates, heuristic),
            )
            .collect()
    }

    pub(crate) fn score_one(
        &self,
        counts: &mut [u32; PATTERN_COUNT],
        guess_id: usize,
        candidates: &[u16],
        heuristic: Heuristic,
    ) -> Score {
        let row = self.lexicon.matrix().row(guess_id);
        for &c in candidates {
            counts[row[c as usize] as usize] += 1;
        }
        // Drain the touched classes so `counts` is all zeros again on return.
        match heuristic {
            Heuristic::Entropy => {
                let mut weighted = 0.0;
                for &c in candidates {
                    let slot = &mut counts[row[c as usize] as usize];
                    if *slot > 0 {
                        weighted += self.xlogx[*slot as usize];
                        *slot = 0;
                    }
                }
                let n = candidates.len() as f64;
                Score::Entropy(n.log2() - weighted / n)
            }
            Heuristic::Minimax => {
                let mut worst = 0;
                for &c in candidates {
                    let slot = &mut counts[row[c as usize] as usize];
                    worst = worst.max(*slot);
                    *slot = 0;
                }
                Score::Minimax(worst)
            }
        }
    }
}
