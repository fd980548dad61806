use crate::error::{Error, Result};
use crate::feedback::{compute_feedback, FeedbackPattern, PATTERN_COUNT};
use crate::lexicon::Lexicon;
use crate::word::Word;

/// Guesses made so far together with the feedback each one received.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GameHistory {
    steps: Vec<(Word, FeedbackPattern)>,
}

impl GameHistory {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a step. Fails once the history already ends in an all-green step.
    pub fn push(&mut self, guess: Word, pattern: FeedbackPattern) -> Result<()> {
        if self.is_solved() {
            return Err(Error::HistoryClosed);
        }
        self.steps.push((guess, pattern));
        Ok(())
    }

    pub fn from_steps(steps: impl IntoIterator<Item = (Word, FeedbackPattern)>) -> Result<Self> {
        let mut history = GameHistory::new();
        for (g, p) in steps {
            history.push(g, p)?;
        }
        Ok(history)
    }

    /// History produced by playing `guesses` against a known answer.
    pub fn scored(guesses: &[Word], answer: &Word) -> Result<Self> {
        GameHistory::from_steps(guesses.iter().map(|g| (*g, compute_feedback(g, answer))))
    }

    pub fn steps(&self) -> &[(Word, FeedbackPattern)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_solved(&self) -> bool {
        self.steps.last().is_some_and(|(_, p)| p.is_solved())
    }

    /// Ids of the lexicon's solutions consistent with every step.
    pub fn candidate_ids(&self, lexicon: &Lexicon) -> Vec<u16> {
        let mut ids: Vec<u16> = (0..lexicon.solutions().len() as u16).collect();
        for (guess, pattern) in &self.steps {
            match lexicon.guess_id(guess) {
                Some(gid) => {
                    let row = lexicon.matrix().row(gid);
                    ids.retain(|&s| row[s as usize] == pattern.code());
                }
                None => {
                    let sols = lexicon.solutions();
                    ids.retain(|&s| compute_feedback(guess, &sols[s as usize]) == *pattern);
                }
            }
        }
        ids
    }

    pub fn candidates(&self, lexicon: &Lexicon) -> Vec<Word> {
        let sols = lexicon.solutions();
        self.candidate_ids(lexicon)
            .into_iter()
            .map(|i| sols[i as usize])
            .collect()
    }
}

/// Candidates that would have produced `pattern` for `guess`.
pub fn filter_candidates(candidates: &[Word], guess: &Word, pattern: FeedbackPattern) -> Vec<Word> {
    candidates
        .iter()
        .filter(|c| compute_feedback(guess, c) == pattern)
        .copied()
        .collect()
}

/// Number of candidates falling into each of the 243 feedback classes.
pub fn partition_counts(guess: &Word, candidates: &[Word]) -> Result<[u32; PATTERN_COUNT]> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let mut counts = [0u32; PATTERN_COUNT];
    for c in candidates {
        counts[compute_feedback(guess, c).code() as usize] += 1;
    }
    Ok(counts)
}
