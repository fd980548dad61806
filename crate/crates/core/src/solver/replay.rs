use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::feedback::{bucket_key, compute_feedback, StateBucket};
use crate::game::GameHistory;
use crate::ingest::GameRecord;
use crate::lexicon::Lexicon;
use crate::word::Word;

use super::policy::choose;
use super::score::PoolScorer;
use super::SolverConfig;

/// Solver counterparts for one human game.
///
/// For each human step `i >= 1` the solver sees the human's guesses
/// `0..i` and their feedback, and proposes its own guess `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayResult {
    pub game_id: String,
    pub human_guesses: Vec<Word>,
    /// One shorter than `human_guesses`.
    pub near_optimal_guesses: Vec<Word>,
    /// Bucket of the feedback on the human guess preceding each step.
    pub per_step_state: Vec<StateBucket>,
}

/// Replays a single record. See [`Replayer`] for batches.
pub fn replay_conditioned(record: &GameRecord, lexicon: &Lexicon, config: &SolverConfig) -> Result<ReplayResult> {
    Replayer::new(lexicon, *config).replay(record)
}

/// Replays records against a shared lexicon, memoising the solver's choice
/// per candidate set. Human games overlap heavily after the first guess, so
/// the cache turns most steps into a lookup.
pub struct Replayer<'a> {
    scorer: PoolScorer<'a>,
    config: SolverConfig,
    cache: Mutex<HashMap<Vec<u16>, usize>>,
}

impl<'a> Replayer<'a> {
    pub fn new(lexicon: &'a Lexicon, config: SolverConfig) -> Self {
        Replayer {
            scorer: PoolScorer::new(lexicon),
            config,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn replay(&self, record: &GameRecord) -> Result<ReplayResult> {
        let lexicon = self.scorer.lexicon();
        if let Some(bad) = record.guesses.iter().find(|g| !lexicon.is_guessable(g)) {
            return Err(Error::IllegalGuess(*bad));
        }
        let k = record.guesses.len();
        let mut history = GameHistory::new();
        let mut near = Vec::with_capacity(k.saturating_sub(1));
        let mut states = Vec::with_capacity(k.saturating_sub(1));
        for i in 1..k {
            let prev = record.guesses[i - 1];
            let pattern = compute_feedback(&prev, &record.answer);
            history.push(prev, pattern)?;
            let candidates = history.candidate_ids(lexicon);
            debug_assert!(lexicon
                .solution_id(&record.answer)
                .is_none_or(|a| candidates.binary_search(&(a as u16)).is_ok()));
            let gid = self.choose_cached(candidates)?;
            near.push(lexicon.guessable()[gid]);
            states.push(bucket_key(pattern));
        }
        Ok(ReplayResult {
            game_id: record.game_id.clone(),
            human_guesses: record.guesses.clone(),
            near_optimal_guesses: near,
            per_step_state: states,
        })
    }

    /// Replays every record in parallel; output order follows input order.
    pub fn replay_all(&self, records: &[GameRecord]) -> Vec<Result<ReplayResult>> {
        records.par_iter().map(|r| self.replay(r)).collect()
    }

    fn choose_cached(&self, candidates: Vec<u16>) -> Result<usize> {
        if let Some(&gid) = self.cache.lock().expect("cache lock").get(&candidates) {
            return Ok(gid);
        }
        let gid = choose(&self.scorer, &candidates, &self.config)?;
        self.cache.lock().expect("cache lock").insert(candidates, gid);
        Ok(gid)
    }
}
