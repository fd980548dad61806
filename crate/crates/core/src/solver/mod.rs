//! Depth-1 heuristic guess selection.
//!
//! Both heuristics score every word in the guessable pool against the
//! current candidate set:
//!
//! * **entropy** maximises the Shannon entropy (in bits) of the feedback
//!   distribution the guess induces over the candidates;
//! * **minimax** minimises the size of the largest feedback class.
//!
//! Ties (entropy within `1e-9`, equal minimax score) go to guesses that are
//! themselves candidates, then to the lexicographically smallest word.

mod policy;
mod replay;
mod score;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::word::Word;

pub use policy::{best_guess, evaluate_policy, play_game, rank_guesses, PolicySummary, RankedGuess, MAX_STEPS};
pub use replay::{replay_conditioned, ReplayResult, Replayer};
pub use score::{entropy_of_guess, minimax_score, ENTROPY_TIE_TOLERANCE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Heuristic {
    Entropy,
    Minimax,
}

impl Heuristic {
    pub fn name(self) -> &'static str {
        match self {
            Heuristic::Entropy => "entropy",
            Heuristic::Minimax => "minimax",
        }
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Heuristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "entropy" => Ok(Heuristic::Entropy),
            "minimax" => Ok(Heuristic::Minimax),
            other => Err(Error::Config(format!("unknown heuristic {other:?} (expected entropy or minimax)"))),
        }
    }
}

/// Tie-break rule among equally scored guesses. Only one rule exists.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    PreferCandidateThenLex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub heuristic: Heuristic,
    pub opener: Word,
    pub tie_break: TieBreak,
    /// With at most two candidates left, guess the smallest one directly.
    pub endgame_shortcut: bool,
}

impl SolverConfig {
    pub fn new(heuristic: Heuristic, opener: Word) -> Self {
        SolverConfig {
            heuristic,
            opener,
            tie_break: TieBreak::PreferCandidateThenLex,
            endgame_shortcut: true,
        }
    }

    pub fn validate(&self, lexicon: &Lexicon) -> Result<()> {
        if lexicon.is_guessable(&self.opener) {
            Ok(())
        } else {
            Err(Error::IllegalGuess(self.opener))
        }
    }
}
