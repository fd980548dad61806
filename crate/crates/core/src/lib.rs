//! Wordle solver benchmarks and human-vs-solver gameplay analysis.
//!
//! The crate is organised bottom-up:
//!
//! * [`word`], [`feedback`], [`lexicon`] and [`game`] hold the game mechanics:
//!   words, tile feedback, word lists with a precomputed pattern matrix, and
//!   candidate filtering.
//! * [`solver`] implements depth-1 entropy and minimax guess selection,
//!   exhaustive policy evaluation and replay of human transcripts.
//! * [`ingest`] turns newline-delimited JSON dumps of shared games into
//!   cleaned [`ingest::GameRecord`]s.
//! * [`metrics`] and [`stats`] compare consecutive guesses and summarise
//!   human vs. solver differences per feedback state.
//! * [`pipeline`] glues the stages together for the `wordlab` binary.

pub mod error;
pub mod feedback;
pub mod game;
pub mod ingest;
pub mod lexicon;
pub mod metrics;
pub mod pipeline;
pub mod solver;
pub mod stats;
pub mod word;

pub use error::{Error, Result};
pub use feedback::{bucket_key, compute_feedback, FeedbackPattern, StateBucket, Tile};
pub use game::{filter_candidates, partition_counts, GameHistory};
pub use lexicon::Lexicon;
pub use solver::{Heuristic, SolverConfig};
pub use word::Word;
