//! Word lists and the precomputed guess x solution pattern matrix.

use std::collections::{HashMap, HashSet};
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::feedback::{compute_feedback, FeedbackPattern};
use crate::word::Word;

const BUNDLED_GUESSABLE: &str = include_str!("../data/guessable.txt");
const BUNDLED_SOLUTIONS: &str = include_str!("../data/solutions.txt");

/// Parses a word list: one lowercase five-letter word per line.
///
/// Blank lines are ignored; anything else that is not a valid word is
/// reported with its 1-based line number.
pub fn parse_word_list(text: &str, source_name: &str) -> Result<Vec<Word>> {
    let mut words = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let word = Word::new(line).map_err(|e| Error::format(source_name, i + 1, e.to_string()))?;
        words.push(word);
    }
    Ok(words)
}

pub fn load_word_list(path: &Path) -> Result<Vec<Word>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_word_list(&text, &path.display().to_string())
}

/// Pattern codes for every (guess, solution) pair, one byte each, row-major
/// by guess.
#[derive(Debug, Clone)]
pub struct PatternMatrix {
    n_solutions: usize,
    codes: Vec<u8>,
}

impl PatternMatrix {
    fn build(guessable: &[Word], solutions: &[Word]) -> Self {
        let n = solutions.len();
        let mut codes = vec![0u8; guessable.len() * n];
        codes
            .par_chunks_mut(n)
            .zip(guessable.par_iter())
            .for_each(|(row, guess)| {
                for (slot, answer) in row.iter_mut().zip(solutions) {
                    *slot = compute_feedback(guess, answer).code();
                }
            });
        PatternMatrix { n_solutions: n, codes }
    }

    #[inline]
    pub fn row(&self, guess_id: usize) -> &[u8] {
        let start = guess_id * self.n_solutions;
        &self.codes[start..start + self.n_solutions]
    }

    pub fn size_bytes(&self) -> usize {
        self.codes.len()
    }
}

/// Legal guesses plus the candidate answers, both sorted and duplicate-free.
///
/// Solutions must be a subset of the guessable words. The pattern matrix is
/// built once at construction; the lexicon is immutable afterwards.
#[derive(Debug, Clone)]
pub struct Lexicon {
    guessable: Vec<Word>,
    solutions: Vec<Word>,
    guess_ids: HashMap<Word, usize>,
    solution_ids: HashMap<Word, usize>,
    /// For each guess id, its solution id when the guess is also a solution.
    guess_solution: Vec<Option<u32>>,
    matrix: PatternMatrix,
}

impl Lexicon {
    pub fn new(mut guessable: Vec<Word>, mut solutions: Vec<Word>) -> Result<Self> {
        if guessable.is_empty() {
            return Err(Error::Lexicon("guessable list is empty".into()));
        }
        if solutions.is_empty() {
            return Err(Error::Lexicon("solution list is empty".into()));
        }
        check_unique(&guessable, "guessable")?;
        check_unique(&solutions, "solution")?;
        guessable.sort_unstable();
        solutions.sort_unstable();
        if solutions.len() > u16::MAX as usize {
            return Err(Error::Lexicon(format!("too many solutions ({})", solutions.len())));
        }

        let guess_ids: HashMap<Word, usize> = guessable.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        if let Some(missing) = solutions.iter().find(|w| !guess_ids.contains_key(w)) {
            return Err(Error::Lexicon(format!("solution {missing} is not in the guessable list")));
        }
        let solution_ids: HashMap<Word, usize> = solutions.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let guess_solution = guessable
            .iter()
            .map(|w| solution_ids.get(w).map(|&i| i as u32))
            .collect();
        let matrix = PatternMatrix::build(&guessable, &solutions);
        Ok(Lexicon {
            guessable,
            solutions,
            guess_ids,
            solution_ids,
            guess_solution,
            matrix,
        })
    }

    pub fn from_files(guessable: &Path, solutions: &Path) -> Result<Self> {
        Lexicon::new(load_word_list(guessable)?, load_word_list(solutions)?)
    }

    /// The standard public lists: 12,972 legal guesses and 2,309 answers.
    pub fn bundled() -> Self {
        let guessable = parse_word_list(BUNDLED_GUESSABLE, "guessable.txt").expect("bundled guess list parses");
        let solutions = parse_word_list(BUNDLED_SOLUTIONS, "solutions.txt").expect("bundled solution list parses");
        Lexicon::new(guessable, solutions).expect("bundled lexicon is valid")
    }

    pub fn guessable(&self) -> &[Word] {
        &self.guessable
    }

    pub fn solutions(&self) -> &[Word] {
        &self.solutions
    }

    pub fn guess_id(&self, word: &Word) -> Option<usize> {
        self.guess_ids.get(word).copied()
    }

    pub fn solution_id(&self, word: &Word) -> Option<usize> {
        self.solution_ids.get(word).copied()
    }

    pub fn is_guessable(&self, word: &Word) -> bool {
        self.guess_ids.contains_key(word)
    }

    pub fn is_solution(&self, word: &Word) -> bool {
        self.solution_ids.contains_key(word)
    }

    /// Solution id of the guess with this id, if the guess is also an answer.
    pub(crate) fn guess_as_solution(&self, guess_id: usize) -> Option<usize> {
        self.guess_solution[guess_id].map(|i| i as usize)
    }

    pub fn matrix(&self) -> &PatternMatrix {
        &self.matrix
    }

    #[inline]
    pub fn pattern(&self, guess_id: usize, solution_id: usize) -> FeedbackPattern {
        FeedbackPattern::from_code_unchecked(self.matrix.row(guess_id)[solution_id])
    }
}

fn check_unique(words: &[Word], what: &str) -> Result<()> {
    let mut seen = HashSet::with_capacity(words.len());
    for w in words {
        if !seen.insert(w) {
            return Err(Error::Lexicon(format!("duplicate {what} word {w}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| Word::new(s).unwrap()).collect()
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_word_list("crane\nslate\nSLUMS\n", "list.txt").unwrap_err();
        match err {
            Error::Format { line, source_name, .. } => {
                assert_eq!(line, 3);
                assert_eq!(source_name, "list.txt");
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_word_list("crane\ncran\n", "x").is_err());
    }

    #[test]
    fn parse_skips_blank_lines_and_crlf() {
        let list = parse_word_list("crane\r\n\nslate\r\n", "x").unwrap();
        assert_eq!(list, words(&["crane", "slate"]));
    }

    #[test]
    fn lexicon_invariants() {
        assert!(Lexicon::new(vec![], words(&["crane"])).is_err());
        assert!(Lexicon::new(words(&["crane"]), vec![]).is_err());
        assert!(Lexicon::new(words(&["crane", "crane"]), words(&["crane"])).is_err());
        assert!(Lexicon::new(words(&["crane"]), words(&["slate"])).is_err());
        let lex = Lexicon::new(words(&["slate", "crane", "abbey"]), words(&["slate", "abbey"])).unwrap();
        assert_eq!(lex.guessable(), &words(&["abbey", "crane", "slate"])[..]);
        assert_eq!(lex.solutions(), &words(&["abbey", "slate"])[..]);
    }

    #[test]
    fn matrix_matches_direct_feedback() {
        let lex = Lexicon::new(
            words(&["slate", "crane", "abbey", "babes", "level", "allee"]),
            words(&["abbey", "level", "crane"]),
        )
        .unwrap();
        for (gi, g) in lex.guessable().iter().enumerate() {
            for (si, s) in lex.solutions().iter().enumerate() {
                assert_eq!(lex.pattern(gi, si), compute_feedback(g, s));
            }
        }
        assert_eq!(lex.matrix().size_bytes(), 18);
    }

    #[test]
    fn bundled_lists_have_standard_sizes() {
        let lex = Lexicon::bundled();
        assert_eq!(lex.guessable().len(), 12_972);
        assert_eq!(lex.solutions().len(), 2_309);
        assert!(lex.is_guessable(&Word::new("salet").unwrap()));
        assert!(!lex.is_solution(&Word::new("salet").unwrap()));
        assert!(lex.is_solution(&Word::new("abbey").unwrap()));
    }
}
