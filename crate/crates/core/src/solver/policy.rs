use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::feedback::PATTERN_COUNT;
use crate::game::GameHistory;
use crate::lexicon::Lexicon;
use crate::word::Word;

use super::score::{PoolScorer, Score, ENTROPY_TIE_TOLERANCE};
use super::{Heuristic, SolverConfig};

/// Hard cap on guesses per game. Games past six are losses but keep going;
/// this only guards against a policy that stops making progress.
pub const MAX_STEPS: usize = 32;

/// Picks the guess id for a candidate set (solution ids, ascending).
pub(crate) fn choose(scorer: &PoolScorer<'_>, candidates: &[u16], config: &SolverConfig) -> Result<usize> {
    let lexicon = scorer.lexicon();
    if candidates.is_empty() {
        return Err(Error::InconsistentHistory);
    }
    if config.endgame_shortcut && candidates.len() <= 2 {
        let word = lexicon.solutions()[candidates[0] as usize];
        return Ok(lexicon.guess_id(&word).expect("solutions are guessable"));
    }
    let scores = scorer.score_pool(candidates, config.heuristic);
    Ok(select(lexicon, &scores, candidates))
}

fn candidate_mask(lexicon: &Lexicon, candidates: &[u16]) -> Vec<bool> {
    let mut mask = vec![false; lexicon.solutions().len()];
    for &c in candidates {
        mask[c as usize] = true;
    }
    mask
}

fn is_candidate(lexicon: &Lexicon, mask: &[bool], guess_id: usize) -> bool {
    lexicon.guess_as_solution(guess_id).is_some_and(|s| mask[s])
}

fn is_tied_with_best(score: Score, best: Score) -> bool {
    match (score, best) {
        (Score::Entropy(e), Score::Entropy(b)) => e >= b - ENTROPY_TIE_TOLERANCE,
        (Score::Minimax(m), Score::Minimax(b)) => m == b,
        _ => false,
    }
}

fn best_score(scores: &[Score]) -> Score {
    scores
        .iter()
        .copied()
        .reduce(|a, b| match (a, b) {
            (Score::Entropy(x), Score::Entropy(y)) => Score::Entropy(x.max(y)),
            (Score::Minimax(x), Score::Minimax(y)) => Score::Minimax(x.min(y)),
            _ => unreachable!("mixed heuristics in one pool"),
        })
        .expect("guess pool is nonempty")
}

/// Among guesses tied with the best score, the first candidate in guess-id
/// order, else the first tied guess. Guess ids follow lexicographic order.
fn select(lexicon: &Lexicon, scores: &[Score], candidates: &[u16]) -> usize {
    let best = best_score(scores);
    let mask = candidate_mask(lexicon, candidates);
    let mut first_tied = None;
    for (gid, &s) in scores.iter().enumerate() {
        if !is_tied_with_best(s, best) {
            continue;
        }
        if is_candidate(lexicon, &mask, gid) {
            return gid;
        }
        first_tied.get_or_insert(gid);
    }
    first_tied.expect("best score is attained")
}

/// The configured heuristic's choice given the game so far.
pub fn best_guess(history: &GameHistory, lexicon: &Lexicon, config: &SolverConfig) -> Result<Word> {
    let candidates = history.candidate_ids(lexicon);
    let scorer = PoolScorer::new(lexicon);
    let gid = choose(&scorer, &candidates, config)?;
    Ok(lexicon.guessable()[gid])
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankedGuess {
    pub word: Word,
    /// Entropy in bits, or the largest class size for minimax.
    pub score: f64,
    pub is_candidate: bool,
}

/// The `k` best guesses for the history, best first, plus the number of
/// candidates remaining. The first entry is always [`best_guess`]'s pick.
pub fn rank_guesses(
    history: &GameHistory,
    lexicon: &Lexicon,
    config: &SolverConfig,
    k: usize,
) -> Result<(Vec<RankedGuess>, usize)> {
    let candidates = history.candidate_ids(lexicon);
    let scorer = PoolScorer::new(lexicon);
    let top = choose(&scorer, &candidates, config)?;
    let scores = scorer.score_pool(&candidates, config.heuristic);
    let mask = candidate_mask(lexicon, &candidates);
    let mut order: Vec<usize> = (0..scores.len()).filter(|&g| g != top).collect();
    order.sort_by(|&a, &b| {
        let by_score = match (scores[a], scores[b]) {
            (Score::Entropy(x), Score::Entropy(y)) => y.total_cmp(&x),
            (Score::Minimax(x), Score::Minimax(y)) => x.cmp(&y),
            _ => unreachable!(),
        };
        by_score
            .then_with(|| is_candidate(lexicon, &mask, b).cmp(&is_candidate(lexicon, &mask, a)))
            .then_with(|| a.cmp(&b))
    });
    let ranked = std::iter::once(top)
        .chain(order)
        .take(k)
        .map(|gid| RankedGuess {
            word: lexicon.guessable()[gid],
            score: scores[gid].value(),
            is_candidate: is_candidate(lexicon, &mask, gid),
        })
        .collect();
    Ok((ranked, candidates.len()))
}

/// Plays one game from the opener until the answer is guessed.
pub fn play_game(answer: &Word, lexicon: &Lexicon, config: &SolverConfig) -> Result<Vec<Word>> {
    config.validate(lexicon)?;
    let answer_id = lexicon.solution_id(answer).ok_or(Error::NotASolution(*answer))?;
    let scorer = PoolScorer::new(lexicon);
    let mut candidates: Vec<u16> = (0..lexicon.solutions().len() as u16).collect();
    let mut guess_id = lexicon.guess_id(&config.opener).expect("validated opener");
    let mut guesses = Vec::new();
    loop {
        guesses.push(lexicon.guessable()[guess_id]);
        let row = lexicon.matrix().row(guess_id);
        let code = row[answer_id];
        if code as usize == PATTERN_COUNT - 1 {
            return Ok(guesses);
        }
        if guesses.len() >= MAX_STEPS {
            return Err(Error::NoProgress(guesses.len()));
        }
        candidates.retain(|&c| row[c as usize] == code);
        debug_assert!(candidates.binary_search(&(answer_id as u16)).is_ok());
        guess_id = choose(&scorer, &candidates, config)?;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolicySummary {
    pub heuristic: Heuristic,
    pub opener: Word,
    pub games: usize,
    pub average_guesses: f64,
    pub max_guesses: u32,
    /// guess count -> number of games
    pub histogram: BTreeMap<u32, usize>,
    /// Games needing more than six guesses.
    pub losses: usize,
    /// Guess count for every solution, in solution order.
    pub per_answer: Vec<(Word, u32)>,
}

/// Plays every solution as the answer and aggregates guess counts.
///
/// Games sharing a prefix share the solver's choices, so the policy is
/// walked as a decision tree: each node picks one guess for its candidate
/// set and splits the set by feedback. This yields exactly the counts that
/// [`play_game`] would for each answer.
pub fn evaluate_policy(lexicon: &Lexicon, config: &SolverConfig) -> Result<PolicySummary> {
    config.validate(lexicon)?;
    let scorer = PoolScorer::new(lexicon);
    let opener = lexicon.guess_id(&config.opener).expect("validated opener");
    let all: Vec<u16> = (0..lexicon.solutions().len() as u16).collect();

    let branches = split(lexicon, opener, &all);
    let results: Vec<Result<Vec<(u16, u32)>>> = branches
        .into_par_iter()
        .map(|(code, class)| {
            let mut out = Vec::with_capacity(class.len());
            walk(&scorer, config, code, class, 1, &mut out)?;
            Ok(out)
        })
        .collect();

    let mut counts = vec![0u32; lexicon.solutions().len()];
    for branch in results {
        for (answer, n) in branch? {
            counts[answer as usize] = n;
        }
    }
    debug_assert!(counts.iter().all(|&n| n > 0));
    Ok(summarize(lexicon, config, counts))
}

/// Candidate classes of `guess_id` over `candidates`, ascending by pattern code.
fn split(lexicon: &Lexicon, guess_id: usize, candidates: &[u16]) -> Vec<(u8, Vec<u16>)> {
    let row = lexicon.matrix().row(guess_id);
    let mut classes: Vec<Vec<u16>> = vec![Vec::new(); PATTERN_COUNT];
    for &c in candidates {
        classes[row[c as usize] as usize].push(c);
    }
    classes
        .into_iter()
        .enumerate()
        .filter(|(_, class)| !class.is_empty())
        .map(|(code, class)| (code as u8, class))
        .collect()
}

/// `class` holds the candidates that answered the guess made at `depth` with `code`.
fn walk(
    scorer: &PoolScorer<'_>,
    config: &SolverConfig,
    code: u8,
    class: Vec<u16>,
    depth: u32,
    out: &mut Vec<(u16, u32)>,
) -> Result<()> {
    if code as usize == PATTERN_COUNT - 1 {
        out.extend(class.into_iter().map(|c| (c, depth)));
        return Ok(());
    }
    if depth as usize >= MAX_STEPS {
        return Err(Error::NoProgress(depth as usize));
    }
    let lexicon = scorer.lexicon();
    let next = choose(scorer, &class, config)?;
    for (next_code, sub) in split(lexicon, next, &class) {
        walk(scorer, config, next_code, sub, depth + 1, out)?;
    }
    Ok(())
}

fn summarize(lexicon: &Lexicon, config: &SolverConfig, counts: Vec<u32>) -> PolicySummary {
    let games = counts.len();
    let mut histogram = BTreeMap::new();
    for &n in &counts {
        *histogram.entry(n).or_insert(0) += 1;
    }
    let total: u64 = counts.iter().map(|&n| n as u64).sum();
    PolicySummary {
        heuristic: config.heuristic,
        opener: config.opener,
        games,
        average_guesses: total as f64 / games as f64,
        max_guesses: counts.iter().copied().max().unwrap_or(0),
        losses: counts.iter().filter(|&&n| n > 6).count(),
        histogram,
        per_answer: lexicon.solutions().iter().copied().zip(counts).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feedback::compute_feedback;

    fn w(s: &str) -> Word {
        Word::new(s).unwrap()
    }

    fn ws(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    fn small() -> Lexicon {
        Lexicon::new(
            ws(&["crane", "crate", "slate", "abbey", "level", "allee", "babes", "trace", "react"]),
            ws(&["crane", "crate", "abbey", "level", "trace"]),
        )
        .unwrap()
    }

    #[test]
    fn single_candidate_is_guessed() {
        let lex = small();
        let cfg = SolverConfig::new(Heuristic::Entropy, w("slate"));
        let h = GameHistory::scored(&[w("babes")], &w("abbey")).unwrap();
        assert_eq!(h.candidates(&lex), vec![w("abbey")]);
        assert_eq!(best_guess(&h, &lex, &cfg).unwrap(), w("abbey"));
    }

    #[test]
    fn endgame_shortcut_picks_smallest() {
        let lex = small();
        let cfg = SolverConfig::new(Heuristic::Minimax, w("slate"));
        let h = GameHistory::from_steps([(w("react"), compute_feedback(&w("react"), &w("crane")))]).unwrap();
        assert_eq!(h.candidates(&lex), ws(&["crane"]));
        let lex2 = Lexicon::new(ws(&["crane", "crate", "zzzzz"]), ws(&["crane", "crate"])).unwrap();
        assert_eq!(best_guess(&GameHistory::new(), &lex2, &cfg).unwrap(), w("crane"));
    }

    #[test]
    fn inconsistent_history_errors() {
        let lex = small();
        let cfg = SolverConfig::new(Heuristic::Entropy, w("slate"));
        let h = GameHistory::from_steps([(w("crane"), "yyyyy".parse().unwrap())]).unwrap();
        assert!(matches!(best_guess(&h, &lex, &cfg), Err(Error::InconsistentHistory)));
    }

    #[test]
    fn play_game_contract() {
        let lex = small();
        for h in [Heuristic::Entropy, Heuristic::Minimax] {
            let cfg = SolverConfig::new(h, w("crane"));
            assert_eq!(play_game(&w("crane"), &lex, &cfg).unwrap(), ws(&["crane"]));
            for answer in lex.solutions() {
                let seq = play_game(answer, &lex, &cfg).unwrap();
                assert_eq!(seq.last(), Some(answer));
                assert_eq!(seq[0], w("crane"));
            }
        }
        let cfg = SolverConfig::new(Heuristic::Entropy, w("zzzzz"));
        assert!(matches!(play_game(&w("crane"), &lex, &cfg), Err(Error::IllegalGuess(_))));
        let cfg = SolverConfig::new(Heuristic::Entropy, w("crane"));
        assert!(matches!(play_game(&w("slate"), &lex, &cfg), Err(Error::NotASolution(_))));
    }

    #[test]
    fn tree_walk_matches_per_game_play() {
        let lex = small();
        for h in [Heuristic::Entropy, Heuristic::Minimax] {
            for opener in ["slate", "babes", "crane"] {
                let cfg = SolverConfig::new(h, w(opener));
                let summary = evaluate_policy(&lex, &cfg).unwrap();
                for (answer, n) in &summary.per_answer {
                    assert_eq!(play_game(answer, &lex, &cfg).unwrap().len() as u32, *n);
                }
                assert_eq!(summary.histogram.values().sum::<usize>(), lex.solutions().len());
            }
        }
    }

    #[test]
    fn single_solution_lexicon() {
        let lex = Lexicon::new(ws(&["crane", "slate"]), ws(&["crane"])).unwrap();
        let cfg = SolverConfig::new(Heuristic::Entropy, w("crane"));
        let s = evaluate_policy(&lex, &cfg).unwrap();
        assert_eq!(s.average_guesses, 1.0);
        assert_eq!(s.max_guesses, 1);
        assert_eq!(s.losses, 0);
    }

    #[test]
    fn ranking_starts_with_best_guess() {
        let lex = small();
        let cfg = SolverConfig::new(Heuristic::Entropy, w("slate"));
        let (ranked, remaining) = rank_guesses(&GameHistory::new(), &lex, &cfg, 4).unwrap();
        assert_eq!(remaining, 5);
        assert_eq!(ranked.len(), 4);
        assert_eq!(ranked[0].word, best_guess(&GameHistory::new(), &lex, &cfg).unwrap());
        assert!(ranked.windows(2).skip(1).all(|p| p[0].score >= p[1].score));
    }
}
