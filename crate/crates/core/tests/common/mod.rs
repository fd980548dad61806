//! Independent reference implementations used as test oracles. They are
//! deliberately naive and share no code with the library.
#![allow(dead_code)]

use wordlab::Word;

/// Deterministic 64-bit LCG (Knuth's MMIX constants).
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Tiles as a string over `G`, `Y`, `B`, computed the slow way: greens
/// first, then each remaining guess letter takes an unused answer position
/// holding the same letter, scanning left to right.
pub fn reference_feedback(guess: &str, answer: &str) -> String {
    let g: Vec<char> = guess.chars().collect();
    let a: Vec<char> = answer.chars().collect();
    let mut tiles = vec!['B'; g.len()];
    let mut used = vec![false; a.len()];
    for i in 0..g.len() {
        if g[i] == a[i] {
            tiles[i] = 'G';
            used[i] = true;
        }
    }
    for i in 0..g.len() {
        if tiles[i] == 'G' {
            continue;
        }
        if let Some(j) = (0..a.len()).find(|&j| !used[j] && a[j] == g[i]) {
            used[j] = true;
            tiles[i] = 'Y';
        }
    }
    tiles.into_iter().collect()
}

/// Plain recursive edit distance, exponential time.
pub fn naive_levenshtein(a: &[u8], b: &[u8]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let cost = usize::from(a[0] != b[0]);
    (naive_levenshtein(&a[1..], b) + 1)
        .min(naive_levenshtein(a, &b[1..]) + 1)
        .min(naive_levenshtein(&a[1..], &b[1..]) + cost)
}

/// Candidates consistent with a sequence of (guess, feedback string).
pub fn brute_candidates(solutions: &[Word], steps: &[(Word, String)]) -> Vec<Word> {
    solutions
        .iter()
        .copied()
        .filter(|s| {
            steps
                .iter()
                .all(|(g, f)| reference_feedback(g.as_str(), s.as_str()) == *f)
        })
        .collect()
}

/// Feedback class sizes of `guess` over `candidates`, by feedback string.
pub fn brute_classes(guess: &Word, candidates: &[Word]) -> Vec<usize> {
    let mut classes: std::collections::BTreeMap<String, usize> = Default::default();
    for c in candidates {
        *classes.entry(reference_feedback(guess.as_str(), c.as_str())).or_default() += 1;
    }
    classes.into_values().collect()
}

pub fn brute_entropy(guess: &Word, candidates: &[Word]) -> f64 {
    let n = candidates.len() as f64;
    brute_classes(guess, candidates)
        .into_iter()
        .map(|k| {
            let p = k as f64 / n;
            -p * p.log2()
        })
        .sum()
}

pub fn brute_minimax(guess: &Word, candidates: &[Word]) -> usize {
    brute_classes(guess, candidates).into_iter().max().unwrap_or(0)
}

/// Exhaustive argmax under the documented rule: with at most two
/// candidates guess the smallest; otherwise take the best score (entropy
/// within 1e-9), preferring candidates, then alphabetical order.
pub fn brute_choice(guessable: &[Word], candidates: &[Word], minimax: bool) -> Word {
    if candidates.len() <= 2 {
        return *candidates.iter().min().unwrap();
    }
    let mut pool = guessable.to_vec();
    pool.sort();
    let score = |g: &Word| {
        if minimax {
            -(brute_minimax(g, candidates) as f64)
        } else {
            brute_entropy(g, candidates)
        }
    };
    let scores: Vec<f64> = pool.iter().map(score).collect();
    let best = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let tol = if minimax { 0.0 } else { 1e-9 };
    let tied: Vec<Word> = pool
        .iter()
        .zip(&scores)
        .filter(|(_, &s)| s >= best - tol)
        .map(|(g, _)| *g)
        .collect();
    tied.iter()
        .copied()
        .find(|g| candidates.contains(g))
        .unwrap_or(tied[0])
}

pub fn w(s: &str) -> Word {
    Word::new(s).unwrap()
}

/// All strings of length `0..=max_len` over `alphabet`.
pub fn all_strings(alphabet: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for &c in alphabet {
                let mut t = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// A 30-solution lexicon with 15 extra guess-only words, for brute force.
pub fn mini_lexicon() -> (Vec<Word>, Vec<Word>) {
    let solutions = [
        "cigar", "rebut", "sissy", "humph", "awake", "blush", "focal", "evade", "naval", "serve", "heath",
        "dwarf", "model", "karma", "stink", "grade", "quiet", "bench", "abate", "feign", "major", "death",
        "fresh", "crust", "stool", "colon", "abase", "marry", "react", "batty",
    ];
    let extra = [
        "salet", "crane", "roate", "adieu", "stare", "irate", "lions", "pudgy", "mercy", "snack", "tombs",
        "vouch", "wryly", "fjord", "zesty",
    ];
    let solutions: Vec<Word> = solutions.iter().map(|s| w(s)).collect();
    let mut guessable = solutions.clone();
    guessable.extend(extra.iter().map(|s| w(s)));
    (guessable, solutions)
}
