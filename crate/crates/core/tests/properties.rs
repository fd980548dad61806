mod common;

use std::sync::LazyLock;

use proptest::prelude::*;

use common::*;
use wordlab::feedback::{decode_pattern, encode_pattern};
use wordlab::metrics::{char_difference, levenshtein, shared_chars, shared_syllables, SonorityHierarchy};
use wordlab::stats::{bucket_and_compare, cohens_d, histogram, two_sided_p, BinSpec, PairedObservation, SampleSet};
use wordlab::{compute_feedback, filter_candidates, FeedbackPattern, GameHistory, Heuristic, Lexicon, SolverConfig, Word};

static LEXICON: LazyLock<Lexicon> = LazyLock::new(Lexicon::bundled);

fn word() -> impl Strategy<Value = Word> {
    "[a-z]{5}".prop_map(|s| Word::new(&s).unwrap())
}

/// Words over a small alphabet, so repeated letters are common.
fn dense_word() -> impl Strategy<Value = Word> {
    "[aeils]{5}".prop_map(|s| Word::new(&s).unwrap())
}

fn solution() -> impl Strategy<Value = Word> {
    (0..LEXICON.solutions().len()).prop_map(|i| LEXICON.solutions()[i])
}

fn guessable() -> impl Strategy<Value = Word> {
    (0..LEXICON.guessable().len()).prop_map(|i| LEXICON.guessable()[i])
}

fn sample(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-100.0..100.0f64, len)
}

proptest! {
    #[test]
    fn feedback_matches_reference(g in dense_word(), a in dense_word()) {
        prop_assert_eq!(compute_feedback(&g, &a).to_string(), reference_feedback(g.as_str(), a.as_str()));
    }

    #[test]
    fn all_green_iff_equal(g in word(), a in word()) {
        prop_assert_eq!(compute_feedback(&g, &a).is_solved(), g == a);
    }

    #[test]
    fn coloured_tiles_bounded_by_shared_letters(g in dense_word(), a in dense_word()) {
        let coloured = compute_feedback(&g, &a).tiles().iter().filter(|t| **t as u8 > 0).count() as u32;
        prop_assert_eq!(coloured, shared_chars(&g, &a));
    }

    #[test]
    fn pattern_code_round_trip(code in 0u32..243) {
        let tiles = decode_pattern(code).unwrap();
        prop_assert_eq!(encode_pattern(&tiles) as u32, code);
        prop_assert_eq!(FeedbackPattern::from_code(code).unwrap().to_string().parse::<FeedbackPattern>().unwrap().code() as u32, code);
    }

    #[test]
    fn filtering_keeps_answer(answer in solution(), guesses in prop::collection::vec(guessable(), 1..4)) {
        let mut cands = LEXICON.solutions().to_vec();
        for g in &guesses {
            cands = filter_candidates(&cands, g, compute_feedback(g, &answer));
            prop_assert!(cands.contains(&answer));
        }
        let history = GameHistory::scored(&guesses, &answer).unwrap();
        prop_assert_eq!(history.candidates(&LEXICON), cands);
    }

    #[test]
    fn played_games_keep_answer(answer in solution(), minimax in any::<bool>()) {
        let h = if minimax { Heuristic::Minimax } else { Heuristic::Entropy };
        let config = SolverConfig::new(h, w("salet"));
        let guesses = wordlab::solver::play_game(&answer, &LEXICON, &config).unwrap();
        prop_assert_eq!(guesses.last(), Some(&answer));
        for k in 1..guesses.len() {
            let history = GameHistory::scored(&guesses[..k], &answer).unwrap();
            prop_assert!(history.candidates(&LEXICON).contains(&answer));
        }
    }

    #[test]
    fn levenshtein_axioms(x in word(), y in word(), z in word()) {
        prop_assert_eq!(levenshtein(&x, &y), levenshtein(&y, &x));
        prop_assert_eq!(levenshtein(&x, &y) == 0, x == y);
        prop_assert!(levenshtein(&x, &z) <= levenshtein(&x, &y) + levenshtein(&y, &z));
        prop_assert!(levenshtein(&x, &y) <= char_difference(&x, &y));
    }

    #[test]
    fn overlap_metrics_symmetric(x in word(), y in word()) {
        let h = SonorityHierarchy::default();
        prop_assert_eq!(shared_chars(&x, &y), shared_chars(&y, &x));
        prop_assert_eq!(shared_syllables(&x, &y, &h), shared_syllables(&y, &x, &h));
        prop_assert_eq!(shared_chars(&x, &x), 5);
    }

    #[test]
    fn cohens_d_antisymmetric_and_affine_invariant(
        x in sample(2..20), y in sample(2..20), a in 0.1..10.0f64, b in -50.0..50.0f64,
    ) {
        let sx = SampleSet::new("x", x.clone()).unwrap();
        let sy = SampleSet::new("y", y.clone()).unwrap();
        let Ok(d) = cohens_d(&sx, &sy) else { return Ok(()) };
        prop_assert!((d + cohens_d(&sy, &sx).unwrap()).abs() < 1e-9);
        let t = |v: &[f64]| SampleSet::new("t", v.iter().map(|v| a * v + b).collect()).unwrap();
        prop_assert!((cohens_d(&t(&x), &t(&y)).unwrap() - d).abs() < 1e-6 * d.abs().max(1.0));
    }

    #[test]
    fn p_decreases_with_abs_t(t1 in 0.0..20.0f64, dt in 0.0..5.0f64, df in 1.0..200.0f64) {
        let (p1, p2) = (two_sided_p(t1, df), two_sided_p(t1 + dt, df));
        prop_assert!((0.0..=1.0).contains(&p1));
        prop_assert!(p2 <= p1 + 1e-12);
        prop_assert_eq!(two_sided_p(-t1, df), p1);
    }

    #[test]
    fn histogram_counts_sum(values in sample(0..50), bins in 1usize..12) {
        let total: usize = histogram(&values, &BinSpec::Count(bins)).iter().map(|b| b.count).sum();
        prop_assert_eq!(total, values.len());
        let ints: Vec<f64> = values.iter().map(|v| v.round()).collect();
        let total: usize = histogram(&ints, &BinSpec::Unit).iter().map(|b| b.count).sum();
        prop_assert_eq!(total, ints.len());
    }

    #[test]
    fn bucket_partition(data in prop::collection::vec((0usize..4, -10.0..10.0f64, -10.0..10.0f64), 0..60), shift in -5.0..5.0f64) {
        let states = ["0g0y5b", "1g1y3b", "2g0y3b", "0g3y2b"];
        let obs: Vec<_> = data.iter().map(|&(s, h, _)| PairedObservation {
            state: states[s].into(),
            human: Some(h + shift),
            model: Some(h),
        }).collect();
        let rows = bucket_and_compare(&obs, "m");
        prop_assert_eq!(rows.iter().map(|r| r.n_human).sum::<usize>(), obs.len());
        prop_assert!(rows.windows(2).all(|p| p[0].state < p[1].state));
        for r in &rows {
            if let Some(d) = r.cohens_d {
                prop_assert!(shift == 0.0 || d.signum() == shift.signum() || d == 0.0);
                prop_assert!((0.0..=1.0).contains(&r.p.unwrap()));
            }
        }
    }
}

#[test]
fn duplicate_letter_suite() {
    for (g, a, want) in [
        ("babes", "abbey", "YYGGB"),
        ("allee", "level", "BYYGY"),
        ("eerie", "crane", "BBYBG"),
        ("speed", "abide", "BBYBY"),
        ("llama", "hello", "YYBBB"),
        ("geese", "eerie", "BGYBG"),
    ] {
        assert_eq!(compute_feedback(&w(g), &w(a)).to_string(), want, "{g}/{a}");
        assert_eq!(reference_feedback(g, a), want, "{g}/{a}");
    }
}

#[test]
fn levenshtein_matches_naive_oracle() {
    let strings = all_strings(b"abc", 4);
    for a in &strings {
        for b in &strings {
            assert_eq!(wordlab::metrics::levenshtein_bytes(a, b), naive_levenshtein(a, b));
        }
    }
}
