//! C ABI over `wordlab`.
//!
//! Every fallible function returns a [`WlStatus`]; on failure a message is
//! available from [`wl_last_error`] on the same thread. Words are passed as
//! NUL-terminated strings and returned in caller buffers of at least
//! [`WL_WORD_BUF`] bytes.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use wordlab::metrics::levenshtein;
use wordlab::solver::{best_guess, entropy_of_guess};
use wordlab::stats::{cohens_d, welch_t, SampleSet};
use wordlab::{compute_feedback, Error, FeedbackPattern, GameHistory, Heuristic, Lexicon, SolverConfig, Word};

/// Bytes needed to hold a word plus its terminator.
pub const WL_WORD_BUF: usize = 6;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WlStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidWord = 2,
    InvalidPattern = 3,
    NoCandidates = 4,
    IllegalGuess = 5,
    InsufficientSamples = 6,
    DegenerateSamples = 7,
    Io = 8,
    InvalidLexicon = 9,
    HistoryClosed = 10,
    Internal = 255,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WlHeuristic {
    Entropy = 0,
    Minimax = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct WlWelch {
    pub t: f64,
    pub df: f64,
    pub p: f64,
}

/// Word lists plus the precomputed feedback matrix.
pub struct WlLexicon(Lexicon);

/// Guesses and feedback seen so far in one game.
pub struct WlHistory(GameHistory);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> WlStatus {
    match e {
        Error::InvalidWord { .. } => WlStatus::InvalidWord,
        Error::PatternOutOfRange(_) | Error::PatternParse(_) => WlStatus::InvalidPattern,
        Error::EmptyCandidates | Error::InconsistentHistory => WlStatus::NoCandidates,
        Error::IllegalGuess(_) | Error::NotASolution(_) => WlStatus::IllegalGuess,
        Error::InsufficientSamples { .. } => WlStatus::InsufficientSamples,
        Error::DegenerateSamples => WlStatus::DegenerateSamples,
        Error::Io { .. } | Error::Csv { .. } | Error::Format { .. } => WlStatus::Io,
        Error::Lexicon(_) => WlStatus::InvalidLexicon,
        Error::HistoryClosed => WlStatus::HistoryClosed,
        _ => WlStatus::Internal,
    }
}

fn fail(status: WlStatus, message: &str) -> WlStatus {
    set_error(message);
    status
}

/// Runs `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), WlStatus>) -> WlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => WlStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(WlStatus::Internal, "internal panic"),
    }
}

fn check(e: Error) -> WlStatus {
    fail(status_of(&e), &e.to_string())
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, WlStatus> {
    if p.is_null() {
        return Err(fail(WlStatus::NullArgument, &format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(WlStatus::InvalidWord, &format!("{what} is not UTF-8")))
}

unsafe fn word_arg(p: *const c_char, what: &str) -> Result<Word, WlStatus> {
    Word::new(str_arg(p, what)?).map_err(check)
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, WlStatus> {
    p.as_mut()
        .ok_or_else(|| fail(WlStatus::NullArgument, &format!("{what} is null")))
}

unsafe fn slice_arg<'a, T>(p: *const T, n: usize, what: &str) -> Result<&'a [T], WlStatus> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(WlStatus::NullArgument, &format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn write_word(out: *mut c_char, word: &Word) -> Result<(), WlStatus> {
    if out.is_null() {
        return Err(fail(WlStatus::NullArgument, "output buffer is null"));
    }
    let bytes = word.as_str().as_bytes();
    ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), out, bytes.len());
    *out.add(bytes.len()) = 0;
    Ok(())
}

/// Message for the last failure on this thread. Valid until the next call
/// into the library from the same thread.
#[no_mangle]
pub extern "C" fn wl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Feedback of `guess` against `answer` as a base-3 code (0..=242).
///
/// # Safety
/// `guess` and `answer` must be NUL-terminated strings; `out_code` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn wl_feedback(guess: *const c_char, answer: *const c_char, out_code: *mut u8) -> WlStatus {
    guard(|| {
        let g = word_arg(guess, "guess")?;
        let a = word_arg(answer, "answer")?;
        *out_arg(out_code, "out_code")? = compute_feedback(&g, &a).code();
        Ok(())
    })
}

/// Parses a pattern such as `"bygbb"` (case-insensitive) into its code.
///
/// # Safety
/// `text` must be NUL-terminated; `out_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_pattern_parse(text: *const c_char, out_code: *mut u8) -> WlStatus {
    guard(|| {
        let s = str_arg(text, "text")?;
        let p: FeedbackPattern = s.parse().map_err(check)?;
        *out_arg(out_code, "out_code")? = p.code();
        Ok(())
    })
}

/// Writes a code as five letters from `G`, `Y`, `B`.
///
/// # Safety
/// `out` must hold at least `WL_WORD_BUF` bytes.
#[no_mangle]
pub unsafe extern "C" fn wl_pattern_format(code: u32, out: *mut c_char) -> WlStatus {
    guard(|| {
        let p = FeedbackPattern::from_code(code).map_err(check)?;
        let text = p.to_string();
        if out.is_null() {
            return Err(fail(WlStatus::NullArgument, "output buffer is null"));
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), out, text.len());
        *out.add(text.len()) = 0;
        Ok(())
    })
}

/// The bundled word lists. Free with [`wl_lexicon_free`].
#[no_mangle]
pub extern "C" fn wl_lexicon_bundled() -> *mut WlLexicon {
    match catch_unwind(|| Box::into_raw(Box::new(WlLexicon(Lexicon::bundled())))) {
        Ok(p) => p,
        Err(_) => {
            set_error("internal panic");
            ptr::null_mut()
        }
    }
}

/// Loads word lists from files, one word per line.
///
/// # Safety
/// Paths must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_lexicon_from_files(
    guessable_path: *const c_char,
    solutions_path: *const c_char,
    out: *mut *mut WlLexicon,
) -> WlStatus {
    guard(|| {
        let g = str_arg(guessable_path, "guessable_path")?;
        let s = str_arg(solutions_path, "solutions_path")?;
        let out = out_arg(out, "out")?;
        let lexicon = Lexicon::from_files(Path::new(g), Path::new(s)).map_err(check)?;
        *out = Box::into_raw(Box::new(WlLexicon(lexicon)));
        Ok(())
    })
}

/// # Safety
/// `lexicon` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wl_lexicon_free(lexicon: *mut WlLexicon) {
    if !lexicon.is_null() {
        drop(Box::from_raw(lexicon));
    }
}

/// # Safety
/// `lexicon` must be valid; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn wl_lexicon_sizes(
    lexicon: *const WlLexicon,
    out_guessable: *mut usize,
    out_solutions: *mut usize,
) -> WlStatus {
    guard(|| {
        let lex = &lexicon.as_ref().ok_or_else(|| fail(WlStatus::NullArgument, "lexicon is null"))?.0;
        *out_arg(out_guessable, "out_guessable")? = lex.guessable().len();
        *out_arg(out_solutions, "out_solutions")? = lex.solutions().len();
        Ok(())
    })
}

/// An empty game history. Free with [`wl_history_free`].
#[no_mangle]
pub extern "C" fn wl_history_new() -> *mut WlHistory {
    Box::into_raw(Box::new(WlHistory(GameHistory::new())))
}

/// # Safety
/// `history` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wl_history_free(history: *mut WlHistory) {
    if !history.is_null() {
        drop(Box::from_raw(history));
    }
}

/// Appends a guess and the feedback it received.
///
/// # Safety
/// `history` must be valid; `guess` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn wl_history_push(history: *mut WlHistory, guess: *const c_char, code: u32) -> WlStatus {
    guard(|| {
        let h = out_arg(history, "history")?;
        let g = word_arg(guess, "guess")?;
        let p = FeedbackPattern::from_code(code).map_err(check)?;
        h.0.push(g, p).map_err(check)
    })
}

/// Candidates consistent with `history` (null means no guesses yet).
///
/// # Safety
/// `lexicon` must be valid; `history` valid or null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_remaining(
    lexicon: *const WlLexicon,
    history: *const WlHistory,
    out: *mut usize,
) -> WlStatus {
    guard(|| {
        let lex = &lexicon.as_ref().ok_or_else(|| fail(WlStatus::NullArgument, "lexicon is null"))?.0;
        let empty = GameHistory::new();
        let h = history.as_ref().map_or(&empty, |h| &h.0);
        *out_arg(out, "out")? = h.candidate_ids(lex).len();
        Ok(())
    })
}

/// The solver's next guess for `history` (null means no guesses yet).
///
/// # Safety
/// `lexicon` must be valid; `history` valid or null; `out` must hold at
/// least `WL_WORD_BUF` bytes.
#[no_mangle]
pub unsafe extern "C" fn wl_best_guess(
    lexicon: *const WlLexicon,
    history: *const WlHistory,
    heuristic: WlHeuristic,
    out: *mut c_char,
) -> WlStatus {
    guard(|| {
        let lex = &lexicon.as_ref().ok_or_else(|| fail(WlStatus::NullArgument, "lexicon is null"))?.0;
        let empty = GameHistory::new();
        let h = history.as_ref().map_or(&empty, |h| &h.0);
        let heuristic = match heuristic {
            WlHeuristic::Entropy => Heuristic::Entropy,
            WlHeuristic::Minimax => Heuristic::Minimax,
        };
        let opener = lex.guessable()[0];
        let guess = best_guess(h, lex, &SolverConfig::new(heuristic, opener)).map_err(check)?;
        write_word(out, &guess)
    })
}

/// Expected information in bits from guessing `guess` against `candidates`.
///
/// # Safety
/// `candidates` must point to `n` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn wl_entropy(
    guess: *const c_char,
    candidates: *const *const c_char,
    n: usize,
    out: *mut f64,
) -> WlStatus {
    guard(|| {
        let g = word_arg(guess, "guess")?;
        let words = slice_arg(candidates, n, "candidates")?
            .iter()
            .map(|&p| word_arg(p, "candidate"))
            .collect::<Result<Vec<_>, _>>()?;
        *out_arg(out, "out")? = entropy_of_guess(&g, &words).map_err(check)?;
        Ok(())
    })
}

/// # Safety
/// Words must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wl_levenshtein(a: *const c_char, b: *const c_char, out: *mut u32) -> WlStatus {
    guard(|| {
        let a = word_arg(a, "a")?;
        let b = word_arg(b, "b")?;
        *out_arg(out, "out")? = levenshtein(&a, &b);
        Ok(())
    })
}

unsafe fn samples(x: *const f64, nx: usize, y: *const f64, ny: usize) -> Result<(SampleSet, SampleSet), WlStatus> {
    let xs = SampleSet::new("x", slice_arg(x, nx, "x")?.to_vec()).map_err(check)?;
    let ys = SampleSet::new("y", slice_arg(y, ny, "y")?.to_vec()).map_err(check)?;
    Ok((xs, ys))
}

/// Cohen's d of `x` against `y` with the pooled standard deviation.
///
/// # Safety
/// `x` and `y` must point to `nx` and `ny` doubles.
#[no_mangle]
pub unsafe extern "C" fn wl_cohens_d(x: *const f64, nx: usize, y: *const f64, ny: usize, out: *mut f64) -> WlStatus {
    guard(|| {
        let (xs, ys) = samples(x, nx, y, ny)?;
        *out_arg(out, "out")? = cohens_d(&xs, &ys).map_err(check)?;
        Ok(())
    })
}

/// Welch's t-test of `x` against `y`; `p` is two-sided.
///
/// # Safety
/// `x` and `y` must point to `nx` and `ny` doubles.
#[no_mangle]
pub unsafe extern "C" fn wl_welch_t(x: *const f64, nx: usize, y: *const f64, ny: usize, out: *mut WlWelch) -> WlStatus {
    guard(|| {
        let (xs, ys) = samples(x, nx, y, ny)?;
        let r = welch_t(&xs, &ys).map_err(check)?;
        *out_arg(out, "out")? = WlWelch {
            t: r.t,
            df: r.df,
            p: r.p,
        };
        Ok(())
    })
}
