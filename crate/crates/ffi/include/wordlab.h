#ifndef WORDLAB_H
#define WORDLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Bytes needed to hold a word plus its terminator.
 */
#define WL_WORD_BUF 6

typedef enum WlStatus {
  WL_STATUS_OK = 0,
  WL_STATUS_NULL_ARGUMENT = 1,
  WL_STATUS_INVALID_WORD = 2,
  WL_STATUS_INVALID_PATTERN = 3,
  WL_STATUS_NO_CANDIDATES = 4,
  WL_STATUS_ILLEGAL_GUESS = 5,
  WL_STATUS_INSUFFICIENT_SAMPLES = 6,
  WL_STATUS_DEGENERATE_SAMPLES = 7,
  WL_STATUS_IO = 8,
  WL_STATUS_INVALID_LEXICON = 9,
  WL_STATUS_HISTORY_CLOSED = 10,
  WL_STATUS_INTERNAL = 255,
} WlStatus;

typedef enum WlHeuristic {
  WL_HEURISTIC_ENTROPY = 0,
  WL_HEURISTIC_MINIMAX = 1,
} WlHeuristic;

/**
 * Guesses and feedback seen so far in one game.
 */
typedef struct WlHistory WlHistory;

/**
 * Word lists plus the precomputed feedback matrix.
 */
typedef struct WlLexicon WlLexicon;

typedef struct WlWelch {
  double t;
  double df;
  double p;
} WlWelch;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread. Valid until the next call
 * into the library from the same thread.
 */
const char *wl_last_error(void);

/**
 * Feedback of `guess` against `answer` as a base-3 code (0..=242).
 *
 * # Safety
 * `guess` and `answer` must be NUL-terminated strings; `out_code` must be
 * writable.
 */
enum WlStatus wl_feedback(const char *guess, const char *answer, uint8_t *out_code);

/**
 * Parses a pattern such as `"bygbb"` (case-insensitive) into its code.
 *
 * # Safety
 * `text` must be NUL-terminated; `out_code` must be writable.
 */
enum WlStatus wl_pattern_parse(const char *text, uint8_t *out_code);

/**
 * Writes a code as five letters from `G`, `Y`, `B`.
 *
 * # Safety
 * `out` must hold at least `WL_WORD_BUF` bytes.
 */
enum WlStatus wl_pattern_format(uint32_t code, char *out);

/**
 * The bundled word lists. Free with [`wl_lexicon_free`].
 */
struct WlLexicon *wl_lexicon_bundled(void);

/**
 * Loads word lists from files, one word per line.
 *
 * # Safety
 * Paths must be NUL-terminated; `out` must be writable.
 */
enum WlStatus wl_lexicon_from_files(const char *guessable_path,
                                    const char *solutions_path,
                                    struct WlLexicon **out);

/**
 * # Safety
 * `lexicon` must come from this library and not be used afterwards.
 */
void wl_lexicon_free(struct WlLexicon *lexicon);

/**
 * # Safety
 * `lexicon` must be valid; outputs must be writable.
 */
enum WlStatus wl_lexicon_sizes(const struct WlLexicon *lexicon,
                               size_t *out_guessable,
                               size_t *out_solutions);

/**
 * An empty game history. Free with [`wl_history_free`].
 */
struct WlHistory *wl_history_new(void);

/**
 * # Safety
 * `history` must come from this library and not be used afterwards.
 */
void wl_history_free(struct WlHistory *history);

/**
 * Appends a guess and the feedback it received.
 *
 * # Safety
 * `history` must be valid; `guess` NUL-terminated.
 */
enum WlStatus wl_history_push(struct WlHistory *history, const char *guess, uint32_t code);

/**
 * Candidates consistent with `history` (null means no guesses yet).
 *
 * # Safety
 * `lexicon` must be valid; `history` valid or null; `out` writable.
 */
enum WlStatus wl_remaining(const struct WlLexicon *lexicon,
                           const struct WlHistory *history,
                           size_t *out);

/**
 * The solver's next guess for `history` (null means no guesses yet).
 *
 * # Safety
 * `lexicon` must be valid; `history` valid or null; `out` must hold at
 * least `WL_WORD_BUF` bytes.
 */
enum WlStatus wl_best_guess(const struct WlLexicon *lexicon,
                            const struct WlHistory *history,
                            enum WlHeuristic heuristic,
                            char *out);

/**
 * Expected information in bits from guessing `guess` against `candidates`.
 *
 * # Safety
 * `candidates` must point to `n` NUL-terminated strings.
 */
enum WlStatus wl_entropy(const char *guess, const char *const *candidates, size_t n, double *out);

/**
 * # Safety
 * Words must be NUL-terminated; `out` writable.
 */
enum WlStatus wl_levenshtein(const char *a, const char *b, uint32_t *out);

/**
 * Cohen's d of `x` against `y` with the pooled standard deviation.
 *
 * # Safety
 * `x` and `y` must point to `nx` and `ny` doubles.
 */
enum WlStatus wl_cohens_d(const double *x, size_t nx, const double *y, size_t ny, double *out);

/**
 * Welch's t-test of `x` against `y`; `p` is two-sided.
 *
 * # Safety
 * `x` and `y` must point to `nx` and `ny` doubles.
 */
enum WlStatus wl_welch_t(const double *x,
                         size_t nx,
                         const double *y,
                         size_t ny,
                         struct WlWelch *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WORDLAB_H */
