//! Regex extraction of shared Wordle grids from post text.

use std::sync::LazyLock;

use regex::Regex;

const SQUARES: &str = r"\x{2B1B}\x{2B1C}\x{1F7E8}\x{1F7E9}";

/// A five-square run, then a spoilered five-letter word. Both the
/// HTML-escaped (`&gt;!word!&lt;`) and literal (`>!word!<`) forms occur.
static GUESS_LINE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(&format!(
        r"((?:[{SQUARES}]\x{{FE0F}}?){{5}})\s*(?:&gt;|>)!\s*([A-Za-z]{{5}})\s*!(?:&lt;|<)"
    ))
    .expect("guess line regex")
});

static HEADER: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"(?i)\bwordle\s+#?(\d{1,3}(?:[,.]\d{3})+|\d+)\s+([1-6x])/6\b").expect("header regex")
});

/// Score lines of other daily games ("Quordle 123 5/9", "Worldle #12 3/6").
static OTHER_GAME_HEADER: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)\b[a-z]+\s+#?[\d,.]+\s+[0-9x]+/\d+").expect("other game regex"));

fn is_square(c: char) -> bool {
    matches!(c, '\u{2B1B}' | '\u{2B1C}' | '\u{1F7E8}' | '\u{1F7E9}')
}

/// Every line holding a five-square run followed by a spoilered word, in
/// order. Words are lowercased; variation selectors are dropped from the
/// squares.
pub fn extract_guess_lines(text: &str) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for line in text.lines() {
        for caps in GUESS_LINE.captures_iter(line) {
            let run = caps.get(1).expect("group 1");
            // A longer run of squares is not a single row.
            let preceded_by_square = line[..run.start()]
                .chars()
                .rev()
                .find(|&c| c != '\u{FE0F}')
                .is_some_and(is_square);
            if preceded_by_square {
                continue;
            }
            let squares: String = run.as_str().chars().filter(|&c| c != '\u{FE0F}').collect();
            out.push((squares, caps[2].to_ascii_lowercase()));
            break;
        }
    }
    out
}

/// All-green row?
pub fn is_solved_row(squares: &str) -> bool {
    squares.chars().count() == 5 && squares.chars().all(|c| c == '\u{1F7E9}')
}

/// First `Wordle <id> <k>/6` header: the id (separators removed) and the
/// reported score such as `"4/6"` or `"X/6"`.
pub fn parse_header(text: &str) -> Option<(u32, String)> {
    header_matches(text).into_iter().next().map(|(_, id, score)| (id, score))
}

/// Byte offset, id and score of every header in `text`.
pub(crate) fn header_matches(text: &str) -> Vec<(usize, u32, String)> {
    HEADER
        .captures_iter(text)
        .filter_map(|caps| {
            let digits: String = caps[1].chars().filter(char::is_ascii_digit).collect();
            let id = digits.parse().ok()?;
            let score = format!("{}/6", caps[2].to_ascii_uppercase());
            Some((caps.get(0).expect("match").start(), id, score))
        })
        .collect()
}

pub(crate) fn looks_like_other_game(text: &str) -> bool {
    OTHER_GAME_HEADER.is_match(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "Wordle 1 2/6\n\
        \u{2B1B}\u{2B1B}\u{2B1B}\u{1F7E8}\u{2B1B} &gt;!STALE!&lt;\n\
        \u{1F7E9}\u{1F7E9}\u{1F7E9}\u{1F7E9}\u{1F7E9} &gt;!SLUMS!&lt;";

    #[test]
    fn extracts_two_line_example() {
        let lines = extract_guess_lines(EXAMPLE);
        assert_eq!(
            lines,
            vec![
                ("\u{2B1B}\u{2B1B}\u{2B1B}\u{1F7E8}\u{2B1B}".to_string(), "stale".to_string()),
                ("\u{1F7E9}\u{1F7E9}\u{1F7E9}\u{1F7E9}\u{1F7E9}".to_string(), "slums".to_string()),
            ]
        );
        assert!(is_solved_row(&lines[1].0));
        assert!(!is_solved_row(&lines[0].0));
    }

    #[test]
    fn no_spoilers_no_lines() {
        assert!(extract_guess_lines("Wordle 512 4/6\n\u{2B1B}\u{2B1B}\u{2B1B}\u{1F7E8}\u{2B1B}").is_empty());
        assert!(extract_guess_lines("").is_empty());
    }

    #[test]
    fn four_letter_token_is_skipped() {
        let text = "\u{2B1B}\u{2B1B}\u{2B1B}\u{1F7E8}\u{2B1B} &gt;!SALE!&lt;\n\
            \u{2B1C}\u{2B1C}\u{2B1C}\u{1F7E8}\u{2B1C} >!crane!<";
        assert_eq!(
            extract_guess_lines(text),
            vec![("\u{2B1C}\u{2B1C}\u{2B1C}\u{1F7E8}\u{2B1C}".to_string(), "crane".to_string())]
        );
    }

    #[test]
    fn variation_selectors_and_long_runs() {
        let text = "\u{2B1B}\u{FE0F}\u{2B1B}\u{FE0F}\u{1F7E9}\u{2B1B}\u{FE0F}\u{2B1B}\u{FE0F} >!Crane!<";
        assert_eq!(extract_guess_lines(text)[0].1, "crane");
        assert_eq!(extract_guess_lines(text)[0].0.chars().count(), 5);
        let six = "\u{2B1B}\u{2B1B}\u{2B1B}\u{2B1B}\u{2B1B}\u{2B1B} >!crane!<";
        assert!(extract_guess_lines(six).is_empty());
    }

    #[test]
    fn headers() {
        assert_eq!(parse_header("Wordle 512 4/6"), Some((512, "4/6".to_string())));
        assert_eq!(parse_header("Wordle 1,024 X/6"), Some((1024, "X/6".to_string())));
        assert_eq!(parse_header("Wordle #1.024 x/6 *"), Some((1024, "X/6".to_string())));
        assert_eq!(parse_header("no header here"), None);
        assert_eq!(parse_header("Worldle #12 3/6"), None);
        assert_eq!(parse_header("a\nWordle 7 3/6\nWordle 8 2/6"), Some((7, "3/6".to_string())));
        assert!(looks_like_other_game("Quordle 123 5/9"));
        assert!(!looks_like_other_game("just chatting"));
    }
}
