//! Cleaning shared games out of newline-delimited JSON post dumps.
//!
//! Each input line is one JSON object. Comments carry their text in `body`;
//! submissions in `title` and `selftext`. A post may contain several
//! `Wordle <id> <k>/6` headers; each header and the guess lines that follow
//! it (up to the next header) is cleaned as its own game.

mod extract;

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::word::Word;

pub use extract::{extract_guess_lines, is_solved_row, parse_header};

pub const MAX_GUESSES: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPost {
    pub id: String,
    pub text: String,
    /// `file:line` of the post in its dump.
    pub source: String,
    pub author: Option<String>,
}

/// One cleaned human game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameRecord {
    pub game_id: String,
    pub wordle_id: u32,
    pub answer: Word,
    pub guesses: Vec<Word>,
    pub player_id: Option<String>,
}

impl GameRecord {
    /// Checks `1 <= guesses <= 6` and that the last guess is the answer.
    pub fn new(
        game_id: impl Into<String>,
        wordle_id: u32,
        answer: Word,
        guesses: Vec<Word>,
        player_id: Option<String>,
    ) -> Result<Self> {
        let game_id = game_id.into();
        if guesses.is_empty() || guesses.len() > MAX_GUESSES {
            return Err(Error::Config(format!(
                "game {game_id}: {} guesses, expected 1 to {MAX_GUESSES}",
                guesses.len()
            )));
        }
        if guesses.last() != Some(&answer) {
            return Err(Error::Config(format!("game {game_id}: last guess is not the answer {answer}")));
        }
        Ok(GameRecord {
            game_id,
            wordle_id,
            answer,
            guesses,
            player_id,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RejectionReason {
    NoWordleId,
    AnswerMismatch,
    Unsolved,
    MalformedGuess,
    NoGuesses,
    NonWordleGame,
}

impl RejectionReason {
    pub const ALL: [RejectionReason; 6] = [
        RejectionReason::NoWordleId,
        RejectionReason::AnswerMismatch,
        RejectionReason::Unsolved,
        RejectionReason::MalformedGuess,
        RejectionReason::NoGuesses,
        RejectionReason::NonWordleGame,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RejectionReason::NoWordleId => "noWordleId",
            RejectionReason::AnswerMismatch => "answerMismatch",
            RejectionReason::Unsolved => "unsolved",
            RejectionReason::MalformedGuess => "malformedGuess",
            RejectionReason::NoGuesses => "noGuesses",
            RejectionReason::NonWordleGame => "nonWordleGame",
        }
    }
}

impl fmt::Display for RejectionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Wordle id -> official answer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnswerDatabase {
    answers: BTreeMap<u32, Word>,
}

impl AnswerDatabase {
    pub fn new(answers: impl IntoIterator<Item = (u32, Word)>) -> Self {
        AnswerDatabase {
            answers: answers.into_iter().collect(),
        }
    }

    pub fn get(&self, wordle_id: u32) -> Option<Word> {
        self.answers.get(&wordle_id).copied()
    }

    pub fn len(&self) -> usize {
        self.answers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.answers.is_empty()
    }

    /// Reads a `wordle_id,answer` CSV with a header row.
    pub fn load(path: &Path) -> Result<Self> {
        let mut reader = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
        let mut answers = BTreeMap::new();
        for (i, row) in reader.records().enumerate() {
            let row = row.map_err(|e| Error::csv(path, e))?;
            let line = i + 2;
            let src = path.display().to_string();
            let id: u32 = row
                .get(0)
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| Error::format(&src, line, "bad wordle_id"))?;
            let answer = Word::parse_loose(row.get(1).unwrap_or(""))
                .map_err(|e| Error::format(&src, line, e.to_string()))?;
            answers.insert(id, answer);
        }
        Ok(AnswerDatabase { answers })
    }
}

/// Per-reason rejection counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RejectionTally {
    counts: BTreeMap<RejectionReason, usize>,
}

impl RejectionTally {
    pub fn add(&mut self, reason: RejectionReason) {
        *self.counts.entry(reason).or_insert(0) += 1;
    }

    pub fn get(&self, reason: RejectionReason) -> usize {
        self.counts.get(&reason).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn merge(&mut self, other: &RejectionTally) {
        for (&r, &n) in &other.counts {
            *self.counts.entry(r).or_insert(0) += n;
        }
    }

    /// Nonzero entries only, in reason order.
    pub fn nonzero(&self) -> Vec<(RejectionReason, usize)> {
        self.counts.iter().filter(|(_, &n)| n > 0).map(|(&r, &n)| (r, n)).collect()
    }
}

/// Splits post text into one slice per game header. Text before the first
/// header is dropped; a post with no header is a single headerless game.
fn split_games(text: &str) -> Vec<(Option<u32>, &str)> {
    let headers = extract::header_matches(text);
    if headers.is_empty() {
        return vec![(None, text)];
    }
    headers
        .iter()
        .enumerate()
        .map(|(i, (start, id, _))| {
            let end = headers.get(i + 1).map_or(text.len(), |h| h.0);
            (Some(*id), &text[*start..end])
        })
        .collect()
}

fn clean_game(
    game_id: String,
    wordle_id: Option<u32>,
    segment: &str,
    author: Option<&String>,
    db: &AnswerDatabase,
    lexicon: &Lexicon,
) -> std::result::Result<GameRecord, RejectionReason> {
    let Some(wordle_id) = wordle_id else {
        return Err(if extract::looks_like_other_game(segment) {
            RejectionReason::NonWordleGame
        } else {
            RejectionReason::NoWordleId
        });
    };
    let lines = extract_guess_lines(segment);
    if lines.is_empty() {
        return Err(RejectionReason::NoGuesses);
    }
    let guesses: Vec<Word> = lines
        .iter()
        .map(|(_, w)| Word::new(w).ok().filter(|w| lexicon.is_guessable(w)))
        .collect::<Option<_>>()
        .ok_or(RejectionReason::MalformedGuess)?;
    if guesses.len() > MAX_GUESSES {
        return Err(RejectionReason::MalformedGuess);
    }
    let (last_squares, _) = lines.last().expect("nonempty");
    if !is_solved_row(last_squares) {
        return Err(RejectionReason::Unsolved);
    }
    let answer = db.get(wordle_id).ok_or(RejectionReason::NoWordleId)?;
    if guesses.last() != Some(&answer) {
        return Err(RejectionReason::AnswerMismatch);
    }
    Ok(GameRecord::new(game_id, wordle_id, answer, guesses, author.cloned()).expect("cleaned game satisfies record invariants"))
}

/// Cleans every game in a post. Most posts hold exactly one game.
///
/// Checks run in order: missing header (`nonWordleGame` when another daily
/// game's score line is present, else `noWordleId`), no guess lines,
/// guesses outside the guessable list or more than six of them, a final
/// row that is not all green, an id absent from the answer database, and a
/// final guess that differs from the recorded answer.
pub fn clean(
    post: &RawPost,
    db: &AnswerDatabase,
    lexicon: &Lexicon,
) -> Vec<std::result::Result<GameRecord, RejectionReason>> {
    let games = split_games(&post.text);
    let multi = games.len() > 1;
    games
        .into_iter()
        .enumerate()
        .map(|(i, (wordle_id, segment))| {
            let game_id = if multi {
                format!("{}#{}", post.id, i + 1)
            } else {
                post.id.clone()
            };
            clean_game(game_id, wordle_id, segment, post.author.as_ref(), db, lexicon)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IngestOptions {
    /// Fail on the first undecodable line instead of skipping it.
    pub strict: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IngestOutcome {
    pub records: Vec<GameRecord>,
    pub rejections: RejectionTally,
    pub posts_scanned: usize,
    /// Games considered; equals `posts_scanned` unless posts hold several.
    pub games_scanned: usize,
    /// Lines that were not JSON objects or had no text.
    pub skipped_lines: usize,
}

impl IngestOutcome {
    pub fn merge(&mut self, other: IngestOutcome) {
        self.records.extend(other.records);
        self.rejections.merge(&other.rejections);
        self.posts_scanned += other.posts_scanned;
        self.games_scanned += other.games_scanned;
        self.skipped_lines += other.skipped_lines;
    }
}

fn field<'v>(obj: &'v Value, key: &str) -> Option<&'v str> {
    obj.get(key).and_then(Value::as_str).filter(|s| !s.is_empty())
}

/// Decodes one dump line into a post. `Ok(None)` means there was no text.
pub fn parse_post(line: &str, source: String, fallback_id: String) -> std::result::Result<Option<RawPost>, String> {
    let value: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
    if !value.is_object() {
        return Err("not a JSON object".into());
    }
    let text = match field(&value, "body") {
        Some(body) => body.to_string(),
        None => [field(&value, "title"), field(&value, "selftext")]
            .into_iter()
            .flatten()
            .collect::<Vec<_>>()
            .join("\n"),
    };
    if text.trim().is_empty() {
        return Ok(None);
    }
    let id = field(&value, "id").map(str::to_string).unwrap_or(fallback_id);
    let author = field(&value, "author").map(str::to_string);
    Ok(Some(RawPost {
        id,
        text,
        source,
        author,
    }))
}

/// Streams a dump file and cleans every post, preserving file order.
pub fn ingest_dump(path: &Path, db: &AnswerDatabase, lexicon: &Lexicon, options: IngestOptions) -> Result<IngestOutcome> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let name = path.display().to_string();
    let mut outcome = IngestOutcome::default();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let post = match parse_post(&line, format!("{name}:{lineno}"), format!("line{lineno}")) {
            Ok(Some(post)) => post,
            Ok(None) => {
                outcome.skipped_lines += 1;
                continue;
            }
            Err(msg) if options.strict => return Err(Error::format(&name, lineno, msg)),
            Err(_) => {
                outcome.skipped_lines += 1;
                continue;
            }
        };
        outcome.posts_scanned += 1;
        for result in clean(&post, db, lexicon) {
            outcome.games_scanned += 1;
            match result {
                Ok(record) => outcome.records.push(record),
                Err(reason) => outcome.rejections.add(reason),
            }
        }
    }
    Ok(outcome)
}

const RECORD_HEADER: [&str; 9] = [
    "game_id", "wordle_id", "answer", "guess_1", "guess_2", "guess_3", "guess_4", "guess_5", "guess_6",
];

pub fn write_records(path: &Path, records: &[GameRecord]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(RECORD_HEADER).map_err(|e| Error::csv(path, e))?;
    for r in records {
        let mut row = vec![r.game_id.clone(), r.wordle_id.to_string(), r.answer.to_string()];
        row.extend((0..MAX_GUESSES).map(|i| r.guesses.get(i).map(Word::to_string).unwrap_or_default()));
        w.write_record(&row).map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn read_records(path: &Path) -> Result<Vec<GameRecord>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
    let src = path.display().to_string();
    let mut out = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row.map_err(|e| Error::csv(path, e))?;
        let line = i + 2;
        let bad = |msg: String| Error::format(&src, line, msg);
        if row.len() != RECORD_HEADER.len() {
            return Err(bad(format!("expected {} columns, got {}", RECORD_HEADER.len(), row.len())));
        }
        let wordle_id = row[1].parse().map_err(|_| bad(format!("bad wordle_id {:?}", &row[1])))?;
        let answer = Word::new(&row[2]).map_err(|e| bad(e.to_string()))?;
        let guesses = (3..9)
            .map(|c| &row[c])
            .filter(|s| !s.is_empty())
            .map(|s| Word::new(s).map_err(|e| bad(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        out.push(GameRecord::new(&row[0], wordle_id, answer, guesses, None).map_err(|e| bad(e.to_string()))?);
    }
    Ok(out)
}

pub fn write_tally(path: &Path, outcome: &IngestOutcome) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    let io = |e| Error::csv(path, e);
    w.write_record(["reason", "count"]).map_err(io)?;
    for r in RejectionReason::ALL {
        w.write_record([r.name(), &outcome.rejections.get(r).to_string()]).map_err(io)?;
    }
    w.write_record(["kept", &outcome.records.len().to_string()]).map_err(io)?;
    w.write_record(["skippedLine", &outcome.skipped_lines.to_string()]).map_err(io)?;
    w.flush().map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: &str = "\u{1F7E9}";
    const Y: &str = "\u{1F7E8}";
    const B: &str = "\u{2B1B}";

    fn w(s: &str) -> Word {
        Word::new(s).unwrap()
    }

    fn lexicon() -> Lexicon {
        let words: Vec<Word> = ["stale", "slums", "crane", "crate", "abbey"].iter().map(|s| w(s)).collect();
        Lexicon::new(words.clone(), words).unwrap()
    }

    fn db() -> AnswerDatabase {
        AnswerDatabase::new([(1, w("slums")), (2, w("crate"))])
    }

    fn post(text: &str) -> RawPost {
        RawPost {
            id: "p".into(),
            text: text.into(),
            source: "t:1".into(),
            author: Some("u".into()),
        }
    }

    fn row(squares: &str, word: &str) -> String {
        format!("{squares} &gt;!{word}!&lt;\n")
    }

    fn one(text: &str) -> std::result::Result<GameRecord, RejectionReason> {
        let mut v = clean(&post(text), &db(), &lexicon());
        assert_eq!(v.len(), 1);
        v.remove(0)
    }

    #[test]
    fn kept_when_last_guess_matches() {
        let text = format!("Wordle 1 2/6\n{}{}", row(&format!("{G}{B}{B}{Y}{B}"), "STALE"), row(&G.repeat(5), "SLUMS"));
        let rec = one(&text).unwrap();
        assert_eq!(rec.guesses, vec![w("stale"), w("slums")]);
        assert_eq!(rec.answer, w("slums"));
        assert_eq!(rec.player_id.as_deref(), Some("u"));
    }

    #[test]
    fn rejection_reasons() {
        let solved = row(&G.repeat(5), "slums");
        assert_eq!(one(&solved), Err(RejectionReason::NoWordleId));
        assert_eq!(one(&format!("Quordle 5 7/9\n{solved}")), Err(RejectionReason::NonWordleGame));
        assert_eq!(one("Wordle 1 3/6 no grid"), Err(RejectionReason::NoGuesses));
        assert_eq!(
            one(&format!("Wordle 1 2/6\n{}{solved}", row(&B.repeat(5), "zzzzz"))),
            Err(RejectionReason::MalformedGuess)
        );
        assert_eq!(
            one(&format!("Wordle 1 X/6\n{}", row(&B.repeat(5), "crane"))),
            Err(RejectionReason::Unsolved)
        );
        assert_eq!(
            one(&format!("Wordle 2 1/6\n{}", row(&G.repeat(5), "crane"))),
            Err(RejectionReason::AnswerMismatch)
        );
        assert_eq!(one(&format!("Wordle 9 1/6\n{solved}")), Err(RejectionReason::NoWordleId));
    }

    #[test]
    fn multiple_games_in_one_post() {
        let text = format!(
            "Wordle 1 1/6\n{}\nWordle 2 1/6\n{}",
            row(&G.repeat(5), "slums"),
            row(&G.repeat(5), "crate")
        );
        let results = clean(&post(&text), &db(), &lexicon());
        assert_eq!(results.len(), 2);
        assert_eq!(results[0].as_ref().unwrap().game_id, "p#1");
        assert_eq!(results[1].as_ref().unwrap().answer, w("crate"));
    }

    #[test]
    fn parse_post_fields() {
        let p = parse_post(r#"{"id":"c1","body":"hi","author":"a"}"#, "f:1".into(), "x".into())
            .unwrap()
            .unwrap();
        assert_eq!((p.id.as_str(), p.text.as_str()), ("c1", "hi"));
        let p = parse_post(r#"{"title":"T","selftext":"S"}"#, "f:2".into(), "line2".into())
            .unwrap()
            .unwrap();
        assert_eq!((p.id.as_str(), p.text.as_str()), ("line2", "T\nS"));
        assert_eq!(parse_post(r#"{"body":""}"#, "f".into(), "x".into()).unwrap(), None);
        assert!(parse_post("not json", "f".into(), "x".into()).is_err());
        assert!(parse_post("[1,2]", "f".into(), "x".into()).is_err());
    }

    #[test]
    fn record_invariants() {
        assert!(GameRecord::new("g", 1, w("crane"), vec![], None).is_err());
        assert!(GameRecord::new("g", 1, w("crane"), vec![w("crate")], None).is_err());
        assert!(GameRecord::new("g", 1, w("crane"), vec![w("crane"); 7], None).is_err());
        assert!(GameRecord::new("g", 1, w("crane"), vec![w("crate"), w("crane")], None).is_ok());
    }
}
