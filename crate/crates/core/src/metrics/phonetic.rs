//! CMU-style pronouncing dictionary and perfect-rhyme test.

use std::collections::HashMap;
use std::path::Path;

use crate::error::{Error, Result};

const BUNDLED_CMUDICT: &str = include_str!("../../data/cmudict-5.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rhyme {
    Yes,
    No,
    Unknown,
}

impl Rhyme {
    /// 1 for a rhyme, 0 for none, `None` when either word is missing.
    pub fn as_value(self) -> Option<f64> {
        match self {
            Rhyme::Yes => Some(1.0),
            Rhyme::No => Some(0.0),
            Rhyme::Unknown => None,
        }
    }
}

/// Word -> pronunciations, each a phoneme sequence with stress digits on vowels.
#[derive(Clone, Debug, Default)]
pub struct PhoneticLexicon {
    entries: HashMap<String, Vec<Vec<String>>>,
}

impl PhoneticLexicon {
    /// Parses `WORD  PH PH ...` lines. `;;;` lines and `#` trailing comments
    /// are ignored; `WORD(2)` adds an alternate pronunciation. Words are
    /// stored lowercased.
    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let mut entries: HashMap<String, Vec<Vec<String>>> = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            if raw.starts_with(";;;") {
                continue;
            }
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let head = parts.next().expect("nonempty line");
            let word = match head.find('(') {
                Some(p) if head.ends_with(')') => &head[..p],
                _ => head,
            };
            let phones: Vec<String> = parts.map(str::to_string).collect();
            if phones.is_empty() {
                return Err(Error::format(source_name, i + 1, format!("{head} has no phonemes")));
            }
            for ph in &phones {
                if let Some(d) = ph.chars().last().filter(char::is_ascii_digit) {
                    if !matches!(d, '0' | '1' | '2') {
                        return Err(Error::format(source_name, i + 1, format!("bad stress digit in {ph}")));
                    }
                }
            }
            entries.entry(word.to_lowercase()).or_default().push(phones);
        }
        Ok(PhoneticLexicon { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        PhoneticLexicon::parse(&text, &path.display().to_string())
    }

    /// CMU dictionary entries for the bundled guessable words.
    pub fn bundled() -> Self {
        PhoneticLexicon::parse(BUNDLED_CMUDICT, "cmudict-5.txt").expect("bundled dictionary parses")
    }

    pub fn pronunciations(&self, word: &str) -> Option<&[Vec<String>]> {
        self.entries.get(word).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn stress(phone: &str) -> Option<char> {
    phone.chars().last().filter(char::is_ascii_digit)
}

/// Phonemes from the last primary-stressed vowel to the end, falling back to
/// the last secondary-stressed vowel, then the last vowel of any stress.
pub fn rhyme_tail(pron: &[String]) -> &[String] {
    let last_with = |pred: &dyn Fn(char) -> bool| pron.iter().rposition(|p| stress(p).is_some_and(pred));
    let start = last_with(&|d| d == '1')
        .or_else(|| last_with(&|d| d == '2'))
        .or_else(|| last_with(&|_| true))
        .unwrap_or(0);
    &pron[start..]
}

/// Whether any pair of pronunciations shares its rhyme tail. Identical
/// words count as rhyming.
pub fn is_perfect_rhyme(a: &str, b: &str, phon: &PhoneticLexicon) -> Rhyme {
    let (Some(pa), Some(pb)) = (phon.pronunciations(a), phon.pronunciations(b)) else {
        return Rhyme::Unknown;
    };
    let rhymes = pa
        .iter()
        .any(|x| pb.iter().any(|y| rhyme_tail(x) == rhyme_tail(y)));
    if rhymes {
        Rhyme::Yes
    } else {
        Rhyme::No
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DICT: &str = ";;; comment line\n\
        STALE  S T EY1 L\n\
        WHALE  W EY1 L\n\
        WHALE(2)  HH W EY1 L\n\
        SLUMS  S L AH1 M Z\n\
        CRANE  K R EY1 N\n\
        ABBEY  AE1 B IY0 # trailing note\n\
        ALOFT  AH0 L AO2 F T\n";

    fn dict() -> PhoneticLexicon {
        PhoneticLexicon::parse(DICT, "t").unwrap()
    }

    #[test]
    fn parse_handles_alternates_and_comments() {
        let d = dict();
        assert_eq!(d.len(), 6);
        assert_eq!(d.pronunciations("whale").unwrap().len(), 2);
        assert_eq!(d.pronunciations("abbey").unwrap()[0], ["AE1", "B", "IY0"]);
        assert!(PhoneticLexicon::parse("BAD  AE7 D\n", "t").is_err());
        assert!(PhoneticLexicon::parse("EMPTY\n", "t").is_err());
    }

    #[test]
    fn rhyme_examples() {
        let d = dict();
        assert_eq!(is_perfect_rhyme("stale", "whale", &d), Rhyme::Yes);
        assert_eq!(is_perfect_rhyme("stale", "slums", &d), Rhyme::No);
        assert_eq!(is_perfect_rhyme("crane", "crane", &d), Rhyme::Yes);
        assert_eq!(is_perfect_rhyme("crane", "qwert", &d), Rhyme::Unknown);
    }

    #[test]
    fn tail_fallbacks() {
        let p = |s: &str| s.split(' ').map(str::to_string).collect::<Vec<_>>();
        assert_eq!(rhyme_tail(&p("S T EY1 L")), &p("EY1 L")[..]);
        assert_eq!(rhyme_tail(&p("AH0 L AO2 F T")), &p("AO2 F T")[..]);
        assert_eq!(rhyme_tail(&p("AH0 L AH0 T")), &p("AH0 T")[..]);
        assert_eq!(rhyme_tail(&p("HH M")), &p("HH M")[..]);
    }

    #[test]
    fn bundled_has_common_words() {
        let d = PhoneticLexicon::bundled();
        assert_eq!(is_perfect_rhyme("stale", "whale", &d), Rhyme::Yes);
        assert_eq!(is_perfect_rhyme("stale", "slums", &d), Rhyme::No);
    }
}
