use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const WORD_LEN: usize = 5;

/// A five-letter lowercase word, stored as ASCII bytes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word([u8; WORD_LEN]);

impl Word {
    pub fn new(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if bytes.len() != WORD_LEN {
            return Err(Error::InvalidWord {
                input: s.to_string(),
                reason: "expected exactly 5 letters",
            });
        }
        if !bytes.iter().all(u8::is_ascii_lowercase) {
            return Err(Error::InvalidWord {
                input: s.to_string(),
                reason: "expected lowercase a-z only",
            });
        }
        let mut letters = [0u8; WORD_LEN];
        letters.copy_from_slice(bytes);
        Ok(Word(letters))
    }

    /// Like [`Word::new`] but lowercases ASCII letters first.
    pub fn parse_loose(s: &str) -> Result<Self> {
        Word::new(&s.trim().to_ascii_lowercase())
    }

    pub fn bytes(&self) -> &[u8; WORD_LEN] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // Only constructed from validated ASCII.
        std::str::from_utf8(&self.0).expect("word bytes are ASCII")
    }

    /// Letter indices 0..26.
    pub(crate) fn letter_indices(&self) -> [usize; WORD_LEN] {
        self.0.map(|b| (b - b'a') as usize)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.as_str())
    }
}

impl AsRef<str> for Word {
    fn as_ref(&self) -> &str {
        self.as_str()
    }
}
