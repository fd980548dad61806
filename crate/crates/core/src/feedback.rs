//! Tile feedback and its canonical base-3 encoding.
//!
//! A pattern is encoded as `sum(t_i * 3^(4 - i))` with black = 0, yellow = 1
//! and green = 2, so the leftmost tile is the most significant digit and the
//! all-green pattern is 242.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Word, WORD_LEN};

pub const PATTERN_COUNT: usize = 243;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Tile {
    Black = 0,
    Yellow = 1,
    Green = 2,
}

impl Tile {
    fn from_digit(d: u8) -> Tile {
        match d {
            0 => Tile::Black,
            1 => Tile::Yellow,
            _ => Tile::Green,
        }
    }

    fn from_char(c: char) -> Option<Tile> {
        match c.to_ascii_lowercase() {
            'b' => Some(Tile::Black),
            'y' => Some(Tile::Yellow),
            'g' => Some(Tile::Green),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Tile::Black => 'B',
            Tile::Yellow => 'Y',
            Tile::Green => 'G',
        }
    }
}

/// Feedback for one guess, stored as its code in `0..243`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FeedbackPattern(u8);

impl FeedbackPattern {
    pub const ALL_BLACK: FeedbackPattern = FeedbackPattern(0);
    pub const ALL_GREEN: FeedbackPattern = FeedbackPattern(242);

    pub fn from_code(code: u32) -> Result<Self> {
        if code < PATTERN_COUNT as u32 {
            Ok(FeedbackPattern(code as u8))
        } else {
            Err(Error::PatternOutOfRange(code))
        }
    }

    /// Caller guarantees `code < 243`.
    pub(crate) const fn from_code_unchecked(code: u8) -> Self {
        FeedbackPattern(code)
    }

    pub fn from_tiles(tiles: [Tile; WORD_LEN]) -> Self {
        FeedbackPattern(encode_pattern(&tiles))
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn tiles(self) -> [Tile; WORD_LEN] {
        let mut tiles = [Tile::Black; WORD_LEN];
        let mut rest = self.0;
        for slot in tiles.iter_mut().rev() {
            *slot = Tile::from_digit(rest % 3);
            rest /= 3;
        }
        tiles
    }

    pub fn is_solved(self) -> bool {
        self == Self::ALL_GREEN
    }
}

impl FromStr for FeedbackPattern {
    type Err = Error;

    /// Parses five characters from `{g, y, b}` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != WORD_LEN {
            return Err(Error::PatternParse(s.to_string()));
        }
        let mut tiles = [Tile::Black; WORD_LEN];
        for (slot, c) in tiles.iter_mut().zip(chars) {
            *slot = Tile::from_char(c).ok_or_else(|| Error::PatternParse(s.to_string()))?;
        }
        Ok(FeedbackPattern::from_tiles(tiles))
    }
}

impl fmt::Display for FeedbackPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.tiles() {
            write!(f, "{}", t.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FeedbackPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FeedbackPattern({self}={})", self.0)
    }
}

pub fn encode_pattern(tiles: &[Tile; WORD_LEN]) -> u8 {
    tiles.iter().fold(0u8, |acc, &t| acc * 3 + t as u8)
}

pub fn decode_pattern(code: u32) -> Result<[Tile; WORD_LEN]> {
    FeedbackPattern::from_code(code).map(FeedbackPattern::tiles)
}

const POWERS: [u8; WORD_LEN] = [81, 27, 9, 3, 1];

/// Scores `guess` against `answer`.
///
/// Greens are assigned first and consume the answer's letter counts; the
/// remaining guess letters are then scanned left to right and turn yellow
/// while unmatched copies of that letter are still available.
pub fn compute_feedback(guess: &Word, answer: &Word) -> FeedbackPattern {
    let g = guess.bytes();
    let a = answer.bytes();
    let mut available = [0u8; 26];
    let mut code = 0u8;
    for i in 0..WORD_LEN {
        if g[i] == a[i] {
            code += 2 * POWERS[i];
        } else {
            available[(a[i] - b'a') as usize] += 1;
        }
    }
    for i in 0..WORD_LEN {
        if g[i] != a[i] {
            let slot = &mut available[(g[i] - b'a') as usize];
            if *slot > 0 {
                *slot -= 1;
                code += POWERS[i];
            }
        }
    }
    FeedbackPattern(code)
}

/// Green/yellow/black tile counts of a pattern, keyed as `"XgYyZb"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateBucket {
    pub greens: u8,
    pub yellows: u8,
    pub blacks: u8,
}

pub fn bucket_key(pattern: FeedbackPattern) -> StateBucket {
    let mut bucket = StateBucket {
        greens: 0,
        yellows: 0,
        blacks: 0,
    };
    for t in pattern.tiles() {
        match t {
            Tile::Green => bucket.greens += 1,
            Tile::Yellow => bucket.yellows += 1,
            Tile::Black => bucket.blacks += 1,
        }
    }
    bucket
}

impl StateBucket {
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for StateBucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}g{}y{}b", self.greens, self.yellows, self.blacks)
    }
}

impl FromStr for StateBucket {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::StateKeyParse(s.to_string());
        let b = s.as_bytes();
        if b.len() != 6 || b[1] != b'g' || b[3] != b'y' || b[5] != b'b' {
            return Err(err());
        }
        let digit = |c: u8| -> Result<u8> {
            if c.is_ascii_digit() {
                Ok(c - b'0')
            } else {
                Err(err())
            }
        };
        let bucket = StateBucket {
            greens: digit(b[0])?,
            yellows: digit(b[2])?,
            blacks: digit(b[4])?,
        };
        if bucket.greens + bucket.yellows + bucket.blacks != WORD_LEN as u8 {
            return Err(err());
        }
        Ok(bucket)
    }
}
