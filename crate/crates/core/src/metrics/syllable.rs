//! Letter-level syllabification by sonority sequencing.

use crate::word::Word;

/// Sonority level per letter. Vowels sit strictly above every other class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SonorityHierarchy {
    levels: [u8; 26],
    vowels: [bool; 26],
}

impl Default for SonorityHierarchy {
    /// Vowels (`a e i o u y`) 4, nasals (`m n`) 3, fricatives
    /// (`f v s z h`) 2, everything else 1.
    fn default() -> Self {
        SonorityHierarchy::from_classes(&["aeiouy", "mn", "fvszh"]).expect("default hierarchy is valid")
    }
}

impl SonorityHierarchy {
    /// Builds a hierarchy from letter classes, most sonorous first. The first
    /// class is the vowel set. Letters in no class get the lowest level.
    pub fn from_classes(classes: &[&str]) -> Result<Self, String> {
        let Some(vowel_class) = classes.first().filter(|c| !c.is_empty()) else {
            return Err("the vowel class must be nonempty".into());
        };
        let top = classes.len() as u8 + 1;
        let mut levels = [1u8; 26];
        let mut seen = [false; 26];
        for (rank, class) in classes.iter().enumerate() {
            for c in class.chars() {
                if !c.is_ascii_lowercase() {
                    return Err(format!("{c:?} is not a lowercase letter"));
                }
                let i = (c as u8 - b'a') as usize;
                if seen[i] {
                    return Err(format!("{c:?} appears in two classes"));
                }
                seen[i] = true;
                levels[i] = top - rank as u8;
            }
        }
        let mut vowels = [false; 26];
        for c in vowel_class.chars() {
            vowels[(c as u8 - b'a') as usize] = true;
        }
        Ok(SonorityHierarchy { levels, vowels })
    }

    pub fn level(&self, letter: u8) -> u8 {
        self.levels[(letter - b'a') as usize]
    }

    pub fn is_vowel(&self, letter: u8) -> bool {
        self.vowels[(letter - b'a') as usize]
    }
}

/// Splits a word into syllable-like tokens.
///
/// Each interior letter is compared with its neighbours' sonority: a letter
/// strictly less sonorous than both starts a new token (so a single
/// consonant between vowels goes to the right); a letter at a falling-then-
/// flat point closes the current token. Tokens without a vowel are merged
/// into their neighbour. Words with at most one vowel come back whole.
pub fn syllabify(word: &Word, hierarchy: &SonorityHierarchy) -> Vec<String> {
    syllabify_str(word.as_str(), hierarchy)
}

pub(crate) fn syllabify_str(word: &str, hierarchy: &SonorityHierarchy) -> Vec<String> {
    let letters = word.as_bytes();
    let vowel_count = letters.iter().filter(|&&c| hierarchy.is_vowel(c)).count();
    if vowel_count <= 1 || letters.len() < 3 {
        return vec![word.to_string()];
    }
    let levels: Vec<u8> = letters.iter().map(|&c| hierarchy.level(c)).collect();
    let mut pieces: Vec<String> = Vec::new();
    let mut current = String::new();
    current.push(letters[0] as char);
    for i in 1..letters.len() - 1 {
        let (prev, focal, next) = (levels[i - 1], levels[i], levels[i + 1]);
        let c = letters[i] as char;
        if prev >= focal && focal == next {
            current.push(c);
            pieces.push(std::mem::take(&mut current));
        } else if prev > focal && focal < next {
            pieces.push(std::mem::take(&mut current));
            current.push(c);
        } else {
            current.push(c);
        }
    }
    current.push(letters[letters.len() - 1] as char);
    pieces.push(current);
    merge_vowelless(pieces, hierarchy)
}

fn merge_vowelless(pieces: Vec<String>, hierarchy: &SonorityHierarchy) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut front = String::new();
    for piece in pieces {
        if piece.is_empty() {
            continue;
        }
        let has_vowel = piece.bytes().any(|c| hierarchy.is_vowel(c));
        if has_vowel {
            if out.is_empty() {
                out.push(std::mem::take(&mut front) + &piece);
            } else {
                out.push(piece);
            }
        } else if let Some(last) = out.last_mut() {
            last.push_str(&piece);
        } else {
            front.push_str(&piece);
        }
    }
    if !front.is_empty() {
        out.push(front);
    }
    out
}

/// Size of the multiset intersection of the two words' syllable tokens.
pub fn shared_syllables(a: &Word, b: &Word, hierarchy: &SonorityHierarchy) -> u32 {
    let mut left = syllabify(a, hierarchy);
    let right = syllabify(b, hierarchy);
    let mut shared = 0;
    for token in right {
        if let Some(pos) = left.iter().position(|t| *t == token) {
            left.swap_remove(pos);
            shared += 1;
        }
    }
    shared
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::new(s).unwrap()
    }

    fn syl(s: &str) -> Vec<String> {
        syllabify(&w(s), &SonorityHierarchy::default())
    }

    #[test]
    fn examples() {
        assert_eq!(syl("salet"), ["sa", "let"]);
        assert_eq!(syl("crane"), ["cra", "ne"]);
        assert_eq!(syl("bcdfg"), ["bcdfg"]);
        assert_eq!(syl("crumb"), ["crumb"]);
        assert_eq!(syl("salad"), ["sa", "lad"]);
    }

    #[test]
    fn shared_examples() {
        let h = SonorityHierarchy::default();
        assert_eq!(shared_syllables(&w("salet"), &w("salad"), &h), 1);
        assert_eq!(shared_syllables(&w("salet"), &w("crumb"), &h), 0);
        assert_eq!(shared_syllables(&w("salet"), &w("salet"), &h), 2);
    }

    #[test]
    fn hierarchy_levels() {
        let h = SonorityHierarchy::default();
        assert_eq!(h.level(b'a'), 4);
        assert_eq!(h.level(b'y'), 4);
        assert_eq!(h.level(b'n'), 3);
        assert_eq!(h.level(b's'), 2);
        assert_eq!(h.level(b't'), 1);
        assert!(SonorityHierarchy::from_classes(&[]).is_err());
        assert!(SonorityHierarchy::from_classes(&["ae", "a"]).is_err());
    }

    #[test]
    fn merges_leading_vowelless_piece() {
        let h = SonorityHierarchy::default();
        // "ss" plateau closes a vowelless piece that must merge forward
        assert_eq!(syllabify_str("sstaxe", &h).concat(), "sstaxe");
        for t in syllabify_str("sstaxe", &h) {
            assert!(t.bytes().any(|c| h.is_vowel(c)), "{t}");
        }
    }
}
