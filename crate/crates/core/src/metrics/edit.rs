use crate::word::Word;

/// Edit distance with unit-cost insertions, deletions and substitutions.
pub fn levenshtein_bytes(a: &[u8], b: &[u8]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

pub fn levenshtein(a: &Word, b: &Word) -> u32 {
    levenshtein_bytes(a.bytes(), b.bytes()) as u32
}

/// Number of positions holding different letters.
pub fn char_difference(a: &Word, b: &Word) -> u32 {
    a.bytes().iter().zip(b.bytes()).filter(|(x, y)| x != y).count() as u32
}

/// Size of the multiset intersection of the two words' letters.
pub fn shared_chars(a: &Word, b: &Word) -> u32 {
    let mut counts = [0i8; 26];
    for i in a.letter_indices() {
        counts[i] += 1;
    }
    let mut shared = 0;
    for i in b.letter_indices() {
        if counts[i] > 0 {
            counts[i] -= 1;
            shared += 1;
        }
    }
    shared
}
