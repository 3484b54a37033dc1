//! Vincular patterns of length 3 and occurrence counting.
//!
//! A vincular pattern is written as dash-separated blocks of digits: letters
//! inside a block must be adjacent in any occurrence, dashes break adjacency.
//! `"1-2-3"` is the classical pattern 123, `"132"` the consecutive pattern
//! (all three letters adjacent), and `"1-32"` requires only the last two
//! letters of an occurrence to be adjacent.

use std::fmt;
use std::str::FromStr;

use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternError {
    Empty,
    EmptyBlock,
    BadCharacter(char),
    LetterOutOfRange(u8),
    RepeatedLetter(u8),
    WrongLength(usize),
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::Empty => write!(f, "empty pattern"),
            PatternError::EmptyBlock => write!(f, "empty block between dashes"),
            PatternError::BadCharacter(c) => write!(f, "unexpected character `{c}` in pattern"),
            PatternError::LetterOutOfRange(l) => write!(f, "pattern letter {l} outside 1..=3"),
            PatternError::RepeatedLetter(l) => write!(f, "pattern letter {l} repeated"),
            PatternError::WrongLength(n) => write!(f, "pattern has {n} letters, expected 3"),
        }
    }
}

impl std::error::Error for PatternError {}

/// A length-3 pattern with distinct letters `1..=3` plus adjacency (glue)
/// constraints between consecutive pattern positions. `glue[i]` is true iff
/// pattern positions `i` and `i + 1` must be adjacent in an occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    letters: [u8; 3],
    glue: [bool; 2],
}

impl VincularPattern {
    pub fn new(letters: [u8; 3], glue: [bool; 2]) -> Result<VincularPattern, PatternError> {
        let mut seen = [false; 4];
        for &l in &letters {
            if l == 0 || l > 3 {
                return Err(PatternError::LetterOutOfRange(l));
            }
            if seen[l as usize] {
                return Err(PatternError::RepeatedLetter(l));
            }
            seen[l as usize] = true;
        }
        Ok(VincularPattern { letters, glue })
    }

    pub fn letters(&self) -> [u8; 3] {
        self.letters
    }

    pub fn glue(&self) -> [bool; 2] {
        self.glue
    }

    /// No adjacency constraints at all.
    pub fn is_classical(&self) -> bool {
        !self.glue[0] && !self.glue[1]
    }

    /// All letters glued; occurrences are contiguous factors.
    pub fn is_consecutive(&self) -> bool {
        self.glue[0] && self.glue[1]
    }

    /// The pattern matched by reversed words: letters and glue reversed.
    pub fn reverse(&self) -> VincularPattern {
        VincularPattern {
            letters: [self.letters[2], self.letters[1], self.letters[0]],
            glue: [self.glue[1], self.glue[0]],
        }
    }

    /// The pattern matched by complemented words: letters mapped through
    /// `x -> 4 - x`, glue unchanged.
    pub fn complement(&self) -> VincularPattern {
        VincularPattern {
            letters: [
                4 - self.letters[0],
                4 - self.letters[1],
                4 - self.letters[2],
            ],
            glue: self.glue,
        }
    }
}

impl FromStr for VincularPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, PatternError> {
        if s.is_empty() {
            return Err(PatternError::Empty);
        }
        let mut letters = Vec::new();
        let mut glue = Vec::new();
        for block in s.split('-') {
            if block.is_empty() {
                return Err(PatternError::EmptyBlock);
            }
            for (i, c) in block.chars().enumerate() {
                let d = c.to_digit(10).ok_or(PatternError::BadCharacter(c))? as u8;
                letters.push(d);
                if i > 0 {
                    // within a block: glued to the previous letter
                    glue.push(true);
                }
            }
            glue.push(false); // dash after the block
        }
        glue.pop(); // no dash after the last block
        if letters.len() != 3 {
            return Err(PatternError::WrongLength(letters.len()));
        }
        VincularPattern::new([letters[0], letters[1], letters[2]], [glue[0], glue[1]])
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters[0])?;
        if !self.glue[0] {
            write!(f, "-")?;
        }
        write!(f, "{}", self.letters[1])?;
        if !self.glue[1] {
            write!(f, "-")?;
        }
        write!(f, "{}", self.letters[2])
    }
}

/// The 6 consecutive patterns, in lexicographic letter order.
pub fn consecutive_patterns() -> Vec<VincularPattern> {
    patterns_with_glue([true, true])
}

/// The 6 classical patterns.
pub fn classical_patterns() -> Vec<VincularPattern> {
    patterns_with_glue([false, false])
}

/// The 18 patterns with at least one glued adjacency: consecutive, `x-yz`,
/// and `xy-z` forms.
pub fn glued_patterns() -> Vec<VincularPattern> {
    let mut out = patterns_with_glue([true, true]);
    out.extend(patterns_with_glue([false, true]));
    out.extend(patterns_with_glue([true, false]));
    out
}

/// All 24 distinct length-3 patterns: 18 glued plus 6 classical.
pub fn all_patterns() -> Vec<VincularPattern> {
    let mut out = glued_patterns();
    out.extend(classical_patterns());
    out
}

fn patterns_with_glue(glue: [bool; 2]) -> Vec<VincularPattern> {
    let perms = [
        [1, 2, 3],
        [1, 3, 2],
        [2, 1, 3],
        [2, 3, 1],
        [3, 1, 2],
        [3, 2, 1],
    ];
    perms
        .iter()
        .map(|&letters| VincularPattern { letters, glue })
        .collect()
}

fn order_isomorphic(triple: [u8; 3], letters: [u8; 3]) -> bool {
    for a in 0..3 {
        for b in (a + 1)..3 {
            let want = letters[a].cmp(&letters[b]);
            if triple[a].cmp(&triple[b]) != want {
                return false;
            }
        }
    }
    true
}

/// Number of index triples `i < j < l` realizing `p` in `w`: the host letters
/// must be order-isomorphic to the pattern letters (strict inequalities) and
/// glued pattern positions must map to adjacent host positions.
pub fn count_occurrences(w: &Word, p: &VincularPattern) -> u64 {
    count_occurrences_in(w.letters(), p)
}

pub(crate) fn count_occurrences_in(letters: &[u8], p: &VincularPattern) -> u64 {
    count_generic(letters, &p.letters, &p.glue, &mut Vec::with_capacity(3), 0)
}

/// Backtracking occurrence counter over any pattern length; only length 3 is
/// exposed. A partial choice of positions is extended only while its letters
/// stay order-isomorphic to the matching pattern prefix, which is sound
/// because isomorphism is a pairwise condition.
fn count_generic(
    word: &[u8],
    pattern: &[u8],
    glue: &[bool],
    chosen: &mut Vec<usize>,
    start: usize,
) -> u64 {
    let depth = chosen.len();
    if depth == pattern.len() {
        return 1;
    }
    let candidates: std::ops::Range<usize> = if depth > 0 && glue[depth - 1] {
        let next = chosen[depth - 1] + 1;
        next..next + 1
    } else {
        start..word.len()
    };
    let mut total = 0;
    for pos in candidates {
        if pos >= word.len() {
            break;
        }
        let extends = chosen
            .iter()
            .enumerate()
            .all(|(a, &pa)| word[pa].cmp(&word[pos]) == pattern[a].cmp(&pattern[depth]));
        if extends {
            chosen.push(pos);
            total += count_generic(word, pattern, glue, chosen, pos + 1);
            chosen.pop();
        }
    }
    total
}

/// True iff `w` contains no occurrence of `p`.
pub fn avoids(w: &Word, p: &VincularPattern) -> bool {
    !contains_in(w.letters(), p)
}

pub(crate) fn contains_in(letters: &[u8], p: &VincularPattern) -> bool {
    let n = letters.len();
    (3..=n).any(|m| completes_occurrence(&letters[..m], p))
}

/// Does some occurrence of `p` end exactly at the last position of `prefix`?
/// This is the pruning test for depth-first extension: a prefix contains `p`
/// iff one of its extension steps completed an occurrence.
pub(crate) fn completes_occurrence(prefix: &[u8], p: &VincularPattern) -> bool {
    let n = prefix.len();
    if n < 3 {
        return false;
    }
    let last = n - 1;
    let check = |a: usize, b: usize| -> bool {
        order_isomorphic([prefix[a], prefix[b], prefix[last]], p.letters)
    };
    match p.glue {
        [true, true] => check(last - 2, last - 1),
        [false, true] => (0..last - 1).any(|a| check(a, last - 1)),
        [true, false] => (0..last - 1).any(|a| check(a, a + 1)),
        [false, false] => (0..last).any(|b| (0..b).any(|a| check(a, b))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate_alternating, Orientation};
    use proptest::prelude::*;

    fn p(s: &str) -> VincularPattern {
        s.parse().unwrap()
    }

    fn w(s: &str, k: u8) -> Word {
        Word::parse(s, k).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            p("1-32"),
            VincularPattern::new([1, 3, 2], [false, true]).unwrap()
        );
        assert_eq!(
            p("123"),
            VincularPattern::new([1, 2, 3], [true, true]).unwrap()
        );
        assert_eq!(
            p("1-3-2"),
            VincularPattern::new([1, 3, 2], [false, false]).unwrap()
        );
        assert_eq!(
            p("13-2"),
            VincularPattern::new([1, 3, 2], [true, false]).unwrap()
        );
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!("".parse::<VincularPattern>(), Err(PatternError::Empty));
        assert_eq!(
            "1--23".parse::<VincularPattern>(),
            Err(PatternError::EmptyBlock)
        );
        assert_eq!(
            "-123".parse::<VincularPattern>(),
            Err(PatternError::EmptyBlock)
        );
        assert_eq!(
            "12-".parse::<VincularPattern>(),
            Err(PatternError::EmptyBlock)
        );
        assert_eq!(
            "1a3".parse::<VincularPattern>(),
            Err(PatternError::BadCharacter('a'))
        );
        assert_eq!(
            "122".parse::<VincularPattern>(),
            Err(PatternError::RepeatedLetter(2))
        );
        assert_eq!(
            "124".parse::<VincularPattern>(),
            Err(PatternError::LetterOutOfRange(4))
        );
        assert_eq!(
            "140".parse::<VincularPattern>(),
            Err(PatternError::LetterOutOfRange(4))
        );
        assert_eq!(
            "12".parse::<VincularPattern>(),
            Err(PatternError::WrongLength(2))
        );
        assert_eq!(
            "1-2-3-4".parse::<VincularPattern>(),
            Err(PatternError::WrongLength(4))
        );
    }

    #[test]
    fn display_round_trips() {
        for pat in all_patterns() {
            assert_eq!(pat.to_string().parse::<VincularPattern>().unwrap(), pat);
        }
    }

    #[test]
    fn occurrence_counts_in_1244254() {
        let host = w("1244254", 5);
        // subsequences 142, 154, and 254 twice
        assert_eq!(count_occurrences(&host, &p("1-32")), 4);
        // only the factor 254 at the end
        assert_eq!(count_occurrences(&host, &p("132")), 1);
        assert_eq!(count_occurrences(&w("12", 2), &p("1-2-3")), 0);
    }

    #[test]
    fn avoidance_in_315267() {
        let host = w("315267", 7);
        assert!(!avoids(&host, &p("1-2-3"))); // 356, 157, ...
        assert!(avoids(&host, &p("3-2-1")));
        assert!(avoids(&w("", 7), &p("1-2-3")));
    }

    #[test]
    fn glue_monotonicity_on_small_words() {
        // Adding a glue constraint never increases the occurrence count.
        for word in enumerate_alternating(4, 6, Orientation::UpDown) {
            for base in classical_patterns() {
                let letters = base.letters();
                let loose = count_occurrences(&word, &base);
                for glue in [[true, false], [false, true]] {
                    let mid = VincularPattern::new(letters, glue).unwrap();
                    let tight = VincularPattern::new(letters, [true, true]).unwrap();
                    assert!(count_occurrences(&word, &mid) <= loose);
                    assert!(count_occurrences(&word, &tight) <= count_occurrences(&word, &mid));
                }
            }
        }
    }

    #[test]
    fn updown_words_avoid_monotone_consecutive_patterns() {
        // No three adjacent letters of an alternating word are monotone.
        for k in 2..=5u8 {
            for n in 0..=8usize {
                for word in enumerate_alternating(k, n, Orientation::UpDown) {
                    assert!(avoids(&word, &p("123")));
                    assert!(avoids(&word, &p("321")));
                }
            }
        }
    }

    #[test]
    fn symmetry_exhaustive_small_range() {
        for k in 2..=4u8 {
            for n in 0..=6usize {
                for word in enumerate_alternating(k, n, Orientation::UpDown) {
                    let rev = word.reverse();
                    let comp = word.complement();
                    for pat in all_patterns() {
                        let c = count_occurrences(&word, &pat);
                        assert_eq!(c, count_occurrences(&rev, &pat.reverse()));
                        assert_eq!(c, count_occurrences(&comp, &pat.complement()));
                    }
                }
            }
        }
    }

    #[test]
    fn contains_matches_completes_scan() {
        for word in enumerate_alternating(4, 7, Orientation::UpDown) {
            for pat in all_patterns() {
                assert_eq!(
                    contains_in(word.letters(), &pat),
                    count_occurrences(&word, &pat) > 0
                );
            }
        }
    }

    proptest! {
        #[test]
        fn avoids_iff_zero_occurrences(letters in prop::collection::vec(1u8..=6, 0..12)) {
            let word = Word::new(letters, 6).unwrap();
            for pat in all_patterns() {
                prop_assert_eq!(avoids(&word, &pat), count_occurrences(&word, &pat) == 0);
            }
        }

        #[test]
        fn reverse_and_complement_preserve_counts(letters in prop::collection::vec(1u8..=5, 0..10)) {
            let word = Word::new(letters, 5).unwrap();
            for pat in all_patterns() {
                let c = count_occurrences(&word, &pat);
                prop_assert_eq!(c, count_occurrences(&word.reverse(), &pat.reverse()));
                prop_assert_eq!(c, count_occurrences(&word.complement(), &pat.complement()));
            }
        }
    }
}
