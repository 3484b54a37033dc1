//! Words over `{1, ..., k}`, alternation checks, symmetry operations, and
//! lexicographic enumeration of alternating words.

use std::fmt;
use std::str::FromStr;

/// Direction in which a word alternates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `w1 < w2 > w3 < w4 > ...`
    UpDown,
    /// `w1 > w2 < w3 > w4 < ...`
    DownUp,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::UpDown => Orientation::DownUp,
            Orientation::DownUp => Orientation::UpDown,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::UpDown => write!(f, "up-down"),
            Orientation::DownUp => write!(f, "down-up"),
        }
    }
}

impl FromStr for Orientation {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        match s {
            "up-down" | "updown" => Ok(Orientation::UpDown),
            "down-up" | "downup" => Ok(Orientation::DownUp),
            _ => Err(WordError::Parse(format!("unknown orientation `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    /// A letter lies outside `1..=k`.
    LetterOutOfRange { letter: u8, k: u8 },
    /// The alphabet size must be at least 1.
    ZeroAlphabet,
    /// Textual form could not be parsed.
    Parse(String),
    /// The word does not alternate in the requested orientation.
    NotAlternating,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::LetterOutOfRange { letter, k } => {
                write!(f, "letter {letter} outside alphabet 1..={k}")
            }
            WordError::ZeroAlphabet => write!(f, "alphabet size must be at least 1"),
            WordError::Parse(msg) => write!(f, "cannot parse word: {msg}"),
            WordError::NotAlternating => write!(f, "word is not alternating"),
        }
    }
}

impl std::error::Error for WordError {}

/// A finite word over the alphabet `{1, ..., k}` (letters are 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    k: u8,
}

impl Word {
    /// Builds a word, validating every letter against the alphabet.
    pub fn new(letters: Vec<u8>, k: u8) -> Result<Word, WordError> {
        if k == 0 {
            return Err(WordError::ZeroAlphabet);
        }
        for &letter in &letters {
            if letter == 0 || letter > k {
                return Err(WordError::LetterOutOfRange { letter, k });
            }
        }
        Ok(Word { letters, k })
    }

    pub(crate) fn from_parts_unchecked(letters: Vec<u8>, k: u8) -> Word {
        Word { letters, k }
    }

    /// Parses either the compact digit form (`"1214"`, only for k <= 9) or
    /// the comma-separated form (`"4,6,4,5"`). The empty string is the
    /// empty word.
    pub fn parse(s: &str, k: u8) -> Result<Word, WordError> {
        if s.is_empty() {
            return Word::new(Vec::new(), k);
        }
        let letters: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u8>()
                        .map_err(|_| WordError::Parse(format!("bad letter `{part}`")))
                })
                .collect::<Result<_, _>>()?
        } else {
            if k > 9 {
                return Err(WordError::Parse(
                    "compact digit form requires k <= 9; use comma-separated letters".into(),
                ));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| WordError::Parse(format!("bad digit `{c}`")))
                })
                .collect::<Result<_, _>>()?
        };
        Word::new(letters, k)
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> u8 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True iff the strict inequality chain of `o` holds at every adjacent
    /// position. Words of length 0 and 1 are alternating in both orientations.
    pub fn is_alternating(&self, o: Orientation) -> bool {
        is_alternating(&self.letters, o)
    }

    /// The letterwise complement `c_i = k + 1 - w_i`. Turns an up-down word
    /// into a down-up word and vice versa.
    pub fn complement(&self) -> Word {
        let letters = self.letters.iter().map(|&x| self.k + 1 - x).collect();
        Word { letters, k: self.k }
    }

    /// The word read right to left.
    pub fn reverse(&self) -> Word {
        let letters = self.letters.iter().rev().copied().collect();
        Word { letters, k: self.k }
    }

    /// Splits an alternating word into its bottom and top letters by position
    /// parity. For an up-down word the odd positions (1st, 3rd, ...) are
    /// bottoms and the even positions tops; for a down-up word the roles swap.
    pub fn bottoms_tops(&self, o: Orientation) -> Result<BottomsTops, WordError> {
        if !self.is_alternating(o) {
            return Err(WordError::NotAlternating);
        }
        let (first, second): (Vec<u8>, Vec<u8>) = (
            self.letters.iter().step_by(2).copied().collect(),
            self.letters.iter().skip(1).step_by(2).copied().collect(),
        );
        Ok(match o {
            Orientation::UpDown => BottomsTops {
                bottoms: first,
                tops: second,
            },
            Orientation::DownUp => BottomsTops {
                bottoms: second,
                tops: first,
            },
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 9 {
            for &letter in &self.letters {
                write!(f, "{letter}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Bottom and top letters of an alternating word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottomsTops {
    pub bottoms: Vec<u8>,
    pub tops: Vec<u8>,
}

pub(crate) fn is_alternating(letters: &[u8], o: Orientation) -> bool {
    letters.windows(2).enumerate().all(|(i, pair)| {
        let even_gap = i % 2 == 0;
        let rising = match o {
            Orientation::UpDown => even_gap,
            Orientation::DownUp => !even_gap,
        };
        if rising {
            pair[0] < pair[1]
        } else {
            pair[0] > pair[1]
        }
    })
}

/// Yields every alternating word of length `n` over `{1, ..., k}` with
/// orientation `o`, exactly once, in lexicographic order. Only alternating
/// words are ever materialized; generation extends a prefix one letter at a
/// time under the parity-determined inequality.
pub fn enumerate_alternating(k: u8, n: usize, o: Orientation) -> AlternatingWords {
    AlternatingWords {
        k,
        n,
        orientation: o,
        prefix: Vec::with_capacity(n),
        started: false,
        done: k == 0,
    }
}

/// Lexicographic stream of alternating words. See [`enumerate_alternating`].
pub struct AlternatingWords {
    k: u8,
    n: usize,
    orientation: Orientation,
    prefix: Vec<u8>,
    started: bool,
    done: bool,
}

/// Smallest and largest letter usable at the next position of `prefix` when
/// building an alternating word of total length `n`. Every in-range choice
/// extends to a full word, so generation never backtracks over dead prefixes:
/// the only infeasible prefixes are a lone `k` (up-down) or a lone `1`
/// (down-up), which the first-position bound excludes.
pub(crate) fn letter_range(k: u8, n: usize, o: Orientation, prefix: &[u8]) -> (u8, u8) {
    let i = prefix.len();
    if i == 0 {
        if n >= 2 {
            match o {
                Orientation::UpDown => (1, k.saturating_sub(1)),
                Orientation::DownUp => (2, k),
            }
        } else {
            (1, k)
        }
    } else {
        let odd_position = i % 2 == 1;
        let rising = match o {
            Orientation::UpDown => odd_position,
            Orientation::DownUp => !odd_position,
        };
        if rising {
            (prefix[i - 1] + 1, k)
        } else {
            (1, prefix[i - 1] - 1)
        }
    }
}

impl AlternatingWords {
    /// Extends the current prefix to full length, always taking the smallest
    /// feasible letter.
    fn fill_smallest(&mut self) {
        while self.prefix.len() < self.n {
            let (lo, _) = letter_range(self.k, self.n, self.orientation, &self.prefix);
            self.prefix.push(lo);
        }
    }
}

impl Iterator for AlternatingWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                return Some(Word::from_parts_unchecked(Vec::new(), self.k));
            }
            let (lo, hi) = letter_range(self.k, self.n, self.orientation, &self.prefix);
            if lo > hi {
                self.done = true;
                return None;
            }
            self.prefix.push(lo);
            self.fill_smallest();
        } else {
            // Odometer step: bump the deepest position that can still grow,
            // then refill everything after it with smallest letters.
            loop {
                match self.prefix.pop() {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(letter) => {
                        let (_, hi) = letter_range(self.k, self.n, self.orientation, &self.prefix);
                        if letter < hi {
                            self.prefix.push(letter + 1);
                            break;
                        }
                    }
                }
            }
            self.fill_smallest();
        }
        Some(Word::from_parts_unchecked(self.prefix.clone(), self.k))
    }
}
