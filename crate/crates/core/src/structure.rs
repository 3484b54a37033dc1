//! Cut-pair structure of 123-avoiding up-down words of even length:
//! equivalence classes, their normal forms, and the bijection onto Dyck
//! paths that sends cut-pairs to valleys.
//!
//! An up-down word of even length `b1 t1 b2 t2 ... bi ti` avoids the
//! classical pattern 123 exactly when its bottoms and its tops are both
//! weakly decreasing. After collapsing repeated `(b, t)` pairs, a pair is a
//! *cut-pair* when `1 < b < k-1`, `2 < t < k`, `b` exceeds every later
//! bottom, and `t` is below every earlier top. Words sharing the same
//! cut-pairs form a class; the classes of a fixed alphabet are counted by a
//! Catalan number, refined by Narayana numbers according to the number of
//! cut-pairs.

use std::fmt;
use std::str::FromStr;

use crate::formulas::{self, ExactInt};
use crate::words::{Orientation, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    /// The word is not up-down.
    NotUpDown,
    /// The word has odd length.
    OddLength,
    /// The word contains the classical pattern 123.
    Contains123,
    /// The pair list violates the cut-pair chain conditions.
    InvalidClass(String),
    /// A Dyck path string contained a character other than `U` or `D`.
    BadStep(char),
    /// Unequal numbers of up- and down-steps.
    Unbalanced,
    /// Some prefix has more down- than up-steps.
    DipsBelowAxis,
    /// The path's semi-length does not match the requested alphabet.
    WrongSemiLength { expected: usize, got: usize },
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureError::NotUpDown => write!(f, "word is not up-down"),
            StructureError::OddLength => write!(f, "word length is odd"),
            StructureError::Contains123 => write!(f, "word contains the pattern 123"),
            StructureError::InvalidClass(msg) => write!(f, "invalid cut-pair chain: {msg}"),
            StructureError::BadStep(c) => write!(f, "bad Dyck step `{c}` (expected U or D)"),
            StructureError::Unbalanced => write!(f, "path has unequal numbers of U and D steps"),
            StructureError::DipsBelowAxis => write!(f, "path dips below the axis"),
            StructureError::WrongSemiLength { expected, got } => {
                write!(f, "path has semi-length {got}, expected {expected}")
            }
        }
    }
}

impl std::error::Error for StructureError {}

/// A bottom/top pair `(b, t)` of an up-down word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutPair {
    pub b: u8,
    pub t: u8,
}

impl fmt::Display for CutPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b, self.t)
    }
}

/// A cut-equivalence class over `{1, ..., k}`, identified by its cut-pairs in
/// left-to-right (strictly decreasing) order. The empty list is the unique
/// class without cut-pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutClass {
    k: u8,
    pairs: Vec<CutPair>,
}

impl CutClass {
    /// Validates the chain conditions: `k-1 > b_1 > ... > b_j > 1`,
    /// `k > t_1 > ... > t_j > 2`, and `b < t` within each pair.
    pub fn new(k: u8, pairs: Vec<CutPair>) -> Result<CutClass, StructureError> {
        if k < 2 {
            return Err(StructureError::InvalidClass(
                "alphabet must have k >= 2".into(),
            ));
        }
        for pair in &pairs {
            if !(1 < pair.b && pair.b < k - 1) {
                return Err(StructureError::InvalidClass(format!(
                    "bottom {} outside 1 < b < {}",
                    pair.b,
                    k - 1
                )));
            }
            if !(2 < pair.t && pair.t < k) {
                return Err(StructureError::InvalidClass(format!(
                    "top {} outside 2 < t < {k}",
                    pair.t
                )));
            }
            if pair.b >= pair.t {
                return Err(StructureError::InvalidClass(format!(
                    "pair {pair} needs b < t"
                )));
            }
        }
        for w in pairs.windows(2) {
            if !(w[0].b > w[1].b && w[0].t > w[1].t) {
                return Err(StructureError::InvalidClass(format!(
                    "pairs {} and {} must decrease in both coordinates",
                    w[0], w[1]
                )));
            }
        }
        Ok(CutClass { k, pairs })
    }

    pub fn alphabet_size(&self) -> u8 {
        self.k
    }

    pub fn pairs(&self) -> &[CutPair] {
        &self.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

impl fmt::Display for CutClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, pair) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{pair}")?;
        }
        write!(f, "}}")
    }
}

/// A Dyck path as a balanced `U`/`D` step sequence whose prefixes never have
/// more `D`s than `U`s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<DyckPath, StructureError> {
        let mut height = 0i64;
        for step in &steps {
            match step {
                Step::Up => height += 1,
                Step::Down => height -= 1,
            }
            if height < 0 {
                return Err(StructureError::DipsBelowAxis);
            }
        }
        if height != 0 {
            return Err(StructureError::Unbalanced);
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semi_length(&self) -> usize {
        self.steps.len() / 2
    }

    /// Number of valleys, i.e. `DU` factors.
    pub fn valleys(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::Down && w[1] == Step::Up)
            .count()
    }

    /// Maximal run decomposition `U^a1 D^b1 U^a2 D^b2 ...`; all runs of a
    /// nonempty path are nonempty and start with an up-run.
    fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs = Vec::new();
        let mut idx = 0;
        while idx < self.steps.len() {
            let mut ups = 0;
            while idx < self.steps.len() && self.steps[idx] == Step::Up {
                ups += 1;
                idx += 1;
            }
            let mut downs = 0;
            while idx < self.steps.len() && self.steps[idx] == Step::Down {
                downs += 1;
                idx += 1;
            }
            runs.push((ups, downs));
        }
        runs
    }
}

impl FromStr for DyckPath {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<DyckPath, StructureError> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(StructureError::BadStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::new(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            match step {
                Step::Up => write!(f, "U")?,
                Step::Down => write!(f, "D")?,
            }
        }
        Ok(())
    }
}

/// Checks the precondition shared by [`cut_pairs`] and [`class_of`]: up-down,
/// even length, 123-avoiding.
fn validate_member(w: &Word) -> Result<(), StructureError> {
    if !w.is_alternating(Orientation::UpDown) {
        return Err(StructureError::NotUpDown);
    }
    if !w.len().is_multiple_of(2) {
        return Err(StructureError::OddLength);
    }
    if !is_123_avoiding_updown_even(w) {
        return Err(StructureError::Contains123);
    }
    Ok(())
}

/// Linear-time 123-avoidance test for even-length up-down words: bottoms and
/// tops must both be weakly decreasing.
pub(crate) fn is_123_avoiding_updown_even(w: &Word) -> bool {
    let letters = w.letters();
    let weakly_decreasing = |it: &mut dyn Iterator<Item = u8>| -> bool {
        let mut prev: Option<u8> = None;
        for x in it {
            if let Some(p) = prev {
                if p < x {
                    return false;
                }
            }
            prev = Some(x);
        }
        true
    };
    weakly_decreasing(&mut letters.iter().step_by(2).copied())
        && weakly_decreasing(&mut letters.iter().skip(1).step_by(2).copied())
}

fn pair_sequence(w: &Word) -> Vec<CutPair> {
    let letters = w.letters();
    let mut pairs: Vec<CutPair> = letters
        .chunks(2)
        .map(|c| CutPair { b: c[0], t: c[1] })
        .collect();
    // Equal pairs are forced to be adjacent in a 123-avoiding up-down word,
    // so collapsing consecutive repeats removes all repetitions.
    pairs.dedup();
    pairs
}

/// The cut-pairs of a 123-avoiding up-down word of even length, left to
/// right.
pub fn cut_pairs(w: &Word) -> Result<Vec<CutPair>, StructureError> {
    validate_member(w)?;
    let k = w.alphabet_size();
    let pairs = pair_sequence(w);
    let mut result = Vec::new();
    for (j, pair) in pairs.iter().enumerate() {
        if !(1 < pair.b && pair.b < k - 1 && 2 < pair.t && pair.t < k) {
            continue;
        }
        if pairs[j + 1..].iter().any(|later| later.b >= pair.b) {
            continue;
        }
        if pairs[..j].iter().any(|earlier| earlier.t <= pair.t) {
            continue;
        }
        result.push(*pair);
    }
    Ok(result)
}

/// The cut-equivalence class of a word.
pub fn class_of(w: &Word) -> Result<CutClass, StructureError> {
    let pairs = cut_pairs(w)?;
    CutClass::new(w.alphabet_size(), pairs)
}

/// Every cut-equivalence class valid for alphabet `{1, ..., k}`, ordered by
/// number of cut-pairs and then lexicographically on the pair list. There
/// are `catalan(k - 2)` of them, `narayana(k - 2, j)` with exactly `j` pairs.
pub fn enumerate_classes(k: u8) -> Vec<CutClass> {
    assert!(k >= 2, "enumerate_classes requires k >= 2");
    let mut chains = Vec::new();
    let mut current = Vec::new();
    descend(k - 2, k - 1, &mut current, &mut chains);
    chains.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    chains
        .into_iter()
        .map(|pairs| CutClass { k, pairs })
        .collect()
}

fn descend(b_max: u8, t_max: u8, current: &mut Vec<CutPair>, out: &mut Vec<Vec<CutPair>>) {
    out.push(current.clone());
    for b in (2..=b_max).rev() {
        for t in (3..=t_max).rev() {
            if b < t {
                current.push(CutPair { b, t });
                descend(b - 1, t - 1, current, out);
                current.pop();
            }
        }
    }
}

/// The bijection from cut-equivalence classes to Dyck paths of semi-length
/// `k - 2`: each cut-pair `(b, t)` contributes the next up-run down to `b`
/// and down-run down to `t`; the class without cut-pairs maps to
/// `U^(k-2) D^(k-2)`. Cut-pairs become valleys.
pub fn class_to_dyck(f: &CutClass) -> DyckPath {
    let k = f.k;
    let mut steps = Vec::with_capacity(2 * (k as usize).saturating_sub(2));
    let mut push = |step: Step, times: u8| {
        for _ in 0..times {
            steps.push(step);
        }
    };
    let mut prev_b = k - 1;
    let mut prev_t = k;
    for pair in &f.pairs {
        push(Step::Up, prev_b - pair.b);
        push(Step::Down, prev_t - pair.t);
        prev_b = pair.b;
        prev_t = pair.t;
    }
    push(Step::Up, prev_b - 1);
    push(Step::Down, prev_t - 2);
    DyckPath { steps }
}

/// Inverse of [`class_to_dyck`]: decompose the path into maximal runs
/// `U^a1 D^b1 ... U^a(j+1) D^b(j+1)` and read off the cut-pairs
/// `b_m = k - 1 - (a1 + ... + am)`, `t_m = k - (b1 + ... + bm)`.
pub fn dyck_to_class(path: &DyckPath, k: u8) -> Result<CutClass, StructureError> {
    if k < 2 {
        return Err(StructureError::InvalidClass(
            "alphabet must have k >= 2".into(),
        ));
    }
    let expected = k as usize - 2;
    if path.semi_length() != expected {
        return Err(StructureError::WrongSemiLength {
            expected,
            got: path.semi_length(),
        });
    }
    let runs = path.runs();
    let mut pairs = Vec::new();
    let mut b = k as i64 - 1;
    let mut t = k as i64;
    for (idx, &(ups, downs)) in runs.iter().enumerate() {
        b -= ups as i64;
        t -= downs as i64;
        if idx + 1 < runs.len() {
            pairs.push(CutPair {
                b: b as u8,
                t: t as u8,
            });
        }
    }
    CutClass::new(k, pairs)
}

/// Number of words of length `2i` in class `f`: compositions of `i` over the
/// `2k - 3` pairs of the normal form with the `j` cut-pair slots forced
/// positive, i.e. `binom(2k - 4 + i - j, 2k - 4)`; zero when `j > i`.
pub fn class_word_count(f: &CutClass, i: usize) -> ExactInt {
    let k = f.k as i64;
    let j = f.pair_count() as i64;
    formulas::binomial(2 * k - 4 + i as i64 - j, 2 * k - 4)
}

/// All words of length `2i` in class `f`, in lexicographic order.
///
/// The normal form of a class is a fixed chain of `2k - 3` candidate pairs
/// running from `(k-1, k)` down to `(1, 2)`, decreasing the bottom letter
/// before each cut-pair and the top letter after reaching it; each cut-pair
/// must appear at least once and every other pair any number of times.
pub fn class_members(f: &CutClass, i: usize) -> impl Iterator<Item = Word> {
    let chain = normal_form_chain(f);
    let mandatory = f.pair_count();
    let mut words = Vec::new();
    if i >= mandatory {
        let mut multiplicities = vec![0usize; chain.len()];
        compose(
            &chain,
            i - mandatory,
            0,
            &mut multiplicities,
            &mut words,
            f.k,
        );
    }
    words.sort();
    words.into_iter()
}

/// The chain of candidate pairs of expression-normal form, with cut-pairs
/// flagged as mandatory.
fn normal_form_chain(f: &CutClass) -> Vec<(CutPair, bool)> {
    let k = f.k;
    let mut chain = Vec::with_capacity(2 * k as usize - 3);
    let mut b = k - 1;
    let mut t = k;
    chain.push((CutPair { b, t }, false));
    for pair in &f.pairs {
        while b > pair.b {
            b -= 1;
            chain.push((CutPair { b, t }, false));
        }
        while t > pair.t {
            t -= 1;
            chain.push((CutPair { b, t }, false));
        }
        chain.last_mut().unwrap().1 = true;
    }
    while b > 1 {
        b -= 1;
        chain.push((CutPair { b, t }, false));
    }
    while t > 2 {
        t -= 1;
        chain.push((CutPair { b, t }, false));
    }
    chain
}

fn compose(
    chain: &[(CutPair, bool)],
    remaining: usize,
    slot: usize,
    multiplicities: &mut Vec<usize>,
    words: &mut Vec<Word>,
    k: u8,
) {
    if slot == chain.len() {
        if remaining == 0 {
            let mut letters = Vec::new();
            for (s, &(pair, mandatory)) in chain.iter().enumerate() {
                let copies = multiplicities[s] + usize::from(mandatory);
                for _ in 0..copies {
                    letters.push(pair.b);
                    letters.push(pair.t);
                }
            }
            words.push(Word::from_parts_unchecked(letters, k));
        }
        return;
    }
    for x in 0..=remaining {
        multiplicities[slot] = x;
        compose(chain, remaining - x, slot + 1, multiplicities, words, k);
    }
    multiplicities[slot] = 0;
}
