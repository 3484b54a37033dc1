//! Brute-force avoider counts over alternating words, count tables, and
//! empirical Wilf-class partitioning.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::patterns::{self, VincularPattern};
use crate::words::{self, Orientation};

/// Length parity used when comparing count tables; up-down words of even and
/// odd length are classified independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn matches(self, n: usize) -> bool {
        Parity::of(n) == self
    }
}

/// Number of alternating words of length `n` over `{1, ..., k}` with
/// orientation `o` that avoid `p`.
///
/// Computed by depth-first extension with early pruning: a prefix already
/// containing `p` is never extended, which is sound because occurrences
/// survive extension.
pub fn count_avoiders(k: u8, n: usize, p: &VincularPattern, o: Orientation) -> u128 {
    if k == 0 {
        return if n == 0 { 1 } else { 0 };
    }
    if n == 0 {
        return 1;
    }
    let mut prefix = Vec::with_capacity(n);
    let mut total = 0u128;
    extend_avoiding(k, n, p, o, &mut prefix, &mut total);
    total
}

fn extend_avoiding(
    k: u8,
    n: usize,
    p: &VincularPattern,
    o: Orientation,
    prefix: &mut Vec<u8>,
    total: &mut u128,
) {
    let (lo, hi) = words::letter_range(k, n, o, prefix);
    for letter in lo..=hi {
        prefix.push(letter);
        // Prune as soon as the new letter completes an occurrence.
        if !patterns::completes_occurrence(prefix, p) {
            if prefix.len() == n {
                *total += 1;
            } else {
                extend_avoiding(k, n, p, o, prefix, total);
            }
        }
        prefix.pop();
    }
}

/// Exact avoider counts on the grid `2 <= k <= k_max`, `0 <= n <= n_max` for
/// a fixed pattern and orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pattern: VincularPattern,
    orientation: Orientation,
    k_range: (u8, u8),
    n_range: (usize, usize),
    entries: BTreeMap<(u8, usize), u128>,
}

impl CountTable {
    pub fn pattern(&self) -> &VincularPattern {
        &self.pattern
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Inclusive `(min, max)` alphabet sizes.
    pub fn k_range(&self) -> (u8, u8) {
        self.k_range
    }

    /// Inclusive `(min, max)` word lengths.
    pub fn n_range(&self) -> (usize, usize) {
        self.n_range
    }

    pub fn get(&self, k: u8, n: usize) -> Option<u128> {
        self.entries.get(&(k, n)).copied()
    }

    /// Entries in `(k, n)` order.
    pub fn iter(&self) -> impl Iterator<Item = (u8, usize, u128)> + '_ {
        self.entries.iter().map(|(&(k, n), &c)| (k, n, c))
    }

    pub fn to_doc(&self) -> CountTableDoc {
        CountTableDoc {
            pattern: self.pattern.to_string(),
            orientation: self.orientation.to_string(),
            convention_divergence_at_n1: uses_recurrence_convention_at_n1(&self.pattern),
            entries: self
                .iter()
                .map(|(k, n, count)| CountEntryDoc {
                    k,
                    n,
                    count: count.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &CountTableDoc) -> Result<CountTable, String> {
        let pattern: VincularPattern = doc.pattern.parse().map_err(|e| format!("{e}"))?;
        let orientation: Orientation = doc.orientation.parse().map_err(|e| format!("{e}"))?;
        if doc.entries.is_empty() {
            return Err("table has no entries".into());
        }
        let mut entries = BTreeMap::new();
        for e in &doc.entries {
            let count: u128 = e
                .count
                .parse()
                .map_err(|_| format!("bad count `{}`", e.count))?;
            entries.insert((e.k, e.n), count);
        }
        let k_range = (
            entries.keys().map(|&(k, _)| k).min().unwrap(),
            entries.keys().map(|&(k, _)| k).max().unwrap(),
        );
        let n_range = (
            entries.keys().map(|&(_, n)| n).min().unwrap(),
            entries.keys().map(|&(_, n)| n).max().unwrap(),
        );
        Ok(CountTable {
            pattern,
            orientation,
            k_range,
            n_range,
            entries,
        })
    }
}

/// Serialization shape for a count table: counts travel as decimal strings so
/// exactness never depends on the JSON number range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTableDoc {
    pub pattern: String,
    pub orientation: String,
    /// True when the pattern's odd-length recurrence family assigns length-1
    /// words the bookkeeping value `k - 1`; the table itself always reports
    /// the true count `k`.
    pub convention_divergence_at_n1: bool,
    pub entries: Vec<CountEntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountEntryDoc {
    pub k: u8,
    pub n: usize,
    pub count: String,
}

/// Fills the avoider-count grid for `2 <= k <= k_max`, `0 <= n <= n_max`.
pub fn build_table(p: &VincularPattern, o: Orientation, k_max: u8, n_max: usize) -> CountTable {
    assert!(k_max >= 2, "build_table requires k_max >= 2");
    let mut entries = BTreeMap::new();
    for k in 2..=k_max {
        for n in 0..=n_max {
            entries.insert((k, n), count_avoiders(k, n, p, o));
        }
    }
    CountTable {
        pattern: *p,
        orientation: o,
        k_range: (2, k_max),
        n_range: (0, n_max),
        entries,
    }
}

/// Groups patterns whose avoider counts agree on every `(k, n)` with
/// `2 <= k <= k_max` and `n <= n_max` of the given parity. Blocks preserve
/// the order in which their first members appear in `patterns`.
pub fn wilf_partition(
    patterns: &[VincularPattern],
    o: Orientation,
    k_max: u8,
    n_max: usize,
    parity: Parity,
) -> Vec<Vec<VincularPattern>> {
    assert!(
        !patterns.is_empty(),
        "wilf_partition requires at least one pattern"
    );
    let mut blocks: Vec<(Vec<u128>, Vec<VincularPattern>)> = Vec::new();
    for p in patterns {
        let sig = count_signature(p, o, k_max, n_max, parity);
        match blocks.iter_mut().find(|(s, _)| *s == sig) {
            Some((_, members)) => members.push(*p),
            None => blocks.push((sig, vec![*p])),
        }
    }
    blocks.into_iter().map(|(_, members)| members).collect()
}

/// The comparison vector behind [`wilf_partition`]: counts over the grid
/// restricted to one length parity.
pub fn count_signature(
    p: &VincularPattern,
    o: Orientation,
    k_max: u8,
    n_max: usize,
    parity: Parity,
) -> Vec<u128> {
    let mut sig = Vec::new();
    for k in 2..=k_max {
        for n in 0..=n_max {
            if parity.matches(n) {
                sig.push(count_avoiders(k, n, p, o));
            }
        }
    }
    sig
}

/// The enumerative class letter each glued pattern belongs to, per length
/// parity. Classical patterns return `None`; equal letters mean provably
/// equal avoider counts for that parity.
pub fn wilf_class_letter(p: &VincularPattern, parity: Parity) -> Option<char> {
    let key = p.to_string();
    let letter = match parity {
        Parity::Even => match key.as_str() {
            "123" | "321" => 'K',
            "132" | "213" | "1-23" | "1-32" | "12-3" | "21-3" => 'A',
            "231" | "312" | "3-12" | "23-1" => 'C',
            "2-13" | "2-31" | "13-2" | "31-2" => 'N',
            "3-21" | "32-1" => 'E',
            _ => return None,
        },
        Parity::Odd => match key.as_str() {
            "123" | "321" => 'L',
            "132" | "231" | "1-32" | "23-1" => 'B',
            "213" | "312" | "3-12" | "3-21" | "12-3" | "21-3" => 'D',
            "1-23" | "32-1" => 'F',
            "2-31" | "13-2" => 'G',
            "2-13" | "31-2" => 'H',
            _ => return None,
        },
    };
    Some(letter)
}

/// True for patterns whose odd-length counts are produced by the recurrence
/// that bookkeeps length-1 words as `k - 1` instead of the true count `k`.
pub fn uses_recurrence_convention_at_n1(p: &VincularPattern) -> bool {
    wilf_class_letter(p, Parity::Odd) == Some('D')
}
