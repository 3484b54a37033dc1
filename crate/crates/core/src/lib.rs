//! Exact enumeration of pattern-avoiding alternating (zigzag) words.
//!
//! An alternating word over the alphabet `{1, ..., k}` is either *up-down*
//! (`w1 < w2 > w3 < w4 > ...`) or *down-up* (`w1 > w2 < w3 > w4 < ...`).
//! This crate generates such words, counts how many of them avoid a given
//! classical, vincular, or consecutive pattern of length 3, and cross-checks
//! the brute-force counts against closed forms, recurrences, and generating
//! functions built on Narayana, Catalan, and Stirling numbers. It also
//! implements the cut-pair decomposition of 123-avoiding up-down words of
//! even length and the bijection from cut-equivalence classes to Dyck paths.
//!
//! The modules are layered bottom-up:
//!
//! * [`words`] — word values, alternation checks, symmetries, enumeration;
//! * [`patterns`] — vincular patterns and occurrence counting;
//! * [`counting`] — brute-force avoider counts, count tables, Wilf partitions;
//! * [`formulas`] — exact closed forms, recurrences, and power series;
//! * [`structure`] — cut-pairs, cut-equivalence classes, and Dyck paths.

pub mod counting;
pub mod formulas;
pub mod patterns;
pub mod structure;
pub mod words;

pub use counting::{build_table, count_avoiders, wilf_partition, CountTable, Parity};
pub use patterns::{PatternError, VincularPattern};
pub use words::{enumerate_alternating, Orientation, Word, WordError};
