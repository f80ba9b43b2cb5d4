//! Leaf counts with an explicit "impossible" value, and the leaf function
//! sequence built from them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A leaf count, or `Impossible` when no induced subtree of the requested
/// size exists. `Impossible` orders below every count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Option<usize>", into = "Option<usize>")]
pub enum LeafCount {
    Impossible,
    Count(usize),
}

impl LeafCount {
    pub fn count(self) -> Option<usize> {
        match self {
            LeafCount::Impossible => None,
            LeafCount::Count(c) => Some(c),
        }
    }

    pub fn is_impossible(self) -> bool {
        self == LeafCount::Impossible
    }
}

impl From<Option<usize>> for LeafCount {
    fn from(v: Option<usize>) -> Self {
        v.map_or(LeafCount::Impossible, LeafCount::Count)
    }
}

impl From<LeafCount> for Option<usize> {
    fn from(v: LeafCount) -> Self {
        v.count()
    }
}

impl From<usize> for LeafCount {
    fn from(v: usize) -> Self {
        LeafCount::Count(v)
    }
}

impl fmt::Display for LeafCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafCount::Impossible => f.write_str("*"),
            LeafCount::Count(c) => write!(f, "{c}"),
        }
    }
}

impl FromStr for LeafCount {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "*" => Ok(LeafCount::Impossible),
            t => t.parse().map(LeafCount::Count),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed leaf function: {0}")]
pub struct LeafFunctionParseError(String);

/// `values[i]` is the maximum number of leaves of an induced subtree with
/// `i` vertices, for `i` in `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LeafFunction {
    values: Vec<LeafCount>,
}

impl LeafFunction {
    pub fn new(values: Vec<LeafCount>) -> Self {
        LeafFunction { values }
    }

    /// Starting point for a search over a graph of order `n`: 0 at index 0,
    /// impossible everywhere else.
    pub fn unknown(n: usize) -> Self {
        let mut values = vec![LeafCount::Impossible; n + 1];
        values[0] = LeafCount::Count(0);
        LeafFunction { values }
    }

    pub fn from_counts<I: IntoIterator<Item = Option<usize>>>(it: I) -> Self {
        LeafFunction {
            values: it.into_iter().map(LeafCount::from).collect(),
        }
    }

    /// Order of the underlying graph (the sequence has `order + 1` entries).
    pub fn order(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> LeafCount {
        self.values.get(i).copied().unwrap_or(LeafCount::Impossible)
    }

    pub fn values(&self) -> &[LeafCount] {
        &self.values
    }

    /// Raises entry `i` to `leaves` if that improves it. Returns whether it did.
    pub fn improve(&mut self, i: usize, leaves: usize) -> bool {
        let slot = &mut self.values[i];
        if LeafCount::Count(leaves) > *slot {
            *slot = LeafCount::Count(leaves);
            true
        } else {
            false
        }
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }

    /// Space-separated table row, `*` for impossible entries.
    pub fn to_table(&self) -> String {
        self.values
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn from_table(s: &str) -> Result<Self, LeafFunctionParseError> {
        s.split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| LeafFunctionParseError(format!("bad entry `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(LeafFunction::new)
    }

    /// JSON array with `null` for impossible entries.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("leaf function serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, LeafFunctionParseError> {
        serde_json::from_str(s).map_err(|e| LeafFunctionParseError(e.to_string()))
    }
}

impl fmt::Display for LeafFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table())
    }
}

impl std::ops::Index<usize> for LeafFunction {
    type Output = LeafCount;

    fn index(&self, i: usize) -> &LeafCount {
        &self.values[i]
    }
}
