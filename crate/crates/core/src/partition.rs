//! Partitions (Young diagrams), used both as p-group types and as the shapes
//! in Littlewood-Richardson calculations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::InputError;

/// A weakly decreasing vector of positive integers.
///
/// Zeros never appear in `parts`, so two equal partitions are equal as
/// vectors. The ordering puts lexicographically larger partitions first and,
/// among a prefix tie, the shorter one first: `[3,2] < [3,1,1] < [2,2,1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<i64>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Canonicalizes any unsigned vector: zeros are dropped, the rest sorted
    /// descending.
    pub fn from_parts<I: IntoIterator<Item = u32>>(raw: I) -> Self {
        let mut parts: Vec<u32> = raw.into_iter().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds a partition from a slice that is already weakly decreasing and
    /// free of zeros; returns `None` otherwise.
    pub fn from_decreasing(parts: &[u32]) -> Option<Self> {
        let ok = parts.iter().all(|&x| x > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        ok.then(|| Partition { parts: parts.to_vec() })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), with rows past the end reading as 0.
    pub fn row(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.row(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// True iff the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Multiset union of parts: the type of a direct product of p-groups.
    pub fn union_merge(&self, other: &Partition) -> Partition {
        Partition::from_parts(self.parts.iter().chain(&other.parts).copied())
    }

    /// Row-wise sum, missing rows read as 0.
    pub fn componentwise_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition {
            parts: (0..n).map(|i| self.row(i) + other.row(i)).collect(),
        }
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: (1..=self.first())
                .map(|j| self.parts.iter().filter(|&&x| x >= j).count() as u32)
                .collect(),
        }
    }

    /// All partitions of `n`, in the crate's canonical order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for x in (1..=rem.min(max)).rev() {
                cur.push(x);
                go(rem - x, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Validating constructor for signed input: negative entries are rejected,
/// zeros stripped, the rest sorted descending.
pub fn make_partition(raw: &[i64]) -> Result<Partition, InputError> {
    let mut parts = Vec::with_capacity(raw.len());
    for &x in raw {
        if x < 0 {
            return Err(InputError::NegativePart(x));
        }
        let x = u32::try_from(x).map_err(|_| InputError::PartTooLarge(x))?;
        parts.push(x);
    }
    Ok(Partition::from_parts(parts))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.parts.iter().zip(&other.parts) {
            match b.cmp(a) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = InputError;

    fn try_from(raw: Vec<i64>) -> Result<Self, Self::Error> {
        make_partition(&raw)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = InputError;

    /// Accepts `[3,3,2,1]`, `3,3,2,1`, `[]`, and tolerates spaces.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let raw = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| InputError::Syntax(format!("bad partition entry `{}` in `{s}`", t.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        make_partition(&raw)
    }
}
