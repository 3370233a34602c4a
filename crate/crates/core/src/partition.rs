//! Integer partitions in canonical form, plus the diagram and class-size
//! combinatorics the character routines are built on.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParsePartitionError;

/// A partition stored as strictly positive, weakly decreasing parts.
///
/// The same type labels irreducible characters (as a Young diagram) and
/// conjugacy classes (as a cycle type). The empty partition is the unique
/// partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Validates `parts` and builds a partition. Zeros and increases are
    /// rejected rather than repaired.
    pub fn new(parts: Vec<usize>) -> Result<Self, ParsePartitionError> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(ParsePartitionError::ZeroPart(i));
            }
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(ParsePartitionError::NotDescending {
                prev: w[0],
                next: w[1],
            });
        }
        if parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p)).is_none() {
            return Err(ParsePartitionError::WeightOverflow);
        }
        Ok(Self::from_canonical(parts))
    }

    /// Sorts and drops zeros. Used where parts arrive as a multiset, such as
    /// cycle types of products.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_canonical(parts)
    }

    pub(crate) fn from_canonical(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_canonical(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_canonical(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part and the partition left after removing it.
    pub fn split_first(&self) -> Option<(usize, Partition)> {
        let (&first, rest) = self.parts.split_first()?;
        Some((first, Self::from_canonical(rest.to_vec())))
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Self::from_canonical(parts)
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.weight - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiplicity of each part size, indexed by size (index 0 unused).
    fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Partitions reached by deleting one removable box, ordered by the row
    /// of the deleted box.
    pub fn inner_corners(&self) -> Vec<Partition> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                Self::from_canonical(parts)
            })
            .collect()
    }

    /// Partitions reached by adding one box, ordered by the row of the added
    /// box.
    pub fn outer_corners(&self) -> Vec<Partition> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .map(|i| {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                Self::from_canonical(parts)
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"5,3,2,2,1"`. Surrounding parentheses are optional, and `""` or
/// `"()"` is the empty partition.
impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(ParsePartitionError::EmptyPart(i));
                }
                tok.parse::<usize>()
                    .map_err(|_| ParsePartitionError::NotANumber(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in descending lexicographic order, from `(n)` down
/// to `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_canonical(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::with_capacity(n), &mut out);
    out
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Order of the centralizer of a permutation of cycle type `lambda`:
/// the product over part sizes `i` of `i^m_i * m_i!`.
pub fn centralizer_order(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigInt::one(), |acc, (i, &m)| {
            acc * BigInt::from(i).pow(m as u32) * factorial(m)
        })
}

/// Number of permutations in `S_n` with cycle type `lambda`, `n = |lambda|`.
pub fn class_size(lambda: &Partition) -> BigInt {
    factorial(lambda.weight()) / centralizer_order(lambda)
}
