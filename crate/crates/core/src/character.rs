//! Irreducible characters of `S_m` by the Murnaghan–Nakayama rule.
//!
//! `chi^lambda_mu` is evaluated by stripping the largest part of `mu` as a
//! rim hook of `lambda` in every legal way, weighting each branch by
//! `(-1)^leg_length`, and recursing on the remaining shape and the rest of
//! `mu`. Because class types are stored sorted, the remaining class is
//! always a suffix of `mu`, which keeps the memo table small.

use dashmap::DashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::decimal;
use crate::error::{Error, Result};
use crate::partition::{class_size, enumerate_partitions, factorial, Partition};
use crate::rim_hook::rim_hooks;

/// Write-once memo table for `(shape, class) -> chi^shape_class`.
///
/// Safe to share between threads. Two threads racing on the same key
/// compute the same value; the first insert wins and later ones are dropped.
#[derive(Debug, Default)]
pub struct CharacterCache {
    values: DashMap<(Partition, Partition), BigInt>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn get(&self, shape: &Partition, class: &Partition) -> Option<BigInt> {
        // clone out so no shard lock is held across the recursion
        self.values
            .get(&(shape.clone(), class.clone()))
            .map(|v| v.value().clone())
    }

    fn insert(&self, shape: Partition, class: Partition, value: BigInt) {
        let entry = self.values.entry((shape, class)).or_insert(value.clone());
        debug_assert_eq!(*entry, value, "memo entries are write-once");
    }
}

/// `chi^shape` evaluated on the class of cycle type `class_type`.
pub fn mn_value(shape: &Partition, class_type: &Partition, cache: &CharacterCache) -> Result<BigInt> {
    if shape.weight() != class_type.weight() {
        return Err(Error::WeightMismatch {
            shape: shape.clone(),
            class: class_type.clone(),
        });
    }
    Ok(evaluate(shape, class_type, cache))
}

pub(crate) fn evaluate(shape: &Partition, class_type: &Partition, cache: &CharacterCache) -> BigInt {
    let Some((hook, rest)) = class_type.split_first() else {
        return BigInt::one();
    };
    // a single cycle class is nonzero only on hook shapes; no need to cache
    if rest.is_empty() {
        return match rim_hooks(shape, hook).first() {
            Some(h) => BigInt::from(h.sign()),
            None => BigInt::zero(),
        };
    }
    if let Some(v) = cache.get(shape, class_type) {
        return v;
    }
    let value = rim_hooks(shape, hook)
        .iter()
        .fold(BigInt::zero(), |acc, removal| {
            let sub = evaluate(&removal.result, &rest, cache);
            if removal.sign() > 0 {
                acc + sub
            } else {
                acc - sub
            }
        });
    cache.insert(shape.clone(), class_type.clone(), value.clone());
    value
}

/// Dimension of the irreducible representation labelled by `shape`.
pub fn degree(shape: &Partition, cache: &CharacterCache) -> BigInt {
    evaluate(shape, &Partition::column(shape.weight()), cache)
}

/// Branching rule: the constituents of `chi^shape` restricted to
/// `S_{m-1}`, each with multiplicity one.
pub fn restrict(shape: &Partition) -> Vec<Partition> {
    shape.inner_corners()
}

/// Branching rule: the constituents of `chi^shape` induced to `S_{m+1}`,
/// each with multiplicity one.
pub fn induce(shape: &Partition) -> Vec<Partition> {
    shape.outer_corners()
}

/// An integer-valued class function on `S_m`, stored as one value per
/// cycle type in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    m: usize,
    entries: Vec<(Partition, BigInt)>,
}

impl ClassFunction {
    /// Builds the class function whose value on each cycle type of `S_m` is
    /// `f(class)`.
    pub fn from_fn(m: usize, mut f: impl FnMut(&Partition) -> BigInt) -> Self {
        let entries = enumerate_partitions(m)
            .into_iter()
            .map(|class| {
                let v = f(&class);
                (class, v)
            })
            .collect();
        Self { m, entries }
    }

    pub fn try_from_fn(
        m: usize,
        mut f: impl FnMut(&Partition) -> Result<BigInt>,
    ) -> Result<Self> {
        let entries = enumerate_partitions(m)
            .into_iter()
            .map(|class| f(&class).map(|v| (class, v)))
            .collect::<Result<_>>()?;
        Ok(Self { m, entries })
    }

    /// The irreducible character `chi^shape` as a class function.
    pub fn irreducible(shape: &Partition, cache: &CharacterCache) -> Self {
        Self::from_fn(shape.weight(), |class| evaluate(shape, class, cache))
    }

    /// The `m` of `S_m`.
    pub fn degree_n(&self) -> usize {
        self.m
    }

    pub fn get(&self, class: &Partition) -> Option<&BigInt> {
        self.entries
            .binary_search_by(|(c, _)| class.cmp(c))
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.entries.iter().map(|(c, v)| (c, v))
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DegreeMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|((c, a), (_, b))| (c.clone(), a + b))
            .collect();
        Ok(Self { m: self.m, entries })
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(c, v)| (c.clone(), v * factor))
            .collect();
        Self { m: self.m, entries }
    }
}

#[derive(Serialize, Deserialize)]
struct ClassValue {
    class: Partition,
    #[serde(with = "decimal::signed")]
    value: BigInt,
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(|(class, value)| ClassValue {
            class: class.clone(),
            value: value.clone(),
        }))
    }
}

/// Accepts exactly the serialized form: every cycle type of one `S_m`,
/// `m >= 1`, each once, in descending lexicographic order.
impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<ClassValue>::deserialize(deserializer)?;
        let m = raw
            .first()
            .map(|cv| cv.class.weight())
            .ok_or_else(|| D::Error::custom("class function has no entries"))?;
        if m == 0 {
            return Err(D::Error::custom("class functions are defined on S_m with m >= 1"));
        }
        if raw.iter().any(|cv| cv.class.weight() != m) {
            return Err(D::Error::custom("classes have differing weights"));
        }
        // p(m) explodes; never enumerate unless the entry count can match
        if partition_count_capped(m, raw.len()) != Some(raw.len()) {
            return Err(D::Error::custom(format!(
                "expected one entry per partition of {m}"
            )));
        }
        let expected = enumerate_partitions(m);
        if expected.len() != raw.len()
            || expected.iter().zip(&raw).any(|(e, cv)| *e != cv.class)
        {
            return Err(D::Error::custom(format!(
                "classes must be exactly the partitions of {m} in descending lexicographic order"
            )));
        }
        Ok(Self {
            m,
            entries: raw.into_iter().map(|cv| (cv.class, cv.value)).collect(),
        })
    }
}

/// Number of partitions of `m`, or `None` once it exceeds `cap`.
pub(crate) fn partition_count_capped(m: usize, cap: usize) -> Option<usize> {
    // p(m) >= m, so a large m fails fast without allocating
    if m > cap.max(1) {
        return None;
    }
    let limit = cap.saturating_add(1);
    let mut ways = vec![0usize; m + 1];
    ways[0] = 1;
    for part in 1..=m {
        for total in part..=m {
            ways[total] = (ways[total] + ways[total - part]).min(limit);
        }
    }
    (ways[m] <= cap).then_some(ways[m])
}

/// `<f, g> = (1/m!) * sum over classes of |K| f g`, with the division
/// checked for exactness.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigInt> {
    f.check_same_group(g)?;
    let total = f
        .entries
        .iter()
        .zip(&g.entries)
        .fold(BigInt::zero(), |acc, ((class, a), (_, b))| {
            acc + class_size(class) * a * b
        });
    let order = factorial(f.m);
    let (q, r) = total.div_rem(&order);
    if !r.is_zero() {
        return Err(Error::Integrality {
            context: "inner product",
            numerator: total,
            denominator: order,
        });
    }
    Ok(q)
}

/// Every irreducible character of `S_m`, in descending lexicographic order
/// of shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    m: usize,
    rows: Vec<(Partition, ClassFunction)>,
}

impl CharacterTable {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, shape: &Partition) -> Option<&ClassFunction> {
        self.rows
            .binary_search_by(|(s, _)| shape.cmp(s))
            .ok()
            .map(|i| &self.rows[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &ClassFunction)> {
        self.rows.iter().map(|(s, f)| (s, f))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Computes `chi^lambda` for every `lambda` of `m`. Shapes are evaluated in
/// parallel against the shared cache; the result does not depend on the
/// schedule.
pub fn character_table(m: usize, cache: &CharacterCache) -> CharacterTable {
    let rows = enumerate_partitions(m)
        .into_par_iter()
        .map(|shape| {
            let row = ClassFunction::irreducible(&shape, cache);
            (shape, row)
        })
        .collect();
    CharacterTable { m, rows }
}
