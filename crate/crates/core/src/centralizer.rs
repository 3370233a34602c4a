//! The centralizer `C = <sigma> x S_n` of an `n`-cycle `sigma` in `S_2n`
//! and the decomposition of `phi = Ind_C^{S_2n} 1` into irreducibles.
//!
//! `sigma` acts on points `1..=n` and the `S_n` factor on `n+1..=2n`, so an
//! element `(sigma^k, pi)` has cycle type `sigma_power_type(n, k)` merged
//! with the cycle type of `pi`. Sums over `C` are regrouped as sums over
//! `(k, lambda)` weighted by `|K_lambda|`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::{gcd, Integer};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{degree, evaluate, inner_product, CharacterCache, ClassFunction};
use crate::decimal;
use crate::error::{Error, Result};
use crate::partition::{
    centralizer_order, class_size, enumerate_partitions, factorial, Partition,
};

/// Cycle type of `sigma^k` for an `n`-cycle `sigma`: `(1^n)` when `k = 0`,
/// otherwise `gcd(n, k)` cycles of length `n / gcd(n, k)`.
///
/// # Panics
///
/// If `k >= n`.
pub fn sigma_power_type(n: usize, k: usize) -> Partition {
    assert!(k < n, "sigma^k is indexed by 0 <= k < n");
    if k == 0 {
        return Partition::column(n);
    }
    let d = gcd(n, k);
    Partition::from_unsorted(std::iter::repeat_n(n / d, d))
}

/// Cycle type of a product of commuting permutations on disjoint supports.
pub fn merge_types(alpha: &Partition, beta: &Partition) -> Partition {
    Partition::from_unsorted(alpha.parts().iter().chain(beta.parts()).copied())
}

/// `|C| = n * n!`.
pub fn centralizer_group_order(n: usize) -> BigInt {
    factorial(n) * n
}

/// `[S_2n : C] = (2n)! / (n * n!)`, the degree of `phi`.
pub fn phi_index(n: usize) -> BigInt {
    factorial(2 * n) / centralizer_group_order(n)
}

fn check_n(op: &'static str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            op,
            detail: "n must be at least 1".into(),
        });
    }
    Ok(())
}

/// Every `(S_2n cycle type of (sigma^k, pi), |K_{type(pi)}|)` pair, one per
/// `(k, lambda)` with `0 <= k < n` and `lambda` a partition of `n`.
fn weighted_element_types(n: usize) -> Vec<(Partition, BigInt)> {
    let lambdas = enumerate_partitions(n);
    (0..n)
        .flat_map(|k| {
            let power = sigma_power_type(n, k);
            lambdas
                .iter()
                .map(move |lambda| (merge_types(&power, lambda), class_size(lambda)))
        })
        .collect()
}

/// Number of elements of `C` with each `S_2n` cycle type. Types absent from
/// the map have count zero.
pub fn element_type_counts(n: usize) -> Result<HashMap<Partition, BigInt>> {
    check_n("element_type_counts", n)?;
    let mut counts: HashMap<Partition, BigInt> = HashMap::new();
    for (nu, size) in weighted_element_types(n) {
        *counts.entry(nu).or_default() += size;
    }
    Ok(counts)
}

fn exact_div(context: &'static str, numerator: BigInt, denominator: &BigInt) -> Result<BigInt> {
    let (q, r) = numerator.div_rem(denominator);
    if !r.is_zero() {
        return Err(Error::Integrality {
            context,
            numerator,
            denominator: denominator.clone(),
        });
    }
    Ok(q)
}

/// The class function of `phi` on `S_2n`:
/// `phi(nu) = z_nu * #{c in C of type nu} / |C|`.
pub fn phi_class_function(n: usize) -> Result<ClassFunction> {
    let counts = element_type_counts(n)?;
    let order = centralizer_group_order(n);
    ClassFunction::try_from_fn(2 * n, |nu| match counts.get(nu) {
        Some(count) => exact_div("phi class value", centralizer_order(nu) * count, &order),
        None => Ok(BigInt::zero()),
    })
}

fn to_multiplicity(context: &'static str, value: BigInt, denominator: &BigInt) -> Result<BigUint> {
    let q = exact_div(context, value.clone(), denominator)?;
    if q.is_negative() {
        return Err(Error::Integrality {
            context,
            numerator: value,
            denominator: denominator.clone(),
        });
    }
    Ok(q.magnitude().clone())
}

/// `<phi, chi^mu>` by Frobenius reciprocity:
/// `(1/(n * n!)) * sum over k, lambda of |K_lambda| * chi^mu(type(sigma^k) + lambda)`.
pub fn multiplicity(n: usize, mu: &Partition, cache: &CharacterCache) -> Result<BigUint> {
    check_n("multiplicity", n)?;
    if mu.weight() != 2 * n {
        return Err(Error::Domain {
            op: "multiplicity",
            detail: format!("{mu} is not a partition of 2n = {}", 2 * n),
        });
    }
    let total = weighted_element_types(n)
        .iter()
        .fold(BigInt::zero(), |acc, (nu, size)| {
            acc + size * evaluate(mu, nu, cache)
        });
    to_multiplicity("multiplicity", total, &centralizer_group_order(n))
}

/// Multiplicity of every irreducible character of `S_2n` in `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    n: usize,
    terms: Vec<(Partition, BigUint)>,
}

impl Decomposition {
    /// Builds a decomposition from one multiplicity per partition of `2n`
    /// in descending lexicographic order.
    pub(crate) fn new(n: usize, terms: Vec<(Partition, BigUint)>) -> Self {
        debug_assert!(terms.iter().map(|(mu, _)| mu).eq(enumerate_partitions(2 * n).iter()));
        Self { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(2n)! / (n * n!)`.
    pub fn index(&self) -> BigInt {
        phi_index(self.n)
    }

    pub fn get(&self, mu: &Partition) -> Option<&BigUint> {
        self.terms
            .binary_search_by(|(p, _)| mu.cmp(p))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// All terms, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter().map(|(mu, m)| (mu, m))
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms().filter(|(_, m)| !m.is_zero())
    }

    /// `sum over mu of mult(mu) * dim(mu)`, which must equal `index()`.
    pub fn dimension(&self, cache: &CharacterCache) -> BigInt {
        self.terms
            .iter()
            .map(|(mu, m)| BigInt::from(m.clone()) * degree(mu, cache))
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DecompositionJson::from(self)).expect("in-memory serialization")
    }

    /// Parses the JSON form, rejecting anything that is not a complete,
    /// correctly ordered decomposition for some `n >= 1` with the right
    /// index.
    pub fn from_json(s: &str) -> std::result::Result<Self, DecodeError> {
        let raw: DecompositionJson = serde_json::from_str(s)?;
        raw.try_into()
    }
}

/// Failure to decode a serialized [`Decomposition`].
#[derive(Debug, thiserror::Error)]
pub enum DecodeError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid decomposition: {0}")]
    Invalid(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionJson {
    n: usize,
    #[serde(with = "decimal::signed")]
    index: BigInt,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    mu: Partition,
    #[serde(with = "decimal::unsigned")]
    mult: BigUint,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        Self {
            n: d.n,
            index: d.index(),
            terms: d
                .terms
                .iter()
                .map(|(mu, mult)| TermJson {
                    mu: mu.clone(),
                    mult: mult.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<DecompositionJson> for Decomposition {
    type Error = DecodeError;

    fn try_from(raw: DecompositionJson) -> std::result::Result<Self, DecodeError> {
        let invalid = |msg: String| Err(DecodeError::Invalid(msg));
        if raw.n == 0 {
            return invalid("n must be at least 1".into());
        }
        let Some(weight) = raw.n.checked_mul(2) else {
            return invalid(format!("n = {} is too large", raw.n));
        };
        if raw.terms.iter().any(|t| t.mu.weight() != weight) {
            return invalid(format!("every mu must be a partition of {weight}"));
        }
        if crate::character::partition_count_capped(weight, raw.terms.len()) != Some(raw.terms.len()) {
            return invalid(format!("expected one term per partition of {weight}"));
        }
        let expected = enumerate_partitions(weight);
        if expected.iter().zip(&raw.terms).any(|(e, t)| *e != t.mu) {
            return invalid("terms must be in descending lexicographic order of mu".into());
        }
        if raw.index != phi_index(raw.n) {
            return invalid(format!("index must be {}", phi_index(raw.n)));
        }
        Ok(Decomposition {
            n: raw.n,
            terms: raw.terms.into_iter().map(|t| (t.mu, t.mult)).collect(),
        })
    }
}

/// Decomposes `phi` by evaluating [`multiplicity`] for each partition of
/// `2n` in parallel.
pub fn decompose_phi(n: usize, cache: &CharacterCache) -> Result<Decomposition> {
    check_n("decompose_phi", n)?;
    let terms = enumerate_partitions(2 * n)
        .into_par_iter()
        .map(|mu| multiplicity(n, &mu, cache).map(|m| (mu, m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition::new(n, terms))
}

/// Decomposes `phi` the other way round: build its class function, then
/// take inner products with each irreducible character.
pub fn decompose_phi_via_class_function(n: usize, cache: &CharacterCache) -> Result<Decomposition> {
    let phi = phi_class_function(n)?;
    let terms = enumerate_partitions(2 * n)
        .into_par_iter()
        .map(|mu| {
            let chi = ClassFunction::irreducible(&mu, cache);
            let ip = inner_product(&phi, &chi)?;
            to_multiplicity("inner product with phi", ip, &BigInt::from(1))
                .map(|m| (mu, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition::new(n, terms))
}
