//! Closed-form multiplicities of two-row characters in `phi`, and a harness
//! comparing them against the general decomposition.
//!
//! For `n >= 2k >= 2`,
//!
//! ```text
//! <phi, chi^(2n-k,k)> = (1/n) [ C(n,k) + sum_{1<h<n, d != 1, (n/d) | k} C(d, k d / n) ],  d = gcd(n,h)
//! ```
//!
//! The `k = 0` case is excluded: every divisibility condition becomes vacuous
//! and the bracket evaluates to `n - totient(n)`, not the `n` needed for the
//! trivial character's multiplicity of one.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, gcd, Integer};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::centralizer::{decompose_phi, Decomposition};
use crate::character::CharacterCache;
use crate::decimal;
use crate::error::{Error, Result};
use crate::oracle::brute_force_decompose;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `(2n)`
    TrivialTop,
    /// `(2n-1,1)`
    HookOne,
    /// `(n,n)`
    SquareNN,
    /// `(2n-2,2)`
    TwoRowK2,
    /// `(2n-k,k)` for `1 <= k <= n/2`
    TwoRowGeneral,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Family {
    /// The partition of `2n` whose multiplicity this family describes.
    pub fn shape(self, n: usize, k: usize) -> Partition {
        let two_row = |k: usize| Partition::from_unsorted([2 * n - k, k]);
        match self {
            Family::TrivialTop => Partition::row(2 * n),
            Family::HookOne => two_row(1),
            Family::SquareNN => two_row(n),
            Family::TwoRowK2 => two_row(2),
            Family::TwoRowGeneral => two_row(k),
        }
    }
}

/// A closed-form value tagged with the family and parameters it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub family: Family,
    pub n: usize,
    /// 0 for families without a `k` parameter.
    pub k: usize,
    pub value: BigUint,
}

fn require(op: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain { op, detail: detail() })
    }
}

pub fn mult_trivial(n: usize) -> Result<BigUint> {
    require("mult_trivial", n >= 1, || format!("need n >= 1, got {n}"))?;
    Ok(BigUint::one())
}

pub fn mult_hook_one(n: usize) -> Result<BigUint> {
    require("mult_hook_one", n >= 2, || format!("need n >= 2, got {n}"))?;
    Ok(BigUint::one())
}

pub fn mult_square(n: usize) -> Result<BigUint> {
    require("mult_square", n >= 2, || format!("need n >= 2, got {n}"))?;
    Ok(BigUint::one())
}

/// `n/2` for even `n`, `(n-1)/2` for odd `n`.
pub fn mult_two_row_k2(n: usize) -> Result<BigUint> {
    require("mult_two_row_k2", n >= 2, || format!("need n >= 2, got {n}"))?;
    Ok(BigUint::from(n / 2))
}

/// One term of the divisor sum: `Some(C(d, k d / n))` when `d = gcd(n, h)`
/// is not 1 and `n / d` divides `k`.
fn divisor_term(n: usize, h: usize, k: usize) -> Option<BigUint> {
    let d = gcd(n, h);
    if d == 1 || !k.is_multiple_of(n / d) {
        return None;
    }
    let strips = k * d / n;
    assert!((k * d).is_multiple_of(n) && strips <= d, "strip count k*d/n must be an integer in [0, d]");
    Some(binomial(BigUint::from(d), BigUint::from(strips)))
}

/// Closed-form multiplicity of `chi^(2n-k,k)` in `phi` for `n >= 2k >= 2`.
pub fn mult_two_row(n: usize, k: usize) -> Result<BigUint> {
    require("mult_two_row", k >= 1, || "k = 0 is outside the formula's range; use mult_trivial".into())?;
    require("mult_two_row", n >= 2 * k, || format!("need n >= 2k, got n = {n}, k = {k}"))?;
    let bracket = (2..n)
        .filter_map(|h| divisor_term(n, h, k))
        .fold(binomial(BigUint::from(n), BigUint::from(k)), |acc, t| acc + t);
    let (q, r) = bracket.div_rem(&BigUint::from(n));
    if !r.is_zero() {
        return Err(Error::Integrality {
            context: "mult_two_row",
            numerator: bracket.into(),
            denominator: n.into(),
        });
    }
    Ok(q)
}

/// Evaluates one family at `(n, k)`.
pub fn closed_form(family: Family, n: usize, k: usize) -> Result<ClosedFormResult> {
    let value = match family {
        Family::TrivialTop => mult_trivial(n)?,
        Family::HookOne => mult_hook_one(n)?,
        Family::SquareNN => mult_square(n)?,
        Family::TwoRowK2 => mult_two_row_k2(n)?,
        Family::TwoRowGeneral => mult_two_row(n, k)?,
    };
    Ok(ClosedFormResult { family, n, k, value })
}

/// Every `(family, k)` that applies at `n`: the trivial family from
/// `n = 1`, the fixed shapes from `n = 2`, and `(2n-k,k)` for
/// `1 <= k <= n/2`.
pub fn families_at(n: usize) -> Vec<(Family, usize)> {
    let mut out = vec![(Family::TrivialTop, 0)];
    if n >= 2 {
        out.extend([
            (Family::HookOne, 0),
            (Family::SquareNN, 0),
            (Family::TwoRowK2, 0),
        ]);
        out.extend((1..=n / 2).map(|k| (Family::TwoRowGeneral, k)));
    }
    out
}

/// Where the engine-side value of a check came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reference {
    Engine,
    BruteForce,
}

/// One line of the verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub n: usize,
    pub family: Family,
    pub k: usize,
    #[serde(serialize_with = "ser_biguint")]
    pub expected: BigUint,
    #[serde(serialize_with = "ser_biguint")]
    pub engine: BigUint,
    pub pass: bool,
    pub reference: Reference,
}

fn ser_biguint<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    decimal::unsigned::serialize(v, s)
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = self.family.shape(self.n, self.k);
        let reference = match self.reference {
            Reference::Engine => "engine",
            Reference::BruteForce => "brute-force",
        };
        write!(
            f,
            "[{}] n={} {} k={} {}: expected {} {} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.n,
            self.family,
            self.k,
            shape,
            self.expected,
            reference,
            self.engine,
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn compare(decomposition: &Decomposition, reference: Reference, report: &mut Report) -> Result<()> {
    let n = decomposition.n();
    for (family, k) in families_at(n) {
        let expected = closed_form(family, n, k)?.value;
        let engine = decomposition
            .get(&family.shape(n, k))
            .cloned()
            .unwrap_or_default();
        report.checks.push(Check {
            n,
            family,
            k,
            pass: expected == engine,
            expected,
            engine,
            reference,
        });
    }
    Ok(())
}

/// Compares every closed form against [`decompose_phi`] for `1 <= n <= n_max`,
/// and against the brute-force decomposition as well for `n <= 3`.
pub fn verify_closed_forms(n_max: usize, cache: &CharacterCache) -> Result<Report> {
    require("verify_closed_forms", n_max >= 2, || format!("need n_max >= 2, got {n_max}"))?;
    let mut report = Report::default();
    for n in 1..=n_max {
        compare(&decompose_phi(n, cache)?, Reference::Engine, &mut report)?;
        if n <= 3 {
            compare(&brute_force_decompose(n)?, Reference::BruteForce, &mut report)?;
        }
    }
    Ok(report)
}

/// The bracketed sum before division by `n`; exposed for inspection.
pub fn two_row_bracket(n: usize, k: usize) -> BigInt {
    (2..n)
        .filter_map(|h| divisor_term(n, h, k))
        .fold(binomial(BigUint::from(n), BigUint::from(k)), |acc, t| acc + t)
        .into()
}
