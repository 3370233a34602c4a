//! Structural self-checks run by `snchar verify` alongside the closed-form
//! comparison.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::centralizer::{
    decompose_phi, decompose_phi_via_class_function, element_type_counts, centralizer_group_order,
};
use crate::character::{character_table, degree, inner_product, mn_value, restrict, CharacterCache};
use crate::error::Result;
use crate::oracle::{brute_force_decompose, hook_length_degree};
use crate::partition::{centralizer_order, enumerate_partitions, factorial, Partition};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl InvariantCheck {
    fn new(name: impl Into<String>, failures: Vec<String>) -> Self {
        let pass = failures.is_empty();
        let detail = if pass {
            "ok".to_string()
        } else {
            failures.join("; ")
        };
        Self {
            name: name.into(),
            pass,
            detail,
        }
    }
}

/// `<chi^a, chi^b> = [a == b]` over `S_m`.
pub fn row_orthonormality(m: usize, cache: &CharacterCache) -> Result<InvariantCheck> {
    let table = character_table(m, cache);
    let mut failures = Vec::new();
    for (a, fa) in table.iter() {
        for (b, fb) in table.iter() {
            let ip = inner_product(fa, fb)?;
            let want = if a == b { BigInt::one() } else { BigInt::zero() };
            if ip != want {
                failures.push(format!("<{a},{b}> = {ip}"));
            }
        }
    }
    Ok(InvariantCheck::new(format!("row orthonormality S_{m}"), failures))
}

/// `sum over lambda of chi^lambda(nu) chi^lambda(rho) = z_nu [nu == rho]`.
pub fn column_orthogonality(m: usize, cache: &CharacterCache) -> InvariantCheck {
    let table = character_table(m, cache);
    let classes = enumerate_partitions(m);
    let mut failures = Vec::new();
    for nu in &classes {
        for rho in &classes {
            let sum: BigInt = table
                .iter()
                .map(|(_, chi)| chi.get(nu).unwrap() * chi.get(rho).unwrap())
                .sum();
            let want = if nu == rho { centralizer_order(nu) } else { BigInt::zero() };
            if sum != want {
                failures.push(format!("columns {nu},{rho} give {sum}"));
            }
        }
    }
    InvariantCheck::new(format!("column orthogonality S_{m}"), failures)
}

/// Restricting `chi^lambda` to `S_{m-1}` by the branching rule agrees with
/// evaluating `chi^lambda` on classes with an extra fixed point.
pub fn branching_consistency(m: usize, cache: &CharacterCache) -> Result<InvariantCheck> {
    let mut failures = Vec::new();
    for lambda in enumerate_partitions(m) {
        for mu in enumerate_partitions(m - 1) {
            let restricted: BigInt = restrict(&lambda)
                .iter()
                .map(|minus| mn_value(minus, &mu, cache))
                .sum::<Result<BigInt>>()?;
            let with_fixed_point = Partition::from_unsorted(mu.parts().iter().copied().chain([1]));
            let direct = mn_value(&lambda, &with_fixed_point, cache)?;
            if restricted != direct {
                failures.push(format!("{lambda} on {mu}: {restricted} vs {direct}"));
            }
        }
    }
    Ok(InvariantCheck::new(format!("branching consistency S_{m}"), failures))
}

/// Degrees from the character engine match the hook-length formula and
/// their squares sum to `m!`.
pub fn degrees_match_hook_lengths(m: usize, cache: &CharacterCache) -> InvariantCheck {
    let mut failures = Vec::new();
    let mut squares = BigInt::zero();
    for lambda in enumerate_partitions(m) {
        let d = degree(&lambda, cache);
        let hook = hook_length_degree(&lambda);
        if d != hook {
            failures.push(format!("{lambda}: {d} vs hook-length {hook}"));
        }
        squares += &d * &d;
    }
    if squares != factorial(m) {
        failures.push(format!("sum of squared degrees {squares} != {m}!"));
    }
    InvariantCheck::new(format!("degrees vs hook lengths S_{m}"), failures)
}

/// The decomposition-level invariants at one `n`: both computation routes
/// agree, the dimension matches the index, the trivial character appears
/// once, and the element tally covers all of `C`.
pub fn decomposition_invariants(n: usize, cache: &CharacterCache) -> Result<Vec<InvariantCheck>> {
    let direct = decompose_phi(n, cache)?;
    let via_phi = decompose_phi_via_class_function(n, cache)?;
    let mut out = Vec::new();

    let mut fails = Vec::new();
    if direct != via_phi {
        for ((mu, a), (_, b)) in direct.terms().zip(via_phi.terms()) {
            if a != b {
                fails.push(format!("{mu}: {a} vs {b}"));
            }
        }
    }
    out.push(InvariantCheck::new(format!("two-path agreement n={n}"), fails));

    let dim = direct.dimension(cache);
    let index = direct.index();
    let fails = if dim == index {
        vec![]
    } else {
        vec![format!("dimension {dim} != index {index}")]
    };
    out.push(InvariantCheck::new(format!("dimension identity n={n}"), fails));

    let trivial = direct.get(&Partition::row(2 * n)).cloned().unwrap_or_default();
    let fails = if trivial == 1u32.into() {
        vec![]
    } else {
        vec![format!("trivial multiplicity {trivial}")]
    };
    out.push(InvariantCheck::new(format!("trivial once n={n}"), fails));

    let tally: BigInt = element_type_counts(n)?.values().sum();
    let order = centralizer_group_order(n);
    let fails = if tally == order {
        vec![]
    } else {
        vec![format!("tally {tally} != |C| = {order}")]
    };
    out.push(InvariantCheck::new(format!("element count n={n}"), fails));

    if n <= 3 {
        let brute = brute_force_decompose(n)?;
        let fails = if brute == direct {
            vec![]
        } else {
            vec!["brute-force decomposition differs".to_string()]
        };
        out.push(InvariantCheck::new(format!("brute-force oracle n={n}"), fails));
    }
    Ok(out)
}

/// Everything `verify --max-n n_max` runs besides the closed forms.
/// Character-table checks cover `S_m` for `m <= min(2 n_max, 8)`, and the
/// hook-length comparison `m <= min(2 n_max, 12)`.
pub fn invariant_suites(n_max: usize, cache: &CharacterCache) -> Result<Vec<InvariantCheck>> {
    let mut out = Vec::new();
    for m in 1..=(2 * n_max).min(8) {
        out.push(row_orthonormality(m, cache)?);
        out.push(column_orthogonality(m, cache));
        out.push(branching_consistency(m, cache)?);
    }
    for m in 1..=(2 * n_max).min(12) {
        out.push(degrees_match_hook_lengths(m, cache));
    }
    for n in 1..=n_max {
        out.extend(decomposition_invariants(n, cache)?);
    }
    Ok(out)
}
