//! Independent reference computations used to cross-check the main engine.
//!
//! Nothing here calls into the Murnaghan–Nakayama or coset-counting paths
//! it is compared against, except that [`brute_force_decompose`] pairs its
//! element-level class function with the engine's character table.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::centralizer::Decomposition;
use crate::character::{character_table, inner_product, CharacterCache, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};

/// A permutation of `0..len` in one-line notation.
pub type Perm = Vec<usize>;

/// Cycle type of a permutation.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths)
}

/// Every permutation of `0..n`.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    (0..n).permutations(n).collect()
}

/// The permutation with consecutive cycles of the given lengths, e.g.
/// `(3,1)` gives `0 -> 1 -> 2 -> 0`, `3 -> 3`.
pub fn class_representative(class: &Partition) -> Perm {
    let mut perm = Vec::with_capacity(class.weight());
    let mut start = 0;
    for &len in class.parts() {
        perm.extend((start + 1..start + len).chain([start]));
        start += len;
    }
    perm
}

/// `x g x^-1`.
pub fn conjugate_by(g: &[usize], x: &[usize]) -> Perm {
    let mut out = vec![0; g.len()];
    for i in 0..g.len() {
        out[x[i]] = x[g[i]];
    }
    out
}

/// The centralizer of `sigma = (0 1 ... n-1)` in `S_2n` as the explicit set
/// `{ sigma^k x pi }`, with `pi` permuting `n..2n`.
pub fn centralizer_elements(n: usize) -> HashSet<Perm> {
    let mut elements = HashSet::new();
    for k in 0..n {
        for pi in (n..2 * n).permutations(n) {
            let perm: Perm = (0..n).map(|i| (i + k) % n).chain(pi).collect();
            elements.insert(perm);
        }
    }
    elements
}

/// Decomposes `phi` by brute force: for each class of `S_2n`, count the
/// `x` in `S_2n` with `x g x^-1` in `C`, divide by `|C|`, then take inner
/// products against the character table. Intended for `n <= 3`.
pub fn brute_force_decompose(n: usize) -> Result<Decomposition> {
    if !(1..=3).contains(&n) {
        return Err(Error::Domain {
            op: "brute_force_decompose",
            detail: format!("exhaustive enumeration is limited to 1 <= n <= 3, got {n}"),
        });
    }
    let group = centralizer_elements(n);
    let order = BigInt::from(group.len());
    let everything = all_permutations(2 * n);

    let phi = ClassFunction::try_from_fn(2 * n, |class| {
        let g = class_representative(class);
        let hits = everything
            .iter()
            .filter(|x| group.contains(&conjugate_by(&g, x)))
            .count();
        let (q, r) = BigInt::from(hits).div_rem(&order);
        if !r.is_zero() {
            return Err(Error::Integrality {
                context: "brute-force phi",
                numerator: hits.into(),
                denominator: order.clone(),
            });
        }
        Ok(q)
    })?;

    let cache = CharacterCache::new();
    let table = character_table(2 * n, &cache);
    let terms = table
        .iter()
        .map(|(mu, chi)| {
            let m = inner_product(&phi, chi)?;
            if m.is_negative() {
                return Err(Error::Integrality {
                    context: "brute-force multiplicity",
                    numerator: m,
                    denominator: BigInt::from(1),
                });
            }
            Ok((mu.clone(), m.magnitude().clone()))
        })
        .collect::<Result<Vec<(Partition, BigUint)>>>()?;
    Ok(Decomposition::new(n, terms))
}

/// `n! / product of hook lengths`.
pub fn hook_length_degree(shape: &Partition) -> BigInt {
    let conj = shape.conjugate();
    let mut hooks = BigInt::from(1);
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j) - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(shape.weight()) / hooks
}
