//! Test-only oracles. None of these share code with the library paths they
//! check.
#![allow(dead_code)]

use std::collections::HashMap;

use snchar::oracle::{all_permutations, cycle_type};
use snchar::Partition;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// p(n) for 0..=max by Euler's pentagonal-number recurrence.
pub fn pentagonal_counts(max: usize) -> Vec<u64> {
    let mut counts = vec![0i64; max + 1];
    counts[0] = 1;
    for n in 1..=max {
        let mut total = 0i64;
        for j in 1.. {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            total += sign * counts[n - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                total += sign * counts[n - g2];
            }
        }
        counts[n] = total;
    }
    counts.into_iter().map(|c| c as u64).collect()
}

/// Number of permutations of each cycle type in S_n, by enumeration.
pub fn enumerated_class_sizes(n: usize) -> HashMap<Partition, u64> {
    let mut sizes = HashMap::new();
    for perm in all_permutations(n) {
        *sizes.entry(cycle_type(&perm)).or_insert(0) += 1;
    }
    sizes
}

/// Rim-hook removals found by walking the rim directly: a hook whose top
/// box is at the end of row `a` and whose bottom row is `b` keeps
/// `lambda[t+1] - 1` boxes in each row `a <= t < b`, and takes the
/// remainder of its `k` boxes from the end of row `b`.
pub fn rim_walk(lambda: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let rows = lambda.parts();
    let r = rows.len();
    let mut out = Vec::new();
    for a in 0..r {
        let mut used = 0usize;
        for b in a..r {
            if b > a {
                // row b-1 gives up everything right of column lambda[b]-1
                used += rows[b - 1] - rows[b] + 1;
            }
            if used >= k {
                break;
            }
            let from_bottom = k - used;
            if from_bottom > rows[b] {
                continue;
            }
            let new_bottom = rows[b] - from_bottom;
            let below = if b + 1 < r { rows[b + 1] } else { 0 };
            if new_bottom < below {
                continue;
            }
            let mut parts = rows.to_vec();
            for t in a..b {
                parts[t] = rows[t + 1] - 1;
            }
            parts[b] = new_bottom;
            out.push((Partition::from_unsorted(parts), b - a));
        }
    }
    out
}

/// Hook-length formula, written out separately from the library's copy.
pub fn hook_degree(shape: &Partition) -> u128 {
    let rows = shape.parts();
    let cols: Vec<usize> = (0..rows.first().copied().unwrap_or(0))
        .map(|j| rows.iter().filter(|&&x| x > j).count())
        .collect();
    let mut hooks: u128 = 1;
    for (i, &row) in rows.iter().enumerate() {
        for (j, &col) in cols.iter().enumerate().take(row) {
            hooks *= ((row - j - 1) + (col - i - 1) + 1) as u128;
        }
    }
    let factorial: u128 = (1..=shape.weight() as u128).product();
    assert_eq!(factorial % hooks, 0);
    factorial / hooks
}

/// Euler totient from the prime factorization.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            while n.is_multiple_of(q) {
                n /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
