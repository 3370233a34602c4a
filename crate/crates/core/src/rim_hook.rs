//! Rim-hook removal via beta-numbers.
//!
//! With `r` rows, the beta-numbers of `lambda` are `lambda_i + (r - 1 - i)`.
//! Removing a rim `k`-hook is the same as lowering one beta-number by `k`
//! onto a free nonnegative position; the leg length is the number of
//! beta-numbers jumped over.

use crate::partition::Partition;

/// One legal rim-hook removal: the remaining shape and the hook's leg length
/// (rows occupied minus one).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RimHookRemoval {
    pub result: Partition,
    pub leg_length: usize,
}

impl RimHookRemoval {
    /// `(-1)^leg_length`.
    pub fn sign(&self) -> i32 {
        if self.leg_length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn beta_numbers(lambda: &Partition) -> Vec<usize> {
    let r = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (r - 1 - i))
        .collect()
}

fn from_beta_numbers(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let r = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| b - (r - 1 - i)))
}

/// Every rim `k`-hook removal from `lambda`, ordered by the row of the
/// hook's top box. Empty when `lambda` has no `k`-hook.
///
/// # Panics
///
/// If `k == 0`.
pub fn rim_hooks(lambda: &Partition, k: usize) -> Vec<RimHookRemoval> {
    assert!(k >= 1, "rim hooks have positive size");
    let beta = beta_numbers(lambda);
    // beta is strictly decreasing, so membership is a binary search
    let present = |x: usize| beta.binary_search_by(|b| x.cmp(b)).is_ok();

    beta.iter()
        .enumerate()
        .filter_map(|(i, &b)| {
            let target = b.checked_sub(k)?;
            if present(target) {
                return None;
            }
            let leg_length = beta[i + 1..].iter().take_while(|&&x| x > target).count();
            let mut moved = beta.clone();
            moved[i] = target;
            Some(RimHookRemoval {
                result: from_beta_numbers(moved),
                leg_length,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn beta_of_fixture() {
        assert_eq!(beta_numbers(&p("5,3,2,2,1")), vec![9, 6, 4, 3, 1]);
    }

    #[test]
    fn four_hooks_of_fixture() {
        let hooks = rim_hooks(&p("5,3,2,2,1"), 4);
        let got: Vec<(String, usize)> = hooks
            .iter()
            .map(|h| (h.result.to_string(), h.leg_length))
            .collect();
        assert_eq!(
            got,
            [
                ("(2,2,2,2,1)".to_string(), 1),
                ("(5,1,1,1,1)".to_string(), 2),
                ("(5,3,1)".to_string(), 2),
            ]
        );
        assert!(rim_hooks(&p("5,3,2,2,1"), 5).is_empty());
    }

    #[test]
    fn whole_row() {
        for n in 1..6 {
            let hooks = rim_hooks(&Partition::row(n), n);
            assert_eq!(
                hooks,
                vec![RimHookRemoval {
                    result: Partition::empty(),
                    leg_length: 0
                }]
            );
        }
        let col = rim_hooks(&Partition::column(4), 4);
        assert_eq!(col[0].leg_length, 3);
    }

    #[test]
    fn square_has_no_full_hook() {
        assert!(rim_hooks(&p("2,2"), 4).is_empty());
        assert!(rim_hooks(&Partition::empty(), 1).is_empty());
    }
}
