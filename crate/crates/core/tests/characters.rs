mod common;

use common::{hook_degree, p};
use num_bigint::BigInt;
use proptest::prelude::*;
use snchar::character::{degree, induce, restrict};
use snchar::checks::{branching_consistency, column_orthogonality, row_orthonormality};
use snchar::oracle::{all_permutations, class_representative, cycle_type};
use snchar::partition::factorial;
use snchar::{character_table, enumerate_partitions, inner_product, mn_value, CharacterCache, ClassFunction, Partition};

#[test]
fn trivial_and_sign_characters() {
    let cache = CharacterCache::new();
    for m in 1..=8 {
        for mu in enumerate_partitions(m) {
            assert_eq!(mn_value(&Partition::row(m), &mu, &cache).unwrap(), BigInt::from(1));
            assert_eq!(
                mn_value(&Partition::column(m), &mu, &cache).unwrap(),
                BigInt::from(mu.sign())
            );
        }
    }
}

#[test]
fn sign_character_matches_brute_force_parity() {
    let cache = CharacterCache::new();
    for m in 1..=6 {
        for perm in all_permutations(m) {
            // parity by counting inversions
            let inversions = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let chi = mn_value(&Partition::column(m), &cycle_type(&perm), &cache).unwrap();
            assert_eq!(chi, BigInt::from(sign));
        }
    }
}

#[test]
fn standard_character_is_fixed_points_minus_one() {
    let cache = CharacterCache::new();
    assert_eq!(mn_value(&p("3,1"), &p("2,1,1"), &cache).unwrap(), BigInt::from(1));
    for m in 2..=7 {
        let shape = Partition::from_unsorted([m - 1, 1]);
        for mu in enumerate_partitions(m) {
            let fixed = mu.parts().iter().filter(|&&x| x == 1).count() as i64;
            assert_eq!(mn_value(&shape, &mu, &cache).unwrap(), BigInt::from(fixed - 1));
        }
    }
}

/// chi^(2,2) = (permutation character on 2-subsets) - (permutation
/// character on points), since M^(2,2) = S^(4) + S^(3,1) + S^(2,2) and
/// M^(3,1) = S^(4) + S^(3,1).
#[test]
fn s4_two_two_row_from_permutation_modules() {
    let cache = CharacterCache::new();
    let row = ClassFunction::irreducible(&p("2,2"), &cache);
    let classes = ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"];
    let expected = [2, 0, 2, -1, 0];
    for (class, want) in classes.iter().zip(expected) {
        let g = class_representative(&p(class));
        let fixed_points = (0..4).filter(|&i| g[i] == i).count() as i64;
        let fixed_pairs = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let (a, b) = (g[i], g[j]);
                (a == i && b == j) || (a == j && b == i)
            })
            .count() as i64;
        assert_eq!(fixed_pairs - fixed_points, want, "{class}");
        assert_eq!(row.get(&p(class)), Some(&BigInt::from(want)));
    }
    // (1*4 + 0 + 3*4 + 8*1 + 0) / 24
    assert_eq!(inner_product(&row, &row).unwrap(), BigInt::from(1));
    assert_eq!(mn_value(&p("2,2"), &p("4"), &cache).unwrap(), BigInt::from(0));
}

#[test]
fn table_orthogonality_up_to_s8() {
    let cache = CharacterCache::new();
    for m in 1..=8 {
        let rows = row_orthonormality(m, &cache).unwrap();
        assert!(rows.pass, "{}", rows.detail);
        let cols = column_orthogonality(m, &cache);
        assert!(cols.pass, "{}", cols.detail);
    }
}

#[test]
fn trivial_and_standard_are_orthogonal() {
    let cache = CharacterCache::new();
    for n in 2..=8 {
        let triv = ClassFunction::irreducible(&Partition::row(n), &cache);
        let std = ClassFunction::irreducible(&Partition::from_unsorted([n - 1, 1]), &cache);
        assert_eq!(inner_product(&triv, &std).unwrap(), BigInt::from(0));
    }
}

#[test]
fn branching_rule_matches_fixed_point_evaluation() {
    let cache = CharacterCache::new();
    for m in 1..=8 {
        let check = branching_consistency(m, &cache).unwrap();
        assert!(check.pass, "{}", check.detail);
    }
}

#[test]
fn worked_branching_examples() {
    assert_eq!(restrict(&p("3,3,2")), vec![p("3,2,2"), p("3,3,1")]);
    assert_eq!(induce(&p("5,2")), vec![p("6,2"), p("5,3"), p("5,2,1")]);
    assert_eq!(restrict(&p("2,2,1")), vec![p("2,1,1"), p("2,2")]);
    assert_eq!(induce(&p("1,1")), vec![p("2,1"), p("1,1,1")]);
    assert_eq!(induce(&Partition::empty()), vec![p("1")]);
    assert_eq!(restrict(&p("7")), vec![p("6")]);
}

#[test]
fn degrees_match_hook_length_formula() {
    let cache = CharacterCache::new();
    for m in 0..=12 {
        let mut squares = BigInt::from(0);
        for lambda in enumerate_partitions(m) {
            let d = degree(&lambda, &cache);
            assert_eq!(d, BigInt::from(hook_degree(&lambda)), "{lambda}");
            squares += &d * &d;
        }
        assert_eq!(squares, factorial(m), "m = {m}");
    }
}

#[test]
fn conjugate_twists_by_sign() {
    let cache = CharacterCache::new();
    for m in 1..=8 {
        for lambda in enumerate_partitions(m) {
            let twisted = lambda.conjugate();
            for mu in enumerate_partitions(m) {
                let a = mn_value(&twisted, &mu, &cache).unwrap();
                let b = mn_value(&lambda, &mu, &cache).unwrap() * mu.sign();
                assert_eq!(a, b, "{lambda} on {mu}");
            }
        }
    }
}

#[test]
fn table_is_deterministic_under_parallel_evaluation() {
    let shared = CharacterCache::new();
    let first = character_table(9, &shared);
    let again = character_table(9, &shared);
    let cold = character_table(9, &CharacterCache::new());
    assert_eq!(first, again);
    assert_eq!(first, cold);
    assert_eq!(first.len(), 30);
}

#[test]
fn values_beyond_64_bits() {
    // |S_24| is about 6.2e23, so the inner product sums exceed u64
    let cache = CharacterCache::new();
    let shape = Partition::from_unsorted([12].into_iter().chain(std::iter::repeat_n(1, 12)));
    assert_eq!(degree(&shape, &cache), BigInt::from(1_352_078));
    let chi = ClassFunction::irreducible(&p("12,12"), &cache);
    assert_eq!(inner_product(&chi, &chi).unwrap(), BigInt::from(1));
}

fn arb_shape_and_class() -> impl Strategy<Value = (Partition, Partition)> {
    (1usize..=9).prop_flat_map(|m| {
        let all = enumerate_partitions(m);
        let len = all.len();
        (0..len, 0..len).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #[test]
    fn warm_cache_equals_cold_cache((shape, class) in arb_shape_and_class()) {
        let warm = CharacterCache::new();
        let _ = character_table(shape.weight(), &warm);
        let a = mn_value(&shape, &class, &warm).unwrap();
        let b = mn_value(&shape, &class, &CharacterCache::new()).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn concurrent_writers_agree() {
    let shared = CharacterCache::new();
    let tables: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4)
            .map(|_| s.spawn(|| character_table(10, &shared)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let reference = character_table(10, &CharacterCache::new());
    for t in &tables {
        assert_eq!(*t, reference);
    }
}
