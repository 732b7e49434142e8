use std::collections::BTreeSet;

use ftc_core::fusion::{
    check_lambda, lambda_group, lambda_relation_matrix, validate_fusion, BlockPartition, FusionRing, LambdaFunction,
};
use ftc_core::zlattice::{abelian_invariants, AbelianGroupPresentation, IntMatrix};
use ftc_core::Field;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Group ring of `Z/a x Z/b`, element `(x, y)` at index `x * b + y`.
fn product_ring(a: usize, b: usize) -> FusionRing {
    let n = a * b;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| ((s / b + t / b) % a) * b + (s % b + t % b) % b)
                .collect()
        })
        .collect();
    FusionRing::group_ring(&table, 0)
}

fn rep_s3() -> FusionRing {
    let l = |s: &str| s.to_string();
    let mut e = Vec::new();
    for x in ["1", "s", "V"] {
        e.push((l("1"), l(x), l(x), 1));
        if x != "1" {
            e.push((l(x), l("1"), l(x), 1));
        }
    }
    e.push((l("s"), l("s"), l("1"), 1));
    e.push((l("s"), l("V"), l("V"), 1));
    e.push((l("V"), l("s"), l("V"), 1));
    for x in ["1", "s", "V"] {
        e.push((l("V"), l("V"), l(x), 1));
    }
    FusionRing::new(vec![l("1"), l("s"), l("V")], "1", &e, None).unwrap()
}

fn p_free_part(n: usize, p: u64) -> usize {
    let mut n = n;
    if p > 0 {
        while n % p as usize == 0 {
            n /= p as usize;
        }
    }
    n
}

fn normalized(fs: &[LambdaFunction]) -> BTreeSet<Vec<(u64, u64)>> {
    fs.iter().map(|l| l.normalized()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn abelian_group_rings_have_lambda_group_of_prime_to_p_order(a in 1usize..6, b in 1usize..5,
                                                                 p in prop_oneof![Just(0u64), Just(2), Just(3), Just(5)]) {
        let f = product_ring(a, b);
        prop_assert!(validate_fusion(&f).is_valid());
        let blocks = BlockPartition::singletons(&f);
        let lg = lambda_group(&f, &blocks, p, None).unwrap();
        prop_assert_eq!(lg.order(), p_free_part(a * b, p));
        for l in &lg.functions {
            prop_assert!(check_lambda(&f, &blocks, l).unwrap());
            prop_assert_eq!(l.exponents[f.unit()] % l.modulus.max(1), 0);
        }
    }

    #[test]
    fn non_members_fail_the_check(a in 2usize..6, b in 1usize..4, exps in prop::collection::vec(0u64..12, 20)) {
        let f = product_ring(a, b);
        let blocks = BlockPartition::singletons(&f);
        let members = normalized(&lambda_group(&f, &blocks, 0, None).unwrap().functions);
        let guess = LambdaFunction { modulus: 12, exponents: exps[..f.len()].to_vec(), values: None };
        let ok = check_lambda(&f, &blocks, &guess).unwrap();
        prop_assert_eq!(ok, members.contains(&guess.normalized()));
    }

    #[test]
    fn coarser_blocks_give_a_subgroup(a in 1usize..6, b in 1usize..4, assign in prop::collection::vec(0usize..3, 20)) {
        let f = product_ring(a, b);
        let fine = BlockPartition::singletons(&f);
        let mut classes: Vec<Vec<String>> = vec![Vec::new(); 3];
        for (i, l) in f.labels().iter().enumerate() {
            classes[assign[i]].push(l.clone());
        }
        classes.retain(|c| !c.is_empty());
        let coarse = BlockPartition { classes };
        let big = normalized(&lambda_group(&f, &fine, 0, None).unwrap().functions);
        let small = lambda_group(&f, &coarse, 0, None).unwrap();
        prop_assert!(normalized(&small.functions).is_subset(&big));
        prop_assert_eq!(big.len() % small.order(), 0);
    }

    #[test]
    fn unit_normalization_is_implied(a in 1usize..6, b in 1usize..4) {
        let f = product_ring(a, b);
        let rel = lambda_relation_matrix(&f, &BlockPartition::singletons(&f)).unwrap();
        let n = f.len();
        let mut rows: Vec<Vec<BigInt>> = (0..rel.rows()).map(|i| rel.row(i).to_vec()).collect();
        let before = abelian_invariants(&AbelianGroupPresentation::new(n, IntMatrix::from_rows(rows.clone(), n)));
        let mut unit_row = vec![BigInt::from(0); n];
        unit_row[f.unit()] = BigInt::from(1);
        rows.push(unit_row);
        let after = abelian_invariants(&AbelianGroupPresentation::new(n, IntMatrix::from_rows(rows, n)));
        prop_assert_eq!(before, after);
    }
}

#[test]
fn rep_s3_lambda_groups() {
    let f = rep_s3();
    assert!(validate_fusion(&f).is_valid());
    let singles = BlockPartition::singletons(&f);
    let lg = lambda_group(&f, &singles, 0, None).unwrap();
    // V x V contains V, so lambda(V) = 1, and then s x V = V forces lambda(s) = 1
    assert_eq!(lg.order(), 1);
    assert!(lg.presented.is_finite());
    let one = BlockPartition::single_block(&f);
    assert_eq!(lambda_group(&f, &one, 0, None).unwrap().order(), 1);
}

#[test]
fn evaluated_functions_live_in_the_field() {
    let f = product_ring(3, 1);
    let f7 = Field::prime(7).unwrap();
    let lg = lambda_group(&f, &BlockPartition::singletons(&f), 7, Some(&f7)).unwrap();
    let values: BTreeSet<u64> = lg
        .functions
        .iter()
        .flat_map(|l| l.values.as_ref().unwrap().iter().map(|x| x.as_residue().unwrap()))
        .collect();
    assert_eq!(values, BTreeSet::from([1, 2, 4]));
    // F_5 has no primitive cube root of unity
    let f5 = Field::prime(5).unwrap();
    assert!(lambda_group(&f, &BlockPartition::singletons(&f), 5, Some(&f5)).is_err());
}

#[test]
fn broken_partitions_are_rejected() {
    let f = rep_s3();
    let bad = BlockPartition {
        classes: vec![vec!["1".into(), "s".into()], vec!["s".into(), "V".into()]],
    };
    assert!(lambda_group(&f, &bad, 0, None).is_err());
    let missing = BlockPartition {
        classes: vec![vec!["1".into()]],
    };
    assert!(lambda_group(&f, &missing, 0, None).is_err());
}
