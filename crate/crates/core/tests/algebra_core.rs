use ftc_core::algebra::{center, characters_commutative, quotient, radical, verify_algebra, Algebra, Subspace};
use ftc_core::groups::GroupTable;
use ftc_core::hopf::{gen_sweedler, gen_taft};
use ftc_core::{Field, Matrix, Scalar};
use ftc_oracles::{class_count, commutant_dim_bruteforce};
use proptest::prelude::*;

fn table(g: &GroupTable) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect())
        .collect()
}

fn field(p: u64) -> Field {
    if p == 0 {
        Field::rationals()
    } else {
        Field::prime(p).unwrap()
    }
}

/// A small catalogue of algebras, semisimple and not.
fn algebra(which: usize, p: u64) -> Algebra {
    let f = field(p);
    match which {
        0 => Algebra::group_algebra(&f, &GroupTable::symmetric3()),
        1 => Algebra::group_algebra(&f, &GroupTable::dihedral4()),
        2 => Algebra::group_algebra(&f, &GroupTable::quaternion8()),
        3 => Algebra::group_algebra(&f, &GroupTable::cyclic(6)),
        4 => Algebra::upper_triangular(&f, 3),
        5 => gen_sweedler(&field(if p == 2 { 3 } else { p })).unwrap().alg,
        _ => Algebra::upper_triangular(&f, 2),
    }
}

fn vector(f: &Field, n: usize, seed: &[i64]) -> Vec<Scalar> {
    (0..n)
        .map(|i| f.from_i64(seed[i % seed.len()] + i as i64 * seed[0]))
        .collect()
}

/// `J^k` for an ideal `J`, by spanning products of basis vectors.
fn power_dims(a: &Algebra, j: &Subspace) -> Vec<usize> {
    let f = a.field();
    let mut cur = j.clone();
    let mut dims = vec![cur.dim()];
    for _ in 0..a.dim() {
        let prods: Vec<Vec<Scalar>> = cur
            .basis
            .iter()
            .flat_map(|u| j.basis.iter().map(move |v| a.mul(u, v)))
            .collect();
        cur = Subspace::span(f, a.dim(), &prods);
        dims.push(cur.dim());
        if cur.dim() == 0 {
            break;
        }
    }
    dims
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn center_commutes_with_everything(which in 0usize..7, p in prop_oneof![Just(0u64), Just(2), Just(3), Just(5), Just(7)]) {
        let a = algebra(which, p);
        prop_assert!(verify_algebra(&a).is_valid());
        for z in &center(&a).basis {
            for i in 0..a.dim() {
                prop_assert!(a.commute(z, &a.basis_vector(i)));
            }
        }
    }

    #[test]
    fn radical_is_nilpotent(which in 0usize..7, p in prop_oneof![Just(0u64), Just(2), Just(3), Just(5), Just(7)]) {
        let a = algebra(which, p);
        let j = radical(&a).unwrap();
        let dims = power_dims(&a, &j);
        prop_assert_eq!(*dims.last().unwrap(), 0, "powers {:?}", dims);
        prop_assert!(dims.len() <= a.dim() + 1);
    }

    #[test]
    fn quotient_map_is_multiplicative(which in 0usize..7, p in prop_oneof![Just(2u64), Just(3), Just(5)],
                                      x in prop::collection::vec(-4i64..5, 1..9), y in prop::collection::vec(-4i64..5, 1..9)) {
        let a = algebra(which, p);
        let j = radical(&a).unwrap();
        let q = quotient(&a, &j).unwrap();
        let (u, v) = (vector(a.field(), a.dim(), &x), vector(a.field(), a.dim(), &y));
        prop_assert_eq!(q.project(&a.mul(&u, &v)), q.algebra.mul(&q.project(&u), &q.project(&v)));
        prop_assert_eq!(q.project(a.unit()), q.algebra.unit().to_vec());
    }

    #[test]
    fn characters_are_independent(n in 1usize..9, p in prop_oneof![Just(5u64), Just(7), Just(13), Just(17)]) {
        let f = field(p);
        let a = Algebra::group_algebra(&f, &GroupTable::cyclic(n));
        let s = characters_commutative(&a).unwrap();
        let rows: Vec<Vec<Scalar>> = s.characters.iter().map(|c| c.values.clone()).collect();
        let r = Matrix::from_rows_with_cols(&f, rows, a.dim()).unwrap().rank();
        prop_assert_eq!(r, s.characters.len());
        for c in &s.characters {
            prop_assert!(c.eval(a.unit()).is_one());
            for i in 0..n {
                for k in 0..n {
                    let lhs = c.eval(&a.mul(&a.basis_vector(i), &a.basis_vector(k)));
                    prop_assert_eq!(lhs, &c.values[i] * &c.values[k]);
                }
            }
        }
        // all n characters exist exactly when n divides p - 1
        if (p - 1) % n as u64 == 0 {
            prop_assert!(s.obstruction.is_none());
            prop_assert_eq!(s.characters.len(), n);
        }
    }
}

#[test]
fn group_algebra_centers_count_classes() {
    for g in [
        GroupTable::symmetric3(),
        GroupTable::dihedral4(),
        GroupTable::quaternion8(),
        GroupTable::cyclic(5),
    ] {
        let classes = class_count(&table(&g));
        for p in [0, 2, 3, 5, 7] {
            let a = Algebra::group_algebra(&field(p), &g);
            assert_eq!(center(&a).dim(), classes, "order {} over char {p}", g.order());
        }
    }
}

fn plain_mult(a: &Algebra) -> Vec<(usize, usize, usize, u64)> {
    let mut m = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for (k, c) in a.product_terms(i, j) {
                m.push((i, j, *k, c.as_residue().unwrap()));
            }
        }
    }
    m
}

#[test]
fn centers_match_exhaustive_search() {
    let sweedler = gen_sweedler(&field(5)).unwrap();
    assert_eq!(
        center(&sweedler.alg).dim(),
        commutant_dim_bruteforce(5, 4, &plain_mult(&sweedler.alg))
    );
    let taft = gen_taft(2, &field(3).from_i64(-1), &field(3)).unwrap();
    assert_eq!(
        center(&taft.alg).dim(),
        commutant_dim_bruteforce(3, 4, &plain_mult(&taft.alg))
    );
    let ut = Algebra::upper_triangular(&field(2), 3);
    assert_eq!(center(&ut).dim(), commutant_dim_bruteforce(2, 6, &plain_mult(&ut)));
    let s3 = Algebra::group_algebra(&field(2), &GroupTable::symmetric3());
    assert_eq!(center(&s3).dim(), commutant_dim_bruteforce(2, 6, &plain_mult(&s3)));
}

#[test]
fn radical_dimensions() {
    let rad = |a: &Algebra| radical(a).unwrap().dim();
    // F_3[S3] has two 1-dimensional simples, so the radical has dimension 6 - 2
    assert_eq!(rad(&Algebra::group_algebra(&field(3), &GroupTable::symmetric3())), 4);
    assert_eq!(rad(&Algebra::group_algebra(&field(2), &GroupTable::symmetric3())), 1);
    assert_eq!(rad(&Algebra::group_algebra(&field(7), &GroupTable::symmetric3())), 0);
    assert_eq!(rad(&Algebra::group_algebra(&field(0), &GroupTable::quaternion8())), 0);
    assert_eq!(rad(&Algebra::group_algebra(&field(2), &GroupTable::cyclic(4))), 3);
    assert_eq!(rad(&Algebra::upper_triangular(&field(0), 4)), 6);
    assert_eq!(rad(&gen_sweedler(&field(5)).unwrap().alg), 2);
}
