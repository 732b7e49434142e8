//! Built-in Hopf algebras: group algebras, their duals, Taft and Sweedler.

use crate::algebra::Algebra;
use crate::field::{Field, Scalar};
use crate::groups::GroupTable;
use crate::matrix::Matrix;

use super::{Coproduct, HopfAlgebra, HopfError};

fn check_table(g: &GroupTable) -> Result<GroupTable, HopfError> {
    Ok(GroupTable::new(g.names.clone(), g.table.clone())?)
}

/// `kG`: every group element is grouplike and `S(g) = g^{-1}`.
pub fn gen_group_algebra(g: &GroupTable, field: &Field) -> Result<HopfAlgebra, HopfError> {
    let g = check_table(g)?;
    let n = g.order();
    let alg = Algebra::group_algebra(field, &g);
    let comult = (0..n).map(|a| vec![(a, a, field.one())]).collect();
    let counit = vec![field.one(); n];
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        s.set(g.inverse(a), a, field.one());
    }
    HopfAlgebra::new(alg, comult, counit, s)
}

/// `(kG)*` on the basis of point functions `d(x)`.
pub fn gen_dual_group_algebra(g: &GroupTable, field: &Field) -> Result<HopfAlgebra, HopfError> {
    let g = check_table(g)?;
    let n = g.order();
    let mult = (0..n).map(|a| (a, a, vec![(a, field.one())])).collect();
    let names = g.names.iter().map(|s| format!("d({s})")).collect();
    let alg = Algebra::new(field, names, mult, vec![field.one(); n])?;
    let mut comult: Vec<Coproduct> = vec![Vec::new(); n];
    for y in 0..n {
        for z in 0..n {
            comult[g.mul(y, z)].push((y, z, field.one()));
        }
    }
    let mut counit = vec![field.zero(); n];
    counit[g.identity] = field.one();
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        s.set(g.inverse(a), a, field.one());
    }
    HopfAlgebra::new(alg, comult, counit, s)
}

fn monomial_name(a: usize, b: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let s = format!("{}{}", part("g", a), part("x", b));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Gaussian binomial coefficients `[b choose k]_q` for `0 <= k <= b < n`.
fn q_binomials(q: &Scalar, n: usize) -> Vec<Vec<Scalar>> {
    let one = q.one_like();
    let zero = q.zero_like();
    let mut t: Vec<Vec<Scalar>> = vec![vec![zero.clone(); n]; n];
    for b in 0..n {
        t[b][0] = one.clone();
        for k in 1..=b {
            // [b, k] = [b-1, k-1] + q^k [b-1, k]
            let right = if k < b {
                &q.pow(k as u64) * &t[b - 1][k]
            } else {
                zero.clone()
            };
            t[b][k] = &t[b - 1][k - 1] + &right;
        }
    }
    t
}

/// Taft algebra `T_n(q)` on the basis `g^a x^b` (index `b * n + a`) with
/// `g^n = 1`, `x^n = 0`, `xg = q gx`, `Δ(g) = g ⊗ g`, `Δ(x) = x ⊗ g + 1 ⊗ x`.
/// `q` must be a primitive `n`-th root of unity.
pub fn gen_taft(n: usize, q: &Scalar, field: &Field) -> Result<HopfAlgebra, HopfError> {
    if n < 2 {
        return Err(HopfError::InvalidParameter(format!(
            "Taft algebras need n >= 2, got {n}"
        )));
    }
    if !field.contains(q) {
        return Err(HopfError::InvalidParameter(format!("q = {q} is not in {field}")));
    }
    match q.multiplicative_order(1 << 20) {
        Some(k) if k == n as u64 => gen_taft_unchecked(n, q, field),
        Some(k) => Err(HopfError::InvalidParameter(format!(
            "q = {q} has multiplicative order {k} in {field}, so it is not a primitive root of unity of order {n}"
        ))),
        None => Err(HopfError::InvalidParameter(format!(
            "q = {q} is not a root of unity of order {n} in {field}"
        ))),
    }
}

/// The Taft structure constants for any nonzero `q`; only a Hopf algebra when
/// `q` is a primitive `n`-th root of unity. Useful to exercise the verifier.
pub fn gen_taft_unchecked(n: usize, q: &Scalar, field: &Field) -> Result<HopfAlgebra, HopfError> {
    if q.is_zero() {
        return Err(HopfError::InvalidParameter("q must be nonzero".into()));
    }
    let dim = n * n;
    let idx = |a: usize, b: usize| b * n + a;
    let mut mult = Vec::with_capacity(dim * dim);
    for b in 0..n {
        for a in 0..n {
            for d in 0..n {
                for c in 0..n {
                    let terms = if b + d < n {
                        vec![(idx((a + c) % n, b + d), q.pow((b * c) as u64))]
                    } else {
                        vec![]
                    };
                    mult.push((idx(a, b), idx(c, d), terms));
                }
            }
        }
    }
    let names = (0..dim).map(|i| monomial_name(i % n, i / n)).collect();
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    let alg = Algebra::new(field, names, mult, unit)?;

    let binom = q_binomials(q, n);
    let mut comult: Vec<Coproduct> = vec![Vec::new(); dim];
    let mut counit = vec![field.zero(); dim];
    for b in 0..n {
        for a in 0..n {
            for k in 0..=b {
                if !binom[b][k].is_zero() {
                    comult[idx(a, b)].push((idx(a, k), idx((a + k) % n, b - k), binom[b][k].clone()));
                }
            }
            if b == 0 {
                counit[idx(a, 0)] = field.one();
            }
        }
    }

    // S(g^a x^b) = S(x)^b g^{-a} with S(x) = -x g^{-1}
    let g_inv = alg.basis_vector(idx(n - 1, 0));
    let s_x: Vec<Scalar> = alg
        .mul(&alg.basis_vector(idx(0, 1)), &g_inv)
        .iter()
        .map(|c| -c)
        .collect();
    let mut s = Matrix::zeros(field, dim, dim);
    for b in 0..n {
        for a in 0..n {
            let image = alg.mul(&alg.pow(&s_x, b as u64), &alg.pow(&g_inv, a as u64));
            for (r, c) in image.into_iter().enumerate() {
                s.set(r, idx(a, b), c);
            }
        }
    }
    HopfAlgebra::new(alg, comult, counit, s)
}

/// Sweedler's four-dimensional algebra on `[1, g, x, gx]` with `g^2 = 1`,
/// `x^2 = 0`, `xg = -gx`, `Δ(x) = x ⊗ 1 + g ⊗ x`, `S(x) = -gx`.
pub fn gen_sweedler(field: &Field) -> Result<HopfAlgebra, HopfError> {
    if field.characteristic() == 2 {
        return Err(HopfError::InvalidParameter(
            "Sweedler's algebra needs characteristic other than 2".into(),
        ));
    }
    let one = field.one();
    let m1 = -&one;
    // basis index = 2 * (power of x) + (power of g)
    let mut mult = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            let terms = if b + d < 2 {
                let sign = if b * c == 1 { m1.clone() } else { one.clone() };
                vec![(2 * (b + d) + (a + c) % 2, sign)]
            } else {
                vec![]
            };
            mult.push((i, j, terms));
        }
    }
    let names = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let alg = Algebra::new(
        field,
        names,
        mult,
        vec![one.clone(), field.zero(), field.zero(), field.zero()],
    )?;
    let comult = vec![
        vec![(0, 0, one.clone())],
        vec![(1, 1, one.clone())],
        vec![(2, 0, one.clone()), (1, 2, one.clone())],
        vec![(3, 1, one.clone()), (0, 3, one.clone())],
    ];
    let counit = vec![one.clone(), one.clone(), field.zero(), field.zero()];
    let mut s = Matrix::zeros(field, 4, 4);
    s.set(0, 0, one.clone());
    s.set(1, 1, one.clone());
    s.set(3, 2, m1);
    s.set(2, 3, one);
    HopfAlgebra::new(alg, comult, counit, s)
}
