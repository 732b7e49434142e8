//! Integer matrices, Smith normal form, and characters of finitely presented
//! abelian groups with values in the multiplicative group of a field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::error::{extension_hint, SplittingError};
use crate::factor;
use crate::field::{Field, Scalar};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("character group is infinite (free rank {free_rank})")]
    Infinite { free_rank: usize },
    #[error("character group too large to enumerate ({0} elements)")]
    TooLarge(String),
    #[error("field characteristic {field} does not match requested characteristic {requested}")]
    CharacteristicMismatch { field: u64, requested: u64 },
    #[error(transparent)]
    Splitting(#[from] SplittingError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            data.extend(r);
        }
        IntMatrix { rows: n, cols, data }
    }

    pub fn from_i64s(rows: &[&[i64]], cols: usize) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        sign * &a[n * n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = f * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = f * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", r.join(","))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form: returns `(U, D, V)` with `U * m * V = D`, `U` and `V`
/// unimodular, `D` diagonal with nonnegative entries `d_1 | d_2 | ...`.
///
/// Pivots are always the nonzero entry of least absolute value in the
/// remaining submatrix (first in row-major order on ties).
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_entry(&a, t, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let piv = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a.get(i, t).div_floor(&piv);
                let nq = -q;
                a.add_row(i, t, &nq);
                u.add_row(i, t, &nq);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a.get(t, j).div_floor(&piv);
                let nq = -q;
                a.add_col(j, t, &nq);
                v.add_col(j, t, &nq);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // a smaller remainder now sits in row or column t
                let cands = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_entry(&a, t, cands).unwrap();
                if pi != t {
                    a.swap_rows(t, pi);
                    u.swap_rows(t, pi);
                }
                if pj != t {
                    a.swap_cols(t, pj);
                    v.swap_cols(t, pj);
                }
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    (u, a, v)
}

fn min_entry(a: &IntMatrix, _t: usize, cands: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cands {
        let x = a.get(i, j);
        if x.is_zero() {
            continue;
        }
        let ax = x.abs();
        if best.as_ref().is_none_or(|(_, b)| ax < *b) {
            best = Some(((i, j), ax));
        }
    }
    best.map(|(p, _)| p)
}

/// `Z^generators / (row span of relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupPresentation {
    pub generators: usize,
    pub relations: IntMatrix,
}

impl AbelianGroupPresentation {
    pub fn new(generators: usize, relations: IntMatrix) -> AbelianGroupPresentation {
        assert_eq!(
            relations.cols(),
            generators,
            "relation width must equal generator count"
        );
        AbelianGroupPresentation { generators, relations }
    }

    pub fn cyclic(n: i64) -> AbelianGroupPresentation {
        AbelianGroupPresentation::new(1, IntMatrix::from_i64s(&[&[n]], 1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// Invariant factors, each at least 2, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn trivial() -> AbelianInvariants {
        AbelianInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` if infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    pub fn is_cyclic(&self) -> bool {
        self.free_rank + self.torsion.len() <= 1
    }

    /// Exponent of the torsion part.
    pub fn exponent(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |acc, d| acc.lcm(d))
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

pub fn abelian_invariants(p: &AbelianGroupPresentation) -> AbelianInvariants {
    let (_, d, _) = snf(&p.relations);
    let diag = d.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    AbelianInvariants {
        free_rank: p.generators - rank,
        torsion: diag.into_iter().filter(|x| *x > BigInt::one()).collect(),
    }
}

/// Structure of the torsion part of `Hom(A, k^x)` for `k` of characteristic `char_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCharacterGroup {
    pub invariants: AbelianInvariants,
    /// Set when `A` has positive free rank, so `Hom(A, k^x)` is infinite.
    pub infinite: bool,
}

/// Replaces each invariant factor by its part prime to `char_p` (no change in
/// characteristic zero), since `k^x` has no `p`-torsion.
pub fn unit_character_group(inv: &AbelianInvariants, char_p: u64) -> UnitCharacterGroup {
    let torsion = inv
        .torsion
        .iter()
        .map(|d| strip_prime(d, char_p))
        .filter(|d| *d > BigInt::one())
        .collect();
    UnitCharacterGroup {
        invariants: AbelianInvariants {
            free_rank: inv.free_rank,
            torsion,
        },
        infinite: inv.free_rank > 0,
    }
}

fn strip_prime(d: &BigInt, p: u64) -> BigInt {
    let mut d = d.clone();
    if p > 1 {
        let pb = BigInt::from(p);
        while d.is_multiple_of(&pb) && !d.is_zero() {
            d /= &pb;
        }
    }
    d
}

/// A homomorphism from a presented group to the roots of unity of order
/// dividing `modulus`: generator `i` maps to `zeta^exponents[i]` for a fixed
/// primitive `modulus`-th root `zeta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitCharacter {
    pub modulus: u64,
    pub exponents: Vec<u64>,
    /// Evaluated values in a chosen field, when requested.
    pub values: Option<Vec<Scalar>>,
}

impl UnitCharacter {
    pub fn trivial(n: usize) -> UnitCharacter {
        UnitCharacter {
            modulus: 1,
            exponents: vec![0; n],
            values: None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e % self.modulus.max(1) == 0)
    }

    /// Exponents as reduced fractions `e / modulus` in `[0, 1)`, comparable
    /// across characters with different moduli.
    pub fn normalized(&self) -> Vec<(u64, u64)> {
        self.exponents
            .iter()
            .map(|&e| {
                let m = self.modulus.max(1);
                let e = e % m;
                let g = e.gcd(&m);
                (e / g, m / g)
            })
            .collect()
    }

    /// Whether the character kills the integer relation `row` (multiplicatively).
    pub fn satisfies(&self, row: &[BigInt]) -> bool {
        let m = BigInt::from(self.modulus.max(1));
        let s = row
            .iter()
            .zip(&self.exponents)
            .fold(BigInt::zero(), |acc, (r, &e)| acc + r * BigInt::from(e));
        s.mod_floor(&m).is_zero()
    }

    /// Pointwise product, over the common modulus.
    pub fn product(&self, other: &UnitCharacter) -> UnitCharacter {
        let m = self.modulus.max(1).lcm(&other.modulus.max(1));
        let (a, b) = (m / self.modulus.max(1), m / other.modulus.max(1));
        UnitCharacter {
            modulus: m,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&x, &y)| (x * a + y * b) % m)
                .collect(),
            values: match (&self.values, &other.values) {
                (Some(u), Some(v)) => Some(u.iter().zip(v).map(|(x, y)| x * y).collect()),
                _ => None,
            },
        }
    }

    pub fn inverse(&self) -> UnitCharacter {
        let m = self.modulus.max(1);
        UnitCharacter {
            modulus: m,
            exponents: self.exponents.iter().map(|&x| (m - x % m) % m).collect(),
            values: self
                .values
                .as_ref()
                .map(|v| v.iter().map(|x| x.inv().expect("root of unity")).collect()),
        }
    }
}

/// A primitive `n`-th root of unity in `field`, chosen canonically (least in
/// the field's element order), or `None` if the field has none.
pub fn primitive_root_of_unity(field: &Field, n: u64) -> Option<Scalar> {
    if n == 1 {
        return Some(field.one());
    }
    if let Some(q) = field.order() {
        if (q - 1) % n as u128 != 0 {
            return None;
        }
        // x^n - 1 splits completely; take its least root of exact order n
        let mut coeffs = vec![field.zero(); n as usize + 1];
        coeffs[0] = -field.one();
        coeffs[n as usize] = field.one();
        let f = Poly::new(field, coeffs);
        return factor::roots(&f)
            .ok()?
            .into_iter()
            .filter(|r| r.multiplicative_order(n) == Some(n))
            .min_by_key(|r| element_index(field, r));
    }
    if field.characteristic() == 0 && field.degree() == 1 {
        return (n == 2).then(|| -field.one());
    }
    let mut coeffs = vec![field.zero(); n as usize + 1];
    coeffs[0] = -field.one();
    coeffs[n as usize] = field.one();
    let f = Poly::new(field, coeffs);
    factor::roots(&f)
        .ok()?
        .into_iter()
        .find(|r| r.multiplicative_order(n) == Some(n))
}

/// Position of a finite-field element in [`Field::element`] order.
fn element_index(field: &Field, x: &Scalar) -> u128 {
    if let Some(v) = x.as_residue() {
        return v as u128;
    }
    let p = field.characteristic() as u128;
    x.coeffs()
        .unwrap()
        .iter()
        .rev()
        .fold(0u128, |acc, c| acc * p + element_index(&field.prime_field(), c))
}

const ENUMERATION_LIMIT: u64 = 1 << 20;

/// All characters `A -> k^x` (`k` of characteristic `char_p`), lexicographic in
/// their exponent vectors. With a field, each character is also evaluated.
pub fn enumerate_characters(
    p: &AbelianGroupPresentation,
    char_p: u64,
    field: Option<&Field>,
) -> Result<Vec<UnitCharacter>, LatticeError> {
    if let Some(f) = field {
        if f.characteristic() != char_p {
            return Err(LatticeError::CharacteristicMismatch {
                field: f.characteristic(),
                requested: char_p,
            });
        }
    }
    let (_, d, v) = snf(&p.relations);
    let n = p.generators;
    // SNF diagonal padded with zeros for generators beyond the relation count
    let mut diag: Vec<BigInt> = d.diagonal();
    diag.resize(n, BigInt::zero());
    let free = diag.iter().filter(|x| x.is_zero()).count();
    if free > 0 {
        return Err(LatticeError::Infinite { free_rank: free });
    }
    let adjusted: Vec<u64> = diag
        .iter()
        .map(|x| strip_prime(x, char_p).to_u64())
        .collect::<Option<_>>()
        .ok_or_else(|| LatticeError::TooLarge(format!("{diag:?}")))?;
    let total = adjusted
        .iter()
        .try_fold(1u64, |acc, &x| acc.checked_mul(x).filter(|&t| t <= ENUMERATION_LIMIT))
        .ok_or_else(|| LatticeError::TooLarge(format!("{adjusted:?}")))?;
    let modulus = adjusted.iter().fold(1u64, |acc, &x| acc.lcm(&x));
    let zeta = match field {
        Some(f) => Some(primitive_root_of_unity(f, modulus).ok_or_else(|| {
            SplittingError::new(
                format!("{f} has no primitive {modulus}-th root of unity"),
                vec![format!("x^{modulus}-1")],
                extension_hint(f, Some(modulus), None),
            )
        })?),
        None => None,
    };
    // generator i maps to sum_t V[i][t] * a_t * (modulus / d_t)
    let weights: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|t| {
                    let m = BigInt::from(modulus);
                    let w = v.get(i, t).mod_floor(&m) * BigInt::from(modulus / adjusted[t]);
                    w.mod_floor(&m).to_u64().unwrap()
                })
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(total as usize);
    let mut a = vec![0u64; n];
    for _ in 0..total {
        let exps: Vec<u64> = (0..n)
            .map(|i| {
                (0..n).fold(0u64, |acc, t| {
                    ((acc as u128 + weights[i][t] as u128 * a[t] as u128) % modulus as u128) as u64
                })
            })
            .collect();
        let values = zeta.as_ref().map(|z| exps.iter().map(|&e| z.pow(e)).collect());
        out.push(UnitCharacter {
            modulus,
            exponents: exps,
            values,
        });
        for t in 0..n {
            a[t] += 1;
            if a[t] < adjusted[t] {
                break;
            }
            a[t] = 0;
        }
    }
    out.sort_by(|x, y| x.exponents.cmp(&y.exponents));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn check_snf(m: &IntMatrix) {
        let (u, d, v) = snf(m);
        assert_eq!(u.mul(m).mul(&v), d);
        assert!(u.is_unimodular() && v.is_unimodular());
        assert!(d.is_diagonal());
        let diag = d.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn snf_examples() {
        let (_, d, _) = snf(&IntMatrix::identity(3));
        assert_eq!(d, IntMatrix::identity(3));
        let m = IntMatrix::from_i64s(&[&[2, 0], &[0, 3]], 2);
        let (_, d, _) = snf(&m);
        assert_eq!(d, IntMatrix::from_i64s(&[&[1, 0], &[0, 6]], 2));
        check_snf(&m);
        let z = IntMatrix::zeros(2, 3);
        let (u, d, v) = snf(&z);
        assert_eq!(d, z);
        assert_eq!(u, IntMatrix::identity(2));
        assert_eq!(v, IntMatrix::identity(3));
    }

    #[test]
    fn snf_rectangular() {
        check_snf(&IntMatrix::from_i64s(&[&[4, 6, 8], &[6, 9, 12]], 3));
        check_snf(&IntMatrix::from_i64s(&[&[0, 2], &[3, 0], &[5, 7]], 2));
    }

    #[test]
    fn invariants_examples() {
        assert_eq!(
            abelian_invariants(&AbelianGroupPresentation::cyclic(3)),
            AbelianInvariants {
                free_rank: 0,
                torsion: vec![BigInt::from(3)]
            }
        );
        let free = AbelianGroupPresentation::new(2, IntMatrix::zeros(0, 2));
        assert_eq!(abelian_invariants(&free).free_rank, 2);
        let p = AbelianGroupPresentation::new(3, IntMatrix::from_i64s(&[&[1, 0, 0], &[0, 2, 0], &[0, 1, -1]], 3));
        let inv = abelian_invariants(&p);
        assert_eq!(inv.free_rank, 0);
        assert_eq!(inv.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn adjusted_character_group() {
        let inv = AbelianInvariants {
            free_rank: 0,
            torsion: vec![BigInt::from(6)],
        };
        assert_eq!(unit_character_group(&inv, 3).invariants.torsion, vec![BigInt::from(2)]);
        assert_eq!(unit_character_group(&inv, 0).invariants.torsion, vec![BigInt::from(6)]);
        let z = AbelianInvariants {
            free_rank: 1,
            torsion: vec![],
        };
        assert!(unit_character_group(&z, 0).infinite);
    }

    #[test]
    fn z3_characters_in_cyclotomic_field() {
        let k = Field::from_spec(&FieldSpec::parse("ext:Q:x^2+x+1").unwrap()).unwrap();
        let chars = enumerate_characters(&AbelianGroupPresentation::cyclic(3), 0, Some(&k)).unwrap();
        assert_eq!(chars.len(), 3);
        let vals: Vec<Scalar> = chars.iter().map(|c| c.values.as_ref().unwrap()[0].clone()).collect();
        for v in &vals {
            assert!(v.pow(3).is_one());
        }
        assert!(vals[0].is_one());
        assert_ne!(vals[1], vals[2]);
        assert!(!vals[1].is_one());
    }

    #[test]
    fn trivial_group_has_one_character() {
        let p = AbelianGroupPresentation::new(1, IntMatrix::from_i64s(&[&[1]], 1));
        let chars = enumerate_characters(&p, 0, None).unwrap();
        assert_eq!(chars.len(), 1);
        assert!(chars[0].is_trivial());
    }

    #[test]
    fn z6_in_characteristic_three() {
        let f7 = Field::prime(7).unwrap();
        assert!(matches!(
            enumerate_characters(&AbelianGroupPresentation::cyclic(6), 3, Some(&f7)),
            Err(LatticeError::CharacteristicMismatch { .. })
        ));
        let f3 = Field::prime(3).unwrap();
        let chars = enumerate_characters(&AbelianGroupPresentation::cyclic(6), 3, Some(&f3)).unwrap();
        assert_eq!(chars.len(), 2);
        let vals: Vec<i64> = chars
            .iter()
            .map(|c| c.values.as_ref().unwrap()[0].to_i64().unwrap())
            .collect();
        assert_eq!(vals, vec![1, 2]);
    }

    #[test]
    fn missing_roots_of_unity() {
        let q = Field::rationals();
        let err = enumerate_characters(&AbelianGroupPresentation::cyclic(3), 0, Some(&q)).unwrap_err();
        assert!(matches!(err, LatticeError::Splitting(_)));
        let f2 = Field::prime(2).unwrap();
        let err = enumerate_characters(&AbelianGroupPresentation::cyclic(3), 2, Some(&f2)).unwrap_err();
        assert!(err.to_string().contains("extend to F_4"), "{err}");
    }

    #[test]
    fn infinite_group_is_rejected() {
        let p = AbelianGroupPresentation::new(2, IntMatrix::from_i64s(&[&[1, 1]], 2));
        assert!(matches!(
            enumerate_characters(&p, 0, None),
            Err(LatticeError::Infinite { free_rank: 1 })
        ));
    }
}
