//! Polynomial factorization.
//!
//! Over finite fields the factorization is complete: squarefree decomposition,
//! distinct-degree splitting, then Cantor–Zassenhaus equal-degree splitting
//! driven by a fixed-seed generator so results are reproducible.
//!
//! In characteristic zero only linear factors are extracted. Roots are found
//! p-adically: reduce modulo a suitable prime, Hensel-lift each root, and
//! recover the exact value by rational reconstruction (for `Q(a)`, one
//! coordinate per embedding, recombined through a Vandermonde solve). What is
//! left after removing the linear factors is returned as an opaque block.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{is_prime_u64, Field, Scalar};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("no suitable auxiliary prime found for {0}")]
    NoGoodPrime(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// Monic factor.
    pub poly: Poly,
    pub multiplicity: usize,
    /// `false` for opaque characteristic-zero blocks that were not split
    /// further and may still be reducible.
    pub irreducible: bool,
}

const EDF_SEED: u64 = 0x5eed_f00d;
const EXT_PRECISION_CAP_BITS: u64 = 4096;

/// Factors `f` into monic factors with multiplicities, sorted by degree and
/// then coefficients. The leading coefficient of `f` is dropped.
pub fn factor(f: &Poly) -> Result<Vec<Factor>, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        if f.field().is_finite() {
            for g in factor_squarefree_finite(&part) {
                out.push(Factor {
                    poly: g,
                    multiplicity: mult,
                    irreducible: true,
                });
            }
        } else {
            let roots = char0_roots(&part)?;
            let mut rest = part.clone();
            for r in &roots {
                let lin = Poly::linear(f.field(), r);
                rest = rest.div_exact(&lin);
                out.push(Factor {
                    poly: lin,
                    multiplicity: mult,
                    irreducible: true,
                });
            }
            if rest.degree().unwrap_or(0) > 0 {
                // no roots left: degree 2 and 3 blocks are irreducible
                let deg = rest.degree().unwrap();
                out.push(Factor {
                    poly: rest.monic(),
                    multiplicity: mult,
                    irreducible: deg <= 3,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        a.poly
            .degree()
            .cmp(&b.poly.degree())
            .then_with(|| a.poly.coeffs().iter().rev().cmp(b.poly.coeffs().iter().rev()))
            .then_with(|| a.multiplicity.cmp(&b.multiplicity))
    });
    Ok(out)
}

/// Distinct roots of `f` in its field, sorted.
pub fn roots(f: &Poly) -> Result<Vec<Scalar>, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let mut out: Vec<Scalar> = factor(f)?
        .into_iter()
        .filter(|fac| fac.poly.degree() == Some(1))
        .map(|fac| -&fac.poly.coeffs()[0])
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Squarefree decomposition `f = lc * prod g_i^i` with monic, pairwise coprime,
/// squarefree `g_i`. Works in any characteristic.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = if f.field().characteristic() == 0 {
        yun(&f)
    } else {
        sqf_char_p(&f)
    };
    out.retain(|(g, _)| g.degree().unwrap_or(0) > 0);
    out.sort_by_key(|(_, m)| *m);
    out
}

fn yun(f: &Poly) -> Vec<(Poly, usize)> {
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0);
    let mut c = df.div_exact(&a0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    let mut out = Vec::new();
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_exact(&a);
        c = d.div_exact(&a);
        d = c.sub(&b.derivative());
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sqf_char_p(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let p = field.characteristic() as usize;
    let mut out = Vec::new();
    let df = f.derivative();
    if df.is_zero() {
        // f(x) = g(x^p)
        let g = pth_root(f);
        for (h, m) in sqf_char_p(&g) {
            out.push((h, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        let g = pth_root(&c);
        for (h, m) in sqf_char_p(&g) {
            out.push((h, m * p));
        }
    }
    // merge equal multiplicities
    out.sort_by_key(|(_, m)| *m);
    let mut merged: Vec<(Poly, usize)> = Vec::new();
    for (h, m) in out {
        match merged.last_mut() {
            Some((g, mm)) if *mm == m => *g = g.mul(&h),
            _ => merged.push((h, m)),
        }
    }
    merged
}

/// `g` with `g(x)^p = f(x)` for `f` a polynomial in `x^p` over a finite field.
fn pth_root(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let q = field.order_big().expect("finite field");
    let e = q / BigUint::from(p as u64);
    let coeffs: Vec<Scalar> = f.coeffs().iter().step_by(p).map(|c| c.pow_big(&e)).collect();
    Poly::new(field, coeffs)
}

/// Complete factorization of a monic squarefree polynomial over a finite field.
fn factor_squarefree_finite(f: &Poly) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        equal_degree(&g, d, &mut rng, &mut out);
    }
    out
}

fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let q = field.order_big().expect("finite field");
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = x.rem(&rest);
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod(&q, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = rest.degree() {
        if d > 0 {
            out.push((rest, d));
        }
    }
    out
}

fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.monic());
        return;
    }
    let field = f.field();
    let q = field.order_big().unwrap();
    let p = field.characteristic();
    loop {
        let a = Poly::new(field, (0..n).map(|_| field.random(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        let candidate = if g.degree().unwrap() > 0 {
            g
        } else if p == 2 {
            // trace map a + a^2 + ... + a^(2^(k d - 1))
            let k = field.degree() * d;
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..k {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc.gcd(f)
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = a.pow_mod(&e, f).sub(&Poly::one(field));
            b.gcd(f)
        };
        let cd = candidate.degree().unwrap_or(0);
        if cd > 0 && cd < n {
            let other = f.div_exact(&candidate);
            equal_degree(&candidate, d, rng, out);
            equal_degree(&other, d, rng, out);
            return;
        }
    }
}

/// Decides irreducibility of a monic polynomial over `Q` or `F_p`.
///
/// Returns `Err` when a reducible-looking `Q` polynomial of degree >= 4 can
/// neither be split nor certified by the modular degree-pattern test.
pub fn certify_irreducible(f: &Poly) -> Result<bool, FactorError> {
    let n = match f.degree() {
        None => return Err(FactorError::ZeroPolynomial),
        Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    let sqf = squarefree_decomposition(f);
    if sqf.len() != 1 || sqf[0].1 != 1 {
        return Ok(false);
    }
    if f.field().is_finite() {
        let facs = factor_squarefree_finite(&f.monic());
        return Ok(facs.len() == 1);
    }
    if !char0_roots(f)?.is_empty() {
        return Ok(false);
    }
    if n <= 3 {
        return Ok(true);
    }
    if f.field().degree() != 1 {
        return Err(FactorError::NoGoodPrime(f.to_string()));
    }
    let ints = integer_coefficients(f);
    // subset sums of factor degrees that survive every prime
    let mut possible: Vec<bool> = (0..=n).map(|k| k > 0 && k < n).collect();
    let mut tried = 0;
    for p in (3u64..).filter(|&p| is_prime_u64(p)) {
        if tried >= 60 {
            break;
        }
        if (ints[n].clone() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Field::prime(p).unwrap();
        let red = Poly::new(&fp, ints.iter().map(|c| fp.from_bigint(c)).collect());
        if !red.gcd(&red.derivative()).is_one() {
            continue;
        }
        tried += 1;
        let degs: Vec<usize> = factor_squarefree_finite(&red.monic())
            .iter()
            .map(|g| g.degree().unwrap())
            .collect();
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for k in 1..n {
            possible[k] &= sums[k];
        }
        if !possible.iter().any(|&b| b) {
            return Ok(true);
        }
    }
    Err(FactorError::NoGoodPrime(f.to_string()))
}

/// Primitive integer polynomial proportional to a polynomial over `Q`.
fn integer_coefficients(f: &Poly) -> Vec<BigInt> {
    let rats: Vec<BigRational> = f.coeffs().iter().map(|c| c.as_rational().unwrap().clone()).collect();
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &den).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

/// Roots of a squarefree polynomial over `Q` or `Q(a)`.
fn char0_roots(f: &Poly) -> Result<Vec<Scalar>, FactorError> {
    match f.field().degree() {
        1 => rational_roots(f),
        _ => extension_roots(f),
    }
}

fn mod_floor(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn mod_inv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn deriv_coeffs(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

/// Newton-lifts a simple root `r0` modulo `p` of `coeffs` to modulo `target`
/// (a power of `p`). `coeffs` must already be reduced modulo `target`.
fn hensel_lift(coeffs: &[BigInt], r0: &BigInt, p: &BigInt, target: &BigInt) -> BigInt {
    let deriv = deriv_coeffs(coeffs);
    let mut m = p.clone();
    let mut r = r0.clone();
    while &m < target {
        m = (&m * &m).min(target.clone());
        let fr = eval_mod(coeffs, &r, &m);
        let dfr = eval_mod(&deriv, &r, &m);
        let inv = mod_inv(&dfr, &m).expect("simple root");
        r = mod_floor(&(r - fr * inv), &m);
    }
    r
}

fn rational_reconstruct(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn find_prime<F: FnMut(u64) -> bool>(mut ok: F) -> Option<u64> {
    (1009u64..400_000).filter(|&p| is_prime_u64(p)).find(|&p| ok(p))
}

fn finite_roots_u64(field: &Field, coeffs: &[BigInt]) -> Vec<u64> {
    let poly = Poly::new(field, coeffs.iter().map(|c| field.from_bigint(c)).collect());
    roots(&poly)
        .unwrap_or_default()
        .into_iter()
        .map(|r| r.as_residue().unwrap())
        .collect()
}

fn rational_roots(f: &Poly) -> Result<Vec<Scalar>, FactorError> {
    let field = f.field().clone();
    let mut ints = integer_coefficients(f);
    let mut out = Vec::new();
    if ints[0].is_zero() {
        out.push(field.zero());
        while ints.len() > 1 && ints[0].is_zero() {
            ints.remove(0);
        }
    }
    if ints.len() <= 1 {
        return Ok(out);
    }
    let n = ints.len() - 1;
    let bound = ints[0].abs().max(ints[n].abs());
    let need = BigInt::from(2) * &bound * &bound;
    let prime = find_prime(|p| {
        let pb = BigInt::from(p);
        if (&ints[n] % &pb).is_zero() {
            return false;
        }
        let fp = Field::prime(p).unwrap();
        let red = Poly::new(&fp, ints.iter().map(|c| fp.from_bigint(c)).collect());
        red.gcd(&red.derivative()).is_one()
    })
    .ok_or_else(|| FactorError::NoGoodPrime(f.to_string()))?;
    let pb = BigInt::from(prime);
    let fp = Field::prime(prime).unwrap();
    let mut modulus = pb.clone();
    while modulus <= need {
        modulus = &modulus * &modulus;
    }
    let reduced: Vec<BigInt> = ints.iter().map(|c| c.mod_floor(&modulus)).collect();
    for r in finite_roots_u64(&fp, &ints) {
        let lifted = hensel_lift(&reduced, &BigInt::from(r), &pb, &modulus);
        if let Some(q) = rational_reconstruct(&lifted, &modulus) {
            let s = field.from_rational(&q).unwrap();
            if f.eval(&s).is_zero() {
                out.push(s);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Inverse of a square matrix modulo `m`, assuming unit pivots exist.
fn inverse_mod(a: &[Vec<BigInt>], m: &BigInt) -> Option<Vec<Vec<BigInt>>> {
    let n = a.len();
    let mut aug: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigInt> = row.iter().map(|x| x.mod_floor(m)).collect();
            r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| mod_inv(&aug[r][col], m).is_some())?;
        aug.swap(col, piv);
        let inv = mod_inv(&aug[col][col], m)?;
        for x in aug[col].iter_mut() {
            *x = (&*x * &inv).mod_floor(m);
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for k in 0..2 * n {
                    let sub = &f * &aug[col][k];
                    aug[r][k] = (&aug[r][k] - sub).mod_floor(m);
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn extension_roots(f: &Poly) -> Result<Vec<Scalar>, FactorError> {
    let field = f.field().clone();
    let base = field.base().expect("extension").clone();
    let d = field.degree();
    let f = f.monic();
    let n = f.degree().unwrap();
    if n == 0 {
        return Ok(Vec::new());
    }
    // rational coordinates c[j][i] of coefficient j along a^i
    let c: Vec<Vec<BigRational>> = f
        .coeffs()
        .iter()
        .map(|s| {
            s.coeffs()
                .unwrap()
                .iter()
                .map(|x| x.as_rational().unwrap().clone())
                .collect()
        })
        .collect();
    let den = c.iter().flatten().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let minpoly: Vec<BigInt> = match field.spec() {
        crate::field::FieldSpec::Extension { min_poly, .. } => min_poly.clone(),
        _ => unreachable!(),
    };
    let reduce_coeffs = |a: &BigInt, m: &BigInt| -> Vec<BigInt> {
        // coefficients of f with a substituted, modulo m
        c.iter()
            .map(|row| {
                let mut acc = BigInt::zero();
                let mut pw = BigInt::one();
                for r in row {
                    let num = r.numer().mod_floor(m);
                    let dinv = mod_inv(r.denom(), m).expect("denominator prime to modulus");
                    acc = (acc + num * dinv % m * &pw).mod_floor(m);
                    pw = (&pw * a).mod_floor(m);
                }
                acc
            })
            .collect()
    };
    let mut chosen: Option<(u64, Vec<u64>, Vec<Vec<u64>>)> = None;
    let _ = find_prime(|p| {
        let pb = BigInt::from(p);
        if (&den % &pb).is_zero() {
            return false;
        }
        let fp = Field::prime(p).unwrap();
        let mroots = finite_roots_u64(&fp, &minpoly);
        if mroots.len() != d {
            return false;
        }
        let mpoly = Poly::new(&fp, minpoly.iter().map(|x| fp.from_bigint(x)).collect());
        if !mpoly.gcd(&mpoly.derivative()).is_one() {
            return false;
        }
        let mut all = Vec::new();
        for a in &mroots {
            let co = reduce_coeffs(&BigInt::from(*a), &pb);
            let red = Poly::new(&fp, co.iter().map(|x| fp.from_bigint(x)).collect());
            if !red.gcd(&red.derivative()).is_one() {
                return false;
            }
            all.push(finite_roots_u64(&fp, &co));
        }
        chosen = Some((p, mroots, all));
        true
    });
    let (p, mroots, root_sets) = chosen.ok_or_else(|| FactorError::NoGoodPrime(f.to_string()))?;
    if root_sets.iter().any(|s| s.is_empty()) {
        return Ok(Vec::new());
    }
    let pb = BigInt::from(p);
    let mut consumed: Vec<Vec<bool>> = root_sets.iter().map(|s| vec![false; s.len()]).collect();
    let mut found: Vec<Scalar> = Vec::new();
    let mut modulus = pb.clone();
    while modulus.bits() < 64 {
        modulus = &modulus * &modulus;
    }
    loop {
        let min_mod: Vec<BigInt> = minpoly.iter().map(|x| x.mod_floor(&modulus)).collect();
        let lifted_a: Vec<BigInt> = mroots
            .iter()
            .map(|a| hensel_lift(&min_mod, &BigInt::from(*a), &pb, &modulus))
            .collect();
        let vander: Vec<Vec<BigInt>> = lifted_a
            .iter()
            .map(|a| (0..d).map(|i| a.modpow(&BigInt::from(i), &modulus)).collect())
            .collect();
        let vinv = inverse_mod(&vander, &modulus).expect("distinct embeddings");
        let lifted_roots: Vec<Vec<BigInt>> = lifted_a
            .iter()
            .zip(&root_sets)
            .map(|(a, rs)| {
                let co = reduce_coeffs(a, &modulus);
                rs.iter()
                    .map(|r| hensel_lift(&co, &BigInt::from(*r), &pb, &modulus))
                    .collect()
            })
            .collect();
        // walk all tuples not yet consumed
        let mut idx = vec![0usize; d];
        'tuples: loop {
            if (0..d).all(|t| !consumed[t][idx[t]]) {
                let coords: Vec<BigInt> = (0..d)
                    .map(|i| {
                        (0..d)
                            .fold(BigInt::zero(), |acc, t| acc + &vinv[i][t] * &lifted_roots[t][idx[t]])
                            .mod_floor(&modulus)
                    })
                    .collect();
                let rats: Option<Vec<BigRational>> = coords.iter().map(|u| rational_reconstruct(u, &modulus)).collect();
                if let Some(rats) = rats {
                    let cand = field.from_coeffs(rats.iter().map(|q| base.from_rational(q).unwrap()).collect());
                    if f.eval(&cand).is_zero() {
                        found.push(cand);
                        for t in 0..d {
                            consumed[t][idx[t]] = true;
                        }
                    }
                }
            }
            let mut t = 0;
            loop {
                if t == d {
                    break 'tuples;
                }
                idx[t] += 1;
                if idx[t] < root_sets[t].len() {
                    break;
                }
                idx[t] = 0;
                t += 1;
            }
        }
        let exhausted = consumed.iter().any(|c| c.iter().all(|&x| x));
        if found.len() == n || exhausted || modulus.bits() >= EXT_PRECISION_CAP_BITS {
            break;
        }
        modulus = &modulus * &modulus;
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> Field {
        Field::rationals()
    }

    fn product(factors: &[Factor], field: &Field) -> Poly {
        factors
            .iter()
            .fold(Poly::one(field), |acc, f| acc.mul(&f.poly.pow(f.multiplicity)))
    }

    #[test]
    fn x2_minus_1_over_q() {
        let f = Poly::from_i64s(&q(), &[-1, 0, 1]);
        let facs = factor(&f).unwrap();
        assert_eq!(facs.len(), 2);
        assert!(facs.iter().all(|x| x.poly.degree() == Some(1) && x.irreducible));
        assert_eq!(product(&facs, &q()), f);
    }

    #[test]
    fn x3_minus_x_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let f = Poly::from_i64s(&f3, &[0, -1, 0, 1]);
        let facs = factor(&f).unwrap();
        let mut rs: Vec<i64> = facs.iter().map(|x| (-&x.poly.coeffs()[0]).to_i64().unwrap()).collect();
        rs.sort();
        assert_eq!(rs, vec![0, 1, 2]);
        assert_eq!(product(&facs, &f3), f);
    }

    #[test]
    fn x2_plus_1_over_q_is_an_irreducible_block() {
        let f = Poly::from_i64s(&q(), &[1, 0, 1]);
        let facs = factor(&f).unwrap();
        assert_eq!(facs.len(), 1);
        assert_eq!(facs[0].poly, f);
        assert!(facs[0].irreducible);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(factor(&Poly::zero(&q())), Err(FactorError::ZeroPolynomial));
    }

    #[test]
    fn repeated_factors_in_char_p() {
        // (x+1)^3 (x^2+1) over F_3: x^2+1 is irreducible mod 3
        let f3 = Field::prime(3).unwrap();
        let f = Poly::from_i64s(&f3, &[1, 1])
            .pow(3)
            .mul(&Poly::from_i64s(&f3, &[1, 0, 1]));
        let facs = factor(&f).unwrap();
        assert_eq!(facs.len(), 2);
        assert_eq!(facs[0].multiplicity, 3);
        assert_eq!(facs[1].poly.degree(), Some(2));
        assert_eq!(product(&facs, &f3), f);
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 3)(3x + 5)(x - 7)
        let f = Poly::from_i64s(&q(), &[-3, 2])
            .mul(&Poly::from_i64s(&q(), &[5, 3]))
            .mul(&Poly::from_i64s(&q(), &[-7, 1]));
        let rs = roots(&f).unwrap();
        assert_eq!(rs.len(), 3);
        for r in &rs {
            assert!(f.eval(r).is_zero());
        }
    }

    #[test]
    fn cube_roots_of_unity_in_q_zeta3() {
        let k = Field::from_spec(&FieldSpec::parse("ext:Q:x^2+x+1").unwrap()).unwrap();
        let f = Poly::new(&k, vec![-k.one(), k.zero(), k.zero(), k.one()]);
        let rs = roots(&f).unwrap();
        assert_eq!(rs.len(), 3);
        for r in &rs {
            assert!(r.pow(3).is_one());
        }
        let facs = factor(&f).unwrap();
        assert_eq!(product(&facs, &k), f);
    }

    #[test]
    fn x2_plus_1_has_no_roots_in_q_zeta3() {
        let k = Field::from_spec(&FieldSpec::parse("ext:Q:x^2+x+1").unwrap()).unwrap();
        let f = Poly::new(&k, vec![k.one(), k.zero(), k.one()]);
        assert!(roots(&f).unwrap().is_empty());
    }

    #[test]
    fn certify_quartics() {
        // x^4 + 1 is irreducible over Q but splits mod every prime into
        // quadratics or linears; x^4 - 2 gets certified by degree patterns.
        let f = Poly::from_i64s(&q(), &[-2, 0, 0, 0, 1]);
        assert_eq!(certify_irreducible(&f), Ok(true));
        let g = Poly::from_i64s(&q(), &[1, 0, 1]).mul(&Poly::from_i64s(&q(), &[2, 0, 1]));
        assert!(certify_irreducible(&g).is_err());
    }

    #[test]
    fn f4_roots_of_x3_minus_1() {
        let k = Field::from_spec(&FieldSpec::parse("ext:Fp:2:x^2+x+1").unwrap()).unwrap();
        let f = Poly::new(&k, vec![k.one(), k.zero(), k.zero(), k.one()]);
        assert_eq!(roots(&f).unwrap().len(), 3);
    }

    #[test]
    fn product_property_over_f7() {
        let f7 = Field::prime(7).unwrap();
        for seed in 0..40i64 {
            let coeffs: Vec<i64> = (0..7).map(|i| (seed * 31 + i * i * 17 + i) % 7).collect();
            let mut f = Poly::from_i64s(&f7, &coeffs);
            if f.is_zero() {
                continue;
            }
            f = f.monic();
            let facs = factor(&f).unwrap();
            assert_eq!(product(&facs, &f7), f);
        }
    }
}
