//! Exact scalars over `Q`, prime fields `F_p` and single-step simple extensions
//! `Q[a]/(m)` or `F_p[a]/(m)`.
//!
//! A [`Field`] is a cheap, clonable handle. A [`Scalar`] carries enough of its
//! field to do arithmetic on its own, so the usual operator traits work on
//! `&Scalar`. Mixing scalars of different fields in one operation is a
//! programming error and panics; fallible entry points (matrix construction,
//! JSON parsing) check membership up front with [`Field::contains`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("minimal polynomial must be monic of degree at least 2, got {0}")]
    BadMinPoly(String),
    #[error("extension base must be Q or a prime field (no towers)")]
    Tower,
    #[error("minimal polynomial {0} is reducible over the base field")]
    Reducible(String),
    #[error("could not certify irreducibility of {0} over Q")]
    Uncertified(String),
    #[error("field order {0} is too large for this operation")]
    TooLarge(String),
    #[error("cannot parse field spec '{0}'")]
    Parse(String),
}

/// Serializable description of a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField {
        p: u64,
    },
    /// `base[a]/(min_poly)`, coefficients low degree first, monic.
    Extension {
        base: Box<FieldSpec>,
        min_poly: Vec<BigInt>,
    },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "Fp:{p}"),
            FieldSpec::Extension { base, min_poly } => {
                write!(f, "ext:{}:{}", base, format_int_poly(min_poly, "x"))
            }
        }
    }
}

impl FieldSpec {
    /// Parses the command-line micro-syntax: `Q`, `Fp:7`, `ext:Q:x^2+x+1`,
    /// `ext:Fp:2:x^2+x+1`.
    pub fn parse(s: &str) -> Result<FieldSpec, FieldError> {
        let s = s.trim();
        let err = || FieldError::Parse(s.to_string());
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p = rest.trim().parse::<u64>().map_err(|_| err())?;
            return Ok(FieldSpec::PrimeField { p });
        }
        if let Some(rest) = s.strip_prefix("ext:") {
            let (base, poly) = if let Some(poly) = rest.strip_prefix("Q:") {
                (FieldSpec::Rationals, poly)
            } else if let Some(r) = rest.strip_prefix("Fp:") {
                let (p, poly) = r.split_once(':').ok_or_else(err)?;
                let p = p.trim().parse::<u64>().map_err(|_| err())?;
                (FieldSpec::PrimeField { p }, poly)
            } else {
                return Err(err());
            };
            let min_poly = parse_int_poly(poly).ok_or_else(err)?;
            return Ok(FieldSpec::Extension {
                base: Box::new(base),
                min_poly,
            });
        }
        Err(err())
    }
}

/// Renders integer coefficients (low degree first) as `x^2+x+1`.
pub fn format_int_poly(coeffs: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `x^2+x+1`, `2*x^3-x`, `x^2 + 1` into integer coefficients.
pub fn parse_int_poly(s: &str) -> Option<Vec<BigInt>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return None;
        }
        let (coef, deg) = if let Some(pos) = body.find('x') {
            let c = &body[..pos];
            let c = c.strip_suffix('*').unwrap_or(c);
            let coef = if c.is_empty() {
                BigInt::one()
            } else {
                c.parse::<BigInt>().ok()?
            };
            let rest = &body[pos + 1..];
            let deg = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse::<usize>().ok()?
            };
            (coef, deg)
        } else {
            (body.parse::<BigInt>().ok()?, 0)
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BigInt::zero());
        }
        coeffs[deg] += coef * sign;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Some(coeffs)
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

struct FieldInner {
    spec: FieldSpec,
    kind: Kind,
}

#[derive(Clone)]
enum Kind {
    Rationals,
    Prime(u64),
    Extension(Arc<ExtData>),
}

pub(crate) struct ExtData {
    base: Field,
    /// Monic modulus over the base, `degree + 1` coefficients.
    modulus: Vec<Scalar>,
    degree: usize,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}
impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.spec.hash(state)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.0.spec)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.spec)
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldInner {
            spec: FieldSpec::Rationals,
            kind: Kind::Rationals,
        }))
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldInner {
            spec: FieldSpec::PrimeField { p },
            kind: Kind::Prime(p),
        })))
    }

    /// Builds `base[a]/(min_poly)`. The modulus must be monic, of degree at
    /// least two, and irreducible over the base. Over `F_p` irreducibility is
    /// decided exactly; over `Q` it is certified by the absence of rational
    /// roots (degree <= 3) or by a modular degree-pattern argument.
    pub fn extension(base: &FieldSpec, min_poly: &[BigInt]) -> Result<Field, FieldError> {
        let base_field = match base {
            FieldSpec::Rationals => Field::rationals(),
            FieldSpec::PrimeField { p } => Field::prime(*p)?,
            FieldSpec::Extension { .. } => return Err(FieldError::Tower),
        };
        let text = format_int_poly(min_poly, "x");
        if min_poly.len() < 3 || !min_poly.last().is_some_and(|c| c.is_one()) {
            return Err(FieldError::BadMinPoly(text));
        }
        let modulus: Vec<Scalar> = min_poly.iter().map(|c| base_field.from_bigint(c)).collect();
        let poly = Poly::new(&base_field, modulus.clone());
        match crate::factor::certify_irreducible(&poly) {
            Ok(true) => {}
            Ok(false) => return Err(FieldError::Reducible(text)),
            Err(_) => return Err(FieldError::Uncertified(text)),
        }
        let degree = min_poly.len() - 1;
        let data = Arc::new(ExtData {
            base: base_field,
            modulus,
            degree,
        });
        Ok(Field(Arc::new(FieldInner {
            spec: FieldSpec::Extension {
                base: Box::new(base.clone()),
                min_poly: min_poly.to_vec(),
            },
            kind: Kind::Extension(data),
        })))
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field, FieldError> {
        match spec {
            FieldSpec::Rationals => Ok(Field::rationals()),
            FieldSpec::PrimeField { p } => Field::prime(*p),
            FieldSpec::Extension { base, min_poly } => Field::extension(base, min_poly),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        match &self.0.kind {
            Kind::Rationals => 0,
            Kind::Prime(p) => *p,
            Kind::Extension(e) => e.base.characteristic(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// Degree over the prime field (1 for `Q` and `F_p`).
    pub fn degree(&self) -> usize {
        match &self.0.kind {
            Kind::Extension(e) => e.degree,
            _ => 1,
        }
    }

    /// Number of elements, or `None` for characteristic zero or overflow.
    pub fn order(&self) -> Option<u128> {
        match &self.0.kind {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(*p as u128),
            Kind::Extension(e) => {
                let p = e.base.characteristic();
                if p == 0 {
                    return None;
                }
                (p as u128).checked_pow(e.degree as u32)
            }
        }
    }

    pub fn order_big(&self) -> Option<BigUint> {
        let p = self.characteristic();
        if p == 0 {
            return None;
        }
        Some(BigUint::from(p).pow(self.degree() as u32))
    }

    /// Base field of an extension.
    pub fn base(&self) -> Option<&Field> {
        match &self.0.kind {
            Kind::Extension(e) => Some(&e.base),
            _ => None,
        }
    }

    /// Prime field of a finite field, or `Q`.
    pub fn prime_field(&self) -> Field {
        match &self.0.kind {
            Kind::Extension(e) => e.base.clone(),
            _ => self.clone(),
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.0.kind {
            Kind::Rationals => Scalar(Repr::Rat(BigRational::zero())),
            Kind::Prime(p) => Scalar(Repr::Mod { value: 0, p: *p }),
            Kind::Extension(e) => Scalar(Repr::Ext(e.clone(), vec![e.base.zero(); e.degree])),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &self.0.kind {
            Kind::Rationals => Scalar(Repr::Rat(BigRational::from_integer(n.clone()))),
            Kind::Prime(p) => {
                let v = n.mod_floor(&BigInt::from(*p)).to_u64().expect("residue fits");
                Scalar(Repr::Mod { value: v, p: *p })
            }
            Kind::Extension(e) => {
                let mut c = vec![e.base.zero(); e.degree];
                c[0] = e.base.from_bigint(n);
                Scalar(Repr::Ext(e.clone(), c))
            }
        }
    }

    /// Image of a rational number; `None` when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        d.inv().map(|di| &n * &di)
    }

    /// Builds an extension element from base-field coefficients.
    pub fn from_coeffs(&self, coeffs: Vec<Scalar>) -> Scalar {
        match &self.0.kind {
            Kind::Extension(e) => {
                let mut c = coeffs;
                // reduce modulo the minimal polynomial if too long
                let reduced = reduce_mod(&e.modulus, e.degree, std::mem::take(&mut c), &e.base);
                Scalar(Repr::Ext(e.clone(), reduced))
            }
            _ => {
                assert_eq!(coeffs.len(), 1, "base field element expects one coefficient");
                coeffs.into_iter().next().unwrap()
            }
        }
    }

    /// The adjoined root `a` of an extension.
    pub fn generator(&self) -> Option<Scalar> {
        match &self.0.kind {
            Kind::Extension(e) => {
                let mut c = vec![e.base.zero(); e.degree];
                c[1] = e.base.one();
                Some(Scalar(Repr::Ext(e.clone(), c)))
            }
            _ => None,
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (&self.0.kind, &s.0) {
            (Kind::Rationals, Repr::Rat(_)) => true,
            (Kind::Prime(p), Repr::Mod { p: q, .. }) => p == q,
            (Kind::Extension(e), Repr::Ext(f, c)) => {
                Arc::ptr_eq(e, f)
                    || (e.degree == f.degree && e.base == f.base && e.modulus == f.modulus && c.len() == e.degree)
            }
            _ => false,
        }
    }

    /// The `index`-th element of a finite field in canonical order
    /// (base-`p` digits are the coefficients, low degree first).
    pub fn element(&self, index: u128) -> Scalar {
        match &self.0.kind {
            Kind::Prime(p) => Scalar(Repr::Mod {
                value: (index % *p as u128) as u64,
                p: *p,
            }),
            Kind::Extension(e) => {
                let p = e.base.characteristic() as u128;
                assert!(p > 0, "element enumeration needs a finite field");
                let mut idx = index;
                let mut c = Vec::with_capacity(e.degree);
                for _ in 0..e.degree {
                    c.push(e.base.element(idx % p));
                    idx /= p;
                }
                Scalar(Repr::Ext(e.clone(), c))
            }
            Kind::Rationals => panic!("element enumeration needs a finite field"),
        }
    }

    /// All elements of a finite field in canonical order.
    pub fn elements(&self) -> Result<Vec<Scalar>, FieldError> {
        let q = self
            .order()
            .filter(|q| *q <= 1 << 24)
            .ok_or_else(|| FieldError::TooLarge(self.to_string()))?;
        Ok((0..q).map(|i| self.element(i)).collect())
    }

    /// Uniform random element of a finite field.
    pub fn random<R: Rng>(&self, rng: &mut R) -> Scalar {
        match &self.0.kind {
            Kind::Prime(p) => Scalar(Repr::Mod {
                value: rng.gen_range(0..*p),
                p: *p,
            }),
            Kind::Extension(e) => {
                let c = (0..e.degree).map(|_| e.base.random(rng)).collect();
                Scalar(Repr::Ext(e.clone(), c))
            }
            Kind::Rationals => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(
                rng.gen_range(-9i64..=9),
            )))),
        }
    }
}

fn reduce_mod(modulus: &[Scalar], degree: usize, mut c: Vec<Scalar>, base: &Field) -> Vec<Scalar> {
    if c.len() > degree {
        for k in (degree..c.len()).rev() {
            if c[k].is_zero() {
                continue;
            }
            let lead = c[k].clone();
            for t in 0..degree {
                let sub = &lead * &modulus[t];
                c[k - degree + t] -= &sub;
            }
            c[k] = base.zero();
        }
        c.truncate(degree);
    }
    while c.len() < degree {
        c.push(base.zero());
    }
    c
}

/// An exact field element.
#[derive(Clone)]
pub struct Scalar(Repr);

#[derive(Clone)]
enum Repr {
    Rat(BigRational),
    Mod { value: u64, p: u64 },
    Ext(Arc<ExtData>, Vec<Scalar>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod { value, .. } => *value == 0,
            Repr::Ext(_, c) => c.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod { value, .. } => *value == 1,
            Repr::Ext(_, c) => c[0].is_one() && c[1..].iter().all(|x| x.is_zero()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match &self.0 {
            Repr::Rat(r) => Some(Scalar(Repr::Rat(r.recip()))),
            Repr::Mod { value, p } => {
                let inv = BigInt::from(*value)
                    .modpow(&BigInt::from(p - 2), &BigInt::from(*p))
                    .to_u64()
                    .unwrap();
                Some(Scalar(Repr::Mod { value: inv, p: *p }))
            }
            Repr::Ext(e, c) => ext_inverse(e, c).map(|c| Scalar(Repr::Ext(e.clone(), c))),
        }
    }

    pub fn pow(&self, e: u64) -> Scalar {
        self.pow_big(&BigUint::from(e))
    }

    pub fn pow_big(&self, e: &BigUint) -> Scalar {
        let mut result = self.one_like();
        let mut base = self.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = &result * &base;
            }
            if i + 1 < bits {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power allowing negative exponents for nonzero scalars.
    pub fn powi(&self, e: i64) -> Scalar {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv().expect("negative power of zero").pow(e.unsigned_abs())
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(_) => Scalar(Repr::Rat(BigRational::zero())),
            Repr::Mod { p, .. } => Scalar(Repr::Mod { value: 0, p: *p }),
            Repr::Ext(e, _) => Scalar(Repr::Ext(e.clone(), vec![e.base.zero(); e.degree])),
        }
    }

    pub fn one_like(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(_) => Scalar(Repr::Rat(BigRational::one())),
            Repr::Mod { p, .. } => Scalar(Repr::Mod { value: 1, p: *p }),
            Repr::Ext(e, _) => {
                let mut c = vec![e.base.zero(); e.degree];
                c[0] = e.base.one();
                Scalar(Repr::Ext(e.clone(), c))
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Mod { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// Coefficients over the base field of an extension element.
    pub fn coeffs(&self) -> Option<&[Scalar]> {
        match &self.0 {
            Repr::Ext(_, c) => Some(c),
            _ => None,
        }
    }

    /// Integer value for scalars of the prime subfield that are small integers.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Rat(r) if r.is_integer() => r.numer().to_i64(),
            Repr::Mod { value, .. } => i64::try_from(*value).ok(),
            _ => None,
        }
    }

    /// Multiplicative order of a nonzero element, searched up to `limit`.
    pub fn multiplicative_order(&self, limit: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    fn kind_rank(&self) -> u8 {
        match &self.0 {
            Repr::Rat(_) => 0,
            Repr::Mod { .. } => 1,
            Repr::Ext(..) => 2,
        }
    }
}

fn ext_inverse(e: &ExtData, c: &[Scalar]) -> Option<Vec<Scalar>> {
    // Solve (multiplication by c) x = 1 over the base field.
    let d = e.degree;
    let base = &e.base;
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(d);
    let mut basis_elem = vec![base.zero(); d];
    basis_elem[0] = base.one();
    for _ in 0..d {
        cols.push(ext_mul(e, c, &basis_elem));
        let mut shifted = vec![base.zero()];
        shifted.extend(basis_elem.iter().cloned());
        basis_elem = reduce_mod(&e.modulus, d, shifted, base);
    }
    // augmented matrix rows
    let mut m: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut row: Vec<Scalar> = (0..d).map(|j| cols[j][i].clone()).collect();
            row.push(if i == 0 { base.one() } else { base.zero() });
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].inv()?;
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=d {
                    let sub = &f * &m[col][k];
                    m[r][k] -= &sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[d].clone()).collect())
}

fn ext_mul(e: &ExtData, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let d = e.degree;
    let mut prod = vec![e.base.zero(); 2 * d - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let t = x * y;
            prod[i + j] += &t;
        }
    }
    reduce_mod(&e.modulus, d, prod, &e.base)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => a == b,
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) => a == b && p == q,
            (Repr::Ext(_, a), Repr::Ext(_, b)) => a == b,
            _ => false,
        }
    }
}
impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Rat(r) => r.hash(state),
            Repr::Mod { value, .. } => value.hash(state),
            Repr::Ext(_, c) => c.hash(state),
        }
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            (Repr::Mod { value: a, .. }, Repr::Mod { value: b, .. }) => a.cmp(b),
            (Repr::Ext(_, a), Repr::Ext(_, b)) => a.iter().rev().cmp(b.iter().rev()),
            _ => self.kind_rank().cmp(&other.kind_rank()),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) => write!(f, "{r}"),
            Repr::Mod { value, .. } => write!(f, "{value}"),
            Repr::Ext(_, c) => {
                let mut terms = Vec::new();
                for (i, x) in c.iter().enumerate().rev() {
                    if x.is_zero() {
                        continue;
                    }
                    let mono = match i {
                        0 => String::new(),
                        1 => "a".to_string(),
                        _ => format!("a^{i}"),
                    };
                    let coef = x.to_string();
                    terms.push(match (mono.is_empty(), x.is_one()) {
                        (true, _) => coef,
                        (false, true) => mono,
                        (false, false) => format!("{coef}*{mono}"),
                    });
                }
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join("+"))
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) => {
                debug_assert_eq!(p, q);
                let s = (*a as u128 + *b as u128) % *p as u128;
                Scalar(Repr::Mod { value: s as u64, p: *p })
            }
            (Repr::Ext(e, a), Repr::Ext(_, b)) => {
                Scalar(Repr::Ext(e.clone(), a.iter().zip(b).map(|(x, y)| x + y).collect()))
            }
            _ => panic!("scalar field mismatch in addition"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a - b)),
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) => {
                debug_assert_eq!(p, q);
                let s = (*a as u128 + *p as u128 - *b as u128) % *p as u128;
                Scalar(Repr::Mod { value: s as u64, p: *p })
            }
            (Repr::Ext(e, a), Repr::Ext(_, b)) => {
                Scalar(Repr::Ext(e.clone(), a.iter().zip(b).map(|(x, y)| x - y).collect()))
            }
            _ => panic!("scalar field mismatch in subtraction"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) => {
                debug_assert_eq!(p, q);
                let s = (*a as u128 * *b as u128) % *p as u128;
                Scalar(Repr::Mod { value: s as u64, p: *p })
            }
            (Repr::Ext(e, a), Repr::Ext(_, b)) => Scalar(Repr::Ext(e.clone(), ext_mul(e, a, b))),
            _ => panic!("scalar field mismatch in multiplication"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rat(a) => Scalar(Repr::Rat(-a)),
            Repr::Mod { value, p } => Scalar(Repr::Mod {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            }),
            Repr::Ext(e, a) => Scalar(Repr::Ext(e.clone(), a.iter().map(|x| -x).collect())),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}
impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}
impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_check() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(7));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91));
        assert!(matches!(Field::prime(6), Err(FieldError::NotPrime(6))));
    }

    #[test]
    fn spec_parse_round_trip() {
        for s in ["Q", "Fp:7", "ext:Q:x^2+x+1", "ext:Fp:2:x^2+x+1"] {
            let spec = FieldSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!(FieldSpec::parse("Fq:7").is_err());
    }

    #[test]
    fn poly_text() {
        let c = parse_int_poly("2*x^3 - x + 5").unwrap();
        assert_eq!(c, vec![5, -1, 0, 2].into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(format_int_poly(&c, "x"), "2*x^3-x+5");
    }

    #[test]
    fn extension_rejects_reducible() {
        let q = FieldSpec::Rationals;
        let bad: Vec<BigInt> = vec![-1, 0, 1].into_iter().map(BigInt::from).collect();
        assert!(matches!(Field::extension(&q, &bad), Err(FieldError::Reducible(_))));
        let f2 = FieldSpec::PrimeField { p: 2 };
        let bad2: Vec<BigInt> = vec![1, 0, 1].into_iter().map(BigInt::from).collect();
        assert!(matches!(Field::extension(&f2, &bad2), Err(FieldError::Reducible(_))));
        let tower = FieldSpec::Extension {
            base: Box::new(q.clone()),
            min_poly: vec![1, 1, 1].into_iter().map(BigInt::from).collect(),
        };
        assert!(matches!(Field::extension(&tower, &bad), Err(FieldError::Tower)));
    }

    #[test]
    fn cube_root_of_unity_in_q_zeta3() {
        let k = Field::from_spec(&FieldSpec::parse("ext:Q:x^2+x+1").unwrap()).unwrap();
        let z = k.generator().unwrap();
        assert!(z.pow(3).is_one());
        assert!(!z.is_one());
        assert_eq!(z.multiplicative_order(10), Some(3));
        let zi = z.inv().unwrap();
        assert_eq!(zi, z.pow(2));
    }

    #[test]
    fn f4_has_order_four() {
        let k = Field::from_spec(&FieldSpec::parse("ext:Fp:2:x^2+x+1").unwrap()).unwrap();
        assert_eq!(k.order(), Some(4));
        let els = k.elements().unwrap();
        assert_eq!(els.len(), 4);
        for x in &els[1..] {
            assert!(x.pow(3).is_one());
        }
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::rationals()),
            Just(Field::prime(7).unwrap()),
            Just(Field::prime(101).unwrap()),
            Just(Field::from_spec(&FieldSpec::parse("ext:Fp:3:x^2+1").unwrap()).unwrap()),
            Just(Field::from_spec(&FieldSpec::parse("ext:Q:x^2+x+1").unwrap()).unwrap()),
        ]
    }

    fn element(field: &Field, seed: &[i64]) -> Scalar {
        match field.degree() {
            1 => {
                if field.characteristic() == 0 {
                    let d = seed[1].unsigned_abs() as i64 + 1;
                    field
                        .from_rational(&BigRational::new(seed[0].into(), d.into()))
                        .unwrap()
                } else {
                    field.from_i64(seed[0])
                }
            }
            d => field.from_coeffs((0..d).map(|i| field.base().unwrap().from_i64(seed[i])).collect()),
        }
    }

    proptest! {
        #[test]
        fn field_axioms(f in field_strategy(),
                        a in proptest::collection::vec(-50i64..50, 3),
                        b in proptest::collection::vec(-50i64..50, 3),
                        c in proptest::collection::vec(-50i64..50, 3)) {
            let (x, y, z) = (element(&f, &a), element(&f, &b), element(&f, &c));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert!((&x - &x).is_zero());
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }
    }
}
