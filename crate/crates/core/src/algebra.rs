//! Finite-dimensional associative algebras given by structure constants.

use std::fmt;

use thiserror::Error;

use crate::error::{extension_hint, SplittingError};
use crate::factor;
use crate::field::{Field, FieldSpec, Scalar};
use crate::groups::GroupTable;
use crate::matrix::{kernel_vectors, Echelon, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("algebra is not commutative: b{0} b{1} != b{1} b{0}")]
    NotCommutative(usize, usize),
    #[error("radical could not be certified: {0}")]
    RadicalUncertified(String),
    #[error("element is not idempotent modulo the radical")]
    NotIdempotent,
    #[error("idempotent lifting did not converge")]
    LiftDiverged,
    #[error(transparent)]
    Splitting(#[from] SplittingError),
}

/// An algebra with basis `b_0 .. b_{n-1}` and `b_i b_j = sum_k c_ij^k b_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    names: Vec<String>,
    /// Row-major `n x n` table of sparse products, sorted by `k`, no zeros.
    mult: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {})", self.dim(), self.field)
    }
}

fn normalize(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Vec<(usize, Scalar)> {
    let mut v: Vec<(usize, Scalar)> = terms.into_iter().collect();
    v.sort_by_key(|t| t.0);
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some((k0, c0)) if *k0 == k => *c0 += &c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl Algebra {
    /// `mult` lists `(i, j, terms of b_i b_j)`; missing pairs multiply to zero.
    pub fn new(
        field: &Field,
        names: Vec<String>,
        mult: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
        unit: Vec<Scalar>,
    ) -> Result<Algebra, AlgebraError> {
        let n = names.len();
        if unit.len() != n {
            return Err(AlgebraError::Malformed(format!(
                "unit has {} coordinates, dim is {n}",
                unit.len()
            )));
        }
        if let Some(x) = unit.iter().find(|x| !field.contains(x)) {
            return Err(AlgebraError::Malformed(format!("unit coordinate {x} not in {field}")));
        }
        let mut table = vec![Vec::new(); n * n];
        let mut seen = vec![false; n * n];
        for (i, j, terms) in mult {
            if i >= n || j >= n {
                return Err(AlgebraError::Malformed(format!("product ({i}, {j}) out of range")));
            }
            if std::mem::replace(&mut seen[i * n + j], true) {
                return Err(AlgebraError::Malformed(format!("product ({i}, {j}) given twice")));
            }
            for (k, c) in &terms {
                if *k >= n {
                    return Err(AlgebraError::Malformed(format!(
                        "basis index {k} out of range in ({i}, {j})"
                    )));
                }
                if !field.contains(c) {
                    return Err(AlgebraError::Malformed(format!(
                        "coefficient {c} in ({i}, {j}) not in {field}"
                    )));
                }
            }
            table[i * n + j] = normalize(terms);
        }
        Ok(Algebra {
            field: field.clone(),
            names,
            mult: table,
            unit,
        })
    }

    /// Group algebra `kG` with the group elements as basis.
    pub fn group_algebra(field: &Field, g: &GroupTable) -> Algebra {
        let n = g.order();
        let mult = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| (a, b, vec![(g.mul(a, b), field.one())]))
            .collect();
        let mut unit = vec![field.zero(); n];
        unit[g.identity] = field.one();
        Algebra::new(field, g.names.clone(), mult, unit).expect("group algebra")
    }

    /// `n x n` upper-triangular matrices, basis `E_ij` (i <= j) in row-major order.
    pub fn upper_triangular(field: &Field, n: usize) -> Algebra {
        let idx: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let pos = |p: (usize, usize)| idx.iter().position(|&q| q == p).unwrap();
        let mut mult = Vec::new();
        for (a, &(i, j)) in idx.iter().enumerate() {
            for (b, &(k, l)) in idx.iter().enumerate() {
                let terms = if j == k {
                    vec![(pos((i, l)), field.one())]
                } else {
                    vec![]
                };
                mult.push((a, b, terms));
            }
        }
        let mut unit = vec![field.zero(); idx.len()];
        for i in 0..n {
            unit[pos((i, i))] = field.one();
        }
        let names = idx.iter().map(|(i, j)| format!("E{i}{j}")).collect();
        Algebra::new(field, names, mult, unit).unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Sparse `b_i b_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        for (k, c) in self.product_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.zero_vector();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.mult[i * n + j] {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Scalar], e: u64) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of `x -> a x` (column `j` is `a b_j`).
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(&self.field, &cols, self.dim())
    }

    /// Matrix of `x -> x a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(&self.basis_vector(j), a)).collect();
        Matrix::from_columns(&self.field, &cols, self.dim())
    }

    /// Left multiplication matrices of all basis elements.
    pub fn left_regular(&self) -> Vec<Matrix> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut m = Matrix::zeros(&self.field, n, n);
                for j in 0..n {
                    for (k, c) in self.product_terms(i, j) {
                        m.set(*k, j, c.clone());
                    }
                }
                m
            })
            .collect()
    }

    pub fn commute(&self, a: &[Scalar], b: &[Scalar]) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_commutative(&self) -> bool {
        self.first_noncommuting_pair().is_none()
    }

    fn first_noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.product_terms(i, j) != self.product_terms(j, i))
    }

    /// The algebra structure on a subalgebra, in the coordinates of the given basis.
    pub fn subalgebra(&self, basis: &Subspace, names: Vec<String>) -> Result<Algebra, AlgebraError> {
        let f = &self.field;
        let m = basis.dim();
        let coords = |v: &[Scalar], what: &str| {
            solve_in_basis(f, &basis.basis, v)
                .ok_or_else(|| AlgebraError::Malformed(format!("subspace does not contain {what}")))
        };
        let mut mult = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let c = coords(&self.mul(&basis.basis[i], &basis.basis[j]), "a product")?;
                mult.push((i, j, c.into_iter().enumerate().collect()));
            }
        }
        let unit = coords(&self.unit, "the unit")?;
        Algebra::new(f, names, mult, unit)
    }
}

/// A subspace of `k^ambient` with an explicit basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    /// Span of the given vectors, reduced to an echelon basis.
    pub fn span(field: &Field, ambient: usize, vs: &[Vec<Scalar>]) -> Subspace {
        let e = Echelon::from_vectors(field, ambient, vs);
        Subspace {
            ambient,
            basis: e.reduced_basis(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn echelon(&self, field: &Field) -> Echelon {
        Echelon::from_vectors(field, self.ambient, &self.basis)
    }

    pub fn contains(&self, field: &Field, v: &[Scalar]) -> bool {
        self.echelon(field).contains(v)
    }
}

/// Coefficients expressing `v` in terms of the (independent) `basis`.
pub fn solve_in_basis(field: &Field, basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return v.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    let n = v.len();
    let m = basis.len();
    // augmented system [basis columns | v]
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut r: Vec<Scalar> = (0..m).map(|j| basis[j][i].clone()).collect();
            r.push(v[i].clone());
            r
        })
        .collect();
    let a = Matrix::from_rows(field, rows).ok()?;
    let (r, piv) = a.rref();
    if piv.last() == Some(&m) {
        return None;
    }
    let mut x = vec![field.zero(); m];
    for (row, &p) in piv.iter().enumerate() {
        x[p] = r.get(row, m).clone();
    }
    Some(x)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AlgebraViolation {
    /// `(b_i b_j) b_k != b_i (b_j b_k)`.
    Associativity {
        i: usize,
        j: usize,
        k: usize,
    },
    LeftUnit {
        i: usize,
    },
    RightUnit {
        i: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub violations: Vec<AlgebraViolation>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "algebra axioms hold");
        }
        for v in &self.violations {
            match v {
                AlgebraViolation::Associativity { i, j, k } => {
                    writeln!(f, "associativity fails at basis triple ({i}, {j}, {k})")?
                }
                AlgebraViolation::LeftUnit { i } => writeln!(f, "unit is not a left identity on b{i}")?,
                AlgebraViolation::RightUnit { i } => writeln!(f, "unit is not a right identity on b{i}")?,
            }
        }
        Ok(())
    }
}

/// Checks associativity on all basis triples and the unit on all basis elements.
pub fn verify_algebra(a: &Algebra) -> AlgebraReport {
    let n = a.dim();
    let mut violations = Vec::new();
    let prods: Vec<Vec<Scalar>> = (0..n * n).map(|ij| a.basis_product(ij / n, ij % n)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let left = a.mul(&prods[i * n + j], &a.basis_vector(k));
                let right = a.mul(&a.basis_vector(i), &prods[j * n + k]);
                if left != right {
                    violations.push(AlgebraViolation::Associativity { i, j, k });
                }
            }
        }
    }
    for i in 0..n {
        let b = a.basis_vector(i);
        if a.mul(&a.unit, &b) != b {
            violations.push(AlgebraViolation::LeftUnit { i });
        }
        if a.mul(&b, &a.unit) != b {
            violations.push(AlgebraViolation::RightUnit { i });
        }
    }
    AlgebraReport { violations }
}

/// `{z : z b = b z for every basis element b}`.
pub fn center(a: &Algebra) -> Subspace {
    let n = a.dim();
    let f = a.field();
    // rows indexed by (i, k): coefficient of b_k in z b_i - b_i z
    let mut m = Matrix::zeros(f, n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.product_terms(j, i) {
                let x = m.get(i * n + k, j) + c;
                m.set(i * n + k, j, x);
            }
            for (k, c) in a.product_terms(i, j) {
                let x = m.get(i * n + k, j) - c;
                m.set(i * n + k, j, x);
            }
        }
    }
    Subspace::span(f, n, &kernel_vectors(&m))
}

/// Jacobson radical. Characteristic zero uses the kernel of the trace form;
/// finite fields use the iterated `p`-power trace filtration over the prime
/// field. The result is certified (two-sided ideal, nilpotent, and a quotient
/// whose trace filtration vanishes) or `RadicalUncertified` is raised.
pub fn radical(a: &Algebra) -> Result<Subspace, AlgebraError> {
    let f = a.field();
    let j = if f.characteristic() == 0 {
        trace_form_kernel(a)
    } else if f.degree() == 1 {
        p_power_radical(a)
    } else {
        let (b, d) = restrict_scalars(a);
        let jb = p_power_radical(&b);
        extend_scalars(a, &jb, d)
    };
    certify_radical(a, &j)?;
    Ok(j)
}

fn basis_traces(a: &Algebra) -> Vec<Scalar> {
    a.left_regular().iter().map(|m| m.trace()).collect()
}

fn trace_form_kernel(a: &Algebra) -> Subspace {
    let n = a.dim();
    let f = a.field();
    let t = basis_traces(a);
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = f.zero();
            for (k, c) in a.product_terms(i, j) {
                acc += &(c * &t[*k]);
            }
            m.set(j, i, acc);
        }
    }
    Subspace::span(f, n, &kernel_vectors(&m))
}

fn p_power_radical(a: &Algebra) -> Subspace {
    let f = a.field();
    let n = a.dim();
    let p = f.characteristic();
    let lm = a.left_regular();
    let left_of = |v: &[Scalar]| {
        let mut m = Matrix::zeros(f, n, n);
        for (i, c) in v.iter().enumerate() {
            m.add_scaled(c, &lm[i]);
        }
        m
    };
    // I_0: kernel of the ordinary trace form
    let mut ideal = trace_form_kernel(a);
    let mut i = 1u32;
    while p.checked_pow(i).is_some_and(|pi| pi <= n as u64) && ideal.dim() > 0 {
        // g_i(x) = Tr(lift(L_x)^{p^i}) / p^i mod p is linear on the current ideal
        let u = &ideal.basis;
        let mut m = Matrix::zeros(f, n, u.len());
        for (col, x) in u.iter().enumerate() {
            let lx = left_of(x);
            for (row, lb) in lm.iter().enumerate() {
                m.set(row, col, f.from_i64(lifted_power_trace(&lx.mul(lb), p, i) as i64));
            }
        }
        let coeffs = kernel_vectors(&m);
        let next: Vec<Vec<Scalar>> = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![f.zero(); n];
                for (ci, x) in c.iter().zip(u) {
                    for (vi, xi) in v.iter_mut().zip(x) {
                        *vi += &(ci * xi);
                    }
                }
                v
            })
            .collect();
        ideal = Subspace::span(f, n, &next);
        i += 1;
    }
    ideal
}

/// `Tr(M^{p^i}) / p^i mod p` for the lift of `m` to integer entries in `[0, p)`.
fn lifted_power_trace(m: &Matrix, p: u64, i: u32) -> u64 {
    let n = m.rows();
    let modulus = p.pow(i + 1) as u128;
    let lift: Vec<u128> = (0..n * n)
        .map(|x| m.get(x / n, x % n).as_residue().unwrap() as u128)
        .collect();
    let mul = |a: &[u128], b: &[u128]| -> Vec<u128> {
        let mut out = vec![0u128; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = a[r * n + k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] = (out[r * n + c] + x * b[k * n + c]) % modulus;
                }
            }
        }
        out
    };
    let mut e = p.pow(i);
    let mut result: Vec<u128> = (0..n * n).map(|x| u128::from(x / n == x % n)).collect();
    let mut base = lift;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    let tr = (0..n).fold(0u128, |acc, x| (acc + result[x * n + x]) % modulus);
    let pi = p.pow(i) as u128;
    debug_assert_eq!(tr % pi, 0, "power trace divisible by p^i");
    ((tr / pi) % p as u128) as u64
}

/// The same algebra viewed over the prime field; basis `b_i a^t` at `i * d + t`.
fn restrict_scalars(a: &Algebra) -> (Algebra, usize) {
    let f = a.field();
    let d = f.degree();
    let fp = f.prime_field();
    let gen = f.generator().unwrap();
    let powers: Vec<Scalar> = (0..2 * d).map(|t| gen.pow(t as u64)).collect();
    let n = a.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for s in 0..d {
            for j in 0..n {
                for t in 0..d {
                    let mut terms = Vec::new();
                    for (k, c) in a.product_terms(i, j) {
                        let x = c * &powers[s + t];
                        for (r, y) in x.coeffs().unwrap().iter().enumerate() {
                            terms.push((k * d + r, y.clone()));
                        }
                    }
                    mult.push((i * d + s, j * d + t, terms));
                }
            }
        }
    }
    let mut unit = vec![fp.zero(); n * d];
    for (i, c) in a.unit().iter().enumerate() {
        for (r, y) in c.coeffs().unwrap().iter().enumerate() {
            unit[i * d + r] = y.clone();
        }
    }
    let names = (0..n * d).map(|x| format!("b{}a{}", x / d, x % d)).collect();
    (Algebra::new(&fp, names, mult, unit).unwrap(), d)
}

fn extend_scalars(a: &Algebra, j: &Subspace, d: usize) -> Subspace {
    let f = a.field();
    let n = a.dim();
    let vs: Vec<Vec<Scalar>> = j
        .basis
        .iter()
        .map(|w| (0..n).map(|i| f.from_coeffs(w[i * d..(i + 1) * d].to_vec())).collect())
        .collect();
    Subspace::span(f, n, &vs)
}

fn certify_radical(a: &Algebra, j: &Subspace) -> Result<(), AlgebraError> {
    let f = a.field();
    let n = a.dim();
    let ech = j.echelon(f);
    for u in &j.basis {
        for i in 0..n {
            let b = a.basis_vector(i);
            if !ech.contains(&a.mul(&b, u)) || !ech.contains(&a.mul(u, &b)) {
                return Err(AlgebraError::RadicalUncertified(format!(
                    "candidate (dim {}) is not a two-sided ideal",
                    j.dim()
                )));
            }
        }
    }
    // nilpotency: J^k shrinks to zero
    let mut power = j.clone();
    let mut steps = 0;
    while power.dim() > 0 {
        steps += 1;
        if steps > n + 1 {
            return Err(AlgebraError::RadicalUncertified(format!(
                "candidate (dim {}) is not nilpotent",
                j.dim()
            )));
        }
        let prods: Vec<Vec<Scalar>> = power
            .basis
            .iter()
            .flat_map(|x| j.basis.iter().map(move |y| (x, y)))
            .map(|(x, y)| a.mul(x, y))
            .collect();
        let next = Subspace::span(f, n, &prods);
        if next.dim() == power.dim() {
            return Err(AlgebraError::RadicalUncertified(format!(
                "candidate (dim {}) is not nilpotent",
                j.dim()
            )));
        }
        power = next;
    }
    // semisimplicity of the quotient: its trace filtration must vanish, and
    // the filtration always contains the radical
    let q = quotient(a, j)?;
    let b = &q.algebra;
    let residual = if f.characteristic() == 0 {
        trace_form_kernel(b)
    } else if f.degree() == 1 {
        p_power_radical(b)
    } else {
        p_power_radical(&restrict_scalars(b).0)
    };
    if residual.dim() > 0 {
        return Err(AlgebraError::RadicalUncertified(format!(
            "quotient of dim {} keeps a {}-dimensional trace-degenerate part",
            b.dim(),
            residual.dim()
        )));
    }
    Ok(())
}

/// `a / ideal` together with the projection `a -> a / ideal`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    /// `dim(a / ideal) x dim(a)` matrix of the projection.
    pub projection: Matrix,
    /// Basis indices of `a` whose images form the quotient basis.
    pub section: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }

    /// Canonical preimage of a quotient vector.
    pub fn lift(&self, v: &[Scalar], dim: usize) -> Vec<Scalar> {
        let mut out = vec![self.projection.field().zero(); dim];
        for (x, &i) in v.iter().zip(&self.section) {
            out[i] = x.clone();
        }
        out
    }
}

pub fn quotient(a: &Algebra, ideal: &Subspace) -> Result<Quotient, AlgebraError> {
    let f = a.field();
    let n = a.dim();
    let ech = ideal.echelon(f);
    for u in &ideal.basis {
        for i in 0..n {
            let b = a.basis_vector(i);
            if !ech.contains(&a.mul(&b, u)) {
                return Err(AlgebraError::NotAnIdeal(format!("b{i} * v not in the subspace")));
            }
            if !ech.contains(&a.mul(u, &b)) {
                return Err(AlgebraError::NotAnIdeal(format!("v * b{i} not in the subspace")));
            }
        }
    }
    // complement: non-pivot coordinates of the reduced echelon basis
    let reduced = Echelon::from_vectors(f, n, &ech.reduced_basis());
    let pivots: Vec<usize> = reduced.pivots().to_vec();
    let section: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let m = section.len();
    let mut proj = Matrix::zeros(f, m, n);
    for j in 0..n {
        let r = reduced.reduce(&a.basis_vector(j));
        for (row, &i) in section.iter().enumerate() {
            proj.set(row, j, r[i].clone());
        }
    }
    let mut mult = Vec::new();
    for (x, &i) in section.iter().enumerate() {
        for (y, &j) in section.iter().enumerate() {
            let p = proj.mul_vec(&a.basis_product(i, j));
            mult.push((x, y, p.into_iter().enumerate().collect()));
        }
    }
    let unit = proj.mul_vec(a.unit());
    let names = section.iter().map(|&i| a.names()[i].clone()).collect();
    let algebra = Algebra::new(f, names, mult, unit)?;
    Ok(Quotient {
        algebra,
        projection: proj,
        section,
    })
}

/// An algebra map to the ground field, as the row of values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgebraCharacter {
    pub values: Vec<Scalar>,
}

impl AlgebraCharacter {
    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        let mut acc = v[0].zero_like();
        for (x, y) in v.iter().zip(&self.values) {
            acc += &(x * y);
        }
        acc
    }
}

/// Characters found, plus the obstruction when some components do not split.
#[derive(Clone, Debug)]
pub struct CharacterSearch {
    pub characters: Vec<AlgebraCharacter>,
    pub obstruction: Option<SplittingError>,
}

/// All algebra maps from a commutative algebra to its field: pass to the
/// radical quotient, then split it along eigenspaces of each basis element in
/// turn, factoring minimal polynomials. Non-split components are reported in
/// the obstruction.
pub fn characters_commutative(a: &Algebra) -> Result<CharacterSearch, AlgebraError> {
    if let Some((i, j)) = a.first_noncommuting_pair() {
        return Err(AlgebraError::NotCommutative(i, j));
    }
    let f = a.field();
    let rad = radical(a)?;
    let q = quotient(a, &rad)?;
    let b = &q.algebra;
    let m = b.dim();
    let lm = b.left_regular();
    let mut found: Vec<Vec<Scalar>> = Vec::new();
    let mut obstructions: Vec<(String, usize)> = Vec::new();
    // stack of (component basis, next basis index, eigenvalues so far)
    let mut stack: Vec<(Vec<Vec<Scalar>>, usize, Vec<Scalar>)> = vec![(Subspace::full(f, m).basis, 0, Vec::new())];
    while let Some((comp, t, vals)) = stack.pop() {
        if t == m {
            found.push(vals);
            continue;
        }
        // restriction of L_{b_t} to the component, in component coordinates
        let images: Vec<Vec<Scalar>> = comp.iter().map(|v| lm[t].mul_vec(v)).collect();
        let coords: Vec<Vec<Scalar>> = images
            .iter()
            .map(|w| solve_in_basis(f, &comp, w).expect("components are ideals"))
            .collect();
        let r = Matrix::from_columns(f, &coords, comp.len());
        let mp = r.minpoly();
        let factors = factor::factor(&mp).map_err(|e| AlgebraError::Malformed(e.to_string()))?;
        let mut children = Vec::new();
        for fac in factors {
            if fac.poly.degree() != Some(1) {
                obstructions.push((fac.poly.to_string(), fac.poly.degree().unwrap()));
                continue;
            }
            let root = -&fac.poly.coeffs()[0];
            let shifted = r.sub(&Matrix::identity(f, comp.len()).scale(&root));
            let ker = kernel_vectors(&shifted);
            let sub: Vec<Vec<Scalar>> = ker
                .iter()
                .map(|c| {
                    let mut v = vec![f.zero(); m];
                    for (ci, x) in c.iter().zip(&comp) {
                        for (vi, xi) in v.iter_mut().zip(x) {
                            *vi += &(ci * xi);
                        }
                    }
                    v
                })
                .collect();
            let mut vals = vals.clone();
            vals.push(root);
            children.push((sub, t + 1, vals));
        }
        // reverse so that the first factor is processed first
        stack.extend(children.into_iter().rev());
    }
    let mut characters: Vec<AlgebraCharacter> = found
        .into_iter()
        .map(|vals| {
            // pull back along the projection
            let values = (0..a.dim())
                .map(|j| {
                    let mut acc = f.zero();
                    for (x, v) in q.projection.column(j).iter().zip(&vals) {
                        acc += &(x * v);
                    }
                    acc
                })
                .collect();
            AlgebraCharacter { values }
        })
        .collect();
    characters.sort();
    characters.dedup();
    for c in &characters {
        verify_character(a, c)?;
    }
    obstructions.sort();
    obstructions.dedup();
    let obstruction = (!obstructions.is_empty()).then(|| {
        let maxdeg = obstructions.iter().map(|o| o.1).max();
        SplittingError::new(
            format!(
                "{} does not split the algebra: irreducible factors {}",
                f,
                obstructions.iter().map(|o| o.0.as_str()).collect::<Vec<_>>().join(", ")
            ),
            obstructions.iter().map(|o| o.0.clone()).collect(),
            splitting_hint(f, maxdeg.unwrap(), &obstructions),
        )
    });
    Ok(CharacterSearch {
        characters,
        obstruction,
    })
}

fn splitting_hint(f: &Field, deg: usize, obstructions: &[(String, usize)]) -> Option<String> {
    if f.is_finite() {
        let lcm = obstructions.iter().fold(1usize, |acc, o| num_integer::lcm(acc, o.1));
        return extension_hint(f, None, Some(lcm.max(deg)));
    }
    match f.spec() {
        FieldSpec::Rationals => Some(format!("adjoin a root, e.g. ext:Q:{}", obstructions[0].0)),
        _ => None,
    }
}

fn verify_character(a: &Algebra, c: &AlgebraCharacter) -> Result<(), AlgebraError> {
    let n = a.dim();
    if !c.eval(a.unit()).is_one() {
        return Err(AlgebraError::Malformed("character does not send 1 to 1".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if c.eval(&a.basis_product(i, j)) != &c.values[i] * &c.values[j] {
                return Err(AlgebraError::Malformed(format!(
                    "character not multiplicative at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Lifts an idempotent modulo `rad` to a true idempotent by `e <- 3e^2 - 2e^3`.
pub fn lift_idempotent(a: &Algebra, e: &[Scalar], rad: &Subspace) -> Result<Vec<Scalar>, AlgebraError> {
    let f = a.field();
    let ech = rad.echelon(f);
    let diff = |x: &[Scalar]| -> Vec<Scalar> {
        let sq = a.mul(x, x);
        sq.iter().zip(x).map(|(u, v)| u - v).collect()
    };
    if !ech.contains(&diff(e)) {
        return Err(AlgebraError::NotIdempotent);
    }
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    let mut e = e.to_vec();
    for _ in 0..64 {
        let sq = a.mul(&e, &e);
        if sq == e {
            return Ok(e);
        }
        let cube = a.mul(&sq, &e);
        e = sq.iter().zip(&cube).map(|(s, c)| &(&three * s) - &(&two * c)).collect();
    }
    Err(AlgebraError::LiftDiverged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kg(p: u64, g: GroupTable) -> Algebra {
        Algebra::group_algebra(&Field::prime(p).unwrap(), &g)
    }

    #[test]
    fn verify_examples() {
        let q = Field::rationals();
        let one = Algebra::new(&q, vec!["1".into()], vec![(0, 0, vec![(0, q.one())])], vec![q.one()]).unwrap();
        assert!(verify_algebra(&one).is_valid());
        assert!(verify_algebra(&kg(7, GroupTable::symmetric3())).is_valid());
        // corrupt one product of Z/3
        let f5 = Field::prime(5).unwrap();
        let g = GroupTable::cyclic(3);
        let mut mult: Vec<(usize, usize, Vec<(usize, Scalar)>)> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .map(|(a, b)| (a, b, vec![(g.mul(a, b), f5.one())]))
            .collect();
        mult[5].2 = vec![(0, f5.from_i64(2))]; // b1 b2 = 2 b0
        let bad = Algebra::new(&f5, g.names.clone(), mult, vec![f5.one(), f5.zero(), f5.zero()]).unwrap();
        let r = verify_algebra(&bad);
        assert!(!r.is_valid());
        assert!(r
            .violations
            .contains(&AlgebraViolation::Associativity { i: 1, j: 2, k: 1 }));
    }

    #[test]
    fn centers() {
        assert_eq!(center(&kg(7, GroupTable::symmetric3())).dim(), 3);
        assert_eq!(center(&kg(5, GroupTable::cyclic(4))).dim(), 4);
        assert_eq!(center(&kg(5, GroupTable::dihedral4())).dim(), 5);
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(&kg(7, GroupTable::symmetric3())).unwrap().dim(), 0);
        let j = radical(&kg(3, GroupTable::cyclic(3))).unwrap();
        assert_eq!(j.dim(), 2);
        let a = kg(3, GroupTable::cyclic(3));
        // augmentation ideal: coefficient sums vanish
        for v in &j.basis {
            let s = v.iter().fold(a.field().zero(), |acc, x| &acc + x);
            assert!(s.is_zero());
        }
        let t = Algebra::upper_triangular(&Field::rationals(), 2);
        assert_eq!(radical(&t).unwrap().dim(), 1);
        assert_eq!(radical(&kg(3, GroupTable::symmetric3())).unwrap().dim(), 4);
        assert_eq!(radical(&kg(2, GroupTable::symmetric3())).unwrap().dim(), 1);
    }

    #[test]
    fn radical_over_f4() {
        let k = Field::from_spec(&FieldSpec::parse("ext:Fp:2:x^2+x+1").unwrap()).unwrap();
        let a = Algebra::group_algebra(&k, &GroupTable::cyclic(2));
        assert_eq!(radical(&a).unwrap().dim(), 1);
        let b = Algebra::group_algebra(&k, &GroupTable::cyclic(3));
        assert_eq!(radical(&b).unwrap().dim(), 0);
    }

    #[test]
    fn quotients() {
        let a = kg(3, GroupTable::cyclic(3));
        let z = quotient(&a, &Subspace::zero(3)).unwrap();
        assert_eq!(z.algebra.dim(), 3);
        let j = radical(&a).unwrap();
        let q = quotient(&a, &j).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert!(verify_algebra(&q.algebra).is_valid());
        let s3 = kg(7, GroupTable::symmetric3());
        let not_ideal = Subspace::span(s3.field(), 6, &[s3.basis_vector(1)]);
        assert!(matches!(quotient(&s3, &not_ideal), Err(AlgebraError::NotAnIdeal(_))));
    }

    #[test]
    fn commutative_characters() {
        let q = Field::rationals();
        let z2 = Algebra::group_algebra(&q, &GroupTable::cyclic(2));
        let c = characters_commutative(&z2).unwrap();
        assert_eq!(c.characters.len(), 2);
        assert!(c.obstruction.is_none());
        let z3 = Algebra::group_algebra(&q, &GroupTable::cyclic(3));
        let c = characters_commutative(&z3).unwrap();
        assert_eq!(c.characters.len(), 1);
        let obs = c.obstruction.unwrap();
        assert_eq!(obs.obstructions, vec!["x^2+x+1".to_string()]);
        let k = Field::from_spec(&FieldSpec::parse("ext:Q:x^2+x+1").unwrap()).unwrap();
        let z3k = Algebra::group_algebra(&k, &GroupTable::cyclic(3));
        let c = characters_commutative(&z3k).unwrap();
        assert_eq!(c.characters.len(), 3);
        assert!(c.obstruction.is_none());
        assert!(characters_commutative(&kg(7, GroupTable::symmetric3())).is_err());
    }

    #[test]
    fn idempotent_lifting() {
        let a = kg(3, GroupTable::cyclic(3));
        let j = radical(&a).unwrap();
        assert_eq!(lift_idempotent(&a, a.unit(), &j).unwrap(), a.unit().to_vec());
        let f3 = a.field().clone();
        let half = vec![f3.from_i64(2), f3.zero(), f3.zero()];
        assert!(lift_idempotent(&a, &half, &j).is_err());
        // an idempotent modulo the radical of the upper triangular algebra
        let t = Algebra::upper_triangular(&Field::rationals(), 2);
        let jt = radical(&t).unwrap();
        let q = t.field().clone();
        let e = vec![q.one(), q.from_i64(5), q.zero()];
        let lifted = lift_idempotent(&t, &e, &jt).unwrap();
        assert_eq!(t.mul(&lifted, &lifted), lifted);
    }
}
