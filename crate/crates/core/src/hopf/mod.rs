//! Finite-dimensional Hopf algebras by structure constants.

mod generators;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{
    characters_commutative, quotient, verify_algebra, Algebra, AlgebraError, AlgebraViolation, Subspace,
};
use crate::error::SplittingError;
use crate::field::{Field, Scalar};
use crate::groups::{GroupError, GroupTable};
use crate::matrix::{Echelon, Matrix};

pub use generators::{gen_dual_group_algebra, gen_group_algebra, gen_sweedler, gen_taft, gen_taft_unchecked};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("malformed Hopf algebra: {0}")]
    Malformed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("grouplike set is not a group: {0}")]
    NotClosed(String),
    #[error("pivotal grouplikes do not form a coset of the central grouplikes")]
    PivotalNotCoset,
    #[error("p-part and p'-part do not reconstruct the group: {0}")]
    NotDirectProduct(String),
}

/// `Δ(b_i) = sum (j, k, c)` meaning `c b_j ⊗ b_k`.
pub type Coproduct = Vec<(usize, usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub alg: Algebra,
    pub comult: Vec<Coproduct>,
    pub counit: Vec<Scalar>,
    /// Column `j` holds the coordinates of `S(b_j)`.
    pub antipode: Matrix,
}

impl HopfAlgebra {
    /// Checks shapes and field membership only; see [`verify_hopf`] for the axioms.
    pub fn new(
        alg: Algebra,
        comult: Vec<Coproduct>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<HopfAlgebra, HopfError> {
        let n = alg.dim();
        let f = alg.field().clone();
        if comult.len() != n || counit.len() != n {
            return Err(HopfError::Malformed(format!(
                "dim {n} but {} coproducts and {} counit values",
                comult.len(),
                counit.len()
            )));
        }
        if antipode.rows() != n || antipode.cols() != n || antipode.field() != &f {
            return Err(HopfError::Malformed(
                "antipode must be a dim x dim matrix over the algebra field".into(),
            ));
        }
        for (i, terms) in comult.iter().enumerate() {
            if let Some((j, k, _)) = terms.iter().find(|(j, k, _)| *j >= n || *k >= n) {
                return Err(HopfError::Malformed(format!(
                    "Δ(b{i}) uses index ({j}, {k}) out of range"
                )));
            }
            if terms.iter().any(|(_, _, c)| !f.contains(c)) {
                return Err(HopfError::Malformed(format!("Δ(b{i}) has a coefficient outside {f}")));
            }
        }
        if counit.iter().any(|c| !f.contains(c)) {
            return Err(HopfError::Malformed(format!("counit has a value outside {f}")));
        }
        Ok(HopfAlgebra {
            alg,
            comult,
            counit,
            antipode,
        })
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// Dense `Δ(v)` indexed by `j * dim + k`.
    pub fn comult_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                out[j * n + k] += &(x * c);
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for (x, e) in v.iter().zip(&self.counit) {
            acc += &(x * e);
        }
        acc
    }

    pub fn antipode_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(v)
    }

    pub fn antipode_squared(&self) -> Matrix {
        self.antipode.mul(&self.antipode)
    }

    /// Smallest `k >= 1` with `S^k = id`, searched up to `limit`.
    pub fn antipode_order(&self, limit: usize) -> Option<usize> {
        let mut p = self.antipode.clone();
        for k in 1..=limit {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(&self.antipode);
        }
        None
    }

    pub fn is_grouplike(&self, g: &[Scalar]) -> bool {
        if !self.counit_of(g).is_one() {
            return false;
        }
        let n = self.dim();
        let d = self.comult_vec(g);
        (0..n).all(|j| (0..n).all(|k| d[j * n + k] == &g[j] * &g[k]))
    }

    /// Product in `H ⊗ H` of two dense tensors.
    fn tensor_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for (xi, cx) in x.iter().enumerate().filter(|t| !t.1.is_zero()) {
            let (a, b) = (xi / n, xi % n);
            for (yi, cy) in y.iter().enumerate().filter(|t| !t.1.is_zero()) {
                let (c, d) = (yi / n, yi % n);
                let c0 = cx * cy;
                for (k, u) in self.alg.product_terms(a, c) {
                    let c1 = &c0 * u;
                    for (l, w) in self.alg.product_terms(b, d) {
                        out[k * n + l] += &(&c1 * w);
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum HopfViolation {
    Algebra(AlgebraViolation),
    Coassociativity { i: usize },
    LeftCounit { i: usize },
    RightCounit { i: usize },
    ComultUnit,
    ComultMultiplicative { i: usize, j: usize },
    CounitUnit,
    CounitMultiplicative { i: usize, j: usize },
    LeftAntipode { i: usize },
    RightAntipode { i: usize },
}

impl fmt::Display for HopfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfViolation::Algebra(v) => write!(f, "{v:?}"),
            HopfViolation::Coassociativity { i } => write!(f, "Δ not coassociative on b{i}"),
            HopfViolation::LeftCounit { i } => write!(f, "(ε ⊗ id)Δ(b{i}) != b{i}"),
            HopfViolation::RightCounit { i } => write!(f, "(id ⊗ ε)Δ(b{i}) != b{i}"),
            HopfViolation::ComultUnit => write!(f, "Δ(1) != 1 ⊗ 1"),
            HopfViolation::ComultMultiplicative { i, j } => write!(f, "Δ(b{i} b{j}) != Δ(b{i}) Δ(b{j})"),
            HopfViolation::CounitUnit => write!(f, "ε(1) != 1"),
            HopfViolation::CounitMultiplicative { i, j } => write!(f, "ε(b{i} b{j}) != ε(b{i}) ε(b{j})"),
            HopfViolation::LeftAntipode { i } => write!(f, "S(b{i}_(1)) b{i}_(2) != ε(b{i}) 1"),
            HopfViolation::RightAntipode { i } => write!(f, "b{i}_(1) S(b{i}_(2)) != ε(b{i}) 1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub violations: Vec<HopfViolation>,
}

impl HopfReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when no bialgebra axiom (coproduct or counit) fails.
    pub fn is_bialgebra(&self) -> bool {
        self.violations.iter().all(|v| {
            matches!(
                v,
                HopfViolation::LeftAntipode { .. } | HopfViolation::RightAntipode { .. }
            )
        })
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid Hopf algebra");
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Checks every Hopf axiom on basis elements.
pub fn verify_hopf(h: &HopfAlgebra) -> HopfReport {
    let mut out: Vec<HopfViolation> = verify_algebra(&h.alg)
        .violations
        .into_iter()
        .map(HopfViolation::Algebra)
        .collect();
    let f = h.field();
    let n = h.dim();
    let zero = f.zero();
    let deltas: Vec<Vec<Scalar>> = (0..n).map(|i| h.comult_vec(&h.alg.basis_vector(i))).collect();

    for i in 0..n {
        // (Δ ⊗ id)Δ and (id ⊗ Δ)Δ as dense n^3 tensors
        let mut left = vec![zero.clone(); n * n * n];
        let mut right = vec![zero.clone(); n * n * n];
        for (j, k, c) in &h.comult[i] {
            for (a, b, d) in &h.comult[*j] {
                left[(a * n + b) * n + k] += &(c * d);
            }
            for (a, b, d) in &h.comult[*k] {
                right[(j * n + a) * n + b] += &(c * d);
            }
        }
        if left != right {
            out.push(HopfViolation::Coassociativity { i });
        }
        let mut l = vec![zero.clone(); n];
        let mut r = vec![zero.clone(); n];
        for (j, k, c) in &h.comult[i] {
            l[*k] += &(c * &h.counit[*j]);
            r[*j] += &(c * &h.counit[*k]);
        }
        let b = h.alg.basis_vector(i);
        if l != b {
            out.push(HopfViolation::LeftCounit { i });
        }
        if r != b {
            out.push(HopfViolation::RightCounit { i });
        }
    }

    let unit = h.alg.unit();
    let mut one_one = vec![zero.clone(); n * n];
    for (j, x) in unit.iter().enumerate() {
        for (k, y) in unit.iter().enumerate() {
            one_one[j * n + k] = x * y;
        }
    }
    if h.comult_vec(unit) != one_one {
        out.push(HopfViolation::ComultUnit);
    }
    if !h.counit_of(unit).is_one() {
        out.push(HopfViolation::CounitUnit);
    }
    for i in 0..n {
        for j in 0..n {
            let p = h.alg.basis_product(i, j);
            if h.comult_vec(&p) != h.tensor_mul(&deltas[i], &deltas[j]) {
                out.push(HopfViolation::ComultMultiplicative { i, j });
            }
            if h.counit_of(&p) != &h.counit[i] * &h.counit[j] {
                out.push(HopfViolation::CounitMultiplicative { i, j });
            }
        }
    }

    let images: Vec<Vec<Scalar>> = (0..n).map(|j| h.antipode.column(j)).collect();
    for i in 0..n {
        let target: Vec<Scalar> = unit.iter().map(|u| u * &h.counit[i]).collect();
        let mut l = vec![zero.clone(); n];
        let mut r = vec![zero.clone(); n];
        for (j, k, c) in &h.comult[i] {
            let sl = h.alg.mul(&images[*j], &h.alg.basis_vector(*k));
            let sr = h.alg.mul(&h.alg.basis_vector(*j), &images[*k]);
            for t in 0..n {
                l[t] += &(c * &sl[t]);
                r[t] += &(c * &sr[t]);
            }
        }
        if l != target {
            out.push(HopfViolation::LeftAntipode { i });
        }
        if r != target {
            out.push(HopfViolation::RightAntipode { i });
        }
    }
    out.sort();
    HopfReport { violations: out }
}

/// The convolution algebra `H*` on the dual basis `f_i`:
/// `f_i f_j = sum_k [b_i ⊗ b_j]Δ(b_k) f_k`, with unit `ε`.
pub fn dual_algebra(h: &HopfAlgebra) -> Algebra {
    let n = h.dim();
    let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
    for (k, terms) in h.comult.iter().enumerate() {
        for (i, j, c) in terms {
            table[i * n + j].push((k, c.clone()));
        }
    }
    let mult = table
        .into_iter()
        .enumerate()
        .map(|(idx, terms)| (idx / n, idx % n, terms))
        .collect();
    let names = h.alg.names().iter().map(|s| format!("f[{s}]")).collect();
    Algebra::new(h.field(), names, mult, h.counit.clone()).expect("dual algebra is well formed")
}

/// A finite group of grouplike elements, given by coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeSet {
    pub elements: Vec<Vec<Scalar>>,
    /// `table[a][b]` is the index of `g_a g_b`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    /// Set when the character search could not split, so the list may be partial.
    pub obstruction: Option<SplittingError>,
}

impl GrouplikeSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.obstruction.is_none()
    }

    pub fn index_of(&self, v: &[Scalar]) -> Option<usize> {
        self.elements.iter().position(|e| e == v)
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.group_table().element_order(a)
    }

    /// The multiplication table as a [`GroupTable`], elements named `g0, g1, ...`.
    pub fn group_table(&self) -> GroupTable {
        GroupTable {
            names: (0..self.len()).map(|i| format!("g{i}")).collect(),
            table: self.table.clone(),
            identity: self.identity,
        }
    }

    fn subset(&self, keep: &[usize]) -> GrouplikeSet {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        GrouplikeSet {
            elements: keep.iter().map(|&i| self.elements[i].clone()).collect(),
            table: keep
                .iter()
                .map(|&a| keep.iter().map(|&b| pos[&self.table[a][b]]).collect())
                .collect(),
            identity: pos[&self.identity],
            obstruction: self.obstruction.clone(),
        }
    }
}

/// Builds the table of a finite set of grouplikes, identity first and the
/// rest sorted by coefficient vector, and checks group closure.
pub fn grouplike_set(
    h: &HopfAlgebra,
    mut elements: Vec<Vec<Scalar>>,
    obstruction: Option<SplittingError>,
) -> Result<GrouplikeSet, HopfError> {
    let unit = h.alg.unit().to_vec();
    elements.sort_by(|a, b| (a != &unit, a).cmp(&(b != &unit, b)));
    elements.dedup();
    if elements.first() != Some(&unit) {
        return Err(HopfError::NotClosed("identity missing".into()));
    }
    for (i, g) in elements.iter().enumerate() {
        if !h.is_grouplike(g) {
            return Err(HopfError::NotClosed(format!("element {i} is not grouplike")));
        }
    }
    let index: HashMap<&Vec<Scalar>, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut table = vec![vec![0; elements.len()]; elements.len()];
    for (a, ga) in elements.iter().enumerate() {
        for (b, gb) in elements.iter().enumerate() {
            let p = h.alg.mul(ga, gb);
            table[a][b] = *index
                .get(&p)
                .ok_or_else(|| HopfError::NotClosed(format!("product g{a} g{b} is outside the set")))?;
        }
        if !table[a].contains(&0) {
            return Err(HopfError::NotClosed(format!("g{a} has no inverse in the set")));
        }
    }
    Ok(GrouplikeSet {
        elements,
        table,
        identity: 0,
        obstruction,
    })
}

/// Grouplikes as characters of `H*`: characters of the quotient of the dual
/// algebra by its commutator ideal, read back through `H ≅ H**`.
pub fn grouplikes(h: &HopfAlgebra) -> Result<GrouplikeSet, HopfError> {
    let d = dual_algebra(h);
    let f = h.field();
    let ideal = commutator_ideal(&d);
    let q = quotient(&d, &ideal)?;
    let search = characters_commutative(&q.algebra)?;
    let elements: Vec<Vec<Scalar>> = search
        .characters
        .iter()
        .map(|chi| (0..h.dim()).map(|i| chi.eval(&q.projection.column(i))).collect())
        .collect();
    for g in &elements {
        if !h.is_grouplike(g) {
            return Err(HopfError::Malformed(format!(
                "character of H* gave a non-grouplike element over {f}"
            )));
        }
    }
    grouplike_set(h, elements, search.obstruction)
}

/// Two-sided ideal generated by all commutators of basis elements.
pub fn commutator_ideal(a: &Algebra) -> Subspace {
    let f = a.field();
    let n = a.dim();
    let mut ech = Echelon::new(f, n);
    let mut queue = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let x = a.basis_product(i, j);
            let y = a.basis_product(j, i);
            let c: Vec<Scalar> = x.iter().zip(&y).map(|(u, v)| u - v).collect();
            if ech.insert(&c) {
                queue.push(c);
            }
        }
    }
    while let Some(v) = queue.pop() {
        for k in 0..n {
            let b = a.basis_vector(k);
            for w in [a.mul(&b, &v), a.mul(&v, &b)] {
                if ech.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
    Subspace::span(f, n, &ech.basis().to_vec())
}

/// Grouplikes commuting with every basis element.
pub fn central_grouplikes(h: &HopfAlgebra, gs: &GrouplikeSet) -> GrouplikeSet {
    let n = h.dim();
    let keep: Vec<usize> = (0..gs.len())
        .filter(|&a| (0..n).all(|i| h.alg.commute(&gs.elements[a], &h.alg.basis_vector(i))))
        .collect();
    gs.subset(&keep)
}

/// Grouplikes `g` with `S^2(b) g = g b` for every basis element `b`. A
/// nonempty answer is checked to be one coset of the central grouplikes.
pub fn pivotal_grouplikes(h: &HopfAlgebra, gs: &GrouplikeSet) -> Result<Vec<usize>, HopfError> {
    let n = h.dim();
    let s2 = h.antipode_squared();
    let piv: Vec<usize> = (0..gs.len())
        .filter(|&a| {
            let g = &gs.elements[a];
            (0..n).all(|i| h.alg.mul(&s2.column(i), g) == h.alg.mul(g, &h.alg.basis_vector(i)))
        })
        .collect();
    if let Some(&g0) = piv.first() {
        let central = central_grouplikes(h, gs);
        let mut coset: Vec<usize> = central
            .elements
            .iter()
            .map(|c| gs.index_of(c).expect("central grouplikes are grouplikes"))
            .map(|c| gs.table[g0][c])
            .collect();
        coset.sort_unstable();
        if coset != piv {
            return Err(HopfError::PivotalNotCoset);
        }
    }
    Ok(piv)
}

/// True iff the element vectors are linearly independent.
pub fn grouplike_independence(field: &Field, gs: &GrouplikeSet) -> bool {
    if gs.is_empty() {
        return true;
    }
    let m = Matrix::from_columns(field, &gs.elements, gs.elements[0].len());
    m.rank() == gs.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeSubgroupDecomposition {
    /// Indices of elements of `p`-power order (only the identity in characteristic 0).
    pub p_part: Vec<usize>,
    /// Indices of elements of order prime to `p`.
    pub p_prime_part: Vec<usize>,
}

/// Splits a finite grouplike group into its `p`-part and `p'`-part and checks
/// that every element factors uniquely as a product of the two.
pub fn decompose_p_parts(gs: &GrouplikeSet, char_p: u64) -> Result<GrouplikeSubgroupDecomposition, HopfError> {
    let t = gs.group_table();
    let is_p_power = |mut k: usize| -> bool {
        if char_p == 0 {
            return k == 1;
        }
        while k % char_p as usize == 0 {
            k /= char_p as usize;
        }
        k == 1
    };
    let mut p_part = Vec::new();
    let mut p_prime_part = Vec::new();
    for a in 0..gs.len() {
        let ord = t.element_order(a);
        if is_p_power(ord) {
            p_part.push(a);
        }
        if char_p == 0 || ord % char_p as usize != 0 {
            p_prime_part.push(a);
        }
    }
    let mut hit = vec![0usize; gs.len()];
    for &a in &p_part {
        for &b in &p_prime_part {
            if t.mul(a, b) != t.mul(b, a) {
                return Err(HopfError::NotDirectProduct(format!("g{a} and g{b} do not commute")));
            }
            hit[t.mul(a, b)] += 1;
        }
    }
    if let Some(c) = hit.iter().position(|&k| k != 1) {
        return Err(HopfError::NotDirectProduct(format!(
            "g{c} has {} factorizations",
            hit[c]
        )));
    }
    Ok(GrouplikeSubgroupDecomposition { p_part, p_prime_part })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn group_algebras_are_hopf() {
        for name in ["Z1", "Z2", "S3"] {
            let g = GroupTable::named(name).unwrap();
            let h = gen_group_algebra(&g, &f(7)).unwrap();
            assert!(verify_hopf(&h).is_valid(), "{name}");
        }
    }

    #[test]
    fn sweedler_is_valid_and_self_dual_in_shape() {
        let h = gen_sweedler(&f(5)).unwrap();
        assert!(verify_hopf(&h).is_valid(), "{}", verify_hopf(&h));
        let d = dual_algebra(&h);
        assert!(verify_algebra(&d).is_valid());
        assert_eq!(d.dim(), 4);
        assert_eq!(crate::algebra::center(&d).dim(), crate::algebra::center(&h.alg).dim());
    }

    #[test]
    fn dual_of_group_algebra_is_pointwise() {
        let h = gen_group_algebra(&GroupTable::symmetric3(), &f(7)).unwrap();
        let d = dual_algebra(&h);
        assert!(d.is_commutative());
        for i in 0..6 {
            for j in 0..6 {
                let expect = if i == j { d.basis_vector(i) } else { d.zero_vector() };
                assert_eq!(d.basis_product(i, j), expect);
            }
        }
    }

    #[test]
    fn grouplikes_of_s3_and_sweedler() {
        let h = gen_group_algebra(&GroupTable::symmetric3(), &f(7)).unwrap();
        let gs = grouplikes(&h).unwrap();
        assert_eq!(gs.len(), 6);
        assert!(gs.is_complete());
        assert!(grouplike_independence(h.field(), &gs));
        assert_eq!(central_grouplikes(&h, &gs).len(), 1);
        assert_eq!(pivotal_grouplikes(&h, &gs).unwrap(), vec![0]);

        let s = gen_sweedler(&f(5)).unwrap();
        let gs = grouplikes(&s).unwrap();
        let one = s.alg.unit().to_vec();
        let g = s.alg.basis_vector(1);
        assert_eq!(gs.elements, vec![one, g.clone()]);
        assert_eq!(central_grouplikes(&s, &gs).len(), 1);
        let piv = pivotal_grouplikes(&s, &gs).unwrap();
        assert_eq!(piv.len(), 1);
        assert_eq!(gs.elements[piv[0]], g);
    }

    #[test]
    fn taft_three_over_f7() {
        let h = gen_taft(3, &f(7).from_i64(2), &f(7)).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(verify_hopf(&h).is_valid());
        assert_eq!(h.antipode_order(20), Some(6));
        let gs = grouplikes(&h).unwrap();
        assert_eq!(gs.len(), 3);
        assert!(grouplike_independence(h.field(), &gs));
        let piv = pivotal_grouplikes(&h, &gs).unwrap();
        assert_eq!(piv.len(), 1);
        assert_eq!(gs.elements[piv[0]], h.alg.basis_vector(1));
    }

    #[test]
    fn bad_taft_parameter() {
        let k = f(7);
        assert!(gen_taft(3, &k.from_i64(3), &k).is_err());
        let h = gen_taft_unchecked(3, &k.from_i64(3), &k).unwrap();
        let r = verify_hopf(&h);
        assert!(!r.is_bialgebra(), "{r}");
    }

    #[test]
    fn p_parts() {
        let k = f(7);
        let h = gen_group_algebra(&GroupTable::cyclic(6), &k).unwrap();
        let gs = grouplikes(&h).unwrap();
        let d = decompose_p_parts(&gs, 0).unwrap();
        assert_eq!((d.p_part.len(), d.p_prime_part.len()), (1, 6));
        let d = decompose_p_parts(&gs, 3).unwrap();
        assert_eq!((d.p_part.len(), d.p_prime_part.len()), (3, 2));
        let h3 = gen_group_algebra(&GroupTable::cyclic(3), &f(3)).unwrap();
        let gs3 = grouplikes(&h3).unwrap();
        assert_eq!(gs3.len(), 3);
        let d = decompose_p_parts(&gs3, 3).unwrap();
        assert_eq!((d.p_part.len(), d.p_prime_part.len()), (3, 1));
    }
}
