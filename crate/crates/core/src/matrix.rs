//! Dense matrices over a [`Field`] and the row-reduction toolkit built on them.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("entry ({row}, {col}) does not belong to field {field}")]
    FieldMismatch { row: usize, col: usize, field: String },
    #[error("operands live over different fields: {0} vs {1}")]
    MixedFields(String, String),
    #[error("ragged rows: expected {expected} columns, row {row} has {found}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Row-major dense matrix. All entries belong to `field`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix, checking shape and that every entry lies in `field`.
    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::Ragged {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, x) in row.into_iter().enumerate() {
                if !field.contains(&x) {
                    return Err(MatrixError::FieldMismatch {
                        row: i,
                        col: j,
                        field: field.to_string(),
                    });
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        })
    }

    /// Like [`Matrix::from_rows`] with an explicit column count (for empty row lists).
    pub fn from_rows_with_cols(field: &Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix, MatrixError> {
        if rows.is_empty() {
            return Ok(Matrix::zeros(field, 0, cols));
        }
        let m = Matrix::from_rows(field, rows)?;
        if m.cols != cols {
            return Err(MatrixError::Shape(format!("expected {cols} columns, got {}", m.cols)));
        }
        Ok(m)
    }

    pub fn from_i64s(field: &Field, rows: &[&[i64]]) -> Matrix {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, v).expect("well-formed integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, cols: &[Vec<Scalar>], rows: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// `Some(c)` if the matrix is `c` times the identity.
    pub fn scalar_value(&self) -> Option<Scalar> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            self.field.one()
        } else {
            self.get(0, 0).clone()
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if (i == j && *x != c) || (i != j && !x.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::MixedFields(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.cols != other.rows {
            return Err(MatrixError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![self.field.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] += &(a * b);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(&self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Submatrix of the given row and column ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let v = rows
            .map(|i| cols.clone().map(|j| self.get(i, j).clone()).collect())
            .collect();
        Matrix::from_rows_with_cols(&self.field, v, cols.len()).unwrap()
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).inv().unwrap();
            for j in c..cols {
                let x = &self.data[r * cols + j] * &inv;
                self.data[r * cols + j] = x;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let sub = &f * &self.data[r * cols + j];
                    if !sub.is_zero() {
                        self.data[i * cols + j] -= &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, as the columns of the result.
    pub fn kernel(&self) -> Matrix {
        let cols = kernel_vectors(self);
        Matrix::from_columns(&self.field, &cols, self.cols)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n));
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial `det(xI - A)`, via reduction to Hessenberg form.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let f = &self.field;
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg form
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for k in 0..n {
                    h.data.swap(k * n + i, k * n + m);
                }
            }
            let inv = h.get(m, m - 1).inv().unwrap();
            for i in m + 1..n {
                let u = h.get(i, m - 1) * &inv;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let sub = &u * h.get(m, j);
                    h.data[i * n + j] -= &sub;
                }
                for k in 0..n {
                    let add = &u * h.get(k, i);
                    h.data[k * n + m] += &add;
                }
            }
        }
        // recurrence for the leading principal minors
        let mut p: Vec<Poly> = vec![Poly::one(f)];
        for m in 1..=n {
            let x_minus = Poly::new(f, vec![-h.get(m - 1, m - 1), f.one()]);
            let mut next = x_minus.mul(&p[m - 1]);
            let mut t = f.one();
            for i in 1..m {
                t = &t * h.get(m - i, m - i - 1);
                let c = &t * h.get(m - i - 1, m - 1);
                if !c.is_zero() {
                    next = next.sub(&p[m - i - 1].scale(&c));
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    /// Minimal polynomial, from Krylov sequences of the standard basis vectors.
    pub fn minpoly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let f = &self.field;
        let mut acc = Poly::one(f);
        let mut invariant = Echelon::new(f, n);
        for i in 0..n {
            let mut e = vec![f.zero(); n];
            e[i] = f.one();
            if invariant.contains(&e) {
                continue;
            }
            let local = self.vector_minpoly(&e, &mut invariant);
            acc = acc.mul(&local).div_exact(&acc.gcd(&local));
        }
        acc.monic()
    }

    /// Minimal polynomial of `v` under this matrix; adds its Krylov space to `span`.
    fn vector_minpoly(&self, v: &[Scalar], span: &mut Echelon) -> Poly {
        let f = &self.field;
        let n = self.rows;
        // track each Krylov vector together with its expression in powers of A
        let mut ech = Echelon::new(f, n);
        let mut combos: Vec<Vec<Scalar>> = Vec::new();
        let mut cur = v.to_vec();
        let mut k = 0usize;
        loop {
            let mut coeff = vec![f.zero(); k + 1];
            coeff[k] = f.one();
            let (residue, used) = ech.reduce_tracking(&cur);
            for (idx, c) in used {
                for (t, x) in combos[idx].iter().enumerate() {
                    coeff[t] -= &(&c * x);
                }
            }
            if residue.iter().all(|x| x.is_zero()) {
                span.insert(&cur);
                return Poly::new(f, coeff).monic();
            }
            ech.push_reduced(residue);
            combos.push(coeff);
            span.insert(&cur);
            cur = self.mul_vec(&cur);
            k += 1;
        }
    }

    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(&self.field, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc.data[i * n + i] += c;
            }
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn check_entries(m: &Matrix) -> Result<(), MatrixError> {
    for i in 0..m.rows {
        for j in 0..m.cols {
            if !m.field.contains(m.get(i, j)) {
                return Err(MatrixError::FieldMismatch {
                    row: i,
                    col: j,
                    field: m.field.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Unique reduced row echelon form with strictly increasing pivot columns.
pub fn mat_rref(m: &Matrix) -> Result<(Matrix, Vec<usize>), MatrixError> {
    check_entries(m)?;
    Ok(m.rref())
}

/// Columns of the result form a basis of `{v : m v = 0}`.
pub fn mat_kernel(m: &Matrix) -> Result<Matrix, MatrixError> {
    check_entries(m)?;
    Ok(m.kernel())
}

/// Kernel basis as a list of vectors; free variables in increasing order.
pub fn kernel_vectors(m: &Matrix) -> Vec<Vec<Scalar>> {
    let f = &m.field;
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); m.cols];
        v[free] = f.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free);
        }
        out.push(v);
    }
    out
}

/// Incrementally built semi-echelon basis of a row space.
///
/// Each stored row has a leading one at its pivot column and zeros in the
/// pivot columns of the rows stored before it.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, dim: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(field: &Field, dim: usize, vs: impl IntoIterator<Item = &'a Vec<Scalar>>) -> Echelon {
        let mut e = Echelon::new(field, dim);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.reduce_tracking(v).0
    }

    /// Reduces `v`, also returning `(row index, multiplier)` for every row subtracted.
    fn reduce_tracking(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<(usize, Scalar)>) {
        let mut w = v.to_vec();
        let mut used = Vec::new();
        for (idx, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = w[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
            used.push((idx, c));
        }
        (w, used)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let w = self.reduce(v);
        if w.iter().all(|x| x.is_zero()) {
            return false;
        }
        self.push_reduced(w);
        true
    }

    fn push_reduced(&mut self, mut w: Vec<Scalar>) {
        let p = w.iter().position(|x| !x.is_zero()).unwrap();
        let inv = w[p].inv().unwrap();
        for x in w.iter_mut() {
            *x = &*x * &inv;
        }
        self.rows.push(w);
        self.pivots.push(p);
    }

    /// Fully reduced basis in increasing pivot order (the RREF rows).
    pub fn reduced_basis(&self) -> Vec<Vec<Scalar>> {
        if self.rows.is_empty() {
            return Vec::new();
        }
        let m = Matrix::from_rows(&self.field, self.rows.clone()).unwrap();
        let (r, piv) = m.rref();
        (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
    }

    /// Coordinates of `v` against the stored rows, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (w, used) = self.reduce_tracking(v);
        if !w.iter().all(|x| x.is_zero()) {
            return None;
        }
        let mut c = vec![self.field.zero(); self.rows.len()];
        for (idx, x) in used {
            c[idx] = x;
        }
        Some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn rref_examples() {
        let q = Field::rationals();
        let (r, p) = mat_rref(&Matrix::identity(&q, 2)).unwrap();
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1]);
        let (r, p) = mat_rref(&Matrix::from_i64s(&q, &[&[2, 4], &[1, 2]])).unwrap();
        assert_eq!(r, Matrix::from_i64s(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn mixed_fields_rejected() {
        let f7 = Field::prime(7).unwrap();
        let q = Field::rationals();
        let rows = vec![vec![f7.one(), q.one()]];
        assert!(Matrix::from_rows(&f7, rows).is_err());
        let a = Matrix::identity(&f7, 2);
        let b = Matrix::identity(&q, 2);
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn kernel_examples() {
        let q = Field::rationals();
        assert_eq!(mat_kernel(&Matrix::identity(&q, 3)).unwrap().cols(), 0);
        assert_eq!(mat_kernel(&Matrix::zeros(&q, 3, 3)).unwrap().cols(), 3);
        let m = Matrix::from_i64s(&q, &[&[1, 1, 0]]);
        let k = mat_kernel(&m).unwrap();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        let target: Vec<Scalar> = [1, -1, 0].iter().map(|&x| q.from_i64(x)).collect();
        let mut e = Echelon::from_vectors(&q, 3, &k.columns());
        assert!(!e.insert(&target));
    }

    #[test]
    fn inverse_roundtrip() {
        let f7 = Field::prime(7).unwrap();
        let m = Matrix::from_i64s(&f7, &[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_i64s(&f7, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn charpoly_and_minpoly() {
        let q = Field::rationals();
        // companion-like matrix with char poly x^3 - 2x - 5
        let m = Matrix::from_i64s(&q, &[&[0, 0, 5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(m.charpoly(), Poly::from_i64s(&q, &[-5, -2, 0, 1]));
        assert!(m.eval_poly(&m.charpoly()).is_zero());
        let d = Matrix::from_i64s(&q, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(d.minpoly(), Poly::from_i64s(&q, &[6, -5, 1]));
        let j = Matrix::from_i64s(&q, &[&[2, 1], &[0, 2]]);
        assert_eq!(j.minpoly(), Poly::from_i64s(&q, &[4, -4, 1]));
    }

    #[test]
    fn charpoly_over_extension() {
        let k = Field::from_spec(&FieldSpec::parse("ext:Fp:2:x^2+x+1").unwrap()).unwrap();
        let a = k.generator().unwrap();
        let m = Matrix::from_rows(&k, vec![vec![a.clone(), k.one()], vec![k.zero(), &a * &a]]).unwrap();
        let cp = m.charpoly();
        assert!(m.eval_poly(&cp).is_zero());
        assert_eq!(cp.degree(), Some(2));
    }

    #[test]
    fn kron_shape() {
        let f5 = Field::prime(5).unwrap();
        let a = Matrix::from_i64s(&f5, &[&[1, 2], &[3, 4]]);
        let i = Matrix::identity(&f5, 2);
        let k = a.kron(&i);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(2, 0), &f5.from_i64(3));
        assert_eq!(k.get(3, 1), &f5.from_i64(3));
        assert!(k.get(2, 1).is_zero());
    }
}
