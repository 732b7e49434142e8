//! Composition factors by random-element splitting with Norton's
//! irreducibility test.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::factor;
use crate::field::{Field, Scalar};
use crate::matrix::{kernel_vectors, Echelon, Matrix};

use super::{iso_test, CompositionSeries, RepError, RepModule};

const MAX_TRIES: usize = 200;

/// Outcome of one split attempt.
enum Split {
    Irreducible,
    /// Basis of a proper nonzero submodule.
    Sub(Vec<Vec<Scalar>>),
}

/// Span of the orbit of `v` under the matrices.
fn spin(field: &Field, gens: &[Matrix], v: Vec<Scalar>) -> Vec<Vec<Scalar>> {
    let mut ech = Echelon::new(field, v.len());
    let mut found = Vec::new();
    if ech.insert(&v) {
        found.push(v);
    }
    let mut next = 0;
    while next < found.len() {
        let w = found[next].clone();
        next += 1;
        for g in gens {
            let u = g.mul_vec(&w);
            if ech.insert(&u) {
                found.push(u);
            }
            if found.len() == ech.ambient() {
                return found;
            }
        }
    }
    found
}

fn try_split(m: &RepModule, rng: &mut ChaCha8Rng) -> Result<Split, RepError> {
    let f = m.field();
    let d = m.dim();
    if d <= 1 {
        return Ok(Split::Irreducible);
    }
    let transposes: Vec<Matrix> = m.action().iter().map(|a| a.transpose()).collect();
    for _ in 0..MAX_TRIES {
        let coeffs: Vec<Scalar> = (0..m.action().len()).map(|_| f.random(rng)).collect();
        let theta = m.act(&coeffs);
        let cp = theta.charpoly();
        let mut factors = factor::factor(&cp).map_err(|e| RepError::NotAModule(e.to_string()))?;
        factors.sort_by_key(|fa| fa.poly.degree());
        for fa in &factors {
            let n = theta.eval_poly(&fa.poly);
            let ker = kernel_vectors(&n);
            let deg = fa.poly.degree().unwrap_or(0);
            let span = spin(f, m.action(), ker[0].clone());
            if span.len() < d {
                return Ok(Split::Sub(span));
            }
            if ker.len() != deg {
                continue;
            }
            let kt = kernel_vectors(&n.transpose());
            let dual_span = spin(f, &transposes, kt[0].clone());
            if dual_span.len() == d {
                return Ok(Split::Irreducible);
            }
            // the annihilator of an invariant subspace of the dual is a submodule
            let ann = Matrix::from_rows_with_cols(f, dual_span, d).unwrap();
            return Ok(Split::Sub(kernel_vectors(&ann)));
        }
    }
    Err(RepError::ChopFailed(MAX_TRIES))
}

/// Submodule and quotient actions for the submodule with the given basis.
fn split_module(m: &RepModule, sub: &[Vec<Scalar>]) -> (RepModule, RepModule) {
    let f = m.field();
    let d = m.dim();
    let k = sub.len();
    let mut ech = Echelon::from_vectors(f, d, sub);
    let mut cols: Vec<Vec<Scalar>> = sub.to_vec();
    for i in 0..d {
        let mut e = vec![f.zero(); d];
        e[i] = f.one();
        if ech.insert(&e) {
            cols.push(e);
        }
    }
    let p = Matrix::from_columns(f, &cols, d);
    let pinv = p.inverse().expect("completed basis");
    let mut sa = Vec::new();
    let mut qa = Vec::new();
    for a in m.action() {
        let c = pinv.mul(&a.mul(&p));
        sa.push(block(&c, 0, k));
        qa.push(block(&c, k, d - k));
    }
    (RepModule::from_parts(f, k, sa), RepModule::from_parts(f, d - k, qa))
}

fn block(m: &Matrix, start: usize, size: usize) -> Matrix {
    let mut out = Matrix::zeros(m.field(), size, size);
    for i in 0..size {
        for j in 0..size {
            out.set(i, j, m.get(start + i, start + j).clone());
        }
    }
    out
}

/// Certifies irreducibility (over the module's own field) by the same test.
pub fn is_irreducible(m: &RepModule, seed: u64) -> Result<bool, RepError> {
    if !m.field().is_finite() {
        return Err(RepError::UnsupportedField(m.field().to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(matches!(try_split(m, &mut rng)?, Split::Irreducible))
}

/// Composition factors of `m` with multiplicities, sorted by dimension and
/// trace vector. Deterministic for a fixed seed.
pub fn chop(m: &RepModule, seed: u64) -> Result<CompositionSeries, RepError> {
    if !m.field().is_finite() {
        return Err(RepError::UnsupportedField(m.field().to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pending = vec![m.clone()];
    let mut pieces: Vec<RepModule> = Vec::new();
    while let Some(x) = pending.pop() {
        if x.dim() == 0 {
            continue;
        }
        match try_split(&x, &mut rng)? {
            Split::Irreducible => pieces.push(x),
            Split::Sub(basis) => {
                let (s, q) = split_module(&x, &basis);
                pending.push(q);
                pending.push(s);
            }
        }
    }
    let mut factors: Vec<(RepModule, usize)> = Vec::new();
    for p in pieces {
        match factors.iter_mut().find(|(r, _)| iso_test(r, &p)) {
            Some((_, k)) => *k += 1,
            None => factors.push((p, 1)),
        }
    }
    factors.sort_by(|a, b| (a.0.dim(), a.0.trace_vector()).cmp(&(b.0.dim(), b.0.trace_vector())));
    let series = CompositionSeries { factors };
    if series.total_dim() != m.dim() {
        return Err(RepError::NotAModule(format!(
            "factors add up to dimension {}, module has {}",
            series.total_dim(),
            m.dim()
        )));
    }
    Ok(series)
}
