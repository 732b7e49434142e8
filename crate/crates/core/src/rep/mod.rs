//! Modules over finite-dimensional algebras: composition factors, simples,
//! blocks, and the fusion data of a Hopf algebra's representations.

mod blocks;
mod meataxe;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::error::{extension_hint, SplittingError};
use crate::field::{Field, Scalar};
use crate::fusion::{validate_fusion, BlockPartition, FusionError, FusionRing};
use crate::hopf::{HopfAlgebra, HopfError};
use crate::matrix::{kernel_vectors, Matrix};

pub use blocks::{blocks, ext_linkage_blocks, idempotent_blocks};
pub use meataxe::{chop, is_irreducible};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("composition factors need a finite field, got {0}")]
    UnsupportedField(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("element does not act by a scalar (not central, or module not simple)")]
    NonScalarAction,
    #[error(transparent)]
    Splitting(#[from] SplittingError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error("no irreducibility decision after {0} random elements")]
    ChopFailed(usize),
    #[error("composition factor matches no simple module in the catalog")]
    Unmatched,
    #[error("block methods disagree: central idempotents give {primary:?}, Ext linkage gives {oracle:?}")]
    BlocksDisagree {
        primary: Vec<Vec<String>>,
        oracle: Vec<Vec<String>>,
    },
    #[error("central idempotent acts neither as 0 nor as 1 on {0}")]
    IdempotentMixed(String),
    #[error("fusion ring failed validation: {0}")]
    InvalidFusion(String),
}

/// A left module given by the action matrix of every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepModule {
    field: Field,
    dim: usize,
    action: Vec<Matrix>,
}

impl RepModule {
    /// Checks `ρ(b_i)ρ(b_j) = ρ(b_i b_j)` on all basis pairs and `ρ(1) = id`.
    pub fn new(a: &Algebra, action: Vec<Matrix>) -> Result<RepModule, RepError> {
        let m = RepModule::unchecked(a.field(), action, a.dim())?;
        m.verify(a)?;
        Ok(m)
    }

    fn unchecked(field: &Field, action: Vec<Matrix>, n: usize) -> Result<RepModule, RepError> {
        if action.len() != n {
            return Err(RepError::NotAModule(format!(
                "{} matrices for {n} basis elements",
                action.len()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        if action
            .iter()
            .any(|m| m.rows() != dim || m.cols() != dim || m.field() != field)
        {
            return Err(RepError::NotAModule(
                "action matrices must be square of one size over the algebra field".into(),
            ));
        }
        Ok(RepModule {
            field: field.clone(),
            dim,
            action,
        })
    }

    pub(crate) fn from_parts(field: &Field, dim: usize, action: Vec<Matrix>) -> RepModule {
        RepModule {
            field: field.clone(),
            dim,
            action,
        }
    }

    pub fn verify(&self, a: &Algebra) -> Result<(), RepError> {
        let n = a.dim();
        if self.action.len() != n {
            return Err(RepError::NotAModule("wrong number of action matrices".into()));
        }
        if !self.act(a.unit()).is_identity() {
            return Err(RepError::NotAModule("unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if self.action[i].mul(&self.action[j]) != self.act(&a.basis_product(i, j)) {
                    return Err(RepError::NotAModule(format!("ρ(b{i})ρ(b{j}) != ρ(b{i} b{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(v)` for an algebra element in basis coordinates.
    pub fn act(&self, v: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        for (c, a) in v.iter().zip(&self.action) {
            m.add_scaled(c, a);
        }
        m
    }

    /// Traces of the basis actions; isomorphic modules share them.
    pub fn trace_vector(&self) -> Vec<Scalar> {
        self.action.iter().map(|m| m.trace()).collect()
    }

    /// One-dimensional module on which `b_i` acts by `values[i]`.
    pub fn one_dimensional(field: &Field, values: &[Scalar]) -> RepModule {
        let action = values
            .iter()
            .map(|v| Matrix::from_rows(field, vec![vec![v.clone()]]).unwrap())
            .collect();
        RepModule::from_parts(field, 1, action)
    }
}

pub fn regular_module(a: &Algebra) -> RepModule {
    RepModule::from_parts(a.field(), a.dim(), a.left_regular())
}

/// Basis of `Hom_A(m, n)` as `dim n x dim m` matrices `X` with `X ρ_m = ρ_n X`.
pub fn hom_space(m: &RepModule, n: &RepModule) -> Vec<Matrix> {
    let f = &m.field;
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dm * dn;
    let mut rows = Vec::new();
    for (am, an) in m.action.iter().zip(&n.action) {
        for r in 0..dn {
            for c in 0..dm {
                let mut row = vec![f.zero(); unknowns];
                for t in 0..dm {
                    row[r * dm + t] += am.get(t, c);
                }
                for t in 0..dn {
                    row[t * dm + c] -= an.get(r, t);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = Matrix::from_rows_with_cols(f, rows, unknowns).expect("well-formed system");
    kernel_vectors(&sys)
        .into_iter()
        .map(|v| Matrix::from_rows(f, v.chunks(dm.max(1)).map(|c| c.to_vec()).collect()).unwrap())
        .collect()
}

/// True iff an invertible intertwiner `m -> n` exists. Exact for simple
/// modules, where every nonzero intertwiner is invertible.
pub fn iso_test(m: &RepModule, n: &RepModule) -> bool {
    if m.dim != n.dim || m.action.len() != n.action.len() {
        return false;
    }
    if m.dim == 0 {
        return true;
    }
    if m.trace_vector() != n.trace_vector() {
        return false;
    }
    let homs = hom_space(m, n);
    if homs.iter().any(|x| x.is_invertible()) {
        return true;
    }
    // a generic combination of the basis
    let mut sum = Matrix::zeros(&m.field, n.dim, m.dim);
    for (k, x) in homs.iter().enumerate() {
        sum.add_scaled(&m.field.from_i64(k as i64 + 1), x);
    }
    sum.is_invertible()
}

/// Multiplicities of the composition factors, one representative each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSeries {
    pub factors: Vec<(RepModule, usize)>,
}

impl CompositionSeries {
    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|(m, k)| m.dim() * k).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(m, k)| std::iter::repeat_n(m.dim(), *k))
            .collect();
        d.sort_unstable();
        d
    }
}

/// Pairwise non-isomorphic simple modules named `S0, S1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCatalog {
    pub names: Vec<String>,
    pub modules: Vec<RepModule>,
}

impl SimpleCatalog {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.dim()).collect()
    }

    /// Index of the simple isomorphic to `m`.
    pub fn find(&self, m: &RepModule) -> Option<usize> {
        self.modules.iter().position(|s| iso_test(s, m))
    }

    fn from_modules(modules: Vec<RepModule>) -> SimpleCatalog {
        SimpleCatalog {
            names: (0..modules.len()).map(|i| format!("S{i}")).collect(),
            modules,
        }
    }
}

/// Simple modules of `a`, read off the regular module, sorted by dimension
/// and then by trace vector. Each must be absolutely simple.
pub fn simples(a: &Algebra, seed: u64) -> Result<SimpleCatalog, RepError> {
    simples_with_unit(a, None, seed)
}

/// As [`simples`], with the module given by `unit_character` placed first.
pub fn simples_with_unit(a: &Algebra, unit_character: Option<&[Scalar]>, seed: u64) -> Result<SimpleCatalog, RepError> {
    let series = chop(&regular_module(a), seed)?;
    let mut mods: Vec<RepModule> = series.factors.into_iter().map(|(m, _)| m).collect();
    for m in &mods {
        let end = hom_space(m, m).len();
        if end > 1 {
            return Err(SplittingError::new(
                format!(
                    "a simple module of dimension {} has a {end}-dimensional endomorphism algebra over {}",
                    m.dim(),
                    a.field()
                ),
                vec![format!("End(S) of dimension {end}")],
                extension_hint(a.field(), None, Some(end)),
            )
            .into());
        }
    }
    if let Some(chi) = unit_character {
        let triv = RepModule::one_dimensional(a.field(), chi);
        let pos = mods
            .iter()
            .position(|m| iso_test(m, &triv))
            .ok_or(RepError::Unmatched)?;
        let t = mods.remove(pos);
        mods.insert(0, t);
    }
    Ok(SimpleCatalog::from_modules(mods))
}

/// Simples of a Hopf algebra, the trivial module `S0` first.
pub fn hopf_simples(h: &HopfAlgebra, seed: u64) -> Result<SimpleCatalog, RepError> {
    simples_with_unit(&h.alg, Some(&h.counit), seed)
}

/// `m ⊗ n` with `b` acting through `Δ(b)`.
pub fn tensor_module(h: &HopfAlgebra, m: &RepModule, n: &RepModule) -> Result<RepModule, RepError> {
    let f = h.field();
    let d = m.dim * n.dim;
    let action = h
        .comult
        .iter()
        .map(|terms| {
            let mut acc = Matrix::zeros(f, d, d);
            for (j, k, c) in terms {
                acc.add_scaled(c, &m.action[*j].kron(&n.action[*k]));
            }
            acc
        })
        .collect();
    RepModule::new(&h.alg, action)
}

/// The dual module `ρ*(b) = ρ(S(b))^T`.
pub fn dual_module(h: &HopfAlgebra, m: &RepModule) -> Result<RepModule, RepError> {
    let action = (0..h.dim()).map(|j| m.act(&h.antipode.column(j)).transpose()).collect();
    RepModule::new(&h.alg, action)
}

/// The scalar by which `z` acts on `s`.
pub fn scalar_action(z: &[Scalar], s: &RepModule) -> Result<Scalar, RepError> {
    s.act(z).scalar_value().ok_or(RepError::NonScalarAction)
}

/// Fusion data of `Rep(H)`: simples, their tensor multiplicities and duals,
/// and the block partition.
#[derive(Clone, Debug)]
pub struct HopfFusion {
    pub ring: FusionRing,
    pub blocks: BlockPartition,
    pub simples: SimpleCatalog,
}

pub fn fusion_from_hopf(h: &HopfAlgebra, seed: u64) -> Result<HopfFusion, RepError> {
    let cat = hopf_simples(h, seed)?;
    let r = cat.len();
    let mut mult = BTreeMap::new();
    for i in 0..r {
        for j in 0..r {
            let t = tensor_module(h, &cat.modules[i], &cat.modules[j])?;
            for (factor, k) in chop(&t, seed)?.factors {
                let idx = cat.find(&factor).ok_or(RepError::Unmatched)?;
                *mult.entry((i, j, idx)).or_insert(0u64) += k as u64;
            }
        }
    }
    let mut dual = Vec::with_capacity(r);
    for m in &cat.modules {
        let d = dual_module(h, m)?;
        dual.push(Some(cat.find(&d).ok_or(RepError::Unmatched)?));
    }
    let ring = FusionRing::from_indices(cat.names.clone(), 0, mult, Some(dual));
    let report = validate_fusion(&ring);
    if !report.is_valid() {
        return Err(RepError::InvalidFusion(report.to_string()));
    }
    let blocks = blocks(&h.alg, &cat)?;
    Ok(HopfFusion {
        ring,
        blocks,
        simples: cat,
    })
}
