//! Fusion rings, block partitions of their labels, and the group of
//! functions `lambda: I -> k^x` compatible with both.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::field::Field;
use crate::zlattice::{
    abelian_invariants, enumerate_characters, unit_character_group, AbelianGroupPresentation, AbelianInvariants,
    IntMatrix, LatticeError, UnitCharacter,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("multiplicity for ({0}, {1}, {2}) given twice")]
    DuplicateEntry(String, String, String),
    #[error("block partition does not match the labels: {0}")]
    BadBlocks(String),
    #[error("lambda function has {found} values for {expected} labels")]
    LambdaShape { expected: usize, found: usize },
    #[error(
        "the group of lambda functions is infinite (free rank {free_rank}); this fusion data is not categorifiable \
         as a finite tensor category over an algebraically closed field, where that group is always finite"
    )]
    NotCategorifiable { free_rank: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Based ring with labels `I`, unit, and multiplicities `N_ij^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    /// Nonzero multiplicities keyed by `(i, j, k)`.
    mult: BTreeMap<(usize, usize, usize), u64>,
    dual: Option<Vec<Option<usize>>>,
}

impl FusionRing {
    pub fn new(
        labels: Vec<String>,
        unit: &str,
        entries: &[(String, String, String, u64)],
        dual: Option<&[(String, String)]>,
    ) -> Result<FusionRing, FusionError> {
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(FusionError::DuplicateLabel(l.clone()));
            }
        }
        let idx = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| FusionError::UnknownLabel(s.to_string()))
        };
        let unit = idx(unit)?;
        let mut mult = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (a, b, c, n) in entries {
            let key = (idx(a)?, idx(b)?, idx(c)?);
            if !seen.insert(key) {
                return Err(FusionError::DuplicateEntry(a.clone(), b.clone(), c.clone()));
            }
            if *n > 0 {
                mult.insert(key, *n);
            }
        }
        let dual = match dual {
            None => None,
            Some(pairs) => {
                let mut d = vec![None; labels.len()];
                for (a, b) in pairs {
                    let (i, j) = (idx(a)?, idx(b)?);
                    d[i] = Some(j);
                    if d[j].is_none() {
                        d[j] = Some(i);
                    }
                }
                Some(d)
            }
        };
        Ok(FusionRing {
            labels,
            unit,
            mult,
            dual,
        })
    }

    /// Fusion ring from integer-indexed data.
    pub fn from_indices(
        labels: Vec<String>,
        unit: usize,
        mult: BTreeMap<(usize, usize, usize), u64>,
        dual: Option<Vec<Option<usize>>>,
    ) -> FusionRing {
        let mult = mult.into_iter().filter(|(_, n)| *n > 0).collect();
        FusionRing {
            labels,
            unit,
            mult,
            dual,
        }
    }

    /// Group ring of a finite group given by its multiplication table
    /// (`table[a][b]` is the index of `ab`); labels are `g0, g1, ...`.
    pub fn group_ring(table: &[Vec<usize>], identity: usize) -> FusionRing {
        let n = table.len();
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let mut mult = BTreeMap::new();
        let mut dual = vec![None; n];
        for a in 0..n {
            for b in 0..n {
                mult.insert((a, b, table[a][b]), 1);
                if table[a][b] == identity {
                    dual[a] = Some(b);
                }
            }
        }
        FusionRing::from_indices(labels, identity, mult, Some(dual))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> u64 {
        self.mult.get(&(i, j, k)).copied().unwrap_or(0)
    }

    /// Nonzero multiplicities in sorted-triple order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        self.mult.iter().map(|(k, v)| (*k, *v))
    }

    pub fn dual(&self) -> Option<&[Option<usize>]> {
        self.dual.as_deref()
    }

    /// `i (x) j` as a multiplicity vector over the labels.
    pub fn product(&self, i: usize, j: usize) -> Vec<u64> {
        (0..self.len()).map(|k| self.n(i, j, k)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FusionViolation {
    /// `N_{1 j}^k` or `N_{i 1}^k` differs from the Kronecker delta.
    Unit {
        left: usize,
        right: usize,
        out: usize,
        found: u64,
    },
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        left: u64,
        right: u64,
    },
    /// `N_{i i*}^1` is zero.
    Duality { label: usize, dual: usize },
    /// The dual map is not a total involution.
    DualMap { label: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionReport {
    pub labels: Vec<String>,
    pub violations: Vec<FusionViolation>,
}

impl FusionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for FusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "fusion ring valid ({} labels)", self.labels.len());
        }
        let l = |i: &usize| self.labels[*i].as_str();
        for v in &self.violations {
            match v {
                FusionViolation::Unit {
                    left,
                    right,
                    out,
                    found,
                } => writeln!(f, "unit violation: N({}, {}; {}) = {found}", l(left), l(right), l(out))?,
                FusionViolation::Associativity {
                    i,
                    j,
                    k,
                    l: m,
                    left,
                    right,
                } => writeln!(
                    f,
                    "associativity violation at ({}, {}, {}; {}): (ij)k gives {left}, i(jk) gives {right}",
                    l(i),
                    l(j),
                    l(k),
                    l(m)
                )?,
                FusionViolation::Duality { label, dual } => writeln!(
                    f,
                    "duality violation: unit does not occur in {} x {}",
                    l(label),
                    l(dual)
                )?,
                FusionViolation::DualMap { label } => writeln!(f, "dual map is not an involution at {}", l(label))?,
            }
        }
        Ok(())
    }
}

/// Checks the unit axioms, associativity, and (if present) duality.
pub fn validate_fusion(f: &FusionRing) -> FusionReport {
    let n = f.len();
    let u = f.unit;
    let mut violations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let want = u64::from(a == b);
            let left = f.n(u, a, b);
            if left != want {
                violations.push(FusionViolation::Unit {
                    left: u,
                    right: a,
                    out: b,
                    found: left,
                });
            }
            let right = f.n(a, u, b);
            if right != want && a != u {
                violations.push(FusionViolation::Unit {
                    left: a,
                    right: u,
                    out: b,
                    found: right,
                });
            }
        }
    }
    // dense copy for the quartic scan
    let mut dense = vec![0u64; n * n * n];
    for (&(i, j, k), &v) in &f.mult {
        dense[(i * n + j) * n + k] = v;
    }
    let at = |i: usize, j: usize, k: usize| dense[(i * n + j) * n + k];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let left: u64 = (0..n).map(|t| at(i, j, t) * at(t, k, l)).sum();
                    let right: u64 = (0..n).map(|t| at(j, k, t) * at(i, t, l)).sum();
                    if left != right {
                        violations.push(FusionViolation::Associativity {
                            i,
                            j,
                            k,
                            l,
                            left,
                            right,
                        });
                    }
                }
            }
        }
    }
    if let Some(d) = &f.dual {
        for i in 0..n {
            match d[i] {
                Some(j) if d[j] == Some(i) => {
                    if at(i, j, u) == 0 {
                        violations.push(FusionViolation::Duality { label: i, dual: j });
                    }
                }
                _ => violations.push(FusionViolation::DualMap { label: i }),
            }
        }
    }
    violations.sort();
    FusionReport {
        labels: f.labels.clone(),
        violations,
    }
}

/// Partition of the labels into blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub classes: Vec<Vec<String>>,
}

impl BlockPartition {
    pub fn singletons(f: &FusionRing) -> BlockPartition {
        BlockPartition {
            classes: f.labels.iter().map(|l| vec![l.clone()]).collect(),
        }
    }

    pub fn single_block(f: &FusionRing) -> BlockPartition {
        BlockPartition {
            classes: vec![f.labels.clone()],
        }
    }

    /// Classes as sorted label indices; errors unless the classes partition the labels.
    pub fn resolve(&self, f: &FusionRing) -> Result<Vec<Vec<usize>>, FusionError> {
        let mut seen = vec![false; f.len()];
        let mut out = Vec::new();
        for class in &self.classes {
            if class.is_empty() {
                return Err(FusionError::BadBlocks("empty block".into()));
            }
            let mut idx = Vec::new();
            for l in class {
                let i = f
                    .index_of(l)
                    .ok_or_else(|| FusionError::BadBlocks(format!("unknown label {l:?}")))?;
                if seen[i] {
                    return Err(FusionError::BadBlocks(format!("label {l:?} appears twice")));
                }
                seen[i] = true;
                idx.push(i);
            }
            idx.sort_unstable();
            out.push(idx);
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(FusionError::BadBlocks(format!(
                "label {:?} is in no block",
                f.labels[i]
            )));
        }
        Ok(out)
    }

    /// Block index of each label.
    pub fn block_of(&self, f: &FusionRing) -> Result<Vec<usize>, FusionError> {
        let classes = self.resolve(f)?;
        let mut out = vec![0; f.len()];
        for (b, class) in classes.iter().enumerate() {
            for &i in class {
                out[i] = b;
            }
        }
        Ok(out)
    }

    /// Same partition, with classes and members in a canonical order.
    pub fn canonical(&self, f: &FusionRing) -> Result<Vec<Vec<usize>>, FusionError> {
        let mut c = self.resolve(f)?;
        c.sort();
        Ok(c)
    }
}

/// Relations `e_i + e_j - e_k` for every nonzero `N_ij^k` (sorted triples),
/// then `e_i - e_j` for every pair `i < j` in a common block; duplicates dropped.
pub fn lambda_relation_matrix(f: &FusionRing, b: &BlockPartition) -> Result<IntMatrix, FusionError> {
    let classes = b.resolve(f)?;
    let n = f.len();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |r: Vec<i64>| {
        if seen.insert(r.clone()) {
            rows.push(r);
        }
    };
    for ((i, j, k), _) in f.entries() {
        let mut r = vec![0i64; n];
        r[i] += 1;
        r[j] += 1;
        r[k] -= 1;
        push(r);
    }
    let mut pairs = Vec::new();
    for class in &classes {
        for (x, &i) in class.iter().enumerate() {
            for &j in &class[x + 1..] {
                pairs.push((i, j));
            }
        }
    }
    pairs.sort_unstable();
    for (i, j) in pairs {
        let mut r = vec![0i64; n];
        r[i] += 1;
        r[j] -= 1;
        push(r);
    }
    Ok(IntMatrix::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect(),
        n,
    ))
}

/// A function on the labels with values in the roots of unity, stored as a
/// character of the presented group (exponents in label order).
pub type LambdaFunction = UnitCharacter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaGroup {
    /// Invariants of the group presented by the lambda relations.
    pub presented: AbelianInvariants,
    /// Invariants of the group of lambda functions (prime-to-`p` part).
    pub invariants: AbelianInvariants,
    pub functions: Vec<LambdaFunction>,
}

impl LambdaGroup {
    pub fn order(&self) -> usize {
        self.functions.len()
    }
}

/// All lambda functions for `(f, b)` over a field of characteristic `char_p`,
/// evaluated in `field` when one is given.
pub fn lambda_group(
    f: &FusionRing,
    b: &BlockPartition,
    char_p: u64,
    field: Option<&Field>,
) -> Result<LambdaGroup, FusionError> {
    let rel = lambda_relation_matrix(f, b)?;
    lambda_group_from_relations(f.len(), rel, char_p, field)
}

pub(crate) fn lambda_group_from_relations(
    n: usize,
    rel: IntMatrix,
    char_p: u64,
    field: Option<&Field>,
) -> Result<LambdaGroup, FusionError> {
    let pres = AbelianGroupPresentation::new(n, rel);
    let presented = abelian_invariants(&pres);
    let adjusted = unit_character_group(&presented, char_p);
    if adjusted.infinite {
        return Err(FusionError::NotCategorifiable {
            free_rank: presented.free_rank,
        });
    }
    let functions = enumerate_characters(&pres, char_p, field)?;
    Ok(LambdaGroup {
        presented,
        invariants: adjusted.invariants,
        functions,
    })
}

/// Whether `lambda(i) lambda(j) = lambda(k)` for all nonzero `N_ij^k` and
/// `lambda` is constant on blocks. Evaluated values, when present, are checked too.
pub fn check_lambda(f: &FusionRing, b: &BlockPartition, lambda: &LambdaFunction) -> Result<bool, FusionError> {
    let n = f.len();
    if lambda.exponents.len() != n || lambda.values.as_ref().is_some_and(|v| v.len() != n) {
        return Err(FusionError::LambdaShape {
            expected: n,
            found: lambda.exponents.len(),
        });
    }
    let m = lambda.modulus.max(1);
    let e = |i: usize| lambda.exponents[i] % m;
    for ((i, j, k), _) in f.entries() {
        if (e(i) + e(j)) % m != e(k) {
            return Ok(false);
        }
        if let Some(v) = &lambda.values {
            if &v[i] * &v[j] != v[k] {
                return Ok(false);
            }
        }
    }
    for class in b.resolve(f)? {
        let first = class[0];
        for &i in &class[1..] {
            if e(i) != e(first) {
                return Ok(false);
            }
            if let Some(v) = &lambda.values {
                if v[i] != v[first] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
