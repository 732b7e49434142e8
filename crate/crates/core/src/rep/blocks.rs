//! Block partition of the simple modules, by central idempotents and, as a
//! cross-check, by connectivity of the Ext-quiver.

use crate::algebra::{center, characters_commutative, lift_idempotent, quotient, radical, Algebra};
use crate::field::Scalar;
use crate::fusion::BlockPartition;
use crate::matrix::Matrix;

use super::{hom_space, RepError, RepModule, SimpleCatalog};

fn classes_to_partition(cat: &SimpleCatalog, mut classes: Vec<Vec<usize>>) -> BlockPartition {
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    classes.sort();
    BlockPartition {
        classes: classes
            .into_iter()
            .map(|c| c.into_iter().map(|i| cat.names[i].clone()).collect())
            .collect(),
    }
}

/// Blocks from the primitive idempotents of the center: split `Z(A)/rad`
/// by its characters, lift each idempotent to `Z(A)`, and group the simples
/// by which idempotent acts as the identity on them.
pub fn idempotent_blocks(a: &Algebra, cat: &SimpleCatalog) -> Result<BlockPartition, RepError> {
    let f = a.field();
    let z = center(a);
    let names = (0..z.dim()).map(|i| format!("z{i}")).collect();
    let za = a.subalgebra(&z, names)?;
    let rz = radical(&za)?;
    let q = quotient(&za, &rz)?;
    let search = characters_commutative(&q.algebra)?;
    if let Some(e) = search.obstruction {
        return Err(e.into());
    }
    let chars = search.characters;
    let r = chars.len();
    let c = Matrix::from_rows(f, chars.iter().map(|x| x.values.clone()).collect())
        .map_err(|e| RepError::NotAModule(e.to_string()))?;
    let e = c
        .inverse()
        .ok_or_else(|| RepError::NotAModule("characters of the central quotient are dependent".into()))?;
    let mut classes = vec![Vec::new(); r];
    let mut owner: Vec<Option<usize>> = vec![None; cat.len()];
    for i in 0..r {
        let lifted = lift_idempotent(&za, &q.lift(&e.column(i), za.dim()), &rz)?;
        let mut idem = vec![f.zero(); a.dim()];
        for (t, x) in lifted.iter().enumerate() {
            for (v, b) in idem.iter_mut().zip(&z.basis[t]) {
                *v += &(x * b);
            }
        }
        for (s, m) in cat.modules.iter().enumerate() {
            let act = m.act(&idem);
            if act.is_identity() {
                if owner[s].replace(i).is_some() {
                    return Err(RepError::IdempotentMixed(cat.names[s].clone()));
                }
                classes[i].push(s);
            } else if !act.is_zero() {
                return Err(RepError::IdempotentMixed(cat.names[s].clone()));
            }
        }
    }
    if let Some(s) = owner.iter().position(|o| o.is_none()) {
        return Err(RepError::IdempotentMixed(cat.names[s].clone()));
    }
    if classes.iter().any(|c| c.is_empty()) {
        return Err(RepError::NotAModule("a central idempotent kills every simple".into()));
    }
    Ok(classes_to_partition(cat, classes))
}

/// `dim Ext^1(s, t)`: derivations `δ: A -> Hom(s, t)` with
/// `δ(ab) = ρ_t(a)δ(b) + δ(a)ρ_s(b)`, modulo inner ones.
fn ext1_dim(a: &Algebra, s: &RepModule, t: &RepModule) -> usize {
    let f = a.field();
    let n = a.dim();
    let (ds, dt) = (s.dim(), t.dim());
    let block = dt * ds;
    let unknowns = n * block;
    let var = |k: usize, r: usize, c: usize| k * block + r * ds + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (ti, sj) = (&t.action()[i], &s.action()[j]);
            for r in 0..dt {
                for c in 0..ds {
                    let mut row = vec![f.zero(); unknowns];
                    for (k, coef) in a.product_terms(i, j) {
                        row[var(*k, r, c)] += coef;
                    }
                    for u in 0..dt {
                        row[var(j, u, c)] -= ti.get(r, u);
                    }
                    for u in 0..ds {
                        row[var(i, r, u)] -= sj.get(u, c);
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let rank = Matrix::from_rows_with_cols(f, rows, unknowns)
        .expect("well-formed system")
        .rank();
    let derivations = unknowns - rank;
    let inner = block - hom_space(s, t).len();
    derivations - inner
}

/// Blocks as connected components of the graph linking simples with a
/// nonzero `Ext^1` in either direction.
pub fn ext_linkage_blocks(a: &Algebra, cat: &SimpleCatalog) -> Result<BlockPartition, RepError> {
    let r = cat.len();
    let mut parent: Vec<usize> = (0..r).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..r {
        for j in 0..r {
            if i != j && ext1_dim(a, &cat.modules[i], &cat.modules[j]) > 0 {
                let (x, y) = (root(&mut parent, i), root(&mut parent, j));
                parent[x.max(y)] = x.min(y);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; r];
    for i in 0..r {
        let ri = root(&mut parent, i);
        if slot[ri] == usize::MAX {
            slot[ri] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[ri]].push(i);
    }
    Ok(classes_to_partition(cat, classes))
}

/// Block partition by central idempotents, checked against Ext linkage.
pub fn blocks(a: &Algebra, cat: &SimpleCatalog) -> Result<BlockPartition, RepError> {
    let primary = idempotent_blocks(a, cat)?;
    let oracle = ext_linkage_blocks(a, cat)?;
    if primary != oracle {
        return Err(RepError::BlocksDisagree {
            primary: primary.classes,
            oracle: oracle.classes,
        });
    }
    Ok(primary)
}
