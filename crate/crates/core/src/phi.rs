//! The map from central grouplikes to scalars on simples, and an end-to-end
//! certificate of its kernel, image, and the surrounding bounds.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::center;
use crate::field::{Field, Scalar};
use crate::fusion::{lambda_group, BlockPartition, FusionError, FusionRing};
use crate::hopf::{
    central_grouplikes, decompose_p_parts, grouplike_independence, grouplikes, pivotal_grouplikes, verify_hopf,
    GrouplikeSet, HopfAlgebra, HopfError,
};
use crate::rep::{fusion_from_hopf, scalar_action, HopfFusion, RepError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PhiError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error("grouplike g{row}: λ(S{i}) λ(S{j}) != λ(S{k}) although N_ij^k > 0")]
    NotMultiplicative { row: usize, i: usize, j: usize, k: usize },
    #[error("grouplike g{row}: λ differs between S{i} and S{j} in one block")]
    NotBlockConstant { row: usize, i: usize, j: usize },
    #[error("grouplike g{row} acts on S{i} by {value}, not a root of unity")]
    NotRootOfUnity { row: usize, i: usize, value: String },
    #[error("grouplike set is incomplete: {0}")]
    Incomplete(String),
}

/// `entries[r][i]` is the scalar by which central grouplike `r` acts on simple `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTable {
    pub elements: Vec<Vec<Scalar>>,
    pub simples: Vec<String>,
    pub entries: Vec<Vec<Scalar>>,
}

impl PhiTable {
    /// Rows equal to the all-ones function.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&r| self.entries[r].iter().all(|x| x.is_one()))
            .collect()
    }

    pub fn image(&self) -> BTreeSet<Vec<Scalar>> {
        self.entries.iter().cloned().collect()
    }
}

/// Builds the table from central grouplikes and the fusion data, checking
/// each row against the fusion rules and the blocks.
pub fn phi_table(central: &GrouplikeSet, hf: &HopfFusion) -> Result<PhiTable, PhiError> {
    let mut entries = Vec::with_capacity(central.len());
    for (r, g) in central.elements.iter().enumerate() {
        let mut row = Vec::with_capacity(hf.simples.len());
        for (i, s) in hf.simples.modules.iter().enumerate() {
            let v = scalar_action(g, s)?;
            if v.multiplicative_order(central.len() as u64).is_none() {
                return Err(PhiError::NotRootOfUnity {
                    row: r,
                    i,
                    value: v.to_string(),
                });
            }
            row.push(v);
        }
        entries.push(row);
    }
    check_rows(&entries, &hf.ring, &hf.blocks)?;
    Ok(PhiTable {
        elements: central.elements.clone(),
        simples: hf.simples.names.clone(),
        entries,
    })
}

fn check_rows(entries: &[Vec<Scalar>], ring: &FusionRing, blocks: &BlockPartition) -> Result<(), PhiError> {
    for (row, vals) in entries.iter().enumerate() {
        for ((i, j, k), _) in ring.entries() {
            if &vals[i] * &vals[j] != vals[k] {
                return Err(PhiError::NotMultiplicative { row, i, j, k });
            }
        }
        for class in blocks.resolve(ring)? {
            for &j in &class[1..] {
                if vals[j] != vals[class[0]] {
                    return Err(PhiError::NotBlockConstant { row, i: class[0], j });
                }
            }
        }
    }
    Ok(())
}

/// Grouplikes, fusion data and the table, from scratch.
pub fn phi_map(h: &HopfAlgebra, seed: u64) -> Result<PhiTable, PhiError> {
    let gs = grouplikes(h)?;
    if let Some(e) = &gs.obstruction {
        return Err(PhiError::Incomplete(e.to_string()));
    }
    let central = central_grouplikes(h, &gs);
    let hf = fusion_from_hopf(h, seed)?;
    phi_table(&central, &hf)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    /// The mathematical statement being checked.
    pub statement: String,
    pub status: Status,
    pub witness: Value,
}

impl CheckEntry {
    fn new(name: &str, statement: &str, ok: bool, witness: Value) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            statement: statement.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    fn skipped(name: &str, statement: &str, cause: &str) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            statement: statement.into(),
            status: Status::Skipped,
            witness: json!({ "blocked_by": cause }),
        }
    }

    fn error(name: &str, statement: &str, err: impl std::fmt::Display) -> CheckEntry {
        CheckEntry::new(name, statement, false, json!({ "error": err.to_string() }))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationCertificate {
    pub instance: String,
    pub seed: u64,
    pub checks: Vec<CheckEntry>,
}

impl VerificationCertificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

pub const HOPF_AXIOMS: &str = "H is a Hopf algebra with antipode S";
pub const GROUPLIKES: &str = "G(H) = characters of H*, complete";
pub const FUSION: &str = "N_ij^k = multiplicity of S_k in S_i ⊗ S_j";
pub const PHI: &str = "phi: G -> prod_i End(S_i)^x, g -> (i -> g|_{S_i})";
pub const KERNEL: &str = "Ker(phi) = G_p";
pub const IMAGE: &str = "Im(phi) = {lambda : lambda(i)lambda(j) = lambda(k) if N_ij^k > 0, constant on blocks}";
pub const BOUND: &str = "|G| <= dim Z(H)";
pub const INDEPENDENCE: &str = "central grouplikes are linearly independent";
pub const PIVOTAL: &str = "Piv is empty or a single coset g0 G; |Piv| finite";
pub const ACCOUNTING: &str = "|G| = |Ker(phi)| |Im(phi)| = |G_p| |lambda-group|";

fn show(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn verify_kernel(table: &PhiTable, central: &GrouplikeSet, char_p: u64) -> CheckEntry {
    let dec = match decompose_p_parts(central, char_p) {
        Ok(d) => d,
        Err(e) => return CheckEntry::error("verify_kernel", KERNEL, e),
    };
    let ker = table.kernel();
    let ok = ker == dec.p_part;
    let mut w = json!({ "kernel": ker, "p_part": dec.p_part });
    if !ok {
        let odd = ker
            .iter()
            .chain(&dec.p_part)
            .find(|g| ker.contains(g) != dec.p_part.contains(g))
            .copied();
        w["element"] = json!(odd.map(|g| show(&central.elements[g])));
    }
    CheckEntry::new("verify_kernel", KERNEL, ok, w)
}

pub fn verify_image(table: &PhiTable, hf: &HopfFusion, central: &GrouplikeSet, field: &Field) -> CheckEntry {
    let lg = match lambda_group(&hf.ring, &hf.blocks, field.characteristic(), Some(field)) {
        Ok(g) => g,
        Err(e) => return CheckEntry::error("verify_image", IMAGE, e),
    };
    let lambdas: BTreeSet<Vec<Scalar>> = lg.functions.iter().filter_map(|l| l.values.clone()).collect();
    let rows = table.image();
    let mut w = json!({ "image_size": rows.len(), "lambda_group_order": lg.order() });
    if let Some(r) = rows.difference(&lambdas).next() {
        w["row_not_in_lambda_group"] = json!(show(r));
        return CheckEntry::new("verify_image", IMAGE, false, w);
    }
    if let Some(l) = lambdas.difference(&rows).next() {
        w["lambda_not_attained"] = json!(show(l));
        return CheckEntry::new("verify_image", IMAGE, false, w);
    }
    // phi is a homomorphism, so G / Ker is isomorphic to the image
    for a in 0..central.len() {
        for b in 0..central.len() {
            let prod: Vec<Scalar> = table.entries[a]
                .iter()
                .zip(&table.entries[b])
                .map(|(x, y)| x * y)
                .collect();
            if prod != table.entries[central.table[a][b]] {
                w["non_homomorphic_pair"] = json!([a, b]);
                return CheckEntry::new("verify_image", IMAGE, false, w);
            }
        }
    }
    w["quotient_order"] = json!(central.len() / table.kernel().len().max(1));
    let ok = central.len() == table.kernel().len() * rows.len();
    CheckEntry::new("verify_image", IMAGE, ok, w)
}

pub fn verify_bound(h: &HopfAlgebra, central: &GrouplikeSet) -> CheckEntry {
    let z = center(&h.alg).dim();
    let ok = central.len() <= z;
    CheckEntry::new(
        "verify_bound",
        BOUND,
        ok,
        json!({ "central_grouplikes": central.len(), "center_dim": z }),
    )
}

pub fn verify_independence(h: &HopfAlgebra, central: &GrouplikeSet) -> CheckEntry {
    let ok = grouplike_independence(h.field(), central);
    CheckEntry::new(
        "verify_independence",
        INDEPENDENCE,
        ok,
        json!({ "count": central.len(), "independent": ok }),
    )
}

pub fn verify_pivotal(h: &HopfAlgebra, gs: &GrouplikeSet) -> CheckEntry {
    let central = central_grouplikes(h, gs);
    match pivotal_grouplikes(h, gs) {
        Ok(piv) => CheckEntry::new(
            "verify_pivotal",
            PIVOTAL,
            true,
            json!({
                "pivotal": piv.len(),
                "central_grouplikes": central.len(),
                "representative": piv.first().map(|&g| show(&gs.elements[g])),
            }),
        ),
        Err(e) => CheckEntry::error("verify_pivotal", PIVOTAL, e),
    }
}

/// Runs every check in dependency order; a failed step marks the checks that
/// depend on it as skipped.
pub fn run_all(h: &HopfAlgebra, instance: &str, seed: u64) -> VerificationCertificate {
    let mut checks = Vec::new();
    let done = |checks: Vec<CheckEntry>| VerificationCertificate {
        instance: instance.into(),
        seed,
        checks,
    };
    let all_after_hopf: [(&str, &str); 9] = [
        ("grouplikes", GROUPLIKES),
        ("fusion_from_hopf", FUSION),
        ("phi_map", PHI),
        ("verify_kernel", KERNEL),
        ("verify_image", IMAGE),
        ("verify_bound", BOUND),
        ("verify_independence", INDEPENDENCE),
        ("verify_pivotal", PIVOTAL),
        ("order_accounting", ACCOUNTING),
    ];
    let report = verify_hopf(h);
    let hopf_ok = report.is_valid();
    checks.push(CheckEntry::new(
        "verify_hopf",
        HOPF_AXIOMS,
        hopf_ok,
        json!({ "dim": h.dim(), "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>() }),
    ));
    if !hopf_ok {
        checks.extend(
            all_after_hopf
                .iter()
                .map(|(n, s)| CheckEntry::skipped(n, s, "verify_hopf")),
        );
        return done(checks);
    }
    let char_p = h.field().characteristic();

    let gs = match grouplikes(h) {
        Ok(gs) if gs.is_complete() => {
            checks.push(CheckEntry::new(
                "grouplikes",
                GROUPLIKES,
                true,
                json!({ "count": gs.len(), "elements": gs.elements.iter().map(|g| show(g)).collect::<Vec<_>>() }),
            ));
            Some(gs)
        }
        Ok(gs) => {
            let e = gs.obstruction.as_ref().unwrap();
            checks.push(CheckEntry::new(
                "grouplikes",
                GROUPLIKES,
                false,
                json!({ "partial_count": gs.len(), "obstruction": e.obstructions, "hint": e.hint }),
            ));
            None
        }
        Err(e) => {
            checks.push(CheckEntry::error("grouplikes", GROUPLIKES, e));
            None
        }
    };
    let central = gs.as_ref().map(|g| central_grouplikes(h, g));

    let hf = match fusion_from_hopf(h, seed) {
        Ok(hf) => {
            checks.push(CheckEntry::new(
                "fusion_from_hopf",
                FUSION,
                true,
                json!({
                    "simples": hf.simples.names,
                    "dims": hf.simples.dims(),
                    "blocks": hf.blocks.classes,
                }),
            ));
            Some(hf)
        }
        Err(e) => {
            checks.push(CheckEntry::error("fusion_from_hopf", FUSION, e));
            None
        }
    };

    let table = match (&central, &hf) {
        (Some(c), Some(hf)) => match phi_table(c, hf) {
            Ok(t) => {
                checks.push(CheckEntry::new(
                    "phi_map",
                    PHI,
                    true,
                    json!({ "rows": t.entries.iter().map(|r| show(r)).collect::<Vec<_>>() }),
                ));
                Some(t)
            }
            Err(e) => {
                checks.push(CheckEntry::error("phi_map", PHI, e));
                None
            }
        },
        _ => {
            let cause = if central.is_none() {
                "grouplikes"
            } else {
                "fusion_from_hopf"
            };
            checks.push(CheckEntry::skipped("phi_map", PHI, cause));
            None
        }
    };

    match (&table, &central, &hf) {
        (Some(t), Some(c), Some(hf)) => {
            checks.push(verify_kernel(t, c, char_p));
            checks.push(verify_image(t, hf, c, h.field()));
        }
        _ => {
            checks.push(CheckEntry::skipped("verify_kernel", KERNEL, "phi_map"));
            checks.push(CheckEntry::skipped("verify_image", IMAGE, "phi_map"));
        }
    }
    match (&gs, &central) {
        (Some(gs), Some(c)) => {
            checks.push(verify_bound(h, c));
            checks.push(verify_independence(h, c));
            checks.push(verify_pivotal(h, gs));
        }
        _ => {
            for (n, s) in [
                ("verify_bound", BOUND),
                ("verify_independence", INDEPENDENCE),
                ("verify_pivotal", PIVOTAL),
            ] {
                checks.push(CheckEntry::skipped(n, s, "grouplikes"));
            }
        }
    }

    let kernel_ok = checks
        .iter()
        .any(|c| c.name == "verify_kernel" && c.status == Status::Pass);
    let image_ok = checks
        .iter()
        .any(|c| c.name == "verify_image" && c.status == Status::Pass);
    match (&table, &central) {
        (Some(t), Some(c)) if kernel_ok && image_ok => {
            let ker = t.kernel().len();
            let im = t.image().len();
            let p = decompose_p_parts(c, char_p).map(|d| d.p_part.len()).unwrap_or(0);
            let ok = c.len() == ker * im && c.len() == p * im;
            checks.push(CheckEntry::new(
                "order_accounting",
                ACCOUNTING,
                ok,
                json!({ "order": c.len(), "kernel": ker, "image": im, "p_part": p }),
            ));
        }
        _ => {
            let cause = if kernel_ok { "verify_image" } else { "verify_kernel" };
            checks.push(CheckEntry::skipped("order_accounting", ACCOUNTING, cause));
        }
    }
    done(checks)
}
