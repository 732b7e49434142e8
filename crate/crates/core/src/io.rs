//! JSON encodings of fields, scalars, algebras, Hopf algebras, fusion data
//! and modules.
//!
//! Scalars are written as strings `"a/b"` over `Q`, integers over `F_p`, and
//! arrays of base-field coefficients over an extension. Emitting, parsing and
//! emitting again gives the same text.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::field::{Field, FieldError, FieldSpec, Scalar};
use crate::fusion::{BlockPartition, FusionError, FusionRing};
use crate::hopf::{HopfAlgebra, HopfError};
use crate::matrix::Matrix;
use crate::rep::{RepError, RepModule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

fn schema(msg: impl Into<String>) -> IoError {
    IoError::Schema(msg.into())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, IoError> {
    v.get(key).ok_or_else(|| schema(format!("missing key \"{key}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, IoError> {
    v.as_array().ok_or_else(|| schema(format!("{what} must be an array")))
}

fn index(v: &Value, what: &str) -> Result<usize, IoError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(format!("{what} must be a nonnegative integer")))
}

fn string(v: &Value, what: &str) -> Result<String, IoError> {
    v.as_str()
        .map(str::to_string)
        .ok_or_else(|| schema(format!("{what} must be a string")))
}

pub fn field_spec_to_json(spec: &FieldSpec) -> Value {
    match spec {
        FieldSpec::Rationals => json!({ "kind": "Q" }),
        FieldSpec::PrimeField { p } => json!({ "kind": "Fp", "p": p }),
        FieldSpec::Extension { base, min_poly } => json!({
            "kind": "ext",
            "base": field_spec_to_json(base),
            "min_poly": min_poly.iter().map(int_json).collect::<Vec<_>>(),
        }),
    }
}

/// Integers that fit in `i64` as numbers, larger ones as decimal strings.
fn int_json(c: &BigInt) -> Value {
    c.to_i64().map_or_else(|| Value::String(c.to_string()), Value::from)
}

fn bigint(v: &Value, what: &str) -> Result<BigInt, IoError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| schema(format!("{what}: {n} is not an integer"))),
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| schema(format!("{what}: cannot parse {s:?}"))),
        _ => Err(schema(format!("{what} must be an integer"))),
    }
}

pub fn field_spec_from_json(v: &Value) -> Result<FieldSpec, IoError> {
    if let Some(s) = v.as_str() {
        return Ok(FieldSpec::parse(s)?);
    }
    match get(v, "kind")?.as_str() {
        Some("Q") => Ok(FieldSpec::Rationals),
        Some("Fp") => Ok(FieldSpec::PrimeField {
            p: get(v, "p")?
                .as_u64()
                .ok_or_else(|| schema("\"p\" must be a positive integer"))?,
        }),
        Some("ext") => {
            let base = field_spec_from_json(get(v, "base")?)?;
            let min_poly = array(get(v, "min_poly")?, "min_poly")?
                .iter()
                .map(|c| bigint(c, "min_poly coefficient"))
                .collect::<Result<_, _>>()?;
            Ok(FieldSpec::Extension {
                base: Box::new(base),
                min_poly,
            })
        }
        _ => Err(schema("field kind must be \"Q\", \"Fp\" or \"ext\"")),
    }
}

pub fn scalar_to_json(x: &Scalar) -> Value {
    if let Some(r) = x.as_rational() {
        return Value::String(r.to_string());
    }
    if let Some(v) = x.as_residue() {
        return json!(v);
    }
    Value::Array(x.coeffs().unwrap_or(&[]).iter().map(scalar_to_json).collect())
}

pub fn scalar_from_json(field: &Field, v: &Value) -> Result<Scalar, IoError> {
    let bad = || schema(format!("{v} is not an element of {field}"));
    match field.spec() {
        FieldSpec::Extension { .. } => {
            let base = field.base().expect("extension has a base");
            let coeffs = array(v, "extension scalar")?
                .iter()
                .map(|c| scalar_from_json(base, c))
                .collect::<Result<Vec<_>, _>>()?;
            if coeffs.len() > field.degree() {
                return Err(bad());
            }
            let mut c = coeffs;
            c.resize(field.degree(), base.zero());
            Ok(field.from_coeffs(c))
        }
        _ => match v {
            Value::Number(_) => Ok(field.from_bigint(&bigint(v, "scalar")?)),
            Value::String(s) => {
                let q = BigRational::from_str(s.trim()).map_err(|_| bad())?;
                field.from_rational(&q).ok_or_else(bad)
            }
            _ => Err(bad()),
        },
    }
}

fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

fn vector_from_json(field: &Field, v: &Value, len: usize, what: &str) -> Result<Vec<Scalar>, IoError> {
    let a = array(v, what)?;
    if a.len() != len {
        return Err(schema(format!("{what} has {} entries, expected {len}", a.len())));
    }
    a.iter().map(|x| scalar_from_json(field, x)).collect()
}

fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_to_json(r)).collect())
}

fn matrix_from_json(field: &Field, v: &Value, n: usize, what: &str) -> Result<Matrix, IoError> {
    let rows = array(v, what)?;
    if rows.len() != n {
        return Err(schema(format!("{what} has {} rows, expected {n}", rows.len())));
    }
    let rows = rows
        .iter()
        .map(|r| vector_from_json(field, r, n, what))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows_with_cols(field, rows, n).map_err(|e| schema(e.to_string()))
}

fn algebra_fields(a: &Algebra) -> serde_json::Map<String, Value> {
    let n = a.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let terms = a.product_terms(i, j);
            if !terms.is_empty() {
                let t: Vec<Value> = terms.iter().map(|(k, c)| json!([k, scalar_to_json(c)])).collect();
                mult.push(json!([i, j, t]));
            }
        }
    }
    let mut m = serde_json::Map::new();
    m.insert("field".into(), field_spec_to_json(a.field().spec()));
    m.insert("basis".into(), json!(a.names()));
    m.insert("unit".into(), vector_to_json(a.unit()));
    m.insert("mult".into(), Value::Array(mult));
    m
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    Value::Object(algebra_fields(a))
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra, IoError> {
    let field = Field::from_spec(&field_spec_from_json(get(v, "field")?)?)?;
    let names = array(get(v, "basis")?, "basis")?
        .iter()
        .map(|s| string(s, "basis name"))
        .collect::<Result<Vec<_>, _>>()?;
    let n = names.len();
    let unit = vector_from_json(&field, get(v, "unit")?, n, "unit")?;
    let mut mult = Vec::new();
    for entry in array(get(v, "mult")?, "mult")? {
        let e = array(entry, "mult entry")?;
        if e.len() != 3 {
            return Err(schema("mult entries are [i, j, [[k, coeff], ...]]"));
        }
        let terms = array(&e[2], "mult terms")?
            .iter()
            .map(|t| {
                let t = array(t, "mult term")?;
                if t.len() != 2 {
                    return Err(schema("mult terms are [k, coeff]"));
                }
                Ok((index(&t[0], "k")?, scalar_from_json(&field, &t[1])?))
            })
            .collect::<Result<Vec<_>, IoError>>()?;
        mult.push((index(&e[0], "i")?, index(&e[1], "j")?, terms));
    }
    Ok(Algebra::new(&field, names, mult, unit)?)
}

pub fn hopf_to_json(h: &HopfAlgebra) -> Value {
    let mut m = algebra_fields(&h.alg);
    let comult: Vec<Value> = h
        .comult
        .iter()
        .enumerate()
        .map(|(i, terms)| {
            let t: Vec<Value> = terms.iter().map(|(j, k, c)| json!([j, k, scalar_to_json(c)])).collect();
            json!([i, t])
        })
        .collect();
    m.insert("comult".into(), Value::Array(comult));
    m.insert("counit".into(), vector_to_json(&h.counit));
    m.insert("antipode".into(), matrix_to_json(&h.antipode));
    Value::Object(m)
}

pub fn hopf_from_json(v: &Value) -> Result<HopfAlgebra, IoError> {
    let alg = algebra_from_json(v)?;
    let field = alg.field().clone();
    let n = alg.dim();
    let mut comult = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    for entry in array(get(v, "comult")?, "comult")? {
        let e = array(entry, "comult entry")?;
        if e.len() != 2 {
            return Err(schema("comult entries are [i, [[j, k, coeff], ...]]"));
        }
        let i = index(&e[0], "i")?;
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(schema(format!("comult index {i} out of range or repeated")));
        }
        for t in array(&e[1], "comult terms")? {
            let t = array(t, "comult term")?;
            if t.len() != 3 {
                return Err(schema("comult terms are [j, k, coeff]"));
            }
            comult[i].push((index(&t[0], "j")?, index(&t[1], "k")?, scalar_from_json(&field, &t[2])?));
        }
    }
    let counit = vector_from_json(&field, get(v, "counit")?, n, "counit")?;
    let antipode = matrix_from_json(&field, get(v, "antipode")?, n, "antipode")?;
    Ok(HopfAlgebra::new(alg, comult, counit, antipode)?)
}

pub fn fusion_to_json(f: &FusionRing, blocks: Option<&BlockPartition>) -> Value {
    let l = f.labels();
    let mult: Vec<Value> = f.entries().map(|((i, j, k), n)| json!([l[i], l[j], l[k], n])).collect();
    let mut m = serde_json::Map::new();
    m.insert("labels".into(), json!(l));
    m.insert("unit".into(), json!(l[f.unit()]));
    m.insert("mult".into(), Value::Array(mult));
    if let Some(d) = f.dual() {
        let pairs: Vec<Value> = d
            .iter()
            .enumerate()
            .filter_map(|(i, j)| j.map(|j| json!([l[i], l[j]])))
            .collect();
        m.insert("dual".into(), Value::Array(pairs));
    }
    if let Some(b) = blocks {
        m.insert("blocks".into(), json!(b.classes));
    }
    Value::Object(m)
}

/// A fusion ring and its blocks; singletons when `"blocks"` is absent.
pub fn fusion_from_json(v: &Value) -> Result<(FusionRing, BlockPartition), IoError> {
    let labels = array(get(v, "labels")?, "labels")?
        .iter()
        .map(|s| string(s, "label"))
        .collect::<Result<Vec<_>, _>>()?;
    let unit = string(get(v, "unit")?, "unit")?;
    let mut entries = Vec::new();
    for e in array(get(v, "mult")?, "mult")? {
        let e = array(e, "mult entry")?;
        if e.len() != 4 {
            return Err(schema("fusion mult entries are [i, j, k, N]"));
        }
        let n = e[3]
            .as_u64()
            .ok_or_else(|| schema("multiplicity must be a nonnegative integer"))?;
        entries.push((
            string(&e[0], "label")?,
            string(&e[1], "label")?,
            string(&e[2], "label")?,
            n,
        ));
    }
    let dual = match v.get("dual") {
        None | Some(Value::Null) => None,
        Some(d) => Some(
            array(d, "dual")?
                .iter()
                .map(|p| {
                    let p = array(p, "dual pair")?;
                    if p.len() != 2 {
                        return Err(schema("dual entries are [label, dual label]"));
                    }
                    Ok((string(&p[0], "label")?, string(&p[1], "label")?))
                })
                .collect::<Result<Vec<_>, IoError>>()?,
        ),
    };
    let ring = FusionRing::new(labels, &unit, &entries, dual.as_deref())?;
    let blocks = match v.get("blocks") {
        None | Some(Value::Null) => BlockPartition::singletons(&ring),
        Some(b) => BlockPartition {
            classes: array(b, "blocks")?
                .iter()
                .map(|c| {
                    array(c, "block")?
                        .iter()
                        .map(|s| string(s, "label"))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?,
        },
    };
    blocks.resolve(&ring)?;
    Ok((ring, blocks))
}

pub fn module_to_json(m: &RepModule) -> Value {
    json!({
        "dim": m.dim(),
        "action": m.action().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

pub fn module_from_json(a: &Algebra, v: &Value) -> Result<RepModule, IoError> {
    let d = index(get(v, "dim")?, "dim")?;
    let action = array(get(v, "action")?, "action")?
        .iter()
        .map(|m| matrix_from_json(a.field(), m, d, "action matrix"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RepModule::new(a, action)?)
}

/// Input documents recognized by their top-level keys.
#[derive(Clone, Debug)]
pub enum Document {
    Fusion(FusionRing, BlockPartition),
    Hopf(HopfAlgebra),
    Algebra(Algebra),
}

pub fn parse_document(text: &str) -> Result<Document, IoError> {
    let v: Value = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
    if !v.is_object() {
        return Err(schema("top level must be an object"));
    }
    if v.get("labels").is_some() {
        let (f, b) = fusion_from_json(&v)?;
        Ok(Document::Fusion(f, b))
    } else if v.get("comult").is_some() {
        Ok(Document::Hopf(hopf_from_json(&v)?))
    } else if v.get("mult").is_some() && v.get("basis").is_some() {
        Ok(Document::Algebra(algebra_from_json(&v)?))
    } else {
        Err(schema(
            "unrecognized document: expected fusion (\"labels\"), Hopf (\"comult\") or algebra (\"basis\") keys",
        ))
    }
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
