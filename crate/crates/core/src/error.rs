//! Errors shared across modules.

use thiserror::Error;

use crate::field::Field;

/// The chosen field is too small for a computation that needs eigenvalues or
/// roots of unity.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message}{}", hint.as_ref().map(|h| format!(" (hint: {h})")).unwrap_or_default())]
pub struct SplittingError {
    pub message: String,
    /// Irreducible polynomials (or other obstructions) that block splitting.
    pub obstructions: Vec<String>,
    pub hint: Option<String>,
}

impl SplittingError {
    pub fn new(message: impl Into<String>, obstructions: Vec<String>, hint: Option<String>) -> SplittingError {
        SplittingError {
            message: message.into(),
            obstructions,
            hint,
        }
    }
}

/// Suggests a finite extension of `field` in which the multiplicative group
/// has elements of order `n`, or which contains roots of an irreducible
/// polynomial of degree `deg`.
pub fn extension_hint(field: &Field, n: Option<u64>, deg: Option<usize>) -> Option<String> {
    let q = field.order()?;
    let mut k = 1u32;
    while k <= 64 {
        let qk = q.checked_pow(k)?;
        let ok_n = n.is_none_or(|n| (qk - 1) % n as u128 == 0);
        let ok_d = deg.is_none_or(|d| k as usize % d == 0);
        if ok_n && ok_d {
            if k == 1 {
                return None;
            }
            return Some(format!("extend to F_{qk}"));
        }
        k += 1;
    }
    None
}
