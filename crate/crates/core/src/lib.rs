//! Exact computations for finite tensor categories of the form Rep(H).
//!
//! The crate is layered bottom-up: exact fields and polynomials, dense linear
//! algebra, integer lattices, fusion data, associative and Hopf algebras,
//! module theory, and finally the end-to-end verification pipeline.

pub mod algebra;
pub mod error;
pub mod factor;
pub mod field;
pub mod fusion;
pub mod groups;
pub mod hopf;
pub mod io;
pub mod matrix;
pub mod phi;
pub mod poly;
pub mod rep;
pub mod zlattice;

pub use error::SplittingError;
pub use field::{Field, FieldError, FieldSpec, Scalar};
pub use matrix::{mat_kernel, mat_rref, Matrix};
pub use poly::Poly;
