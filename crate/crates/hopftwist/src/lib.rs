//! Exact symbolic computation for finite-dimensional Hopf algebras and
//! cocycle-twisted comodule algebras: convolution inverses, the canonical Θ
//! determinant, universal cocycles over rational-function fields, twisted
//! multiplication tables, and decision procedures for comodule-algebra
//! polynomial identities.

pub mod arith;
pub mod cli;
pub mod error;
pub mod hopf;
pub mod identities;
pub mod json;
pub mod linalg;
pub mod presets;
pub mod twist;

pub use error::HopfError;
