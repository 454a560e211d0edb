//! The coefficient field `Q(params)` and univariate polynomials over it.
//!
//! Everything downstream computes over [`Scalar`], a reduced fraction of
//! multivariate integer polynomials in a declared parameter set. [`TPoly`]
//! is a dense univariate polynomial in the distinguished variable `t` with
//! `Scalar` coefficients; it houses the defining data `f`, `g` of the
//! algebras.

mod gcd;
mod mpoly;
mod params;
mod scalar;
mod tpoly;

pub use mpoly::MPoly;
pub use params::{Assignment, Params, ParamsRef};
pub use scalar::Scalar;
pub use tpoly::TPoly;

use thiserror::Error;

/// Errors raised by coefficient-field arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the given assignment")]
    Pole,
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("assignment does not cover parameter `{0}`")]
    MissingAssignment(String),
    #[error("duplicate parameter `{0}`")]
    DuplicateParam(String),
    #[error("invalid parameter name `{0}`")]
    BadParamName(String),
}
