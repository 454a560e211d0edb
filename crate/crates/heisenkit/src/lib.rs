//! Exact symbolic computation for Heisenberg-type algebras.
//!
//! The central object is the three-generator algebra `H_q(f, g)` over the
//! rational function field `Q(params)`, presented by
//!
//! ```text
//! t x = x f(t),    y t = f(t) y,    y x - q x y = g(t)
//! ```
//!
//! with `q` a scalar and `f, g` univariate polynomials in `t`. Elements are
//! kept in the canonical basis `{ x^i t^j y^k }`; products are computed by
//! exact commutation pushes, never by floating point or truncation.
//!
//! On top of the rewriting engine sit structural verifiers: skew PBW
//! extension certificates, grading and Hilbert-function enumeration, a
//! numerical Koszulity consistency check, cyclic-derivative potentials with
//! Jacobian matching, and homomorphism/isomorphism certification for the
//! named algebra families (Heisenberg, quantum and two-parameter variants,
//! generalized Heisenberg algebras, generalized down-up algebras).

pub mod engine;
pub mod exec;
pub mod families;
pub mod fixtures;
pub mod freealg;
pub mod homology;
pub mod linalg;
pub mod morphisms;
pub mod parse;
pub mod potentials;
pub mod scalars;
pub mod skewpbw;
pub mod specialize;

// re-exports restored as modules land

pub use scalars::{Assignment, MPoly, Params, ParamsRef, Scalar, ScalarError, TPoly};
