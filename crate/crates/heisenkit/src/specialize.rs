//! Random rational specialization of parameters.
//!
//! Expensive symbolic identities can instead be checked at `k` random
//! rational points that avoid the poles and degeneracies of the expressions
//! involved: each trial is still exact arithmetic over `Q`. The stream of
//! assignments is a pure function of the seed.

use num::{BigInt, BigRational, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engine::{AlgebraRef, Qgha};
use crate::scalars::{Assignment, Params, ParamsRef, Scalar, ScalarError};

/// Trial configuration for specialization mode.
#[derive(Debug, Clone, Copy)]
pub struct SpecOptions {
    pub seed: u64,
    pub trials: usize,
}

impl Default for SpecOptions {
    fn default() -> Self {
        SpecOptions { seed: 0, trials: 5 }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random rational, numerator in `-9..=9` and denominator in `1..=4`.
pub fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num = rng.random_range(-9i64..=9);
    let den = rng.random_range(1i64..=4);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Draws an assignment under which every scalar in `nonzero` evaluates,
/// without hitting a pole, to a nonzero value. Panics after 10000 failed
/// draws, which for the generically-nonzero constraints used here means the
/// constraint list itself is degenerate.
pub fn random_assignment(
    params: &ParamsRef,
    rng: &mut ChaCha8Rng,
    nonzero: &[Scalar],
) -> Assignment {
    for _ in 0..10_000 {
        let values: Vec<BigRational> = (0..params.len()).map(|_| random_rational(rng)).collect();
        let a = Assignment::new(params.clone(), values);
        let ok = nonzero.iter().all(|s| {
            s.specialize(&a)
                .map(|v| !Zero::is_zero(&v))
                .unwrap_or(false)
        });
        if ok {
            return a;
        }
    }
    panic!("could not satisfy nonvanishing constraints; constraints are degenerate");
}

/// Specializes the defining data of an algebra, yielding an algebra over
/// the empty parameter set.
pub fn specialize_qgha(alg: &AlgebraRef, a: &Assignment) -> Result<AlgebraRef, ScalarError> {
    let empty = Params::empty();
    let q = Scalar::from_rational(&empty, &alg.q().specialize(a)?);
    let f = alg.f().specialize(a, &empty)?;
    let g = alg.g().specialize(a, &empty)?;
    Ok(Qgha::new(q, f, g))
}

/// The scalars that must stay defined when specializing an algebra: the
/// deformation parameter and every coefficient of `f` and `g` (each is a
/// reduced fraction, so requiring `den ≠ 0` is what "defined" means; the
/// caller adds genuine nonvanishing constraints such as `q ≠ 0` on top).
pub fn definedness_constraints(alg: &AlgebraRef) -> Vec<Scalar> {
    let mut out = Vec::new();
    let den_of = |s: &Scalar| Scalar::from_mpoly(s.denominator().clone());
    out.push(den_of(alg.q()));
    for i in 0..=alg.f().degree().unwrap_or(0) {
        out.push(den_of(&alg.f().coeff(i)));
    }
    for i in 0..=alg.g().degree().unwrap_or(0) {
        out.push(den_of(&alg.g().coeff(i)));
    }
    out
}

/// Definedness plus genericity: every symbolically-nonzero coefficient of
/// the defining data must also specialize to a nonzero value, keeping the
/// trial point off the degenerate loci.
pub fn genericity_constraints(alg: &AlgebraRef) -> Vec<Scalar> {
    let mut out = definedness_constraints(alg);
    let mut push_nonzero = |s: &Scalar| {
        if !s.is_zero() {
            out.push(s.clone());
        }
    };
    push_nonzero(alg.q());
    for i in 0..=alg.f().degree().unwrap_or(0) {
        push_nonzero(&alg.f().coeff(i));
    }
    for i in 0..=alg.g().degree().unwrap_or(0) {
        push_nonzero(&alg.g().coeff(i));
    }
    out
}
