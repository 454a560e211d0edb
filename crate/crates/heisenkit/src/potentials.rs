//! Potentials, cyclic partial derivatives and Jacobian-algebra matching.
//!
//! The cyclic derivative of a word `Φ = u v w` with respect to the letter
//! `v` collects `w u` over every factorization; extending linearly gives
//! `∂_v` on the free algebra. The Jacobian algebra of a potential is the
//! quotient by its three cyclic derivatives. For algebras with `f = p t + k`,
//! `q = p⁻¹` and `deg g ≤ 2` there is an explicit cubic potential (plus a
//! lower-order correction when `k, d, e` are present) whose derivative span
//! equals the relation span; the match is certified by exact span
//! comparison.

use serde::{Deserialize, Serialize};

use crate::engine::AlgebraRef;
use crate::freealg::{span_equal, FreeAlgError, FreeElement, GenSet, Presentation, Word};
use crate::scalars::Scalar;

/// A potential: an element of the free algebra on `t, x, y`, inhomogeneous
/// allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct Potential(pub FreeElement);

/// Cyclic partial derivative with respect to generator index `v`: each
/// occurrence of `v` in each word `u v w` contributes `w u`.
pub fn cyclic_derivative(phi: &FreeElement, v: usize) -> FreeElement {
    let mut out = FreeElement::zero(phi.gens(), phi.params());
    for (w, c) in phi.terms() {
        for (pos, &letter) in w.0.iter().enumerate() {
            if letter as usize != v {
                continue;
            }
            let mut rotated = Vec::with_capacity(w.len() - 1);
            rotated.extend_from_slice(&w.0[pos + 1..]);
            rotated.extend_from_slice(&w.0[..pos]);
            out = out.add_ref(&FreeElement::from_word(
                phi.gens(),
                Word(rotated),
                c.clone(),
            ));
        }
    }
    out
}

/// Cyclic derivative by generator name.
pub fn cyclic_derivative_named(phi: &FreeElement, name: &str) -> Result<FreeElement, FreeAlgError> {
    let v = phi
        .gens()
        .index_of(name)
        .ok_or_else(|| FreeAlgError::UnknownGenerator(name.to_string()))?;
    Ok(cyclic_derivative(phi, v))
}

/// Quotient presentation by the cyclic derivatives with respect to
/// `x, y, t` (zero derivatives are dropped; the zero potential presents the
/// free algebra).
pub fn jacobian_presentation(phi: &FreeElement) -> Result<Presentation, FreeAlgError> {
    let gens = phi.gens().clone();
    let mut relations = Vec::new();
    for name in ["x", "y", "t"] {
        let d = cyclic_derivative_named(phi, name)?;
        if !d.is_zero() {
            relations.push(d);
        }
    }
    Presentation::new(gens, None, relations)
}

/// The homogeneous cubic potential attached to `f = p t`, `g = c t²`,
/// `q = p⁻¹`:
///
/// ```text
/// Φ3 = xyt + p·ytx − p·txy + yxt − xty − p·tyx + (p c / 3)·t³
/// ```
pub fn phi3(p: &Scalar, c: &Scalar) -> FreeElement {
    let gens = GenSet::txy();
    let params = p.params().clone();
    let word = |letters: &[u8], coeff: Scalar| {
        FreeElement::from_word(&gens, Word(letters.to_vec()), coeff)
    };
    let one = Scalar::one(&params);
    let third = Scalar::from_int(&params, 3).inv().unwrap();
    // generator indices: t = 0, x = 1, y = 2
    let mut phi = word(&[1, 2, 0], one.clone());
    phi = phi.add_ref(&word(&[2, 0, 1], p.clone()));
    phi = phi.add_ref(&word(&[0, 1, 2], p.neg_ref()));
    phi = phi.add_ref(&word(&[2, 1, 0], one.clone()));
    phi = phi.add_ref(&word(&[1, 0, 2], one.neg_ref()));
    phi = phi.add_ref(&word(&[0, 2, 1], p.neg_ref()));
    phi.add_ref(&word(&[0, 0, 0], p.mul_ref(c).mul_ref(&third)))
}

/// The lower-order correction subtracted from `Φ3` when `f = p t + k` and
/// `g = c t² + d t + e`:
///
/// ```text
/// Φ' = k·xy − (p d / 2)·t² − p e·t
/// ```
///
/// The `−p` on the `t`-terms matches the `−p` that `∂_t` already puts on
/// the homogeneous part, so the derivative span lands exactly on the
/// relation span.
pub fn phi_correction(p: &Scalar, k: &Scalar, d: &Scalar, e: &Scalar) -> FreeElement {
    let gens = GenSet::txy();
    let params = k.params().clone();
    let half = Scalar::from_int(&params, 2).inv().unwrap();
    let word = |letters: &[u8], coeff: Scalar| {
        FreeElement::from_word(&gens, Word(letters.to_vec()), coeff)
    };
    word(&[1, 2], k.clone())
        .add_ref(&word(&[0, 0], p.mul_ref(d).mul_ref(&half).neg_ref()))
        .add_ref(&word(&[0], p.mul_ref(e).neg_ref()))
}

/// Verdict of the potential match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialVerdict {
    /// homogeneous cubic potential, derivative span equals relation span
    GradedCyWitness,
    /// inhomogeneous potential `Φ3 - Φ'` with `deg Φ' ≤ 2`
    CyWitnessViaPbwDeformation,
    /// hypotheses fail; no witness constructed
    NoWitness,
}

/// Structured outcome of matching an algebra against a Jacobian
/// presentation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PotentialReport {
    pub verdict: PotentialVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub potential: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_t: Option<String>,
    /// derivative span equals relation span (degree-3 slice)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span_match: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub hypothesis_failures: Vec<String>,
    pub caveat: String,
}

const CY_CAVEAT: &str = "witness certifies the derivative-span match only; the Calabi-Yau \
conclusion additionally assumes an algebraically closed ground field of characteristic \
not 2 or 3, which Q(params) only models generically";

/// Builds the explicit potential for algebras with `f = p t + k`,
/// `q = p⁻¹`, `deg g ≤ 2`, and certifies that its cyclic-derivative span
/// equals the relation span.
pub fn match_jacobian(alg: &AlgebraRef) -> Result<PotentialReport, FreeAlgError> {
    let mut failures = Vec::new();
    let f = alg.f();
    let g = alg.g();
    if f.degree() != Some(1) {
        failures.push(format!("deg f = {:?}, need 1", f.degree().map(|d| d as i64)));
    }
    if g.degree().unwrap_or(0) > 2 {
        failures.push(format!("deg g = {:?}, need <= 2", g.degree()));
    }
    let p = f.coeff(1);
    if f.degree() == Some(1) && !alg.q().mul_ref(&p).is_one() {
        failures.push("q is not the inverse of the leading coefficient of f".to_string());
    }
    if !failures.is_empty() {
        return Ok(PotentialReport {
            verdict: PotentialVerdict::NoWitness,
            potential: None,
            derivative_x: None,
            derivative_y: None,
            derivative_t: None,
            span_match: None,
            hypothesis_failures: failures,
            caveat: CY_CAVEAT.to_string(),
        });
    }
    let k = f.coeff(0);
    let c = g.coeff(2);
    let d = g.coeff(1);
    let e = g.coeff(0);
    let homogeneous = k.is_zero() && d.is_zero() && e.is_zero();
    let phi = if homogeneous {
        phi3(&p, &c)
    } else {
        phi3(&p, &c).sub_ref(&phi_correction(&p, &k, &d, &e))
    };
    let dx = cyclic_derivative_named(&phi, "x")?;
    let dy = cyclic_derivative_named(&phi, "y")?;
    let dt = cyclic_derivative_named(&phi, "t")?;
    let derivative_span: Vec<FreeElement> = [dx.clone(), dy.clone(), dt.clone()]
        .into_iter()
        .filter(|e| !e.is_zero())
        .collect();
    let report = span_equal(&derivative_span, &alg.relations(), 3)?;
    Ok(PotentialReport {
        verdict: if homogeneous {
            PotentialVerdict::GradedCyWitness
        } else {
            PotentialVerdict::CyWitnessViaPbwDeformation
        },
        potential: Some(phi.to_string()),
        derivative_x: Some(dx.to_string()),
        derivative_y: Some(dy.to_string()),
        derivative_t: Some(dt.to_string()),
        span_match: Some(report.equal),
        hypothesis_failures: Vec::new(),
        caveat: CY_CAVEAT.to_string(),
    })
}
