//! Constructors for the named algebra families, conversions between them,
//! and decidable classification predicates.
//!
//! Every family normalizes to a triple `(q, f, g)`:
//!
//! * `heisenberg`                      → `H_1(t, t)`
//! * `quantum_heisenberg(q)`           → `H_q(q⁻¹t, t)`
//! * `gaddis(p, q)`                    → `H_q(p⁻¹t, t)`
//! * `hayashi(p, q)`                   → `H_q(p⁻¹t, t²)`
//! * `gha(f)`                          → `H_1(f, f − t)`
//! * `downup(g, p1, p2, p3)`           → `H_{p2}(p1·t − p3, −g)`
//!
//! For the two-parameter families the deformation slot is read off by
//! matching the defining relations (`y x − q x y = …` puts the Gaddis `q`
//! there). A circulating alternative convention fills the slot with `p`
//! instead; conversions carry a note flagging the difference rather than
//! silently picking one.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{AlgebraRef, Qgha};
use crate::freealg::{FreeAlgError, GenSet, Presentation};
use crate::morphisms::{verify_inverse_pair, GenMap, MorphismError};
use crate::parse::{self, ParseError};
use crate::scalars::{Params, ParamsRef, Scalar, ScalarError, TPoly};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamiliesError {
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// A named algebra family with its defining data.
#[derive(Debug, Clone)]
pub enum FamilySpec {
    Heisenberg,
    QuantumHeisenberg { q: Scalar },
    Gaddis { p: Scalar, q: Scalar },
    Hayashi { p: Scalar, q: Scalar },
    Gha { f: TPoly },
    Qgha { q: Scalar, f: TPoly, g: TPoly },
    DownUp { g: TPoly, p1: Scalar, p2: Scalar, p3: Scalar },
}

/// Wire format for family specs.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilySpecJson {
    Heisenberg,
    QuantumHeisenberg {
        q: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<Vec<String>>,
    },
    Gaddis {
        p: String,
        q: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<Vec<String>>,
    },
    Hayashi {
        p: String,
        q: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<Vec<String>>,
    },
    Gha {
        f: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<Vec<String>>,
    },
    Qgha {
        q: String,
        f: String,
        g: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<Vec<String>>,
    },
    #[serde(rename = "downup")]
    DownUp {
        g: String,
        p1: String,
        p2: String,
        p3: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<Vec<String>>,
    },
}

/// Collects identifier tokens from expression sources, minus the variable
/// `t`; used to infer a parameter set when none is declared.
fn infer_params(sources: &[&str]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for src in sources {
        let mut chars = src.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_ascii_alphabetic() || c == '_' {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if ident != "t" && !names.contains(&ident) {
                    names.push(ident);
                }
            } else {
                chars.next();
            }
        }
    }
    names.sort();
    names
}

impl FamilySpecJson {
    fn params_of(&self, sources: &[&str], declared: &Option<Vec<String>>) -> Result<ParamsRef, FamiliesError> {
        match declared {
            Some(names) => Ok(Params::new(names.iter().cloned())?),
            None => Ok(Params::new(infer_params(sources))?),
        }
    }

    pub fn to_spec(&self) -> Result<FamilySpec, FamiliesError> {
        match self {
            FamilySpecJson::Heisenberg => Ok(FamilySpec::Heisenberg),
            FamilySpecJson::QuantumHeisenberg { q, params } => {
                let ps = self.params_of(&[q], params)?;
                Ok(FamilySpec::QuantumHeisenberg {
                    q: parse::parse_scalar(q, &ps)?,
                })
            }
            FamilySpecJson::Gaddis { p, q, params } => {
                let ps = self.params_of(&[p, q], params)?;
                Ok(FamilySpec::Gaddis {
                    p: parse::parse_scalar(p, &ps)?,
                    q: parse::parse_scalar(q, &ps)?,
                })
            }
            FamilySpecJson::Hayashi { p, q, params } => {
                let ps = self.params_of(&[p, q], params)?;
                Ok(FamilySpec::Hayashi {
                    p: parse::parse_scalar(p, &ps)?,
                    q: parse::parse_scalar(q, &ps)?,
                })
            }
            FamilySpecJson::Gha { f, params } => {
                let ps = self.params_of(&[f], params)?;
                Ok(FamilySpec::Gha {
                    f: parse::parse_tpoly(f, &ps)?,
                })
            }
            FamilySpecJson::Qgha { q, f, g, params } => {
                let ps = self.params_of(&[q, f, g], params)?;
                Ok(FamilySpec::Qgha {
                    q: parse::parse_scalar(q, &ps)?,
                    f: parse::parse_tpoly(f, &ps)?,
                    g: parse::parse_tpoly(g, &ps)?,
                })
            }
            FamilySpecJson::DownUp { g, p1, p2, p3, params } => {
                let ps = self.params_of(&[g, p1, p2, p3], params)?;
                Ok(FamilySpec::DownUp {
                    g: parse::parse_tpoly(g, &ps)?,
                    p1: parse::parse_scalar(p1, &ps)?,
                    p2: parse::parse_scalar(p2, &ps)?,
                    p3: parse::parse_scalar(p3, &ps)?,
                })
            }
        }
    }
}

impl FamilySpec {
    /// Canonical `(q, f, g)` triple of the family.
    pub fn to_qgha(&self) -> Result<AlgebraRef, FamiliesError> {
        match self {
            FamilySpec::Heisenberg => {
                let ps = Params::empty();
                let t = TPoly::var(&ps);
                Ok(Qgha::new(Scalar::one(&ps), t.clone(), t))
            }
            FamilySpec::QuantumHeisenberg { q } => {
                if q.is_zero() {
                    return Err(FamiliesError::ZeroParameter("q".into()));
                }
                let ps = q.params().clone();
                let t = TPoly::var(&ps);
                let f = t.scale(&q.inv().unwrap());
                Ok(Qgha::new(q.clone(), f, t))
            }
            FamilySpec::Gaddis { p, q } => {
                if p.is_zero() {
                    return Err(FamiliesError::ZeroParameter("p".into()));
                }
                if q.is_zero() {
                    return Err(FamiliesError::ZeroParameter("q".into()));
                }
                let ps = p.params().clone();
                let t = TPoly::var(&ps);
                let f = t.scale(&p.inv().unwrap());
                Ok(Qgha::new(q.clone(), f, t))
            }
            FamilySpec::Hayashi { p, q } => {
                if p.is_zero() {
                    return Err(FamiliesError::ZeroParameter("p".into()));
                }
                if q.is_zero() {
                    return Err(FamiliesError::ZeroParameter("q".into()));
                }
                let ps = p.params().clone();
                let t = TPoly::var(&ps);
                let f = t.scale(&p.inv().unwrap());
                Ok(Qgha::new(q.clone(), f, t.pow(2)))
            }
            FamilySpec::Gha { f } => {
                let ps = f.params().clone();
                let g = f.sub_ref(&TPoly::var(&ps));
                Ok(Qgha::new(Scalar::one(&ps), f.clone(), g))
            }
            FamilySpec::Qgha { q, f, g } => Ok(Qgha::new(q.clone(), f.clone(), g.clone())),
            FamilySpec::DownUp { g, p1, p2, p3 } => {
                let ps = g.params().clone();
                let t = TPoly::var(&ps);
                let f = t.scale(p1).sub_ref(&TPoly::constant(p3.clone()));
                Ok(Qgha::new(p2.clone(), f, g.neg_ref()))
            }
        }
    }

    /// Conversion caveats worth surfacing in reports.
    pub fn conversion_notes(&self) -> Vec<String> {
        match self {
            FamilySpec::Gaddis { .. } | FamilySpec::Hayashi { .. } => vec![
                "deformation slot taken from the y*x - q*x*y relation (the family's q); \
                 an alternative convention uses p for this slot and is intentionally not followed"
                    .to_string(),
            ],
            _ => Vec::new(),
        }
    }
}

/// Inverse correspondence with generalized down-up data: defined when `f`
/// is affine, returning `(g', p1, p2, p3)` with the algebra equal to the
/// down-up algebra on that data.
pub fn downup_of(alg: &AlgebraRef) -> Option<(TPoly, Scalar, Scalar, Scalar)> {
    if alg.f().degree().unwrap_or(0) > 1 {
        return None;
    }
    let a = alg.f().coeff(1);
    let b = alg.f().coeff(0);
    Some((
        alg.g().neg_ref(),
        a,
        alg.q().clone(),
        b.neg_ref(),
    ))
}

fn unify_alpha(alg: &AlgebraRef, alpha: &Scalar) -> Result<(AlgebraRef, Scalar), ScalarError> {
    if alg.params().names() == alpha.params().names() {
        return Ok((alg.clone(), alpha.clone()));
    }
    if let Ok(lifted) = alpha.lift(alg.params()) {
        return Ok((alg.clone(), lifted));
    }
    // lift the algebra data into the alpha parameter set instead
    let ps = alpha.params();
    let q = alg.q().lift(ps)?;
    let f = alg.f().lift(ps)?;
    let g = alg.g().lift(ps)?;
    Ok((Qgha::new(q, f, g), alpha.clone()))
}

/// The translated triple `H_q(f(t-α)+α, g(t-α))`; composing translations
/// adds the offsets. Pair with [`crate::morphisms::translation_hom`] for a
/// certified isomorphism.
pub fn translate_iso(alg: &AlgebraRef, alpha: &Scalar) -> Result<AlgebraRef, ScalarError> {
    let (alg, alpha) = unify_alpha(alg, alpha)?;
    let f = alg
        .f()
        .shift(&alpha)
        .add_ref(&TPoly::constant(alpha.clone()));
    let g = alg.g().shift(&alpha);
    Ok(Qgha::new(alg.q().clone(), f, g))
}

/// Structural flags decided symbolically from the `(q, f, g)` triple.
/// "Nonzero" for a parameter expression means its canonical numerator is
/// not the zero polynomial; `assumptions` lists every such genericity
/// hypothesis used.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub q: String,
    pub f: String,
    pub g: String,
    pub deg_f: Option<usize>,
    pub deg_g: Option<usize>,
    pub q_nonzero: bool,
    /// bijective skew PBW extension of K[t] in x, y
    pub skew_pbw_over_kt: bool,
    /// skew PBW extension of K in x, t, y
    pub skew_pbw_over_k: bool,
    /// for algebras of shape `q = 1, g = f - t` only: noetherian iff deg f = 1
    pub noetherian_gha: Option<bool>,
    /// admissible weight triples (w_x, w_y, w_t) up to weight 4
    pub graded_with_weights: Vec<(u32, u32, u32)>,
    /// `f` affine, `q` inverse to the leading coefficient, `deg g ≤ 2`
    pub cy_dimension3_family: bool,
    /// `g = 0` and `f = p t`
    pub quantum_polynomial: bool,
    pub assumptions: Vec<String>,
    /// uniqueness of the canonical form is treated as a spanning statement
    /// at q = 0; independence there is flagged, not certified
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_zero_note: Option<String>,
}

pub fn classify(alg: &AlgebraRef) -> ClassificationReport {
    let q = alg.q();
    let f = alg.f();
    let g = alg.g();
    let deg_f = f.degree();
    let deg_g = g.degree();
    let q_nonzero = !q.is_zero();
    let f_affine = deg_f == Some(1);
    let lead_f = f.coeff(1);

    let mut assumptions = Vec::new();
    if q_nonzero && !q.as_rational().is_some() {
        assumptions.push(format!("{q} != 0"));
    }
    if f_affine && lead_f.as_rational().is_none() {
        assumptions.push(format!("{lead_f} != 0"));
    }

    let skew_pbw_over_kt = f_affine && q_nonzero;
    let skew_pbw_over_k = skew_pbw_over_kt && deg_g.unwrap_or(0) <= 1;

    let gha_shaped = q.is_one() && g == &f.sub_ref(&TPoly::var(alg.params()));
    let noetherian_gha = if gha_shaped { Some(f_affine) } else { None };

    let cy_dimension3_family = f_affine
        && deg_g.unwrap_or(0) <= 2
        && q.mul_ref(&lead_f).is_one();

    let quantum_polynomial =
        g.is_zero() && f_affine && f.coeff(0).is_zero() && q_nonzero;

    let q_zero_note = if q.is_zero() {
        Some(
            "q = 0: canonical forms span the algebra but their linear independence \
             is not certified here"
                .to_string(),
        )
    } else {
        None
    };

    ClassificationReport {
        q: q.to_string(),
        f: f.to_string(),
        g: g.to_string(),
        deg_f,
        deg_g,
        q_nonzero,
        skew_pbw_over_kt,
        skew_pbw_over_k,
        noetherian_gha,
        graded_with_weights: crate::homology::find_gradings(alg, 4),
        cy_dimension3_family,
        quantum_polynomial,
        assumptions,
        q_zero_note,
    }
}

/// The parameter tuples giving an isomorphic two-parameter algebra:
/// `(p,q), (q,p), (p⁻¹,q⁻¹), (q⁻¹,p⁻¹)`, deduplicated.
pub fn gaddis_iso_orbit(p: &Scalar, q: &Scalar) -> Result<Vec<(Scalar, Scalar)>, FamiliesError> {
    if p.is_zero() {
        return Err(FamiliesError::ZeroParameter("p".into()));
    }
    if q.is_zero() {
        return Err(FamiliesError::ZeroParameter("q".into()));
    }
    let pi = p.inv().unwrap();
    let qi = q.inv().unwrap();
    let candidates = [
        (p.clone(), q.clone()),
        (q.clone(), p.clone()),
        (pi.clone(), qi.clone()),
        (qi, pi),
    ];
    let mut out: Vec<(Scalar, Scalar)> = Vec::new();
    for c in candidates {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Obstruction classes used when no generalized Heisenberg presentation
/// exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    /// `t` is central on one side but on no possible target
    CentralityOfT,
    /// the one-dimensional representation varieties have different shapes
    RepVarietyShape,
}

/// Outcome of the "is this two-parameter algebra a generalized Heisenberg
/// algebra" question.
#[derive(Debug)]
pub enum GhaIsoOutcome {
    Isomorphic {
        /// the affine polynomial with target `H(f)`
        target_f: TPoly,
        map: GenMap,
        inverse: GenMap,
        excluded: Vec<String>,
        route_note: Option<String>,
    },
    NotIsomorphic {
        obstruction: Obstruction,
        explanation: String,
        /// normalized one-dimensional-representation constraints of the
        /// two-parameter algebra
        source_constraints: Vec<String>,
        /// the same constraints for an affine target `H(λt)`, λ ≠ 1
        target_constraints: Vec<String>,
    },
}

fn gaddis_algebra(p: &Scalar, q: &Scalar) -> Result<AlgebraRef, FamiliesError> {
    FamilySpec::Gaddis {
        p: p.clone(),
        q: q.clone(),
    }
    .to_qgha()
}

fn gha_algebra(f: &TPoly) -> AlgebraRef {
    let g = f.sub_ref(&TPoly::var(f.params()));
    Qgha::new(Scalar::one(f.params()), f.clone(), g)
}

fn rep_constraint_strings(alg: &AlgebraRef) -> Result<Vec<String>, FamiliesError> {
    let pres = Presentation::new(alg.gens(), None, alg.relations())?;
    let rc = crate::engine::one_dim_rep_constraints(&pres)
        .map_err(MorphismError::Engine)?;
    Ok(rc.constraints.iter().map(|c| c.to_string()).collect())
}

/// Decides, by the explicit constructions and obstructions, whether the
/// two-parameter algebra with data `(p, q)` admits a generalized Heisenberg
/// presentation; requires `p, q ≠ 0`.
pub fn gha_iso_to_gaddis(p: &Scalar, q: &Scalar) -> Result<GhaIsoOutcome, FamiliesError> {
    if p.is_zero() {
        return Err(FamiliesError::ZeroParameter("p".into()));
    }
    if q.is_zero() {
        return Err(FamiliesError::ZeroParameter("q".into()));
    }
    let ps = p.params().clone();
    let gens = GenSet::txy();
    let one = Scalar::one(&ps);
    let p_is_one = p.is_one();
    let q_is_one = q.is_one();

    if p_is_one && q_is_one {
        // enveloping algebra of the Heisenberg Lie algebra: t is central,
        // but in every affine candidate H(λt), λ ≠ 1, it is not, and the
        // λ = 1 candidates admit commutative quotients of the wrong shape
        let src = gaddis_algebra(p, q)?;
        let lam_ps = ps.extend(["lam"]).unwrap_or_else(|_| ps.extend(["lam_"]).unwrap());
        let lam = Scalar::param(&lam_ps, lam_ps.names().last().unwrap()).unwrap();
        let target = gha_algebra(&TPoly::var(&lam_ps).scale(&lam));
        return Ok(GhaIsoOutcome::NotIsomorphic {
            obstruction: Obstruction::CentralityOfT,
            explanation: "with p = q = 1 the element t is central and equals the \
                          commutator [y, x]; no generalized Heisenberg algebra has \
                          a central commutator generating the commutator ideal"
                .to_string(),
            source_constraints: rep_constraint_strings(&src)?,
            target_constraints: rep_constraint_strings(&target)?,
        });
    }

    if p_is_one ^ q_is_one {
        if p_is_one {
            // source H_q(t, t); target H(q t); X ↦ x/(q-1), Y ↦ y, T ↦ t - x y
            let src = gaddis_algebra(p, q)?;
            let target_f = TPoly::var(&ps).scale(q);
            let tgt = gha_algebra(&target_f);
            let qm1 = q.sub_ref(&one);
            let x_img = crate::freealg::FreeElement::generator(&gens, &ps, 1)
                .scale(&qm1.inv().map_err(|_| FamiliesError::ZeroParameter("q - 1".into()))?);
            let t_img = {
                let t = crate::freealg::FreeElement::generator(&gens, &ps, 0);
                let x = crate::freealg::FreeElement::generator(&gens, &ps, 1);
                let y = crate::freealg::FreeElement::generator(&gens, &ps, 2);
                &t - &(&x * &y)
            };
            let y_img = crate::freealg::FreeElement::generator(&gens, &ps, 2);
            let map = GenMap::new(src.clone(), tgt.clone(), t_img, x_img, y_img)?;
            let inv = {
                let t = crate::freealg::FreeElement::generator(&gens, &ps, 0);
                let x = crate::freealg::FreeElement::generator(&gens, &ps, 1);
                let y = crate::freealg::FreeElement::generator(&gens, &ps, 2);
                GenMap::new(
                    tgt,
                    src,
                    &t + &(&x * &y).scale(&qm1),
                    x.scale(&qm1),
                    y,
                )?
            };
            return certify(map, inv, target_f, vec![format!("{qm1} != 0")], None);
        }
        // q = 1: source H_1(p^{-1} t, t); target H(p t) via x ↔ y, t ↦ (1-p) t
        let src = gaddis_algebra(p, q)?;
        let target_f = TPoly::var(&ps).scale(p);
        let tgt = gha_algebra(&target_f);
        let one_minus_p = one.sub_ref(p);
        let t = crate::freealg::FreeElement::generator(&gens, &ps, 0);
        let x = crate::freealg::FreeElement::generator(&gens, &ps, 1);
        let y = crate::freealg::FreeElement::generator(&gens, &ps, 2);
        let map = GenMap::new(
            src.clone(),
            tgt.clone(),
            t.scale(&one_minus_p),
            y.clone(),
            x.clone(),
        )?;
        let inv = GenMap::new(
            tgt,
            src,
            t.scale(
                &one_minus_p
                    .inv()
                    .map_err(|_| FamiliesError::ZeroParameter("1 - p".into()))?,
            ),
            y,
            x,
        )?;
        return certify(
            map,
            inv,
            target_f,
            vec![format!("{one_minus_p} != 0")],
            Some("route swaps the roles of x and y, then rescales t".to_string()),
        );
    }

    // neither parameter is 1: representation varieties differ in shape
    let src = gaddis_algebra(p, q)?;
    let lam_ps = ps.extend(["lam"]).unwrap_or_else(|_| ps.extend(["lam_"]).unwrap());
    let lam = Scalar::param(&lam_ps, lam_ps.names().last().unwrap()).unwrap();
    let target = gha_algebra(&TPoly::var(&lam_ps).scale(&lam));
    Ok(GhaIsoOutcome::NotIsomorphic {
        obstruction: Obstruction::RepVarietyShape,
        explanation: "for p, q both different from 1 the one-dimensional \
                      representations form two crossing lines, while every affine \
                      candidate H(λt), λ ≠ 1, has a full plane of them"
            .to_string(),
        source_constraints: rep_constraint_strings(&src)?,
        target_constraints: rep_constraint_strings(&target)?,
    })
}

fn certify(
    map: GenMap,
    inverse: GenMap,
    target_f: TPoly,
    excluded: Vec<String>,
    route_note: Option<String>,
) -> Result<GhaIsoOutcome, FamiliesError> {
    let fwd = map.verify_hom()?;
    let bwd = inverse.verify_hom()?;
    debug_assert!(fwd.is_valid(), "constructed map is not a homomorphism");
    debug_assert!(bwd.is_valid(), "constructed inverse is not a homomorphism");
    if !fwd.is_valid() || !bwd.is_valid() || !verify_inverse_pair(&map, &inverse)? {
        return Err(FamiliesError::Morphism(MorphismError::BadImage));
    }
    Ok(GhaIsoOutcome::Isomorphic {
        target_f,
        map,
        inverse,
        excluded,
        route_note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::normal_form;

    fn scalar(src: &str, ps: &ParamsRef) -> Scalar {
        parse::parse_scalar(src, ps).unwrap()
    }

    #[test]
    fn family_triples() {
        // heisenberg -> H_1(t, t)
        let h = FamilySpec::Heisenberg.to_qgha().unwrap();
        assert!(h.q().is_one());
        assert_eq!(h.f(), &TPoly::var(h.params()));
        assert_eq!(h.g(), &TPoly::var(h.params()));

        // gaddis(p, q): deformation slot q, f = t/p, g = t
        let ps = Params::new(["p", "q"]).unwrap();
        let g = FamilySpec::Gaddis {
            p: scalar("p", &ps),
            q: scalar("q", &ps),
        }
        .to_qgha()
        .unwrap();
        assert_eq!(g.q(), &scalar("q", &ps));
        assert_eq!(g.f(), &parse::parse_tpoly("t/p", &ps).unwrap());
        assert_eq!(g.g(), &TPoly::var(&ps));

        // downup(g, p1, p2, p3) -> H_{p2}(p1 t - p3, -g)
        let ps2 = Params::new(["p1", "p2", "p3"]).unwrap();
        let du = FamilySpec::DownUp {
            g: parse::parse_tpoly("t^2", &ps2).unwrap(),
            p1: scalar("p1", &ps2),
            p2: scalar("p2", &ps2),
            p3: scalar("p3", &ps2),
        }
        .to_qgha()
        .unwrap();
        assert_eq!(du.q(), &scalar("p2", &ps2));
        assert_eq!(du.f(), &parse::parse_tpoly("p1*t - p3", &ps2).unwrap());
        assert_eq!(du.g(), &parse::parse_tpoly("-t^2", &ps2).unwrap());

        // round trip through the down-up correspondence
        let (g_back, p1, p2, p3) = downup_of(&du).unwrap();
        assert_eq!(g_back, parse::parse_tpoly("t^2", &ps2).unwrap());
        assert_eq!(p1, scalar("p1", &ps2));
        assert_eq!(p2, scalar("p2", &ps2));
        assert_eq!(p3, scalar("p3", &ps2));
    }

    #[test]
    fn hayashi_relations_vanish() {
        // x t = p t x, y t = p^{-1} t y, y x - q x y = t^2 all normalize to 0
        let ps = Params::new(["p", "q"]).unwrap();
        let hh = FamilySpec::Hayashi {
            p: scalar("p", &ps),
            q: scalar("q", &ps),
        }
        .to_qgha()
        .unwrap();
        let gens = GenSet::txy();
        for rel in [
            "x*t - p*t*x",
            "y*t - {1/p}*t*y",
            "y*x - q*x*y - t^2",
        ] {
            let e = parse::parse_element(rel, &gens, &ps).unwrap();
            assert!(normal_form(&e, &hh).unwrap().is_zero(), "{rel}");
        }
    }

    #[test]
    fn translate_examples() {
        // H_q(p t, g) translated by α = k/(1-p) gives H_q(p t + k, g(t - k/(1-p)))
        let ps = Params::new(["p", "q", "k"]).unwrap();
        let alg = Qgha::new(
            scalar("q", &ps),
            parse::parse_tpoly("p*t", &ps).unwrap(),
            parse::parse_tpoly("t^2 + 1", &ps).unwrap(),
        );
        let alpha = scalar("k/(1-p)", &ps);
        let tr = translate_iso(&alg, &alpha).unwrap();
        assert_eq!(tr.f(), &parse::parse_tpoly("p*t + k", &ps).unwrap());
        let expect_g = alg.g().shift(&alpha);
        assert_eq!(tr.g(), &expect_g);

        // α = 0 is the identity
        let tr0 = translate_iso(&alg, &Scalar::zero(&ps)).unwrap();
        assert!(tr0.same_algebra(&alg));

        // H_1(t, t) translated by any α: f stays t, g becomes t - α
        let ps2 = Params::new(["a"]).unwrap();
        let h = FamilySpec::Heisenberg.to_qgha().unwrap();
        let a = scalar("a", &ps2);
        let tr2 = translate_iso(&h, &a).unwrap();
        assert_eq!(tr2.f(), &TPoly::var(&ps2));
        assert_eq!(tr2.g(), &parse::parse_tpoly("t - a", &ps2).unwrap());
    }

    #[test]
    fn translation_composition_is_additive() {
        let ps = Params::new(["q", "a", "b"]).unwrap();
        let alg = Qgha::new(
            scalar("q", &ps),
            parse::parse_tpoly("2*t + 1", &ps).unwrap(),
            parse::parse_tpoly("t^3 - t", &ps).unwrap(),
        );
        let a = scalar("a", &ps);
        let b = scalar("b", &ps);
        let one_then_other = translate_iso(&translate_iso(&alg, &a).unwrap(), &b).unwrap();
        let direct = translate_iso(&alg, &a.add_ref(&b)).unwrap();
        assert!(one_then_other.same_algebra(&direct));
    }

    #[test]
    fn classification_flags() {
        let ps = Params::new(["p", "q", "c", "d", "e", "k"]).unwrap();
        // H_q(p t + e, c t + d): skew PBW over K
        let a = Qgha::new(
            scalar("q", &ps),
            parse::parse_tpoly("p*t + e", &ps).unwrap(),
            parse::parse_tpoly("c*t + d", &ps).unwrap(),
        );
        let r = classify(&a);
        assert!(r.skew_pbw_over_k && r.skew_pbw_over_kt);

        // H(f) with deg f = 2: not noetherian, not skew PBW over K[t]
        let f2 = parse::parse_tpoly("t^2", &ps).unwrap();
        let gha2 = FamilySpec::Gha { f: f2 }.to_qgha().unwrap();
        let r2 = classify(&gha2);
        assert_eq!(r2.noetherian_gha, Some(false));
        assert!(!r2.skew_pbw_over_kt);

        // H_{p^{-1}}(p t + k, c t^2 + d t + e): the dimension-3 CY family
        let a3 = Qgha::new(
            scalar("1/p", &ps),
            parse::parse_tpoly("p*t + k", &ps).unwrap(),
            parse::parse_tpoly("c*t^2 + d*t + e", &ps).unwrap(),
        );
        assert!(classify(&a3).cy_dimension3_family);

        // H_q(p t, 0): quantum polynomial algebra
        let a4 = Qgha::new(
            scalar("q", &ps),
            parse::parse_tpoly("p*t", &ps).unwrap(),
            parse::parse_tpoly("0", &ps).unwrap(),
        );
        let r4 = classify(&a4);
        assert!(r4.quantum_polynomial);

        // q = 0 flags the independence caveat
        let a5 = Qgha::new(
            Scalar::zero(&ps),
            parse::parse_tpoly("p*t", &ps).unwrap(),
            parse::parse_tpoly("t", &ps).unwrap(),
        );
        let r5 = classify(&a5);
        assert!(!r5.q_nonzero && r5.q_zero_note.is_some());
        assert!(!r5.skew_pbw_over_kt);
    }

    #[test]
    fn orbit_examples() {
        let ps = Params::new(["p", "q"]).unwrap();
        let p = scalar("p", &ps);
        let q = scalar("q", &ps);
        let orbit = gaddis_iso_orbit(&p, &q).unwrap();
        assert_eq!(orbit.len(), 4);

        // fixed point (1, 1)
        let one = Scalar::one(&ps);
        assert_eq!(gaddis_iso_orbit(&one, &one).unwrap().len(), 1);

        // (2, 1/2): inversion coincides with the swap
        let two = Scalar::from_int(&ps, 2);
        let half = two.inv().unwrap();
        let orb = gaddis_iso_orbit(&two, &half).unwrap();
        assert_eq!(orb.len(), 2);
        assert_eq!(orb[0], (two.clone(), half.clone()));
        assert_eq!(orb[1], (half, two));

        // zero parameters rejected
        assert!(matches!(
            gaddis_iso_orbit(&Scalar::zero(&ps), &one),
            Err(FamiliesError::ZeroParameter(_))
        ));
    }

    #[test]
    fn gha_iso_cases() {
        // (1, q): isomorphic to H(q t) with certified inverse pair
        let ps = Params::new(["q"]).unwrap();
        let one = Scalar::one(&ps);
        let q = scalar("q", &ps);
        match gha_iso_to_gaddis(&one, &q).unwrap() {
            GhaIsoOutcome::Isomorphic { target_f, .. } => {
                assert_eq!(target_f, parse::parse_tpoly("q*t", &ps).unwrap());
            }
            other => panic!("expected isomorphism, got {other:?}"),
        }

        // (p, 1): isomorphic to H(p t) through the swap route
        let ps2 = Params::new(["p"]).unwrap();
        let p = scalar("p", &ps2);
        let one2 = Scalar::one(&ps2);
        match gha_iso_to_gaddis(&p, &one2).unwrap() {
            GhaIsoOutcome::Isomorphic { target_f, route_note, .. } => {
                assert_eq!(target_f, parse::parse_tpoly("p*t", &ps2).unwrap());
                assert!(route_note.is_some());
            }
            other => panic!("expected isomorphism, got {other:?}"),
        }

        // (1, 1): the enveloping algebra is not a generalized Heisenberg algebra
        match gha_iso_to_gaddis(&one2, &one2).unwrap() {
            GhaIsoOutcome::NotIsomorphic { obstruction, .. } => {
                assert_eq!(obstruction, Obstruction::CentralityOfT);
            }
            other => panic!("expected obstruction, got {other:?}"),
        }

        // generic (p, q): representation-variety obstruction
        let ps3 = Params::new(["p", "q"]).unwrap();
        match gha_iso_to_gaddis(&scalar("p", &ps3), &scalar("q", &ps3)).unwrap() {
            GhaIsoOutcome::NotIsomorphic {
                obstruction,
                source_constraints,
                target_constraints,
                ..
            } => {
                assert_eq!(obstruction, Obstruction::RepVarietyShape);
                assert!(!source_constraints.is_empty());
                assert!(!target_constraints.is_empty());
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let src = r#"{"family":"qgha","q":"p^-1","f":"p*t+k","g":"c*t^2+d*t+e","params":["p","k","c","d","e"]}"#;
        let j: FamilySpecJson = serde_json::from_str(src).unwrap();
        let spec = j.to_spec().unwrap();
        let alg = spec.to_qgha().unwrap();
        assert_eq!(alg.params().names(), ["p", "k", "c", "d", "e"]);
        assert!(classify(&alg).cy_dimension3_family);

        let g = r#"{"family":"gaddis","p":"p","q":"q"}"#;
        let jg: FamilySpecJson = serde_json::from_str(g).unwrap();
        let spec = jg.to_spec().unwrap();
        let alg = spec.to_qgha().unwrap();
        // inferred parameters are sorted
        assert_eq!(alg.params().names(), ["p", "q"]);
        assert!(!spec.conversion_notes().is_empty());

        let h = r#"{"family":"heisenberg"}"#;
        let jh: FamilySpecJson = serde_json::from_str(h).unwrap();
        assert!(jh.to_spec().unwrap().to_qgha().unwrap().params().is_empty());
    }
}
