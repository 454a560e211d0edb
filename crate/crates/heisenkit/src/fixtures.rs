//! Named verification bundles.
//!
//! Each fixture states one structural claim about the algebra families and
//! runs the exact computations that certify it: relation normalization,
//! skew PBW certificates, grading and Hilbert enumeration, Koszul
//! consistency, potential matching, homomorphism verification, and the
//! finite obstruction scans. `run_all` executes every bundle; given the
//! same seed the combined report is byte-identical run to run.

use serde::{Deserialize, Serialize};

use crate::engine::{normal_form, AlgebraRef, NormalElement, Qgha};
use crate::exec::{self, ExecMode};
use crate::families::{self, FamilySpec, GhaIsoOutcome, Obstruction};
use crate::freealg::{span_equal, FreeElement, GenSet, Presentation};
use crate::homology::{self, KoszulVerdict};
use crate::morphisms::{verify_inverse_pair, GenMap};
use crate::parse;
use crate::potentials::{self, PotentialVerdict};
use crate::scalars::{Params, ParamsRef, Scalar, TPoly};
use crate::skewpbw::{self, CoeffRing, SkewPbwClaim};
use crate::specialize::{self, SpecOptions};

/// All fixture identifiers, in presentation order.
pub const FIXTURE_IDS: &[&str] = &[
    "prop-3.3",
    "prop-3.4",
    "cor-3.7",
    "thm-4.2",
    "prop-4.3",
    "thm-4.5",
    "cor-4.6",
    "prop-5.4",
    "prop-5.5",
    "cor-5.6",
    "cor-5.7",
    "thm-6.7",
    "thm-6.8",
    "cor-6.9",
    "cor-6.10",
];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureReport {
    pub id: String,
    pub claim: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureSummary {
    pub seed: u64,
    pub fixtures: Vec<FixtureReport>,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct FixtureOptions {
    pub seed: u64,
    pub trials: usize,
    pub mode: ExecMode,
}

impl Default for FixtureOptions {
    fn default() -> Self {
        FixtureOptions {
            seed: 0,
            trials: 3,
            mode: ExecMode::default(),
        }
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn new() -> Checks {
        Checks(Vec::new())
    }

    fn add(&mut self, name: &str, pass: bool, details: impl Into<String>) {
        self.0.push(CheckResult {
            name: name.to_string(),
            pass,
            details: details.into(),
        });
    }

    fn finish(self, id: &str, claim: &str) -> FixtureReport {
        let pass = self.0.iter().all(|c| c.pass);
        FixtureReport {
            id: id.to_string(),
            claim: claim.to_string(),
            checks: self.0,
            pass,
        }
    }
}

fn pq_params() -> ParamsRef {
    Params::new(["p", "q"]).unwrap()
}

fn gaddis(ps: &ParamsRef) -> AlgebraRef {
    FamilySpec::Gaddis {
        p: Scalar::param(ps, "p").unwrap(),
        q: Scalar::param(ps, "q").unwrap(),
    }
    .to_qgha()
    .unwrap()
}

fn hayashi(ps: &ParamsRef) -> AlgebraRef {
    FamilySpec::Hayashi {
        p: Scalar::param(ps, "p").unwrap(),
        q: Scalar::param(ps, "q").unwrap(),
    }
    .to_qgha()
    .unwrap()
}

/// Random polynomial in `t` over the empty parameter set with exact degree
/// `deg` (a nonzero random leading coefficient).
fn random_tpoly_of_degree(
    rng: &mut rand_chacha::ChaCha8Rng,
    empty: &ParamsRef,
    deg: usize,
) -> TPoly {
    use num::Zero;
    let mut coeffs: Vec<Scalar> = (0..=deg)
        .map(|_| Scalar::from_rational(empty, &specialize::random_rational(rng)))
        .collect();
    while coeffs[deg].is_zero() {
        let mut v = specialize::random_rational(rng);
        while Zero::is_zero(&v) {
            v = specialize::random_rational(rng);
        }
        coeffs[deg] = Scalar::from_rational(empty, &v);
    }
    TPoly::from_coeffs(empty, coeffs)
}

fn random_nonzero_scalar(rng: &mut rand_chacha::ChaCha8Rng, empty: &ParamsRef) -> Scalar {
    use num::Zero;
    loop {
        let v = specialize::random_rational(rng);
        if !Zero::is_zero(&v) {
            return Scalar::from_rational(empty, &v);
        }
    }
}

fn prop_3_3() -> FixtureReport {
    let ps = pq_params();
    let mut checks = Checks::new();
    for (name, alg) in [("gaddis", gaddis(&ps)), ("hayashi", hayashi(&ps))] {
        let claim = SkewPbwClaim::new(alg, CoeffRing::Kt);
        let cert = skewpbw::verify_skew_pbw(&claim);
        checks.add(
            &format!("{name}-skew-pbw-over-kt"),
            cert.verdict,
            format!("violations: {:?}", cert.violations),
        );
        checks.add(
            &format!("{name}-bijective"),
            cert.bijective,
            "sigma maps affine invertible, d scalar nonzero",
        );
        checks.add(
            &format!("{name}-endomorphism-type"),
            cert.endomorphism_type,
            "all delta_i(t) = 0",
        );
        if name == "gaddis" {
            let sig: Vec<(String, String)> = cert
                .sigma_delta
                .iter()
                .map(|s| (s.var.clone(), s.sigma_t.clone()))
                .collect();
            let expect = sig
                == vec![
                    ("x".to_string(), "p*t".to_string()),
                    ("y".to_string(), "1/p*t".to_string()),
                ];
            checks.add(
                "gaddis-sigma-actions",
                expect,
                format!("sigma_x(t), sigma_y(t) = {sig:?}"),
            );
        }
    }
    checks.finish(
        "prop-3.3",
        "the two-parameter quantum Heisenberg algebras (linear and quadratic commutator \
         versions) are bijective skew PBW extensions of K[t] of endomorphism type, with \
         sigma_x(t) = p t and sigma_y(t) = p^-1 t",
    )
}

fn prop_3_4() -> FixtureReport {
    let ps = pq_params();
    let hh = hayashi(&ps);
    let mut checks = Checks::new();
    let graded = skewpbw::check_graded_extension(&SkewPbwClaim::new(hh.clone(), CoeffRing::Kt), 1);
    checks.add(
        "graded-extension-conditions",
        graded.graded,
        format!("details: {:?}", graded.details),
    );
    let dims = homology::hilbert_dims(&hh, (1, 1, 1), 2).unwrap();
    checks.add(
        "connected",
        dims[0] == 1,
        format!("dim A_0 = {}", dims[0]),
    );
    checks.finish(
        "prop-3.4",
        "the quadratic-commutator two-parameter algebra is connected and a graded skew \
         PBW extension of K[t] at weights all 1",
    )
}

fn cor_3_7() -> FixtureReport {
    let ps = pq_params();
    let gh = gaddis(&ps);
    let mut checks = Checks::new();
    let gradings = homology::find_gradings(&gh, 2);
    checks.add(
        "grading-forces-weight-2",
        gradings.contains(&(1, 1, 2)) && !gradings.contains(&(1, 1, 1)),
        format!("admissible weights: {gradings:?}"),
    );
    // Hilbert series 1/((1-s)^2 (1-s^2)) to n = 12
    let mut expect = vec![0u64; 13];
    for m in 0..=6usize {
        for r in 0..=(12 - 2 * m) {
            expect[2 * m + r] += (r + 1) as u64;
        }
    }
    let dims = homology::hilbert_dims(&gh, (1, 1, 2), 12).unwrap();
    checks.add(
        "hilbert-series",
        dims == expect,
        format!("dims = {dims:?}"),
    );
    // t is a normal element: t·A_d = A_d·t as spans, d ≤ 5
    let t = NormalElement::gen_t(&gh);
    let one = Scalar::one(&ps);
    let mut normal_ok = true;
    for d in 0..=5u32 {
        let mut left: Vec<FreeElement> = Vec::new();
        let mut right: Vec<FreeElement> = Vec::new();
        for i in 0..=d {
            for j in 0..=(d - i) {
                let k = d - i - j;
                let m = NormalElement::monomial(&gh, i, j, k, one.clone());
                left.push(t.nmul(&m).unwrap().to_free());
                right.push(m.nmul(&t).unwrap().to_free());
            }
        }
        let rep = span_equal(&left, &right, d as usize + 1).unwrap();
        if !rep.equal {
            normal_ok = false;
        }
    }
    checks.add(
        "t-normal-element",
        normal_ok,
        "t·A_d and A_d·t span the same slice for d ≤ 5",
    );
    checks.finish(
        "cor-3.7",
        "the linear-commutator two-parameter algebra is graded only with t in weight 2, \
         its Hilbert series is 1/((1-s)^2(1-s^2)), and t is a normal element",
    )
}

fn thm_4_2(opts: &FixtureOptions) -> FixtureReport {
    let empty = Params::empty();
    let mut checks = Checks::new();
    let results = exec::map_batch(opts.mode, 4, |deg| {
        let mut rng = specialize::rng_from_seed(opts.seed.wrapping_add(1000 + deg as u64));
        let empty = Params::empty();
        let f = random_tpoly_of_degree(&mut rng, &empty, deg);
        let alg = FamilySpec::Gha { f }.to_qgha().unwrap();
        let mut claim_kt = SkewPbwClaim::new(alg.clone(), CoeffRing::Kt);
        claim_kt.maxdeg = 4;
        let cert_kt = skewpbw::verify_skew_pbw(&claim_kt);
        let mut claim_k = SkewPbwClaim::new(alg.clone(), CoeffRing::K);
        claim_k.maxdeg = 4;
        let cert_k = skewpbw::verify_skew_pbw(&claim_k);
        let noeth = families::classify(&alg).noetherian_gha;
        let want = deg == 1;
        (
            deg,
            cert_kt.verdict == want && cert_kt.bijective == (want && cert_kt.verdict),
            cert_k.verdict == want,
            noeth == Some(want),
        )
    });
    let _ = empty;
    for (deg, kt_ok, k_ok, noeth_ok) in results {
        checks.add(
            &format!("deg-{deg}-equivalence"),
            kt_ok && k_ok && noeth_ok,
            format!("over K[t]: {kt_ok}, over K: {k_ok}, noetherian criterion: {noeth_ok}"),
        );
    }
    checks.finish(
        "thm-4.2",
        "for a generalized Heisenberg algebra the conditions (bijective skew PBW over \
         K[t] of endomorphism type), (skew PBW over K) and (noetherian) are all \
         equivalent to deg f = 1",
    )
}

fn prop_4_3(opts: &FixtureOptions) -> FixtureReport {
    let mut checks = Checks::new();
    let mut rng = specialize::rng_from_seed(opts.seed.wrapping_add(43));
    let empty = Params::empty();
    for deg in 0..=3usize {
        let f = if deg == 0 {
            TPoly::constant(random_nonzero_scalar(&mut rng, &empty))
        } else {
            random_tpoly_of_degree(&mut rng, &empty, deg)
        };
        let f_str = f.to_string();
        let alg = FamilySpec::Gha { f }.to_qgha().unwrap();
        let mut claim = SkewPbwClaim::new(alg, CoeffRing::GhaBase);
        claim.maxdeg = 4;
        let cert = skewpbw::verify_skew_pbw(&claim);
        checks.add(
            &format!("deg-{deg}-free-in-y"),
            cert.verdict,
            format!("f = {f_str}; violations: {:?}", cert.violations),
        );
    }
    checks.finish(
        "prop-4.3",
        "for every nonzero f, the generalized Heisenberg algebra is a skew PBW \
         extension in the single variable y over its x,t-subalgebra",
    )
}

fn thm_4_5() -> FixtureReport {
    let mut checks = Checks::new();

    // shift between affine presentations: H(λt) ≅ H(λt + μ)
    let ps = Params::new(["l", "m"]).unwrap();
    let gens = GenSet::txy();
    let gha = |f: &str| {
        let f = parse::parse_tpoly(f, &ps).unwrap();
        let g = f.sub_ref(&TPoly::var(&ps));
        Qgha::new(Scalar::one(&ps), f, g)
    };
    let src = gha("l*t");
    let tgt = gha("l*t + m");
    let el = |s: &str| parse::parse_element(s, &gens, &ps).unwrap();
    let psi = GenMap::new(
        src.clone(),
        tgt.clone(),
        el("t + {m/(l-1)}"),
        el("x"),
        el("y"),
    )
    .unwrap();
    let psi_inv = GenMap::new(tgt, src, el("t - {m/(l-1)}"), el("x"), el("y")).unwrap();
    let psi_ok = psi.verify_hom().unwrap().is_valid()
        && psi_inv.verify_hom().unwrap().is_valid()
        && verify_inverse_pair(&psi, &psi_inv).unwrap();
    checks.add(
        "shift-isomorphism",
        psi_ok,
        "t ↦ t + m/(l-1) identifies H(l t) with H(l t + m)",
    );

    // (1, q) and (p, 1) produce certified isomorphisms
    let psq = Params::new(["q"]).unwrap();
    let one = Scalar::one(&psq);
    let q = Scalar::param(&psq, "q").unwrap();
    let iso_1q = matches!(
        families::gha_iso_to_gaddis(&one, &q).unwrap(),
        GhaIsoOutcome::Isomorphic { .. }
    );
    checks.add("case-p-one", iso_1q, "certified map onto H(q t)");
    let psp = Params::new(["p"]).unwrap();
    let p = Scalar::param(&psp, "p").unwrap();
    let onep = Scalar::one(&psp);
    let iso_p1 = matches!(
        families::gha_iso_to_gaddis(&p, &onep).unwrap(),
        GhaIsoOutcome::Isomorphic { .. }
    );
    checks.add("case-q-one", iso_p1, "certified map onto H(p t)");

    // (1, 1): centrality obstruction
    let both_one = families::gha_iso_to_gaddis(&onep, &onep).unwrap();
    checks.add(
        "case-both-one",
        matches!(
            both_one,
            GhaIsoOutcome::NotIsomorphic {
                obstruction: Obstruction::CentralityOfT,
                ..
            }
        ),
        "enveloping algebra admits no affine target",
    );

    // generic (p, q): representation-variety obstruction with the two
    // constraint systems differing in shape
    let ps2 = pq_params();
    let outcome =
        families::gha_iso_to_gaddis(&Scalar::param(&ps2, "p").unwrap(), &Scalar::param(&ps2, "q").unwrap())
            .unwrap();
    let rep_ok = match &outcome {
        GhaIsoOutcome::NotIsomorphic {
            obstruction: Obstruction::RepVarietyShape,
            source_constraints,
            target_constraints,
            ..
        } => {
            let src_has_xy = source_constraints
                .iter()
                .any(|c| c.contains("rep_x*rep_y"));
            let tgt_has_xy = target_constraints
                .iter()
                .any(|c| c.contains("rep_x*rep_y"));
            src_has_xy && !tgt_has_xy
        }
        _ => false,
    };
    checks.add(
        "rep-variety-shapes",
        rep_ok,
        "source constraints couple rep_x·rep_y to rep_t; affine targets only force rep_t = 0",
    );

    // centrality of t: central in the p = 1 algebra, not in H(λt)
    let src_alg = families::FamilySpec::Gaddis {
        p: Scalar::one(&psq),
        q: q.clone(),
    }
    .to_qgha()
    .unwrap();
    let t = NormalElement::gen_t(&src_alg);
    let x = NormalElement::gen_x(&src_alg);
    let y = NormalElement::gen_y(&src_alg);
    let central = t.nmul(&x).unwrap() == x.nmul(&t).unwrap()
        && t.nmul(&y).unwrap() == y.nmul(&t).unwrap();
    let psl = Params::new(["l"]).unwrap();
    let hlt = {
        let f = parse::parse_tpoly("l*t", &psl).unwrap();
        let g = f.sub_ref(&TPoly::var(&psl));
        Qgha::new(Scalar::one(&psl), f, g)
    };
    let t2 = NormalElement::gen_t(&hlt);
    let x2 = NormalElement::gen_x(&hlt);
    let not_central = t2.nmul(&x2).unwrap() != x2.nmul(&t2).unwrap();
    checks.add(
        "centrality-contrast",
        central && not_central,
        "t commutes with x and y when p = 1, but not in H(l t)",
    );

    // no map sending t to a scalar multiple of t works from the enveloping
    // algebra to H(λt): scan a finite grid plus the symbolic γ = l - 1
    let heis = FamilySpec::Heisenberg.to_qgha().unwrap();
    let gens3 = GenSet::txy();
    let mut all_fail = true;
    let mut gammas: Vec<Scalar> = [0i64, 1, -1, 2, -2, 3]
        .iter()
        .map(|&n| Scalar::from_int(&psl, n))
        .collect();
    gammas.push(
        Scalar::param(&psl, "l")
            .unwrap()
            .sub_ref(&Scalar::one(&psl)),
    );
    for gamma in &gammas {
        let t_img = FreeElement::generator(&gens3, &psl, 0).scale(gamma);
        let cand = GenMap::new(
            heis.clone(),
            hlt.clone(),
            t_img,
            FreeElement::generator(&gens3, &psl, 1),
            FreeElement::generator(&gens3, &psl, 2),
        )
        .unwrap();
        if cand.verify_hom().unwrap().is_valid() {
            all_fail = false;
        }
    }
    checks.add(
        "no-scalar-t-map",
        all_fail,
        format!("{} candidate maps all fail relation checking", gammas.len()),
    );

    // graded-slice cross-check: matching sides have matching monomial counts
    let gh1q = src_alg;
    let hqt = {
        let f = parse::parse_tpoly("q*t", &psq).unwrap();
        let g = f.sub_ref(&TPoly::var(&psq));
        Qgha::new(Scalar::one(&psq), f, g)
    };
    let d1 = homology::hilbert_dims(&gh1q, (1, 1, 2), 8).unwrap();
    let d2 = homology::hilbert_dims(&hqt, (1, 1, 2), 8).unwrap();
    checks.add(
        "graded-slice-counts",
        d1 == d2,
        format!("{d1:?} vs {d2:?}"),
    );

    checks.finish(
        "thm-4.5",
        "a two-parameter quantum Heisenberg algebra is a generalized Heisenberg algebra \
         exactly when one of the parameters is 1 but not both; the isomorphisms are \
         certified explicitly and the excluded cases carry finite obstructions",
    )
}

fn cor_4_6() -> FixtureReport {
    let mut checks = Checks::new();
    // quantum Heisenberg algebra = two-parameter algebra on the diagonal
    let psq = Params::new(["q"]).unwrap();
    let q = Scalar::param(&psq, "q").unwrap();
    let generic = families::gha_iso_to_gaddis(&q, &q).unwrap();
    checks.add(
        "generic-diagonal",
        matches!(
            generic,
            GhaIsoOutcome::NotIsomorphic {
                obstruction: Obstruction::RepVarietyShape,
                ..
            }
        ),
        "diagonal parameters (q, q), q generic, obstructed by representation shape",
    );
    let empty = Params::empty();
    let one = Scalar::one(&empty);
    let at_one = families::gha_iso_to_gaddis(&one, &one).unwrap();
    checks.add(
        "diagonal-at-one",
        matches!(at_one, GhaIsoOutcome::NotIsomorphic { .. }),
        "the q = 1 point is the enveloping algebra, also not isomorphic",
    );
    checks.finish(
        "cor-4.6",
        "no quantum Heisenberg algebra is isomorphic to a generalized Heisenberg \
         algebra: the family lies on the diagonal where both parameters coincide",
    )
}

fn skew_grid(opts: &FixtureOptions, ring: CoeffRing) -> Vec<CheckResult> {
    // deg f ∈ {0..3} × deg g ∈ {0..3} × q ∈ {0, generic nonzero}
    let cells: Vec<(usize, usize, bool)> = (0..4)
        .flat_map(|df| (0..4).flat_map(move |dg| [(df, dg, false), (df, dg, true)]))
        .collect();
    exec::map_items(opts.mode, cells, |(df, dg, qzero)| {
        let mut rng = specialize::rng_from_seed(
            opts.seed
                .wrapping_add((df * 8 + dg * 2 + usize::from(qzero)) as u64),
        );
        let empty = Params::empty();
        let f = random_tpoly_of_degree(&mut rng, &empty, df);
        let g = random_tpoly_of_degree(&mut rng, &empty, dg);
        let q = if qzero {
            Scalar::zero(&empty)
        } else {
            random_nonzero_scalar(&mut rng, &empty)
        };
        let alg = Qgha::new(q, f, g);
        let mut claim = SkewPbwClaim::new(alg, ring);
        claim.maxdeg = 4;
        let cert = skewpbw::verify_skew_pbw(&claim);
        let expected = match ring {
            CoeffRing::Kt => df == 1 && !qzero,
            CoeffRing::K => df == 1 && dg <= 1 && !qzero,
            CoeffRing::GhaBase => true,
        };
        CheckResult {
            name: format!("deg-f-{df}-deg-g-{dg}-q-{}", if qzero { "zero" } else { "generic" }),
            pass: cert.verdict == expected,
            details: format!("verdict {} vs predicate {}", cert.verdict, expected),
        }
    })
}

fn prop_5_4(opts: &FixtureOptions) -> FixtureReport {
    let mut checks = Checks::new();
    checks.0.extend(skew_grid(opts, CoeffRing::Kt));
    checks.finish(
        "prop-5.4",
        "H_q(f, g) is a bijective skew PBW extension of K[t] exactly when deg f = 1 \
         and q ≠ 0, verified structurally on the full degree grid",
    )
}

fn prop_5_5(opts: &FixtureOptions) -> FixtureReport {
    let mut checks = Checks::new();
    checks.0.extend(skew_grid(opts, CoeffRing::K));
    checks.finish(
        "prop-5.5",
        "H_q(f, g) is a skew PBW extension of K exactly when q ≠ 0, deg f = 1 and \
         deg g ≤ 1, verified structurally on the full degree grid",
    )
}

fn cor_5_6() -> FixtureReport {
    let mut checks = Checks::new();
    let ps = pq_params();
    let quantum_poly = Qgha::new(
        Scalar::param(&ps, "q").unwrap(),
        parse::parse_tpoly("p*t", &ps).unwrap(),
        TPoly::zero(&ps),
    );
    let over_k = skewpbw::check_graded_extension(
        &SkewPbwClaim::new(quantum_poly.clone(), CoeffRing::K),
        1,
    );
    let over_kt = skewpbw::check_graded_extension(
        &SkewPbwClaim::new(quantum_poly.clone(), CoeffRing::Kt),
        1,
    );
    checks.add(
        "quantum-polynomial-graded",
        over_k.graded && over_kt.graded,
        "graded skew PBW extension of both K and K[t]",
    );
    checks.add(
        "quantum-polynomial-flag",
        families::classify(&quantum_poly).quantum_polynomial,
        "g = 0 and f = p t",
    );

    let psc = Params::new(["p", "q", "c"]).unwrap();
    let quad = Qgha::new(
        Scalar::param(&psc, "q").unwrap(),
        parse::parse_tpoly("p*t", &psc).unwrap(),
        parse::parse_tpoly("c*t^2", &psc).unwrap(),
    );
    let graded = skewpbw::check_graded_extension(&SkewPbwClaim::new(quad.clone(), CoeffRing::Kt), 1);
    let dims = homology::hilbert_dims(&quad, (1, 1, 1), 1).unwrap();
    checks.add(
        "quadratic-g-connected-graded",
        graded.graded && dims[0] == 1,
        format!("graded: {}, dim A_0 = {}", graded.graded, dims[0]),
    );
    checks.finish(
        "cor-5.6",
        "with f = p t: the g = 0 case is a quantum polynomial algebra and a graded \
         skew PBW extension of K and of K[t]; homogeneous quadratic g gives a \
         connected graded skew PBW extension of K[t]",
    )
}

fn cor_5_7(opts: &FixtureOptions) -> FixtureReport {
    let mut checks = Checks::new();
    let psc = Params::new(["p", "q", "c"]).unwrap();
    let alg = Qgha::new(
        Scalar::param(&psc, "q").unwrap(),
        parse::parse_tpoly("p*t", &psc).unwrap(),
        parse::parse_tpoly("c*t^2", &psc).unwrap(),
    );
    let report = homology::koszul_numeric_check(
        &alg,
        6,
        SpecOptions {
            seed: opts.seed,
            trials: opts.trials,
        },
        opts.mode,
    )
    .unwrap();
    checks.add(
        "koszul-consistent",
        report.verdict == KoszulVerdict::Consistent,
        format!("residuals {:?}", report.residuals),
    );
    checks.add(
        "dual-dimensions",
        report.dual_dims == vec![1, 3, 3, 1, 0, 0, 0],
        format!("dual dims {:?}", report.dual_dims),
    );
    checks.add(
        "specialization-stable",
        report.specialization_stable,
        format!("{} trials agree", report.trials.len()),
    );
    checks.finish(
        "cor-5.7",
        "H_q(p t, c t^2) passes the numerical Koszul criterion: dual dimensions \
         1,3,3,1,0,... and the convolution identity hold to degree 6",
    )
}

fn thm_6_7() -> FixtureReport {
    let mut checks = Checks::new();
    let ps = Params::new(["p", "c"]).unwrap();
    let p = Scalar::param(&ps, "p").unwrap();
    let c = Scalar::param(&ps, "c").unwrap();
    let gens = GenSet::txy();
    let el = |s: &str| parse::parse_element(s, &gens, &ps).unwrap();
    let phi = potentials::phi3(&p, &c);
    let dx = potentials::cyclic_derivative_named(&phi, "x").unwrap();
    let dy = potentials::cyclic_derivative_named(&phi, "y").unwrap();
    let dt = potentials::cyclic_derivative_named(&phi, "t").unwrap();
    checks.add(
        "derivative-x",
        dx == el("y*t - p*t*y"),
        format!("∂x = {dx}"),
    );
    checks.add(
        "derivative-y",
        dy == el("t*x - p*x*t"),
        format!("∂y = {dy}"),
    );
    checks.add(
        "derivative-t",
        dt == el("x*y - p*y*x + p*c*t^2"),
        format!("∂t = {dt}"),
    );
    let alg = Qgha::new(
        p.inv().unwrap(),
        parse::parse_tpoly("p*t", &ps).unwrap(),
        parse::parse_tpoly("c*t^2", &ps).unwrap(),
    );
    let span = span_equal(&[dx, dy, dt], &alg.relations(), 3).unwrap();
    checks.add(
        "derivative-span-equals-relations",
        span.equal,
        "symbolic over the p, c parameter field",
    );
    let report = potentials::match_jacobian(&alg).unwrap();
    checks.add(
        "graded-witness",
        report.verdict == PotentialVerdict::GradedCyWitness && report.span_match == Some(true),
        report.caveat.clone(),
    );
    checks.finish(
        "thm-6.7",
        "for f = p t, g = c t^2, q = p^-1 the algebra is the Jacobian algebra of an \
         explicit homogeneous cubic potential; the derivative span equals the relation \
         span symbolically",
    )
}

fn thm_6_8() -> FixtureReport {
    let mut checks = Checks::new();
    let ps = Params::new(["p", "c", "d", "e", "k"]).unwrap();
    let s = |n: &str| Scalar::param(&ps, n).unwrap();
    let gens = GenSet::txy();
    let el = |src: &str| parse::parse_element(src, &gens, &ps).unwrap();
    let phi = potentials::phi3(&s("p"), &s("c"))
        .sub_ref(&potentials::phi_correction(&s("p"), &s("k"), &s("d"), &s("e")));
    let dx = potentials::cyclic_derivative_named(&phi, "x").unwrap();
    let dy = potentials::cyclic_derivative_named(&phi, "y").unwrap();
    let dt = potentials::cyclic_derivative_named(&phi, "t").unwrap();
    checks.add(
        "derivative-x-matches-f",
        dx == el("y*t - (p*t + k)*y").clone(),
        format!("∂x = {dx}"),
    );
    checks.add(
        "derivative-y-matches-f",
        dy == el("t*x - x*(p*t + k)"),
        format!("∂y = {dy}"),
    );
    checks.add(
        "derivative-t-matches-g",
        dt == el("-{p}*(y*x - {1/p}*x*y - c*t^2 - d*t - e)"),
        format!("∂t = {dt}"),
    );
    let alg = Qgha::new(
        s("p").inv().unwrap(),
        parse::parse_tpoly("p*t + k", &ps).unwrap(),
        parse::parse_tpoly("c*t^2 + d*t + e", &ps).unwrap(),
    );
    let span = span_equal(&[dx, dy, dt], &alg.relations(), 3).unwrap();
    checks.add(
        "derivative-span-equals-relations",
        span.equal,
        "symbolic over the p, c, d, e, k parameter field",
    );
    let report = potentials::match_jacobian(&alg).unwrap();
    checks.add(
        "deformation-witness",
        report.verdict == PotentialVerdict::CyWitnessViaPbwDeformation
            && report.span_match == Some(true),
        report.caveat.clone(),
    );
    checks.finish(
        "thm-6.8",
        "for f = p t + k, g = c t^2 + d t + e, q = p^-1 the algebra is the Jacobian \
         algebra of the cubic potential minus a degree-≤2 correction: a deformation \
         witness with matching derivative span",
    )
}

fn cor_6_9() -> FixtureReport {
    let mut checks = Checks::new();
    // quantum Heisenberg algebra: f' = q^-1 t, g' = t
    let psq = Params::new(["q"]).unwrap();
    let alg = FamilySpec::QuantumHeisenberg {
        q: Scalar::param(&psq, "q").unwrap(),
    }
    .to_qgha()
    .unwrap();
    let report = potentials::match_jacobian(&alg).unwrap();
    checks.add(
        "cy-witness",
        report.verdict == PotentialVerdict::CyWitnessViaPbwDeformation
            && report.span_match == Some(true),
        format!("verdict {:?}", report.verdict),
    );
    checks.finish(
        "cor-6.9",
        "the quantum Heisenberg algebra H_q(q^-1 t, t) carries a potential witness \
         through the deformation construction",
    )
}

fn cor_6_10() -> FixtureReport {
    let mut checks = Checks::new();
    // H(t + k) = H_1(t + k, k)
    let psk = Params::new(["k"]).unwrap();
    let f = parse::parse_tpoly("t + k", &psk).unwrap();
    let alg = FamilySpec::Gha { f }.to_qgha().unwrap();
    let report = potentials::match_jacobian(&alg).unwrap();
    checks.add(
        "cy-witness",
        report.verdict == PotentialVerdict::CyWitnessViaPbwDeformation
            && report.span_match == Some(true),
        format!("verdict {:?}", report.verdict),
    );
    checks.finish(
        "cor-6.10",
        "the generalized Heisenberg algebra of f = t + k carries a potential witness \
         through the deformation construction",
    )
}

/// Runs a single fixture by identifier.
pub fn run_fixture(id: &str, opts: &FixtureOptions) -> Option<FixtureReport> {
    let report = match id {
        "prop-3.3" => prop_3_3(),
        "prop-3.4" => prop_3_4(),
        "cor-3.7" => cor_3_7(),
        "thm-4.2" => thm_4_2(opts),
        "prop-4.3" => prop_4_3(opts),
        "thm-4.5" => thm_4_5(),
        "cor-4.6" => cor_4_6(),
        "prop-5.4" => prop_5_4(opts),
        "prop-5.5" => prop_5_5(opts),
        "cor-5.6" => cor_5_6(),
        "cor-5.7" => cor_5_7(opts),
        "thm-6.7" => thm_6_7(),
        "thm-6.8" => thm_6_8(),
        "cor-6.9" => cor_6_9(),
        "cor-6.10" => cor_6_10(),
        _ => return None,
    };
    Some(report)
}

/// Runs every fixture; the summary is deterministic for a given seed.
pub fn run_all(opts: &FixtureOptions) -> FixtureSummary {
    let ids: Vec<&str> = FIXTURE_IDS.to_vec();
    let fixtures = exec::map_items(opts.mode, ids, |id| {
        run_fixture(id, opts).expect("known fixture id")
    });
    let pass = fixtures.iter().all(|f| f.pass);
    FixtureSummary {
        seed: opts.seed,
        fixtures,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_fixture_is_none() {
        assert!(run_fixture("thm-9.9", &FixtureOptions::default()).is_none());
    }

    #[test]
    fn fixture_ids_all_resolve() {
        let opts = FixtureOptions {
            seed: 5,
            trials: 2,
            mode: ExecMode::Sequential,
        };
        for id in FIXTURE_IDS {
            // potentials and grids are exercised by the full runs below and
            // in the acceptance suite; here only resolution is checked for
            // the cheap fixtures
            if matches!(*id, "prop-3.4" | "cor-5.6" | "cor-6.9" | "cor-6.10") {
                let rep = run_fixture(id, &opts).unwrap();
                assert!(rep.pass, "{id}: {:?}", rep.checks);
            }
        }
    }

    #[test]
    fn determinism_of_summary() {
        let opts = FixtureOptions {
            seed: 7,
            trials: 2,
            mode: ExecMode::default(),
        };
        let a = serde_json::to_string(&run_all(&opts)).unwrap();
        let b = serde_json::to_string(&run_all(&opts)).unwrap();
        assert_eq!(a, b);
    }
}
