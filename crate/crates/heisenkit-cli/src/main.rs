//! Command-line front end: parse algebra specs and element expressions,
//! dispatch to the library, and emit text or canonical JSON reports.
//!
//! Exit codes: 0 success or verdict-true, 1 verdict-false, 2 usage or parse
//! error, 3 degree/size limit exceeded.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use heisenkit::engine::{normal_form, AlgebraRef};
use heisenkit::exec::ExecMode;
use heisenkit::families::{self, FamilySpecJson};
use heisenkit::fixtures::{self, FixtureOptions};
use heisenkit::freealg::{FreeElement, GenSet, Presentation};
use heisenkit::homology;
use heisenkit::morphisms::GenMap;
use heisenkit::parse;
use heisenkit::potentials;
use heisenkit::scalars::{Params, ParamsRef};
use heisenkit::skewpbw::{self, CoeffRing, SkewPbwClaim};
use heisenkit::specialize::SpecOptions;

#[derive(Parser)]
#[command(name = "heisenkit", version, about = "exact arithmetic and structural checks for Heisenberg-type algebras")]
struct Cli {
    /// emit the canonical JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// seed for specialization trials (HEISENKIT_SEED overrides)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// degree guard for normal-form computations with deg f >= 2
    #[arg(long, global = true, default_value_t = 8)]
    maxdeg: usize,
    /// abort when a result would exceed this many terms
    #[arg(long, global = true, default_value_t = 100_000)]
    term_cap: usize,
    /// run batch work sequentially even when parallel support is compiled in
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// canonical form of an expression in an algebra
    Normalize {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        expr: String,
    },
    /// product of two expressions, in canonical form
    Multiply {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// structural classification flags of an algebra
    Classify {
        #[arg(long)]
        algebra: String,
    },
    /// skew PBW extension certificate over a coefficient ring
    VerifySkewpbw {
        #[arg(long)]
        algebra: String,
        /// coefficient ring: k, kt, or gha-base
        #[arg(long, default_value = "kt")]
        ring: String,
        /// slice degree bound for the certificate
        #[arg(long, default_value_t = 6)]
        slice: usize,
    },
    /// graded-extension conditions at a ring weight
    GradedCheck {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "kt")]
        ring: String,
        #[arg(long, default_value_t = 1)]
        ring_weight: u32,
    },
    /// graded slice dimensions for weight triple w_x,w_y,w_t
    Hilbert {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// numerical Koszul consistency check at weights all 1
    KoszulCheck {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// cyclic partial derivative of a potential
    PotentialDerive {
        #[arg(long)]
        expr: String,
        /// generator to derive by: t, x, or y
        #[arg(long)]
        wrt: String,
        /// comma-separated parameter names (inferred when omitted)
        #[arg(long)]
        params: Option<String>,
    },
    /// match an algebra against its candidate potential
    JacobianMatch {
        #[arg(long)]
        algebra: String,
    },
    /// verify a homomorphism given by generator images
    VerifyHom {
        /// inline JSON or path: {"source":…, "target":…, "images":{…}}
        #[arg(long)]
        map: String,
        /// optional inverse map; checks both composites fix the generators
        #[arg(long)]
        inverse: Option<String>,
    },
    /// one-dimensional representation constraints of an algebra
    OneDimReps {
        #[arg(long)]
        algebra: String,
    },
    /// run named verification bundles ("all" or an id like thm-6.7)
    Fixtures {
        #[arg(default_value = "all")]
        name: String,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Limit(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Limit(m) => write!(f, "limit exceeded: {m}"),
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

/// Inline JSON (starts with `{`) or a path to a JSON file.
fn load_spec(src: &str) -> Result<FamilySpecJson, CliError> {
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else {
        std::fs::read_to_string(src)
            .map_err(|e| CliError::Usage(format!("cannot read {src}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid algebra spec: {e}")))
}

fn load_algebra(src: &str) -> Result<(AlgebraRef, Vec<String>), CliError> {
    let spec = load_spec(src)?.to_spec().map_err(usage)?;
    let notes = spec.conversion_notes();
    let alg = spec.to_qgha().map_err(usage)?;
    Ok((alg, notes))
}

fn parse_ring(src: &str) -> Result<CoeffRing, CliError> {
    match src.to_ascii_lowercase().as_str() {
        "k" => Ok(CoeffRing::K),
        "kt" | "k[t]" => Ok(CoeffRing::Kt),
        "gha-base" | "base" => Ok(CoeffRing::GhaBase),
        other => Err(CliError::Usage(format!(
            "unknown ring `{other}` (expected k, kt, or gha-base)"
        ))),
    }
}

fn parse_expr(src: &str, alg: &AlgebraRef) -> Result<FreeElement, CliError> {
    parse::parse_element(src, &GenSet::txy(), alg.params()).map_err(usage)
}

/// Degree guard: with deg f >= 2 normal forms grow superlinearly in the
/// word length, so long inputs are rejected up front.
fn guard_degree(cli: &Cli, alg: &AlgebraRef, exprs: &[&FreeElement]) -> Result<(), CliError> {
    if alg.f().degree().unwrap_or(0) < 2 {
        return Ok(());
    }
    for e in exprs {
        let len = e.max_word_len().unwrap_or(0);
        if len > cli.maxdeg {
            return Err(CliError::Limit(format!(
                "word length {len} exceeds --maxdeg {} while deg f >= 2",
                cli.maxdeg
            )));
        }
    }
    Ok(())
}

fn guard_terms(cli: &Cli, n: usize) -> Result<(), CliError> {
    if n > cli.term_cap {
        return Err(CliError::Limit(format!(
            "result has {n} terms, exceeding --term-cap {}",
            cli.term_cap
        )));
    }
    Ok(())
}

fn infer_params_csv(params: &Option<String>, exprs: &[&str]) -> Result<ParamsRef, CliError> {
    match params {
        Some(csv) => Params::new(csv.split(',').map(str::trim).filter(|s| !s.is_empty()))
            .map_err(usage),
        None => {
            let mut names: Vec<String> = Vec::new();
            for src in exprs {
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
                        if !["t", "x", "y"].contains(&ident.as_str()) && !names.contains(&ident) {
                            names.push(ident);
                        }
                    } else {
                        chars.next();
                    }
                }
            }
            names.sort();
            Params::new(names).map_err(usage)
        }
    }
}

#[derive(Deserialize)]
struct GenMapJson {
    source: FamilySpecJson,
    target: FamilySpecJson,
    images: BTreeMap<String, String>,
}

fn load_genmap(src: &str) -> Result<GenMap, CliError> {
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else {
        std::fs::read_to_string(src)
            .map_err(|e| CliError::Usage(format!("cannot read {src}: {e}")))?
    };
    let j: GenMapJson =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid map: {e}")))?;
    let source = j.source.to_spec().map_err(usage)?.to_qgha().map_err(usage)?;
    let target = j.target.to_spec().map_err(usage)?.to_qgha().map_err(usage)?;
    let gens = GenSet::txy();
    let mut images: Vec<FreeElement> = Vec::with_capacity(3);
    for name in ["t", "x", "y"] {
        let img_src = j
            .images
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("image missing for generator `{name}`")))?;
        images.push(parse::parse_element(img_src, &gens, target.params()).map_err(usage)?);
    }
    let [t, x, y] = <[FreeElement; 3]>::try_from(images).expect("three images");
    GenMap::new(source, target, t, x, y).map_err(usage)
}

fn print_report<T: serde::Serialize>(cli: &Cli, value: &T, text: String) {
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("report serializes")
        );
    } else {
        println!("{text}");
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let seed = std::env::var("HEISENKIT_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .unwrap_or(cli.seed);
    let mode = if cli.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::default()
    };

    match &cli.cmd {
        Cmd::Normalize { algebra, expr } => {
            let (alg, _) = load_algebra(algebra)?;
            let e = parse_expr(expr, &alg)?;
            guard_degree(cli, &alg, &[&e])?;
            let nf = normal_form(&e, &alg).map_err(usage)?;
            guard_terms(cli, nf.to_free().num_terms())?;
            let rendered = nf.to_free().to_string();
            print_report(cli, &json!({ "normal_form": rendered }), rendered.clone());
            Ok(true)
        }
        Cmd::Multiply { algebra, lhs, rhs } => {
            let (alg, _) = load_algebra(algebra)?;
            let l = parse_expr(lhs, &alg)?;
            let r = parse_expr(rhs, &alg)?;
            guard_degree(cli, &alg, &[&l, &r])?;
            let nl = normal_form(&l, &alg).map_err(usage)?;
            let nr = normal_form(&r, &alg).map_err(usage)?;
            let prod = nl.nmul(&nr).map_err(usage)?;
            guard_terms(cli, prod.to_free().num_terms())?;
            let rendered = prod.to_free().to_string();
            print_report(cli, &json!({ "product": rendered }), rendered.clone());
            Ok(true)
        }
        Cmd::Classify { algebra } => {
            let (alg, notes) = load_algebra(algebra)?;
            let report = families::classify(&alg);
            let mut text = format!(
                "H_{{{}}}({}, {})\n  skew PBW over K[t]: {}\n  skew PBW over K:    {}\n  quantum polynomial: {}\n  dimension-3 CY family: {}\n  gradings (w_x,w_y,w_t): {:?}",
                report.q,
                report.f,
                report.g,
                report.skew_pbw_over_kt,
                report.skew_pbw_over_k,
                report.quantum_polynomial,
                report.cy_dimension3_family,
                report.graded_with_weights,
            );
            if let Some(n) = report.noetherian_gha {
                text.push_str(&format!("\n  noetherian (as a generalized Heisenberg algebra): {n}"));
            }
            for a in &report.assumptions {
                text.push_str(&format!("\n  assuming {a}"));
            }
            for n in &notes {
                text.push_str(&format!("\n  note: {n}"));
            }
            print_report(cli, &report, text);
            Ok(true)
        }
        Cmd::VerifySkewpbw {
            algebra,
            ring,
            slice,
        } => {
            let (alg, _) = load_algebra(algebra)?;
            let mut claim = SkewPbwClaim::new(alg, parse_ring(ring)?);
            claim.maxdeg = *slice;
            let cert = skewpbw::verify_skew_pbw(&claim);
            let mut text = format!(
                "skew PBW extension of {} in ({}) on slice degree {}: {}",
                cert.ring,
                cert.vars.join(", "),
                cert.maxdeg,
                if cert.verdict { "VERIFIED" } else { "VIOLATED" }
            );
            text.push_str(&format!(
                "\n  bijective: {}  endomorphism type: {}",
                cert.bijective, cert.endomorphism_type
            ));
            for v in &cert.violations {
                text.push_str(&format!("\n  violation: {v}"));
            }
            for s in &cert.sigma_delta {
                text.push_str(&format!(
                    "\n  sigma_{}(t) = {}, delta_{}(t) = {}",
                    s.var, s.sigma_t, s.var, s.delta_t
                ));
            }
            let verdict = cert.verdict;
            print_report(cli, &cert, text);
            Ok(verdict)
        }
        Cmd::GradedCheck {
            algebra,
            ring,
            ring_weight,
        } => {
            let (alg, _) = load_algebra(algebra)?;
            let claim = SkewPbwClaim::new(alg, parse_ring(ring)?);
            let report = skewpbw::check_graded_extension(&claim, *ring_weight);
            let mut text = format!(
                "graded skew PBW extension at ring weight {}: {}",
                report.ring_weight,
                if report.graded { "YES" } else { "NO" }
            );
            text.push_str(&format!(
                "\n  condition (i): {}  condition (ii): {}  bijective: {}",
                report.condition_i, report.condition_ii, report.bijective
            ));
            for d in &report.details {
                text.push_str(&format!("\n  {d}"));
            }
            let verdict = report.graded;
            print_report(cli, &report, text);
            Ok(verdict)
        }
        Cmd::Hilbert {
            algebra,
            weights,
            max,
        } => {
            let (alg, _) = load_algebra(algebra)?;
            let parts: Vec<u32> = weights
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage("weights must be w_x,w_y,w_t".into()))?;
            if parts.len() != 3 {
                return Err(CliError::Usage("weights must be w_x,w_y,w_t".into()));
            }
            let dims = homology::hilbert_dims(&alg, (parts[0], parts[1], parts[2]), *max)
                .map_err(usage)?;
            let csv = dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            print_report(
                cli,
                &json!({ "weights": parts, "dims": dims }),
                csv,
            );
            Ok(true)
        }
        Cmd::KoszulCheck {
            algebra,
            max,
            trials,
        } => {
            let (alg, _) = load_algebra(algebra)?;
            let report = homology::koszul_numeric_check(
                &alg,
                *max,
                SpecOptions {
                    seed,
                    trials: *trials,
                },
                mode,
            )
            .map_err(usage)?;
            let verdict = report.verdict == homology::KoszulVerdict::Consistent;
            let text = format!(
                "koszul consistency to degree {}: {}\n  hilbert: {:?}\n  dual:    {:?}\n  residuals: {:?}\n  stable across {} specializations: {}",
                report.identity_checked_to,
                if verdict { "CONSISTENT" } else { "INCONSISTENT" },
                report.hilbert_dims,
                report.dual_dims,
                report.residuals,
                report.trials.len(),
                report.specialization_stable,
            );
            print_report(cli, &report, text);
            Ok(verdict)
        }
        Cmd::PotentialDerive { expr, wrt, params } => {
            let ps = infer_params_csv(params, &[expr])?;
            let phi = parse::parse_element(expr, &GenSet::txy(), &ps).map_err(usage)?;
            let d = potentials::cyclic_derivative_named(&phi, wrt).map_err(usage)?;
            let rendered = d.to_string();
            print_report(
                cli,
                &json!({ "wrt": wrt, "derivative": rendered }),
                rendered.clone(),
            );
            Ok(true)
        }
        Cmd::JacobianMatch { algebra } => {
            let (alg, _) = load_algebra(algebra)?;
            let report = potentials::match_jacobian(&alg).map_err(usage)?;
            let witness = report.span_match == Some(true);
            let mut text = format!("potential match: {:?}", report.verdict);
            if let Some(p) = &report.potential {
                text.push_str(&format!("\n  potential: {p}"));
            }
            for (name, d) in [
                ("d/dx", &report.derivative_x),
                ("d/dy", &report.derivative_y),
                ("d/dt", &report.derivative_t),
            ] {
                if let Some(d) = d {
                    text.push_str(&format!("\n  {name}: {d}"));
                }
            }
            if let Some(m) = report.span_match {
                text.push_str(&format!("\n  derivative span equals relation span: {m}"));
            }
            for h in &report.hypothesis_failures {
                text.push_str(&format!("\n  hypothesis failure: {h}"));
            }
            text.push_str(&format!("\n  caveat: {}", report.caveat));
            print_report(cli, &report, text);
            Ok(witness)
        }
        Cmd::VerifyHom { map, inverse } => {
            let m = load_genmap(map)?;
            let verdict = m.verify_hom().map_err(usage)?;
            let mut ok = verdict.is_valid();
            let mut text = match &verdict {
                heisenkit::morphisms::HomVerdict::Valid => "valid homomorphism".to_string(),
                heisenkit::morphisms::HomVerdict::Invalid {
                    relation,
                    image_normal_form,
                } => format!(
                    "invalid: relation {relation} maps to nonzero normal form {image_normal_form}"
                ),
            };
            let mut inverse_ok = None;
            if let Some(inv_src) = inverse {
                let minv = load_genmap(inv_src)?;
                let inv_verdict = minv.verify_hom().map_err(usage)?;
                let pair =
                    heisenkit::morphisms::verify_inverse_pair(&m, &minv).map_err(usage)?;
                inverse_ok = Some(inv_verdict.is_valid() && pair);
                ok = ok && inv_verdict.is_valid() && pair;
                text.push_str(&format!(
                    "\n  inverse valid and composites fix generators: {}",
                    inv_verdict.is_valid() && pair
                ));
            }
            print_report(
                cli,
                &json!({ "verdict": verdict, "inverse_pair": inverse_ok }),
                text,
            );
            Ok(ok)
        }
        Cmd::OneDimReps { algebra } => {
            let (alg, _) = load_algebra(algebra)?;
            let pres = Presentation::new(alg.gens(), None, alg.relations()).map_err(usage)?;
            let rc = heisenkit::engine::one_dim_rep_constraints(&pres).map_err(usage)?;
            let constraints: Vec<String> = rc.constraints.iter().map(|c| c.to_string()).collect();
            let text = format!(
                "fresh parameters: {}\nconstraints:\n  {}",
                rc.fresh.join(", "),
                constraints.join("\n  ")
            );
            print_report(
                cli,
                &json!({ "fresh": rc.fresh, "constraints": constraints }),
                text,
            );
            Ok(true)
        }
        Cmd::Fixtures { name, trials } => {
            let opts = FixtureOptions {
                seed,
                trials: *trials,
                mode,
            };
            if name == "all" {
                let summary = fixtures::run_all(&opts);
                let mut text = String::new();
                for f in &summary.fixtures {
                    text.push_str(&format!(
                        "{:<10} {}  ({}/{} checks)\n",
                        f.id,
                        if f.pass { "pass" } else { "FAIL" },
                        f.checks.iter().filter(|c| c.pass).count(),
                        f.checks.len()
                    ));
                }
                text.push_str(&format!(
                    "overall: {}",
                    if summary.pass { "pass" } else { "FAIL" }
                ));
                let pass = summary.pass;
                print_report(cli, &summary, text);
                Ok(pass)
            } else {
                let report = fixtures::run_fixture(name, &opts).ok_or_else(|| {
                    CliError::Usage(format!(
                        "unknown fixture `{name}` (known: {})",
                        fixtures::FIXTURE_IDS.join(", ")
                    ))
                })?;
                let mut text = format!("{}: {}\n  {}", report.id, if report.pass { "pass" } else { "FAIL" }, report.claim);
                for c in &report.checks {
                    text.push_str(&format!(
                        "\n  [{}] {}: {}",
                        if c.pass { "ok" } else { "FAIL" },
                        c.name,
                        c.details
                    ));
                }
                let pass = report.pass;
                print_report(cli, &report, text);
                Ok(pass)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Limit(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
