//! Gradings, Hilbert functions, quadratic duals and the numerical Koszul
//! consistency check.
//!
//! Hilbert functions come from counting canonical-basis monomials per
//! weighted degree. The quadratic dual is computed degreewise as the
//! intersection `(A^!)_n = ∩ (V*)^{⊗i} ⊗ R^⊥ ⊗ (V*)^{⊗(n-2-i)}` by exact
//! linear algebra; the Koszul check then verifies the convolution identity
//! `Σ (-1)^i dim(A^!)_i · dim A_{n-i} = δ_{n,0}`. This is a necessary
//! criterion: reports say "consistent", never "Koszul".

use std::collections::BTreeMap;

use num::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::AlgebraRef;
use crate::exec::{self, ExecMode};
use crate::freealg::Presentation;
use crate::linalg::{self, Fieldlike, SparseRow};
use crate::scalars::Scalar;
use crate::specialize::{self, SpecOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("weights do not make every defining relation homogeneous")]
    NotGraded,
    #[error("relations are not homogeneous quadratic under weights all 1")]
    NotQuadratic,
    #[error(transparent)]
    Scalar(#[from] crate::scalars::ScalarError),
}

/// Weight triple `(w_x, w_y, w_t)`.
pub type Weights = (u32, u32, u32);

fn weight_vector(w: Weights) -> [u32; 3] {
    // generator order of the engine is (t, x, y)
    [w.2, w.0, w.1]
}

/// True iff all defining relations are homogeneous under the weights.
pub fn weights_admissible(alg: &AlgebraRef, w: Weights) -> bool {
    let wv = weight_vector(w);
    alg.relations().iter().all(|r| r.grade_of(&wv).is_ok())
}

/// All positive weight triples up to `max_weight` making every defining
/// relation homogeneous, in lexicographic order.
pub fn find_gradings(alg: &AlgebraRef, max_weight: u32) -> Vec<Weights> {
    let mut out = Vec::new();
    for wx in 1..=max_weight {
        for wy in 1..=max_weight {
            for wt in 1..=max_weight {
                if weights_admissible(alg, (wx, wy, wt)) {
                    out.push((wx, wy, wt));
                }
            }
        }
    }
    out
}

/// Dimensions of the graded slices `A_0 .. A_n`: counts of basis monomials
/// `x^i t^j y^k` with `i·w_x + j·w_t + k·w_y = n`.
pub fn hilbert_dims(alg: &AlgebraRef, w: Weights, n_max: usize) -> Result<Vec<u64>, HomologyError> {
    if !weights_admissible(alg, w) {
        return Err(HomologyError::NotGraded);
    }
    let (wx, wy, wt) = (w.0 as usize, w.1 as usize, w.2 as usize);
    let mut dims = vec![0u64; n_max + 1];
    for i in 0..=(n_max / wx) {
        for j in 0..=((n_max - i * wx) / wt) {
            for k in 0..=((n_max - i * wx - j * wt) / wy) {
                let d = i * wx + j * wt + k * wy;
                dims[d] += 1;
            }
        }
    }
    Ok(dims)
}

/// Quadratic relation data: coefficient vectors in the basis of two-letter
/// words, row per relation.
fn quadratic_rows<T, F>(pres: &Presentation, to_field: &F) -> Result<Vec<Vec<T>>, HomologyError>
where
    T: Fieldlike,
    F: Fn(&Scalar) -> Result<T, HomologyError>,
{
    let n = pres.gens.len();
    let mut rows = Vec::with_capacity(pres.relations.len());
    for rel in &pres.relations {
        if rel.grade_of(&vec![1; n]) != Ok(2) {
            return Err(HomologyError::NotQuadratic);
        }
        let mut row = vec![to_field(&Scalar::zero(rel.params()))?; n * n];
        for (w, c) in rel.terms() {
            let (a, b) = (w.0[0] as usize, w.0[1] as usize);
            row[a * n + b] = to_field(c)?;
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Dimensions `dim (A^!)_0 .. dim (A^!)_n` of the quadratic dual, computed
/// over an arbitrary exact field.
fn dual_dims_generic<T: Fieldlike>(
    rel_rows: Vec<Vec<T>>,
    ngens: usize,
    n_max: usize,
    one: T,
) -> Vec<u64> {
    let mut dims = vec![0u64; n_max + 1];
    dims[0] = 1;
    if n_max >= 1 {
        dims[1] = ngens as u64;
    }
    if n_max < 2 {
        return dims;
    }
    // dim (A^!)_n = dim ∩_i V^{⊗i} ⊗ R ⊗ V^{⊗(n-2-i)}, computed by
    // intersecting one shift at a time: X_2 = R, and
    // X_m = (X_{m-1} ⊗ V) ∩ (V^{⊗(m-2)} ⊗ R), the membership in the second
    // factor expressed as pairing to zero with a basis of R^⊥.
    let rel_sparse: Vec<SparseRow<T>> = rel_rows.iter().map(|r| linalg::row_from_dense(r)).collect();
    let mut basis: Vec<SparseRow<T>> = linalg::rref(rel_sparse).rows;
    dims[2] = basis.len() as u64;
    let perp: Vec<SparseRow<T>> = linalg::nullspace(&rel_rows, ngens * ngens, &one);

    for m in 3..=n_max {
        if basis.is_empty() {
            break;
        }
        // candidates b_a ⊗ e_j; the trailing two-letter block over every
        // prefix must lie in R, i.e. pair to zero with every R^⊥ vector
        let unknowns = basis.len() * ngens;
        let mut constraint_rows: Vec<SparseRow<T>> = Vec::new();
        let mut row_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (a, b) in basis.iter().enumerate() {
            for (&word, coeff) in b.iter() {
                // word indexes a length-(m-1) word; split as prefix·v
                let prefix = word / ngens;
                let v = word % ngens;
                for (xi_idx, xi) in perp.iter().enumerate() {
                    for (&vw, xc) in xi.iter() {
                        if vw / ngens != v {
                            continue;
                        }
                        let j = vw % ngens;
                        let row_key = (prefix, xi_idx);
                        let next = row_index.len();
                        let idx = *row_index.entry(row_key).or_insert(next);
                        if constraint_rows.len() <= idx {
                            constraint_rows.resize(idx + 1, SparseRow::new());
                        }
                        let col = a * ngens + j;
                        let entry = constraint_rows[idx].remove(&col);
                        let add = coeff.mul(xc);
                        let nv = match entry {
                            Some(old) => old.add(&add),
                            None => add,
                        };
                        if !nv.is_zero() {
                            constraint_rows[idx].insert(col, nv);
                        }
                    }
                }
            }
        }
        let dense: Vec<Vec<T>> = constraint_rows
            .iter()
            .map(|r| {
                let mut v = vec![one.sub(&one); unknowns];
                for (&c, val) in r {
                    v[c] = val.clone();
                }
                v
            })
            .collect();
        let kernel = linalg::nullspace(&dense, unknowns, &one);
        // expand kernel coordinates back into word vectors of length m
        let mut new_basis: Vec<SparseRow<T>> = Vec::new();
        for combo in kernel {
            let mut vec_m: SparseRow<T> = SparseRow::new();
            for (&col, c) in combo.iter() {
                let a = col / ngens;
                let j = col % ngens;
                for (&word, bc) in basis[a].iter() {
                    let w_new = word * ngens + j;
                    let add = c.mul(bc);
                    let entry = vec_m.remove(&w_new);
                    let nv = match entry {
                        Some(old) => old.add(&add),
                        None => add,
                    };
                    if !nv.is_zero() {
                        vec_m.insert(w_new, nv);
                    }
                }
            }
            if !vec_m.is_empty() {
                new_basis.push(vec_m);
            }
        }
        dims[m] = new_basis.len() as u64;
        basis = new_basis;
    }
    dims
}

/// Dual dimensions over the symbolic coefficient field.
pub fn quadratic_dual_dims_symbolic(
    pres: &Presentation,
    n_max: usize,
) -> Result<Vec<u64>, HomologyError> {
    let params = pres
        .relations
        .first()
        .map(|r| r.params().clone())
        .unwrap_or_else(crate::scalars::Params::empty);
    let rows = quadratic_rows(pres, &|c: &Scalar| Ok(c.clone()))?;
    let one = Scalar::one(&params);
    Ok(dual_dims_generic(rows, pres.gens.len(), n_max, one))
}

/// Dual dimensions at one rational specialization.
pub fn quadratic_dual_dims_at(
    pres: &Presentation,
    n_max: usize,
    assignment: &crate::scalars::Assignment,
) -> Result<Vec<u64>, HomologyError> {
    let rows = quadratic_rows(pres, &|c: &Scalar| Ok(c.specialize(assignment)?))?;
    let one = BigRational::from_integer(1.into());
    Ok(dual_dims_generic(rows, pres.gens.len(), n_max, one))
}

/// Structured outcome of the numerical Koszul criterion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KoszulReport {
    pub weights: Weights,
    pub hilbert_dims: Vec<u64>,
    /// consensus dual dimensions across trials
    pub dual_dims: Vec<u64>,
    /// dual dimensions per specialization trial, with the assignment used
    pub trials: Vec<KoszulTrial>,
    /// all trials produced identical dual dimensions
    pub specialization_stable: bool,
    pub identity_checked_to: usize,
    /// convolution residuals `Σ (-1)^i a_i b_{n-i}`, expected `1, 0, 0, …`
    pub residuals: Vec<i64>,
    pub verdict: KoszulVerdict,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KoszulTrial {
    pub assignment: String,
    pub dual_dims: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KoszulVerdict {
    Consistent,
    Inconsistent,
}

/// Convolution residuals of the two dimension sequences.
pub fn convolution_residuals(dual: &[u64], hilbert: &[u64], n_max: usize) -> Vec<i64> {
    (0..=n_max)
        .map(|n| {
            let mut acc: i64 = 0;
            for i in 0..=n {
                let a = *dual.get(i).unwrap_or(&0) as i64;
                let b = *hilbert.get(n - i).unwrap_or(&0) as i64;
                let term = a * b;
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Runs the numerical Koszul criterion at weights all 1: Hilbert dimensions
/// from basis counting, dual dimensions at `opts.trials` random
/// specializations, and the convolution identity up to `n_max`.
pub fn koszul_numeric_check(
    alg: &AlgebraRef,
    n_max: usize,
    opts: SpecOptions,
    mode: ExecMode,
) -> Result<KoszulReport, HomologyError> {
    let weights = (1, 1, 1);
    if !weights_admissible(alg, weights) {
        return Err(HomologyError::NotGraded);
    }
    let pres = Presentation::new(alg.gens(), None, alg.relations())
        .expect("defining relations are nonzero");
    let hilbert = hilbert_dims(alg, weights, n_max)?;

    // draw assignments sequentially for determinism, then evaluate trials
    // in the requested execution mode
    let params = alg.params().clone();
    let mut rng = specialize::rng_from_seed(opts.seed);
    let constraints = specialize::genericity_constraints(alg);
    let assignments: Vec<_> = (0..opts.trials.max(1))
        .map(|_| specialize::random_assignment(&params, &mut rng, &constraints))
        .collect();
    let trials: Vec<KoszulTrial> = exec::map_items(mode, assignments, |a| {
        let dims = quadratic_dual_dims_at(&pres, n_max, &a)
            .expect("quadratic relations specialize cleanly");
        KoszulTrial {
            assignment: a.to_string(),
            dual_dims: dims,
        }
    });
    let dual = trials[0].dual_dims.clone();
    let stable = trials.iter().all(|t| t.dual_dims == dual);
    let residuals = convolution_residuals(&dual, &hilbert, n_max);
    let identity_ok = residuals
        .iter()
        .enumerate()
        .all(|(n, &r)| if n == 0 { r == 1 } else { r == 0 });
    let verdict = if identity_ok && stable {
        KoszulVerdict::Consistent
    } else {
        KoszulVerdict::Inconsistent
    };
    Ok(KoszulReport {
        weights,
        hilbert_dims: hilbert,
        dual_dims: dual,
        trials,
        specialization_stable: stable,
        identity_checked_to: n_max,
        residuals,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Qgha;
    use crate::parse;
    use crate::scalars::{Params, ParamsRef};

    fn qgha(q: &str, f: &str, g: &str, ps: &ParamsRef) -> AlgebraRef {
        Qgha::new(
            parse::parse_scalar(q, ps).unwrap(),
            parse::parse_tpoly(f, ps).unwrap(),
            parse::parse_tpoly(g, ps).unwrap(),
        )
    }

    fn hayashi() -> AlgebraRef {
        let ps = Params::new(["p", "q"]).unwrap();
        qgha("q", "t/p", "t^2", &ps)
    }

    fn gaddis() -> AlgebraRef {
        let ps = Params::new(["p", "q"]).unwrap();
        qgha("q", "t/p", "t", &ps)
    }

    #[test]
    fn gradings_of_named_families() {
        // two-parameter family with g = t^2 admits weights all 1
        assert!(find_gradings(&hayashi(), 2).contains(&(1, 1, 1)));
        // with g = t it needs w_t = w_x + w_y
        let g = find_gradings(&gaddis(), 2);
        assert!(g.contains(&(1, 1, 2)));
        assert!(!g.contains(&(1, 1, 1)));
        // inhomogeneous structure polynomial: no grading at all
        let ps = Params::empty();
        let none = qgha("1", "t + 1", "1", &ps);
        assert!(find_gradings(&none, 4).is_empty());
    }

    #[test]
    fn hilbert_examples() {
        // weights all 1: binomial growth C(n+2, 2); oracle is the
        // independent count of {(i,j,k) : i+j+k = n}
        let dims = hilbert_dims(&hayashi(), (1, 1, 1), 4).unwrap();
        assert_eq!(dims, vec![1, 3, 6, 10, 15]);
        for (n, &d) in dims.iter().enumerate() {
            let n = n as u64;
            assert_eq!(d, (n + 1) * (n + 2) / 2);
        }

        // weights (1,1,2): partitions with one part even
        let dims = hilbert_dims(&gaddis(), (1, 1, 2), 4).unwrap();
        assert_eq!(dims, vec![1, 2, 4, 6, 9]);

        // n = 0 is the connected degree
        assert_eq!(hilbert_dims(&hayashi(), (1, 1, 1), 0).unwrap(), vec![1]);

        // inadmissible weights error out
        assert!(matches!(
            hilbert_dims(&gaddis(), (1, 1, 1), 4),
            Err(HomologyError::NotGraded)
        ));
    }

    #[test]
    fn hilbert_series_with_half_weight_oracle() {
        // coefficients of 1/((1-s)^2 (1-s^2)) up to n = 12, by series product
        let mut expect = vec![0u64; 13];
        for m in 0..=6usize {
            for r in 0..=(12 - 2 * m) {
                expect[2 * m + r] += (r + 1) as u64;
            }
        }
        let dims = hilbert_dims(&gaddis(), (1, 1, 2), 12).unwrap();
        assert_eq!(dims, expect);
    }

    #[test]
    fn dual_dims_of_quadratic_families() {
        // symbolic: 1, 3, 3, 1, 0, 0 for the two-parameter family
        let alg = hayashi();
        let pres = Presentation::new(alg.gens(), None, alg.relations()).unwrap();
        let dims = quadratic_dual_dims_symbolic(&pres, 6).unwrap();
        assert_eq!(dims, vec![1, 3, 3, 1, 0, 0, 0]);

        // commutative polynomial algebra: dual is the exterior algebra
        let ps = Params::empty();
        let comm = qgha("1", "t", "0", &ps);
        let pres = Presentation::new(comm.gens(), None, comm.relations()).unwrap();
        let dims = quadratic_dual_dims_symbolic(&pres, 5).unwrap();
        assert_eq!(dims, vec![1, 3, 3, 1, 0, 0]);

        // specialized route agrees with the symbolic one
        let alg2 = {
            let ps = Params::new(["p", "c"]).unwrap();
            qgha("1/p", "p*t", "c*t^2", &ps)
        };
        let pres2 = Presentation::new(alg2.gens(), None, alg2.relations()).unwrap();
        let sym = quadratic_dual_dims_symbolic(&pres2, 5).unwrap();
        let mut rng = specialize::rng_from_seed(9);
        let constraints = specialize::definedness_constraints(&alg2);
        let a = specialize::random_assignment(alg2.params(), &mut rng, &constraints);
        let spec = quadratic_dual_dims_at(&pres2, 5, &a).unwrap();
        assert_eq!(sym, spec);
        assert_eq!(sym, vec![1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn dual_rejects_nonquadratic() {
        let alg = gaddis();
        let pres = Presentation::new(alg.gens(), None, alg.relations()).unwrap();
        assert!(matches!(
            quadratic_dual_dims_symbolic(&pres, 4),
            Err(HomologyError::NotQuadratic)
        ));
    }

    #[test]
    fn koszul_consistency() {
        let report = koszul_numeric_check(
            &hayashi(),
            6,
            SpecOptions { seed: 7, trials: 3 },
            ExecMode::Sequential,
        )
        .unwrap();
        assert_eq!(report.verdict, KoszulVerdict::Consistent);
        assert!(report.specialization_stable);
        assert_eq!(report.dual_dims[..5], [1, 3, 3, 1, 0]);
        assert_eq!(report.residuals[0], 1);
        assert!(report.residuals[1..].iter().all(|&r| r == 0));

        // injected fault: perturbed dual dimensions break the identity at n = 2
        let residuals = convolution_residuals(&[1, 3, 4, 1], &report.hilbert_dims, 6);
        assert_eq!(residuals[0], 1);
        assert_ne!(residuals[2], 0);
    }

    #[test]
    fn dual_dims_big_matrix_oracle() {
        // independent route: dim (A^!)_m = 3^m - rank of the span of all
        // shifted relation rows V^i ⊗ R ⊗ V^j inside degree m
        let alg = hayashi();
        let pres = Presentation::new(alg.gens(), None, alg.relations()).unwrap();
        let mut rng = specialize::rng_from_seed(21);
        let constraints = specialize::definedness_constraints(&alg);
        let a = specialize::random_assignment(alg.params(), &mut rng, &constraints);
        let dims = quadratic_dual_dims_at(&pres, 5, &a).unwrap();

        let n = 3usize;
        let rel_rows = quadratic_rows(&pres, &|c: &Scalar| {
            Ok::<BigRational, HomologyError>(c.specialize(&a).unwrap())
        })
        .unwrap();
        // dual components annihilate every shift of R^⊥, so
        // dim (A^!)_m = n^m - rank of the span of all shifted R^⊥ rows
        let one = BigRational::from_integer(1.into());
        let perp = linalg::nullspace(&rel_rows, n * n, &one);
        for m in 2..=5usize {
            let mut rows: Vec<SparseRow<BigRational>> = Vec::new();
            for pos in 0..=(m - 2) {
                let left = n.pow(pos as u32);
                let right = n.pow((m - 2 - pos) as u32);
                for xi in &perp {
                    for l in 0..left {
                        for r in 0..right {
                            let mut row: SparseRow<BigRational> = SparseRow::new();
                            for (&w2, c) in xi.iter() {
                                // word = l · w2 · r in base n
                                let idx = (l * n * n + w2) * right + r;
                                row.insert(idx, c.clone());
                            }
                            rows.push(row);
                        }
                    }
                }
            }
            let rank = linalg::rank(rows);
            let expect = n.pow(m as u32) - rank;
            assert_eq!(dims[m] as usize, expect, "degree {m}");
        }
    }
}
