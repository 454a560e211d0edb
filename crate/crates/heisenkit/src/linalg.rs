//! Exact linear algebra: sparse reduced row echelon over a field, and dense
//! fraction-free elimination over the integer-polynomial ring.
//!
//! The sparse RREF is the workhorse for span comparison, membership tests
//! and kernels; rows are maps column → coefficient, so degree-sliced word
//! vectors (which are mostly zero) stay cheap. The Bareiss routine provides
//! an independent route to ranks without any field division.

use std::collections::BTreeMap;

use num::{BigRational, Zero};

use crate::scalars::{MPoly, Scalar};

/// Minimal field interface for elimination.
pub trait Fieldlike: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Fieldlike for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn div(&self, other: &Self) -> Self {
        self.div_ref(other).expect("division by zero in elimination")
    }
    fn neg(&self) -> Self {
        self.neg_ref()
    }
}

impl Fieldlike for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// A sparse row: column index → nonzero coefficient.
pub type SparseRow<T> = BTreeMap<usize, T>;

pub fn row_from_dense<T: Fieldlike>(v: &[T]) -> SparseRow<T> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn row_scale<T: Fieldlike>(row: &SparseRow<T>, c: &T) -> SparseRow<T> {
    row.iter().map(|(i, v)| (*i, v.mul(c))).collect()
}

/// `a - c*b`, dropping entries that cancel.
fn row_axpy<T: Fieldlike>(a: &SparseRow<T>, c: &T, b: &SparseRow<T>) -> SparseRow<T> {
    let mut out = a.clone();
    for (i, v) in b {
        let delta = c.mul(v);
        match out.remove(i) {
            Some(old) => {
                let nv = old.sub(&delta);
                if !nv.is_zero() {
                    out.insert(*i, nv);
                }
            }
            None => {
                out.insert(*i, delta.neg());
            }
        }
    }
    out
}

/// Reduced row echelon form of a sparse row list. Rows come back sorted by
/// pivot column with unit pivots; this is the canonical basis of the row
/// space, so two spans are equal iff their forms are identical.
pub struct Rref<T> {
    pub rows: Vec<SparseRow<T>>,
    pub pivots: Vec<usize>,
}

impl<T: Fieldlike> Rref<T> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the residual.
    pub fn reduce(&self, mut v: SparseRow<T>) -> SparseRow<T> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = v.get(&p).cloned() {
                v = row_axpy(&v, &c, row);
            }
        }
        v
    }

    /// True iff `v` lies in the row space.
    pub fn contains(&self, v: &SparseRow<T>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Coordinates of `v` in the reduced basis, if it lies in the span.
    pub fn coordinates(&self, mut v: SparseRow<T>) -> Option<Vec<T>> {
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            match v.get(&p).cloned() {
                Some(c) => {
                    v = row_axpy(&v, &c, row);
                    coords.push(c);
                }
                None => {
                    let pivot_val = row.get(&p).expect("pivot entry present");
                    coords.push(pivot_val.sub(pivot_val));
                }
            }
        }
        if v.is_empty() {
            Some(coords)
        } else {
            None
        }
    }
}

pub fn rref<T: Fieldlike>(rows: Vec<SparseRow<T>>) -> Rref<T> {
    let mut done: Vec<(usize, SparseRow<T>)> = Vec::new();
    let mut pending: Vec<SparseRow<T>> = rows;
    // reduce every pending row against the finished pivots once up front
    loop {
        for row in pending.iter_mut() {
            for (p, prow) in &done {
                if let Some(c) = row.get(p).cloned() {
                    *row = row_axpy(row, &c, prow);
                }
            }
        }
        pending.retain(|r| !r.is_empty());
        // pick the row with the smallest leading column (first on ties)
        let Some(best) = pending
            .iter()
            .enumerate()
            .min_by_key(|(i, r)| (*r.keys().next().unwrap(), *i))
            .map(|(i, _)| i)
        else {
            break;
        };
        let row = pending.swap_remove(best);
        let (&p, pv) = row.iter().next().unwrap();
        let one = pv.div(pv);
        let inv = one.div(pv);
        let norm = row_scale(&row, &inv);
        // back-eliminate the new pivot column from finished rows
        for (_, drow) in done.iter_mut() {
            if let Some(c) = drow.get(&p).cloned() {
                *drow = row_axpy(drow, &c, &norm);
            }
        }
        done.push((p, norm));
    }
    done.sort_by_key(|(p, _)| *p);
    let pivots = done.iter().map(|(p, _)| *p).collect();
    let rows = done.into_iter().map(|(_, r)| r).collect();
    Rref { rows, pivots }
}

/// Rank of a sparse row list.
pub fn rank<T: Fieldlike>(rows: Vec<SparseRow<T>>) -> usize {
    rref(rows).rank()
}

/// Basis of the right kernel `{ x : M x = 0 }` of a dense matrix, one sparse
/// row per free column.
pub fn nullspace<T: Fieldlike>(mat: &[Vec<T>], ncols: usize, one: &T) -> Vec<SparseRow<T>> {
    let sparse: Vec<SparseRow<T>> = mat.iter().map(|r| row_from_dense(r)).collect();
    let r = rref(sparse);
    let pivot_set: std::collections::BTreeSet<usize> = r.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v: SparseRow<T> = BTreeMap::new();
        v.insert(free, one.clone());
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            if let Some(c) = row.get(&free) {
                v.insert(p, c.neg());
            }
        }
        basis.push(v);
    }
    basis
}

/// Expresses `target` as a linear combination of `gens` (vectors over
/// columns `0..width`), returning the coefficients, or `None` when the
/// target lies outside the span. Marker columns above `width` track the
/// combination during elimination.
pub fn solve_combination<T: Fieldlike>(
    gens: &[SparseRow<T>],
    target: &SparseRow<T>,
    width: usize,
    one: &T,
) -> Option<Vec<T>> {
    let zero = one.sub(one);
    let augmented: Vec<SparseRow<T>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut row = g.clone();
            debug_assert!(g.keys().all(|&c| c < width));
            row.insert(width + i, one.clone());
            row
        })
        .collect();
    let r = rref(augmented);
    let mut v = target.clone();
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        if p >= width {
            continue;
        }
        if let Some(c) = v.get(&p).cloned() {
            v = row_axpy(&v, &c, row);
        }
    }
    if v.keys().any(|&c| c < width) {
        return None;
    }
    // residual marker entries record the negated combination
    let mut coeffs = vec![zero; gens.len()];
    for (&c, val) in &v {
        coeffs[c - width] = val.neg();
    }
    Some(coeffs)
}

/// Fraction-free Bareiss elimination over the integer-polynomial ring.
/// Returns the echelon matrix and its rank; every division is exact.
pub fn bareiss_echelon(mut m: Vec<Vec<MPoly>>) -> (Vec<Vec<MPoly>>, usize) {
    if m.is_empty() || m[0].is_empty() {
        return (m, 0);
    }
    let params = m[0][0].params().clone();
    let nrows = m.len();
    let ncols = m[0].len();
    let mut prev = MPoly::one(&params);
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..nrows {
            let mrc = m[r][col].clone();
            for c in col + 1..ncols {
                let num = &(&m[rank][col] * &m[r][c]) - &(&mrc * &m[rank][c]);
                m[r][c] = num
                    .div_exact(&prev)
                    .expect("inexact division in fraction-free elimination");
            }
            m[r][col] = MPoly::zero(&params);
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    (m, rank)
}

pub fn bareiss_rank(m: Vec<Vec<MPoly>>) -> usize {
    bareiss_echelon(m).1
}
