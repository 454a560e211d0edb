//! Free-algebra words, noncommutative polynomials and presentations.
//!
//! Words are index sequences into a shared generator list; elements map
//! words to scalars under degree-lexicographic order so that printing and
//! linear algebra are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{self, SparseRow};
use crate::scalars::{Params, ParamsRef, Scalar};

/// An ordered list of generator names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSet {
    names: Vec<String>,
}

pub type GensRef = Arc<GenSet>;

impl GenSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<GensRef, FreeAlgError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(FreeAlgError::BadGenerators(n.clone()));
            }
        }
        Ok(Arc::new(GenSet { names }))
    }

    /// The standard three-generator set `t, x, y` of the engine.
    pub fn txy() -> GensRef {
        GenSet::new(["t", "x", "y"]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A word in the generators: a sequence of indices. The empty word is the
/// multiplicative identity. Ordering is degree-lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Weighted degree under per-generator weights.
    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().map(|&i| weights[i as usize] as u64).sum()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("generator set mismatch")]
    GeneratorMismatch,
    #[error("invalid or duplicate generator `{0}`")]
    BadGenerators(String),
    #[error("element is not homogeneous: degrees {0} and {1} both occur")]
    NotHomogeneous(u64, u64),
    #[error("relation must be nonzero")]
    ZeroRelation,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error(transparent)]
    Scalar(#[from] crate::scalars::ScalarError),
}

/// A noncommutative polynomial: a finite scalar combination of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeElement {
    gens: GensRef,
    params: ParamsRef,
    terms: BTreeMap<Word, Scalar>,
}

impl FreeElement {
    pub fn zero(gens: &GensRef, params: &ParamsRef) -> FreeElement {
        FreeElement {
            gens: gens.clone(),
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(gens: &GensRef, params: &ParamsRef) -> FreeElement {
        FreeElement::scalar(gens, Scalar::one(params))
    }

    /// A scalar as the coefficient of the empty word.
    pub fn scalar(gens: &GensRef, c: Scalar) -> FreeElement {
        let params = c.params().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::empty(), c);
        }
        FreeElement {
            gens: gens.clone(),
            params,
            terms,
        }
    }

    pub fn generator(gens: &GensRef, params: &ParamsRef, idx: usize) -> FreeElement {
        assert!(idx < gens.len(), "generator index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Word(vec![idx as u8]), Scalar::one(params));
        FreeElement {
            gens: gens.clone(),
            params: params.clone(),
            terms,
        }
    }

    pub fn from_word(gens: &GensRef, word: Word, coeff: Scalar) -> FreeElement {
        let params = coeff.params().clone();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        FreeElement {
            gens: gens.clone(),
            params,
            terms,
        }
    }

    pub fn gens(&self) -> &GensRef {
        &self.gens
    }

    pub fn params(&self) -> &ParamsRef {
        &self.params
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value if every word is empty.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero(&self.params));
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Word::empty()) {
                return Some(c.clone());
            }
        }
        None
    }

    fn check_compatible(&self, other: &FreeElement) -> Result<(), FreeAlgError> {
        if self.gens.names() != other.gens.names() {
            return Err(FreeAlgError::GeneratorMismatch);
        }
        Ok(())
    }

    fn insert_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &FreeElement) -> FreeElement {
        self.check_compatible(other).expect("generator mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &FreeElement) -> FreeElement {
        self.check_compatible(other).expect("generator mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert_term(w.clone(), c.neg_ref());
        }
        out
    }

    pub fn neg_ref(&self) -> FreeElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg_ref();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> FreeElement {
        let mut out = FreeElement::zero(&self.gens, &self.params);
        if c.is_zero() {
            return out;
        }
        for (w, v) in &self.terms {
            out.insert_term(w.clone(), v.mul_ref(c));
        }
        out
    }

    /// Bilinear concatenation product.
    pub fn mul_checked(&self, other: &FreeElement) -> Result<FreeElement, FreeAlgError> {
        self.check_compatible(other)?;
        let mut out = FreeElement::zero(&self.gens, &self.params);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.insert_term(wa.concat(wb), ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    pub fn mul_ref(&self, other: &FreeElement) -> FreeElement {
        self.mul_checked(other).expect("generator mismatch")
    }

    pub fn pow(&self, mut n: u32) -> FreeElement {
        let mut base = self.clone();
        let mut acc = FreeElement::one(&self.gens, &self.params);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Word-degree of the element: maximum word length, `None` for zero.
    pub fn max_word_len(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Weighted degree if homogeneous.
    pub fn grade_of(&self, weights: &[u32]) -> Result<u64, FreeAlgError> {
        assert_eq!(weights.len(), self.gens.len(), "one weight per generator");
        let mut degree: Option<u64> = None;
        for w in self.terms.keys() {
            let d = w.weighted_degree(weights);
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => return Err(FreeAlgError::NotHomogeneous(d0, d)),
                _ => {}
            }
        }
        Ok(degree.unwrap_or(0))
    }

    /// Substitutes an image element for each generator; coefficients are
    /// lifted into the image parameter set.
    pub fn subst(&self, images: &[FreeElement]) -> Result<FreeElement, FreeAlgError> {
        assert_eq!(images.len(), self.gens.len(), "one image per generator");
        let (tgens, tparams) = match images.first() {
            Some(first) => (first.gens.clone(), first.params.clone()),
            None => (self.gens.clone(), self.params.clone()),
        };
        let mut out = FreeElement::zero(&tgens, &tparams);
        for (w, c) in &self.terms {
            let mut prod = FreeElement::scalar(&tgens, c.lift(&tparams)?);
            for &i in &w.0 {
                prod = prod.mul_checked(&images[i as usize])?;
            }
            out = out.add_ref(&prod);
        }
        Ok(out)
    }

    /// Substitutes a commuting scalar for each generator.
    pub fn subst_scalars(&self, values: &[Scalar]) -> Result<Scalar, FreeAlgError> {
        assert_eq!(values.len(), self.gens.len(), "one value per generator");
        let tparams = match values.first() {
            Some(v) => v.params().clone(),
            None => self.params.clone(),
        };
        let mut acc = Scalar::zero(&tparams);
        for (w, c) in &self.terms {
            let mut prod = c.lift(&tparams)?;
            for &i in &w.0 {
                prod = prod.mul_ref(&values[i as usize]);
            }
            acc = acc.add_ref(&prod);
        }
        Ok(acc)
    }

    /// Specializes all coefficients at a rational assignment.
    pub fn specialize(
        &self,
        a: &crate::scalars::Assignment,
    ) -> Result<FreeElement, crate::scalars::ScalarError> {
        let empty = Params::empty();
        let mut out = FreeElement::zero(&self.gens, &empty);
        for (w, c) in &self.terms {
            let v = c.specialize(a)?;
            out.insert_term(w.clone(), Scalar::from_rational(&empty, &v));
        }
        Ok(out)
    }

    /// Re-expresses coefficients over a superset parameter list.
    pub fn lift(&self, new_params: &ParamsRef) -> Result<FreeElement, FreeAlgError> {
        let mut out = FreeElement::zero(&self.gens, new_params);
        for (w, c) in &self.terms {
            out.insert_term(w.clone(), c.lift(new_params)?);
        }
        Ok(out)
    }
}

impl std::ops::Add for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        self.add_ref(rhs)
    }
}

impl std::ops::Sub for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        self.sub_ref(rhs)
    }
}

impl std::ops::Mul for &FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        self.mul_ref(rhs)
    }
}

impl std::ops::Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        self.neg_ref()
    }
}

fn format_word(gens: &GenSet, w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut run_letter = w.0[0];
    let mut run_len = 1usize;
    let flush = |parts: &mut Vec<String>, letter: u8, len: usize| {
        let name = gens.name(letter as usize);
        if len == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{len}"));
        }
    };
    for &l in &w.0[1..] {
        if l == run_letter {
            run_len += 1;
        } else {
            flush(&mut parts, run_letter, run_len);
            run_letter = l;
            run_len = 1;
        }
    }
    flush(&mut parts, run_letter, run_len);
    parts.join("*")
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            let neg = c.display_negative();
            let mag = c.abs_display();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coef = if mag.is_one() && !w.is_empty() {
                String::new()
            } else if mag.as_rational().map(|r| num::One::is_one(r.denom())).unwrap_or(false) {
                // plain integer: print bare
                mag.to_string()
            } else {
                format!("{{{mag}}}")
            };
            let word = if w.is_empty() {
                String::new()
            } else {
                format_word(&self.gens, w)
            };
            match (coef.is_empty(), word.is_empty()) {
                (true, false) => write!(f, "{word}")?,
                (false, true) => write!(f, "{coef}")?,
                (false, false) => write!(f, "{coef}*{word}")?,
                (true, true) => unreachable!("empty term"),
            }
        }
        Ok(())
    }
}

/// Generators with weights plus a relation list: the universal input format
/// for algebras given by generators and relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub gens: GensRef,
    pub weights: Vec<u32>,
    pub relations: Vec<FreeElement>,
}

impl Presentation {
    pub fn new(
        gens: GensRef,
        weights: Option<Vec<u32>>,
        relations: Vec<FreeElement>,
    ) -> Result<Presentation, FreeAlgError> {
        let weights = weights.unwrap_or_else(|| vec![1; gens.len()]);
        assert_eq!(weights.len(), gens.len(), "one weight per generator");
        for r in &relations {
            if r.is_zero() {
                return Err(FreeAlgError::ZeroRelation);
            }
            if r.gens().names() != gens.names() {
                return Err(FreeAlgError::GeneratorMismatch);
            }
        }
        Ok(Presentation {
            gens,
            weights,
            relations,
        })
    }
}

/// Enumerates all words of length ≤ `maxdeg`, in degree-lex order, and the
/// rank of a word inside that enumeration.
pub fn slice_dimension(ngens: usize, maxdeg: usize) -> usize {
    let mut dim = 0usize;
    let mut level = 1usize;
    for _ in 0..=maxdeg {
        dim += level;
        level *= ngens;
    }
    dim
}

pub fn word_rank(ngens: usize, w: &Word) -> usize {
    let mut offset = 0usize;
    let mut level = 1usize;
    for _ in 0..w.len() {
        offset += level;
        level *= ngens;
    }
    let mut idx = 0usize;
    for &l in &w.0 {
        idx = idx * ngens + l as usize;
    }
    offset + idx
}

fn element_row(e: &FreeElement, maxdeg: usize) -> SparseRow<Scalar> {
    let n = e.gens().len();
    let mut row = SparseRow::new();
    for (w, c) in e.terms() {
        assert!(w.len() <= maxdeg, "word degree exceeds slice bound");
        row.insert(word_rank(n, w), c.clone());
    }
    row
}

fn row_to_element(
    gens: &GensRef,
    params: &ParamsRef,
    row: &SparseRow<Scalar>,
    maxdeg: usize,
) -> FreeElement {
    // invert word_rank by enumerating ranks per length
    let n = gens.len();
    let mut out = FreeElement::zero(gens, params);
    for (&rank, c) in row {
        let mut offset = 0usize;
        let mut level = 1usize;
        let mut len = 0usize;
        while rank >= offset + level {
            offset += level;
            level *= n;
            len += 1;
            assert!(len <= maxdeg, "rank outside slice");
        }
        let mut idx = rank - offset;
        let mut letters = vec![0u8; len];
        for slot in (0..len).rev() {
            letters[slot] = (idx % n) as u8;
            idx /= n;
        }
        out.insert_term(Word(letters), c.clone());
    }
    out
}

/// Outcome of a span comparison: the verdict and the canonical reduced
/// bases of both sides.
#[derive(Debug, Clone)]
pub struct SpanReport {
    pub equal: bool,
    pub basis_lhs: Vec<FreeElement>,
    pub basis_rhs: Vec<FreeElement>,
}

/// Compares the scalar-linear spans of two element lists inside the
/// degree-≤ `maxdeg` slice. Both lists must draw from the same generators.
pub fn span_equal(
    s1: &[FreeElement],
    s2: &[FreeElement],
    maxdeg: usize,
) -> Result<SpanReport, FreeAlgError> {
    let (gens, params) = match s1.first().or_else(|| s2.first()) {
        Some(e) => (e.gens().clone(), e.params().clone()),
        None => {
            return Ok(SpanReport {
                equal: true,
                basis_lhs: Vec::new(),
                basis_rhs: Vec::new(),
            })
        }
    };
    for e in s1.iter().chain(s2) {
        if e.gens().names() != gens.names() {
            return Err(FreeAlgError::GeneratorMismatch);
        }
        if e.max_word_len().unwrap_or(0) > maxdeg {
            return Err(FreeAlgError::NotHomogeneous(
                e.max_word_len().unwrap_or(0) as u64,
                maxdeg as u64,
            ));
        }
    }
    let rows1: Vec<_> = s1.iter().map(|e| element_row(e, maxdeg)).collect();
    let rows2: Vec<_> = s2.iter().map(|e| element_row(e, maxdeg)).collect();
    let r1 = linalg::rref(rows1);
    let r2 = linalg::rref(rows2);
    let equal = r1.pivots == r2.pivots && r1.rows == r2.rows;
    Ok(SpanReport {
        equal,
        basis_lhs: r1
            .rows
            .iter()
            .map(|r| row_to_element(&gens, &params, r, maxdeg))
            .collect(),
        basis_rhs: r2
            .rows
            .iter()
            .map(|r| row_to_element(&gens, &params, r, maxdeg))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;
    use crate::scalars::Params;

    fn ctx() -> (GensRef, ParamsRef) {
        (GenSet::txy(), Params::new(["p", "q"]).unwrap())
    }

    fn el(s: &str) -> FreeElement {
        let (gens, params) = ctx();
        parse::parse_element(s, &gens, &params).unwrap()
    }

    #[test]
    fn product_of_generators() {
        let e = el("x*y");
        assert_eq!(e.to_string(), "x*y");
        let dist = el("(x+y)*t");
        assert_eq!(dist, el("x*t + y*t"));
    }

    #[test]
    fn formal_expansion() {
        let e = el("(y*x - {q}*x*y)*x");
        assert_eq!(e, el("y*x*x - {q}*x*y*x"));
        assert_eq!(e.to_string(), "y*x^2 - {q}*x*y*x");
    }

    #[test]
    fn grade_of_examples() {
        // y*x - q*x*y - t^2 with all weights 1 is homogeneous of degree 2
        let e = el("y*x - {q}*x*y - t^2");
        assert_eq!(e.grade_of(&[1, 1, 1]).unwrap(), 2);
        // y*x - q*x*y - t with weight t=2 is homogeneous of degree 2
        let e2 = el("y*x - {q}*x*y - t");
        assert_eq!(e2.grade_of(&[2, 1, 1]).unwrap(), 2);
        // but with all weights 1 it mixes degrees 2 and 1
        assert!(matches!(
            e2.grade_of(&[1, 1, 1]),
            Err(FreeAlgError::NotHomogeneous(_, _))
        ));
    }

    #[test]
    fn grade_additivity() {
        let a = el("x*y + t*t");
        let b = el("y");
        let w = [1, 1, 1];
        let prod = &a * &b;
        assert_eq!(
            prod.grade_of(&w).unwrap(),
            a.grade_of(&w).unwrap() + b.grade_of(&w).unwrap()
        );
    }

    #[test]
    fn span_equal_scaling_and_difference() {
        // {y*x - x*y - t} vs {2*(y*x - x*y - t)}: equal spans
        let s1 = vec![el("y*x - x*y - t")];
        let s2 = vec![el("2*y*x - 2*x*y - 2*t")];
        assert!(span_equal(&s1, &s2, 3).unwrap().equal);
        // {y*x - x*y} vs {y*x - x*y - t}: different
        let s3 = vec![el("y*x - x*y")];
        let s4 = vec![el("y*x - x*y - t")];
        assert!(!span_equal(&s3, &s4, 3).unwrap().equal);
    }

    #[test]
    fn span_equal_is_symmetric_and_reflexive() {
        let s1 = vec![el("y*t - {p}*t*y"), el("t*x - {p}*x*t")];
        let s2 = vec![el("t*x - {p}*x*t"), el("{2}*y*t - {2*p}*t*y")];
        let fwd = span_equal(&s1, &s2, 2).unwrap();
        let bwd = span_equal(&s2, &s1, 2).unwrap();
        assert!(fwd.equal && bwd.equal);
        assert!(span_equal(&s1, &s1, 2).unwrap().equal);
    }

    #[test]
    fn word_rank_roundtrip() {
        let n = 3usize;
        for len in 0..4usize {
            let count = n.pow(len as u32);
            for idx in 0..count {
                let mut v = vec![0u8; len];
                let mut k = idx;
                for slot in (0..len).rev() {
                    v[slot] = (k % n) as u8;
                    k /= n;
                }
                let w = Word(v);
                let r = word_rank(n, &w);
                assert!(r < slice_dimension(n, 4));
            }
        }
        assert_eq!(slice_dimension(3, 2), 1 + 3 + 9);
    }

    #[test]
    fn free_mul_associative_random() {
        let (gens, params) = ctx();
        let p = Scalar::param(&params, "p").unwrap();
        let a = el("x*y + t").scale(&p);
        let b = el("y - {q}*t*x");
        let c = el("t + 2");
        let _ = gens;
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}
