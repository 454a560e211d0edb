//! Sparse multivariate polynomials over the integers.
//!
//! Terms are keyed by exponent vectors under graded lexicographic order, so
//! iteration order, leading terms and printed forms are all deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use super::params::{Assignment, ParamsRef};

/// Exponent vector with graded-lex ordering (total degree first, then
/// lexicographic with the first parameter strongest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Expo(pub Vec<u16>);

impl Expo {
    fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn mul(&self, other: &Expo) -> Expo {
        Expo(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial with arbitrary-precision integer coefficients
/// in a fixed parameter set. Zero coefficients are never stored.
#[derive(Debug, Clone)]
pub struct MPoly {
    params: ParamsRef,
    terms: BTreeMap<Expo, BigInt>,
}

impl MPoly {
    pub fn zero(params: &ParamsRef) -> Self {
        MPoly {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(params: &ParamsRef, c: BigInt) -> Self {
        let mut p = MPoly::zero(params);
        if !c.is_zero() {
            p.terms.insert(Expo(vec![0; params.len()]), c);
        }
        p
    }

    pub fn one(params: &ParamsRef) -> Self {
        MPoly::constant(params, BigInt::one())
    }

    pub fn from_int(params: &ParamsRef, c: i64) -> Self {
        MPoly::constant(params, BigInt::from(c))
    }

    /// The polynomial consisting of the single parameter `idx`.
    pub fn var(params: &ParamsRef, idx: usize) -> Self {
        assert!(idx < params.len(), "parameter index out of range");
        let mut e = vec![0u16; params.len()];
        e[idx] = 1;
        let mut p = MPoly::zero(params);
        p.terms.insert(Expo(e), BigInt::one());
        p
    }

    pub fn params(&self) -> &ParamsRef {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().total() == 0)
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Expo::total)
    }

    /// Degree in the single parameter `idx`, or `None` for the zero poly.
    pub fn degree_in(&self, idx: usize) -> Option<u16> {
        self.terms.keys().map(|e| e.0[idx]).max()
    }

    /// Leading coefficient under graded-lex order; zero for the zero poly.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn assert_same_params(&self, other: &MPoly) {
        assert_eq!(
            self.params.names(),
            other.params.names(),
            "parameter set mismatch"
        );
    }

    fn insert_term(&mut self, e: Expo, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_ref(&self, other: &MPoly) -> MPoly {
        self.assert_same_params(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &MPoly) -> MPoly {
        self.assert_same_params(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul_ref(&self, other: &MPoly) -> MPoly {
        self.assert_same_params(other);
        let mut out = MPoly::zero(&self.params);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }

    pub fn mul_int(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.params);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(&self.params);
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

    /// Evaluates at a rational assignment covering all parameters.
    pub fn eval(&self, a: &Assignment) -> BigRational {
        assert_eq!(
            a.params().names(),
            self.params.names(),
            "assignment parameter mismatch"
        );
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (idx, &exp) in e.0.iter().enumerate() {
                if exp > 0 {
                    term *= num::pow::pow(a.value(idx).clone(), exp as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Re-expresses this polynomial over a superset parameter list.
    /// `mapping[i]` gives the index of old parameter `i` in `new_params`.
    pub fn lift(&self, new_params: &ParamsRef, mapping: &[usize]) -> MPoly {
        assert_eq!(mapping.len(), self.params.len());
        let mut out = MPoly::zero(new_params);
        for (e, c) in &self.terms {
            let mut ne = vec![0u16; new_params.len()];
            for (i, &exp) in e.0.iter().enumerate() {
                ne[mapping[i]] = exp;
            }
            out.insert_term(Expo(ne), c.clone());
        }
        out
    }

    /// GCD of all integer coefficients (nonnegative); zero for the zero poly.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num::integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by an integer known to divide every coefficient.
    pub fn div_int_exact(&self, d: &BigInt) -> MPoly {
        assert!(!d.is_zero());
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            let (q, r) = num::Integer::div_rem(&*v, d);
            assert!(r.is_zero(), "inexact integer division in polynomial");
            *v = q;
        }
        out
    }

    /// Exact polynomial division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        self.assert_same_params(d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MPoly::zero(&self.params);
        let (dlead_e, dlead_c) = {
            let (e, c) = d.terms.iter().next_back().unwrap();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (e.clone(), c.clone())
            };
            let mut qe = Vec::with_capacity(rlead_e.0.len());
            for (re, de) in rlead_e.0.iter().zip(&dlead_e.0) {
                if re < de {
                    return None;
                }
                qe.push(re - de);
            }
            let (qc, rc) = num::Integer::div_rem(&rlead_c, &dlead_c);
            if !rc.is_zero() {
                return None;
            }
            let qe = Expo(qe);
            let mut qterm = MPoly::zero(&self.params);
            qterm.terms.insert(qe.clone(), qc.clone());
            rem = rem.sub_ref(&qterm.mul_ref(d));
            quot.insert_term(qe, qc);
        }
        Some(quot)
    }

    /// Expresses `self` as dense coefficients in parameter `idx`; entry `i`
    /// is the coefficient of `idx^i` (a polynomial with `idx`-degree zero).
    pub(crate) fn coeffs_in(&self, idx: usize) -> Vec<MPoly> {
        let deg = self.degree_in(idx).unwrap_or(0) as usize;
        let mut out = vec![MPoly::zero(&self.params); deg + 1];
        for (e, c) in &self.terms {
            let i = e.0[idx] as usize;
            let mut reduced = e.clone();
            reduced.0[idx] = 0;
            out[i].insert_term(reduced, c.clone());
        }
        out
    }

    /// Rebuilds a polynomial from dense coefficients in parameter `idx`.
    pub(crate) fn from_coeffs_in(params: &ParamsRef, idx: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(params);
        for (i, c) in coeffs.iter().enumerate() {
            for (e, v) in &c.terms {
                let mut ne = e.clone();
                assert_eq!(ne.0[idx], 0);
                ne.0[idx] = u16::try_from(i).expect("exponent overflow");
                out.insert_term(ne, v.clone());
            }
        }
        out
    }

    /// Sign of the leading coefficient: −1, 0, or 1.
    pub fn lead_sign(&self) -> i8 {
        match self.leading_coeff().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub(crate) fn iter_terms(&self) -> impl Iterator<Item = (&Expo, &BigInt)> {
        self.terms.iter()
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.params.names() == other.params.names() && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_ref()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
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
            let mut factors: Vec<String> = Vec::new();
            for (idx, &exp) in e.0.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => factors.push(self.params.name(idx).to_string()),
                    _ => factors.push(format!("{}^{}", self.params.name(idx), exp)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::params::Params;
    use super::*;

    fn two_vars() -> ParamsRef {
        Params::new(["p", "q"]).unwrap()
    }

    #[test]
    fn grlex_leading_term() {
        let ps = two_vars();
        let p = MPoly::var(&ps, 0);
        let q = MPoly::var(&ps, 1);
        // p^2 + q^3: q^3 has higher total degree
        let e = &p.pow(2) + &q.pow(3);
        assert_eq!(e.total_degree(), Some(3));
        // same degree: p^2 beats p*q lexicographically
        let e2 = &p.pow(2) + &p.mul_ref(&q);
        let lead: Vec<_> = e2.terms.keys().next_back().unwrap().0.clone();
        assert_eq!(lead, vec![2, 0]);
    }

    #[test]
    fn arithmetic_and_display() {
        let ps = two_vars();
        let p = MPoly::var(&ps, 0);
        let one = MPoly::one(&ps);
        let d = &(&p * &p) - &one;
        assert_eq!(d.to_string(), "p^2 - 1");
        assert!((&d - &d).is_zero());
    }

    #[test]
    fn div_exact_roundtrip() {
        let ps = two_vars();
        let p = MPoly::var(&ps, 0);
        let q = MPoly::var(&ps, 1);
        let a = &(&p + &q) * &(&p - &q);
        let quot = a.div_exact(&(&p + &q)).unwrap();
        assert_eq!(quot, &p - &q);
        assert!(a.div_exact(&(&p + &MPoly::one(&ps))).is_none());
    }

    #[test]
    fn eval_matches_expansion() {
        let ps = two_vars();
        let p = MPoly::var(&ps, 0);
        let q = MPoly::var(&ps, 1);
        let e = &(&p * &q) + &MPoly::from_int(&ps, 3);
        let a = Assignment::new(
            ps.clone(),
            vec![
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::from(BigInt::from(4)),
            ],
        );
        assert_eq!(e.eval(&a), BigRational::from(BigInt::from(5)));
    }
}
