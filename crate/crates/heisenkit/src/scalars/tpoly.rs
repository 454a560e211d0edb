//! Univariate polynomials in the distinguished variable `t` over [`Scalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::params::ParamsRef;
use super::scalar::Scalar;
use super::ScalarError;

/// Dense polynomial in `t`; `coeffs[i]` is the coefficient of `t^i` and the
/// top coefficient is always nonzero (zero is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly {
    params: ParamsRef,
    coeffs: Vec<Scalar>,
}

impl TPoly {
    pub fn zero(params: &ParamsRef) -> TPoly {
        TPoly {
            params: params.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(params: &ParamsRef) -> TPoly {
        TPoly::constant(Scalar::one(params))
    }

    pub fn constant(c: Scalar) -> TPoly {
        let params = c.params().clone();
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        TPoly { params, coeffs }
    }

    /// The polynomial `t`.
    pub fn var(params: &ParamsRef) -> TPoly {
        TPoly {
            params: params.clone(),
            coeffs: vec![Scalar::zero(params), Scalar::one(params)],
        }
    }

    pub fn from_coeffs(params: &ParamsRef, coeffs: Vec<Scalar>) -> TPoly {
        let mut p = TPoly {
            params: params.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(Scalar::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn params(&self) -> &ParamsRef {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.params))
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.params))
    }

    pub fn add_ref(&self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        TPoly::from_coeffs(&self.params, out)
    }

    pub fn sub_ref(&self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &rhs.coeff(i));
        }
        TPoly::from_coeffs(&self.params, out)
    }

    pub fn neg_ref(&self) -> TPoly {
        TPoly {
            params: self.params.clone(),
            coeffs: self.coeffs.iter().map(Scalar::neg_ref).collect(),
        }
    }

    pub fn mul_ref(&self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero(&self.params);
        }
        let mut out = vec![Scalar::zero(&self.params); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TPoly::from_coeffs(&self.params, out)
    }

    pub fn scale(&self, c: &Scalar) -> TPoly {
        TPoly::from_coeffs(
            &self.params,
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    pub fn pow(&self, mut n: u32) -> TPoly {
        let mut base = self.clone();
        let mut acc = TPoly::one(&self.params);
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

    /// Composition `self(inner(t))` by Horner evaluation.
    pub fn compose(&self, inner: &TPoly) -> TPoly {
        let mut acc = TPoly::zero(&self.params);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(inner).add_ref(&TPoly::constant(c.clone()));
        }
        acc
    }

    /// Evaluates at a scalar point.
    pub fn eval_scalar(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(&self.params);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Substitutes `t - alpha` for `t`.
    pub fn shift(&self, alpha: &Scalar) -> TPoly {
        let shifted = TPoly::from_coeffs(
            &self.params,
            vec![alpha.neg_ref(), Scalar::one(&self.params)],
        );
        self.compose(&shifted)
    }

    /// Specializes every coefficient, producing a polynomial over no params.
    pub fn specialize(
        &self,
        a: &super::params::Assignment,
        empty: &ParamsRef,
    ) -> Result<TPoly, ScalarError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Ok(Scalar::from_rational(empty, &c.specialize(a)?)))
            .collect::<Result<Vec<_>, ScalarError>>()?;
        Ok(TPoly::from_coeffs(empty, coeffs))
    }

    /// Re-expresses the polynomial over a superset parameter list.
    pub fn lift(&self, new_params: &ParamsRef) -> Result<TPoly, ScalarError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.lift(new_params))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TPoly::from_coeffs(new_params, coeffs))
    }

    /// Support: exponents with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.neg_ref()
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let coef = if mag.is_one() && i > 0 {
                String::new()
            } else {
                let s = mag.to_string();
                if s.contains(' ') {
                    format!("({s})")
                } else {
                    s
                }
            };
            match (coef.is_empty(), var.is_empty()) {
                (true, _) => write!(f, "{var}")?,
                (false, true) => write!(f, "{coef}")?,
                (false, false) => write!(f, "{coef}*{var}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::params::Params;
    use super::*;

    #[test]
    fn degree_and_sentinel() {
        let ps = Params::new(["c"]).unwrap();
        let c = Scalar::param(&ps, "c").unwrap();
        let t = TPoly::var(&ps);
        // degree(c*t^2) = 2
        assert_eq!(t.pow(2).scale(&c).degree(), Some(2));
        assert_eq!(TPoly::zero(&ps).degree(), None);
    }

    #[test]
    fn product_difference_of_squares() {
        let ps = Params::empty();
        let t = TPoly::var(&ps);
        let one = TPoly::one(&ps);
        let prod = &(&t + &one) * &(&t - &one);
        assert_eq!(prod, &t.pow(2) - &one);
        assert_eq!(prod.to_string(), "t^2 - 1");
    }

    #[test]
    fn compose_affine() {
        // f = p*t + k composed with h = t - k/(1-p) gives p*t - pk/(1-p) + k
        let ps = Params::new(["p", "k"]).unwrap();
        let p = Scalar::param(&ps, "p").unwrap();
        let k = Scalar::param(&ps, "k").unwrap();
        let one = Scalar::one(&ps);
        let t = TPoly::var(&ps);
        let f = &t.scale(&p) + &TPoly::constant(k.clone());
        let shift = k.div_ref(&(&one - &p)).unwrap();
        let h = &t - &TPoly::constant(shift.clone());
        let composed = f.compose(&h);
        let expect_const = &k - &(&p * &shift);
        assert_eq!(composed.coeff(1), p);
        assert_eq!(composed.coeff(0), expect_const);
        // translation identity: with f1 = p*t and s = k/(1-p), f1(t-s)+s = p*t+k
        let f1 = t.scale(&p);
        let full = &f1.compose(&h) + &TPoly::constant(shift);
        assert_eq!(full, f);
    }
}
