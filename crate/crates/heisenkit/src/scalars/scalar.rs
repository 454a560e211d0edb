//! Elements of the coefficient field `Q(params)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use super::gcd::{big_gcd, mpoly_gcd};
use super::mpoly::MPoly;
use super::params::{Assignment, ParamsRef};
use super::ScalarError;

/// A reduced fraction of integer polynomials. Invariants: the denominator is
/// nonzero with positive leading coefficient, gcd(num, den) is constant, and
/// zero is stored as `0/1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    num: MPoly,
    den: MPoly,
}

impl Scalar {
    /// Canonicalizes `num/den`. Errors if `den` is the zero polynomial.
    pub fn new(num: MPoly, den: MPoly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar {
                den: MPoly::one(num.params()),
                num,
            });
        }
        let g = mpoly_gcd(&num, &den);
        let mut num = num.div_exact(&g).unwrap();
        let mut den = den.div_exact(&g).unwrap();
        // contents may still share an integer factor
        let ic = big_gcd(&num.content(), &den.content());
        if !ic.is_one() {
            num = num.div_int_exact(&ic);
            den = den.div_int_exact(&ic);
        }
        if den.lead_sign() < 0 {
            num = num.neg_ref();
            den = den.neg_ref();
        }
        Ok(Scalar { num, den })
    }

    pub fn zero(params: &ParamsRef) -> Scalar {
        Scalar {
            num: MPoly::zero(params),
            den: MPoly::one(params),
        }
    }

    pub fn one(params: &ParamsRef) -> Scalar {
        Scalar {
            num: MPoly::one(params),
            den: MPoly::one(params),
        }
    }

    pub fn from_int(params: &ParamsRef, n: i64) -> Scalar {
        Scalar {
            num: MPoly::from_int(params, n),
            den: MPoly::one(params),
        }
    }

    pub fn from_rational(params: &ParamsRef, r: &BigRational) -> Scalar {
        Scalar::new(
            MPoly::constant(params, r.numer().clone()),
            MPoly::constant(params, r.denom().clone()),
        )
        .unwrap()
    }

    pub fn from_mpoly(p: MPoly) -> Scalar {
        Scalar {
            den: MPoly::one(p.params()),
            num: p,
        }
    }

    /// The scalar consisting of the named parameter.
    pub fn param(params: &ParamsRef, name: &str) -> Result<Scalar, ScalarError> {
        let idx = params
            .index_of(name)
            .ok_or_else(|| ScalarError::UnknownParam(name.to_string()))?;
        Ok(Scalar::from_mpoly(MPoly::var(params, idx)))
    }

    pub fn params(&self) -> &ParamsRef {
        self.num.params()
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// True when the scalar is the integer `n`.
    pub fn is_int(&self, n: i64) -> bool {
        self.den.is_one() && self.num.as_constant().map(|c| c == BigInt::from(n)).unwrap_or(false)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(BigRational::new(n, d)),
            _ => None,
        }
    }

    pub fn add_ref(&self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }

    pub fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }

    pub fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }

    pub fn div_ref(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Scalar::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Scalar::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, n: i64) -> Result<Scalar, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let e = n.unsigned_abs();
        let e = u32::try_from(e).map_err(|_| ScalarError::BadParamName("exponent".into()))?;
        Ok(Scalar {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Evaluates at a full rational assignment.
    pub fn specialize(&self, a: &Assignment) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(self.num.eval(a) / d)
    }

    /// Re-expresses the scalar over a superset parameter list.
    pub fn lift(&self, new_params: &ParamsRef) -> Result<Scalar, ScalarError> {
        let mapping: Vec<usize> = self
            .params()
            .names()
            .iter()
            .map(|n| {
                new_params
                    .index_of(n)
                    .ok_or_else(|| ScalarError::UnknownParam(n.clone()))
            })
            .collect::<Result<_, _>>()?;
        Ok(Scalar {
            num: self.num.lift(new_params, &mapping),
            den: self.den.lift(new_params, &mapping),
        })
    }

    /// True when the printed form should carry a leading minus sign.
    pub fn display_negative(&self) -> bool {
        self.num.lead_sign() < 0
    }

    pub fn abs_display(&self) -> Scalar {
        if self.display_negative() {
            self.neg_ref()
        } else {
            self.clone()
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.sub_ref(rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.div_ref(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_s = self.num.to_string();
        let den_s = self.den.to_string();
        let num_wrapped = if num_s.contains(' ') { format!("({num_s})") } else { num_s };
        let den_wrapped = if den_s.contains(' ') || den_s.contains('*') || den_s.contains('^') {
            format!("({den_s})")
        } else {
            den_s
        };
        write!(f, "{num_wrapped}/{den_wrapped}")
    }
}

#[cfg(test)]
mod tests {
    use super::super::params::Params;
    use super::*;

    fn pq() -> ParamsRef {
        Params::new(["p", "q"]).unwrap()
    }

    #[test]
    fn self_division_is_one() {
        let ps = pq();
        let p = Scalar::param(&ps, "p").unwrap();
        assert!(p.div_ref(&p).unwrap().is_one());
    }

    #[test]
    fn one_minus_param_is_nonzero() {
        let ps = pq();
        let q = Scalar::param(&ps, "q").unwrap();
        let d = &Scalar::one(&ps) - &q;
        assert!(!d.is_zero());
        assert_eq!(d.to_string(), "-q + 1");
    }

    #[test]
    fn difference_of_squares_reduces() {
        // (p^2 - 1) / (p - 1) = p + 1; oracle: multiply back
        let ps = pq();
        let p = Scalar::param(&ps, "p").unwrap();
        let one = Scalar::one(&ps);
        let num = &(&p * &p) - &one;
        let den = &p - &one;
        let q = num.div_ref(&den).unwrap();
        assert_eq!(&q * &den, num);
        assert_eq!(q, &p + &one);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let ps = pq();
        let one = Scalar::one(&ps);
        assert_eq!(
            one.div_ref(&Scalar::zero(&ps)),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn specialize_simple_and_pole() {
        let ps = Params::new(["q"]).unwrap();
        let q = Scalar::param(&ps, "q").unwrap();
        let one = Scalar::one(&ps);
        // 1/(q-1) at q=3 -> 1/2
        let s = one.div_ref(&(&q - &one)).unwrap();
        let a3 = Assignment::new(ps.clone(), vec![BigRational::from(BigInt::from(3))]);
        assert_eq!(
            s.specialize(&a3).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
        // at q=1 -> pole
        let a1 = Assignment::new(ps.clone(), vec![BigRational::from(BigInt::from(1))]);
        assert_eq!(s.specialize(&a1), Err(ScalarError::Pole));
        // p at p=2/5 -> 2/5
        let ps2 = Params::new(["p"]).unwrap();
        let p = Scalar::param(&ps2, "p").unwrap();
        let a = Assignment::new(
            ps2.clone(),
            vec![BigRational::new(BigInt::from(2), BigInt::from(5))],
        );
        assert_eq!(
            p.specialize(&a).unwrap(),
            BigRational::new(BigInt::from(2), BigInt::from(5))
        );
    }

    #[test]
    fn denominator_sign_normalized() {
        let ps = pq();
        let p = Scalar::param(&ps, "p").unwrap();
        let one = Scalar::one(&ps);
        // 1/(1-p): denominator normalizes to (p - 1) with negated numerator
        let s = one.div_ref(&(&one - &p)).unwrap();
        assert_eq!(s.denominator().lead_sign(), 1);
        assert_eq!(s.to_string(), "-1/(p - 1)");
        let back = &(&s * &(&one - &p)) - &one;
        assert!(back.is_zero());
    }

    #[test]
    fn negative_powers() {
        let ps = pq();
        let p = Scalar::param(&ps, "p").unwrap();
        let pinv = p.pow(-1).unwrap();
        assert!((&pinv * &p).is_one());
        assert_eq!(pinv.to_string(), "1/p");
    }
}
