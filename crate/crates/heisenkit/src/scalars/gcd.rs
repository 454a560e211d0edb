//! Multivariate polynomial gcd.
//!
//! Content/primitive-part recursion over the variable of highest index, with
//! the subresultant polynomial remainder sequence doing the univariate work.
//! All divisions along the way are exact in `Z[params]`.

use num::{BigInt, Signed};

use super::mpoly::MPoly;

/// Gcd normalized to have positive leading coefficient under graded-lex.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    let g = gcd_inner(a, b);
    normalize_sign(g)
}

fn normalize_sign(p: MPoly) -> MPoly {
    if p.lead_sign() < 0 {
        p.neg_ref()
    } else {
        p
    }
}

fn int_gcd_poly(a: &MPoly, b: &MPoly) -> MPoly {
    let ca = a.as_constant().unwrap();
    let cb = b.as_constant().unwrap();
    MPoly::constant(a.params(), num::integer::gcd(ca.abs(), cb.abs()))
}

fn gcd_inner(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() && b.is_constant() {
        return int_gcd_poly(a, b);
    }
    // Main variable: highest index appearing in either operand.
    let nvars = a.params().len();
    let var = (0..nvars)
        .rev()
        .find(|&v| a.degree_in(v).unwrap_or(0) > 0 || b.degree_in(v).unwrap_or(0) > 0)
        .expect("nonconstant polynomial with no variables");

    let a_coeffs = a.coeffs_in(var);
    let b_coeffs = b.coeffs_in(var);
    let cont_a = gcd_many(a.params(), &a_coeffs);
    let cont_b = gcd_many(b.params(), &b_coeffs);
    let cont = gcd_inner(&cont_a, &cont_b);

    if a.degree_in(var).unwrap_or(0) == 0 || b.degree_in(var).unwrap_or(0) == 0 {
        // One operand is free of the main variable: gcd divides its content.
        return cont;
    }

    let prim_a: Vec<MPoly> = a_coeffs.iter().map(|c| c.div_exact(&cont_a).unwrap()).collect();
    let prim_b: Vec<MPoly> = b_coeffs.iter().map(|c| c.div_exact(&cont_b).unwrap()).collect();
    let g = subresultant_gcd(prim_a, prim_b);
    let g = MPoly::from_coeffs_in(a.params(), var, &g);
    cont.mul_ref(&g)
}

fn gcd_many(params: &super::params::ParamsRef, polys: &[MPoly]) -> MPoly {
    let mut acc = MPoly::zero(params);
    for p in polys {
        acc = gcd_inner(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    normalize_sign(acc)
}

fn deg(u: &[MPoly]) -> usize {
    u.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn trim(mut u: Vec<MPoly>) -> Vec<MPoly> {
    while u.len() > 1 && u.last().map(MPoly::is_zero).unwrap_or(false) {
        u.pop();
    }
    u
}

fn is_zero_poly(u: &[MPoly]) -> bool {
    u.iter().all(MPoly::is_zero)
}

fn scale(u: &[MPoly], c: &MPoly) -> Vec<MPoly> {
    u.iter().map(|x| x.mul_ref(c)).collect()
}

fn sub_shifted(u: &[MPoly], v: &[MPoly], shift: usize, params: &super::params::ParamsRef) -> Vec<MPoly> {
    let n = u.len().max(v.len() + shift);
    let mut out = vec![MPoly::zero(params); n];
    for (i, x) in u.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, x) in v.iter().enumerate() {
        out[i + shift] = out[i + shift].sub_ref(x);
    }
    trim(out)
}

/// Pseudo-remainder: `lc(v)^(deg u - deg v + 1) * u  mod  v`, exact in-ring.
fn pseudo_rem(u: &[MPoly], v: &[MPoly], params: &super::params::ParamsRef) -> Vec<MPoly> {
    let dv = deg(v);
    let lcv = v[dv].clone();
    let mut r: Vec<MPoly> = u.to_vec();
    let mut mults = deg(u) as i64 - dv as i64 + 1;
    while !is_zero_poly(&r) && deg(&r) >= dv {
        let dr = deg(&r);
        let lcr = r[dr].clone();
        // r = lcv*r - lcr*v*x^(dr-dv)
        r = sub_shifted(&scale(&r, &lcv), &scale(v, &lcr), dr - dv, params);
        mults -= 1;
    }
    // Standard pad: multiply by remaining powers of lc(v) so that the
    // subresultant division steps stay exact.
    while mults > 0 {
        r = scale(&r, &lcv);
        mults -= 1;
    }
    trim(r)
}

fn primitive_part(u: &[MPoly], params: &super::params::ParamsRef) -> Vec<MPoly> {
    let cont = gcd_many(params, u);
    if cont.is_zero() {
        return u.to_vec();
    }
    u.iter().map(|c| c.div_exact(&cont).unwrap()).collect()
}

/// Subresultant PRS gcd of two primitive polynomials given as dense
/// coefficient vectors in the main variable; returns a primitive gcd.
fn subresultant_gcd(a: Vec<MPoly>, b: Vec<MPoly>) -> Vec<MPoly> {
    let params = a
        .iter()
        .chain(&b)
        .next()
        .expect("empty polynomial")
        .params()
        .clone();
    let (mut u, mut v) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    u = trim(u);
    v = trim(v);
    let mut g = MPoly::one(&params);
    let mut h = MPoly::one(&params);
    loop {
        let delta = deg(&u) - deg(&v);
        let r = pseudo_rem(&u, &v, &params);
        if is_zero_poly(&r) {
            return primitive_part(&v, &params);
        }
        if deg(&r) == 0 {
            return vec![MPoly::one(&params)];
        }
        u = v;
        // v = r / (g * h^delta), exact by the subresultant theorem
        let divisor = g.mul_ref(&h.pow(delta as u32));
        v = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("inexact subresultant division"))
            .collect();
        v = trim(v);
        g = u[deg(&u)].clone();
        h = if delta == 0 {
            h
        } else {
            // h = g^delta / h^(delta-1), exact
            g.pow(delta as u32)
                .div_exact(&h.pow(delta as u32 - 1))
                .expect("inexact subresultant h update")
        };
    }
}

/// Integer gcd helper reused by scalar canonicalization.
pub fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num::integer::gcd(a.abs(), b.abs())
}

#[cfg(test)]
mod tests {
    use super::super::params::Params;
    use super::*;

    #[test]
    fn univariate_gcd() {
        let ps = Params::new(["p"]).unwrap();
        let p = MPoly::var(&ps, 0);
        let one = MPoly::one(&ps);
        // gcd(p^2 - 1, p - 1) = p - 1
        let a = &(&p * &p) - &one;
        let b = &p - &one;
        assert_eq!(mpoly_gcd(&a, &b), b);
        // sign normalization: gcd(1 - p, p^2 - 1) has positive lead
        let c = &one - &p;
        assert_eq!(mpoly_gcd(&c, &a), b);
    }

    #[test]
    fn multivariate_gcd_with_content() {
        let ps = Params::new(["p", "q"]).unwrap();
        let p = MPoly::var(&ps, 0);
        let q = MPoly::var(&ps, 1);
        let one = MPoly::one(&ps);
        // gcd(2(p+q)(p-q), 4(p+q)(q+1)) = 2(p+q)
        let f = MPoly::from_int(&ps, 2).mul_ref(&(&p + &q)).mul_ref(&(&p - &q));
        let g = MPoly::from_int(&ps, 4).mul_ref(&(&p + &q)).mul_ref(&(&q + &one));
        let expect = MPoly::from_int(&ps, 2).mul_ref(&(&p + &q));
        assert_eq!(mpoly_gcd(&f, &g), expect);
    }

    #[test]
    fn coprime_returns_constant() {
        let ps = Params::new(["p", "q"]).unwrap();
        let p = MPoly::var(&ps, 0);
        let q = MPoly::var(&ps, 1);
        let g = mpoly_gcd(&p, &q);
        assert!(g.is_one());
    }

    #[test]
    fn gcd_divides_both_random() {
        use num::BigInt;
        let ps = Params::new(["p", "q", "c"]).unwrap();
        // deterministic pseudo-random small polynomials
        let mut seed = 0x12345678u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as i64
        };
        for _ in 0..12 {
            let mut rand_poly = |terms: usize| {
                let mut acc = MPoly::zero(&ps);
                for _ in 0..terms {
                    let mut t = MPoly::constant(&ps, BigInt::from(next() % 5 - 2));
                    for v in 0..3 {
                        let e = (next() % 3) as u32;
                        t = t.mul_ref(&MPoly::var(&ps, v).pow(e));
                    }
                    acc = acc.add_ref(&t);
                }
                acc
            };
            let common = rand_poly(2);
            let a = rand_poly(3).mul_ref(&common);
            let b = rand_poly(3).mul_ref(&common);
            let g = mpoly_gcd(&a, &b);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            assert!(!g.is_zero());
            if !a.is_zero() {
                assert!(a.div_exact(&g).is_some(), "gcd does not divide a");
            }
            if !b.is_zero() {
                assert!(b.div_exact(&g).is_some(), "gcd does not divide b");
            }
            if !common.is_zero() && !a.is_zero() && !b.is_zero() {
                assert!(g.div_exact(&common).is_some(), "gcd misses common factor");
            }
        }
    }
}
