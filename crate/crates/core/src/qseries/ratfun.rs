//! Rational functions in x over the integers, kept in canonical form.

use super::poly::XPolynomial;
use super::ring::{Ring, WithX};
use rug::{Integer, Rational};
use std::fmt;

pub type ZPoly = Vec<Integer>;

fn ztrim(v: &mut ZPoly) {
    while v.last().map(|c| *c == 0).unwrap_or(false) {
        v.pop();
    }
}

fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut r = vec![Integer::new(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        r[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        r[i] += c;
    }
    ztrim(&mut r);
    r
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut r = vec![Integer::new(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        r[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        r[i] -= c;
    }
    ztrim(&mut r);
    r
}

fn zneg(a: &ZPoly) -> ZPoly {
    a.iter().map(|c| Integer::from(-c)).collect()
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![Integer::new(); a.len() + b.len() - 1];
    for (i, u) in a.iter().enumerate() {
        if *u == 0 {
            continue;
        }
        for (j, v) in b.iter().enumerate() {
            r[i + j] += Integer::from(u * v);
        }
    }
    r
}

fn zcontent(a: &ZPoly) -> Integer {
    let mut g = Integer::new();
    for c in a {
        g.gcd_mut(c);
        if g == 1 {
            break;
        }
    }
    g
}

fn zscale_down(a: &ZPoly, g: &Integer) -> ZPoly {
    a.iter().map(|c| Integer::from(c / g)).collect()
}

fn zprimitive(a: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let g = zcontent(a);
    zscale_down(a, &g)
}

// lc(b)^(deg a − deg b + 1) · a mod b, for deg a ≥ deg b ≥ 0
fn zpseudo_rem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let c = r[dr].clone();
        for v in r.iter_mut() {
            *v *= lead;
        }
        for (i, v) in b.iter().enumerate() {
            r[dr - db + i] -= Integer::from(&c * v);
        }
        ztrim(&mut r);
    }
    r
}

/// Primitive-PRS gcd over ℤ[x]; result has positive leading coefficient.
pub fn zgcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return normalize_sign(zprimitive(b));
    }
    if b.is_empty() {
        return normalize_sign(zprimitive(a));
    }
    let ca = zcontent(a);
    let cb = zcontent(b);
    let cg = Integer::from(ca.gcd_ref(&cb));
    let mut u = zprimitive(a);
    let mut v = zprimitive(b);
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = zpseudo_rem(&u, &v);
        u = v;
        v = zprimitive(&r);
    }
    let mut g = normalize_sign(u);
    for c in g.iter_mut() {
        *c *= &cg;
    }
    g
}

fn normalize_sign(mut a: ZPoly) -> ZPoly {
    if a.last().map(|c| *c < 0).unwrap_or(false) {
        a = zneg(&a);
    }
    a
}

fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    debug_assert!(a.len() >= b.len());
    let mut rem = a.clone();
    let mut q = vec![Integer::new(); a.len() - b.len() + 1];
    let lead = &b[b.len() - 1];
    for d in (0..q.len()).rev() {
        let (c, r) = rem[d + b.len() - 1].clone().div_rem(lead.clone());
        debug_assert!(r == 0, "inexact polynomial division");
        if c != 0 {
            for (i, v) in b.iter().enumerate() {
                rem[d + i] -= Integer::from(&c * v);
            }
        }
        q[d] = c;
    }
    debug_assert!(rem.iter().all(|c| *c == 0), "inexact polynomial division");
    q
}

/// num/den with integer-coefficient polynomials, gcd-reduced, positive
/// leading coefficient in the denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: ZPoly,
    den: ZPoly,
}

impl RationalFunction {
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.iter().all(|c| *c == 0), "denominator must be nonzero");
        let mut r = RationalFunction { num, den };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        ztrim(&mut self.num);
        ztrim(&mut self.den);
        if self.num.is_empty() {
            self.den = vec![Integer::from(1)];
            return;
        }
        let g = zgcd(&self.num, &self.den);
        if g.len() > 1 || g[0] != 1 {
            self.num = zdiv_exact(&self.num, &g);
            self.den = zdiv_exact(&self.den, &g);
        }
        if self.den.last().map(|c| *c < 0).unwrap_or(false) {
            self.num = zneg(&self.num);
            self.den = zneg(&self.den);
        }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Vec::new(), den: vec![Integer::from(1)] }
    }

    pub fn one() -> Self {
        RationalFunction { num: vec![Integer::from(1)], den: vec![Integer::from(1)] }
    }

    pub fn x() -> Self {
        RationalFunction {
            num: vec![Integer::new(), Integer::from(1)],
            den: vec![Integer::from(1)],
        }
    }

    pub fn from_int_poly(num: ZPoly) -> Self {
        let mut num = num;
        ztrim(&mut num);
        RationalFunction { num, den: vec![Integer::from(1)] }
    }

    pub fn from_rational(r: &Rational) -> Self {
        RationalFunction {
            num: if *r == 0 { vec![] } else { vec![r.numer().clone()] },
            den: vec![r.denom().clone()],
        }
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1 && self.den[0] == 1
    }

    /// The numerator as an [`XPolynomial`] when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<XPolynomial> {
        if !self.is_polynomial() {
            return None;
        }
        Some(XPolynomial::new(
            self.num.iter().map(|c| Rational::from(c)).collect(),
        ))
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let horner = |p: &ZPoly| {
            let mut acc = Rational::new();
            for c in p.iter().rev() {
                acc *= x;
                acc += c;
            }
            acc
        };
        let d = horner(&self.den);
        if d == 0 {
            return None;
        }
        Some(horner(&self.num) / d)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &ZPoly, f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if p.is_empty() {
                return write!(f, "0");
            }
            let mut first = true;
            for (i, c) in p.iter().enumerate() {
                if *c == 0 {
                    continue;
                }
                if !first {
                    write!(f, "+")?;
                }
                first = false;
                match i {
                    0 => write!(f, "{}", c)?,
                    1 => write!(f, "{}x", c)?,
                    _ => write!(f, "{}x^{}", c, i)?,
                }
            }
            Ok(())
        };
        write!(f, "(")?;
        show(&self.num, f)?;
        write!(f, ")")?;
        if !self.is_polynomial() {
            write!(f, "/(")?;
            show(&self.den, f)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// ℚ(x) as a coefficient ring.
#[derive(Clone, Debug, Default)]
pub struct RatFnRing;

impl Ring for RatFnRing {
    type Elem = RationalFunction;

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        RationalFunction { num: zneg(&a.num), den: a.den.clone() }
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            zadd(&zmul(&a.num, &b.den), &zmul(&b.num, &a.den)),
            zmul(&a.den, &b.den),
        )
    }
    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            zsub(&zmul(&a.num, &b.den), &zmul(&b.num, &a.den)),
            zmul(&a.den, &b.den),
        )
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        RationalFunction::new(zmul(&a.num, &b.num), zmul(&a.den, &b.den))
    }
    fn div_exact(
        &self,
        a: &RationalFunction,
        b: &RationalFunction,
    ) -> Option<RationalFunction> {
        if b.is_zero() {
            return None;
        }
        Some(RationalFunction::new(
            zmul(&a.num, &b.den),
            zmul(&a.den, &b.num),
        ))
    }
    fn from_i64(&self, n: i64) -> RationalFunction {
        if n == 0 {
            RationalFunction::zero()
        } else {
            RationalFunction {
                num: vec![Integer::from(n)],
                den: vec![Integer::from(1)],
            }
        }
    }
}

impl WithX for RatFnRing {
    fn x(&self) -> RationalFunction {
        RationalFunction::x()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(
            num.iter().map(|&c| Integer::from(c)).collect(),
            den.iter().map(|&c| Integer::from(c)).collect(),
        )
    }

    #[test]
    fn reduces_to_canonical_form() {
        // (x² − 1)/(x + 1) = x − 1
        let r = rf(&[-1, 0, 1], &[1, 1]);
        assert!(r.is_polynomial());
        assert_eq!(r.numerator(), &vec![Integer::from(-1), Integer::from(1)]);
        // sign normalization: 1/(-x) = -1/x
        let r = rf(&[1], &[0, -1]);
        assert_eq!(r.denominator(), &vec![Integer::new(), Integer::from(1)]);
        assert_eq!(r.numerator(), &vec![Integer::from(-1)]);
    }

    #[test]
    fn arithmetic() {
        let ring = RatFnRing;
        let a = rf(&[1], &[1, 1]); // 1/(1+x)
        let b = rf(&[1, 1], &[1]); // 1+x
        assert_eq!(ring.mul(&a, &b), RationalFunction::one());
        let s = ring.add(&a, &a); // 2/(1+x)
        assert_eq!(s, rf(&[2], &[1, 1]));
        assert_eq!(ring.div_exact(&s, &s).unwrap(), RationalFunction::one());
    }

    #[test]
    fn gcd_includes_content() {
        let g = zgcd(
            &vec![Integer::from(2), Integer::from(2)],
            &vec![Integer::from(4), Integer::from(4)],
        );
        assert_eq!(g, vec![Integer::from(2), Integer::from(2)]);
    }
}
