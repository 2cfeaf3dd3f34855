//! Dense polynomials in x with rational coefficients.

use super::ring::{Ring, WithX};
use crate::error::{Error, Result};
use rug::{Integer, Rational};
use std::fmt;

/// A polynomial in x, dense by power, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct XPolynomial {
    pub coeffs: Vec<Rational>,
}

impl XPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| *c == 0).unwrap_or(false) {
            coeffs.pop();
        }
        XPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        XPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Sum of coefficients = value at x = 1.
    pub fn coeff_sum(&self) -> Rational {
        let mut acc = Rational::new();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// All coefficients integral?
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as integers; errors when any is not integral.
    pub fn integer_coeffs(&self) -> Result<Vec<Integer>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.numer().clone())
                } else {
                    Err(Error::NonCancellation(format!("non-integer coefficient {}", c)))
                }
            })
            .collect()
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// ℚ[x] as a coefficient ring for series. Elements are raw coefficient
/// vectors (trailing zeros trimmed by the ops that can introduce them).
#[derive(Clone, Debug, Default)]
pub struct PolyRing;

pub type Poly = Vec<Rational>;

fn trim(v: &mut Poly) {
    while v.last().map(|c| *c == 0).unwrap_or(false) {
        v.pop();
    }
}

impl Ring for PolyRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Vec::new()
    }
    fn one(&self) -> Poly {
        vec![Rational::from(1)]
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.iter().all(|c| *c == 0)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.iter().map(|c| Rational::from(-c)).collect()
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut r = vec![Rational::new(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            r[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            r[i] += c;
        }
        trim(&mut r);
        r
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let mut r = vec![Rational::new(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            r[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            r[i] -= c;
        }
        trim(&mut r);
        r
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![Rational::new(); a.len() + b.len() - 1];
        for (i, u) in a.iter().enumerate() {
            if *u == 0 {
                continue;
            }
            for (j, v) in b.iter().enumerate() {
                if *v == 0 {
                    continue;
                }
                r[i + j] += Rational::from(u * v);
            }
        }
        trim(&mut r);
        r
    }
    fn add_mul(&self, acc: &mut Poly, a: &Poly, b: &Poly) {
        if a.is_empty() || b.is_empty() {
            return;
        }
        let need = a.len() + b.len() - 1;
        if acc.len() < need {
            acc.resize(need, Rational::new());
        }
        for (i, u) in a.iter().enumerate() {
            if *u == 0 {
                continue;
            }
            for (j, v) in b.iter().enumerate() {
                acc[i + j] += Rational::from(u * v);
            }
        }
        trim(acc);
    }
    fn sub_mul(&self, acc: &mut Poly, a: &Poly, b: &Poly) {
        if a.is_empty() || b.is_empty() {
            return;
        }
        let need = a.len() + b.len() - 1;
        if acc.len() < need {
            acc.resize(need, Rational::new());
        }
        for (i, u) in a.iter().enumerate() {
            if *u == 0 {
                continue;
            }
            for (j, v) in b.iter().enumerate() {
                acc[i + j] -= Rational::from(u * v);
            }
        }
        trim(acc);
    }
    fn div_exact(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        if self.is_zero(b) {
            return None;
        }
        if self.is_zero(a) {
            return Some(Vec::new());
        }
        if a.len() < b.len() {
            return None;
        }
        let mut rem = a.clone();
        let mut q = vec![Rational::new(); a.len() - b.len() + 1];
        let lead = &b[b.len() - 1];
        for d in (0..q.len()).rev() {
            let c = Rational::from(&rem[d + b.len() - 1] / lead);
            if c != 0 {
                for (i, v) in b.iter().enumerate() {
                    rem[d + i] -= Rational::from(&c * v);
                }
            }
            q[d] = c;
        }
        if rem.iter().any(|c| *c != 0) {
            return None;
        }
        trim(&mut q);
        Some(q)
    }
    fn from_i64(&self, n: i64) -> Poly {
        if n == 0 {
            Vec::new()
        } else {
            vec![Rational::from(n)]
        }
    }
}

impl WithX for PolyRing {
    fn x(&self) -> Poly {
        vec![Rational::new(), Rational::from(1)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let r = PolyRing;
        // (1+x)(2-x) = 2 + x - x^2
        let a: Poly = vec![Rational::from(2), Rational::from(1), Rational::from(-1)];
        let b: Poly = vec![Rational::from(1), Rational::from(1)];
        let q = r.div_exact(&a, &b).unwrap();
        assert_eq!(q, vec![Rational::from(2), Rational::from(-1)]);
        // inexact
        let c: Poly = vec![Rational::from(1), Rational::from(1), Rational::from(1)];
        assert!(r.div_exact(&c, &b).is_none());
    }

    #[test]
    fn eval_and_sum() {
        let p = XPolynomial::from_i64s(&[2, 18, 21, 1]);
        assert_eq!(p.coeff_sum(), Rational::from(42));
        assert_eq!(p.eval(&Rational::from(1)), Rational::from(42));
        assert_eq!(p.eval(&Rational::new()), Rational::from(2));
    }
}
