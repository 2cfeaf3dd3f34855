//! Truncated power series in q over a generic coefficient ring.
//!
//! Everything here discards terms above q^order. The generating functions
//! of interest are all assembled from factors (1 ± A·q^e), so the engine
//! leans on in-place factor multiplication and factor division, both O(N)
//! ring operations, with a general convolution for the rest.

use super::ring::Ring;
use crate::error::{Error, Result};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<R: Ring> {
    pub order: usize,
    pub coeffs: Vec<R::Elem>,
}

impl<R: Ring> Series<R> {
    pub fn zero(ring: &R, order: usize) -> Self {
        Series { order, coeffs: vec![ring.zero(); order + 1] }
    }

    pub fn one(ring: &R, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        s.coeffs[0] = ring.one();
        s
    }

    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    pub fn add(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| ring.add(a, b))
            .collect();
        Ok(Series { order: self.order, coeffs })
    }

    pub fn sub(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| ring.sub(a, b))
            .collect();
        Ok(Series { order: self.order, coeffs })
    }

    /// Full convolution product, truncated. Parallel over output indices
    /// for large orders; each output is accumulated in a fixed order, so
    /// results do not depend on the thread count.
    pub fn mul(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        let n = self.order;
        let conv = |m: usize| {
            let mut acc = ring.zero();
            for i in 0..=m {
                if ring.is_zero(&self.coeffs[i]) {
                    continue;
                }
                ring.add_mul(&mut acc, &self.coeffs[i], &other.coeffs[m - i]);
            }
            acc
        };
        let coeffs: Vec<R::Elem> = if n >= 256 {
            (0..=n).into_par_iter().map(conv).collect()
        } else {
            (0..=n).map(conv).collect()
        };
        Ok(Series { order: n, coeffs })
    }

    pub fn scale(&mut self, ring: &R, c: &R::Elem) {
        for v in self.coeffs.iter_mut() {
            *v = ring.mul(v, c);
        }
    }

    /// Divide every coefficient by `c`, which must divide exactly.
    pub fn scale_div(&mut self, ring: &R, c: &R::Elem) -> Result<()> {
        for v in self.coeffs.iter_mut() {
            *v = ring
                .div_exact(v, c)
                .ok_or_else(|| Error::NonCancellation("scalar division not exact".into()))?;
        }
        Ok(())
    }

    /// Multiply by q^e in place.
    pub fn shift_up(&mut self, ring: &R, e: usize) {
        if e == 0 {
            return;
        }
        for i in (0..=self.order).rev() {
            self.coeffs[i] = if i >= e {
                self.coeffs[i - e].clone()
            } else {
                ring.zero()
            };
        }
    }

    /// S *= (1 + A·q^e) when `plus`, else (1 − A·q^e).
    pub fn mul_factor(&mut self, ring: &R, a: &R::Elem, e: usize, plus: bool) {
        if e == 0 || e > self.order || ring.is_zero(a) {
            debug_assert!(e > 0, "constant factors are handled by scale()");
            return;
        }
        let one = ring.one();
        let a_is_one = *a == one;
        for m in (e..=self.order).rev() {
            let (head, tail) = self.coeffs.split_at_mut(m);
            let src = &head[m - e];
            if ring.is_zero(src) {
                continue;
            }
            let dst = &mut tail[0];
            if a_is_one {
                *dst = if plus { ring.add(dst, src) } else { ring.sub(dst, src) };
            } else if plus {
                ring.add_mul(dst, a, src);
            } else {
                ring.sub_mul(dst, a, src);
            }
        }
    }

    /// S /= (1 + A·q^e) when `plus`, else (1 − A·q^e).
    pub fn div_factor(&mut self, ring: &R, a: &R::Elem, e: usize, plus: bool) {
        if e == 0 || e > self.order || ring.is_zero(a) {
            debug_assert!(e > 0);
            return;
        }
        let one = ring.one();
        let a_is_one = *a == one;
        for m in e..=self.order {
            let (head, tail) = self.coeffs.split_at_mut(m);
            let src = &head[m - e];
            if ring.is_zero(src) {
                continue;
            }
            let dst = &mut tail[0];
            if a_is_one {
                *dst = if plus { ring.sub(dst, src) } else { ring.add(dst, src) };
            } else if plus {
                ring.sub_mul(dst, a, src);
            } else {
                ring.add_mul(dst, a, src);
            }
        }
    }

    /// S *= Π_{k≥0} (1 − A·q^{start + k·step}); `plus` flips every factor
    /// to (1 + A·q^…).
    pub fn mul_pochhammer(&mut self, ring: &R, a: &R::Elem, start: usize, step: usize, plus: bool) {
        assert!(start >= 1 && step >= 1);
        let mut e = start;
        while e <= self.order {
            self.mul_factor(ring, a, e, plus);
            e += step;
        }
    }

    /// S /= Π_{k≥0} (1 − A·q^{start + k·step}); `plus` as above.
    pub fn div_pochhammer(&mut self, ring: &R, a: &R::Elem, start: usize, step: usize, plus: bool) {
        assert!(start >= 1 && step >= 1);
        let mut e = start;
        while e <= self.order {
            self.div_factor(ring, a, e, plus);
            e += step;
        }
    }

    /// Map coefficients into another ring.
    pub fn map<S: Ring>(&self, f: impl Fn(&R::Elem) -> S::Elem) -> Series<S> {
        Series { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Reindex q ↦ q^k, extending the order to `new_order`.
    pub fn inflate(&self, ring: &R, k: usize, new_order: usize) -> Series<R> {
        assert!(k >= 1);
        let mut out = Series::zero(ring, new_order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = i * k;
            if j <= new_order {
                out.coeffs[j] = c.clone();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::ring::Rationals;
    use rug::Rational;

    fn ints(s: &Series<Rationals>) -> Vec<i64> {
        s.coeffs.iter().map(|c| c.to_f64() as i64).collect()
    }

    #[test]
    fn factor_and_inverse() {
        let ring = Rationals;
        let one = ring.one();
        let mut s = Series::one(&ring, 6);
        s.mul_factor(&ring, &one, 2, true); // 1 + q^2
        s.div_factor(&ring, &one, 2, true);
        assert_eq!(s, Series::one(&ring, 6));

        let mut s = Series::one(&ring, 6);
        s.div_factor(&ring, &one, 1, false); // 1/(1-q)
        assert_eq!(ints(&s), vec![1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn mul_matches_factor_route() {
        let ring = Rationals;
        let one = ring.one();
        let mut a = Series::one(&ring, 8);
        a.mul_factor(&ring, &one, 1, true);
        let mut b = Series::one(&ring, 8);
        b.mul_factor(&ring, &one, 3, false);
        let prod = a.mul(&ring, &b).unwrap();
        let mut direct = Series::one(&ring, 8);
        direct.mul_factor(&ring, &one, 1, true);
        direct.mul_factor(&ring, &one, 3, false);
        assert_eq!(prod, direct);
    }

    #[test]
    fn order_mismatch_is_reported() {
        let ring = Rationals;
        let a = Series::one(&ring, 3);
        let b = Series::one(&ring, 4);
        assert!(matches!(a.mul(&ring, &b), Err(crate::error::Error::OrderMismatch(3, 4))));
    }

    #[test]
    fn scale_div_checks_exactness() {
        let ring = Rationals;
        let mut s = Series::one(&ring, 2);
        s.scale(&ring, &Rational::from(6));
        assert!(s.scale_div(&ring, &Rational::from(3)).is_ok());
        assert_eq!(ints(&s), vec![2, 0, 0]);
    }
}
