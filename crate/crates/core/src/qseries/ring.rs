//! Coefficient rings for truncated q-series.
//!
//! One generic series engine serves four coefficient rings:
//! plain rationals (univariate series and series specialized at a rational
//! x), dense polynomials in x (distribution polynomials), rational
//! functions in x (the public symbolic mode), and second-order jets at
//! x = 1 (moment extraction). Square roots enter through [`QuadRing`],
//! the quadratic extension R[y]/(y² − d) with d chosen per generating
//! function (1−x² for the hook series, 1−x for the self-conjugate one).

use rug::Rational;
use std::fmt::Debug;

/// A commutative ring with the handful of operations the series engine needs.
/// Implementations are lightweight context objects; elements carry no ring
/// reference of their own.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// acc += a·b
    fn add_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        *acc = self.add(acc, &p);
    }

    /// acc -= a·b
    fn sub_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        *acc = self.sub(acc, &p);
    }

    /// Exact division; None when b does not divide a in this ring.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn from_i64(&self, n: i64) -> Self::Elem;
}

/// Rings that contain the indeterminate x (possibly specialized to a value).
pub trait WithX: Ring {
    fn x(&self) -> Self::Elem;
}

/// ℚ with rug rationals.
#[derive(Clone, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::new()
    }
    fn one(&self) -> Rational {
        Rational::from(1)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        *a == 0
    }
    fn neg(&self, a: &Rational) -> Rational {
        Rational::from(-a)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a + b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a - b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a * b)
    }
    fn add_mul(&self, acc: &mut Rational, a: &Rational, b: &Rational) {
        *acc += Rational::from(a * b);
    }
    fn sub_mul(&self, acc: &mut Rational, a: &Rational, b: &Rational) {
        *acc -= Rational::from(a * b);
    }
    fn div_exact(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        if *b == 0 {
            None
        } else {
            Some(Rational::from(a / b))
        }
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from(n)
    }
}

/// ℚ with x bound to a fixed rational value.
#[derive(Clone, Debug)]
pub struct RationalsAt {
    pub x_value: Rational,
}

impl Ring for RationalsAt {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::new()
    }
    fn one(&self) -> Rational {
        Rational::from(1)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        *a == 0
    }
    fn neg(&self, a: &Rational) -> Rational {
        Rational::from(-a)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a + b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a - b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a * b)
    }
    fn add_mul(&self, acc: &mut Rational, a: &Rational, b: &Rational) {
        *acc += Rational::from(a * b);
    }
    fn sub_mul(&self, acc: &mut Rational, a: &Rational, b: &Rational) {
        *acc -= Rational::from(a * b);
    }
    fn div_exact(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        if *b == 0 {
            None
        } else {
            Some(Rational::from(a / b))
        }
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from(n)
    }
}

impl WithX for RationalsAt {
    fn x(&self) -> Rational {
        self.x_value.clone()
    }
}

/// Order-2 jet at x = 1: value, first and second Taylor coefficients in
/// ε = x − 1 (so c[2] is f''(1)/2), with ε³ = 0.
#[derive(Clone, PartialEq, Debug)]
pub struct Jet(pub [Rational; 3]);

impl Jet {
    pub fn constant(r: Rational) -> Self {
        Jet([r, Rational::new(), Rational::new()])
    }
}

/// ℚ[ε]/(ε³) with x = 1 + ε.
#[derive(Clone, Debug, Default)]
pub struct JetRing;

impl Ring for JetRing {
    type Elem = Jet;

    fn zero(&self) -> Jet {
        Jet::constant(Rational::new())
    }
    fn one(&self) -> Jet {
        Jet::constant(Rational::from(1))
    }
    fn is_zero(&self, a: &Jet) -> bool {
        a.0.iter().all(|c| *c == 0)
    }
    fn neg(&self, a: &Jet) -> Jet {
        Jet([
            Rational::from(-&a.0[0]),
            Rational::from(-&a.0[1]),
            Rational::from(-&a.0[2]),
        ])
    }
    fn add(&self, a: &Jet, b: &Jet) -> Jet {
        Jet([
            Rational::from(&a.0[0] + &b.0[0]),
            Rational::from(&a.0[1] + &b.0[1]),
            Rational::from(&a.0[2] + &b.0[2]),
        ])
    }
    fn sub(&self, a: &Jet, b: &Jet) -> Jet {
        Jet([
            Rational::from(&a.0[0] - &b.0[0]),
            Rational::from(&a.0[1] - &b.0[1]),
            Rational::from(&a.0[2] - &b.0[2]),
        ])
    }
    fn mul(&self, a: &Jet, b: &Jet) -> Jet {
        let c0 = Rational::from(&a.0[0] * &b.0[0]);
        let mut c1 = Rational::from(&a.0[0] * &b.0[1]);
        c1 += Rational::from(&a.0[1] * &b.0[0]);
        let mut c2 = Rational::from(&a.0[0] * &b.0[2]);
        c2 += Rational::from(&a.0[1] * &b.0[1]);
        c2 += Rational::from(&a.0[2] * &b.0[0]);
        Jet([c0, c1, c2])
    }
    fn div_exact(&self, a: &Jet, b: &Jet) -> Option<Jet> {
        // invertible iff the constant term is nonzero
        if b.0[0] == 0 {
            return None;
        }
        let i0 = Rational::from(1) / b.0[0].clone();
        let i1 = -Rational::from(&b.0[1] * &i0) * &i0;
        // (b1² − b0 b2)/b0³
        let mut n = Rational::from(&b.0[1] * &b.0[1]);
        n -= Rational::from(&b.0[0] * &b.0[2]);
        let i2 = n * Rational::from(&i0 * &i0) * &i0;
        Some(self.mul(a, &Jet([i0, i1, i2])))
    }
    fn from_i64(&self, n: i64) -> Jet {
        Jet::constant(Rational::from(n))
    }
}

impl WithX for JetRing {
    fn x(&self) -> Jet {
        Jet([Rational::from(1), Rational::from(1), Rational::new()])
    }
}

/// Element of R[y]/(y² − d): even + odd·y.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadElem<T> {
    pub even: T,
    pub odd: T,
}

/// Quadratic extension of a base ring by a formal square root y of `d`.
#[derive(Clone, Debug)]
pub struct QuadRing<R: Ring> {
    pub base: R,
    pub d: R::Elem,
}

impl<R: Ring> QuadRing<R> {
    pub fn new(base: R, d: R::Elem) -> Self {
        QuadRing { base, d }
    }

    pub fn lift(&self, e: R::Elem) -> QuadElem<R::Elem> {
        QuadElem { even: e, odd: self.base.zero() }
    }

    pub fn y(&self) -> QuadElem<R::Elem> {
        QuadElem { even: self.base.zero(), odd: self.base.one() }
    }
}

impl<R: Ring> Ring for QuadRing<R> {
    type Elem = QuadElem<R::Elem>;

    fn zero(&self) -> Self::Elem {
        QuadElem { even: self.base.zero(), odd: self.base.zero() }
    }
    fn one(&self) -> Self::Elem {
        QuadElem { even: self.base.one(), odd: self.base.zero() }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.even) && self.base.is_zero(&a.odd)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        QuadElem { even: self.base.neg(&a.even), odd: self.base.neg(&a.odd) }
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        QuadElem {
            even: self.base.add(&a.even, &b.even),
            odd: self.base.add(&a.odd, &b.odd),
        }
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        QuadElem {
            even: self.base.sub(&a.even, &b.even),
            odd: self.base.sub(&a.odd, &b.odd),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        // (ae + ao y)(be + bo y) = ae be + ao bo d + (ae bo + ao be) y
        let mut even = self.base.mul(&a.even, &b.even);
        let cross = self.base.mul(&a.odd, &b.odd);
        self.base.add_mul(&mut even, &cross, &self.d);
        let mut odd = self.base.mul(&a.even, &b.odd);
        self.base.add_mul(&mut odd, &a.odd, &b.even);
        QuadElem { even, odd }
    }
    fn add_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        // avoid materializing both halves twice in the hot loops
        if self.base.is_zero(&a.odd) && self.base.is_zero(&b.odd) {
            self.base.add_mul(&mut acc.even, &a.even, &b.even);
            return;
        }
        let p = self.mul(a, b);
        acc.even = self.base.add(&acc.even, &p.even);
        acc.odd = self.base.add(&acc.odd, &p.odd);
    }
    fn sub_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        if self.base.is_zero(&a.odd) && self.base.is_zero(&b.odd) {
            self.base.sub_mul(&mut acc.even, &a.even, &b.even);
            return;
        }
        let p = self.mul(a, b);
        acc.even = self.base.sub(&acc.even, &p.even);
        acc.odd = self.base.sub(&acc.odd, &p.odd);
    }
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.base.is_zero(&b.odd) {
            // componentwise division by a base element
            return Some(QuadElem {
                even: self.base.div_exact(&a.even, &b.even)?,
                odd: self.base.div_exact(&a.odd, &b.even)?,
            });
        }
        // multiply by the conjugate: (be − bo y)/(be² − bo² d)
        let conj = QuadElem { even: b.even.clone(), odd: self.base.neg(&b.odd) };
        let num = self.mul(a, &conj);
        let mut norm = self.base.mul(&b.even, &b.even);
        let sq = self.base.mul(&b.odd, &b.odd);
        self.base.sub_mul(&mut norm, &sq, &self.d);
        Some(QuadElem {
            even: self.base.div_exact(&num.even, &norm)?,
            odd: self.base.div_exact(&num.odd, &norm)?,
        })
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.lift(self.base.from_i64(n))
    }
}

impl<R: WithX> WithX for QuadRing<R> {
    fn x(&self) -> Self::Elem {
        self.lift(self.base.x())
    }
}
