//! Exact scalars in the field Q(i, sqrt(2)).
//!
//! A scalar is stored on the basis {1, i, r2, i*r2} with arbitrary-precision
//! rational components, where r2 = sqrt(2). The multiplication table is
//! i^2 = -1, r2^2 = 2, (i*r2)^2 = -2; the algebra is closed and every nonzero
//! element is invertible (the norm down to Q is positive).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Scalar { a, b, c, d }
    }

    pub fn zero() -> Self {
        Scalar::from_int(0)
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(rat(n, 1), rat(0, 1), rat(0, 1), rat(0, 1))
    }

    pub fn from_rat(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::new(rat(n, d), rat(0, 1), rat(0, 1), rat(0, 1))
    }

    pub fn from_big(r: BigRational) -> Self {
        Scalar::new(r, rat(0, 1), rat(0, 1), rat(0, 1))
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        Scalar::new(rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1))
    }

    /// sqrt(2).
    pub fn sqrt2() -> Self {
        Scalar::new(rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True when the element lies in Q (no i or sqrt(2) component).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True when the element is real, i.e. lies in Q(sqrt(2)).
    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.d.is_zero()
    }

    /// Complex conjugation: i -> -i.
    pub fn conj_i(&self) -> Self {
        Scalar::new(self.a.clone(), -self.b.clone(), self.c.clone(), -self.d.clone())
    }

    /// Galois conjugation: sqrt(2) -> -sqrt(2).
    pub fn conj_r2(&self) -> Self {
        Scalar::new(self.a.clone(), self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero scalar");
        // m = self * conj_i(self) lies in Q(sqrt2): m = A + C*r2
        let m = self * &self.conj_i();
        debug_assert!(m.b.is_zero() && m.d.is_zero());
        // n = m * conj_r2(m) lies in Q and is nonzero
        let n = &m.a * &m.a - rat(2, 1) * &m.c * &m.c;
        debug_assert!(!n.is_zero());
        let factor = self.conj_i() * m.conj_r2();
        let ninv = rat(1, 1) / n;
        Scalar::new(
            factor.a * &ninv,
            factor.b * &ninv,
            factor.c * &ninv,
            factor.d * &ninv,
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Real part as f64: a + c*sqrt(2). Errors are the caller's concern;
    /// use `is_real` to gate.
    pub fn to_f64_real(&self) -> Option<f64> {
        if !self.is_real() {
            return None;
        }
        let a = self.a.to_f64()?;
        let c = self.c.to_f64()?;
        Some(a + c * std::f64::consts::SQRT_2)
    }

    /// Complex embedding (re, im) with i -> (0,1), sqrt2 -> 1.414...
    pub fn to_complex_f64(&self) -> Option<(f64, f64)> {
        let a = self.a.to_f64()?;
        let b = self.b.to_f64()?;
        let c = self.c.to_f64()?;
        let d = self.d.to_f64()?;
        let r2 = std::f64::consts::SQRT_2;
        Some((a + c * r2, b + d * r2))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}*i+{}*r2+{}*i*r2)", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}*i+{}*r2+{}*i*r2)", self.a, self.b, self.c, self.d)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.a + &rhs.a, &self.b + &rhs.b, &self.c + &rhs.c, &self.d + &rhs.d)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.a - &rhs.a, &self.b - &rhs.b, &self.c - &rhs.c, &self.d - &rhs.d)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let two = rat(2, 1);
        Scalar::new(
            a1 * a2 - b1 * b2 + &two * c1 * c2 - &two * d1 * d2,
            a1 * b2 + b1 * a2 + &two * c1 * d2 + &two * d1 * c2,
            a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.c += &rhs.c;
        self.d += &rhs.d;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.c -= &rhs.c;
        self.d -= &rhs.d;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Exact magnitude ordering helper: |s|^2 = (a+c r2)^2 + (b+d r2)^2 as an
/// element of Q(sqrt2) represented by (p, q) meaning p + q*r2. Used by tests.
pub fn abs_sq_qsqrt2(s: &Scalar) -> (BigRational, BigRational) {
    let m = s * &s.conj_i();
    (m.a, m.c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_table() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        let ir2 = &Scalar::i() * &Scalar::sqrt2();
        assert_eq!(&ir2 * &ir2, Scalar::from_int(-2));
    }

    #[test]
    fn one_plus_i_times_conj() {
        // (1+i)(1-i) = 2
        let e = &Scalar::from_int(1) + &Scalar::i();
        assert_eq!(&e * &e.conj_i(), Scalar::from_int(2));
    }

    #[test]
    fn inverse_roundtrip() {
        let samples = [
            Scalar::new(rat(3, 2), rat(-1, 3), rat(2, 5), rat(7, 4)),
            Scalar::i(),
            Scalar::sqrt2(),
            Scalar::from_rat(-5, 7),
            Scalar::new(rat(0, 1), rat(1, 1), rat(1, 1), rat(0, 1)),
        ];
        for e in samples {
            assert_eq!(&e * &e.inv(), Scalar::one(), "failed for {e}");
        }
    }

    #[test]
    fn conjugation_lands_in_qsqrt2() {
        let e = Scalar::new(rat(1, 2), rat(3, 4), rat(-2, 3), rat(5, 6));
        let m = &e * &e.conj_i();
        assert!(m.b.is_zero() && m.d.is_zero());
    }
}
