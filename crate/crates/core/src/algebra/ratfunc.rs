//! Reduced rational functions: numerator/denominator pairs with gcd 1 and a
//! monic denominator, so equality is structural.

use super::gcd::gcd;
use super::poly::Poly;
use super::scalar::Scalar;
use super::vars::{Var, VarKind, NVARS};
use crate::error::AlgebraError;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rf {
    num: Poly,
    den: Poly,
}

impl Rf {
    pub fn new(num: Poly, den: Poly) -> Result<Rf, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rf::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Rf {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Rf {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let (mut n, mut d) = (num, den);
        if !d.is_one() {
            let g = gcd(&n, &d);
            if !g.is_one() {
                n = n.exact_div(&g).expect("gcd divides numerator");
                d = d.exact_div(&g).expect("gcd divides denominator");
            }
        }
        // monic denominator
        let lc = d.leading_coeff().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.inv();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Rf { num: n, den: d }
    }

    pub fn zero() -> Rf {
        Rf {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Rf {
        Rf {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn int(n: i64) -> Rf {
        Rf {
            num: Poly::int(n),
            den: Poly::one(),
        }
    }

    pub fn rat(n: i64, d: i64) -> Rf {
        Rf::from_poly(Poly::int(n)) / Rf::from_poly(Poly::int(d))
    }

    pub fn scalar(c: Scalar) -> Rf {
        Rf {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> Rf {
        Rf {
            num: Poly::var(v),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Rf {
        Rf {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the reduced denominator involves none of the given variables.
    pub fn is_polynomial_in(&self, vars: &[Var]) -> bool {
        !vars.iter().any(|v| self.den.contains_var(*v))
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn vars_present(&self) -> Vec<Var> {
        let mut vs = self.num.vars_present();
        for v in self.den.vars_present() {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        vs.sort();
        vs
    }

    pub fn inv(&self) -> Result<Rf, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rf::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> Rf {
        if e < 0 {
            let p = self.pow(-e);
            return p.inv().expect("negative power of zero");
        }
        Rf::reduced(self.num.pow(e as u32), self.den.pow(e as u32))
    }

    pub fn diff(&self, v: Var) -> Rf {
        let n = &(&self.num.diff(v) * &self.den) - &(&self.num * &self.den.diff(v));
        Rf::reduced(n, self.den.pow(2))
    }

    /// Simultaneous substitution; unbound variables pass through.
    /// Errors when a denominator reduces to zero symbolically.
    pub fn substitute(&self, bindings: &VarMap) -> Result<Rf, AlgebraError> {
        let n = subst_poly(&self.num, bindings)?;
        let d = subst_poly(&self.den, bindings)?;
        if d.is_zero() {
            return Err(AlgebraError::SubstitutionDenominatorZero);
        }
        Ok(n / d)
    }

    /// Exact limit eps -> 0. The reduced form cancels common eps powers; a
    /// remaining eps factor in the denominator is a pole.
    pub fn limit_var_zero(&self, eps: Var) -> Result<Rf, AlgebraError> {
        if eps.kind() != VarKind::Epsilon {
            return Err(AlgebraError::NotEpsilonKind(eps));
        }
        // after reduction, eps cannot divide both num and den
        if self.den.set_var_zero(eps).is_zero() {
            return Err(AlgebraError::PoleAtEpsilonZero {
                witness: format!("{:?}", self.den),
            });
        }
        let n = self.num.set_var_zero(eps);
        let d = self.den.set_var_zero(eps);
        Ok(Rf::reduced(n, d))
    }

    /// Evaluate exactly at a scalar point. Errors when the denominator
    /// vanishes at the point.
    pub fn eval(&self, point: &[Scalar; NVARS]) -> Result<Scalar, AlgebraError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(&self.num.eval(point) * &d.inv())
    }
}

impl fmt::Debug for Rf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.den)
        }
    }
}

impl Add for &Rf {
    type Output = Rf;
    fn add(self, rhs: &Rf) -> Rf {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Rf::reduced(&self.num + &rhs.num, self.den.clone());
        }
        // classical gcd trick to keep intermediates small
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            Rf::reduced(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            )
        } else {
            let da = self.den.exact_div(&g).unwrap();
            let db = rhs.den.exact_div(&g).unwrap();
            let num = &(&self.num * &db) + &(&rhs.num * &da);
            let den = &(&self.den * &db);
            Rf::reduced(num, den.clone())
        }
    }
}

impl Sub for &Rf {
    type Output = Rf;
    fn sub(self, rhs: &Rf) -> Rf {
        self + &(-rhs)
    }
}

impl Neg for &Rf {
    type Output = Rf;
    fn neg(self) -> Rf {
        Rf {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Rf {
    type Output = Rf;
    fn neg(self) -> Rf {
        Rf {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for &Rf {
    type Output = Rf;
    fn mul(self, rhs: &Rf) -> Rf {
        if self.is_zero() || rhs.is_zero() {
            return Rf::zero();
        }
        // cross-reduce before multiplying
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        Rf::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &Rf {
    type Output = Rf;
    fn div(self, rhs: &Rf) -> Rf {
        assert!(!rhs.is_zero(), "division by zero rational function");
        self * &Rf {
            num: rhs.den.clone(),
            den: rhs.num.clone(),
        }
    }
}

macro_rules! forward_rf_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Rf {
            type Output = Rf;
            fn $m(self, rhs: Rf) -> Rf {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Rf> for Rf {
            type Output = Rf;
            fn $m(self, rhs: &Rf) -> Rf {
                (&self).$m(rhs)
            }
        }
        impl $tr<Rf> for &Rf {
            type Output = Rf;
            fn $m(self, rhs: Rf) -> Rf {
                self.$m(&rhs)
            }
        }
    };
}
forward_rf_owned!(Add, add);
forward_rf_owned!(Sub, sub);
forward_rf_owned!(Mul, mul);
forward_rf_owned!(Div, div);

/// Simultaneous variable bindings for substitution.
#[derive(Clone, Default)]
pub struct VarMap {
    map: BTreeMap<Var, Rf>,
}

impl VarMap {
    pub fn new() -> Self {
        VarMap {
            map: BTreeMap::new(),
        }
    }

    pub fn bind(mut self, v: Var, e: Rf) -> Self {
        self.map.insert(v, e);
        self
    }

    pub fn insert(&mut self, v: Var, e: Rf) {
        self.map.insert(v, e);
    }

    pub fn get(&self, v: Var) -> Option<&Rf> {
        self.map.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Rf)> {
        self.map.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Composition: apply `self` first, then `other` to the results.
    /// (self ; other)(v) = substitute(self(v), other), plus other's bindings
    /// for variables self leaves untouched.
    pub fn then(&self, other: &VarMap) -> Result<VarMap, AlgebraError> {
        let mut out = other.clone();
        for (v, e) in &self.map {
            out.map.insert(*v, e.substitute(other)?);
        }
        Ok(out)
    }
}

/// Substitute into a polynomial over a common denominator: with bindings
/// v_i -> n_i/d_i and M_i the max degree of v_i, the image is
/// sum_terms c * prod n_i^{e_i} d_i^{M_i-e_i} * (rest) / prod d_i^{M_i}.
pub fn subst_poly(p: &Poly, bindings: &VarMap) -> Result<Rf, AlgebraError> {
    if p.is_zero() {
        return Ok(Rf::zero());
    }
    let active: Vec<(Var, &Rf)> = bindings
        .map
        .iter()
        .filter(|(v, _)| p.contains_var(**v))
        .map(|(v, e)| (*v, e))
        .collect();
    if active.is_empty() {
        return Ok(Rf::from_poly(p.clone()));
    }
    let maxdeg: Vec<u16> = active.iter().map(|(v, _)| p.max_degree_of(*v)).collect();
    // power tables
    let mut npows: Vec<Vec<Poly>> = Vec::with_capacity(active.len());
    let mut dpows: Vec<Vec<Poly>> = Vec::with_capacity(active.len());
    for (k, (_, e)) in active.iter().enumerate() {
        let md = maxdeg[k] as usize;
        let mut np = Vec::with_capacity(md + 1);
        let mut dp = Vec::with_capacity(md + 1);
        np.push(Poly::one());
        dp.push(Poly::one());
        for j in 1..=md {
            let pn = &np[j - 1] * e.num();
            let pd = &dp[j - 1] * e.den();
            np.push(pn);
            dp.push(pd);
        }
        npows.push(np);
        dpows.push(dp);
    }
    let mut total = Poly::zero();
    for (m, c) in &p.terms {
        // residual monomial on unbound variables
        let mut rest = *m;
        let mut factor = Poly::constant(c.clone());
        for (k, (v, _)) in active.iter().enumerate() {
            let e = m.degree_of(*v) as usize;
            rest.0[v.index()] = 0;
            factor = &factor * &npows[k][e];
            factor = &factor * &dpows[k][maxdeg[k] as usize - e];
        }
        factor = factor.mul_mono(&rest, &Scalar::one());
        total = &total + &factor;
    }
    let mut den = Poly::one();
    for (k, _) in active.iter().enumerate() {
        den = &den * &dpows[k][maxdeg[k] as usize];
    }
    Ok(Rf::reduced(total, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::{EPS, T, X, Y};

    fn v(x: Var) -> Rf {
        Rf::var(x)
    }

    #[test]
    fn additive_inverse() {
        let e = &v(X) / &v(T);
        assert!((&e + &(-&e)).is_zero());
    }

    #[test]
    fn factor_cancellation() {
        // (x^2 - y^2)/(x - y) = x + y
        let n = &(&v(X) * &v(X)) - &(&v(Y) * &v(Y));
        let d = &v(X) - &v(Y);
        assert_eq!(&n / &d, &v(X) + &v(Y));
    }

    #[test]
    fn diff_quotient() {
        // d(x/t)/dt = -x/t^2
        let e = &v(X) / &v(T);
        let expect = &(-&v(X)) / &(&v(T) * &v(T));
        assert_eq!(e.diff(T), expect);
    }

    #[test]
    fn substitution_telescopes() {
        // f = x*y with x -> 1/x, y -> -x(xy + a2) gives -(xy + a2)
        use crate::algebra::vars::A2;
        let f = &v(X) * &v(Y);
        let m = VarMap::new()
            .bind(X, v(X).inv().unwrap())
            .bind(Y, -&(&v(X) * &(&(&v(X) * &v(Y)) + &v(A2))));
        let got = f.substitute(&m).unwrap();
        let expect = -&(&(&v(X) * &v(Y)) + &v(A2));
        assert_eq!(got, expect);
    }

    #[test]
    fn eps_limits() {
        // (eps^2 + eps)/eps -> 1
        let e = &(&(&v(EPS) * &v(EPS)) + &v(EPS)) / &v(EPS);
        assert_eq!(e.limit_var_zero(EPS).unwrap(), Rf::one());
        // 1/eps -> pole
        assert!(v(EPS).inv().unwrap().limit_var_zero(EPS).is_err());
        // eps must have the right kind
        assert!(v(X).limit_var_zero(T).is_err());
    }
}
