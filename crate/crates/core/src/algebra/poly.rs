//! Sparse multivariate polynomials over Q(i, sqrt2) in the global variables.
//!
//! Terms are kept sorted in descending graded-lex order with no zero
//! coefficients, so equality is structural.

use super::scalar::Scalar;
use super::vars::{Var, NVARS};
use crate::error::AlgebraError;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0u16; NVARS];
        m[v.index()] = 1;
        Mono(m)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_of(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn mul(&self, rhs: &Mono) -> Mono {
        let mut m = [0u16; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i]
                .checked_add(rhs.0[i])
                .expect("monomial exponent overflow");
        }
        Mono(m)
    }

    pub fn divides(&self, rhs: &Mono) -> bool {
        self.0.iter().zip(rhs.0.iter()).all(|(a, b)| a <= b)
    }

    /// rhs / self, assuming divisibility.
    pub fn quot(&self, rhs: &Mono) -> Mono {
        let mut m = [0u16; NVARS];
        for i in 0..NVARS {
            m[i] = rhs.0[i] - self.0[i];
        }
        Mono(m)
    }

    pub fn gcd(&self, rhs: &Mono) -> Mono {
        let mut m = [0u16; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i].min(rhs.0[i]);
        }
        Mono(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| Var(i as u8))
    }
}

impl Ord for Mono {
    /// Graded lexicographic: total degree first, then lex on the fixed order
    /// (earlier variables more significant).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if !first {
                    write!(f, "*")?;
                }
                write!(f, "{}^{}", Var(i as u8), e)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial; `terms` sorted descending by graded-lex, no zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub terms: Vec<(Mono, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Mono::one(), c)],
            }
        }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Scalar::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Poly {
            terms: vec![(Mono::var(v), Scalar::one())],
        }
    }

    /// Build from unsorted term list, merging duplicates.
    pub fn from_terms(terms: Vec<(Mono, Scalar)>) -> Self {
        let mut map: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&m) {
                Some(acc) => {
                    *acc += &c;
                    if acc.is_zero() {
                        map.remove(&m);
                    }
                }
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut v: Vec<_> = map.into_iter().collect();
        v.reverse();
        Poly { terms: v }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Constant term value (zero if absent).
    pub fn constant_part(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<&(Mono, Scalar)> {
        self.terms.first()
    }

    /// Leading coefficient in graded-lex; zero polynomial has none.
    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.degree_of(v) > 0)
    }

    pub fn vars_present(&self) -> Vec<Var> {
        let mut seen = [false; NVARS];
        for (m, _) in &self.terms {
            for i in 0..NVARS {
                if m.0[i] > 0 {
                    seen[i] = true;
                }
            }
        }
        (0..NVARS).filter(|&i| seen[i]).map(|i| Var(i as u8)).collect()
    }

    /// Max total degree over the listed variables. Zero polynomial is an error.
    pub fn degree_in(&self, vars: &[Var]) -> Result<u32, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomialDegree);
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, _)| vars.iter().map(|v| m.degree_of(*v) as u32).sum())
            .max()
            .unwrap_or(0))
    }

    /// Max degree in a single variable (0 for the zero polynomial).
    pub fn max_degree_of(&self, v: Var) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_of(v))
            .max()
            .unwrap_or(0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (*m, f(c)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative.
    pub fn diff(&self, v: Var) -> Poly {
        let vi = v.index();
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[vi];
            if e > 0 {
                let mut m2 = *m;
                m2.0[vi] = e - 1;
                out.push((m2, c * &Scalar::from_int(e as i64)));
            }
        }
        Poly::from_terms(out)
    }

    /// Substitute v -> 0.
    pub fn set_var_zero(&self, v: Var) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_of(v) == 0)
                .cloned()
                .collect(),
        }
    }

    /// Exact division; None when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if d.is_constant() {
            let inv = d.terms[0].1.inv();
            return Some(self.scale(&inv));
        }
        let (dm, dc) = &d.terms[0];
        let dcinv = dc.inv();
        let mut rem = self.clone();
        let mut quo: Vec<(Mono, Scalar)> = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.terms[0].clone();
            if !dm.divides(&rm) {
                return None;
            }
            let qm = dm.quot(&rm);
            let qc = &rc * &dcinv;
            quo.push((qm, qc.clone()));
            rem = &rem - &d.mul_mono(&qm, &qc);
        }
        Some(Poly {
            terms: {
                // quotient terms come out already in descending order
                quo
            },
        })
    }

    /// Evaluate at a full scalar point (indexed by variable).
    pub fn eval(&self, point: &[Scalar; NVARS]) -> Scalar {
        // cache powers per variable
        let mut maxdeg = [0u16; NVARS];
        for (m, _) in &self.terms {
            for i in 0..NVARS {
                maxdeg[i] = maxdeg[i].max(m.0[i]);
            }
        }
        let mut pows: Vec<Vec<Scalar>> = Vec::with_capacity(NVARS);
        for i in 0..NVARS {
            let mut col = Vec::with_capacity(maxdeg[i] as usize + 1);
            col.push(Scalar::one());
            for k in 1..=maxdeg[i] as usize {
                let prev = col[k - 1].clone();
                col.push(&prev * &point[i]);
            }
            pows.push(col);
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..NVARS {
                let e = m.0[i] as usize;
                if e > 0 {
                    t = &t * &pows[i][e];
                }
            }
            acc += &t;
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("{c}")
                } else {
                    format!("{c}*{m:?}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        // merge two sorted-descending term lists
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match mb.cmp(ma) {
                Ordering::Less => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(rhs.terms[j..].iter().cloned());
        Poly { terms: out }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_mono(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_mono(m, c);
        }
        let mut map: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match map.get_mut(&m) {
                    Some(acc) => {
                        *acc += &c;
                        if acc.is_zero() {
                            map.remove(&m);
                        }
                    }
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        let mut v: Vec<_> = map.into_iter().collect();
        v.reverse();
        Poly { terms: v }
    }
}

macro_rules! forward_poly_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}
forward_poly_owned!(Add, add);
forward_poly_owned!(Sub, sub);
forward_poly_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::{T, X, Y};

    #[test]
    fn grlex_order() {
        let x2 = Mono::var(X).mul(&Mono::var(X));
        let xy = Mono::var(X).mul(&Mono::var(Y));
        let y = Mono::var(Y);
        assert!(x2 > xy); // same degree, x more significant
        assert!(xy > y); // higher total degree wins
    }

    #[test]
    fn arithmetic_basics() {
        let x = Poly::var(X);
        let y = Poly::var(Y);
        let f = &(&x + &y) * &(&x - &y);
        let g = &(&x * &x) - &(&y * &y);
        assert_eq!(f, g);
    }

    #[test]
    fn exact_division() {
        let x = Poly::var(X);
        let y = Poly::var(Y);
        let t = Poly::var(T);
        let f = &(&x + &t) * &(&y - &Poly::one());
        let q = (&f * &f).exact_div(&f).unwrap();
        assert_eq!(q, f);
        assert!(f.exact_div(&(&x + &y)).is_none());
    }

    #[test]
    fn derivative() {
        // d(x^3 y^2)/dx = 3 x^2 y^2
        let f = Poly::var(X).pow(3) * Poly::var(Y).pow(2);
        let expect = Poly::var(X).pow(2).scale(&Scalar::from_int(3)) * Poly::var(Y).pow(2);
        assert_eq!(f.diff(X), expect);
    }
}
