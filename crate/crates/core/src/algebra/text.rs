//! Canonical plain-text serialization for polynomials and rational functions.
//!
//! Grammar (whitespace-free except the ` + ` separators shown):
//!   rf     := poly | "(" poly ") / (" poly ")"
//!   poly   := "0" | term (" + " term)*
//!   term   := scalar | scalar "*" mono
//!   scalar := "(" rat "+" rat "*i+" rat "*r2+" rat "*i*r2" ")"
//!   mono   := var "^" uint ("*" var "^" uint)*
//!   rat    := ["-"] uint ["/" uint]
//! Terms print in descending graded-lex order, so serialization is canonical
//! and round-trips bit-exactly.

use super::poly::{Mono, Poly};
use super::ratfunc::Rf;
use super::scalar::Scalar;
use super::vars::Var;
use crate::error::AlgebraError;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use std::str::FromStr;

pub fn scalar_to_text(c: &Scalar) -> String {
    format!("({}+{}*i+{}*r2+{}*i*r2)", c.a, c.b, c.c, c.d)
}

fn mono_to_text(m: &Mono) -> Option<String> {
    if m.is_one() {
        return None;
    }
    let parts: Vec<String> = m
        .vars()
        .map(|v| format!("{}^{}", v.name(), m.degree_of(v)))
        .collect();
    Some(parts.join("*"))
}

pub fn poly_to_text(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = p
        .terms
        .iter()
        .map(|(m, c)| match mono_to_text(m) {
            Some(ms) => format!("{}*{}", scalar_to_text(c), ms),
            None => scalar_to_text(c),
        })
        .collect();
    parts.join(" + ")
}

pub fn rf_to_text(f: &Rf) -> String {
    if f.den().is_one() {
        poly_to_text(f.num())
    } else {
        format!("({}) / ({})", poly_to_text(f.num()), poly_to_text(f.den()))
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> Result<(), AlgebraError> {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(AlgebraError::Parse(format!(
                "expected '{}' at byte {} in '{}'",
                tok, self.pos, self.s
            )))
        }
    }

    fn try_eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn parse_rat(&mut self) -> Result<BigRational, AlgebraError> {
        let neg = self.try_eat("-");
        let start = self.pos;
        while self
            .rest()
            .chars()
            .next()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(AlgebraError::Parse(format!(
                "expected digits at byte {} in '{}'",
                self.pos, self.s
            )));
        }
        let numer = BigInt::from_str(&self.s[start..self.pos])
            .map_err(|e| AlgebraError::Parse(e.to_string()))?;
        let denom = if self.try_eat("/") {
            let d0 = self.pos;
            while self
                .rest()
                .chars()
                .next()
                .map(|c| c.is_ascii_digit())
                .unwrap_or(false)
            {
                self.pos += 1;
            }
            BigInt::from_str(&self.s[d0..self.pos])
                .map_err(|e| AlgebraError::Parse(e.to_string()))?
        } else {
            BigInt::from(1)
        };
        if denom.is_zero() {
            return Err(AlgebraError::Parse("zero denominator".into()));
        }
        let r = BigRational::new(numer, denom);
        Ok(if neg { -r } else { r })
    }

    fn parse_scalar(&mut self) -> Result<Scalar, AlgebraError> {
        self.eat("(")?;
        let a = self.parse_rat()?;
        self.eat("+")?;
        let b = self.parse_rat()?;
        self.eat("*i+")?;
        let c = self.parse_rat()?;
        self.eat("*r2+")?;
        let d = self.parse_rat()?;
        self.eat("*i*r2)")?;
        Ok(Scalar::new(a, b, c, d))
    }

    fn parse_var(&mut self) -> Result<Var, AlgebraError> {
        let start = self.pos;
        while self
            .rest()
            .chars()
            .next()
            .map(|c| c.is_ascii_alphanumeric())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        let name = &self.s[start..self.pos];
        Var::by_name(name)
            .ok_or_else(|| AlgebraError::Parse(format!("unknown variable '{name}'")))
    }

    fn parse_term(&mut self) -> Result<(Mono, Scalar), AlgebraError> {
        let c = self.parse_scalar()?;
        let mut m = Mono::one();
        while self.try_eat("*") {
            let v = self.parse_var()?;
            self.eat("^")?;
            let e0 = self.pos;
            while self
                .rest()
                .chars()
                .next()
                .map(|ch| ch.is_ascii_digit())
                .unwrap_or(false)
            {
                self.pos += 1;
            }
            let e: u16 = self.s[e0..self.pos]
                .parse()
                .map_err(|_| AlgebraError::Parse("bad exponent".into()))?;
            m.0[v.index()] += e;
        }
        Ok((m, c))
    }

    fn parse_poly(&mut self) -> Result<Poly, AlgebraError> {
        if self.try_eat("0") && !self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            return Ok(Poly::zero());
        }
        let mut terms = vec![self.parse_term()?];
        while self.try_eat(" + ") {
            terms.push(self.parse_term()?);
        }
        Ok(Poly::from_terms(terms))
    }
}

pub fn poly_from_text(s: &str) -> Result<Poly, AlgebraError> {
    let mut c = Cursor::new(s);
    let p = c.parse_poly()?;
    if !c.rest().is_empty() {
        return Err(AlgebraError::Parse(format!(
            "trailing input '{}'",
            c.rest()
        )));
    }
    Ok(p)
}

pub fn rf_from_text(s: &str) -> Result<Rf, AlgebraError> {
    // try the quotient form first: "(num) / (den)"
    if let Some(idx) = s.find(") / (") {
        let inner_num = &s[1..idx];
        let inner_den = &s[idx + 5..];
        if s.starts_with('(') && inner_den.ends_with(')') {
            let nn = poly_from_text(inner_num);
            let dd = poly_from_text(&inner_den[..inner_den.len() - 1]);
            if let (Ok(n), Ok(d)) = (nn, dd) {
                return Rf::new(n, d);
            }
        }
    }
    Ok(Rf::from_poly(poly_from_text(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::{A2, T, X, Y};

    #[test]
    fn poly_roundtrip() {
        let p = &(&Poly::var(X).pow(2) * &Poly::var(Y)).scale(&Scalar::from_rat(-3, 2))
            + &Poly::var(T).scale(&(&Scalar::i() + &Scalar::sqrt2()));
        let s = poly_to_text(&p);
        assert_eq!(poly_from_text(&s).unwrap(), p);
    }

    #[test]
    fn rf_roundtrip() {
        let f = &(&Rf::var(X) + &Rf::var(A2)) / &(&Rf::var(T) * &(&Rf::var(T) - &Rf::int(1)));
        let s = rf_to_text(&f);
        assert_eq!(rf_from_text(&s).unwrap(), f);
    }

    #[test]
    fn zero_text() {
        assert_eq!(poly_to_text(&Poly::zero()), "0");
        assert_eq!(poly_from_text("0").unwrap(), Poly::zero());
    }
}
