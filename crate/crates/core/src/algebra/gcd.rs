//! Multivariate GCD via content extraction and a subresultant
//! pseudo-remainder sequence, recursing on the global variable order.

use super::poly::{Mono, Poly};
use super::scalar::Scalar;
use super::vars::{Var, NVARS};

/// View `p` as univariate in `v`: coefficients (polys free of `v`) indexed by
/// the v-degree, highest degree last position occupied.
fn coeffs_in(p: &Poly, v: Var) -> Vec<Poly> {
    let d = p.max_degree_of(v) as usize;
    let mut out = vec![Poly::zero(); d + 1];
    let vi = v.index();
    for (m, c) in &p.terms {
        let e = m.0[vi] as usize;
        let mut m2 = *m;
        m2.0[vi] = 0;
        out[e] = &out[e] + &Poly { terms: vec![(m2, c.clone())] };
    }
    out
}

fn leading_in(p: &Poly, v: Var) -> Poly {
    let d = p.max_degree_of(v);
    let vi = v.index();
    let mut out = Vec::new();
    for (m, c) in &p.terms {
        if m.0[vi] == d {
            let mut m2 = *m;
            m2.0[vi] = 0;
            out.push((m2, c.clone()));
        }
    }
    Poly::from_terms(out)
}

/// Pseudo-remainder of a by b in variable v: prem = lc(b)^(da-db+1) * a mod b.
fn prem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.max_degree_of(v);
    let lb = leading_in(b, v);
    let mut r = a.clone();
    let da = a.max_degree_of(v);
    if da < db {
        // convention: prem = lc(b)^(da-db+1) a is not a polynomial power; callers
        // always pass deg a >= deg b
        return r;
    }
    let mut steps_left = (da - db + 1) as i32;
    while !r.is_zero() && r.max_degree_of(v) >= db {
        let dr = r.max_degree_of(v);
        let lr = leading_in(&r, v);
        let mut shift = Mono::one();
        shift.0[v.index()] = dr - db;
        // r := lb * r - lr * v^(dr-db) * b
        r = &(&lb * &r) - &(&lr * &b.mul_mono(&shift, &Scalar::one()));
        steps_left -= 1;
    }
    // normalize to the full lc(b)^(da-db+1) factor
    for _ in 0..steps_left {
        r = &lb * &r;
    }
    r
}

/// Content of p w.r.t. v: gcd of its v-coefficients.
fn content_in(p: &Poly, v: Var) -> Poly {
    let cs = coeffs_in(p, v);
    let mut g = Poly::zero();
    for c in cs {
        if !c.is_zero() {
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Normalize so the graded-lex leading coefficient is 1.
pub fn monic(p: &Poly) -> Poly {
    match p.leading_coeff() {
        None => Poly::zero(),
        Some(c) => p.scale(&c.inv()),
    }
}

/// Extract the largest common monomial factor of all terms.
fn mono_content(p: &Poly) -> Mono {
    let mut acc: Option<Mono> = None;
    for (m, _) in &p.terms {
        acc = Some(match acc {
            None => *m,
            Some(a) => a.gcd(m),
        });
        if let Some(a) = &acc {
            if a.is_one() {
                break;
            }
        }
    }
    acc.unwrap_or_else(Mono::one)
}

/// GCD normalized to leading coefficient 1. gcd(p, 0) = monic(p).
pub fn gcd(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return monic(q);
    }
    if q.is_zero() {
        return monic(p);
    }
    if p.is_constant() || q.is_constant() {
        return Poly::one();
    }
    // cheap shortcuts: one divides the other
    if p.exact_div(q).is_some() {
        return monic(q);
    }
    if q.exact_div(p).is_some() {
        return monic(p);
    }
    // pull out common monomial factor first
    let mp = mono_content(p);
    let mq = mono_content(q);
    let mcommon = mp.gcd(&mq);
    let pr = strip_mono(p, &mp);
    let qr = strip_mono(q, &mq);
    let core = gcd_inner(&pr, &qr);
    let with_mono = core.mul_mono(&mcommon, &Scalar::one());
    monic(&with_mono)
}

fn strip_mono(p: &Poly, m: &Mono) -> Poly {
    if m.is_one() {
        return p.clone();
    }
    Poly {
        terms: p
            .terms
            .iter()
            .map(|(mm, c)| (m.quot(mm), c.clone()))
            .collect(),
    }
}

fn gcd_inner(p: &Poly, q: &Poly) -> Poly {
    if p.is_constant() || q.is_constant() {
        return Poly::one();
    }
    // main variable: smallest global index present in either
    let mut main: Option<Var> = None;
    'outer: for i in 0..NVARS {
        for (m, _) in p.terms.iter().chain(q.terms.iter()) {
            if m.0[i] > 0 {
                main = Some(Var(i as u8));
                break 'outer;
            }
        }
    }
    let v = main.expect("nonconstant polynomial with no variables");
    let dp = p.max_degree_of(v);
    let dq = q.max_degree_of(v);
    if dp == 0 || dq == 0 {
        // v occurs in only one of them: gcd divides the v-free one and the
        // content of the other
        let (with_v, without_v) = if dp == 0 { (q, p) } else { (p, q) };
        let cont = content_in(with_v, v);
        return gcd(&cont, without_v);
    }
    let (mut a, mut b) = if dp >= dq {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    };
    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    a = a.exact_div(&ca).expect("content divides");
    b = b.exact_div(&cb).expect("content divides");
    let d = gcd(&ca, &cb);

    // subresultant PRS (Cohen, Algorithm 3.3.1)
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = a.max_degree_of(v) - b.max_degree_of(v);
        let r = prem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if r.max_degree_of(v) == 0 {
            // primitive parts are coprime in v
            return d;
        }
        let divisor = &g * &h.pow(delta as u32);
        a = b;
        b = r.exact_div(&divisor).expect("subresultant divisor divides");
        g = leading_in(&a, v);
        // h := g^delta * h^(1-delta)
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta as u32);
            if delta == 1 {
                num
            } else {
                num.exact_div(&h.pow(delta as u32 - 1))
                    .expect("h power divides")
            }
        };
    }
    let pp = b
        .exact_div(&content_in(&b, v))
        .expect("content divides");
    monic(&(&d * &pp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::{T, X, Y};

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = Poly::var(X).scale(&Scalar::from_int(3)) + Poly::int(6);
        assert_eq!(gcd(&f, &Poly::zero()), monic(&f));
        assert_eq!(gcd(&Poly::zero(), &f), monic(&f));
    }

    #[test]
    fn difference_of_squares() {
        let x = Poly::var(X);
        let y = Poly::var(Y);
        let f = &(&x * &x) - &(&y * &y);
        let g = &x - &y;
        assert_eq!(gcd(&f, &g), monic(&g));
    }

    #[test]
    fn structured_factors() {
        // gcd((x+t)^2 (y-1), (x+t)(y-1)^2) = (x+t)(y-1), verified by division
        let xt = Poly::var(X) + Poly::var(T);
        let y1 = Poly::var(Y) - Poly::one();
        let f = &xt.pow(2) * &y1;
        let g = &xt * &y1.pow(2);
        let d = gcd(&f, &g);
        let expect = monic(&(&xt * &y1));
        assert_eq!(d, expect);
        assert!(f.exact_div(&d).is_some());
        assert!(g.exact_div(&d).is_some());
    }
}
