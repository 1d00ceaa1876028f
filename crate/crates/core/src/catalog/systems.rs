//! Construction of every registered Hamiltonian system.

use super::coupling::{coupling_r, CouplingFamily};
use super::painleve::{painleve_hamiltonian, PainleveKind};
use super::{Constraint, HamiltonianSystem, SysPerm};
use crate::algebra::vars::*;
use crate::algebra::{Rf, Var};

fn v(x: Var) -> Rf {
    Rf::var(x)
}

fn n(k: i64) -> Rf {
    Rf::int(k)
}

fn unit_constraint(coeffs: &[(Var, i64)], rhs: i64) -> Constraint {
    Constraint {
        coeffs: coeffs.iter().map(|(v, c)| (*v, n(*c))).collect(),
        rhs: n(rhs),
    }
}

/// Garnier system G(1,1,1,1,1) in two variables, system (1).
pub fn g11111() -> HamiltonianSystem {
    let hvi = painleve_hamiltonian(
        PainleveKind::VI,
        (X, Y, T),
        &[
            n(1) - n(2) * v(A1) - v(A2) - v(A3) - v(A5),
            v(A2),
            v(A1),
            v(A5),
            v(A3),
        ],
    )
    .unwrap();
    let (x, y, z, w, t, s) = (v(X), v(Y), v(Z), v(W), v(T), v(S));
    let h1 = hvi
        - v(A4) * &s * &x * &y / (&t * (&t - &s))
        - v(A3) * (&s - n(1)) * &z * &w / ((&t - n(1)) * (&t - &s))
        + n(2) * (&s - n(1)) * &x * &y * &z * &w / ((&t - n(1)) * (&t - &s))
        - (&t * (&x * &y - v(A3)) * &y * &z + &s * (&z * &w - v(A4)) * &x * &w)
            / (&t * (&t - &s))
        + (n(2) * (&x * &y + v(A1)) + &z * &w + v(A2)) * &x * &z * &w
            / (&t * (&t - n(1)));
    let pi = SysPerm::new()
        .vars(&[(X, Z), (Y, W), (Z, X), (W, Y), (T, S), (S, T)])
        .vars(&[(A3, A4), (A4, A3)]);
    HamiltonianSystem::symmetric_two(
        "G11111",
        vec![PAIR_XY, PAIR_ZW],
        vec![T, S],
        h1,
        pi,
        vec![A1, A2, A3, A4, A5, A6],
        Some(unit_constraint(
            &[(A1, 2), (A2, 1), (A3, 1), (A4, 1), (A5, 1), (A6, 1)],
            1,
        )),
        5,
    )
}

/// The image of system (1) under the Okamoto-type transform S.
pub fn ura_s() -> HamiltonianSystem {
    let hvi = painleve_hamiltonian(
        PainleveKind::VI,
        (X, Y, T),
        &[
            n(1) - v(A1) - v(A2) - v(A3) - v(A5),
            -(v(A1) + v(A2)),
            v(A2),
            v(A1) + v(A5),
            v(A1) + v(A3),
        ],
    )
    .unwrap();
    let (x, y, z, w, t, s) = (v(X), v(Y), v(Z), v(W), v(T), v(S));
    let h1 = hvi
        + v(A4) * &x * &y / (&t - &s)
        + (v(A2) * (&s - n(1)) * &z * &w + n(2) * (&s - n(1)) * &x * &y * &z * &w)
            / ((&t - n(1)) * (&t - &s))
        + (&t * &y + (&x * &y + v(A2)) * &x) * &z * &w / (&t * (&t - n(1)))
        - (&t * (&z * &w + v(A4)) * &y * &z + &s * (&x * &y + v(A2)) * &x * &w)
            / (&t * (&t - &s));
    let pi = SysPerm::new()
        .vars(&[(X, Z), (Y, W), (Z, X), (W, Y), (T, S), (S, T)])
        .vars(&[(A2, A4), (A4, A2)]);
    HamiltonianSystem::symmetric_two(
        "uraS",
        vec![PAIR_XY, PAIR_ZW],
        vec![T, S],
        h1,
        pi,
        vec![A1, A2, A3, A4, A5, A6],
        Some(unit_constraint(
            &[(A1, 2), (A2, 1), (A3, 1), (A4, 1), (A5, 1), (A6, 1)],
            1,
        )),
        5,
    )
}

/// Three-variable generalization of uraS.
pub fn sdegh_3v() -> HamiltonianSystem {
    let hvi = painleve_hamiltonian(
        PainleveKind::VI,
        (X, Y, T),
        &[
            n(1) - v(A1) - v(A2) - v(A3) - v(A5),
            -(v(A1) + v(A2)),
            v(A2),
            v(A1) + v(A5),
            v(A1) + v(A3),
        ],
    )
    .unwrap();
    let h1 = hvi
        + coupling_r(CouplingFamily::Garnier, (X, Y, Z, W, T, S), &v(A2), &v(A4)).unwrap()
        + coupling_r(CouplingFamily::Garnier, (X, Y, Q, P, T, U), &v(A2), &v(A7)).unwrap();
    let pi = SysPerm::new()
        .vars(&[
            (X, Z),
            (Y, W),
            (Z, Q),
            (W, P),
            (Q, X),
            (P, Y),
            (T, S),
            (S, U),
            (U, T),
        ])
        .vars(&[(A2, A4), (A4, A7), (A7, A2)]);
    HamiltonianSystem::symmetric_three(
        "SdeGH-3v",
        vec![PAIR_XY, PAIR_ZW, PAIR_QP],
        vec![T, S, U],
        h1,
        pi,
        vec![A1, A2, A3, A4, A5, A6, A7],
        Some(unit_constraint(
            &[(A1, 2), (A2, 1), (A3, 1), (A4, 1), (A5, 1), (A6, 1), (A7, 1)],
            1,
        )),
        5,
    )
}

/// Degenerate Garnier system G(1,1,1,2), Hamiltonians K_1, K_2 (divided
/// forms of the displayed t^2 K_1 and s(s-1) K_2).
pub fn dv() -> HamiltonianSystem {
    let (x, y, z, w, t, s) = (v(X), v(Y), v(Z), v(W), v(T), v(S));
    let (a0, a1, a2, a3, eta, nu) = (v(A0), v(A1), v(A2), v(A3), v(ETA), v(NU));
    let k1_scaled = x.pow(2) * (&x - &t) * y.pow(2)
        + n(2) * x.pow(2) * &z * &y * &w
        + &x * &z * (&z - &s) * w.pow(2)
        - ((&a0 + &a2 - n(1)) * x.pow(2)
            + &a1 * &x * (&x - &t)
            + &eta * (&x - &t)
            + &eta * &t * &z)
            * &y
        - ((&a0 + &a1 - n(1)) * &x * &z + &a2 * &x * (&z - &s) + &eta * (&s - n(1)) * &z)
            * &w
        + &nu * (&nu + &a3) * &x;
    let k1 = k1_scaled / t.pow(2);
    let k2_scaled = x.pow(2) * &z * y.pow(2)
        + n(2) * &x * &z * (&z - &s) * &y * &w
        + (&z * (&z - n(1)) * (&z - &s) + &s * (&s - n(1)) / &t * &x * &z) * w.pow(2)
        - ((&a0 + &a1 - n(1)) * &x * &z + &a2 * &x * (&z - &s) - &eta * (&s - n(1)) * &z)
            * &y
        - ((&a0 - n(1)) * &z * (&z - n(1))
            + &a1 * &z * (&z - &s)
            + &a2 * (&z - n(1)) * (&z - &s)
            + &s * (&s - n(1)) / &t * (&a2 * &x + &eta * &z))
            * &w
        + &nu * (&nu + &a3) * &z;
    let k2 = k2_scaled / (&s * (&s - n(1)));
    HamiltonianSystem {
        name: "dV",
        pairs: vec![PAIR_XY, PAIR_ZW],
        times: vec![T, S],
        hamiltonians: vec![k1, k2],
        params: vec![ETA, A0, A1, A2, A3, NU],
        constraint: Some(unit_constraint(
            &[(A0, 1), (A1, 1), (A2, 1), (A3, 1), (NU, 2)],
            1,
        )),
        degree_record: 5,
        pi: None,
    }
}

/// Symmetric form of G(1,1,1,2): system (dVV).
pub fn dvv() -> HamiltonianSystem {
    let hv = painleve_hamiltonian(PainleveKind::V, (X, Y, T), &[v(A3), v(A1), v(A4)]).unwrap();
    let (x, y, z, w, t, s) = (v(X), v(Y), v(Z), v(W), v(T), v(S));
    let h1 = hv - v(A2) * &s * &x * &y / (&t * (&s - &t)) - v(A1) * &z * &w / (&s - &t)
        + (&t * x.pow(2) * &y * &w
            + &t * &y * &z * &w
            + v(A1) * &t * &x * &w
            + &s * &y * z.pow(2) * &w
            - &s * &y * &z * &w
            + v(A2) * &s * &y * &z
            - n(2) * &t * &x * &y * &z * &w)
            / (&t * (&s - &t));
    let pi = SysPerm::new()
        .vars(&[(X, Z), (Y, W), (Z, X), (W, Y), (T, S), (S, T)])
        .vars(&[(A1, A2), (A2, A1)]);
    HamiltonianSystem::symmetric_two(
        "dVV",
        vec![PAIR_XY, PAIR_ZW],
        vec![T, S],
        h1,
        pi,
        vec![A1, A2, A3, A4, A5],
        Some(unit_constraint(
            &[(A1, 1), (A2, 1), (A3, 1), (A4, 1), (A5, 1)],
            1,
        )),
        4,
    )
}

/// Three-variable generalization of dVV.
pub fn deghs() -> HamiltonianSystem {
    let hv = painleve_hamiltonian(PainleveKind::V, (X, Y, T), &[v(A4), v(A1), v(A5)]).unwrap();
    let h1 = hv
        + coupling_r(CouplingFamily::FifthLike, (X, Y, Z, W, T, S), &v(A1), &v(A2)).unwrap()
        + coupling_r(CouplingFamily::FifthLike, (X, Y, Q, P, T, U), &v(A1), &v(A3)).unwrap();
    let pi = SysPerm::new()
        .vars(&[
            (X, Z),
            (Y, W),
            (Z, Q),
            (W, P),
            (Q, X),
            (P, Y),
            (T, S),
            (S, U),
            (U, T),
        ])
        .vars(&[(A1, A2), (A2, A3), (A3, A1)]);
    HamiltonianSystem::symmetric_three(
        "deGHS",
        vec![PAIR_XY, PAIR_ZW, PAIR_QP],
        vec![T, S, U],
        h1,
        pi,
        vec![A1, A2, A3, A4, A5, A6],
        Some(unit_constraint(
            &[(A1, 1), (A2, 1), (A3, 1), (A4, 1), (A5, 1), (A6, 1)],
            1,
        )),
        4,
    )
}

/// Degeneration of dVV towards the fourth Painleve system.
pub fn sdeg3() -> HamiltonianSystem {
    let hiv = painleve_hamiltonian(PainleveKind::IV, (X, Y, T), &[v(A1), v(A2)]).unwrap();
    let (x, y, z, w, t, s) = (v(X), v(Y), v(Z), v(W), v(T), v(S));
    let h1 = hiv + v(A3) * &x * &y / (&t - &s) + v(A2) * &z * &w / (&t - &s)
        - (x.pow(2) * &y * &w - n(2) * (&t - &s) * &y * &z * &w - n(2) * &x * &y * &z * &w
            + &y * z.pow(2) * &w
            + v(A3) * &y * &z
            + v(A2) * &x * &w)
            / (&t - &s);
    let pi = SysPerm::new()
        .vars(&[(X, Z), (Y, W), (Z, X), (W, Y), (T, S), (S, T)])
        .vars(&[(A2, A3), (A3, A2)]);
    HamiltonianSystem::symmetric_two(
        "SdeG3",
        vec![PAIR_XY, PAIR_ZW],
        vec![T, S],
        h1,
        pi,
        vec![A1, A2, A3, A4],
        Some(unit_constraint(&[(A1, 1), (A2, 1), (A3, 1), (A4, 1)], 1)),
        4,
    )
}

/// Three-variable generalization of SdeG3.
pub fn sdegh3() -> HamiltonianSystem {
    let hiv = painleve_hamiltonian(PainleveKind::IV, (X, Y, T), &[v(A1), v(A2)]).unwrap();
    let h1 = hiv
        + coupling_r(CouplingFamily::FourthLike, (X, Y, Z, W, T, S), &v(A2), &v(A3)).unwrap()
        + coupling_r(CouplingFamily::FourthLike, (X, Y, Q, P, T, U), &v(A2), &v(A4)).unwrap();
    let pi = SysPerm::new()
        .vars(&[
            (X, Z),
            (Y, W),
            (Z, Q),
            (W, P),
            (Q, X),
            (P, Y),
            (T, S),
            (S, U),
            (U, T),
        ])
        .vars(&[(A2, A3), (A3, A4), (A4, A2)]);
    HamiltonianSystem::symmetric_three(
        "SdeGH3",
        vec![PAIR_XY, PAIR_ZW, PAIR_QP],
        vec![T, S, U],
        h1,
        pi,
        vec![A1, A2, A3, A4, A5],
        Some(unit_constraint(
            &[(A1, 1), (A2, 1), (A3, 1), (A4, 1), (A5, 1)],
            1,
        )),
        4,
    )
}

/// Degeneration of dVV towards the third Painleve system.
pub fn sdega() -> HamiltonianSystem {
    let hiii = painleve_hamiltonian(PainleveKind::III, (X, Y, T), &[v(A0), v(A1)]).unwrap();
    let (x, y, z, w, t, s) = (v(X), v(Y), v(Z), v(W), v(T), v(S));
    let h1 = hiii + v(A2) * &s * &x * &y / (&t * (&t - &s)) + v(A0) * &z * &w / (&t - &s)
        - (&t * &y * z.pow(2) * &w + &s * x.pow(2) * &y * &w - n(2) * &t * &x * &y * &z * &w
            + v(A2) * &t * &y * &z
            + v(A0) * &s * &x * &w)
            / (&t * (&t - &s));
    let pi = SysPerm::new()
        .vars(&[(X, Z), (Y, W), (Z, X), (W, Y), (T, S), (S, T)])
        .vars(&[(A0, A2), (A2, A0)]);
    HamiltonianSystem::symmetric_two(
        "SdeGa",
        vec![PAIR_XY, PAIR_ZW],
        vec![T, S],
        h1,
        pi,
        vec![A0, A1, A2, A3],
        Some(unit_constraint(&[(A0, 1), (A1, 2), (A2, 1), (A3, 1)], 1)),
        4,
    )
}

/// Three-variable generalization of SdeGa.
pub fn sdegah_3v() -> HamiltonianSystem {
    let hiii = painleve_hamiltonian(PainleveKind::III, (X, Y, T), &[v(A0), v(A1)]).unwrap();
    let h1 = hiii
        + coupling_r(CouplingFamily::ThirdLike, (X, Y, Z, W, T, S), &v(A0), &v(A2)).unwrap()
        + coupling_r(CouplingFamily::ThirdLike, (X, Y, Q, P, T, U), &v(A0), &v(A4)).unwrap();
    let pi = SysPerm::new()
        .vars(&[
            (X, Z),
            (Y, W),
            (Z, Q),
            (W, P),
            (Q, X),
            (P, Y),
            (T, S),
            (S, U),
            (U, T),
        ])
        .vars(&[(A0, A2), (A2, A4), (A4, A0)]);
    HamiltonianSystem::symmetric_three(
        "SdeGaH-3v",
        vec![PAIR_XY, PAIR_ZW, PAIR_QP],
        vec![T, S, U],
        h1,
        pi,
        vec![A0, A1, A2, A3, A4],
        Some(unit_constraint(
            &[(A0, 1), (A1, 2), (A2, 1), (A3, 1), (A4, 1)],
            1,
        )),
        4,
    )
}

/// The alternative two-variable generalization of the third Painleve system.
pub fn asdega() -> HamiltonianSystem {
    let (x, y, z, w, t, s) = (v(X), v(Y), v(Z), v(W), v(T), v(S));
    let (a1, a2, a3, a4) = (v(A1), v(A2), v(A3), v(A4));
    let (e0, e1) = (v(ETA0), v(ETA1));
    let c = n(2) * &a1 + &a2; // 2*alpha1 + alpha2
    let h1 = (-(x.pow(3) * y.pow(2)) + &s * x.pow(2) * y.pow(2) - &c * x.pow(2) * &y
        + (&c * &s + &e1 * &t) * &x * &y)
        / (&t * &s)
        - (&a1 * (&a1 + &a2) * &x + &e1 * &t * &s * &y) / (&t * &s)
        + (z.pow(3) * w.pow(2) - &t * z.pow(2) * w.pow(2)
            + &c * z.pow(2) * &w
            + (&a3 * &t - &e0 * &s) * &z * &w)
            / t.pow(2)
        + (&a1 * (&a1 + &a2) * &z + &e0 * &t * &s * &w) / t.pow(2)
        - (&e0 * &s - &a3 * &t) / t.pow(2) * &x * &y
        + &e1 / &s * &z * &w
        - &x * &z
            * (n(2) * (&t * &x - &s * &z) * &y * &w - &s * &x * y.pow(2) + &t * &z * w.pow(2)
                - &c * (&s * &y - &t * &w))
            / (t.pow(2) * &s);
    let pi = SysPerm::new()
        .vars(&[(X, Z), (Y, W), (Z, X), (W, Y), (T, S), (S, T)])
        .vars(&[(ETA0, ETA1), (ETA1, ETA0), (A3, A4), (A4, A3)]);
    HamiltonianSystem::symmetric_two(
        "ASdeGa",
        vec![PAIR_XY, PAIR_ZW],
        vec![T, S],
        h1,
        pi,
        vec![ETA0, ETA1, A1, A2, A3, A4],
        Some(unit_constraint(&[(A1, 2), (A2, 1), (A3, 1), (A4, 1)], 1)),
        5,
    )
}

/// Degeneration of SdeG3 towards the second Painleve system.
pub fn sdeg4() -> HamiltonianSystem {
    let hii = painleve_hamiltonian(PainleveKind::II, (X, Y, T), &[v(A3)]).unwrap();
    let h1 = hii
        + coupling_r(
            CouplingFamily::SecondLike,
            (X, Y, Z, W, T, S),
            &v(A3),
            &v(A1),
        )
        .unwrap();
    let pi = SysPerm::new()
        .vars(&[(X, Z), (Y, W), (Z, X), (W, Y), (T, S), (S, T)])
        .vars(&[(A1, A3), (A3, A1)]);
    HamiltonianSystem::symmetric_two(
        "SdeG4",
        vec![PAIR_XY, PAIR_ZW],
        vec![T, S],
        h1,
        pi,
        vec![A1, A2, A3],
        Some(unit_constraint(&[(A1, 1), (A2, 1), (A3, 1)], 1)),
        4,
    )
}

/// SdeG4 after the change of times t = T, s = T + S.
pub fn kimura_times() -> HamiltonianSystem {
    let (x, y, z, w, t, s) = (v(X), v(Y), v(Z), v(W), v(UT), v(US));
    let (a1, a3) = (v(A1), v(A3));
    let h1 = -(x.pow(2) * &y) + y.pow(2) / n(2) - &t * &y / n(2) - &a3 * &x - z.pow(2) * &w
        + w.pow(2) / n(2)
        - &s * &w / n(2)
        - &a1 * &z
        - &t * &w / n(2)
        + &y * &w;
    let h2 = -(&x - &z) * (&x * &w - &z * &w - &a1) * &y / &s + &y * &w / n(2)
        - &t * &w / n(2)
        - &a3 * &x * &w / &s
        + &a3 * &z * &w / &s
        - z.pow(2) * &w
        + w.pow(2) / n(2)
        - &s * &w / n(2)
        - &a1 * &z;
    HamiltonianSystem {
        name: "Kimura-times",
        pairs: vec![PAIR_XY, PAIR_ZW],
        times: vec![UT, US],
        hamiltonians: vec![h1, h2],
        params: vec![A1, A2, A3],
        constraint: Some(unit_constraint(&[(A1, 1), (A2, 1), (A3, 1)], 1)),
        degree_record: 4,
        pi: None,
    }
}

/// Autonomous version of SdeG4 with commuting Hamiltonians K_1, K_2.
pub fn auto_g14() -> HamiltonianSystem {
    let (q1, p1, q2, p2) = (v(Q1), v(P1), v(Q2), v(P2));
    let (a0, a2) = (v(A0), v(A2));
    let k1 = -(q1.pow(2) * &p1) + p1.pow(2) / n(2) - &a2 * &q1 - q2.pow(2) * &p2
        + p2.pow(2) / n(2)
        - &a0 * &q2
        + &p1 * &p2;
    let k2 = q1.pow(2) * &p1 * &p2 + q2.pow(2) * &p1 * &p2
        - n(2) * &q1 * &p1 * &q2 * &p2
        - &a0 * &q1 * &p1
        - &a2 * &q2 * &p2
        + &a0 * &p1 * &q2
        + &a2 * &q1 * &p2;
    HamiltonianSystem {
        name: "autoG14",
        pairs: vec![PAIR_Q1P1, PAIR_Q2P2],
        times: vec![T, S],
        hamiltonians: vec![k1, k2],
        params: vec![A0, A1, A2],
        constraint: Some(unit_constraint(&[(A0, 1), (A1, 1), (A2, 1)], 0)),
        degree_record: 4,
        pi: None,
    }
}

/// Three-variable generalization of SdeG4.
pub fn sdegak() -> HamiltonianSystem {
    let hii = painleve_hamiltonian(PainleveKind::II, (X, Y, T), &[v(A3)]).unwrap();
    let h1 = hii
        + coupling_r(
            CouplingFamily::SecondLike,
            (X, Y, Z, W, T, S),
            &v(A3),
            &v(A1),
        )
        .unwrap()
        + coupling_r(
            CouplingFamily::SecondLike,
            (X, Y, Q, P, T, U),
            &v(A3),
            &v(A4),
        )
        .unwrap();
    let pi = SysPerm::new()
        .vars(&[
            (X, Z),
            (Y, W),
            (Z, Q),
            (W, P),
            (Q, X),
            (P, Y),
            (T, S),
            (S, U),
            (U, T),
        ])
        .vars(&[(A1, A3), (A3, A4), (A4, A1)]);
    HamiltonianSystem::symmetric_three(
        "SdeGaK",
        vec![PAIR_XY, PAIR_ZW, PAIR_QP],
        vec![T, S, U],
        h1,
        pi,
        vec![A1, A2, A3, A4],
        Some(unit_constraint(&[(A1, 1), (A2, 1), (A3, 1), (A4, 1)], 1)),
        4,
    )
}
