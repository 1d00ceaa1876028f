//! The coupling terms R(q_l, p_l, q_m, p_m, t_l, t_m; alpha, beta) that tie
//! two symplectic pairs together in the three-variable systems. One family
//! per generalization level; each instantiates to the displayed expression.

use crate::algebra::{Rf, Var};
use crate::error::CatalogError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CouplingFamily {
    /// Coupling of the Garnier-level systems (three-variable form of uraS).
    Garnier,
    /// Coupling of the dVV family.
    FifthLike,
    /// Coupling of the SdeG3 family.
    FourthLike,
    /// Coupling of the SdeGa family.
    ThirdLike,
    /// Coupling of the SdeG4 family.
    SecondLike,
}

fn v(x: Var) -> Rf {
    Rf::var(x)
}

fn n(k: i64) -> Rf {
    Rf::int(k)
}

/// Instantiate the family at concrete variables (q_l, p_l, q_m, p_m, t_l, t_m)
/// and parameter expressions (alpha, beta).
pub fn coupling_r(
    family: CouplingFamily,
    args: (Var, Var, Var, Var, Var, Var),
    alpha: &Rf,
    beta: &Rf,
) -> Result<Rf, CatalogError> {
    let (ql, pl, qm, pm, tl, tm) = args;
    let (ql, pl, qm, pm, tl, tm) = (v(ql), v(pl), v(qm), v(pm), v(tl), v(tm));
    let dt = &tl - &tm;
    Ok(match family {
        CouplingFamily::Garnier => {
            beta * &ql * &pl / &dt
                + alpha * (&tm - &n(1)) * &qm * &pm / ((&tl - &n(1)) * &dt)
                + (&tl * &pl + (&ql * &pl + alpha) * &ql) * &qm * &pm
                    / (&tl * (&tl - &n(1)))
                - (&tl * (&qm * &pm + beta) * &pl * &qm
                    + &tm * (&ql * &pl + alpha) * &ql * &pm)
                    / (&tl * &dt)
        }
        CouplingFamily::FifthLike => {
            beta * &tm * &ql * &pl / (&tl * &dt) + alpha * &qm * &pm / &dt
                - (&tl * ql.pow(2) * &pl * &pm
                    + &tl * &pl * &qm * &pm
                    + alpha * &tl * &ql * &pm
                    + &tm * &pl * qm.pow(2) * &pm
                    - &tm * &pl * &qm * &pm
                    + beta * &tm * &pl * &qm
                    - n(2) * &tl * &ql * &pl * &qm * &pm)
                    / (&tl * &dt)
        }
        CouplingFamily::FourthLike => {
            beta * &ql * &pl / &dt + alpha * &qm * &pm / &dt
                - (ql.pow(2) * &pl * &pm
                    + n(2) * &tm * &pl * &qm * &pm
                    - n(2) * &tl * &pl * &qm * &pm
                    - n(2) * &ql * &pl * &qm * &pm
                    + &pl * qm.pow(2) * &pm
                    + beta * &pl * &qm
                    + alpha * &ql * &pm)
                    / &dt
        }
        CouplingFamily::ThirdLike => {
            beta * &tm * &ql * &pl / (&tl * &dt) + alpha * &qm * &pm / &dt
                - (&tl * &pl * qm.pow(2) * &pm
                    + &tm * ql.pow(2) * &pl * &pm
                    - n(2) * &tl * &ql * &pl * &qm * &pm
                    + beta * &tl * &pl * &qm
                    + alpha * &tm * &ql * &pm)
                    / (&tl * &dt)
        }
        CouplingFamily::SecondLike => {
            beta * &ql * &pl / &dt - beta * &pl * &qm / &dt - alpha * &ql * &pm / &dt
                + alpha * &qm * &pm / &dt
                - (n(2) * (&ql - &qm).pow(2) - &tl + &tm) * &pl * &pm / (n(2) * &dt)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::{A1, A3, S, T, W, X, Y, Z};
    use crate::algebra::VarMap;

    #[test]
    fn zero_when_momenta_and_params_vanish() {
        // every term carries a momentum or a parameter
        for fam in [
            CouplingFamily::Garnier,
            CouplingFamily::FifthLike,
            CouplingFamily::FourthLike,
            CouplingFamily::ThirdLike,
            CouplingFamily::SecondLike,
        ] {
            let r = coupling_r(fam, (X, Y, Z, W, T, S), &Rf::zero(), &Rf::zero()).unwrap();
            let m = VarMap::new().bind(Y, Rf::zero()).bind(W, Rf::zero());
            assert!(r.substitute(&m).unwrap().is_zero(), "family {fam:?}");
        }
    }

    #[test]
    fn second_like_five_terms() {
        // the SdeG4-family coupling at (x,y,z,w,t,s;a3,a1) equals the
        // displayed five-term expression
        let r = coupling_r(
            CouplingFamily::SecondLike,
            (X, Y, Z, W, T, S),
            &Rf::var(A3),
            &Rf::var(A1),
        )
        .unwrap();
        let (x, y, z, w, t, s) = (
            Rf::var(X),
            Rf::var(Y),
            Rf::var(Z),
            Rf::var(W),
            Rf::var(T),
            Rf::var(S),
        );
        let (a1, a3) = (Rf::var(A1), Rf::var(A3));
        let dt = &t - &s;
        let expect = &a1 * &x * &y / &dt - &a1 * &y * &z / &dt - &a3 * &x * &w / &dt
            + &a3 * &z * &w / &dt
            - (Rf::int(2) * (&x - &z).pow(2) - &dt) * &y * &w / (Rf::int(2) * &dt);
        assert_eq!(r, expect);
    }
}
