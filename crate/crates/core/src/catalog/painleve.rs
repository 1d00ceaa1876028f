//! The Painleve Hamiltonian building blocks H_II..H_VI.

use crate::algebra::{Rf, Var};
use crate::error::CatalogError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PainleveKind {
    VI,
    V,
    IV,
    III,
    II,
}

impl PainleveKind {
    pub fn arity(self) -> usize {
        match self {
            PainleveKind::VI => 5,
            PainleveKind::V => 3,
            PainleveKind::IV => 2,
            PainleveKind::III => 2,
            PainleveKind::II => 1,
        }
    }
}

fn v(x: Var) -> Rf {
    Rf::var(x)
}

fn n(k: i64) -> Rf {
    Rf::int(k)
}

/// The displayed Painleve Hamiltonian of the given kind in the variables
/// (coordinate, momentum, time) with the given parameters (which may be
/// compound expressions).
pub fn painleve_hamiltonian(
    kind: PainleveKind,
    vars: (Var, Var, Var),
    params: &[Rf],
) -> Result<Rf, CatalogError> {
    if params.len() != kind.arity() {
        return Err(CatalogError::WrongArity {
            kind: match kind {
                PainleveKind::VI => "H_VI",
                PainleveKind::V => "H_V",
                PainleveKind::IV => "H_IV",
                PainleveKind::III => "H_III",
                PainleveKind::II => "H_II",
            },
            expected: kind.arity(),
            got: params.len(),
        });
    }
    let (x, y, t) = vars;
    let (x, y, t) = (v(x), v(y), v(t));
    Ok(match kind {
        PainleveKind::VI => {
            let (b0, b1, b2, b3, b4) = (
                params[0].clone(),
                params[1].clone(),
                params[2].clone(),
                params[3].clone(),
                params[4].clone(),
            );
            (y.pow(2) * (&x - &t) * (&x - &n(1)) * &x
                - ((b0 - n(1)) * (&x - &n(1)) * &x
                    + b3 * (&x - &t) * &x
                    + b4 * (&x - &t) * (&x - &n(1)))
                    * &y
                + &b2 * (&b1 + &b2) * (&x - &t))
                / (&t * (&t - &n(1)))
        }
        PainleveKind::V => {
            let (b1, b2, b3) = (params[0].clone(), params[1].clone(), params[2].clone());
            (&x * (&x - &n(1)) * &y * (&y + &t) + b2 * &t * &x - b3 * &x * &y
                - b1 * &y * (&x - &n(1)))
                / &t
        }
        PainleveKind::IV => {
            let (b1, b2) = (params[0].clone(), params[1].clone());
            -(x.pow(2) * &y) + n(2) * &x * y.pow(2) - n(2) * &t * &x * &y - n(2) * b1 * &y
                - b2 * &x
        }
        PainleveKind::III => {
            let (b0, b1) = (params[0].clone(), params[1].clone());
            (x.pow(2) * &y * (&y - &n(1)) + &x * ((n(1) - n(2) * b1) * &y - b0) + &t * &y) / &t
        }
        PainleveKind::II => {
            let b1 = params[0].clone();
            y.pow(2) / n(2) - (x.pow(2) + &t / n(2)) * &y - b1 * &x
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::{A1, A2, T, X, Y};
    use crate::algebra::{Scalar, NVARS};

    #[test]
    fn h2_matches_display() {
        // H_II = y^2/2 - (x^2 + t/2) y - a1 x
        let h = painleve_hamiltonian(PainleveKind::II, (X, Y, T), &[Rf::var(A1)]).unwrap();
        let expect = Rf::var(Y).pow(2) / Rf::int(2)
            - (Rf::var(X).pow(2) + Rf::var(T) / Rf::int(2)) * Rf::var(Y)
            - Rf::var(A1) * Rf::var(X);
        assert_eq!(h, expect);
        // dH_II/dy = y - x^2 - t/2
        let d = h.diff(Y);
        let expect_d =
            Rf::var(Y) - Rf::var(X).pow(2) - Rf::var(T) / Rf::int(2);
        assert_eq!(d, expect_d);
    }

    #[test]
    fn h4_value_at_ones() {
        // Direct evaluation of -x^2 y + 2 x y^2 - 2 t x y at x=y=t=1 gives -1.
        let h = painleve_hamiltonian(
            PainleveKind::IV,
            (X, Y, T),
            &[Rf::zero(), Rf::zero()],
        )
        .unwrap();
        let mut pt: [Scalar; NVARS] = std::array::from_fn(|_| Scalar::zero());
        pt[X.index()] = Scalar::one();
        pt[Y.index()] = Scalar::one();
        pt[T.index()] = Scalar::one();
        assert_eq!(h.eval(&pt).unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn h4_degree() {
        let h =
            painleve_hamiltonian(PainleveKind::IV, (X, Y, T), &[Rf::var(A1), Rf::var(A2)])
                .unwrap();
        // phase degree of H_IV in {x,y} is 3 (the 2xy^2 and x^2 y terms)
        assert_eq!(h.num().degree_in(&[X, Y]).unwrap(), 3);
    }

    #[test]
    fn wrong_arity_rejected() {
        assert!(painleve_hamiltonian(PainleveKind::VI, (X, Y, T), &[Rf::one()]).is_err());
    }
}
