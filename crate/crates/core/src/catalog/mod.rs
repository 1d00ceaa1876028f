//! The registry of Hamiltonian systems and their building blocks.

pub mod coupling;
pub mod painleve;
pub mod systems;

pub use coupling::{coupling_r, CouplingFamily};
pub use painleve::{painleve_hamiltonian, PainleveKind};

use crate::algebra::text::rf_to_text;
use crate::algebra::vars::Pair;
use crate::algebra::{Rf, Var, VarMap};
use crate::error::CatalogError;
use once_cell::sync::Lazy;
use std::collections::BTreeMap;

/// Affine relation sum coeff_i * param_i = rhs on a system's parameters.
#[derive(Clone)]
pub struct Constraint {
    pub coeffs: Vec<(Var, Rf)>,
    pub rhs: Rf,
}

impl Constraint {
    /// Solve the relation for `target`, which must occur with nonzero
    /// coefficient: target = (rhs - sum_{i != target} c_i p_i) / c_target.
    pub fn solve_for(&self, target: Var) -> Option<Rf> {
        let c = self
            .coeffs
            .iter()
            .find(|(v, _)| *v == target)
            .map(|(_, c)| c.clone())?;
        let mut rest = self.rhs.clone();
        for (v, cv) in &self.coeffs {
            if *v != target {
                rest = rest - cv * &Rf::var(*v);
            }
        }
        Some(rest / c)
    }

    /// The elimination binding for the designated parameter (the last listed
    /// one that occurs in the relation).
    pub fn eliminate_last(&self, params: &[Var]) -> Option<(Var, Rf)> {
        for v in params.iter().rev() {
            if self.coeffs.iter().any(|(cv, _)| cv == v) {
                return Some((*v, self.solve_for(*v)?));
            }
        }
        None
    }
}

/// The renaming permutation pi that generates H_2 (and H_3) from H_1 in the
/// symmetric systems: a simultaneous substitution on variables, times and
/// parameters.
#[derive(Clone, Default)]
pub struct SysPerm {
    pub map: Vec<(Var, Var)>,
}

impl SysPerm {
    pub fn new() -> Self {
        SysPerm { map: Vec::new() }
    }

    pub fn vars(mut self, assignments: &[(Var, Var)]) -> Self {
        self.map.extend_from_slice(assignments);
        self
    }

    pub fn as_varmap(&self) -> VarMap {
        let mut m = VarMap::new();
        for (from, to) in &self.map {
            m.insert(*from, Rf::var(*to));
        }
        m
    }

    pub fn apply(&self, f: &Rf) -> Rf {
        f.substitute(&self.as_varmap())
            .expect("permutation substitution cannot fail")
    }
}

#[derive(Clone)]
pub struct HamiltonianSystem {
    pub name: &'static str,
    /// Ordered symplectic pairs (coordinate, momentum).
    pub pairs: Vec<Pair>,
    /// Ordered time variables, one Hamiltonian per time.
    pub times: Vec<Var>,
    pub hamiltonians: Vec<Rf>,
    pub params: Vec<Var>,
    pub constraint: Option<Constraint>,
    /// Expected total degree in the phase variables.
    pub degree_record: u32,
    /// The construction permutation, when the system is built symmetrically.
    pub pi: Option<SysPerm>,
}

impl HamiltonianSystem {
    /// Two-time symmetric system: H_2 = pi(H_1).
    #[allow(clippy::too_many_arguments)]
    pub fn symmetric_two(
        name: &'static str,
        pairs: Vec<Pair>,
        times: Vec<Var>,
        h1: Rf,
        pi: SysPerm,
        params: Vec<Var>,
        constraint: Option<Constraint>,
        degree_record: u32,
    ) -> Self {
        let h2 = pi.apply(&h1);
        HamiltonianSystem {
            name,
            pairs,
            times,
            hamiltonians: vec![h1, h2],
            params,
            constraint,
            degree_record,
            pi: Some(pi),
        }
    }

    /// Three-time symmetric system: H_2 = pi(H_1), H_3 = pi(pi(H_1)).
    #[allow(clippy::too_many_arguments)]
    pub fn symmetric_three(
        name: &'static str,
        pairs: Vec<Pair>,
        times: Vec<Var>,
        h1: Rf,
        pi: SysPerm,
        params: Vec<Var>,
        constraint: Option<Constraint>,
        degree_record: u32,
    ) -> Self {
        let h2 = pi.apply(&h1);
        let h3 = pi.apply(&h2);
        HamiltonianSystem {
            name,
            pairs,
            times,
            hamiltonians: vec![h1, h2, h3],
            params,
            constraint,
            degree_record,
            pi: Some(pi),
        }
    }

    pub fn phase_vars(&self) -> Vec<Var> {
        self.pairs.iter().flat_map(|(q, p)| [*q, *p]).collect()
    }

    /// Hamilton's equations for the selected time: for each pair (q_i, p_i)
    /// the components (dH/dp_i, -dH/dq_i), flattened in pair order.
    pub fn vector_field(&self, time_index: usize) -> Vec<Rf> {
        let h = &self.hamiltonians[time_index];
        let mut out = Vec::with_capacity(2 * self.pairs.len());
        for (q, p) in &self.pairs {
            out.push(h.diff(*p));
            out.push(-&h.diff(*q));
        }
        out
    }

    /// All vector fields, indexed by time.
    pub fn vector_fields(&self) -> Vec<Vec<Rf>> {
        (0..self.times.len()).map(|k| self.vector_field(k)).collect()
    }

    /// Substitution eliminating the designated constrained parameter.
    pub fn constraint_elimination(&self) -> Option<VarMap> {
        let c = self.constraint.as_ref()?;
        let (v, e) = c.eliminate_last(&self.params)?;
        Some(VarMap::new().bind(v, e))
    }

    /// Canonical text dump: header plus one line per Hamiltonian.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("system {}\n", self.name));
        let pairs: Vec<String> = self
            .pairs
            .iter()
            .map(|(q, p)| format!("({},{})", q, p))
            .collect();
        out.push_str(&format!("pairs {}\n", pairs.join(" ")));
        let times: Vec<String> = self.times.iter().map(|t| t.to_string()).collect();
        out.push_str(&format!("times {}\n", times.join(" ")));
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("params {}\n", params.join(" ")));
        out.push_str(&format!("degree {}\n", self.degree_record));
        for (k, h) in self.hamiltonians.iter().enumerate() {
            out.push_str(&format!("H{} = {}\n", k + 1, rf_to_text(h)));
        }
        out
    }
}

/// Read-only registry of the named systems.
pub struct Registry {
    systems: BTreeMap<&'static str, HamiltonianSystem>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            systems: BTreeMap::new(),
        }
    }

    pub fn standard() -> Self {
        let mut systems = BTreeMap::new();
        for sys in [
            systems::g11111(),
            systems::ura_s(),
            systems::sdegh_3v(),
            systems::dv(),
            systems::dvv(),
            systems::deghs(),
            systems::sdeg3(),
            systems::sdegh3(),
            systems::sdega(),
            systems::sdegah_3v(),
            systems::asdega(),
            systems::sdeg4(),
            systems::kimura_times(),
            systems::auto_g14(),
            systems::sdegak(),
        ] {
            systems.insert(sys.name, sys);
        }
        Registry { systems }
    }

    pub fn get(&self, name: &str) -> Result<&HamiltonianSystem, CatalogError> {
        self.systems
            .get(name)
            .ok_or_else(|| CatalogError::UnknownKey(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.systems.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &HamiltonianSystem> {
        self.systems.values()
    }

    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }
}

/// Global shared registry.
pub static REGISTRY: Lazy<Registry> = Lazy::new(Registry::standard);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::*;

    #[test]
    fn registry_keys_complete() {
        let reg = Registry::standard();
        for key in [
            "G11111",
            "uraS",
            "SdeGH-3v",
            "dV",
            "dVV",
            "deGHS",
            "SdeG3",
            "SdeGH3",
            "SdeGa",
            "SdeGaH-3v",
            "ASdeGa",
            "SdeG4",
            "Kimura-times",
            "autoG14",
            "SdeGaK",
        ] {
            assert!(reg.get(key).is_ok(), "missing {key}");
        }
        assert_eq!(reg.len(), 15);
        assert!(reg.get("nope").is_err());
    }

    #[test]
    fn auto_g14_k1_display() {
        // K_1 = -q1^2 p1 + p1^2/2 - a2 q1 - q2^2 p2 + p2^2/2 - a0 q2 + p1 p2
        let sys = systems::auto_g14();
        let k1 = &sys.hamiltonians[0];
        let expect = -(Rf::var(Q1).pow(2) * Rf::var(P1)) + Rf::var(P1).pow(2) / Rf::int(2)
            - Rf::var(A2) * Rf::var(Q1)
            - Rf::var(Q2).pow(2) * Rf::var(P2)
            + Rf::var(P2).pow(2) / Rf::int(2)
            - Rf::var(A0) * Rf::var(Q2)
            + Rf::var(P1) * Rf::var(P2);
        assert_eq!(k1, &expect);
    }

    #[test]
    fn auto_g14_flow_component() {
        // dq1/dt = dK1/dp1 = -q1^2 + p1 + p2
        let sys = systems::auto_g14();
        let f = sys.vector_field(0);
        let expect = -Rf::var(Q1).pow(2) + Rf::var(P1) + Rf::var(P2);
        assert_eq!(f[0], expect);
    }

    #[test]
    fn kimura_first_component() {
        // dx/dT = dH1/dy = -x^2 + y + w - T/2
        let sys = systems::kimura_times();
        let f = sys.vector_field(0);
        let expect =
            -Rf::var(X).pow(2) + Rf::var(Y) + Rf::var(W) - Rf::var(UT) / Rf::int(2);
        assert_eq!(f[0], expect);
    }

    #[test]
    fn zero_hamiltonian_field_is_zero() {
        let sys = HamiltonianSystem {
            name: "zero-fixture",
            pairs: vec![PAIR_XY],
            times: vec![T],
            hamiltonians: vec![Rf::zero()],
            params: vec![],
            constraint: None,
            degree_record: 0,
            pi: None,
        };
        assert!(sys.vector_field(0).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn degree_records_hold() {
        for sys in Registry::standard().iter() {
            let phase = sys.phase_vars();
            for h in &sys.hamiltonians {
                assert!(
                    h.is_polynomial_in(&phase),
                    "{}: denominator contains phase variables",
                    sys.name
                );
            }
            let deg = sys
                .hamiltonians
                .iter()
                .map(|h| h.num().degree_in(&phase).unwrap())
                .max()
                .unwrap();
            assert_eq!(deg, sys.degree_record, "degree record for {}", sys.name);
        }
    }

    #[test]
    fn pi_has_finite_order() {
        for sys in Registry::standard().iter() {
            if let Some(pi) = &sys.pi {
                let order = if sys.times.len() == 3 { 3 } else { 2 };
                let m = pi.as_varmap();
                let mut acc = m.clone();
                for _ in 1..order {
                    acc = acc.then(&m).unwrap();
                }
                // acc must be the identity on everything it binds
                for (v, e) in acc.iter() {
                    assert_eq!(e, &Rf::var(*v), "{}: pi^{} != id at {}", sys.name, order, v);
                }
            }
        }
    }

    #[test]
    fn h2_is_pi_of_h1() {
        for sys in Registry::standard().iter() {
            if let Some(pi) = &sys.pi {
                assert_eq!(
                    pi.apply(&sys.hamiltonians[0]),
                    sys.hamiltonians[1],
                    "{}",
                    sys.name
                );
                if sys.hamiltonians.len() == 3 {
                    assert_eq!(
                        pi.apply(&sys.hamiltonians[1]),
                        sys.hamiltonians[2],
                        "{}",
                        sys.name
                    );
                }
            }
        }
    }

    #[test]
    fn dvv_equals_hv_plus_coupling() {
        // the displayed dVV Hamiltonian coincides with H_V plus the
        // three-variable family's coupling term instantiated at (x,y,z,w,t,s)
        let sys = systems::dvv();
        let hv = painleve_hamiltonian(
            PainleveKind::V,
            (X, Y, T),
            &[Rf::var(A3), Rf::var(A1), Rf::var(A4)],
        )
        .unwrap();
        let r = coupling_r(
            CouplingFamily::FifthLike,
            (X, Y, Z, W, T, S),
            &Rf::var(A1),
            &Rf::var(A2),
        )
        .unwrap();
        assert_eq!(sys.hamiltonians[0], hv + r);
    }

    #[test]
    fn sdeg3_equals_hiv_plus_coupling() {
        let sys = systems::sdeg3();
        let hiv =
            painleve_hamiltonian(PainleveKind::IV, (X, Y, T), &[Rf::var(A1), Rf::var(A2)])
                .unwrap();
        let r = coupling_r(
            CouplingFamily::FourthLike,
            (X, Y, Z, W, T, S),
            &Rf::var(A2),
            &Rf::var(A3),
        )
        .unwrap();
        assert_eq!(sys.hamiltonians[0], hiv + r);
    }

    #[test]
    fn sdega_equals_hiii_plus_coupling() {
        let sys = systems::sdega();
        let hiii =
            painleve_hamiltonian(PainleveKind::III, (X, Y, T), &[Rf::var(A0), Rf::var(A1)])
                .unwrap();
        let r = coupling_r(
            CouplingFamily::ThirdLike,
            (X, Y, Z, W, T, S),
            &Rf::var(A0),
            &Rf::var(A2),
        )
        .unwrap();
        assert_eq!(sys.hamiltonians[0], hiii + r);
    }

    #[test]
    fn coupling_swap_consistent_within_h2() {
        // build deGHS H_2 via pi(H_1) and compare its (z,w)<->(x,y) coupling
        // block against the family instantiated with swapped arguments
        let sys = systems::deghs();
        let h2 = &sys.hamiltonians[1];
        let direct = painleve_hamiltonian(
            PainleveKind::V,
            (Z, W, S),
            &[Rf::var(A4), Rf::var(A2), Rf::var(A5)],
        )
        .unwrap()
            + coupling_r(
                CouplingFamily::FifthLike,
                (Z, W, Q, P, S, U),
                &Rf::var(A2),
                &Rf::var(A3),
            )
            .unwrap()
            + coupling_r(
                CouplingFamily::FifthLike,
                (Z, W, X, Y, S, T),
                &Rf::var(A2),
                &Rf::var(A1),
            )
            .unwrap();
        assert_eq!(h2, &direct);
    }

    #[test]
    fn dump_roundtrips_hamiltonians() {
        use crate::algebra::text::rf_from_text;
        let sys = systems::sdeg4();
        let dump = sys.dump();
        for (k, h) in sys.hamiltonians.iter().enumerate() {
            let prefix = format!("H{} = ", k + 1);
            let line = dump
                .lines()
                .find(|l| l.starts_with(&prefix))
                .expect("dump line");
            assert_eq!(&rf_from_text(&line[prefix.len()..]).unwrap(), h);
        }
    }

    #[test]
    fn sdeg4_specialization() {
        // H_1 of SdeG4 at a1 = a3 = 0 with z = x reduces to H_II + y w / 2
        let sys = systems::sdeg4();
        let m = VarMap::new()
            .bind(A1, Rf::zero())
            .bind(A3, Rf::zero())
            .bind(Z, Rf::var(X));
        let got = sys.hamiltonians[0].substitute(&m).unwrap();
        let hii = painleve_hamiltonian(PainleveKind::II, (X, Y, T), &[Rf::zero()]).unwrap();
        let expect = hii + Rf::var(Y) * Rf::var(W) / Rf::int(2);
        assert_eq!(got, expect);
    }
}
