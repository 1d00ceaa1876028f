//! The global variable table.
//!
//! Every ring computation in this crate runs over one fixed, globally ordered
//! set of variables: symplectic phase pairs first, then time variables, then
//! the degeneration parameter eps, then scalar parameters. The order is what
//! makes the graded-lex term order (and hence every canonical form) global.

use std::fmt;

pub const NVARS: usize = 38;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub u8);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarKind {
    Phase,
    Time,
    Epsilon,
    Parameter,
}

pub struct VarInfo {
    pub name: &'static str,
    pub kind: VarKind,
}

macro_rules! var_table {
    ($(($idx:expr, $konst:ident, $name:expr, $kind:expr)),* $(,)?) => {
        $(pub const $konst: Var = Var($idx);)*
        pub static VARS: [VarInfo; NVARS] = [
            $(VarInfo { name: $name, kind: $kind }),*
        ];
    };
}

var_table![
    // phase pairs (x,y), (z,w), (q,p), (q1,p1), (q2,p2), (X,Y), (Z,W)
    (0, X, "x", VarKind::Phase),
    (1, Y, "y", VarKind::Phase),
    (2, Z, "z", VarKind::Phase),
    (3, W, "w", VarKind::Phase),
    (4, Q, "q", VarKind::Phase),
    (5, P, "p", VarKind::Phase),
    (6, Q1, "q1", VarKind::Phase),
    (7, P1, "p1", VarKind::Phase),
    (8, Q2, "q2", VarKind::Phase),
    (9, P2, "p2", VarKind::Phase),
    (10, UX, "X", VarKind::Phase),
    (11, UY, "Y", VarKind::Phase),
    (12, UZ, "Z", VarKind::Phase),
    (13, UW, "W", VarKind::Phase),
    // times
    (14, T, "t", VarKind::Time),
    (15, S, "s", VarKind::Time),
    (16, U, "u", VarKind::Time),
    (17, UT, "T", VarKind::Time),
    (18, US, "S", VarKind::Time),
    // degeneration parameter
    (19, EPS, "eps", VarKind::Epsilon),
    // parameters
    (20, A0, "a0", VarKind::Parameter),
    (21, A1, "a1", VarKind::Parameter),
    (22, A2, "a2", VarKind::Parameter),
    (23, A3, "a3", VarKind::Parameter),
    (24, A4, "a4", VarKind::Parameter),
    (25, A5, "a5", VarKind::Parameter),
    (26, A6, "a6", VarKind::Parameter),
    (27, A7, "a7", VarKind::Parameter),
    (28, CA0, "A0", VarKind::Parameter),
    (29, CA1, "A1", VarKind::Parameter),
    (30, CA2, "A2", VarKind::Parameter),
    (31, CA3, "A3", VarKind::Parameter),
    (32, CA4, "A4", VarKind::Parameter),
    (33, CA5, "A5", VarKind::Parameter),
    (34, ETA, "eta", VarKind::Parameter),
    (35, ETA0, "eta0", VarKind::Parameter),
    (36, ETA1, "eta1", VarKind::Parameter),
    (37, NU, "nu", VarKind::Parameter),
];

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        VARS[self.index()].name
    }

    pub fn kind(self) -> VarKind {
        VARS[self.index()].kind
    }

    /// Resolve a variable by its canonical text name. Names are unique:
    /// lowercase t/s are times, uppercase T/S the renamed times, etc.
    pub fn by_name(name: &str) -> Option<Var> {
        VARS.iter()
            .position(|v| v.name == name)
            .map(|i| Var(i as u8))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Symplectic pair (coordinate, momentum).
pub type Pair = (Var, Var);

pub const PAIR_XY: Pair = (X, Y);
pub const PAIR_ZW: Pair = (Z, W);
pub const PAIR_QP: Pair = (Q, P);
pub const PAIR_Q1P1: Pair = (Q1, P1);
pub const PAIR_Q2P2: Pair = (Q2, P2);
pub const PAIR_UXY: Pair = (UX, UY);
pub const PAIR_UZW: Pair = (UZ, UW);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique_and_resolvable() {
        for (i, info) in VARS.iter().enumerate() {
            assert_eq!(Var::by_name(info.name), Some(Var(i as u8)));
        }
    }

    #[test]
    fn kinds() {
        assert_eq!(EPS.kind(), VarKind::Epsilon);
        assert_eq!(T.kind(), VarKind::Time);
        assert_eq!(X.kind(), VarKind::Phase);
        assert_eq!(NU.kind(), VarKind::Parameter);
    }
}
