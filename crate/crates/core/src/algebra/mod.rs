//! Exact sparse polynomial and rational-function arithmetic over Q(i, sqrt2).

pub mod gcd;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod text;
pub mod vars;

pub use poly::{Mono, Poly};
pub use ratfunc::{subst_poly, Rf, VarMap};
pub use scalar::Scalar;
pub use vars::{Var, VarKind, NVARS};
