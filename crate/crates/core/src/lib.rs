//! Exact symbolic verification of coupled Painleve/Garnier Hamiltonian
//! systems: a catalog of the systems, their birational symplectic charts,
//! Backlund symmetries and coupling-confluence degenerations, together with
//! the machine checks (holomorphy, symmetry invariance, commuting flows,
//! Poisson commutativity, degeneration limits, mKdV reduction) and a small
//! RK4 integrator for conservation demonstrations.

pub mod algebra;
pub mod catalog;
pub mod error;

pub use error::{AlgebraError, CatalogError, NumericsError, TransformError};
