//! Error types shared across the crate.

use crate::algebra::vars::Var;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomialDegree,
    #[error("substitution produced an identically zero denominator")]
    SubstitutionDenominatorZero,
    #[error("pole at eps=0: denominator {witness}")]
    PoleAtEpsilonZero { witness: String },
    #[error("variable {0} is not of epsilon kind")]
    NotEpsilonKind(Var),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown registry key '{0}'")]
    UnknownKey(String),
    #[error("wrong parameter arity for {kind}: expected {expected}, got {got}")]
    WrongArity {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error)]
pub enum TransformError {
    #[error("map has no stored inverse")]
    InverseUnavailable,
    #[error("maps have incompatible variable lists")]
    IncompatibleVariables,
    #[error("map is not generically invertible (Jacobian determinant vanishes)")]
    NotInvertible,
    #[error("vector field component not polynomial in phase variables: {0}")]
    NonPolynomialField(String),
    #[error("vector field is not closed (not Hamiltonian): {0}")]
    NotHamiltonian(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("near-singular denominator at evaluation point (|den| <= {0:e})")]
    NearSingular(f64),
    #[error("system has non-real coefficients; real trajectory evaluation rejected")]
    ComplexCoefficients,
    #[error("singularity encountered at step {step}, time {time}")]
    SingularityAbort { step: usize, time: f64 },
    #[error("dimension mismatch in numeric state")]
    DimensionMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
