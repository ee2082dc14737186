use thiserror::Error;

use crate::algebra::Signature;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported signature ({p},{q}): need 1 <= p+q <= 8")]
    BadSignature { p: u8, q: u8 },
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),
    #[error("operation requires {expected}, got {found}")]
    WrongSignature {
        expected: Signature,
        found: Signature,
    },
    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected a pure vector")]
    NotVector,
    #[error("expected a unit vector (square = {square})")]
    NotUnit { square: f64 },
    #[error("expected a unit bivector (B^2 = -1)")]
    NotUnitBivector,
    #[error("rotation plane undefined: vectors are antiparallel")]
    Antiparallel,
    #[error("not a rotor")]
    NotRotor,
    #[error("not invertible: {0}")]
    NotInvertible(&'static str),
    #[error("spinor not normalized (psi psi~ = {0})")]
    NotNormalized(f64),
    #[error("expected a column of length {expected}, got {found}")]
    BadLength { expected: usize, found: usize },
    #[error("multivector leaves the spinor subspace (stray coefficient {0:e})")]
    LeavesSpinorSpace(f64),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{reason}")]
    Degenerate { reason: String, energies: Vec<f64> },
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("matrix is not symmetric (asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("eigenspinor failed validation: {0}")]
    Validation(String),
}
