//! Analysis of multipartite pure states that are uniquely determined by
//! their quasi-local reduced density matrices (UDA) versus those that are
//! unique ground states (UGS) of quasi-local Hamiltonians.
//!
//! The crate provides dense complex linear algebra over tensor-product
//! Hilbert spaces ([`tensor`]), neighborhood structures and the quasi-local
//! projector ([`locality`]), DQLS subspaces ([`dqls`]), UDA witnesses
//! ([`witness`]), permutation symmetrization and the six-qubit
//! no-parent-Hamiltonian verification ([`symmetry`]), closed-form state
//! constructors ([`states`]), and the UDA primal/dual and UGS-feasibility
//! semidefinite programs ([`sdp`]).

pub mod dqls;
pub mod locality;
pub mod sdp;
pub mod states;
pub mod symmetry;
pub mod tensor;
pub mod witness;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subsystem index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("duplicate subsystem index {0}")]
    DuplicateIndex(usize),
    #[error("operator is not Hermitian (deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("operator is not positive semidefinite (min eigenvalue {0:.3e})")]
    NotPsd(f64),
    #[error("invalid coefficients: {0}")]
    InvalidCoefficients(String),
    #[error("neighborhood structure is trivial: {0}")]
    TrivialStructure(String),
    #[error("marginals of the two states disagree (max deviation {0:.3e})")]
    MarginalMismatch(f64),
    #[error("operator is not quasi-local relative to the structure: {0}")]
    NotQuasiLocal(String),
    #[error("singular local transformation at site {0}")]
    SingularLocal(usize),
    #[error("state is inconsistent with its own DQLS subspace (residual {0:.3e})")]
    Inconsistent(f64),
    #[error("co-location graph is disconnected")]
    DisconnectedGraph,
    #[error("solver failed to converge within {0} iterations")]
    NonConvergence(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
