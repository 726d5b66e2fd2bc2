//! Stirling numbers of both kinds associated with a delta series `f`, the
//! associated logarithm, Bernoulli polynomials of order α, partial Bell
//! polynomials, and the identities tying them together.
//!
//! Triangles store exponential-generating-function values: entry `(n, k)` is
//! `n!` times an ordinary series coefficient. Conversions go through
//! [`EgfView`](crate::fps::EgfView) so the `n!` factor lives in one place.

mod assoc;
mod bell;
mod bernoulli;
pub mod classical;
mod identities;
mod orthogonality;
mod theorems;
mod triangle;
mod xpoly;

use thiserror::Error;

use crate::fps::FpsError;
use crate::scalar::ScalarError;

pub use assoc::{s1_assoc, s2_assoc, Associated};
pub use bell::{partial_bell, partial_bell_table};
pub use bernoulli::{bernoulli_assoc, BernoulliFamily};
pub use identities::{
    binomial_identity_first, binomial_identity_second, check_binomial_identities, BinomialIdentityFailure,
};
pub use orthogonality::{inverse_relations_check, orthogonality_check, OrthoFailure, OrthogonalityReport, Relation};
pub use theorems::{
    assoc_log_expansion, bernoulli_via_s2, bernoulli_via_s2_single, lemma_bell_moments, lemma_bell_moments_rhs,
    lemma_bernoulli_bell, s1_via_bell_of_bernoulli, s1_via_bernoulli, s1_via_partial_bell, schloemilch_s1,
};
pub use triangle::{power_triangle, Triangle, TriangleJson, TriangleKind};
pub use xpoly::{basis_convert, Basis, XPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StirlingError {
    #[error("series order {available} is below the required {needed}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("a non-integer order needs t/(e^g - 1) to have constant term 1")]
    NonUnitBaseForRationalPower,
    #[error("a power of f̄'(0) with non-integer exponent is not representable")]
    NonRepresentablePower,
    #[error("partial Bell polynomial needs {needed} arguments, got {got}")]
    ArityTooSmall { needed: usize, got: usize },
    #[error("indices must satisfy n >= k (got n={n}, k={k})")]
    BadIndices { n: usize, k: usize },
    #[error("this basis conversion needs the associated delta series")]
    MissingDeltaSeries,
    #[error("malformed triangle: {0}")]
    Malformed(String),
    #[error(transparent)]
    Fps(#[from] FpsError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T> = std::result::Result<T, StirlingError>;
