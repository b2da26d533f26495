//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used by every fallible operation in the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All the ways a computation in this crate can fail.
#[derive(Debug, Error)]
pub enum Error {
    /// A distribution failed its construction invariants (weight sums,
    /// ordering, positivity, ...).
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// A joint table failed its construction invariants.
    #[error("invalid joint table: {0}")]
    InvalidJoint(String),

    /// An argument lies outside the mathematical domain of the operation
    /// (probability outside [0,1], p < 1, |rho| >= 1, negative sigma, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested operation is not available for this distribution family.
    #[error("unsupported family: {0}")]
    Unsupported(String),

    /// The Gini index of a law that is almost surely zero: both candidate
    /// denominators (2·E[X] and 2·E|X|) vanish, so the index has no value.
    #[error("gini index undefined: degenerate-at-zero law (X = 0 almost surely)")]
    GiniDegenerateAtZero,

    /// A custom transport cost was rejected: either the caller did not attest
    /// convexity or the numeric midpoint-convexity check found a violation.
    #[error("cost function rejected: {0}")]
    CostRejected(String),

    /// Two routes to the same quantity disagreed beyond their shared
    /// tolerance; signals a bug or ill-conditioned inputs.
    #[error("numerical inconsistency: {0}")]
    Inconsistent(String),

    /// Adaptive quadrature hit its interval budget before reaching the
    /// requested tolerance.
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    /// `fixtures::by_name` was asked for a table it does not ship.
    #[error("unknown fixture: {0}")]
    UnknownFixture(String),

    /// An extended-real sentinel (±∞) reached a context that requires a
    /// finite number.
    #[error("non-finite value: {0}")]
    NonFinite(String),
}
