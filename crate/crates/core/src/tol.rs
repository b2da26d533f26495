//! Shared numeric tolerances.
//!
//! Every tolerance that crosses a module boundary lives here so the rationale
//! is written down exactly once.

/// Weight/mass sums within this distance of 1 are accepted untouched.
/// Short decimal literals (0.3 + 0.7, 1/8·4, ...) land inside this band, so
/// tables built from them keep their exact f64 values and round-trip through
/// JSON bit-for-bit.
pub const PROB_SUM_EXACT: f64 = 1e-12;

/// Defects above [`PROB_SUM_EXACT`] but at most this large are repaired by
/// renormalizing; anything worse is rejected as a construction error rather
/// than silently rescaled.
pub const PROB_SUM_RENORM: f64 = 1e-9;

/// Default tolerance for the boolean predicates on joint tables
/// (independence, almost-sure equality, equality of distribution). Large
/// enough to absorb float noise from table arithmetic, small enough to
/// separate every non-degenerate example table from the degenerate ones.
pub const PREDICATE: f64 = 1e-9;

/// Absolute target for adaptive Gauss–Kronrod integration. The integrands in
/// this crate are truncated where their tails fall below ~1e-20, so 1e-10 is
/// reachable without fighting the truncation error.
pub const QUAD_ABS: f64 = 1e-10;

/// Agreement required between two independent routes to the same quantity
/// (closed form vs quadrature, CDF-side vs quantile-side integrals, ...).
pub const CROSS_CHECK: f64 = 1e-8;

/// Minimum eigenvalue for a 3×3 covariance matrix to count as positive
/// semidefinite. The interesting negative eigenvalues in practice are on the
/// order of -0.1, far outside float noise.
pub const PSD_MIN_EIGENVALUE: f64 = -1e-9;

/// Pairwise agreement required between the shared marginals of a triple of
/// joint tables over the same three variables.
pub const MARGINAL_MATCH: f64 = 1e-9;
