//! L1-based probability metrics between univariate distributions and their couplings.
//!
//! The crate computes the expected absolute difference `E|X−Y|` between two real
//! random variables by every practical route — exact summation over finite joint
//! tables, closed forms for Gaussian and uniform families (including their
//! degenerate Dirac limits), and adaptive quadrature — together with the metric
//! machinery built on top of it:
//!
//! - [`dist`] — distribution families (finite discrete, Gaussian, uniform
//!   interval, Dirac point) with CDFs, generalized inverses `F⁻`/`F⁺` and
//!   deterministic inversion sampling.
//! - [`joint`] — finite bivariate probability tables (couplings): marginals,
//!   product/diagonal constructions, independence testing, the six-way
//!   dependence classification, entropy and mutual information.
//! - [`absdiff`] — `E|X−Y|` for joint tables and independent pairs, with the
//!   Gaussian/uniform closed forms and the covariance representation.
//! - [`gini`] — the normalized difference `E|X−Y|/(E|X|+E|Y|)`, Gini mean
//!   difference and Gini index, the `η_p` semimetric on couplings, and
//!   triangle-inequality / consistency-rule verification reports.
//! - [`metrics`] — distribution-only metrics: the L1 distance between CDFs
//!   (equal to the 1-Wasserstein distance) evaluated on either the CDF or the
//!   quantile side, and the Wasserstein-p family.
//! - [`transport`] — one-dimensional optimal transport: the quantile coupling,
//!   optimal plans and costs for convex costs `h(x−y)`, deterministic maps
//!   `G⁻∘F`, and sorted matching for equal-mass discrete laws with a brute-force
//!   permutation oracle.
//! - [`estimate`] — seeded, reproducible Monte-Carlo estimators and dense
//!   quadrature used to cross-check every closed form.
//! - [`fixtures`] — small named joint tables used by the verification suites.
//!
//! All values are immutable after construction and safe to share across
//! threads; randomized routines take explicit caller-owned generator state.

// Frozen reference values and published quadrature node/weight tables keep
// every digit of their source; the compiler rounds them to nearest double.
#![allow(clippy::excessive_precision)]

pub mod absdiff;
pub mod dist;
pub mod error;
pub mod estimate;
pub mod ext;
pub mod fixtures;
pub mod gini;
pub mod joint;
pub mod metrics;
pub mod quad;
pub mod special;
pub mod tol;
pub mod transport;

pub use error::{Error, Result};
pub use ext::ExtReal;
