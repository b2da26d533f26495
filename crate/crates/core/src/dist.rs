//! Univariate distribution families: finite discrete, Gaussian, uniform
//! interval, and Dirac point mass.
//!
//! Each family exposes a right-continuous CDF, both generalized inverses
//! (the quantile functions `F⁻` and `F⁺`), closed-form first absolute
//! moments, and deterministic inversion sampling.  The generalized inverses
//! return extended reals: `F⁻(0) = −∞` always, and `F⁺(1) = +∞` always,
//! with the other endpoint sentinels appearing exactly when the support is
//! unbounded on that side.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::special::{norm_cdf, norm_pdf, norm_ppf};
use crate::tol;

/// A univariate probability distribution.
///
/// Construct through the checked constructors ([`UnivariateDist::discrete`],
/// [`UnivariateDist::gaussian`], [`UnivariateDist::uniform`],
/// [`UnivariateDist::dirac`]) or by deserializing the JSON literal form
/// (`{"type":"gaussian","mu":0,"sigma":1}` and so on); both paths validate
/// the invariants listed on each variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
#[serde(try_from = "Literal")]
pub enum UnivariateDist {
    /// Finite support: `points` strictly increasing, `weights` non-negative
    /// and summing to 1 (within construction tolerance), equal lengths.
    /// Zero-weight points are permitted and preserved.
    Discrete { points: Vec<f64>, weights: Vec<f64> },
    /// Normal law with mean `mu` and standard deviation `sigma > 0`.
    Gaussian { mu: f64, sigma: f64 },
    /// Uniform law on the proper interval `[a, b]`, `a < b`.
    Uniform { a: f64, b: f64 },
    /// Point mass at `c`.
    Dirac { c: f64 },
}

/// Deserialization mirror of [`UnivariateDist`]; conversion re-runs the
/// checked constructors so JSON input cannot bypass validation.
#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Literal {
    Discrete { points: Vec<f64>, weights: Vec<f64> },
    Gaussian { mu: f64, sigma: f64 },
    Uniform { a: f64, b: f64 },
    Dirac { c: f64 },
}

impl TryFrom<Literal> for UnivariateDist {
    type Error = Error;

    fn try_from(lit: Literal) -> Result<Self> {
        match lit {
            Literal::Discrete { points, weights } => Self::discrete(points, weights),
            Literal::Gaussian { mu, sigma } => Self::gaussian(mu, sigma),
            Literal::Uniform { a, b } => Self::uniform(a, b),
            Literal::Dirac { c } => Self::dirac(c),
        }
    }
}

/// Validates a weight vector and applies the renormalization policy:
/// a mass defect of at most [`tol::PROB_SUM_EXACT`] is accepted untouched
/// (so bit-exact inputs survive a round trip), a defect of at most
/// [`tol::PROB_SUM_RENORM`] is scaled back to total mass 1, and anything
/// worse is rejected.
pub(crate) fn normalize_weights(weights: &mut [f64], what: &str) -> Result<()> {
    for &w in weights.iter() {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::InvalidDistribution(format!(
                "{what} must be non-negative and finite, got {w}"
            )));
        }
    }
    let sum: f64 = weights.iter().sum();
    let defect = (sum - 1.0).abs();
    if defect <= tol::PROB_SUM_EXACT {
        return Ok(());
    }
    if defect <= tol::PROB_SUM_RENORM {
        for w in weights.iter_mut() {
            *w /= sum;
        }
        return Ok(());
    }
    Err(Error::InvalidDistribution(format!(
        "{what} sum to {sum}, defect {defect:e} exceeds the renormalization limit"
    )))
}

impl UnivariateDist {
    /// Finite discrete distribution on `points` with probabilities `weights`.
    ///
    /// Requires strictly increasing finite points, matching lengths, and
    /// non-negative weights whose sum passes the renormalization policy.
    pub fn discrete(points: Vec<f64>, mut weights: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidDistribution(
                "discrete support must be non-empty".into(),
            ));
        }
        if points.len() != weights.len() {
            return Err(Error::InvalidDistribution(format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        for &x in &points {
            if !x.is_finite() {
                return Err(Error::InvalidDistribution(format!(
                    "support points must be finite, got {x}"
                )));
            }
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDistribution(
                "support points must be strictly increasing".into(),
            ));
        }
        normalize_weights(&mut weights, "weights")?;
        Ok(Self::Discrete { points, weights })
    }

    /// Normal distribution; `sigma` must be finite and strictly positive
    /// (represent a degenerate Gaussian as [`UnivariateDist::Dirac`]).
    pub fn gaussian(mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() || !sigma.is_finite() {
            return Err(Error::InvalidDistribution(format!(
                "gaussian parameters must be finite, got mu={mu}, sigma={sigma}"
            )));
        }
        if sigma <= 0.0 {
            return Err(Error::InvalidDistribution(format!(
                "sigma must be strictly positive, got {sigma}; use a dirac for a degenerate law"
            )));
        }
        Ok(Self::Gaussian { mu, sigma })
    }

    /// Uniform distribution on `[a, b]`; requires `a < b` strictly
    /// (represent a degenerate interval as [`UnivariateDist::Dirac`]).
    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidDistribution(format!(
                "uniform endpoints must be finite, got [{a}, {b}]"
            )));
        }
        if a >= b {
            return Err(Error::InvalidDistribution(format!(
                "uniform endpoints must satisfy a < b, got [{a}, {b}]; use a dirac for a point"
            )));
        }
        Ok(Self::Uniform { a, b })
    }

    /// Point mass at `c`.
    pub fn dirac(c: f64) -> Result<Self> {
        if !c.is_finite() {
            return Err(Error::InvalidDistribution(format!(
                "dirac location must be finite, got {c}"
            )));
        }
        Ok(Self::Dirac { c })
    }

    /// Whether the CDF is continuous (no atoms).
    pub fn is_continuous(&self) -> bool {
        matches!(self, Self::Gaussian { .. } | Self::Uniform { .. })
    }

    /// Cumulative distribution function `F(x) = P(X ≤ x)`; right-continuous
    /// and non-decreasing, with limits 0 at −∞ and 1 at +∞.
    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            Self::Discrete { points, weights } => {
                let k = points.partition_point(|&p| p <= x);
                // Accepted weights may carry a sub-1e-12 sum defect; a CDF
                // still must not exceed 1.
                weights[..k].iter().sum::<f64>().min(1.0)
            }
            Self::Gaussian { mu, sigma } => norm_cdf((x - mu) / sigma),
            Self::Uniform { a, b } => ((x - a) / (b - a)).clamp(0.0, 1.0),
            Self::Dirac { c } => {
                if x >= *c {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Left limit of the CDF: `F(x⁻) = P(X < x)`.  Equals [`cdf`](Self::cdf)
    /// except at atoms, where the gap is the atom's mass.
    pub fn cdf_left(&self, x: f64) -> f64 {
        match self {
            Self::Discrete { points, weights } => {
                let k = points.partition_point(|&p| p < x);
                weights[..k].iter().sum::<f64>().min(1.0)
            }
            Self::Dirac { c } => {
                if x > *c {
                    1.0
                } else {
                    0.0
                }
            }
            _ => self.cdf(x),
        }
    }

    /// Lower generalized inverse `F⁻(t) = inf{x : F(x) ≥ t}` for `t ∈ [0,1]`.
    ///
    /// `F⁻(0) = −∞` by convention; `F⁻(1) = +∞` exactly when the support is
    /// unbounded above (Gaussian).  Satisfies the Galois correspondence
    /// `F⁻(t) ≤ x  ⇔  t ≤ F(x)` for `t ∈ (0,1]`.
    pub fn quantile_minus(&self, t: f64) -> Result<ExtReal> {
        check_prob(t)?;
        if t == 0.0 {
            return Ok(ExtReal::NegInf);
        }
        Ok(match self {
            Self::Discrete { points, weights } => {
                let mut cum = 0.0;
                for (x, w) in points.iter().zip(weights) {
                    cum += w;
                    if cum >= t {
                        return Ok(ExtReal::Finite(*x));
                    }
                }
                // Rounding in the cumulative sum can leave cum a hair below
                // t = 1; the infimum is still the last support point.
                ExtReal::Finite(*points.last().expect("non-empty support"))
            }
            Self::Gaussian { mu, sigma } => {
                if t == 1.0 {
                    ExtReal::PosInf
                } else {
                    ExtReal::Finite(mu + sigma * norm_ppf(t))
                }
            }
            Self::Uniform { a, b } => ExtReal::Finite(a + (b - a) * t),
            Self::Dirac { c } => ExtReal::Finite(*c),
        })
    }

    /// Upper generalized inverse `F⁺(t) = sup{x : F(x) ≤ t}` for `t ∈ [0,1]`.
    ///
    /// Always `F⁻(t) ≤ F⁺(t)`, with equality wherever the CDF is strictly
    /// increasing; `F⁺(1) = +∞` for every family (the CDF never exceeds 1).
    pub fn quantile_plus(&self, t: f64) -> Result<ExtReal> {
        check_prob(t)?;
        Ok(match self {
            Self::Discrete { points, weights } => {
                let mut cum = 0.0_f64;
                for (x, w) in points.iter().zip(weights) {
                    // Clamped like the CDF: an accepted sub-1e-12 sum defect
                    // must not push the supremum below +∞ at t = 1.
                    cum = (cum + w).min(1.0);
                    if cum > t {
                        return Ok(ExtReal::Finite(*x));
                    }
                }
                ExtReal::PosInf
            }
            Self::Gaussian { mu, sigma } => {
                if t == 0.0 {
                    ExtReal::NegInf
                } else if t == 1.0 {
                    ExtReal::PosInf
                } else {
                    ExtReal::Finite(mu + sigma * norm_ppf(t))
                }
            }
            Self::Uniform { a, b } => {
                if t == 1.0 {
                    ExtReal::PosInf
                } else {
                    ExtReal::Finite(a + (b - a) * t)
                }
            }
            Self::Dirac { c } => {
                if t == 1.0 {
                    ExtReal::PosInf
                } else {
                    ExtReal::Finite(*c)
                }
            }
        })
    }

    /// Expectation `E[X]`.
    pub fn mean(&self) -> f64 {
        match self {
            Self::Discrete { points, weights } => {
                points.iter().zip(weights).map(|(x, w)| x * w).sum()
            }
            Self::Gaussian { mu, .. } => *mu,
            Self::Uniform { a, b } => 0.5 * (a + b),
            Self::Dirac { c } => *c,
        }
    }

    /// First absolute moment `E|X|`, in closed form per family.
    ///
    /// Gaussian uses the folded-normal mean
    /// `|μ|(2Φ(|μ|/σ) − 1) + 2σφ(|μ|/σ)`; uniform on `[a, b]` uses
    /// `(a² + b²) / (2(b − a))` when 0 lies in the interval and `|E[X]|`
    /// otherwise (the two branches agree when 0 is an endpoint).
    pub fn mean_abs(&self) -> f64 {
        match self {
            Self::Discrete { points, weights } => {
                points.iter().zip(weights).map(|(x, w)| x.abs() * w).sum()
            }
            Self::Gaussian { mu, sigma } => folded_gaussian_mean(*mu, *sigma),
            Self::Uniform { a, b } => {
                if *a <= 0.0 && 0.0 <= *b {
                    (a * a + b * b) / (2.0 * (b - a))
                } else {
                    0.5 * (a + b).abs()
                }
            }
            Self::Dirac { c } => c.abs(),
        }
    }

    /// A finite interval carrying all but `tail` probability mass in each
    /// tail: the exact support hull for bounded families, the symmetric
    /// quantile window for the Gaussian.  Used to truncate integrals.
    pub fn support_window(&self, tail: f64) -> (f64, f64) {
        match self {
            Self::Discrete { points, .. } => (points[0], *points.last().expect("non-empty")),
            Self::Uniform { a, b } => (*a, *b),
            Self::Dirac { c } => (*c, *c),
            Self::Gaussian { .. } => {
                let lo = self
                    .quantile_minus(tail)
                    .and_then(|q| q.finite())
                    .expect("interior quantile is finite");
                let hi = self
                    .quantile_minus(1.0 - tail)
                    .and_then(|q| q.finite())
                    .expect("interior quantile is finite");
                (lo, hi)
            }
        }
    }

    /// `n` i.i.d. draws by inversion: a uniform variate `u` is pushed
    /// through `F⁻(1 − u)`.  Deterministic given the generator state; the
    /// measure-zero draw `u = 0` is rejected and redrawn so that unbounded
    /// supports never produce an infinite sample.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<f64> {
        // Discrete inversion does a binary search against the cumulative
        // weights rather than re-scanning the support for every draw.
        let cum: Vec<f64> = match self {
            Self::Discrete { weights, .. } => weights
                .iter()
                .scan(0.0, |acc, w| {
                    *acc += w;
                    Some(*acc)
                })
                .collect(),
            _ => Vec::new(),
        };
        (0..n)
            .map(|_| {
                let mut u: f64 = rng.gen();
                while u == 0.0 {
                    u = rng.gen();
                }
                let t = 1.0 - u; // in (0, 1)
                match self {
                    Self::Discrete { points, .. } => {
                        let k = cum.partition_point(|&c| c < t).min(points.len() - 1);
                        points[k]
                    }
                    Self::Gaussian { mu, sigma } => mu + sigma * norm_ppf(t),
                    Self::Uniform { a, b } => a + (b - a) * t,
                    Self::Dirac { c } => *c,
                }
            })
            .collect()
    }
}

/// Folded-normal mean: `E|X|` for `X ~ N(μ, σ²)`.
pub(crate) fn folded_gaussian_mean(mu: f64, sigma: f64) -> f64 {
    let r = mu.abs() / sigma;
    mu.abs() * (2.0 * norm_cdf(r) - 1.0) + 2.0 * sigma * norm_pdf(r)
}

fn check_prob(t: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!(
            "probability argument must lie in [0, 1], got {t}"
        )));
    }
    Ok(())
}
