//! Expected absolute difference E|X−Y|, by every available route: exact
//! sums over bivariate tables, product-form double sums, closed forms for
//! Gaussian and uniform families (with all their degenerate limits), mixed
//! discrete/continuous dispatch, and the covariance-based representation
//! for absolutely continuous laws.

use serde::Serialize;

use crate::dist::{folded_gaussian_mean, UnivariateDist};
use crate::error::{Error, Result};
use crate::joint::JointDiscrete;
use crate::quad;
use crate::special::{erfc, norm_cdf, norm_pdf, SQRT_2PI, SQRT_PI};
use crate::tol;

/// A pair of independent random variables, one per component; the joint law
/// is the product of the two marginals by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct IndependentPair {
    pub x: UnivariateDist,
    pub y: UnivariateDist,
}

impl IndependentPair {
    pub fn new(x: UnivariateDist, y: UnivariateDist) -> Self {
        Self { x, y }
    }
}

/// A bounded proper interval `[a1, a2]` with `a1 < a2`: the carrier of the
/// uniform closed forms and of the interval mean-distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    a1: f64,
    a2: f64,
}

impl Interval {
    /// Requires finite endpoints with `a1 < a2` strictly; a degenerate
    /// interval is a point and belongs to the Dirac branch instead.
    pub fn new(a1: f64, a2: f64) -> Result<Self> {
        if !a1.is_finite() || !a2.is_finite() || a1 >= a2 {
            return Err(Error::Domain(format!(
                "need a proper bounded interval a1 < a2, got [{a1}, {a2}]"
            )));
        }
        Ok(Self { a1, a2 })
    }

    pub fn lower(&self) -> f64 {
        self.a1
    }

    pub fn upper(&self) -> f64 {
        self.a2
    }

    pub fn length(&self) -> f64 {
        self.a2 - self.a1
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a1 + self.a2)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a1 <= x && x <= self.a2
    }

    /// Mean absolute value of a uniform draw from the interval.
    pub fn mean_abs(&self) -> f64 {
        if self.contains(0.0) {
            (self.a1 * self.a1 + self.a2 * self.a2) / (2.0 * self.length())
        } else {
            self.midpoint().abs()
        }
    }
}

/// Exact E|X−Y| over a bivariate table: `Σᵢⱼ |xᵢ−yⱼ|·prob[i][j]`.
pub fn eabs_joint(j: &JointDiscrete) -> f64 {
    j.cells().map(|(x, y, p)| (x - y).abs() * p).sum()
}

/// E|X−Y| for independent components, dispatched to the exact or
/// closed-form route for the family combination:
///
/// * discrete × discrete — double sum;
/// * Dirac against anything — the one-point formulas;
/// * Gaussian × Gaussian — [`gaussian_eabs`];
/// * uniform × uniform — [`uniform_eabs`];
/// * discrete × continuous — probability-weighted one-point formulas;
/// * Gaussian × uniform — the Gaussian one-point formula integrated
///   against the uniform density by adaptive quadrature.
pub fn eabs_product(pair: &IndependentPair) -> Result<f64> {
    use UnivariateDist as D;
    let (x, y) = (&pair.x, &pair.y);
    Ok(match (x, y) {
        (D::Discrete { points: xs, weights: ps }, D::Discrete { points: ys, weights: qs }) => {
            let mut total = 0.0;
            for (xi, pi) in xs.iter().zip(ps) {
                for (yj, qj) in ys.iter().zip(qs) {
                    total += (xi - yj).abs() * pi * qj;
                }
            }
            total
        }
        (D::Dirac { c: a }, D::Dirac { c: b }) => (a - b).abs(),
        (D::Dirac { c }, D::Gaussian { mu, sigma }) | (D::Gaussian { mu, sigma }, D::Dirac { c }) => {
            folded_gaussian_mean(mu - c, *sigma)
        }
        (D::Dirac { c }, D::Uniform { a, b }) | (D::Uniform { a, b }, D::Dirac { c }) => {
            uniform_point_eabs(&Interval::new(*a, *b)?, *c)
        }
        (D::Dirac { c }, D::Discrete { points, weights })
        | (D::Discrete { points, weights }, D::Dirac { c }) => points
            .iter()
            .zip(weights)
            .map(|(xi, wi)| (xi - c).abs() * wi)
            .sum(),
        (D::Gaussian { mu: mx, sigma: sx }, D::Gaussian { mu: my, sigma: sy }) => {
            gaussian_eabs(*mx, *sx, *my, *sy)?
        }
        (D::Uniform { a: a1, b: a2 }, D::Uniform { a: b1, b: b2 }) => {
            uniform_eabs(&Interval::new(*a1, *a2)?, &Interval::new(*b1, *b2)?)
        }
        (D::Discrete { points, weights }, D::Gaussian { mu, sigma })
        | (D::Gaussian { mu, sigma }, D::Discrete { points, weights }) => points
            .iter()
            .zip(weights)
            .map(|(xi, wi)| wi * folded_gaussian_mean(mu - xi, *sigma))
            .sum(),
        (D::Discrete { points, weights }, D::Uniform { a, b })
        | (D::Uniform { a, b }, D::Discrete { points, weights }) => {
            let iv = Interval::new(*a, *b)?;
            points
                .iter()
                .zip(weights)
                .map(|(xi, wi)| wi * uniform_point_eabs(&iv, *xi))
                .sum()
        }
        (D::Gaussian { mu, sigma }, D::Uniform { a, b })
        | (D::Uniform { a, b }, D::Gaussian { mu, sigma }) => {
            // One-point Gaussian formula integrated against the uniform
            // density; the integrand is smooth (the folded mean is C²).
            let density = 1.0 / (b - a);
            let (value, _) = quad::adaptive(
                &|y: f64| folded_gaussian_mean(mu - y, *sigma) * density,
                *a,
                *b,
                tol::QUAD_ABS,
                2000,
            )?;
            value
        }
    })
}

/// E|X−Y| for independent Gaussians, via the convolution route: with
/// `Δ = |μX−μY|` and `s = √(σX²+σY²)`,
///
/// ```text
/// E|X−Y| = Δ·[2Φ(Δ/s) − 1] + 2s·φ(Δ/s)
/// ```
///
/// `σ = 0` is accepted as the documented point-mass limit (both zero
/// reduces to `|μX−μY|`); negative `σ` is a domain error.
pub fn gaussian_eabs(mu_x: f64, sigma_x: f64, mu_y: f64, sigma_y: f64) -> Result<f64> {
    check_sigma(sigma_x)?;
    check_sigma(sigma_y)?;
    let s = (sigma_x * sigma_x + sigma_y * sigma_y).sqrt();
    if s == 0.0 {
        return Ok((mu_x - mu_y).abs());
    }
    Ok(folded_gaussian_mean(mu_x - mu_y, s))
}

/// The algebraically equivalent expanded evaluation of [`gaussian_eabs`],
/// kept as an independent cross-check path:
///
/// ```text
/// E|X−Y| = (2σX²/s)·φ(Δ/σY)·exp(σX²Δ²/(2σY²s²))
///        + (2σY²/s)·φ(Δ/σX)·exp(σY²Δ²/(2σX²s²))
///        + 2Δ·Φ(Δ/s) − Δ
/// ```
///
/// Each `φ(·)·exp(·)` product is evaluated by summing the two exponents
/// before a single `exp`, because the factors individually overflow and
/// underflow long before their product does.  Requires strictly positive
/// standard deviations (the written form divides by both).
pub fn gaussian_eabs_expanded(mu_x: f64, sigma_x: f64, mu_y: f64, sigma_y: f64) -> Result<f64> {
    if !(sigma_x > 0.0 && sigma_y > 0.0) {
        return Err(Error::Domain(format!(
            "the expanded form needs sigma_x, sigma_y > 0, got {sigma_x}, {sigma_y}"
        )));
    }
    let d = (mu_x - mu_y).abs();
    let vx = sigma_x * sigma_x;
    let vy = sigma_y * sigma_y;
    let v = vx + vy;
    let s = v.sqrt();
    let term = |v_num: f64, v_den: f64| {
        // (2·v_num/s)·φ(Δ/σ_den)·exp(v_num·Δ²/(2·v_den·v)), exponents summed.
        let exponent = -d * d / (2.0 * v_den) + v_num * d * d / (2.0 * v_den * v);
        (2.0 * v_num / s) * exponent.exp() / SQRT_2PI
    };
    Ok(term(vx, vy) + term(vy, vx) + 2.0 * d * norm_cdf(d / s) - d)
}

/// E|X−b| for `X ~ N(μ, σ²)`, in the erfc form
///
/// ```text
/// E|X−b| = Δ + σ√(2/π)·exp(−Δ²/(2σ²)) − Δ·erfc(Δ/(√2σ)),   Δ = |μ−b|
/// ```
///
/// — the point-mass limit of the expanded Gaussian formula, kept as an
/// independent evaluation path for the degenerate-limit checks.
pub fn gaussian_point_eabs(mu: f64, sigma: f64, b: f64) -> Result<f64> {
    check_sigma(sigma)?;
    if sigma == 0.0 {
        return Ok((mu - b).abs());
    }
    let d = (mu - b).abs();
    let r = d / sigma;
    Ok(d + sigma * std::f64::consts::SQRT_2 / SQRT_PI * (-0.5 * r * r).exp()
        - d * erfc(r / std::f64::consts::SQRT_2))
}

/// E|X−Y| for independent Gaussians sharing one variance, in the erfc form
///
/// ```text
/// E|X−Y| = Δ + (2σ/√π)·exp(−Δ²/(4σ²)) − Δ·erfc(Δ/(2σ)),   Δ = |μX−μY|
/// ```
pub fn gaussian_equal_var_eabs(mu_x: f64, mu_y: f64, sigma: f64) -> Result<f64> {
    check_sigma(sigma)?;
    if sigma == 0.0 {
        return Ok((mu_x - mu_y).abs());
    }
    let d = (mu_x - mu_y).abs();
    let r = d / (2.0 * sigma);
    Ok(d + 2.0 * sigma / SQRT_PI * (-r * r).exp() - d * erfc(r))
}

/// E|X−Y| for a correlated Gaussian pair: the difference is Gaussian with
/// mean `μX−μY` and variance `σX² + σY² − 2ρσXσY`, so the value is the
/// folded-normal mean of that law.  Reduces to [`gaussian_eabs`] at `ρ = 0`.
pub fn gaussian_eabs_correlated(
    mu_x: f64,
    sigma_x: f64,
    mu_y: f64,
    sigma_y: f64,
    rho: f64,
) -> Result<f64> {
    if !(sigma_x > 0.0 && sigma_y > 0.0) {
        return Err(Error::Domain(format!(
            "standard deviations must be positive, got {sigma_x}, {sigma_y}"
        )));
    }
    if !(rho.is_finite() && rho.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "correlation must satisfy |rho| < 1, got {rho}"
        )));
    }
    let var = sigma_x * sigma_x + sigma_y * sigma_y - 2.0 * rho * sigma_x * sigma_y;
    Ok(folded_gaussian_mean(mu_x - mu_y, var.sqrt()))
}

/// E|X−Y| for independent uniforms `X ~ U(A)`, `Y ~ U(B)`, by the
/// three-case closed form (overlap, inclusion, separation).  Read
/// deterministically, this is the mean distance between a point of `A`
/// and a point of `B` — a metametric over intervals: symmetric with a
/// triangle inequality, but `D(A,A) = L_A/3 > 0`.
pub fn uniform_eabs(a: &Interval, b: &Interval) -> f64 {
    // Separation, including a shared endpoint (the overlap formula
    // degenerates continuously to the midpoint distance there).
    if a.a2 <= b.a1 || b.a2 <= a.a1 {
        return (a.midpoint() - b.midpoint()).abs();
    }
    // Inclusion: reduce to B ⊆ A by symmetry.
    if b.a1 >= a.a1 && b.a2 <= a.a2 {
        return uniform_inclusion(a, b);
    }
    if a.a1 >= b.a1 && a.a2 <= b.a2 {
        return uniform_inclusion(b, a);
    }
    // Overlap without inclusion: reduce to A starting first.
    if a.a1 <= b.a1 {
        uniform_overlap(a, b)
    } else {
        uniform_overlap(b, a)
    }
}

/// Overlap case, `a1 ≤ b1 < a2 < b2`.
fn uniform_overlap(a: &Interval, b: &Interval) -> f64 {
    let (a1, a2, b1, b2) = (a.a1, a.a2, b.a1, b.a2);
    ((b2 - b1) * (b1 - a1) * (b2 - a1) / 2.0
        + (b2 - a2) * (a2 - b1) * (b2 - b1) / 2.0
        + (a2 - b1).powi(3) / 3.0)
        / (a.length() * b.length())
}

/// Inclusion case, `a1 ≤ b1 < b2 ≤ a2` (B inside A, equality allowed).
fn uniform_inclusion(a: &Interval, b: &Interval) -> f64 {
    let (a1, a2, b1, b2) = (a.a1, a.a2, b.a1, b.a2);
    ((b2 - b1) * (b1 - a1) * (b2 - a1) / 2.0
        - (b2 - a2) * (a2 - b1) * (b2 - b1) / 2.0
        + (b2 - b1).powi(3) / 3.0)
        / (a.length() * b.length())
}

/// E|X−b| for `X ~ U(A)`: `((b−a1)² + (a2−b)²)/(2L_A)` when `b` lies in
/// the interval, `|b − m_A|` otherwise (the branches agree on the
/// boundary).
pub fn uniform_point_eabs(a: &Interval, b: f64) -> f64 {
    if a.contains(b) {
        let lo = b - a.a1;
        let hi = a.a2 - b;
        (lo * lo + hi * hi) / (2.0 * a.length())
    } else {
        (b - a.midpoint()).abs()
    }
}

/// The covariance-based representation of E|X−Y| for independent
/// absolutely continuous laws, evaluated by adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CovRepresentation {
    /// `2·{E[X·G(X)] + E[Y·F(Y)]} − μX − μY`, with `F, G` the two CDFs.
    pub value: f64,
    /// For identically distributed components, the `4·cov[X, F(X)]` form,
    /// evaluated independently; `None` when the laws differ.
    pub iid_cov_form: Option<f64>,
}

/// Evaluates `E|X−Y| = 2{E[X·G(X)] + E[Y·F(Y)]} − μX − μY` by quadrature
/// for independent Gaussian/uniform components.  In the i.i.d. case the
/// `4·cov[X,F(X)]` form is evaluated as well and the two must agree within
/// the cross-check tolerance.
pub fn eabs_cov_representation(pair: &IndependentPair) -> Result<CovRepresentation> {
    let value = 2.0 * (mean_x_cdf(&pair.x, &pair.y)? + mean_x_cdf(&pair.y, &pair.x)?)
        - pair.x.mean()
        - pair.y.mean();
    let iid_cov_form = if pair.x == pair.y {
        let exf = mean_x_cdf(&pair.x, &pair.x)?;
        let ef = mean_cdf(&pair.x)?;
        let cov_form = 4.0 * (exf - pair.x.mean() * ef);
        if (cov_form - value).abs() > tol::CROSS_CHECK {
            return Err(Error::Inconsistent(format!(
                "covariance forms disagree: {value} vs {cov_form}"
            )));
        }
        Some(cov_form)
    } else {
        None
    };
    Ok(CovRepresentation { value, iid_cov_form })
}

fn check_sigma(sigma: f64) -> Result<()> {
    if !sigma.is_finite() || sigma < 0.0 {
        return Err(Error::Domain(format!(
            "standard deviation must be non-negative and finite, got {sigma}"
        )));
    }
    Ok(())
}

/// `E[X·G(X)]` for `X` the first law, `G` the CDF of the second, by
/// adaptive quadrature over the truncated support of `X`.
fn mean_x_cdf(x: &UnivariateDist, g_of: &UnivariateDist) -> Result<f64> {
    let f = continuous_density(x)?;
    let (lo, hi) = x.support_window(1e-14);
    // The uniform CDF has kinks at its endpoints; split there when inside.
    let mut points = vec![lo, hi];
    if let UnivariateDist::Uniform { a, b } = g_of {
        for p in [*a, *b] {
            if p > lo && p < hi {
                points.push(p);
            }
        }
    }
    points.sort_by(f64::total_cmp);
    let (value, _) = quad::adaptive_split(
        &|t: f64| t * g_of.cdf(t) * f(t),
        &points,
        tol::QUAD_ABS,
        4000,
    )?;
    Ok(value)
}

/// `E[F(X)]` with `F` the law's own CDF (analytically 1/2 for continuous
/// laws; evaluated numerically to keep the cross-check independent).
fn mean_cdf(x: &UnivariateDist) -> Result<f64> {
    let f = continuous_density(x)?;
    let (lo, hi) = x.support_window(1e-14);
    let (value, _) = quad::adaptive(&|t: f64| x.cdf(t) * f(t), lo, hi, tol::QUAD_ABS, 4000)?;
    Ok(value)
}

fn continuous_density(d: &UnivariateDist) -> Result<impl Fn(f64) -> f64 + '_> {
    match d {
        UnivariateDist::Gaussian { .. } | UnivariateDist::Uniform { .. } => Ok(move |t: f64| {
            match d {
                UnivariateDist::Gaussian { mu, sigma } => norm_pdf((t - mu) / sigma) / sigma,
                UnivariateDist::Uniform { a, b } => {
                    if t >= *a && t <= *b {
                        1.0 / (b - a)
                    } else {
                        0.0
                    }
                }
                _ => unreachable!(),
            }
        }),
        other => Err(Error::Unsupported(format!(
            "covariance representation needs absolutely continuous laws, got {other:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimate::quad_eabs;

    const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
    const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_355_879_892_1;

    fn disc(points: &[f64], weights: &[f64]) -> UnivariateDist {
        UnivariateDist::discrete(points.to_vec(), weights.to_vec()).unwrap()
    }

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn joint_tables_give_the_reference_values() {
        let a = JointDiscrete::new(
            vec![0.0, 1.0],
            vec![0.0, 1.0],
            vec![vec![0.1, 0.6], vec![0.1, 0.2]],
        )
        .unwrap();
        assert!((eabs_joint(&a) - 0.7).abs() <= 1e-12);

        let b = JointDiscrete::new(
            vec![0.0, 1.0],
            vec![0.0, 1.0],
            vec![vec![0.14, 0.56], vec![0.06, 0.24]],
        )
        .unwrap();
        assert!((eabs_joint(&b) - 0.62).abs() <= 1e-12);

        // Min, product, and max couplings of (0.5,0.5) with (0.25,0.75).
        for (p, want) in [
            (vec![vec![0.25, 0.25], vec![0.0, 0.5]], 0.25),
            (vec![vec![0.125, 0.375], vec![0.125, 0.375]], 0.5),
            (vec![vec![0.0, 0.5], vec![0.25, 0.25]], 0.75),
        ] {
            let j = JointDiscrete::new(vec![0.0, 1.0], vec![0.0, 1.0], p).unwrap();
            assert!((eabs_joint(&j) - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn reflexivity_of_the_diagonal_coupling() {
        let mu = disc(&[-1.0, 0.5, 2.0], &[0.2, 0.3, 0.5]);
        let j = JointDiscrete::diagonal_coupling(&mu).unwrap();
        assert_eq!(eabs_joint(&j), 0.0);
    }

    #[test]
    fn product_dispatch_discrete_and_point_masses() {
        let mu = disc(&[0.0, 1.0], &[0.7, 0.3]);
        let nu = disc(&[0.0, 1.0], &[0.2, 0.8]);
        let got = eabs_product(&IndependentPair::new(mu, nu)).unwrap();
        assert!((got - 0.62).abs() <= 1e-12);

        let a = UnivariateDist::dirac(2.0).unwrap();
        let b = UnivariateDist::dirac(-1.5).unwrap();
        assert_eq!(eabs_product(&IndependentPair::new(a, b)).unwrap(), 3.5);

        // Discrete against a point mass.
        let d = disc(&[-2.0, 4.0], &[0.5, 0.5]);
        let c = UnivariateDist::dirac(1.0).unwrap();
        assert_eq!(eabs_product(&IndependentPair::new(d, c)).unwrap(), 3.0);
    }

    #[test]
    fn gaussian_closed_form_reference_values() {
        assert!((gaussian_eabs(0.0, 1.0, 0.0, 1.0).unwrap() - TWO_OVER_SQRT_PI).abs() <= 1e-15);

        // One degenerate component: E|X−μ| = √(2/π)·σ.
        assert!((gaussian_eabs(3.0, 2.0, 3.0, 0.0).unwrap() - SQRT_2_OVER_PI * 2.0).abs() <= 1e-15);

        // Equal means: √(2/π)·√(σX²+σY²).
        let want = SQRT_2_OVER_PI * 5.0;
        assert!((gaussian_eabs(0.0, 3.0, 0.0, 4.0).unwrap() - want).abs() <= 1e-14);

        // A general pair, against an independently computed reference.
        let want = 3.308_391_853_630_503_687_486_012;
        assert!((gaussian_eabs(1.0, 2.0, -1.0, 3.0).unwrap() - want).abs() <= 1e-14);

        // Both degenerate: plain distance.
        assert_eq!(gaussian_eabs(2.0, 0.0, -1.0, 0.0).unwrap(), 3.0);

        assert!(gaussian_eabs(0.0, -1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn expanded_and_convolution_forms_agree() {
        let params = [
            (0.0, 1.0, 0.0, 1.0),
            (1.0, 2.0, -1.0, 3.0),
            (10.0, 0.1, -10.0, 0.1), // extreme separation: exponent summing matters
            (5.0, 0.3, 4.0, 7.0),
            (-3.0, 9.9, 3.0, 0.2),
        ];
        for (mx, sx, my, sy) in params {
            let a = gaussian_eabs(mx, sx, my, sy).unwrap();
            let b = gaussian_eabs_expanded(mx, sx, my, sy).unwrap();
            assert!(
                (a - b).abs() <= 1e-10 * a.abs().max(1.0),
                "forms disagree at ({mx},{sx},{my},{sy}): {a} vs {b}"
            );
        }
        assert!(gaussian_eabs_expanded(0.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn erfc_special_cases_match_the_general_form() {
        // Point-mass limit.
        let a = gaussian_point_eabs(1.0, 2.0, -0.5).unwrap();
        let b = gaussian_eabs(1.0, 2.0, -0.5, 0.0).unwrap();
        assert!((a - b).abs() <= 1e-13);

        // Equal variances.
        let a = gaussian_equal_var_eabs(1.0, -2.0, 1.5).unwrap();
        let b = gaussian_eabs(1.0, 1.5, -2.0, 1.5).unwrap();
        assert!((a - b).abs() <= 1e-13);

        // Degenerate-limit continuity: σY ↘ 0 approaches the erfc form.
        let limit = gaussian_point_eabs(1.0, 2.0, -0.5).unwrap();
        let near = gaussian_eabs(1.0, 2.0, -0.5, 1e-6).unwrap();
        assert!((near - limit).abs() <= 1e-8);
    }

    #[test]
    fn correlated_gaussian_reference_values() {
        let at = |rho: f64| gaussian_eabs_correlated(0.0, 1.0, 0.0, 1.0, rho).unwrap();
        assert!((at(0.0) - TWO_OVER_SQRT_PI).abs() <= 1e-15);
        assert!((at(0.8) - SQRT_2_OVER_PI * 0.4_f64.sqrt()).abs() <= 1e-14);
        assert!((at(0.99) - SQRT_2_OVER_PI * 0.02_f64.sqrt()).abs() <= 1e-14);
        // ρ → 1 limit: the difference vanishes.
        assert!(at(1.0 - 1e-12) <= 1e-5);

        assert!(gaussian_eabs_correlated(0.0, 1.0, 0.0, 1.0, 1.0).is_err());
        assert!(gaussian_eabs_correlated(0.0, 0.0, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn uniform_closed_form_three_cases() {
        // Inclusion with A = B: L/3.
        assert!((uniform_eabs(&iv(0.0, 1.0), &iv(0.0, 1.0)) - 1.0 / 3.0).abs() <= 1e-15);

        // Separation: midpoint distance.
        assert_eq!(uniform_eabs(&iv(0.0, 1.0), &iv(2.0, 4.0)), 2.5);
        // Shared endpoint counts as separation and stays continuous.
        assert!((uniform_eabs(&iv(0.0, 1.0), &iv(1.0, 3.0)) - 1.5).abs() <= 1e-15);

        // Overlap: hand-evaluated closed form for U(0,2) vs U(1,3):
        // (3 + 1 + 1/3)/4 = 13/12.
        let got = uniform_eabs(&iv(0.0, 2.0), &iv(1.0, 3.0));
        assert!((got - 13.0 / 12.0).abs() <= 1e-15);

        // Symmetry across all three cases.
        for (a, b) in [
            (iv(0.0, 2.0), iv(1.0, 3.0)),
            (iv(0.0, 5.0), iv(1.0, 2.0)),
            (iv(0.0, 1.0), iv(3.0, 4.0)),
        ] {
            assert_eq!(uniform_eabs(&a, &b), uniform_eabs(&b, &a));
        }
    }

    #[test]
    fn uniform_cases_match_the_quadrature_oracle() {
        let cases = [
            ((0.0, 2.0), (1.0, 3.0)),   // overlap
            ((-1.0, 4.0), (0.0, 2.0)),  // inclusion
            ((0.0, 1.0), (2.5, 6.0)),   // separation
            ((-3.0, -1.0), (-2.0, 5.0)),
        ];
        for ((a1, a2), (b1, b2)) in cases {
            let closed = uniform_eabs(&iv(a1, a2), &iv(b1, b2));
            let pair = IndependentPair::new(
                UnivariateDist::uniform(a1, a2).unwrap(),
                UnivariateDist::uniform(b1, b2).unwrap(),
            );
            let oracle = quad_eabs(&pair, 1e-9).unwrap();
            assert!(
                (closed - oracle).abs() <= 1e-8,
                "closed {closed} vs oracle {oracle} for [{a1},{a2}] × [{b1},{b2}]"
            );
        }
    }

    #[test]
    fn uniform_point_formula() {
        let a = iv(0.0, 1.0);
        assert_eq!(uniform_point_eabs(&a, 0.5), 0.25);
        assert_eq!(uniform_point_eabs(&a, 3.0), 2.5);
        // Boundary continuity: both branches give 1/2 at b = 0.
        assert_eq!(uniform_point_eabs(&a, 0.0), 0.5);
        assert!((uniform_point_eabs(&a, 1e-12) - 0.5).abs() <= 1e-11);
    }

    #[test]
    fn mixed_families_dispatch_to_exact_one_point_sums() {
        // Discrete × Gaussian: weighted folded means.
        let d = disc(&[-1.0, 2.0], &[0.4, 0.6]);
        let g = UnivariateDist::gaussian(0.5, 1.5).unwrap();
        let got = eabs_product(&IndependentPair::new(d.clone(), g.clone())).unwrap();
        let want = 0.4 * folded_gaussian_mean(0.5 - (-1.0), 1.5)
            + 0.6 * folded_gaussian_mean(0.5 - 2.0, 1.5);
        assert_eq!(got, want);
        // Symmetric dispatch.
        let flipped = eabs_product(&IndependentPair::new(g, d.clone())).unwrap();
        assert_eq!(got, flipped);

        // Discrete × uniform: weighted point formulas.
        let u = UnivariateDist::uniform(0.0, 1.0).unwrap();
        let got = eabs_product(&IndependentPair::new(d, u)).unwrap();
        let want = 0.4 * 1.5 + 0.6 * 1.5;
        assert!((got - want).abs() <= 1e-15);
    }

    #[test]
    fn gaussian_uniform_quadrature_route_matches_references() {
        // References computed with 25-digit quadrature of the exact integrand.
        let g = UnivariateDist::gaussian(0.0, 1.0).unwrap();
        let u = UnivariateDist::uniform(2.0, 5.0).unwrap();
        let want = 3.501_922_902_457_074_914_849_04;
        let got = eabs_product(&IndependentPair::new(g, u)).unwrap();
        assert!((got - want).abs() <= 1e-9, "got {got}");

        let g = UnivariateDist::gaussian(1.0, 0.5).unwrap();
        let u = UnivariateDist::uniform(-1.0, 1.0).unwrap();
        let want = 1.062_499_613_723_987_062_843_223;
        let got = eabs_product(&IndependentPair::new(u.clone(), g.clone())).unwrap();
        assert!((got - want).abs() <= 1e-9, "got {got}");
        // And the oracle agrees through the full 2D route.
        let oracle = quad_eabs(&IndependentPair::new(g, u), 1e-9).unwrap();
        assert!((got - oracle).abs() <= 1e-8);
    }

    #[test]
    fn covariance_representation_matches_closed_forms() {
        let g = UnivariateDist::gaussian(0.0, 1.0).unwrap();
        let rep = eabs_cov_representation(&IndependentPair::new(g.clone(), g)).unwrap();
        assert!((rep.value - TWO_OVER_SQRT_PI).abs() <= 1e-8);
        let iid = rep.iid_cov_form.unwrap();
        assert!((iid - TWO_OVER_SQRT_PI).abs() <= 1e-8);

        let u = UnivariateDist::uniform(0.0, 1.0).unwrap();
        let rep = eabs_cov_representation(&IndependentPair::new(u.clone(), u)).unwrap();
        assert!((rep.value - 1.0 / 3.0).abs() <= 1e-8);

        let x = UnivariateDist::gaussian(1.0, 2.0).unwrap();
        let y = UnivariateDist::gaussian(-1.0, 3.0).unwrap();
        let rep = eabs_cov_representation(&IndependentPair::new(x, y)).unwrap();
        let closed = gaussian_eabs(1.0, 2.0, -1.0, 3.0).unwrap();
        assert!((rep.value - closed).abs() <= 1e-8);
        assert!(rep.iid_cov_form.is_none());

        let d = UnivariateDist::dirac(0.0).unwrap();
        let g = UnivariateDist::gaussian(0.0, 1.0).unwrap();
        assert!(eabs_cov_representation(&IndependentPair::new(d, g)).is_err());
    }

    #[test]
    fn triangle_bound_against_component_means() {
        let pairs = [
            (
                UnivariateDist::gaussian(1.0, 2.0).unwrap(),
                UnivariateDist::gaussian(-1.0, 3.0).unwrap(),
            ),
            (
                UnivariateDist::uniform(-2.0, 5.0).unwrap(),
                UnivariateDist::uniform(1.0, 2.0).unwrap(),
            ),
            (
                disc(&[-3.0, 0.0, 4.0], &[0.2, 0.5, 0.3]),
                UnivariateDist::dirac(1.5).unwrap(),
            ),
        ];
        for (x, y) in pairs {
            let e = eabs_product(&IndependentPair::new(x.clone(), y.clone())).unwrap();
            assert!(e <= x.mean_abs() + y.mean_abs() + 1e-12);
        }
    }
}
