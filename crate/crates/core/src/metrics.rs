//! Distribution-only metrics: the L1 distance between CDFs, its
//! quantile-side twin, and the Wasserstein-p family.
//!
//! These metrics see nothing but the two marginal laws, so every coupling
//! of the same pair of laws gets the same value — the property that
//! separates them from the expected absolute difference of a joint table.

use serde::{Deserialize, Serialize};

use crate::dist::UnivariateDist;
use crate::error::{Error, Result};
use crate::quad;
use crate::tol;

/// Truncation of the unit interval for quantile-side quadrature: the
/// integrand is evaluated on [EPS_T, 1−EPS_T]. Gaussian quantiles grow like
/// sqrt(2·ln(1/t)) near the ends, so the discarded tail contributes less
/// than ~1e-11, under the 1e-10 quadrature target.
pub(crate) const EPS_T: f64 = 1e-12;

/// Interval budget for the adaptive integrators in this module.
pub(crate) const MAX_CELLS: usize = 6000;

/// How a metric value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Adaptive quadrature of |F−G| on the real line.
    CdfIntegral,
    /// Adaptive quadrature of the quantile gap on (0,1).
    QuantileIntegral,
    /// Exact finite sum over merged breakpoints (atomic laws only).
    DiscreteExact,
}

/// A metric value together with the route that produced it.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MetricResult {
    /// The distance; non-negative.
    pub value: f64,
    /// Computation route.
    pub method: Method,
}

/// True when the law is purely atomic (finite support).
fn is_atomic(d: &UnivariateDist) -> bool {
    matches!(
        d,
        UnivariateDist::Discrete { .. } | UnivariateDist::Dirac { .. }
    )
}

/// Support points of an atomic law.
fn atoms(d: &UnivariateDist) -> Vec<f64> {
    match d {
        UnivariateDist::Discrete { points, .. } => points.clone(),
        UnivariateDist::Dirac { c } => vec![*c],
        _ => unreachable!("atoms requested for a continuous family"),
    }
}

/// L1 distance between the two CDFs: ∫ |F(x) − G(x)| dx.
///
/// Atomic × atomic pairs are summed exactly over the merged support;
/// anything involving a continuous family goes through adaptive quadrature
/// on the union of the two central windows, split at every atom and
/// interval endpoint where |F−G| has a kink or jump.
pub fn gk(mu: &UnivariateDist, nu: &UnivariateDist) -> Result<MetricResult> {
    if is_atomic(mu) && is_atomic(nu) {
        let mut xs: Vec<f64> = atoms(mu);
        xs.extend(atoms(nu));
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        // F and G are constant on [xᵢ, xᵢ₊₁); beyond the last point both
        // equal 1.
        let value = xs
            .windows(2)
            .map(|w| (mu.cdf(w[0]) - nu.cdf(w[0])).abs() * (w[1] - w[0]))
            .sum();
        return Ok(MetricResult {
            value,
            method: Method::DiscreteExact,
        });
    }
    let (a_mu, b_mu) = mu.support_window(EPS_T);
    let (a_nu, b_nu) = nu.support_window(EPS_T);
    let (lo, hi) = (a_mu.min(a_nu), b_mu.max(b_nu));
    let mut pts = vec![lo, hi];
    for d in [mu, nu] {
        match d {
            UnivariateDist::Discrete { points, .. } => pts.extend(points),
            UnivariateDist::Dirac { c } => pts.push(*c),
            UnivariateDist::Uniform { a, b } => {
                pts.push(*a);
                pts.push(*b);
            }
            UnivariateDist::Gaussian { .. } => {}
        }
    }
    pts.retain(|&x| (lo..=hi).contains(&x));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    // |F−G| has a kink wherever F−G changes sign; pin those points down so
    // they cannot hide between quadrature nodes.
    let diff = |x: f64| mu.cdf(x) - nu.cdf(x);
    pts.extend(sign_crossings(&diff, &pts));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let f = |x: f64| (mu.cdf(x) - nu.cdf(x)).abs();
    let (value, _err) = quad::adaptive_split(&f, &pts, tol::QUAD_ABS, MAX_CELLS)?;
    Ok(MetricResult {
        value,
        method: Method::CdfIntegral,
    })
}

/// Same distance through the quantile side: ∫₀¹ |F⁻(t) − G⁻(t)| dt.
pub fn gk_quantile(mu: &UnivariateDist, nu: &UnivariateDist) -> Result<MetricResult> {
    quantile_metric(mu, nu, |gap| gap.abs(), |s| s)
}

/// Wasserstein distance of order `p ≥ 1`:
/// (∫₀¹ |F⁻(t) − G⁻(t)|^p dt)^{1/p}. At `p = 1` this equals [`gk`].
pub fn wasserstein_p(mu: &UnivariateDist, nu: &UnivariateDist, p: f64) -> Result<MetricResult> {
    if !p.is_finite() || p < 1.0 {
        return Err(Error::Domain(format!(
            "Wasserstein order must satisfy p >= 1, got {p}"
        )));
    }
    if p == 1.0 {
        return gk_quantile(mu, nu);
    }
    quantile_metric(mu, nu, move |gap| gap.abs().powf(p), move |s| {
        s.powf(1.0 / p)
    })
}

/// Shared quantile-side engine: integrates `h(F⁻(t) − G⁻(t))` over (0,1)
/// and applies `finish` to the integral (identity or the p-th root).
/// Atomic × atomic pairs sum exactly over merged cumulative breakpoints.
fn quantile_metric(
    mu: &UnivariateDist,
    nu: &UnivariateDist,
    h: impl Fn(f64) -> f64,
    finish: impl Fn(f64) -> f64,
) -> Result<MetricResult> {
    if is_atomic(mu) && is_atomic(nu) {
        let sum = discrete_quantile_cells(mu, nu)
            .into_iter()
            .map(|(width, q_mu, q_nu)| width * h(q_mu - q_nu))
            .sum();
        return Ok(MetricResult {
            value: finish(sum),
            method: Method::DiscreteExact,
        });
    }
    let integral = quantile_integral(mu, nu, &h)?;
    Ok(MetricResult {
        value: finish(integral),
        method: Method::QuantileIntegral,
    })
}

/// Σ/∫ of `h(F⁻(t) − G⁻(t))` over (0,1): exact cell sums for atomic ×
/// atomic pairs, adaptive quadrature otherwise. The workhorse behind the
/// transport costs, which need the raw integral without a finishing map.
pub(crate) fn quantile_cost(
    mu: &UnivariateDist,
    nu: &UnivariateDist,
    h: &impl Fn(f64) -> f64,
) -> Result<f64> {
    if is_atomic(mu) && is_atomic(nu) {
        return Ok(discrete_quantile_cells(mu, nu)
            .into_iter()
            .map(|(width, q_mu, q_nu)| width * h(q_mu - q_nu))
            .sum());
    }
    quantile_integral(mu, nu, h)
}

/// Adaptive quadrature of `h(F⁻(t) − G⁻(t))` over [EPS_T, 1−EPS_T], with
/// the unit interval split at every cumulative-weight breakpoint of an
/// atomic operand (the quantile functions jump there, nowhere else).
pub(crate) fn quantile_integral(
    mu: &UnivariateDist,
    nu: &UnivariateDist,
    h: &impl Fn(f64) -> f64,
) -> Result<f64> {
    let mut pts = unit_ladder();
    for d in [mu, nu] {
        pts.extend(cumulative_breakpoints(d));
    }
    pts.retain(|&t| (EPS_T..=1.0 - EPS_T).contains(&t));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let q = |d: &UnivariateDist, t: f64| -> f64 {
        d.quantile_minus(t)
            .expect("t lies in [0,1]")
            .finite()
            .expect("quantile is finite strictly inside (0,1)")
    };
    // `h` is typically |u| or |u|^p, kinked at u = 0; split where the
    // quantile gap changes sign so no kink hides between quadrature nodes.
    let gap = |t: f64| q(mu, t) - q(nu, t);
    pts.extend(sign_crossings(&gap, &pts));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let f = |t: f64| h(q(mu, t) - q(nu, t));
    let (value, _err) = quad::adaptive_split(&f, &pts, tol::QUAD_ABS, MAX_CELLS)?;
    Ok(value)
}

/// Initial subdivision of (0,1) shared by every quantile-side integral: a
/// geometric ladder of cells toward t = 0 and t = 1. Unbounded quantiles
/// concentrate their growth — and their crossings with bounded quantiles —
/// in the outermost fraction of the unit interval, beyond the outermost
/// node of a single quadrature cell; starting from these cells keeps every
/// feature inside some cell's node range.
pub(crate) fn unit_ladder() -> Vec<f64> {
    let mut pts = vec![0.5];
    let mut step = 0.25;
    while step > EPS_T {
        pts.push(step);
        pts.push(1.0 - step);
        step *= 0.1;
    }
    pts.push(EPS_T);
    pts.push(1.0 - EPS_T);
    pts
}

/// Sign-change locations of `s` between consecutive split points, found by
/// a fixed scan plus bisection. An absolute-value integrand kinks exactly
/// where its argument crosses zero; a kink squeezed between the outermost
/// quadrature node and a cell endpoint is invisible to the error estimate,
/// so every crossing is promoted to an explicit split point. Monotone-step
/// arguments (discrete quantile gaps) make bisection land on the jump,
/// which is an equally good split point.
pub(crate) fn sign_crossings(s: &impl Fn(f64) -> f64, pts: &[f64]) -> Vec<f64> {
    const SCAN: usize = 64;
    let mut roots = Vec::new();
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let step = (b - a) / SCAN as f64;
        let mut x0 = a;
        let mut s0 = s(x0);
        for i in 1..=SCAN {
            let x1 = if i == SCAN { b } else { a + step * i as f64 };
            let s1 = s(x1);
            if s0 * s1 < 0.0 {
                let (mut xa, mut xb, mut sa) = (x0, x1, s0);
                for _ in 0..60 {
                    let xm = 0.5 * (xa + xb);
                    if xm <= xa || xm >= xb {
                        break;
                    }
                    let sm = s(xm);
                    if sm == 0.0 {
                        xa = xm;
                        break;
                    }
                    if sa * sm < 0.0 {
                        xb = xm;
                    } else {
                        xa = xm;
                        sa = sm;
                    }
                }
                roots.push(xa);
            }
            x0 = x1;
            s0 = s1;
        }
    }
    roots
}

/// Interior jump locations of the quantile function in t-space.
pub(crate) fn cumulative_breakpoints(d: &UnivariateDist) -> Vec<f64> {
    match d {
        UnivariateDist::Discrete { weights, .. } => {
            let mut cum = 0.0;
            let mut out = Vec::with_capacity(weights.len());
            for &w in &weights[..weights.len() - 1] {
                cum += w;
                out.push(cum);
            }
            out
        }
        _ => Vec::new(),
    }
}

/// Cells of (0,1) on which both quantile functions are constant, for a pair
/// of atomic laws: `(width, F⁻, G⁻)` per cell, evaluated at the midpoint.
fn discrete_quantile_cells(mu: &UnivariateDist, nu: &UnivariateDist) -> Vec<(f64, f64, f64)> {
    let mut ts = vec![0.0, 1.0];
    for d in [mu, nu] {
        ts.extend(cumulative_breakpoints(d));
    }
    ts.retain(|&t| (0.0..=1.0).contains(&t));
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    ts.windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| {
            let mid = 0.5 * (w[0] + w[1]);
            let q = |d: &UnivariateDist| {
                d.quantile_minus(mid)
                    .expect("midpoint lies in (0,1)")
                    .finite()
                    .expect("atomic quantile is finite inside (0,1)")
            };
            (w[1] - w[0], q(mu), q(nu))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::absdiff::eabs_joint;
    use crate::fixtures;

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!(
            (got - want).abs() <= tol,
            "got {got}, want {want} (diff {:e})",
            (got - want).abs()
        );
    }

    fn family_grid() -> Vec<UnivariateDist> {
        vec![
            UnivariateDist::gaussian(0.0, 1.0).unwrap(),
            UnivariateDist::gaussian(1.0, 2.0).unwrap(),
            UnivariateDist::uniform(-1.0, 4.0).unwrap(),
            UnivariateDist::uniform(2.0, 3.0).unwrap(),
            UnivariateDist::discrete(vec![-1.0, 0.0, 2.5], vec![0.3, 0.5, 0.2]).unwrap(),
            UnivariateDist::dirac(0.7).unwrap(),
        ]
    }

    #[test]
    fn cdf_distance_on_fixture_marginals() {
        // Both contrast tables share marginals, so both give 0.5.
        for t in [fixtures::gk_a(), fixtures::gk_b()] {
            let (mx, my) = t.marginals();
            let r = gk(&mx, &my).unwrap();
            assert_eq!(r.method, Method::DiscreteExact);
            assert_close(r.value, 0.5, 1e-15);
        }
        for t in [fixtures::minmax_a(), fixtures::minmax_b(), fixtures::minmax_c()] {
            let (mx, my) = t.marginals();
            assert_close(gk(&mx, &my).unwrap().value, 0.25, 1e-15);
        }
    }

    #[test]
    fn cdf_distance_lower_bounds_the_joint_deviation() {
        // The CDF metric is the smallest deviation any coupling can reach:
        // the minimal table attains it, every other table exceeds it.
        for t in [
            fixtures::gk_a(),
            fixtures::gk_b(),
            fixtures::minmax_a(),
            fixtures::minmax_b(),
            fixtures::minmax_c(),
        ] {
            let (mx, my) = t.marginals();
            let g = gk(&mx, &my).unwrap().value;
            assert!(g <= eabs_joint(&t) + 1e-12);
        }
        let (mx, my) = fixtures::minmax_a().marginals();
        assert_close(
            gk(&mx, &my).unwrap().value,
            eabs_joint(&fixtures::minmax_a()),
            1e-15,
        );
    }

    #[test]
    fn translation_shifts_integrate_to_the_shift() {
        let a = UnivariateDist::gaussian(0.0, 1.0).unwrap();
        let b = UnivariateDist::gaussian(1.0, 1.0).unwrap();
        let r = gk(&a, &b).unwrap();
        assert_eq!(r.method, Method::CdfIntegral);
        assert_close(r.value, 1.0, 1e-9);
        assert_close(gk_quantile(&a, &b).unwrap().value, 1.0, 1e-9);
        assert_close(wasserstein_p(&a, &b, 2.0).unwrap().value, 1.0, 1e-9);
    }

    #[test]
    fn quantile_route_matches_cdf_route_across_families() {
        let grid = family_grid();
        for mu in &grid {
            for nu in &grid {
                let a = gk(mu, nu).unwrap().value;
                let b = gk_quantile(mu, nu).unwrap().value;
                let w = wasserstein_p(mu, nu, 1.0).unwrap().value;
                assert_close(a, b, 1e-8);
                assert_eq!(b, w);
            }
        }
    }

    #[test]
    fn identical_laws_are_at_distance_zero() {
        for d in family_grid() {
            assert_close(gk(&d, &d).unwrap().value, 0.0, 1e-12);
            assert_close(gk_quantile(&d, &d).unwrap().value, 0.0, 1e-12);
            assert_close(wasserstein_p(&d, &d, 2.0).unwrap().value, 0.0, 1e-12);
        }
    }

    #[test]
    fn standard_normal_vs_point_mass() {
        // ∫₀¹ |Φ⁻¹(t)| dt = E|Z| = sqrt(2/π).
        let z = UnivariateDist::gaussian(0.0, 1.0).unwrap();
        let origin = UnivariateDist::dirac(0.0).unwrap();
        let want = z.mean_abs();
        assert_close(want, 0.797_884_560_802_865_355_9, 1e-15);
        assert_close(gk_quantile(&z, &origin).unwrap().value, want, 1e-9);
        assert_close(gk(&z, &origin).unwrap().value, want, 1e-9);
    }

    #[test]
    fn gaussian_wasserstein_references() {
        let a = UnivariateDist::gaussian(0.0, 1.0).unwrap();
        let b = UnivariateDist::gaussian(2.0, 3.0).unwrap();
        // W₂² = Δμ² + Δσ² for Gaussians.
        assert_close(
            wasserstein_p(&a, &b, 2.0).unwrap().value,
            8f64.sqrt(),
            1e-8,
        );
        // W₁ = 2·E|1+Z| with Z standard normal.
        assert_close(
            wasserstein_p(&a, &b, 1.0).unwrap().value,
            2.333_261_882_350_745_193,
            1e-9,
        );
    }

    #[test]
    fn wasserstein_is_monotone_in_the_order() {
        let a = UnivariateDist::uniform(0.0, 1.0).unwrap();
        let b = UnivariateDist::discrete(vec![0.0, 2.0], vec![0.5, 0.5]).unwrap();
        let orders = [1.0, 1.5, 2.0, 3.0];
        let mut last = 0.0;
        for p in orders {
            let w = wasserstein_p(&a, &b, p).unwrap().value;
            assert!(w >= last - 1e-10, "W_{p} = {w} < previous {last}");
            last = w;
        }
    }

    #[test]
    fn wasserstein_rejects_small_orders() {
        let a = UnivariateDist::uniform(0.0, 1.0).unwrap();
        assert!(matches!(
            wasserstein_p(&a, &a, 0.5),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            wasserstein_p(&a, &a, f64::NAN),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn atomic_pairs_use_the_exact_path() {
        let a = UnivariateDist::discrete(vec![0.0, 1.0], vec![0.7, 0.3]).unwrap();
        let b = UnivariateDist::dirac(0.25).unwrap();
        let r = gk(&a, &b).unwrap();
        assert_eq!(r.method, Method::DiscreteExact);
        // F jumps to 0.7 at 0, G jumps to 1 at 0.25:
        // |0.7−0|·0.25 + |0.7−1|·0.75 = 0.175 + 0.225 = 0.4.
        assert_close(r.value, 0.4, 1e-15);
        let q = gk_quantile(&a, &b).unwrap();
        assert_eq!(q.method, Method::DiscreteExact);
        assert_close(q.value, 0.4, 1e-15);
        // |F⁻−G⁻|² cells: 0.7·0.0625 + 0.3·0.5625, then sqrt.
        let w = wasserstein_p(&a, &b, 2.0).unwrap();
        assert_close(w.value, f64::sqrt(0.7 * 0.0625 + 0.3 * 0.5625), 1e-15);
    }

    #[test]
    fn metric_result_serializes_with_method_tag() {
        let a = UnivariateDist::dirac(0.0).unwrap();
        let b = UnivariateDist::dirac(1.0).unwrap();
        let r = gk(&a, &b).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"value":1.0,"method":"discrete_exact"}"#);
    }
}
