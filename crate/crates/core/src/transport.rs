//! One-dimensional optimal transport built on quantile functions.
//!
//! For costs of the form `c(x,y) = h(x−y)` with convex `h`, the coupling that
//! pairs equal quantiles — the pushforward of Lebesgue measure on (0,1]
//! through `(F⁻, G⁻)` — minimizes the expected cost over all couplings of the
//! two laws, and its cost is the one-dimensional integral `∫₀¹ h(F⁻−G⁻) dt`.
//! This module exposes that plan and cost, the deterministic map `T = G⁻∘F`
//! available when the source CDF is continuous, the sorted matching that
//! solves the equal-mass discrete problem, and cost/mass evaluation for
//! arbitrary plans. A brute-force permutation search doubles as the oracle
//! for the sorted matching and as the demonstration that convexity of `h` is
//! not optional.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::absdiff::Interval;
use crate::dist::UnivariateDist;
use crate::error::{Error, Result};
use crate::joint::JointDiscrete;
use crate::metrics;
use crate::quad;
use crate::tol;

/// Fixed seed for the midpoint-convexity spot check so acceptance of a
/// custom cost function is deterministic.
const CONVEXITY_SEED: u64 = 0x636f_6e76_6578; // "convex"
/// Number of sampled midpoint-convexity triples (x, y, midpoint).
const CONVEXITY_TRIPLES: usize = 1_000;
/// Half-width of the sampling range for the convexity check.
const CONVEXITY_RANGE: f64 = 100.0;

/// A transport cost of the form `c(x, y) = h(x − y)`.
///
/// The optimality guarantees of this module hold for convex continuous `h`;
/// the built-in variants are convex by construction and custom functions are
/// admitted only through [`CostFn::custom`], which demands an explicit
/// convexity attestation and then spot-checks midpoint convexity and
/// non-negativity on a fixed sample before accepting.
#[derive(Clone)]
pub enum CostFn {
    /// `h(u) = |u|`.
    Abs,
    /// `h(u) = |u|^p` with `p ≥ 1`.
    Power(f64),
    /// A caller-supplied convex non-negative `h`, already vetted by
    /// [`CostFn::custom`].
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for CostFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostFn::Abs => write!(f, "Abs"),
            CostFn::Power(p) => write!(f, "Power({p})"),
            CostFn::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

impl CostFn {
    /// The absolute-difference cost `h(u) = |u|`.
    pub fn abs() -> Self {
        CostFn::Abs
    }

    /// The power cost `h(u) = |u|^p`; requires `p ≥ 1` so `h` is convex.
    pub fn power(p: f64) -> Result<Self> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::Domain(format!(
                "power cost needs a finite exponent p >= 1, got {p}"
            )));
        }
        Ok(CostFn::Power(p))
    }

    /// Admits a caller-supplied cost `h`.
    ///
    /// The caller must attest convexity explicitly; the function is then
    /// spot-checked for midpoint convexity and non-negativity on 10³
    /// deterministic sample triples over `[−100, 100]`. Either a missing
    /// attestation or a failed check yields [`Error::CostRejected`]. The
    /// check is a safety net, not a proof — a cost that is non-convex only
    /// outside the sampled range can slip through, which is exactly why the
    /// attestation is demanded as well.
    pub fn custom(
        h: impl Fn(f64) -> f64 + Send + Sync + 'static,
        attested_convex: bool,
    ) -> Result<Self> {
        if !attested_convex {
            return Err(Error::CostRejected(
                "custom costs require an explicit convexity attestation".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(CONVEXITY_SEED);
        for _ in 0..CONVEXITY_TRIPLES {
            let x = rng.gen_range(-CONVEXITY_RANGE..CONVEXITY_RANGE);
            let y = rng.gen_range(-CONVEXITY_RANGE..CONVEXITY_RANGE);
            let m = 0.5 * (x + y);
            let (hx, hy, hm) = (h(x), h(y), h(m));
            if !hx.is_finite() || !hy.is_finite() || !hm.is_finite() {
                return Err(Error::CostRejected(format!(
                    "cost is not finite near u = {x} / {y}"
                )));
            }
            if hx < -1e-12 || hy < -1e-12 {
                return Err(Error::CostRejected(format!(
                    "cost must be non-negative; h({x}) = {hx}, h({y}) = {hy}"
                )));
            }
            let rhs = 0.5 * (hx + hy);
            if hm > rhs + 1e-9 * (1.0 + rhs.abs()) {
                return Err(Error::CostRejected(format!(
                    "midpoint convexity fails between u = {x} and u = {y}: \
                     h(mid) = {hm} > (h(x)+h(y))/2 = {rhs}"
                )));
            }
        }
        Ok(CostFn::Custom(Arc::new(h)))
    }

    /// Evaluates `h(u)`.
    pub fn h(&self, u: f64) -> f64 {
        match self {
            CostFn::Abs => u.abs(),
            CostFn::Power(p) => u.abs().powf(*p),
            CostFn::Custom(h) => h(u),
        }
    }

    /// Evaluates the cost `c(x, y) = h(x − y)`.
    pub fn cost(&self, x: f64, y: f64) -> f64 {
        self.h(x - y)
    }
}

/// A deterministic rule for moving mass.
#[derive(Debug, Clone, PartialEq)]
pub enum TransportMap {
    /// `T = G⁻∘F`: send each point through the source CDF and back through
    /// the target quantile function. Well-defined as a transport map only
    /// when the source CDF is continuous, which the constructor enforces.
    QuantileCompose {
        /// Law whose CDF `F` is applied first.
        source: UnivariateDist,
        /// Law whose quantile function `G⁻` is applied second.
        target: UnivariateDist,
    },
    /// An assignment of n source points to n target points by index
    /// (0-based); the output of the equal-mass discrete matching.
    Permutation(Vec<usize>),
}

impl TransportMap {
    /// Builds `T = G⁻∘F`; rejects atomic sources, whose CDFs jump and make
    /// the composition lose mass.
    pub fn quantile_compose(source: UnivariateDist, target: UnivariateDist) -> Result<Self> {
        if !source.is_continuous() {
            return Err(Error::Unsupported(
                "quantile-composed maps need a continuous source CDF; \
                 use a tabular plan for atomic sources"
                    .into(),
            ));
        }
        Ok(TransportMap::QuantileCompose { source, target })
    }

    /// Wraps an index assignment, validating that it is a bijection on
    /// `0..n`.
    pub fn permutation(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::Domain(format!(
                    "assignment must be a bijection on 0..{n}"
                )));
            }
            seen[s] = true;
        }
        Ok(TransportMap::Permutation(sigma))
    }

    /// Applies the map to a point. Index assignments carry no coordinates
    /// and cannot be applied to a real number.
    pub fn apply(&self, x: f64) -> Result<f64> {
        match self {
            TransportMap::QuantileCompose { source, target } => {
                // Clamping keeps the composition finite on the source's
                // null sets (t = 0 or 1 exactly); those points carry no mass.
                let t = source
                    .cdf(x)
                    .clamp(metrics::EPS_T, 1.0 - metrics::EPS_T);
                target.quantile_minus(t)?.finite()
            }
            TransportMap::Permutation(_) => Err(Error::Unsupported(
                "index assignments map indices, not points".into(),
            )),
        }
    }
}

/// A coupling of two laws described constructively.
#[derive(Debug, Clone)]
pub enum TransportPlan {
    /// A finite joint table; the marginals are the table's own.
    Tabular(JointDiscrete),
    /// The quantile coupling: the pushforward of Lebesgue measure on (0,1]
    /// through `t ↦ (F⁻(t), G⁻(t))`. Optimal for every convex cost of the
    /// difference.
    Quantile {
        /// First marginal.
        mu: UnivariateDist,
        /// Second marginal.
        nu: UnivariateDist,
    },
    /// The graph coupling `(X, T(X))` of a deterministic map.
    Deterministic {
        /// First marginal; the second is the pushforward `T#μ`.
        mu: UnivariateDist,
        /// The map `T`.
        map: TransportMap,
    },
}

impl TransportPlan {
    /// Wraps a joint table as a plan between its own marginals.
    pub fn tabular(joint: JointDiscrete) -> Self {
        TransportPlan::Tabular(joint)
    }

    /// The quantile coupling of `mu` and `nu`.
    pub fn quantile(mu: UnivariateDist, nu: UnivariateDist) -> Self {
        TransportPlan::Quantile { mu, nu }
    }

    /// The graph coupling of a map, validated: quantile-composed maps must
    /// start from the plan's own first marginal (otherwise the pushforward
    /// misses the declared target), and index assignments carry no
    /// coordinates to couple.
    pub fn deterministic(mu: UnivariateDist, map: TransportMap) -> Result<Self> {
        check_deterministic(&mu, &map)?;
        Ok(TransportPlan::Deterministic { mu, map })
    }

    /// Rewrites a quantile plan with a continuous first marginal as the
    /// graph coupling of `T = G⁻∘F`; the two representations describe the
    /// same measure.
    pub fn deterministic_form(&self) -> Result<TransportPlan> {
        match self {
            TransportPlan::Quantile { mu, nu } => {
                let map = TransportMap::quantile_compose(mu.clone(), nu.clone())?;
                TransportPlan::deterministic(mu.clone(), map)
            }
            _ => Err(Error::Unsupported(
                "only quantile plans have a deterministic rewrite".into(),
            )),
        }
    }

    /// The bivariate CDF `H(x, y)` of the plan. For the quantile coupling
    /// (and the graph of `G⁻∘F`) this is `min{F(x), G(y)}`, the pointwise
    /// largest CDF with the given marginals.
    pub fn cdf(&self, x: f64, y: f64) -> Result<f64> {
        match self {
            TransportPlan::Tabular(j) => Ok(j
                .cells()
                .filter(|&(xi, yj, _)| xi <= x && yj <= y)
                .map(|(_, _, p)| p)
                .sum()),
            TransportPlan::Quantile { mu, nu } => Ok(mu.cdf(x).min(nu.cdf(y))),
            TransportPlan::Deterministic { mu, map } => {
                check_deterministic(mu, map)?;
                let TransportMap::QuantileCompose { target, .. } = map else {
                    unreachable!("checked above");
                };
                Ok(mu.cdf(x).min(target.cdf(y)))
            }
        }
    }
}

/// Validation shared by every consumer of a deterministic plan, so plans
/// assembled directly from public enum variants cannot bypass it.
fn check_deterministic(mu: &UnivariateDist, map: &TransportMap) -> Result<()> {
    match map {
        TransportMap::QuantileCompose { source, .. } => {
            if !source.is_continuous() {
                return Err(Error::Unsupported(
                    "quantile-composed maps need a continuous source CDF".into(),
                ));
            }
            if source != mu {
                return Err(Error::Domain(
                    "the map's source law must equal the plan's first marginal".into(),
                ));
            }
            Ok(())
        }
        TransportMap::Permutation(_) => Err(Error::Unsupported(
            "index assignments carry no support points; use a tabular plan".into(),
        )),
    }
}

/// The optimal coupling of `mu` and `nu` for every convex cost of the
/// difference: the quantile coupling, whose bivariate CDF is
/// `H(x, y) = min{F(x), G(y)}`.
pub fn optimal_plan(mu: &UnivariateDist, nu: &UnivariateDist) -> TransportPlan {
    TransportPlan::quantile(mu.clone(), nu.clone())
}

/// The minimal expected cost over all couplings of `mu` and `nu`:
/// `∫₀¹ h(F⁻(t) − G⁻(t)) dt`, summed exactly for atomic × atomic pairs.
/// With the absolute-difference cost this equals the L1 distance between
/// the CDFs.
pub fn optimal_cost(mu: &UnivariateDist, nu: &UnivariateDist, c: &CostFn) -> Result<f64> {
    let h = |u: f64| c.h(u);
    metrics::quantile_cost(mu, nu, &h)
}

/// Expected cost of a plan under `c(x, y) = h(x − y)`.
///
/// Tabular plans sum exactly; quantile plans integrate on the quantile
/// side; graph couplings integrate `h(x − T(x))` with `T` evaluated as the
/// genuine composition `G⁻(F(·))`, so agreement with the quantile form is a
/// meaningful cross-check rather than an identity of code paths.
pub fn plan_cost(plan: &TransportPlan, c: &CostFn) -> Result<f64> {
    match plan {
        TransportPlan::Tabular(j) => {
            Ok(j.cells().map(|(x, y, p)| c.cost(x, y) * p).sum())
        }
        TransportPlan::Quantile { mu, nu } => optimal_cost(mu, nu, c),
        TransportPlan::Deterministic { mu, map } => {
            check_deterministic(mu, map)?;
            let TransportMap::QuantileCompose { target, .. } = map else {
                unreachable!("checked above");
            };
            // ∫ h(x − T(x)) dμ(x) = ∫₀¹ h(F⁻(t) − T(F⁻(t))) dt.
            let q = |t: f64| -> Result<f64> { mu.quantile_minus(t)?.finite() };
            let gap = |t: f64| {
                let x = q(t).expect("t stays inside (0,1)");
                x - map.apply(x).expect("map applies to interior points")
            };
            let mut pts = metrics::unit_ladder();
            // The composed map jumps exactly at the target's cumulative
            // breakpoints (F∘F⁻ is the identity for continuous F).
            pts.extend(metrics::cumulative_breakpoints(target));
            pts.retain(|&t| (metrics::EPS_T..=1.0 - metrics::EPS_T).contains(&t));
            pts.sort_by(f64::total_cmp);
            pts.dedup();
            pts.extend(metrics::sign_crossings(&gap, &pts));
            pts.sort_by(f64::total_cmp);
            pts.dedup();
            let f = |t: f64| c.h(gap(t));
            let (value, _err) =
                quad::adaptive_split(&f, &pts, tol::QUAD_ABS, metrics::MAX_CELLS)?;
            Ok(value)
        }
    }
}

/// Mass the plan moves from the interval `a` into the interval `b`.
///
/// For the quantile coupling both events are intervals in t-space, so the
/// mass is the length of their intersection,
/// `max(0, min{F(a₂), G(b₂)} − max{F(a₁⁻), G(b₁⁻)})`.
pub fn plan_mass(plan: &TransportPlan, a: &Interval, b: &Interval) -> Result<f64> {
    match plan {
        TransportPlan::Tabular(j) => Ok(j
            .cells()
            .filter(|&(x, y, _)| a.contains(x) && b.contains(y))
            .map(|(_, _, p)| p)
            .sum()),
        TransportPlan::Quantile { mu, nu } => Ok(quantile_rect_mass(mu, nu, a, b)),
        TransportPlan::Deterministic { mu, map } => {
            check_deterministic(mu, map)?;
            let TransportMap::QuantileCompose { target, .. } = map else {
                unreachable!("checked above");
            };
            Ok(quantile_rect_mass(mu, target, a, b))
        }
    }
}

/// Length of `{t : F⁻(t) ∈ a} ∩ {t : G⁻(t) ∈ b}` in (0,1].
fn quantile_rect_mass(
    mu: &UnivariateDist,
    nu: &UnivariateDist,
    a: &Interval,
    b: &Interval,
) -> f64 {
    // F⁻(t) ≤ x ⇔ t ≤ F(x) and F⁻(t) ≥ x ⇔ t > F(x⁻), so the event
    // {F⁻(t) ∈ [a₁, a₂]} is the half-open interval (F(a₁⁻), F(a₂)].
    let hi = mu.cdf(a.upper()).min(nu.cdf(b.upper()));
    let lo = mu.cdf_left(a.lower()).max(nu.cdf_left(b.lower()));
    (hi - lo).max(0.0)
}

/// One sampled point of a quantile-plan polyline.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PolylinePoint {
    /// Quantile level in (0,1).
    pub t: f64,
    /// `F⁻(t)` — source coordinate.
    pub x: f64,
    /// `G⁻(t)` (or `T(F⁻(t))` for graph couplings) — target coordinate.
    pub y: f64,
}

/// Samples the support curve `t ↦ (F⁻(t), G⁻(t))` of a quantile or graph
/// plan at `resolution` midpoints of (0,1), for external plotting. Tabular
/// plans serialize as joint tables instead.
pub fn export_polyline(plan: &TransportPlan, resolution: usize) -> Result<Vec<PolylinePoint>> {
    if resolution == 0 {
        return Err(Error::Domain("polyline resolution must be positive".into()));
    }
    let sample = |mu: &UnivariateDist,
                  y_at: &dyn Fn(f64, f64) -> Result<f64>|
     -> Result<Vec<PolylinePoint>> {
        (0..resolution)
            .map(|i| {
                let t = (i as f64 + 0.5) / resolution as f64;
                let x = mu.quantile_minus(t)?.finite()?;
                Ok(PolylinePoint {
                    t,
                    x,
                    y: y_at(t, x)?,
                })
            })
            .collect()
    };
    match plan {
        TransportPlan::Tabular(_) => Err(Error::Unsupported(
            "tabular plans serialize as joint tables, not polylines".into(),
        )),
        TransportPlan::Quantile { mu, nu } => {
            sample(mu, &|t, _x| nu.quantile_minus(t)?.finite())
        }
        TransportPlan::Deterministic { mu, map } => {
            check_deterministic(mu, map)?;
            sample(mu, &|_t, x| map.apply(x))
        }
    }
}

/// Optimal equal-mass matching of n source points to n target points for a
/// convex cost of the difference: sort both sides and pair equal ranks.
///
/// Inputs need not be sorted — the original indices are carried through the
/// internal stable sort, and ties therefore resolve in input order (any
/// minimizing assignment has the same cost). Returns the assignment as a
/// 0-based [`TransportMap::Permutation`] `σ` with `xs[i]` sent to
/// `ys[σ(i)]`, together with the total cost `Σ h(xᵢ − y_{σ(i)})` — the
/// Manhattan distance between the sorted vectors when the cost is the
/// absolute difference.
pub fn discrete_monge(xs: &[f64], ys: &[f64], c: &CostFn) -> Result<(TransportMap, f64)> {
    if xs.len() != ys.len() {
        return Err(Error::Domain(format!(
            "equal-mass matching needs equally many points on both sides, \
             got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    if xs.iter().chain(ys).any(|v| !v.is_finite()) {
        return Err(Error::Domain("support points must be finite".into()));
    }
    let n = xs.len();
    let mut xi: Vec<usize> = (0..n).collect();
    xi.sort_by(|&i, &j| xs[i].total_cmp(&xs[j]));
    let mut yi: Vec<usize> = (0..n).collect();
    yi.sort_by(|&i, &j| ys[i].total_cmp(&ys[j]));
    let mut sigma = vec![0usize; n];
    let mut cost = 0.0;
    for k in 0..n {
        sigma[xi[k]] = yi[k];
        cost += c.cost(xs[xi[k]], ys[yi[k]]);
    }
    Ok((TransportMap::Permutation(sigma), cost))
}

/// Exhaustive minimum over all n! assignments; the oracle for
/// [`discrete_monge`]. Guarded at n ≤ 9. Ties break to the
/// lexicographically smallest assignment, so results are deterministic.
pub fn brute_force_monge(xs: &[f64], ys: &[f64], c: &CostFn) -> Result<(TransportMap, f64)> {
    brute_force_monge_with(xs, ys, |u| c.h(u))
}

/// [`brute_force_monge`] with a free-form `h`, convex or not — the escape
/// hatch that lets tests demonstrate what happens to the sorted matching
/// when the convexity hypothesis is dropped.
pub fn brute_force_monge_with(
    xs: &[f64],
    ys: &[f64],
    h: impl Fn(f64) -> f64,
) -> Result<(TransportMap, f64)> {
    if xs.len() != ys.len() {
        return Err(Error::Domain(format!(
            "equal-mass matching needs equally many points on both sides, \
             got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let n = xs.len();
    if n > 9 {
        return Err(Error::Unsupported(format!(
            "exhaustive search over n! assignments is limited to n <= 9, got {n}"
        )));
    }
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut best = sigma.clone();
    let mut best_cost = f64::INFINITY;
    loop {
        let cost: f64 = (0..n).map(|i| h(xs[i] - ys[sigma[i]])).sum();
        // Strict improvement plus lexicographic enumeration order keeps the
        // lexicographically smallest assignment among exact ties.
        if cost < best_cost {
            best_cost = cost;
            best.copy_from_slice(&sigma);
        }
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    Ok((TransportMap::Permutation(best), best_cost))
}

/// Advances `p` to its lexicographic successor; false once `p` is the last
/// (descending) arrangement.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::metrics::gk;

    fn n01() -> UnivariateDist {
        UnivariateDist::gaussian(0.0, 1.0).unwrap()
    }

    fn full_line() -> Interval {
        Interval::new(-f64::MAX, f64::MAX).unwrap()
    }

    #[test]
    fn power_cost_validates_exponent() {
        assert!(CostFn::power(1.0).is_ok());
        assert!(CostFn::power(2.5).is_ok());
        assert!(CostFn::power(0.5).is_err());
        assert!(CostFn::power(f64::NAN).is_err());
    }

    #[test]
    fn custom_cost_demands_attestation_and_convexity() {
        let unattested = CostFn::custom(|u| u * u, false);
        assert!(matches!(unattested, Err(Error::CostRejected(_))));

        // A falsely attested concave cost is caught by the midpoint check.
        let concave = CostFn::custom(|u: f64| u.abs().sqrt(), true);
        assert!(matches!(concave, Err(Error::CostRejected(_))));

        // Convex but somewhere negative: also refused.
        let signed = CostFn::custom(|u| u, true);
        assert!(matches!(signed, Err(Error::CostRejected(_))));

        // A genuinely convex non-negative cost passes.
        let huber = CostFn::custom(
            |u: f64| {
                if u.abs() <= 1.0 {
                    0.5 * u * u
                } else {
                    u.abs() - 0.5
                }
            },
            true,
        )
        .unwrap();
        assert!((huber.h(0.5) - 0.125).abs() < 1e-15);
        assert!((huber.h(-3.0) - 2.5).abs() < 1e-15);
    }

    #[test]
    fn permutation_must_be_a_bijection() {
        assert!(TransportMap::permutation(vec![2, 0, 1]).is_ok());
        assert!(TransportMap::permutation(vec![]).is_ok());
        assert!(TransportMap::permutation(vec![0, 0, 1]).is_err());
        assert!(TransportMap::permutation(vec![1, 2, 3]).is_err());
    }

    #[test]
    fn quantile_compose_shifts_and_scales_gaussians() {
        // Between N(0,1) and N(2,3) the composed map is the affine map
        // x ↦ 2 + 3x.
        let map = TransportMap::quantile_compose(
            n01(),
            UnivariateDist::gaussian(2.0, 3.0).unwrap(),
        )
        .unwrap();
        for x in [-2.0, -0.3, 0.0, 0.7, 1.9] {
            assert!((map.apply(x).unwrap() - (2.0 + 3.0 * x)).abs() < 1e-9);
        }
        // Atomic sources are refused.
        let atomic = UnivariateDist::discrete(vec![0.0, 1.0], vec![0.5, 0.5]).unwrap();
        assert!(TransportMap::quantile_compose(atomic, n01()).is_err());
        // Index assignments cannot be applied to points.
        let sigma = TransportMap::permutation(vec![1, 0]).unwrap();
        assert!(sigma.apply(0.0).is_err());
    }

    #[test]
    fn plan_between_equal_laws_costs_nothing() {
        let plan = optimal_plan(&n01(), &n01());
        for c in [
            CostFn::abs(),
            CostFn::power(2.0).unwrap(),
            CostFn::custom(|u: f64| u * u + u.abs(), true).unwrap(),
        ] {
            assert!(plan_cost(&plan, &c).unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn quantile_plan_cdf_is_the_min_of_the_marginal_cdfs() {
        let mu = n01();
        let nu = UnivariateDist::uniform(-1.0, 2.0).unwrap();
        let plan = optimal_plan(&mu, &nu);
        for (x, y) in [(-0.5, 0.3), (0.0, -2.0), (1.4, 1.9), (3.0, 2.5)] {
            let want = mu.cdf(x).min(nu.cdf(y));
            assert!((plan.cdf(x, y).unwrap() - want).abs() < 1e-15);
        }
    }

    #[test]
    fn optimal_cost_matches_the_cdf_distance_on_the_contrast_tables() {
        let (mu, nu) = fixtures::gk_a().marginals();
        let cost = optimal_cost(&mu, &nu, &CostFn::abs()).unwrap();
        assert!((cost - 0.5).abs() < 1e-12, "got {cost}");
        assert!((cost - gk(&mu, &nu).unwrap().value).abs() < 1e-12);
    }

    #[test]
    fn optimal_cost_of_translated_gaussians_is_the_shift() {
        let cost = optimal_cost(
            &n01(),
            &UnivariateDist::gaussian(1.0, 1.0).unwrap(),
            &CostFn::abs(),
        )
        .unwrap();
        assert!((cost - 1.0).abs() < 1e-9, "got {cost}");
    }

    #[test]
    fn tabular_plan_cost_sums_the_table() {
        let plan = TransportPlan::tabular(fixtures::gk_b());
        let cost = plan_cost(&plan, &CostFn::abs()).unwrap();
        assert!((cost - 0.62).abs() < 1e-12, "got {cost}");
    }

    #[test]
    fn identity_map_moves_nothing() {
        let mu = n01();
        let map = TransportMap::quantile_compose(mu.clone(), mu.clone()).unwrap();
        let plan = TransportPlan::deterministic(mu, map).unwrap();
        assert!(plan_cost(&plan, &CostFn::abs()).unwrap() < 1e-8);
        assert!(plan_cost(&plan, &CostFn::power(2.0).unwrap()).unwrap() < 1e-8);
    }

    #[test]
    fn deterministic_rewrite_reproduces_the_quantile_cost() {
        let pairs = [
            (n01(), UnivariateDist::uniform(2.0, 5.0).unwrap()),
            (
                UnivariateDist::uniform(0.0, 1.0).unwrap(),
                UnivariateDist::gaussian(1.0, 2.0).unwrap(),
            ),
            (
                UnivariateDist::gaussian(-1.0, 0.5).unwrap(),
                UnivariateDist::discrete(vec![-1.0, 0.0, 3.0], vec![0.2, 0.5, 0.3]).unwrap(),
            ),
        ];
        for (mu, nu) in pairs {
            let quantile = optimal_plan(&mu, &nu);
            let graph = quantile.deterministic_form().unwrap();
            for c in [CostFn::abs(), CostFn::power(2.0).unwrap()] {
                let a = plan_cost(&quantile, &c).unwrap();
                let b = plan_cost(&graph, &c).unwrap();
                assert!(
                    (a - b).abs() < 1e-8,
                    "quantile {a} vs graph {b} for {c:?}"
                );
            }
        }
    }

    #[test]
    fn deterministic_plans_reject_mismatched_or_atomic_sources() {
        let mu = n01();
        let other = UnivariateDist::gaussian(0.0, 2.0).unwrap();
        let map = TransportMap::quantile_compose(other, mu.clone()).unwrap();
        assert!(TransportPlan::deterministic(mu.clone(), map).is_err());
        let sigma = TransportMap::permutation(vec![0, 1]).unwrap();
        assert!(TransportPlan::deterministic(mu.clone(), sigma.clone()).is_err());
        // Hand-assembled invalid plans are caught at use, not only at
        // construction.
        let bad = TransportPlan::Deterministic {
            mu,
            map: sigma,
        };
        assert!(plan_cost(&bad, &CostFn::abs()).is_err());
        assert!(plan_mass(&bad, &full_line(), &full_line()).is_err());
    }

    #[test]
    fn sorted_matching_on_aligned_points_is_the_identity() {
        let (map, cost) =
            discrete_monge(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0], &CostFn::abs()).unwrap();
        assert_eq!(map, TransportMap::Permutation(vec![0, 1, 2]));
        assert_eq!(cost, 0.0);
    }

    #[test]
    fn sorted_matching_half_shift() {
        let (_, cost) =
            discrete_monge(&[0.0, 1.0, 2.0], &[0.5, 1.5, 2.5], &CostFn::abs()).unwrap();
        assert!((cost - 1.5).abs() < 1e-15);
    }

    #[test]
    fn sorted_matching_beats_the_crossed_pairing() {
        let (map, cost) = discrete_monge(&[0.0, 10.0], &[1.0, 2.0], &CostFn::abs()).unwrap();
        assert_eq!(map, TransportMap::Permutation(vec![0, 1]));
        assert!((cost - 9.0).abs() < 1e-15);
        // The crossed pairing costs |0−2| + |10−1| = 11 > 9... and brute
        // force agrees with the sorted answer.
        let (_, oracle) = brute_force_monge(&[0.0, 10.0], &[1.0, 2.0], &CostFn::abs()).unwrap();
        assert_eq!(oracle, cost);
    }

    #[test]
    fn unsorted_inputs_are_matched_by_rank() {
        let (map, cost) =
            discrete_monge(&[2.0, 0.0, 1.0], &[0.5, 2.5, 1.5], &CostFn::abs()).unwrap();
        // Ranks: x-order (1,2,0), y-order (0,2,1) ⇒ 2→2.5, 0→0.5, 1→1.5.
        assert_eq!(map, TransportMap::Permutation(vec![1, 0, 2]));
        assert!((cost - 1.5).abs() < 1e-15);
    }

    #[test]
    fn matching_rejects_bad_inputs() {
        assert!(discrete_monge(&[0.0], &[1.0, 2.0], &CostFn::abs()).is_err());
        assert!(discrete_monge(&[f64::NAN], &[1.0], &CostFn::abs()).is_err());
        assert!(brute_force_monge(&[0.0; 10], &[0.0; 10], &CostFn::abs()).is_err());
    }

    #[test]
    fn brute_force_confirms_sorted_matching_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let xs: Vec<f64> = (0..6).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let ys: Vec<f64> = (0..6).map(|_| rng.gen_range(-5.0..5.0)).collect();
            for c in [CostFn::abs(), CostFn::power(2.0).unwrap()] {
                let (_, fast) = discrete_monge(&xs, &ys, &c).unwrap();
                let (_, slow) = brute_force_monge(&xs, &ys, &c).unwrap();
                assert!((fast - slow).abs() < 1e-12, "{fast} vs {slow} for {c:?}");
            }
        }
    }

    #[test]
    fn concave_costs_break_the_sorted_matching() {
        // With h(u) = √|u| the crossed pairing is strictly cheaper:
        // √1.1 + √1 ≈ 2.049 for sorted vs √2 + √0.1 ≈ 1.731 crossed.
        let xs = [0.0, 1.0];
        let ys = [1.1, 2.0];
        let h = |u: f64| u.abs().sqrt();
        let sorted_cost: f64 = h(xs[0] - ys[0]) + h(xs[1] - ys[1]);
        let (map, best) = brute_force_monge_with(&xs, &ys, h).unwrap();
        assert_eq!(map, TransportMap::Permutation(vec![1, 0]));
        assert!(best < sorted_cost - 0.3);
    }

    #[test]
    fn quantile_plan_mass_is_a_t_interval_intersection() {
        let mu = n01();
        let plan = optimal_plan(&mu, &mu);
        // A = the quantile band [F⁻(0.3), F⁻(0.5)] carries mass 0.2 and is
        // its own image under the identity-quantile plan.
        let a = Interval::new(
            mu.quantile_minus(0.3).unwrap().finite().unwrap(),
            mu.quantile_minus(0.5).unwrap().finite().unwrap(),
        )
        .unwrap();
        let m = plan_mass(&plan, &a, &a).unwrap();
        assert!((m - 0.2).abs() < 1e-12, "got {m}");
        // ... and equals both marginal masses.
        assert!((plan_mass(&plan, &a, &full_line()).unwrap() - 0.2).abs() < 1e-12);
        assert!((plan_mass(&plan, &full_line(), &a).unwrap() - 0.2).abs() < 1e-12);
        // Off-curve rectangles carry nothing; the full plane carries 1.
        let b = Interval::new(1.0, 2.0).unwrap();
        let off = Interval::new(-1.0, 0.0).unwrap();
        assert_eq!(plan_mass(&plan, &off, &b).unwrap(), 0.0);
        assert!((plan_mass(&plan, &full_line(), &full_line()).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn tabular_plan_mass_sums_cells_in_the_rectangle() {
        let plan = TransportPlan::tabular(fixtures::gk_a());
        let x0 = Interval::new(-0.5, 0.5).unwrap();
        let m = plan_mass(&plan, &x0, &full_line()).unwrap();
        assert!((m - 0.7).abs() < 1e-15, "got {m}");
    }

    #[test]
    fn exp_relabelling_turns_the_identity_plan_into_the_log_curve() {
        // The optimal plan between N(0,1) and its exponential pushforward
        // lives on the curve y = eˣ; with only the Gaussian family in the
        // library, the y-axis is handled through its logarithm. The plan CDF
        // must be min{Φ(x), Φ(ln y)} and interval masses must match the
        // relabelled marginals.
        let mu = n01();
        let plan = optimal_plan(&mu, &mu);
        for (x, y) in [(0.0, 1.5_f64), (-1.0, 0.2), (1.3, 9.0)] {
            let got = plan.cdf(x, y.ln()).unwrap();
            let want = mu.cdf(x).min(mu.cdf(y.ln()));
            assert!((got - want).abs() < 1e-15);
        }
        // Mass moved from A = [F⁻(0.1), F⁻(0.3)] into its image
        // [exp(F⁻(0.1)), exp(F⁻(0.3))] is exactly 0.2 = μ(A) = ν(B).
        let q = |t: f64| mu.quantile_minus(t).unwrap().finite().unwrap();
        let a = Interval::new(q(0.1), q(0.3)).unwrap();
        let b_log = a; // ln of the image interval
        let m = plan_mass(&plan, &a, &b_log).unwrap();
        assert!((m - 0.2).abs() < 1e-12);
        // The exported polyline, exp-relabelled, is the curve y = eˣ.
        for p in export_polyline(&plan, 64).unwrap() {
            assert!((p.y.exp() - p.x.exp()).abs() < 1e-12);
        }
    }

    #[test]
    fn polyline_export_covers_the_unit_interval() {
        let plan = optimal_plan(&n01(), &UnivariateDist::uniform(0.0, 1.0).unwrap());
        let pts = export_polyline(&plan, 512).unwrap();
        assert_eq!(pts.len(), 512);
        assert!((pts[0].t - 0.5 / 512.0).abs() < 1e-15);
        assert!(pts.windows(2).all(|w| w[0].x <= w[1].x && w[0].y <= w[1].y));
        assert!(export_polyline(&plan, 0).is_err());
        assert!(export_polyline(&TransportPlan::tabular(fixtures::gk_a()), 8).is_err());
    }

    #[test]
    fn optimal_cost_lower_bounds_random_tabular_plans() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mu = UnivariateDist::discrete(vec![0.0, 1.0, 3.0], vec![0.2, 0.5, 0.3]).unwrap();
        let nu = UnivariateDist::discrete(vec![-1.0, 2.0], vec![0.6, 0.4]).unwrap();
        let best = optimal_cost(&mu, &nu, &CostFn::abs()).unwrap();
        for _ in 0..25 {
            let j = JointDiscrete::random_coupling(&mu, &nu, &mut rng).unwrap();
            let cost = plan_cost(&TransportPlan::tabular(j), &CostFn::abs()).unwrap();
            assert!(cost >= best - 1e-9, "coupling cost {cost} beat {best}");
        }
    }
}
