//! Normalized expected absolute difference, the Gini family, and the
//! center-plus-dispersion semimetric `eta_p` on laws of pairs.
//!
//! The verification machinery for triples of pairwise tables lives here too:
//! the normalized triangle-inequality report and the covariance-matrix
//! consistency rule that separates triples embeddable in one three-variable
//! experiment from triples that are not.

use serde::Serialize;

use crate::absdiff::{eabs_joint, eabs_product, IndependentPair};
use crate::dist::UnivariateDist;
use crate::error::{Error, Result};
use crate::joint::{canon12, JointDiscrete};
use crate::tol;

/// Normalized expected absolute difference `E|X−Y| / (E|X| + E|Y|)`.
///
/// Takes the three expectations of one pair, already computed by whichever
/// route fits the pair (joint table, product closed form, ...). Returns 0
/// when both `E|X|` and `E|Y|` vanish (then `X = Y = 0` almost surely), and
/// rejects inputs that cannot belong to one pair, i.e. `E|X−Y|` exceeding
/// `E|X| + E|Y|` beyond float tolerance.
pub fn d_norm(eabs: f64, ex: f64, ey: f64) -> Result<f64> {
    for (name, v) in [("E|X-Y|", eabs), ("E|X|", ex), ("E|Y|", ey)] {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Domain(format!(
                "{name} must be finite and non-negative, got {v}"
            )));
        }
    }
    let denom = ex + ey;
    if denom == 0.0 {
        if eabs > 0.0 {
            return Err(Error::Inconsistent(format!(
                "E|X-Y| = {eabs} > 0 while E|X| = E|Y| = 0"
            )));
        }
        return Ok(0.0);
    }
    let ratio = eabs / denom;
    if ratio > 1.0 + 1e-12 {
        return Err(Error::Inconsistent(format!(
            "E|X-Y| = {eabs} exceeds E|X| + E|Y| = {denom}; not a valid pair"
        )));
    }
    Ok(ratio)
}

/// Gini mean difference of a law: `E|X−Y|` for independent `X, Y ~ mu`.
pub fn gmd(mu: &UnivariateDist) -> Result<f64> {
    eabs_product(&IndependentPair::new(mu.clone(), mu.clone()))
}

/// Gini index together with the denominator convention that produced it.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GiniReport {
    /// `gmd(mu) / (2·E|X|)`, in `[0, 1]` up to float noise.
    pub gini: f64,
    /// True when the law puts mass on negative values; the usual denominator
    /// `2·E[X]` is then replaced by `2·E|X|` (the two coincide on
    /// non-negative laws, so the same formula serves both cases).
    pub signed_support: bool,
}

/// Gini index `gmd(mu) / (2·E|X|)` of a law.
///
/// On non-negative laws the denominator equals the classical `2·E[X]`.
/// Errors with [`Error::GiniDegenerateAtZero`] when the law is the point
/// mass at zero, the one case where the index has no value.
pub fn gini_index(mu: &UnivariateDist) -> Result<GiniReport> {
    let ex_abs = mu.mean_abs();
    if ex_abs == 0.0 {
        return Err(Error::GiniDegenerateAtZero);
    }
    let signed_support = match mu {
        UnivariateDist::Gaussian { .. } => true,
        UnivariateDist::Uniform { a, .. } => *a < 0.0,
        UnivariateDist::Dirac { c } => *c < 0.0,
        UnivariateDist::Discrete { points, weights } => points
            .iter()
            .zip(weights)
            .any(|(&x, &w)| x < 0.0 && w > 0.0),
    };
    Ok(GiniReport {
        gini: gmd(mu)? / (2.0 * ex_abs),
        signed_support,
    })
}

/// Three pairwise tables over the same three variables: `(X,Y)`, `(Y,Z)`
/// and `(X,Z)`. Construction checks that each variable gets the same
/// marginal law from both tables it appears in, so the triple could at
/// least in principle describe one three-variable experiment.
#[derive(Debug, Clone, Serialize)]
pub struct TripleTables {
    xy: JointDiscrete,
    yz: JointDiscrete,
    xz: JointDiscrete,
}

impl TripleTables {
    /// Validates pairwise agreement of the shared marginals within
    /// [`tol::MARGINAL_MATCH`].
    pub fn new(xy: JointDiscrete, yz: JointDiscrete, xz: JointDiscrete) -> Result<Self> {
        let (x_xy, y_xy) = xy.marginals();
        let (y_yz, z_yz) = yz.marginals();
        let (x_xz, z_xz) = xz.marginals();
        for (name, a, b) in [
            ("X (xy vs xz)", &x_xy, &x_xz),
            ("Y (xy vs yz)", &y_xy, &y_yz),
            ("Z (yz vs xz)", &z_yz, &z_xz),
        ] {
            let gap = marginal_mass_gap(a, b);
            if gap > tol::MARGINAL_MATCH {
                return Err(Error::InvalidJoint(format!(
                    "shared marginal {name} disagrees across tables: largest mass gap {gap:.3e}"
                )));
            }
        }
        Ok(Self { xy, yz, xz })
    }

    /// The `(X, Y)` table.
    pub fn xy(&self) -> &JointDiscrete {
        &self.xy
    }

    /// The `(Y, Z)` table.
    pub fn yz(&self) -> &JointDiscrete {
        &self.yz
    }

    /// The `(X, Z)` table.
    pub fn xz(&self) -> &JointDiscrete {
        &self.xz
    }
}

/// Largest pointwise mass gap between two discrete laws on their merged
/// support (12-significant-digit canonical matching, as everywhere else
/// supports are compared).
fn marginal_mass_gap(a: &UnivariateDist, b: &UnivariateDist) -> f64 {
    let mass = |d: &UnivariateDist, v: f64| -> f64 {
        match d {
            UnivariateDist::Discrete { points, weights } => points
                .iter()
                .zip(weights)
                .filter(|&(&x, _)| canon12(x) == v)
                .map(|(_, &w)| w)
                .sum(),
            _ => unreachable!("marginals of a table are discrete"),
        }
    };
    let points = |d: &UnivariateDist| -> Vec<f64> {
        match d {
            UnivariateDist::Discrete { points, .. } => points.clone(),
            _ => unreachable!("marginals of a table are discrete"),
        }
    };
    let mut merged: Vec<f64> = points(a)
        .into_iter()
        .chain(points(b))
        .map(canon12)
        .collect();
    merged.sort_by(f64::total_cmp);
    merged.dedup();
    merged
        .into_iter()
        .map(|v| (mass(a, v) - mass(b, v)).abs())
        .fold(0.0, f64::max)
}

/// Outcome of the normalized triangle inequality
/// `D_norm(X,Z) ≤ D_norm(X,Y) + D_norm(Y,Z)` on one triple of tables.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TriangleReport {
    /// `D_norm(X, Z)`.
    pub lhs: f64,
    /// `D_norm(X, Y) + D_norm(Y, Z)`.
    pub rhs: f64,
    /// `rhs − lhs`; negative iff the inequality fails.
    pub slack: f64,
    /// `slack ≥ −tol::PREDICATE`.
    pub holds: bool,
}

/// Evaluates the normalized triangle inequality on a triple of pairwise
/// tables. Mutually independent triples always satisfy it; dependent
/// triples may not, even when the consistency rule holds.
pub fn check_triangle_dnorm(t: &TripleTables) -> Result<TriangleReport> {
    let (x_m, y_m) = t.xy.marginals();
    let (_, z_m) = t.xz.marginals();
    let (ex, ey, ez) = (x_m.mean_abs(), y_m.mean_abs(), z_m.mean_abs());
    for (pair, a, b) in [("X,Z", ex, ez), ("X,Y", ex, ey), ("Y,Z", ey, ez)] {
        if a + b == 0.0 {
            return Err(Error::Domain(format!(
                "D_norm({pair}) denominator E|.| + E|.| is zero: more than one \
                 of the three variables vanishes almost surely"
            )));
        }
    }
    let lhs = d_norm(eabs_joint(&t.xz), ex, ez)?;
    let rhs = d_norm(eabs_joint(&t.xy), ex, ey)? + d_norm(eabs_joint(&t.yz), ey, ez)?;
    let slack = rhs - lhs;
    Ok(TriangleReport {
        lhs,
        rhs,
        slack,
        holds: slack >= -tol::PREDICATE,
    })
}

/// Covariance matrix of a triple of pairwise tables, its eigenvalues, and
/// the consistency verdict.
#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    /// `[[var X, cov(X,Y), cov(X,Z)], [.., var Y, cov(Y,Z)], [.., .., var Z]]`.
    pub cov_matrix: [[f64; 3]; 3],
    /// Ascending eigenvalues of `cov_matrix`.
    pub eigenvalues: [f64; 3],
    /// True iff the smallest eigenvalue is at least [`tol::PSD_MIN_EIGENVALUE`].
    pub consistent: bool,
}

/// Second moments of one table needed for the covariance matrix.
struct PairMoments {
    e_row: f64,
    e_col: f64,
    e_row2: f64,
    e_col2: f64,
    e_prod: f64,
}

impl PairMoments {
    fn of(j: &JointDiscrete) -> Self {
        let mut m = Self {
            e_row: 0.0,
            e_col: 0.0,
            e_row2: 0.0,
            e_col2: 0.0,
            e_prod: 0.0,
        };
        for (x, y, p) in j.cells() {
            m.e_row += x * p;
            m.e_col += y * p;
            m.e_row2 += x * x * p;
            m.e_col2 += y * y * p;
            m.e_prod += x * y * p;
        }
        m
    }

    fn var_row(&self) -> f64 {
        self.e_row2 - self.e_row * self.e_row
    }

    fn var_col(&self) -> f64 {
        self.e_col2 - self.e_col * self.e_col
    }

    fn cov(&self) -> f64 {
        self.e_prod - self.e_row * self.e_col
    }
}

/// Builds the 3×3 covariance matrix of `(X, Y, Z)` from the three pairwise
/// tables and tests it for positive semidefiniteness. A genuine
/// three-variable experiment always yields a PSD matrix, so a negative
/// eigenvalue proves that no single experiment has these three tables as
/// its two-dimensional projections.
pub fn consistency_rule(t: &TripleTables) -> ConsistencyReport {
    let m_xy = PairMoments::of(&t.xy);
    let m_yz = PairMoments::of(&t.yz);
    let m_xz = PairMoments::of(&t.xz);
    let cov_matrix = [
        [m_xy.var_row(), m_xy.cov(), m_xz.cov()],
        [m_xy.cov(), m_xy.var_col(), m_yz.cov()],
        [m_xz.cov(), m_yz.cov(), m_xz.var_col()],
    ];
    let eigenvalues = symmetric3_eigenvalues(&cov_matrix);
    ConsistencyReport {
        cov_matrix,
        eigenvalues,
        consistent: eigenvalues[0] >= tol::PSD_MIN_EIGENVALUE,
    }
}

/// Eigenvalues of a symmetric 3×3 matrix in ascending order, from the
/// trigonometric solution of the characteristic cubic. Only the upper
/// triangle of `v` is read.
pub fn symmetric3_eigenvalues(v: &[[f64; 3]; 3]) -> [f64; 3] {
    let off = v[0][1] * v[0][1] + v[0][2] * v[0][2] + v[1][2] * v[1][2];
    let scale = v
        .iter()
        .flatten()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    // Matrices that are diagonal up to float dust (product couplings leave
    // covariances of order 1e-17) read their eigenvalues off the diagonal;
    // zeroing entries this small moves each eigenvalue by at most ~1e-13
    // of the matrix scale, while the trigonometric route would lose ~1e-8
    // near the repeated roots such matrices tend to have.
    if off <= (1e-13 * scale).powi(2) {
        let mut d = [v[0][0], v[1][1], v[2][2]];
        d.sort_by(f64::total_cmp);
        return d;
    }
    let q = (v[0][0] + v[1][1] + v[2][2]) / 3.0;
    let p2 = (v[0][0] - q).powi(2) + (v[1][1] - q).powi(2) + (v[2][2] - q).powi(2) + 2.0 * off;
    let p = (p2 / 6.0).sqrt();
    // b = (v − q·I) / p has trace 0 and det(b)/2 ∈ [−1, 1].
    let b = [
        [(v[0][0] - q) / p, v[0][1] / p, v[0][2] / p],
        [v[0][1] / p, (v[1][1] - q) / p, v[1][2] / p],
        [v[0][2] / p, v[1][2] / p, (v[2][2] - q) / p],
    ];
    let det_b = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    let r = (det_b / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::FRAC_PI_3).cos();
    let mid = 3.0 * q - hi - lo;
    let mut eig = [lo, mid, hi];
    eig.sort_by(f64::total_cmp);
    eig
}

/// A law of pairs compared by `eta_p`: two tables and the moment order.
#[derive(Debug, Clone)]
pub struct EtaPInput {
    pi1: JointDiscrete,
    pi2: JointDiscrete,
    p: f64,
}

impl EtaPInput {
    /// Requires `p ≥ 1` (the moment order of a norm).
    pub fn new(pi1: JointDiscrete, pi2: JointDiscrete, p: f64) -> Result<Self> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::Domain(format!(
                "moment order must satisfy p >= 1, got {p}"
            )));
        }
        Ok(Self { pi1, pi2, p })
    }
}

/// Distance between two laws of pairs: Euclidean distance of their centers
/// `(E[X], E[Y])` plus the gap of their within-pair deviations
/// `(E|X−Y|^p)^{1/p}`. A semimetric: zero distance does not force equality
/// of the laws, since only these two characteristics are compared.
pub fn eta_p(inp: &EtaPInput) -> f64 {
    let (c1x, c1y) = center(&inp.pi1);
    let (c2x, c2y) = center(&inp.pi2);
    let within = (lp_deviation(&inp.pi1, inp.p) - lp_deviation(&inp.pi2, inp.p)).abs();
    (c1x - c2x).hypot(c1y - c2y) + within
}

/// `(E[X], E[Y])` of a table.
fn center(j: &JointDiscrete) -> (f64, f64) {
    let mut cx = 0.0;
    let mut cy = 0.0;
    for (x, y, p) in j.cells() {
        cx += x * p;
        cy += y * p;
    }
    (cx, cy)
}

/// `(E|X−Y|^p)^{1/p}` of a table; the `p = 1` path avoids `powf` so that
/// first-moment results are bit-identical to the plain expected absolute
/// difference.
fn lp_deviation(j: &JointDiscrete, p: f64) -> f64 {
    if p == 1.0 {
        return eabs_joint(j);
    }
    let sum: f64 = j
        .cells()
        .map(|(x, y, q)| (x - y).abs().powf(p) * q)
        .sum();
    sum.powf(1.0 / p)
}

/// The four pairwise distances entering the quadrilateral inequality:
/// two "opposite sides" `psi(X,Y)`, `psi(X1,Y1)` and the two "connecting
/// sides" `psi(X,X1)`, `psi(Y,Y1)`.
#[derive(Debug, Clone, Copy)]
pub struct QuadDistances {
    /// `psi(X, Y)`.
    pub d_xy: f64,
    /// `psi(X1, Y1)`.
    pub d_x1y1: f64,
    /// `psi(X, X1)`.
    pub d_xx1: f64,
    /// `psi(Y, Y1)`.
    pub d_yy1: f64,
}

/// Verifies the quadrilateral inequality
/// `|psi(X,Y) − psi(X1,Y1)| ≤ psi(X,X1) + psi(Y,Y1)`,
/// which holds for any non-negative symmetric `psi` satisfying the triangle
/// inequality. It is the step that makes a semimetric well-defined on
/// equivalence classes of its zero-sets.
pub fn quadrilateral_check(d: &QuadDistances) -> bool {
    (d.d_xy - d.d_x1y1).abs() <= d.d_xx1 + d.d_yy1 + tol::PREDICATE
}
