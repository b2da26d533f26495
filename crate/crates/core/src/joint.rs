//! Finite bivariate probability tables and coupling constructors.
//!
//! A [`JointDiscrete`] carries a probability matrix over a pair of sorted
//! support grids.  This module builds the standard couplings (product,
//! diagonal, Sinkhorn-randomized), extracts marginals, tests independence,
//! classifies a table into the six dependence/identity categories, and
//! computes entropy and mutual information in nats.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dist::{normalize_weights, UnivariateDist};
use crate::error::{Error, Result};

/// Number of Sinkhorn row/column rescaling sweeps used by
/// [`JointDiscrete::random_coupling`].
const SINKHORN_ITERS: usize = 200;

/// A probability table over `x_support × y_support`; rows are indexed by x.
///
/// Invariants (enforced on construction and deserialization): supports
/// strictly increasing and finite, all entries non-negative, total mass 1
/// within the renormalization policy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Literal")]
pub struct JointDiscrete {
    #[serde(rename = "x")]
    x_support: Vec<f64>,
    #[serde(rename = "y")]
    y_support: Vec<f64>,
    #[serde(rename = "p")]
    prob: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct Literal {
    x: Vec<f64>,
    y: Vec<f64>,
    p: Vec<Vec<f64>>,
}

impl TryFrom<Literal> for JointDiscrete {
    type Error = Error;

    fn try_from(lit: Literal) -> Result<Self> {
        Self::new(lit.x, lit.y, lit.p)
    }
}

/// One of the six exclusive categories a bivariate table falls into,
/// determined by three predicates: independence, almost-sure equality,
/// and equality of the two marginal distributions.
///
/// | label | independent | a.s. equal | equal in distribution |
/// |-------|-------------|------------|-----------------------|
/// | A     | no          | yes        | yes                   |
/// | B     | no          | no         | yes                   |
/// | C     | yes         | yes        | yes                   |
/// | D     | yes         | no         | yes                   |
/// | E     | yes         | no         | no                    |
/// | F     | no          | no         | no                    |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Category {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl std::fmt::Display for Category {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Rounds to 12 significant decimal digits; the canonical form under which
/// support values from different grids are considered "the same point".
pub(crate) fn canon12(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("valid float literal")
}

impl JointDiscrete {
    /// Validated constructor.  Entries must be non-negative and finite,
    /// supports strictly increasing; total mass follows the renormalization
    /// policy (defect ≤ 1e-12 kept bit-exact, ≤ 1e-9 rescaled, else error).
    pub fn new(x_support: Vec<f64>, y_support: Vec<f64>, prob: Vec<Vec<f64>>) -> Result<Self> {
        for (name, support) in [("x", &x_support), ("y", &y_support)] {
            if support.is_empty() {
                return Err(Error::InvalidJoint(format!(
                    "{name} support must be non-empty"
                )));
            }
            if support.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidJoint(format!(
                    "{name} support must be finite"
                )));
            }
            if support.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidJoint(format!(
                    "{name} support must be strictly increasing"
                )));
            }
        }
        if prob.len() != x_support.len() || prob.iter().any(|row| row.len() != y_support.len()) {
            return Err(Error::InvalidJoint(format!(
                "probability matrix must be {}×{}",
                x_support.len(),
                y_support.len()
            )));
        }
        let mut flat: Vec<f64> = prob.iter().flatten().copied().collect();
        normalize_weights(&mut flat, "probability entries")
            .map_err(|e| Error::InvalidJoint(e.to_string()))?;
        let ny = y_support.len();
        let prob = flat.chunks(ny).map(|row| row.to_vec()).collect();
        Ok(Self {
            x_support,
            y_support,
            prob,
        })
    }

    /// Parses the CSV table layout: a header row of y values (optionally
    /// preceded by a corner label), then one row per x value whose first
    /// cell is the x value and the rest are probabilities.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidJoint("empty CSV table".into()))?;
        let header_cells: Vec<&str> = header.split(',').map(str::trim).collect();

        let mut x_support = Vec::new();
        let mut prob = Vec::new();
        for line in lines {
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            if cells.len() < 2 {
                return Err(Error::InvalidJoint(format!(
                    "CSV row needs an x value and at least one probability: {line:?}"
                )));
            }
            x_support.push(parse_cell(cells[0])?);
            let row = cells[1..]
                .iter()
                .map(|c| parse_cell(c))
                .collect::<Result<Vec<f64>>>()?;
            prob.push(row);
        }
        let ncols = prob.first().map_or(0, Vec::len);
        // The corner cell above the x column is optional.
        let y_cells: &[&str] = if header_cells.len() == ncols + 1 {
            &header_cells[1..]
        } else {
            &header_cells[..]
        };
        if y_cells.len() != ncols {
            return Err(Error::InvalidJoint(format!(
                "CSV header has {} y values but rows have {} probabilities",
                y_cells.len(),
                ncols
            )));
        }
        let y_support = y_cells
            .iter()
            .map(|c| parse_cell(c))
            .collect::<Result<Vec<f64>>>()?;
        Self::new(x_support, y_support, prob)
    }

    /// Sorted x-support grid.
    pub fn x_support(&self) -> &[f64] {
        &self.x_support
    }

    /// Sorted y-support grid.
    pub fn y_support(&self) -> &[f64] {
        &self.y_support
    }

    /// Probability matrix, rows indexed by x.
    pub fn prob(&self) -> &[Vec<f64>] {
        &self.prob
    }

    /// Iterates over `(x, y, mass)` cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.prob.iter().enumerate().flat_map(move |(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &p)| (self.x_support[i], self.y_support[j], p))
        })
    }

    /// Product coupling of two finite marginals: `prob[i][j] = pᵢ·qⱼ`.
    /// The result is independent by construction.
    pub fn product_coupling(mu: &UnivariateDist, nu: &UnivariateDist) -> Result<Self> {
        let (xs, ps) = discrete_parts(mu)?;
        let (ys, qs) = discrete_parts(nu)?;
        let prob = ps
            .iter()
            .map(|p| qs.iter().map(|q| p * q).collect())
            .collect();
        Self::new(xs.to_vec(), ys.to_vec(), prob)
    }

    /// Diagonal coupling of a finite marginal with itself:
    /// `prob[i][i] = pᵢ`, zero elsewhere, so `Y = X` almost surely.
    pub fn diagonal_coupling(mu: &UnivariateDist) -> Result<Self> {
        let (xs, ps) = discrete_parts(mu)?;
        let n = xs.len();
        let mut prob = vec![vec![0.0; n]; n];
        for (i, &p) in ps.iter().enumerate() {
            prob[i][i] = p;
        }
        Self::new(xs.to_vec(), xs.to_vec(), prob)
    }

    /// A random coupling with the given marginals: a positive random matrix
    /// is rescaled to the target row and column sums by alternating Sinkhorn
    /// sweeps (200 iterations), which converges geometrically for strictly
    /// positive seeds.
    pub fn random_coupling<R: Rng + ?Sized>(
        mu: &UnivariateDist,
        nu: &UnivariateDist,
        rng: &mut R,
    ) -> Result<Self> {
        let (xs, ps) = discrete_parts(mu)?;
        let (ys, qs) = discrete_parts(nu)?;
        let (n, m) = (xs.len(), ys.len());
        let mut mat: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..m).map(|_| 0.05 + rng.gen::<f64>()).collect())
            .collect();
        for _ in 0..SINKHORN_ITERS {
            for (row, &target) in mat.iter_mut().zip(ps) {
                let sum: f64 = row.iter().sum();
                let scale = if sum > 0.0 { target / sum } else { 0.0 };
                row.iter_mut().for_each(|v| *v *= scale);
            }
            for (j, &target) in qs.iter().enumerate() {
                let sum: f64 = mat.iter().map(|row| row[j]).sum();
                let scale = if sum > 0.0 { target / sum } else { 0.0 };
                mat.iter_mut().for_each(|row| row[j] *= scale);
            }
        }
        Self::new(xs.to_vec(), ys.to_vec(), mat)
    }

    /// Row and column sums as finite discrete laws; zero-mass support
    /// points are retained.
    pub fn marginals(&self) -> (UnivariateDist, UnivariateDist) {
        let px: Vec<f64> = self.prob.iter().map(|row| row.iter().sum()).collect();
        let py: Vec<f64> = (0..self.y_support.len())
            .map(|j| self.prob.iter().map(|row| row[j]).sum())
            .collect();
        let mx = UnivariateDist::discrete(self.x_support.clone(), px)
            .expect("row sums of a valid table form a valid weight vector");
        let my = UnivariateDist::discrete(self.y_support.clone(), py)
            .expect("column sums of a valid table form a valid weight vector");
        (mx, my)
    }

    /// True iff every cell satisfies `|prob[i][j] − pᵢ·qⱼ| ≤ tol` with
    /// `p, q` the marginals.
    pub fn is_independent(&self, tol: f64) -> bool {
        let px: Vec<f64> = self.prob.iter().map(|row| row.iter().sum()).collect();
        let py: Vec<f64> = (0..self.y_support.len())
            .map(|j| self.prob.iter().map(|row| row[j]).sum())
            .collect();
        self.prob.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &p)| (p - px[i] * py[j]).abs() <= tol)
        })
    }

    /// Total probability mass lying off the diagonal `x = y`, where support
    /// values are matched after rounding to 12 significant digits.
    pub fn off_diagonal_mass(&self) -> f64 {
        self.cells()
            .filter(|&(x, y, _)| canon12(x) != canon12(y))
            .map(|(_, _, p)| p)
            .sum()
    }

    /// Largest pointwise gap between the two marginal laws, measured on the
    /// merged support (12-significant-digit canonical matching).
    pub fn marginal_gap(&self) -> f64 {
        let (mx, my) = self.marginals();
        let mass = |d: &UnivariateDist, v: f64| -> f64 {
            match d {
                UnivariateDist::Discrete { points, weights } => points
                    .iter()
                    .zip(weights)
                    .filter(|&(&x, _)| canon12(x) == v)
                    .map(|(_, &w)| w)
                    .sum(),
                _ => unreachable!("marginals are discrete"),
            }
        };
        let mut merged: Vec<f64> = self
            .x_support
            .iter()
            .chain(&self.y_support)
            .map(|&v| canon12(v))
            .collect();
        merged.sort_by(f64::total_cmp);
        merged.dedup();
        merged
            .into_iter()
            .map(|v| (mass(&mx, v) - mass(&my, v)).abs())
            .fold(0.0, f64::max)
    }

    /// Classifies the table by the three predicates (independence, almost
    /// sure equality, equality of distribution), each at tolerance `tol`.
    /// Almost-sure equality forces equality of distribution, so the eight
    /// combinations collapse to the six categories.
    pub fn classify(&self, tol: f64) -> Category {
        let indep = self.is_independent(tol);
        let as_eq = self.off_diagonal_mass() <= tol;
        let eq_dist = as_eq || self.marginal_gap() <= tol;
        match (indep, as_eq, eq_dist) {
            (false, true, _) => Category::A,
            (false, false, true) => Category::B,
            (true, true, _) => Category::C,
            (true, false, true) => Category::D,
            (true, false, false) => Category::E,
            (false, false, false) => Category::F,
        }
    }

    /// Joint Shannon entropy `H(X,Y) = Σ pᵢⱼ ln(1/pᵢⱼ)` in nats, with the
    /// convention `0·ln(1/0) = 0`.
    pub fn entropy(&self) -> f64 {
        entropy_of(self.prob.iter().flatten().copied())
    }

    /// Mutual information `I(X;Y) = H(X) + H(Y) − H(X,Y)` in nats.
    /// Non-negative up to floating-point noise, and zero exactly when the
    /// table is independent.
    pub fn mutual_information(&self) -> f64 {
        let px = self.prob.iter().map(|row| row.iter().sum::<f64>());
        let py = (0..self.y_support.len()).map(|j| self.prob.iter().map(|row| row[j]).sum());
        entropy_of(px) + entropy_of(py) - self.entropy()
    }
}

fn entropy_of(probs: impl Iterator<Item = f64>) -> f64 {
    probs
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum()
}

fn parse_cell(cell: &str) -> Result<f64> {
    cell.parse::<f64>()
        .map_err(|_| Error::InvalidJoint(format!("CSV cell {cell:?} is not a number")))
}

fn discrete_parts(d: &UnivariateDist) -> Result<(&[f64], &[f64])> {
    match d {
        UnivariateDist::Discrete { points, weights } => Ok((points, weights)),
        other => Err(Error::Unsupported(format!(
            "coupling constructors need finite discrete marginals, got {other:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn disc(points: &[f64], weights: &[f64]) -> UnivariateDist {
        UnivariateDist::discrete(points.to_vec(), weights.to_vec()).unwrap()
    }

    fn table(x: &[f64], y: &[f64], p: &[&[f64]]) -> JointDiscrete {
        JointDiscrete::new(
            x.to_vec(),
            y.to_vec(),
            p.iter().map(|row| row.to_vec()).collect(),
        )
        .unwrap()
    }

    /// Entrywise comparison at the table tolerance (the decimal reference
    /// entries are not exactly representable, e.g. 0.7·0.2 ≠ 0.14 bit-exact).
    fn assert_table_close(got: &[Vec<f64>], want: &[&[f64]]) {
        for (grow, wrow) in got.iter().zip(want) {
            for (g, w) in grow.iter().zip(wrow.iter()) {
                assert!((g - w).abs() <= 1e-12, "entry {g} differs from {w}");
            }
        }
    }

    #[test]
    fn product_coupling_matches_reference_tables() {
        let mu = disc(&[0.0, 1.0], &[0.7, 0.3]);
        let nu = disc(&[0.0, 1.0], &[0.2, 0.8]);
        let j = JointDiscrete::product_coupling(&mu, &nu).unwrap();
        assert_table_close(j.prob(), &[&[0.14, 0.56], &[0.06, 0.24]]);
        assert!(j.is_independent(1e-12));

        let mu = disc(&[0.0, 1.0], &[0.5, 0.5]);
        let nu = disc(&[0.0, 1.0], &[0.25, 0.75]);
        let j = JointDiscrete::product_coupling(&mu, &nu).unwrap();
        assert_eq!(j.prob(), &[vec![0.125, 0.375], vec![0.125, 0.375]]);

        // A point-mass first marginal gives a single row equal to nu.
        let point = disc(&[2.0], &[1.0]);
        let j = JointDiscrete::product_coupling(&point, &nu).unwrap();
        assert_eq!(j.prob(), &[vec![0.25, 0.75]]);
    }

    #[test]
    fn diagonal_coupling_puts_all_mass_on_the_diagonal() {
        let mu = disc(&[0.0, 1.0], &[0.3, 0.7]);
        let j = JointDiscrete::diagonal_coupling(&mu).unwrap();
        assert_eq!(j.prob(), &[vec![0.3, 0.0], vec![0.0, 0.7]]);
        assert_eq!(j.off_diagonal_mass(), 0.0);
        let (mx, my) = j.marginals();
        assert_eq!(mx, mu);
        assert_eq!(my, mu);

        // For a point mass the product and diagonal couplings coincide.
        let point = disc(&[2.0], &[1.0]);
        assert_eq!(
            JointDiscrete::diagonal_coupling(&point).unwrap(),
            JointDiscrete::product_coupling(&point, &point).unwrap()
        );
    }

    #[test]
    fn marginals_of_the_dependent_reference_table() {
        let j = table(
            &[0.0, 1.0],
            &[0.0, 1.0],
            &[&[0.1, 0.6], &[0.1, 0.2]],
        );
        let (mx, my) = j.marginals();
        let weights = |d: &UnivariateDist| match d {
            UnivariateDist::Discrete { weights, .. } => weights.clone(),
            _ => unreachable!(),
        };
        assert_table_close(&[weights(&mx)], &[&[0.7, 0.3]]);
        assert_table_close(&[weights(&my)], &[&[0.2, 0.8]]);
        assert!(!j.is_independent(1e-12));
    }

    #[test]
    fn classification_covers_all_six_categories() {
        // Dependent, a.s. equal (diagonal of a non-degenerate law).
        let a = JointDiscrete::diagonal_coupling(&disc(&[0.0, 1.0], &[0.3, 0.7])).unwrap();
        assert_eq!(a.classify(1e-9), Category::A);

        // Dependent, same marginals, off-diagonal mass.
        let b = table(&[0.0, 1.0], &[0.0, 1.0], &[&[0.4, 0.1], &[0.1, 0.4]]);
        assert_eq!(b.classify(1e-9), Category::B);

        // Independent and a.s. equal: only a point mass manages both.
        let point = disc(&[2.0], &[1.0]);
        let c = JointDiscrete::product_coupling(&point, &point).unwrap();
        assert_eq!(c.classify(1e-9), Category::C);

        // Independent copies of the same law.
        let mu = disc(&[0.0, 1.0], &[0.3, 0.7]);
        let d = JointDiscrete::product_coupling(&mu, &mu).unwrap();
        assert_eq!(d.classify(1e-9), Category::D);

        // Independent with different marginals.
        let nu = disc(&[0.0, 1.0], &[0.2, 0.8]);
        let e = JointDiscrete::product_coupling(&mu, &nu).unwrap();
        assert_eq!(e.classify(1e-9), Category::E);

        // Dependent, different marginals, off-diagonal mass.
        let f = table(&[0.0, 1.0], &[0.0, 1.0], &[&[0.1, 0.6], &[0.1, 0.2]]);
        assert_eq!(f.classify(1e-9), Category::F);
    }

    #[test]
    fn entropy_matches_reference_values() {
        // Minimal-E|X−Y| coupling of (0.5,0.5) with (0.25,0.75).
        let min = table(&[0.0, 1.0], &[0.0, 1.0], &[&[0.25, 0.25], &[0.0, 0.5]]);
        let want = 1.039_720_770_839_917_964_125_848;
        assert!((min.entropy() - want).abs() <= 1e-14);

        // The product coupling of the same marginals.
        let prod = table(&[0.0, 1.0], &[0.0, 1.0], &[&[0.125, 0.375], &[0.125, 0.375]]);
        let want = 1.255_482_325_178_753_659_705_262;
        assert!((prod.entropy() - want).abs() <= 1e-14);

        // Point-mass product has zero entropy.
        let point = disc(&[2.0], &[1.0]);
        let j = JointDiscrete::product_coupling(&point, &point).unwrap();
        assert_eq!(j.entropy(), 0.0);
    }

    #[test]
    fn mutual_information_reference_values() {
        let prod = table(&[0.0, 1.0], &[0.0, 1.0], &[&[0.125, 0.375], &[0.125, 0.375]]);
        assert!(prod.mutual_information().abs() <= 1e-12);

        let min = table(&[0.0, 1.0], &[0.0, 1.0], &[&[0.25, 0.25], &[0.0, 0.5]]);
        let want = 0.215_761_554_338_835_695_579_414_3;
        assert!((min.mutual_information() - want).abs() <= 1e-14);

        let diag = JointDiscrete::diagonal_coupling(&disc(&[0.0, 1.0], &[0.5, 0.5])).unwrap();
        assert!((diag.mutual_information() - std::f64::consts::LN_2).abs() <= 1e-12);
    }

    #[test]
    fn sinkhorn_coupling_hits_the_target_marginals() {
        let mu = disc(&[0.0, 1.0, 3.0], &[0.2, 0.5, 0.3]);
        let nu = disc(&[-1.0, 2.0], &[0.6, 0.4]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let j = JointDiscrete::random_coupling(&mu, &nu, &mut rng).unwrap();
        let (mx, my) = j.marginals();
        let gap = |a: &UnivariateDist, b: &UnivariateDist| match (a, b) {
            (
                UnivariateDist::Discrete { weights: wa, .. },
                UnivariateDist::Discrete { weights: wb, .. },
            ) => wa
                .iter()
                .zip(wb)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
            _ => unreachable!(),
        };
        assert!(gap(&mx, &mu) <= 1e-9);
        assert!(gap(&my, &nu) <= 1e-9);
    }

    #[test]
    fn product_coupling_maximizes_entropy_among_random_couplings() {
        let mu = disc(&[0.0, 1.0], &[0.4, 0.6]);
        let nu = disc(&[0.0, 2.0], &[0.3, 0.7]);
        let product = JointDiscrete::product_coupling(&mu, &nu).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let j = JointDiscrete::random_coupling(&mu, &nu, &mut rng).unwrap();
            assert!(j.entropy() <= product.entropy() + 1e-9);
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let json = r#"{"x":[0,1],"y":[0,1],"p":[[0.1,0.6],[0.1,0.2]]}"#;
        let j: JointDiscrete = serde_json::from_str(json).unwrap();
        assert_eq!(j.x_support(), &[0.0, 1.0]);
        assert_eq!(j.prob()[0][1], 0.6);
        let emitted = serde_json::to_string(&j).unwrap();
        let reparsed: JointDiscrete = serde_json::from_str(&emitted).unwrap();
        assert_eq!(reparsed, j);

        // Mass far from 1 is rejected; a tiny defect is renormalized.
        assert!(serde_json::from_str::<JointDiscrete>(
            r#"{"x":[0,1],"y":[0,1],"p":[[0.5,0.5],[0.5,0.5]]}"#
        )
        .is_err());
        let j: JointDiscrete = serde_json::from_str(
            r#"{"x":[0,1],"y":[0,1],"p":[[0.25,0.2500000001],[0.25,0.25]]}"#,
        )
        .unwrap();
        let mass: f64 = j.prob().iter().flatten().sum();
        assert!((mass - 1.0).abs() <= 1e-15);

        assert!(JointDiscrete::new(vec![0.0, 0.0], vec![0.0], vec![vec![0.5], vec![0.5]]).is_err());
        assert!(JointDiscrete::new(vec![0.0], vec![0.0], vec![vec![0.5, 0.5]]).is_err());
        assert!(JointDiscrete::new(vec![0.0], vec![0.0], vec![vec![-1.0]]).is_err());
    }

    #[test]
    fn csv_parsing_with_and_without_a_corner_label() {
        let with_corner = "x\\y, 0, 1\n0, 0.1, 0.6\n1, 0.1, 0.2\n";
        let j = JointDiscrete::from_csv(with_corner).unwrap();
        assert_eq!(j.prob(), &[vec![0.1, 0.6], vec![0.1, 0.2]]);
        assert_eq!(j.y_support(), &[0.0, 1.0]);

        let without_corner = "0, 1\n0, 0.1, 0.6\n1, 0.1, 0.2\n";
        assert_eq!(JointDiscrete::from_csv(without_corner).unwrap(), j);

        assert!(JointDiscrete::from_csv("").is_err());
        assert!(JointDiscrete::from_csv("0,1\n0,0.5\n").is_err());
        assert!(JointDiscrete::from_csv("0,1\nq,0.5,0.5\n").is_err());
    }

    #[test]
    fn classification_merges_supports_across_grids() {
        // Same law on both axes but the grids differ; all mass sits on
        // points where x = y, so this is a.s. equality on merged supports.
        let j = table(&[0.0, 1.0], &[0.0, 1.0, 2.0], &[&[0.3, 0.0, 0.0], &[0.0, 0.7, 0.0]]);
        assert_eq!(j.off_diagonal_mass(), 0.0);
        assert_eq!(j.marginal_gap(), 0.0);
        assert_eq!(j.classify(1e-9), Category::A);
    }
}
