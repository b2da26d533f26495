//! The worked example tables shipped as named fixtures.
//!
//! Every table that the test suites and the CLI reference by name lives
//! here, entered digit-for-digit: the two dependent/independent pairs used
//! to contrast CDF-only distances with the expected absolute difference,
//! the six classification examples, the three min/independent/max tables,
//! the three triples for the triangle and consistency checks, the matched
//! pair of couplings with equal centers and deviations, and the extreme
//! two-point inequality law.

use serde::Serialize;

use crate::dist::UnivariateDist;
use crate::error::{Error, Result};
use crate::gini::TripleTables;
use crate::joint::JointDiscrete;

fn table(xs: &[f64], ys: &[f64], rows: &[&[f64]]) -> JointDiscrete {
    JointDiscrete::new(
        xs.to_vec(),
        ys.to_vec(),
        rows.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("fixture table entries are valid")
}

const B01: &[f64] = &[0.0, 1.0];
const PM1: &[f64] = &[-1.0, 1.0];

/// Dependent pair over {0,1}² with marginals (0.7, 0.3) × (0.2, 0.8);
/// `E|X−Y| = 0.7` while the CDF-only distance is 0.5.
pub fn gk_a() -> JointDiscrete {
    table(B01, B01, &[&[0.1, 0.6], &[0.1, 0.2]])
}

/// Independent pair with the same marginals as [`gk_a`]; `E|X−Y| = 0.62`
/// and the CDF-only distance is still 0.5.
pub fn gk_b() -> JointDiscrete {
    table(B01, B01, &[&[0.14, 0.56], &[0.06, 0.24]])
}

/// Diagonal coupling of (0.3, 0.7) with itself: dependent, almost surely
/// equal, identically distributed.
pub fn sixdistrib_a() -> JointDiscrete {
    table(B01, B01, &[&[0.3, 0.0], &[0.0, 0.7]])
}

/// Dependent, not almost surely equal, identically distributed.
pub fn sixdistrib_b() -> JointDiscrete {
    table(B01, B01, &[&[0.1, 0.2], &[0.2, 0.5]])
}

/// Point mass at (0, 0): independent and almost surely equal, the constant
/// case.
pub fn sixdistrib_c() -> JointDiscrete {
    table(B01, B01, &[&[1.0, 0.0], &[0.0, 0.0]])
}

/// Product of (0.3, 0.7) with itself: i.i.d., not almost surely equal.
pub fn sixdistrib_d() -> JointDiscrete {
    table(B01, B01, &[&[0.09, 0.21], &[0.21, 0.49]])
}

/// Product of (0.2, 0.8) × (0.3, 0.7): independent, differently
/// distributed.
pub fn sixdistrib_e() -> JointDiscrete {
    table(B01, B01, &[&[0.06, 0.14], &[0.24, 0.56]])
}

/// Dependent and differently distributed: marginals (0.4, 0.6) × (0.7, 0.3).
pub fn sixdistrib_f() -> JointDiscrete {
    table(B01, B01, &[&[0.3, 0.1], &[0.4, 0.2]])
}

/// Dependent pair with minimal `E|X−Y| = 1/4` among tables with marginals
/// (1/2, 1/2) × (1/4, 3/4).
pub fn minmax_a() -> JointDiscrete {
    table(B01, B01, &[&[0.25, 0.25], &[0.0, 0.5]])
}

/// Independent pair with the same marginals; `E|X−Y| = 1/2`.
pub fn minmax_b() -> JointDiscrete {
    table(B01, B01, &[&[0.125, 0.375], &[0.125, 0.375]])
}

/// Dependent pair with maximal `E|X−Y| = 3/4` for the same marginals.
pub fn minmax_c() -> JointDiscrete {
    table(B01, B01, &[&[0.0, 0.5], &[0.25, 0.25]])
}

/// Dependent triple over {−1,1} that satisfies the consistency rule yet
/// violates the normalized triangle inequality by 0.02.
pub fn pxpypz_abc() -> TripleTables {
    let xy = table(PM1, PM1, &[&[0.3, 0.1], &[0.0, 0.6]]);
    let yz = table(PM1, PM1, &[&[0.11, 0.19], &[0.59, 0.11]]);
    let xz = table(PM1, PM1, &[&[0.1, 0.3], &[0.6, 0.0]]);
    TripleTables::new(xy, yz, xz).expect("shared marginals agree")
}

/// Triple whose covariance matrix has a negative eigenvalue: its three
/// tables cannot be the pairwise projections of any single three-variable
/// experiment. The triangle inequality fails by 0.2.
pub fn pxpypz_def() -> TripleTables {
    let xy = table(PM1, PM1, &[&[0.3, 0.1], &[0.0, 0.6]]);
    let yz = table(PM1, PM1, &[&[0.3, 0.0], &[0.4, 0.3]]);
    let xz = table(PM1, PM1, &[&[0.2, 0.2], &[0.5, 0.1]]);
    TripleTables::new(xy, yz, xz).expect("shared marginals agree")
}

/// Mutually independent triple (all three tables are products); the
/// covariance matrix is diag(0.96, 0.84, 0.84) and the triangle inequality
/// holds with slack 0.5.
pub fn pxpypz_ghi() -> TripleTables {
    let xy = table(PM1, PM1, &[&[0.12, 0.28], &[0.18, 0.42]]);
    let yz = table(PM1, PM1, &[&[0.21, 0.09], &[0.49, 0.21]]);
    let xz = table(PM1, PM1, &[&[0.28, 0.12], &[0.42, 0.18]]);
    TripleTables::new(xy, yz, xz).expect("shared marginals agree")
}

/// Two different couplings of one law μ on {0,1,2} with itself that share
/// centers and every deviation moment `E|X−Y|^p = 0.3 + 0.15·2^p`, so
/// every `eta_p` distance between them is zero.
pub fn pi1pi2() -> (JointDiscrete, JointDiscrete) {
    let support = &[0.0, 1.0, 2.0];
    let pi1 = table(
        support,
        support,
        &[
            &[0.05, 0.10, 0.05],
            &[0.05, 0.20, 0.10],
            &[0.10, 0.05, 0.30],
        ],
    );
    let pi2 = table(
        support,
        support,
        &[
            &[0.0, 0.10, 0.10],
            &[0.15, 0.20, 0.0],
            &[0.05, 0.05, 0.35],
        ],
    );
    (pi1, pi2)
}

/// Extreme-inequality two-point law: mass `1−eps` at 0 and `eps` at `b`.
/// Its Gini index is exactly `1 − eps`.
pub fn epsilon_law(eps: f64, b: f64) -> Result<UnivariateDist> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Domain(format!(
            "epsilon must lie strictly between 0 and 1, got {eps}"
        )));
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::Domain(format!(
            "income level b must be finite and strictly positive, got {b}"
        )));
    }
    UnivariateDist::discrete(vec![0.0, b], vec![1.0 - eps, eps])
}

/// The i.i.d. pair built from [`epsilon_law`]: the four-cell product table
/// `[(1−eps)², eps(1−eps); eps(1−eps), eps²]`.
pub fn epsilon_table(eps: f64, b: f64) -> Result<JointDiscrete> {
    let law = epsilon_law(eps, b)?;
    JointDiscrete::product_coupling(&law, &law)
}

/// A named fixture: either a single table, a triple of pairwise tables, or
/// the matched pair of couplings.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Fixture {
    /// One bivariate table.
    Joint(JointDiscrete),
    /// Three pairwise tables over shared variables.
    Triple(TripleTables),
    /// Two couplings compared by `eta_p`.
    Pair {
        pi1: JointDiscrete,
        pi2: JointDiscrete,
    },
}

/// Names accepted by [`by_name`], in display order. The parameterized
/// fixture is spelled `epsilon(EPS,B)`, e.g. `epsilon(0.1,5)`.
pub const NAMES: &[&str] = &[
    "gk_a",
    "gk_b",
    "sixdistrib_A",
    "sixdistrib_B",
    "sixdistrib_C",
    "sixdistrib_D",
    "sixdistrib_E",
    "sixdistrib_F",
    "minmax_a",
    "minmax_b",
    "minmax_c",
    "pxpypz_ABC",
    "pxpypz_DEF",
    "pxpypz_GHI",
    "pi1pi2",
    "epsilon(EPS,B)",
];

/// Looks a fixture up by name. `epsilon(0.1,5)` carries its two parameters
/// in the name; every other name is a fixed table from the list in
/// [`NAMES`].
pub fn by_name(name: &str) -> Result<Fixture> {
    let n = name.trim();
    if let Some(args) = n
        .strip_prefix("epsilon(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::UnknownFixture(format!(
                "{n} (expected epsilon(EPS,B) with two numeric arguments)"
            )));
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse()
                .map_err(|_| Error::UnknownFixture(format!("{n} (cannot parse `{s}` as a number)")))
        };
        return Ok(Fixture::Joint(epsilon_table(
            parse(parts[0])?,
            parse(parts[1])?,
        )?));
    }
    Ok(match n {
        "gk_a" => Fixture::Joint(gk_a()),
        "gk_b" => Fixture::Joint(gk_b()),
        "sixdistrib_A" => Fixture::Joint(sixdistrib_a()),
        "sixdistrib_B" => Fixture::Joint(sixdistrib_b()),
        "sixdistrib_C" => Fixture::Joint(sixdistrib_c()),
        "sixdistrib_D" => Fixture::Joint(sixdistrib_d()),
        "sixdistrib_E" => Fixture::Joint(sixdistrib_e()),
        "sixdistrib_F" => Fixture::Joint(sixdistrib_f()),
        "minmax_a" => Fixture::Joint(minmax_a()),
        "minmax_b" => Fixture::Joint(minmax_b()),
        "minmax_c" => Fixture::Joint(minmax_c()),
        "pxpypz_ABC" => Fixture::Triple(pxpypz_abc()),
        "pxpypz_DEF" => Fixture::Triple(pxpypz_def()),
        "pxpypz_GHI" => Fixture::Triple(pxpypz_ghi()),
        "pi1pi2" => {
            let (pi1, pi2) = pi1pi2();
            Fixture::Pair { pi1, pi2 }
        }
        _ => return Err(Error::UnknownFixture(n.to_string())),
    })
}
