//! `l1metrics` — command-line front end for the L1 probability-metric
//! library: expected absolute difference, normalized distance, Gini
//! statistics, CDF/Wasserstein distances, optimal transport, coupling
//! verification reports, and the built-in reference tables.
//!
//! Every subcommand prints a single JSON document on stdout (human-indented
//! with `--pretty`). Exit codes: 0 on success, 1 on a validation error
//! (malformed or inconsistent input, impossible request), 2 on a usage
//! error (unknown flags, missing or contradictory arguments). Randomized
//! subcommands require an explicit `--seed` and produce byte-identical
//! output for identical invocations.

mod input;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use l1metrics::absdiff::{eabs_joint, eabs_product, IndependentPair};
use l1metrics::dist::UnivariateDist;
use l1metrics::estimate::{mc_eabs, quad_eabs};
use l1metrics::fixtures;
use l1metrics::gini::{check_triangle_dnorm, consistency_rule, d_norm, eta_p, gini_index, gmd, EtaPInput};
use l1metrics::joint::JointDiscrete;
use l1metrics::metrics::{gk, wasserstein_p};
use l1metrics::tol;
use l1metrics::transport::{export_polyline, optimal_cost, optimal_plan, CostFn};

/// A failed invocation, split by who got it wrong: `Usage` for the shape
/// of the command line (exit 2), `Validation` for the content of the
/// inputs (exit 1).
pub enum Failure {
    Usage(String),
    Validation(String),
}

impl From<l1metrics::Error> for Failure {
    fn from(e: l1metrics::Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "l1metrics",
    version,
    about = "L1 probability metrics: E|X-Y|, Gini statistics, CDF/Wasserstein \
             distances, and one-dimensional optimal transport",
    after_help = "Distribution arguments take an inline JSON literal such as \
                  '{\"type\":\"gaussian\",\"mu\":0,\"sigma\":1}' or a file \
                  containing one; table arguments take a file (JSON or CSV), \
                  a fixture name (see `l1metrics fixtures`), or inline JSON."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Indent the JSON output for reading.
    #[arg(long, global = true)]
    pretty: bool,
}

/// Input shared by the metric subcommands: one joint table, or two
/// marginal distributions treated as an independent pair.
#[derive(Args)]
struct TableOrPair {
    /// Joint table: file, fixture name, or inline JSON.
    #[arg(long, conflicts_with_all = ["mu", "nu"])]
    joint: Option<String>,
    /// First distribution (inline JSON or file).
    #[arg(long, requires = "nu")]
    mu: Option<String>,
    /// Second distribution (inline JSON or file).
    #[arg(long, requires = "mu")]
    nu: Option<String>,
}

/// A loaded [`TableOrPair`].
enum Source {
    Table(JointDiscrete),
    Pair(IndependentPair),
}

impl TableOrPair {
    fn load(&self) -> Result<Source, Failure> {
        match (&self.joint, &self.mu, &self.nu) {
            (Some(j), None, None) => Ok(Source::Table(input::joint("--joint", j)?)),
            (None, Some(m), Some(n)) => Ok(Source::Pair(IndependentPair::new(
                input::dist("--mu", m)?,
                input::dist("--nu", n)?,
            ))),
            _ => Err(Failure::Usage(
                "provide either --joint, or both --mu and --nu".into(),
            )),
        }
    }

    /// The two laws being compared, whichever way they were given: the
    /// marginals of the table, or the pair itself.
    fn laws(&self) -> Result<(UnivariateDist, UnivariateDist), Failure> {
        Ok(match self.load()? {
            Source::Table(j) => j.marginals(),
            Source::Pair(p) => (p.x.clone(), p.y.clone()),
        })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Expected absolute difference E|X-Y| of a joint table or an
    /// independent pair.
    Eabs {
        #[command(flatten)]
        source: TableOrPair,
        /// Force quadrature at this absolute tolerance instead of the
        /// closed forms (independent pairs of continuous laws only).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Normalized distance E|X-Y| / (E|X| + E|Y|).
    Dnorm {
        #[command(flatten)]
        source: TableOrPair,
    },
    /// Gini mean difference E|X-X'| of one law (X' an independent copy).
    Gmd {
        /// The law (inline JSON or file).
        #[arg(long)]
        dist: String,
    },
    /// Gini index: mean difference over twice the mean, for laws with
    /// positive mean.
    Gini {
        /// The law (inline JSON or file).
        #[arg(long)]
        dist: String,
    },
    /// L1 distance between the two CDFs (equals the 1-Wasserstein
    /// distance).
    Gk {
        #[command(flatten)]
        source: TableOrPair,
    },
    /// Wasserstein distance of order p between the two laws.
    Wasserstein {
        #[command(flatten)]
        source: TableOrPair,
        /// Order of the distance (p >= 1).
        #[arg(long, default_value_t = 1.0)]
        p: f64,
    },
    /// Optimal transport cost between two laws under a convex cost, with
    /// optional export of the optimal plan as a quantile polyline.
    Transport {
        /// Source distribution (inline JSON or file).
        #[arg(long)]
        mu: String,
        /// Target distribution (inline JSON or file).
        #[arg(long)]
        nu: String,
        /// Cost function: `abs` for |x-y|, or `power:P` for |x-y|^P with
        /// P >= 1.
        #[arg(long, default_value = "abs")]
        cost: String,
        /// Write the optimal plan as a JSON polyline of {t, x, y} points
        /// to this file.
        #[arg(long)]
        export_plan: Option<String>,
        /// Number of polyline points for --export-plan.
        #[arg(long, default_value_t = 512)]
        resolution: usize,
    },
    /// Triangle-inequality report for the normalized distance on a triple
    /// of pairwise tables.
    CheckTriangle {
        /// Triple of tables: file or inline JSON with xy/yz/xz fields, or
        /// a triple fixture name.
        #[arg(long)]
        joint: String,
    },
    /// Covariance consistency report (pairwise covariance matrix must be
    /// positive semidefinite) on a triple of pairwise tables.
    CheckConsistency {
        /// Triple of tables: file or inline JSON with xy/yz/xz fields, or
        /// a triple fixture name.
        #[arg(long)]
        joint: String,
    },
    /// Dependence category of a joint table (A-F: independence,
    /// almost-sure equality, equality in distribution).
    Classify {
        /// Joint table: file, fixture name, or inline JSON.
        #[arg(long)]
        joint: String,
        /// Predicate tolerance for the three underlying tests.
        #[arg(long, default_value_t = tol::PREDICATE)]
        tol: f64,
    },
    /// Joint entropy and mutual information of a table (nats).
    Entropy {
        /// Joint table: file, fixture name, or inline JSON.
        #[arg(long)]
        joint: String,
    },
    /// Coupling semimetric eta_p between two bivariate tables: distance of
    /// their mean vectors plus the gap of their within-pair p-deviations.
    Eta {
        /// The two tables (give the flag twice), or once with a pair
        /// fixture name such as pi1pi2.
        #[arg(long, required = true)]
        joint: Vec<String>,
        /// Order of the underlying moment (p >= 1).
        #[arg(long, default_value_t = 1.0)]
        p: f64,
    },
    /// Monte-Carlo estimate of E|X-Y| for an independent pair.
    Mc {
        /// First distribution (inline JSON or file).
        #[arg(long)]
        mu: String,
        /// Second distribution (inline JSON or file).
        #[arg(long)]
        nu: String,
        /// Number of samples.
        #[arg(long)]
        n: usize,
        /// RNG seed; identical invocations produce identical bytes.
        #[arg(long)]
        seed: u64,
    },
    /// Print a named reference table as JSON, or the list of available
    /// names.
    Fixtures {
        /// Fixture name; omit to list all names.
        name: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(value) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&value)
            } else {
                serde_json::to_string(&value)
            }
            .expect("JSON values serialize");
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: &Cmd) -> Result<Value, Failure> {
    match cmd {
        Cmd::Eabs { source, tol } => {
            let value = match (source.load()?, tol) {
                (Source::Table(j), None) => eabs_joint(&j),
                (Source::Table(_), Some(_)) => {
                    return Err(Failure::Usage(
                        "--tol forces quadrature and applies only to --mu/--nu pairs".into(),
                    ))
                }
                (Source::Pair(p), None) => eabs_product(&p)?,
                (Source::Pair(p), Some(t)) => quad_eabs(&p, *t)?,
            };
            Ok(json!({ "eabs": value }))
        }
        Cmd::Dnorm { source } => {
            let (eabs, x, y) = match source.load()? {
                Source::Table(j) => {
                    let (x, y) = j.marginals();
                    (eabs_joint(&j), x, y)
                }
                Source::Pair(p) => (eabs_product(&p)?, p.x.clone(), p.y.clone()),
            };
            Ok(json!({ "dnorm": d_norm(eabs, x.mean_abs(), y.mean_abs())? }))
        }
        Cmd::Gmd { dist } => Ok(json!({ "gmd": gmd(&input::dist("--dist", dist)?)? })),
        Cmd::Gini { dist } => {
            let report = gini_index(&input::dist("--dist", dist)?)?;
            Ok(if report.signed_support {
                json!({ "gini": report.gini, "signed_support": true })
            } else {
                json!({ "gini": report.gini })
            })
        }
        Cmd::Gk { source } => {
            let (mu, nu) = source.laws()?;
            let r = gk(&mu, &nu)?;
            Ok(json!({ "gk": r.value, "method": r.method }))
        }
        Cmd::Wasserstein { source, p } => {
            let (mu, nu) = source.laws()?;
            let r = wasserstein_p(&mu, &nu, *p)?;
            Ok(json!({ "wasserstein": r.value, "p": p, "method": r.method }))
        }
        Cmd::Transport {
            mu,
            nu,
            cost,
            export_plan,
            resolution,
        } => {
            let mu = input::dist("--mu", mu)?;
            let nu = input::dist("--nu", nu)?;
            let cost = parse_cost(cost)?;
            let value = optimal_cost(&mu, &nu, &cost)?;
            if let Some(path) = export_plan {
                let plan = optimal_plan(&mu, &nu);
                let points = export_polyline(&plan, *resolution)?;
                let text = serde_json::to_string(&points).expect("JSON values serialize");
                fs::write(path, text + "\n").map_err(|e| {
                    Failure::Validation(format!("cannot write --export-plan {path:?}: {e}"))
                })?;
            }
            Ok(json!({ "cost": value }))
        }
        Cmd::CheckTriangle { joint } => {
            let report = check_triangle_dnorm(&input::triple("--joint", joint)?)?;
            Ok(serde_json::to_value(report).expect("reports serialize"))
        }
        Cmd::CheckConsistency { joint } => {
            let report = consistency_rule(&input::triple("--joint", joint)?);
            Ok(serde_json::to_value(report).expect("reports serialize"))
        }
        Cmd::Classify { joint, tol } => {
            let category = input::joint("--joint", joint)?.classify(*tol);
            Ok(json!({ "category": category }))
        }
        Cmd::Entropy { joint } => {
            let j = input::joint("--joint", joint)?;
            Ok(json!({
                "entropy": j.entropy(),
                "mutual_information": j.mutual_information(),
            }))
        }
        Cmd::Eta { joint, p } => {
            let (pi1, pi2) = input::coupling_pair(joint)?;
            Ok(json!({ "eta": eta_p(&EtaPInput::new(pi1, pi2, *p)?), "p": p }))
        }
        Cmd::Mc { mu, nu, n, seed } => {
            let pair = IndependentPair::new(input::dist("--mu", mu)?, input::dist("--nu", nu)?);
            let estimate = mc_eabs(&pair, *n, *seed)?;
            Ok(serde_json::to_value(estimate).expect("reports serialize"))
        }
        Cmd::Fixtures { name } => match name {
            None => Ok(json!({ "fixtures": fixtures::NAMES })),
            Some(n) => Ok(serde_json::to_value(fixtures::by_name(n)?).expect("tables serialize")),
        },
    }
}

/// Parses the `--cost` flag: `abs`, or `power:P` with a real `P >= 1`.
fn parse_cost(spec: &str) -> Result<CostFn, Failure> {
    if spec == "abs" {
        return Ok(CostFn::abs());
    }
    if let Some(raw) = spec.strip_prefix("power:") {
        let p: f64 = raw.parse().map_err(|_| {
            Failure::Usage(format!("--cost power:{raw}: exponent is not a number"))
        })?;
        return Ok(CostFn::power(p)?);
    }
    Err(Failure::Usage(format!(
        "--cost must be `abs` or `power:P`, got {spec:?}"
    )))
}
