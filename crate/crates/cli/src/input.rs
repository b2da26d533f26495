//! Turns command-line argument strings into domain values.
//!
//! Three argument shapes appear on the command line:
//!
//! - distributions (`--dist`, `--mu`, `--nu`): inline JSON literal or the
//!   path of a file containing one;
//! - joint tables (`--joint`): a file (JSON object or CSV matrix), a named
//!   fixture, or an inline JSON object;
//! - table triples (`check-triangle` / `check-consistency`): a file or
//!   inline JSON object with `xy`/`yz`/`xz` table fields, or a named triple
//!   fixture.

use std::fs;

use l1metrics::dist::UnivariateDist;
use l1metrics::fixtures::{by_name, Fixture};
use l1metrics::gini::TripleTables;
use l1metrics::joint::JointDiscrete;

use crate::Failure;

/// Loads a distribution argument: inline JSON if it starts with `{`,
/// otherwise the path of a file holding the JSON literal.
pub fn dist(flag: &str, arg: &str) -> Result<UnivariateDist, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| {
            Failure::Validation(format!(
                "{flag} {arg:?}: not inline JSON and not a readable file ({e})"
            ))
        })?
    };
    serde_json::from_str(&text)
        .map_err(|e| Failure::Validation(format!("{flag}: invalid distribution: {e}")))
}

/// Loads a joint-table argument. Resolution order: existing file (JSON if
/// the content starts with `{`, else CSV), then fixture name, then inline
/// JSON object.
pub fn joint(flag: &str, arg: &str) -> Result<JointDiscrete, Failure> {
    if let Ok(text) = fs::read_to_string(arg) {
        return joint_text(flag, &text);
    }
    match by_name(arg) {
        Ok(Fixture::Joint(j)) => return Ok(j),
        Ok(_) => {
            return Err(Failure::Validation(format!(
                "{flag}: fixture {arg:?} is not a single table"
            )))
        }
        Err(_) => {}
    }
    if arg.trim_start().starts_with('{') {
        return joint_text(flag, arg);
    }
    Err(Failure::Validation(format!(
        "{flag} {arg:?}: no such file, fixture, or inline JSON object"
    )))
}

fn joint_text(flag: &str, text: &str) -> Result<JointDiscrete, Failure> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text)
            .map_err(|e| Failure::Validation(format!("{flag}: invalid table JSON: {e}")))
    } else {
        JointDiscrete::from_csv(text)
            .map_err(|e| Failure::Validation(format!("{flag}: invalid table CSV: {e}")))
    }
}

/// Loads a triple of pairwise tables: a JSON object with `xy`, `yz` and
/// `xz` fields (file or inline), or a named triple fixture such as
/// `pxpypz_ABC`.
pub fn triple(flag: &str, arg: &str) -> Result<TripleTables, Failure> {
    if let Ok(text) = fs::read_to_string(arg) {
        return triple_text(flag, &text);
    }
    match by_name(arg) {
        Ok(Fixture::Triple(t)) => return Ok(t),
        Ok(_) => {
            return Err(Failure::Validation(format!(
                "{flag}: fixture {arg:?} is not a triple of tables"
            )))
        }
        Err(_) => {}
    }
    if arg.trim_start().starts_with('{') {
        return triple_text(flag, arg);
    }
    Err(Failure::Validation(format!(
        "{flag} {arg:?}: no such file, triple fixture, or inline JSON object"
    )))
}

fn triple_text(flag: &str, text: &str) -> Result<TripleTables, Failure> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Failure::Validation(format!("{flag}: invalid triple JSON: {e}")))?;
    let table = |field: &str| -> Result<JointDiscrete, Failure> {
        let v = value.get(field).ok_or_else(|| {
            Failure::Validation(format!("{flag}: triple JSON is missing the {field:?} table"))
        })?;
        serde_json::from_value(v.clone()).map_err(|e| {
            Failure::Validation(format!("{flag}: invalid {field:?} table: {e}"))
        })
    };
    let (xy, yz, xz) = (table("xy")?, table("yz")?, table("xz")?);
    TripleTables::new(xy, yz, xz).map_err(Failure::from)
}

/// Loads the two couplings compared by `eta`: either two `--joint`
/// arguments (each a table), or a single one naming a pair fixture such as
/// `pi1pi2`.
pub fn coupling_pair(args: &[String]) -> Result<(JointDiscrete, JointDiscrete), Failure> {
    match args {
        [one] => match by_name(one) {
            Ok(Fixture::Pair { pi1, pi2 }) => Ok((pi1, pi2)),
            _ => Err(Failure::Usage(format!(
                "eta needs two --joint tables, or one --joint naming a pair \
                 fixture; {one:?} is neither"
            ))),
        },
        [a, b] => Ok((joint("--joint", a)?, joint("--joint", b)?)),
        _ => Err(Failure::Usage(
            "eta takes --joint exactly once (a pair fixture) or twice".into(),
        )),
    }
}
