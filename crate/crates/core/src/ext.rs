//! The extended real line: finite values plus explicit ±∞ sentinels.
//!
//! Generalized inverses of CDFs take the values −∞ (at t = 0) and +∞ (at
//! t = 1 for unbounded supports). Those sentinels are deliberate, distinguished
//! values — not IEEE infinities that would silently flow through arithmetic —
//! so they get their own type, and extracting a finite number out of one is a
//! checked operation.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A point of the extended real line [−∞, +∞].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    /// The −∞ sentinel (e.g. `F⁻(0)` for every distribution).
    NegInf,
    /// An ordinary finite value.
    Finite(f64),
    /// The +∞ sentinel (e.g. `F⁻(1)` or `F⁺(1)` for unbounded supports).
    PosInf,
}

impl ExtReal {
    /// True when the value is an ordinary finite number.
    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    /// Extracts the finite value, or fails: the sentinels must never leak
    /// into arithmetic.
    pub fn finite(self) -> Result<f64> {
        match self {
            ExtReal::Finite(v) => Ok(v),
            ExtReal::NegInf => Err(Error::NonFinite("-inf sentinel".into())),
            ExtReal::PosInf => Err(Error::NonFinite("+inf sentinel".into())),
        }
    }

    /// Total order of the extended real line: −∞ < finite < +∞.
    ///
    /// Finite payloads are compared with `f64::total_cmp`; the constructors in
    /// this crate never produce NaN payloads.
    pub fn total_cmp(&self, other: &ExtReal) -> Ordering {
        use ExtReal::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.total_cmp(b),
        }
    }

    /// Compares against a plain finite number under the same total order.
    pub fn total_cmp_f64(&self, x: f64) -> Ordering {
        self.total_cmp(&ExtReal::Finite(x))
    }
}

impl From<f64> for ExtReal {
    fn from(v: f64) -> Self {
        ExtReal::Finite(v)
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.total_cmp(other))
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => write!(f, "-inf"),
            ExtReal::Finite(v) => write!(f, "{v}"),
            ExtReal::PosInf => write!(f, "+inf"),
        }
    }
}
