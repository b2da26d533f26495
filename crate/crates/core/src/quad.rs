//! Adaptive Gauss–Kronrod quadrature on finite intervals.
//!
//! A 7-point Gauss / 15-point Kronrod pair supplies the local estimate and an
//! embedded error bound; the driver keeps a worst-first heap of subintervals
//! and bisects until the summed error estimate drops below the caller's
//! absolute tolerance. Integrands with |·|-type kinks converge here through
//! plain bisection — callers that know their breakpoints (support endpoints,
//! discrete atoms) should pass them to [`adaptive_split`] so the subdivision
//! starts on the right cells.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Kronrod abscissae for the (7,15) pair, non-negative half (the rule is
/// symmetric). Odd indices are the embedded Gauss-7 nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

/// Kronrod weights matching [`XGK`].
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

/// Gauss-7 weights for the nodes at odd indices of [`XGK`].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_97,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// One (7,15) evaluation over [a,b]: returns (kronrod value, error
/// estimate, roundoff floor). The floor is the smallest error double
/// precision can deliver on this cell — 50ε·∫|f| in the QUADPACK style —
/// and the estimate never reports below it.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut result_gauss = WG[3] * fc;
    let mut result_kronrod = WGK[7] * fc;
    let mut resabs = WGK[7] * fc.abs();

    let mut fv = [0.0_f64; 15];
    fv[7] = fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        result_kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * (f1 + f2);
        }
    }

    // Scaled error estimate in the style of QUADPACK: resasc measures how far
    // the integrand is from its own mean, which keeps the estimate honest on
    // kinked integrands, and resabs supplies a roundoff floor so the estimate
    // never claims more accuracy than double precision can deliver.
    let mean = result_kronrod * 0.5;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    resasc *= half.abs();
    resabs *= half.abs();

    let result_kronrod = result_kronrod * half;
    let raw = (result_kronrod - result_gauss * half).abs();
    let mut err = raw;
    if resasc != 0.0 && raw != 0.0 {
        err = resasc * 1.0_f64.min((200.0 * raw / resasc).powf(1.5));
    }
    let mut floor = 0.0;
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        floor = 50.0 * f64::EPSILON * resabs;
        err = err.max(floor);
    }
    (result_kronrod, err, floor)
}

#[derive(Debug)]
struct Cell {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    floor: f64,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Cell {}
impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Integrates `f` over [a,b] to absolute tolerance `abs_tol`.
///
/// Returns `(value, error_estimate)`. Fails only if the interval budget
/// (`max_cells` bisections) is exhausted while the estimate still exceeds the
/// tolerance.
pub fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_cells: usize,
) -> Result<(f64, f64)> {
    adaptive_split(f, &[a, b], abs_tol, max_cells)
}

/// Like [`adaptive`], but starts from the cells between consecutive
/// `points` (which must be non-decreasing). Pass known kinks and atoms of the
/// integrand as interior points.
pub fn adaptive_split<F: Fn(f64) -> f64>(
    f: &F,
    points: &[f64],
    abs_tol: f64,
    max_cells: usize,
) -> Result<(f64, f64)> {
    assert!(points.len() >= 2, "need at least one interval");
    let mut heap = BinaryHeap::new();
    let mut total = 0.0_f64;
    let mut total_err = 0.0_f64;
    // Sum of per-cell roundoff floors: the accuracy limit of double
    // precision on this integrand. The driver converges once the estimate
    // is within the caller's tolerance of that limit — demanding more would
    // refine forever on pure floating-point noise.
    let mut total_floor = 0.0_f64;
    for w in points.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        debug_assert!(lo <= hi, "integration points must be sorted");
        if lo == hi {
            continue;
        }
        let (v, e, fl) = gk15(f, lo, hi);
        total += v;
        total_err += e;
        total_floor += fl;
        heap.push(Cell {
            a: lo,
            b: hi,
            value: v,
            err: e,
            floor: fl,
        });
    }

    let mut splits = 0usize;
    while total_err > abs_tol + total_floor && splits < max_cells {
        let worst = heap.pop().expect("heap cannot be empty while err > 0");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval is at float resolution; nothing more to gain from it.
            // Put it back at its floor so the loop can settle the rest.
            total_err -= worst.err - worst.floor;
            heap.push(Cell {
                err: worst.floor,
                ..worst
            });
            splits += 1;
            continue;
        }
        let (v1, e1, f1) = gk15(f, worst.a, mid);
        let (v2, e2, f2) = gk15(f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        total_floor += f1 + f2 - worst.floor;
        heap.push(Cell {
            a: worst.a,
            b: mid,
            value: v1,
            err: e1,
            floor: f1,
        });
        heap.push(Cell {
            a: mid,
            b: worst.b,
            value: v2,
            err: e2,
            floor: f2,
        });
        splits += 1;
    }

    if total_err > abs_tol + total_floor {
        return Err(Error::Quadrature(format!(
            "error estimate {total_err:e} above tolerance {abs_tol:e} after {splits} bisections"
        )));
    }
    Ok((total, total_err))
}
