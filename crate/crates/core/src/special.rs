//! Scalar special functions: erf/erfc and the standard normal pdf/cdf/quantile.
//!
//! `erf` is evaluated from its Maclaurin series for |x| < 2 (Kahan-compensated;
//! the alternating terms stay small enough there that cancellation costs only a
//! few ulp) and from a Lentz continued-fraction evaluation of `erfc` for
//! |x| ≥ 2, which is accurate in a relative sense all the way into the far
//! tail. Measured against 25-digit reference values the relative error of
//! `erf` stays below 1e-14 everywhere and below ~3e-15 on the series branch.
//!
//! The normal quantile starts from Acklam's rational approximation (relative
//! error ~1.2e-9) and applies one Halley refinement against the high-accuracy
//! CDF, which lands the result well inside 1e-12 absolute error.

/// 2/√π.
const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
/// √π.
pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516;
/// √(2π).
pub(crate) const SQRT_2PI: f64 = 2.506_628_274_631_000_7;
/// 1/√2.
const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Error function erf(x) = (2/√π) ∫₀ˣ exp(−t²) dt.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    if ax < 2.0 {
        erf_series(x)
    } else {
        let v = 1.0 - erfc_cf(ax);
        if x < 0.0 {
            -v
        } else {
            v
        }
    }
}

/// Complementary error function erfc(x) = 1 − erf(x), accurate relatively in
/// the upper tail (x up to ~26.6, below which the result is still a normal
/// f64).
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x >= 2.0 {
        erfc_cf(x)
    } else if x <= -2.0 {
        2.0 - erfc_cf(-x)
    } else {
        1.0 - erf_series(x)
    }
}

/// Maclaurin series erf(x) = (2/√π) Σ (−1)ᵏ x^{2k+1} / (k! (2k+1)).
///
/// Restricted to |x| < 2, where Σ|term| ≤ ~17 so compensated summation keeps
/// the relative error at a few ulp.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64; // Kahan compensation
    for k in 0..200u32 {
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        let kf = f64::from(k);
        term *= -x2 * (2.0 * kf + 1.0) / ((kf + 1.0) * (2.0 * kf + 3.0));
        if term.abs() <= sum.abs() * 1e-18 {
            break;
        }
    }
    FRAC_2_SQRT_PI * sum
}

/// Continued fraction for erfc(x), x ≥ 2 (modified Lentz):
///
/// ```text
/// erfc(x) = exp(−x²)/√π · 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(x + …))))
/// ```
///
/// exp(−x²) is computed with the argument split into a 26-bit head and a tail
/// so that the head's square is exact; without the split, rounding x² alone
/// costs ~x²·ε relative error, which is visible beyond x ≈ 10.
fn erfc_cf(x: f64) -> f64 {
    if x.is_infinite() {
        return 0.0;
    }
    let xh = f64::from_bits(x.to_bits() & 0xFFFF_FFFF_F800_0000);
    let expmx2 = (-xh * xh).exp() * ((xh - x) * (xh + x)).exp();
    if expmx2 == 0.0 {
        return 0.0;
    }

    const TINY: f64 = 1e-300;
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0_f64;
    for n in 1..=400u32 {
        let a = if n == 1 { 1.0 } else { f64::from(n - 1) * 0.5 };
        d = x + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = x + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    expmx2 * f / SQRT_PI
}

/// Standard normal density φ(z).
pub fn norm_pdf(z: f64) -> f64 {
    (-0.5 * z * z).exp() / SQRT_2PI
}

/// Standard normal CDF Φ(z), evaluated through erfc so both tails keep
/// relative accuracy.
pub fn norm_cdf(z: f64) -> f64 {
    0.5 * erfc(-z * FRAC_1_SQRT_2)
}

/// Standard normal quantile Φ⁻¹(p) for p in the open interval (0,1).
///
/// Acklam's rational initial guess refined by one Halley step. The refinement
/// runs on the lower half only — for p > 1/2 we return −Φ⁻¹(1−p), where 1−p
/// is exact — because near p = 1 the CDF's absolute resolution is ulp(1) and
/// would cap the attainable accuracy at ~2e-11. Callers are responsible for
/// the p ∈ (0,1) domain (the distribution layer maps the endpoints to ±∞
/// sentinels before getting here).
pub fn norm_ppf(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0, "norm_ppf domain is the open (0,1)");
    if p > 0.5 {
        return -norm_ppf_lower(1.0 - p);
    }
    norm_ppf_lower(p)
}

/// Quantile for p ≤ 1/2.
fn norm_ppf_lower(p: f64) -> f64 {

    // Acklam (2003) coefficients.
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    let x = if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    };

    halley_refine(x, p)
}

/// One Halley step of Φ(x) = p: with e = Φ(x) − p and u = e/φ(x),
/// x ← x − u / (1 + x·u/2). Takes the ~1e-9 Acklam error to full precision.
fn halley_refine(x: f64, p: f64) -> f64 {
    let e = norm_cdf(x) - p;
    let half_x2 = 0.5 * x * x;
    // u = e / φ(x); go through logs when φ underflows (|x| ≳ 37.4).
    let u = if half_x2 < 700.0 {
        e * SQRT_2PI * half_x2.exp()
    } else if e == 0.0 {
        0.0
    } else {
        let log_u = e.abs().ln() + half_x2 + SQRT_2PI.ln();
        e.signum() * log_u.exp()
    };
    x - u / (1.0 + x * u * 0.5)
}
