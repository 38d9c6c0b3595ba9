//! Power-series evaluation of `I_{i nu}(x)`, `J_{i nu}(x)` and the real
//! combinations `L`, `K`, `F`, `G`.

use crate::cgamma::recip_gamma_prefactor;
use crate::error::{Error, Result};
use crate::scaled::{ScaledComplex, ScaledReal};
use crate::FunctionKind;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::{LN_2, PI};

/// Smallest order accepted by [`eval_function`].
pub const NU_MIN: f64 = 1e-3;

/// Default relative truncation tolerance of [`series_sum`].
pub const SERIES_TOL: f64 = 1e-18;

const MAX_TERMS: usize = 500;

/// Modified (`I`) or ordinary (`J`) Bessel series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Modified,
    Ordinary,
}

impl Family {
    /// `+1` for the modified series, `-1` for the alternating ordinary one.
    pub fn sign(self) -> f64 {
        match self {
            Family::Modified => 1.0,
            Family::Ordinary => -1.0,
        }
    }
}

/// `sum_k (+-1)^k (x/2)^{2k} / (k! (1 + i nu)_k)`.
///
/// Stops once a term is below `tol` times the running sum.
pub fn series_sum(nu: f64, x: f64, family: Family, tol: f64) -> Result<Complex64> {
    if !(x > 0.0) {
        return Err(Error::domain("series_sum", format!("x must be positive, got {x}")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("series_sum", format!("tol must be positive, got {tol}")));
    }
    let q = family.sign() * 0.25 * x * x;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..MAX_TERMS {
        let kp1 = (k + 1) as f64;
        term *= q / (kp1 * Complex64::new(kp1, nu));
        sum += term;
        if !sum.is_finite() {
            break;
        }
        if term.norm() <= tol * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        routine: "series_sum",
        iterations: MAX_TERMS,
    })
}

fn eval_scaled(nu: f64, x: f64, family: Family) -> Result<ScaledComplex> {
    let (unit_phase, log_scale) = recip_gamma_prefactor(nu, x)?;
    let series_sum = series_sum(nu, x, family, SERIES_TOL)?;
    Ok(ScaledComplex {
        unit_phase,
        series_sum,
        log_scale,
    })
}

/// `I_{i nu}(x)` in scaled form. `I_{-i nu}(x)` is its conjugate.
pub fn eval_i_scaled(nu: f64, x: f64) -> Result<ScaledComplex> {
    eval_scaled(nu, x, Family::Modified)
}

/// `J_{i nu}(x)` in scaled form. `J_{-i nu}(x)` is its conjugate.
pub fn eval_j_scaled(nu: f64, x: f64) -> Result<ScaledComplex> {
    eval_scaled(nu, x, Family::Ordinary)
}

// log sinh(t) for t > 0
fn ln_sinh(t: f64) -> f64 {
    if t >= 10.0 {
        t + (-(-2.0 * t).exp()).ln_1p() - LN_2
    } else {
        t.sinh().ln()
    }
}

fn ln_cosh(t: f64) -> f64 {
    if t >= 10.0 {
        t + (-2.0 * t).exp().ln_1p() - LN_2
    } else {
        t.cosh().ln()
    }
}

/// Real part (`L`, `F`) or signed imaginary part (`K`, `G`) of the
/// unit-normalized `I` or `J`; its sign agrees with the function's.
pub(crate) fn detector_component(kind: FunctionKind, value: Complex64) -> f64 {
    match kind {
        FunctionKind::L | FunctionKind::F => value.re,
        FunctionKind::K => -value.im,
        FunctionKind::G => value.im,
    }
}

/// The sign-carrying part of `kind` at `(nu, x)` with all positive factors stripped.
///
/// Zeros in `nu` coincide with those of the function itself.
pub fn zero_detector(kind: FunctionKind, nu: f64, x: f64) -> Result<f64> {
    let s = eval_scaled(nu, x, kind.family())?;
    Ok(detector_component(kind, s.unit_normalized()))
}

/// `L`, `K`, `F` or `G` of order `i nu` at `x`, as a [`ScaledReal`].
///
/// ```text
/// L =  pi/sinh(pi nu)   Re I_{i nu}(x)      F = Re J_{i nu}(x) / cosh(pi nu/2)
/// K = -pi/sinh(pi nu)   Im I_{i nu}(x)      G = Im J_{i nu}(x) / sinh(pi nu/2)
/// ```
pub fn eval_function(kind: FunctionKind, nu: f64, x: f64) -> Result<ScaledReal> {
    if !(nu >= NU_MIN) {
        return Err(Error::domain(
            "eval_function",
            format!("nu must be at least {NU_MIN}, got {nu}"),
        ));
    }
    if !(x > 0.0) {
        return Err(Error::domain("eval_function", format!("x must be positive, got {x}")));
    }
    let s = eval_scaled(nu, x, kind.family())?;
    Ok(ScaledReal::new(
        detector_component(kind, s.unit_normalized()),
        s.log_scale + ln_positive_factor(kind, nu),
    ))
}

fn ln_positive_factor(kind: FunctionKind, nu: f64) -> f64 {
    match kind {
        FunctionKind::L | FunctionKind::K => PI.ln() - ln_sinh(PI * nu),
        FunctionKind::F => -ln_cosh(0.5 * PI * nu),
        FunctionKind::G => -ln_sinh(0.5 * PI * nu),
    }
}

/// `ln` of the modulus of the complex combination behind `kind`, i.e. the
/// local envelope of the oscillating function.
pub fn ln_envelope(kind: FunctionKind, nu: f64, x: f64) -> Result<f64> {
    if !(nu >= NU_MIN) {
        return Err(Error::domain("ln_envelope", format!("nu must be at least {NU_MIN}, got {nu}")));
    }
    let s = eval_scaled(nu, x, kind.family())?;
    Ok(s.ln_abs() + ln_positive_factor(kind, nu))
}
