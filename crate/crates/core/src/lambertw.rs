//! Principal branch of the Lambert W function on `z >= 0`.

use crate::error::{Error, Result};
use std::f64::consts::E;

const MAX_ITER: usize = 50;

/// `w` with `w e^w = z`, plus the relative residual `|w e^w - z| / max(1, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WResult {
    pub w: f64,
    pub residual: f64,
}

fn initial_guess(z: f64) -> f64 {
    if z < 0.3 {
        z * (1.0 - z * (1.0 - 1.5 * z))
    } else if z >= E {
        let l = z.ln();
        l - l.ln()
    } else {
        // between the series and the logarithmic regime
        let l = z.ln_1p();
        l * (1.0 - l.ln_1p() / (2.0 + l))
    }
}

/// Principal-branch Lambert W for `z >= 0` by Halley iteration.
pub fn lambert_w0(z: f64) -> Result<WResult> {
    if !(z >= 0.0) || z.is_infinite() {
        return Err(Error::domain("lambert_w0", format!("z must be finite and >= 0, got {z}")));
    }
    if z == 0.0 {
        return Ok(WResult { w: 0.0, residual: 0.0 });
    }
    let mut w = initial_guess(z);
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - z;
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            let residual = (w * w.exp() - z).abs() / z.max(1.0);
            return Ok(WResult { w, residual });
        }
    }
    Err(Error::NonConvergence {
        routine: "lambert_w0",
        iterations: MAX_ITER,
    })
}

/// Two- or three-term large-`z` expansion
/// `W(z) ~ log z - log log z + log log z / log z`.
pub fn w_asymptotic(z: f64, terms: usize) -> Result<f64> {
    if !(z > E) {
        return Err(Error::domain("w_asymptotic", format!("z must exceed e, got {z}")));
    }
    let l1 = z.ln();
    let l2 = l1.ln();
    match terms {
        2 => Ok(l1 - l2),
        3 => Ok(l1 - l2 + l2 / l1),
        _ => Err(Error::domain("w_asymptotic", format!("terms must be 2 or 3, got {terms}"))),
    }
}
