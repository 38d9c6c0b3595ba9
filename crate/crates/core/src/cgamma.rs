//! Complex log-gamma on the right half-plane and the reciprocal-gamma
//! Stirling coefficients.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// An exact rational `num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    pub const fn new(num: i64, den: i64) -> Self {
        Rational { num, den }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Coefficients `gamma_k` of `1/Gamma(1+z) ~ e^z z^-z (2 pi z)^-1/2 sum gamma_k / z^k`.
#[derive(Debug, Clone, Copy)]
pub struct StirlingCoefficients;

impl StirlingCoefficients {
    pub const EXACT: [Rational; 6] = [
        Rational::new(1, 1),
        Rational::new(-1, 12),
        Rational::new(1, 288),
        Rational::new(139, 51840),
        Rational::new(-571, 2488320),
        Rational::new(-163879, 209018880),
    ];

    pub fn values() -> [f64; 6] {
        Self::EXACT.map(Rational::to_f64)
    }
}

// B_{2k} / (2k (2k-1)), k = 1..10
const STIRLING_TAIL: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

// |z| below which the argument is shifted up before applying Stirling's series.
const SHIFT_RADIUS: f64 = 16.0;

/// Principal branch of `log Gamma(z)` for `Re z > 0`.
///
/// Shifts `z` upward by an integer until `|z| >= 16`, applies Stirling's series
/// there and subtracts the log of the skipped factors. Their arguments are
/// summed one by one, which keeps the result on the principal branch without
/// any phase unwrapping.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.im.is_finite() {
        return Err(Error::domain("log_gamma", format!("Re z must be positive, got {z}")));
    }
    let mut w = z;
    let mut product = Complex64::new(1.0, 0.0);
    let mut arg_sum = 0.0;
    while w.norm() < SHIFT_RADIUS {
        product *= w;
        arg_sum += w.arg();
        w += 1.0;
    }
    Ok(stirling(w) - Complex64::new(product.norm().ln(), arg_sum))
}

fn stirling(w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut tail = Complex64::new(0.0, 0.0);
    for c in STIRLING_TAIL.iter().rev() {
        tail = tail * inv2 + c;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + tail * inv
}

/// `(x/2)^{i nu} / Gamma(1 + i nu)` split into a unit phase and a log-magnitude.
///
/// With `w = i nu log(x/2) - log Gamma(1 + i nu)` this returns
/// `(exp(i Im w), Re w)`.
pub fn recip_gamma_prefactor(nu: f64, x: f64) -> Result<(Complex64, f64)> {
    if !(x > 0.0) {
        return Err(Error::domain("recip_gamma_prefactor", format!("x must be positive, got {x}")));
    }
    let lg = log_gamma(Complex64::new(1.0, nu))?;
    let phase = nu * (0.5 * x).ln() - lg.im;
    Ok((Complex64::from_polar(1.0, phase), -lg.re))
}
