//! Values carried as `mantissa * exp(log_scale)`.
//!
//! The functions of imaginary order pick up factors like `exp(pi*nu/2)` and
//! `1/sinh(pi*nu)` that overflow or underflow long before the quantities of
//! interest do. After normalization the log-scale is always an integer, so
//! repeated renormalization only moves integers between the two fields.

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::E;
use std::fmt;
use std::ops::{Mul, Neg};

/// A real number stored as `mantissa * exp(log_scale)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaledReal {
    mantissa: f64,
    log_scale: f64,
}

impl ScaledReal {
    pub const ZERO: ScaledReal = ScaledReal {
        mantissa: 0.0,
        log_scale: 0.0,
    };

    /// Builds `mantissa * exp(log_scale)` and normalizes it.
    pub fn new(mantissa: f64, log_scale: f64) -> Self {
        ScaledReal {
            mantissa,
            log_scale,
        }
        .normalized()
    }

    pub fn from_f64(value: f64) -> Self {
        Self::new(value, 0.0)
    }

    /// Rebalances so that `|mantissa|` lies in `[e^-1/2, e^1/2]` and `log_scale` is integral.
    pub fn normalized(self) -> Self {
        if self.mantissa == 0.0 || !self.mantissa.is_finite() || !self.log_scale.is_finite() {
            return ScaledReal {
                mantissa: self.mantissa,
                log_scale: if self.mantissa == 0.0 { 0.0 } else { self.log_scale },
            };
        }
        let whole = self.log_scale.round();
        let mut mantissa = self.mantissa * (self.log_scale - whole).exp();
        let shift = mantissa.abs().ln().round();
        if shift != 0.0 {
            mantissa *= (-shift).exp();
        }
        ScaledReal {
            mantissa,
            log_scale: whole + shift + 0.0,
        }
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn log_scale(&self) -> f64 {
        self.log_scale
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> f64 {
        if self.mantissa == 0.0 {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    /// Natural log of the absolute value (`-inf` for zero).
    pub fn ln_abs(&self) -> f64 {
        self.mantissa.abs().ln() + self.log_scale
    }

    /// Plain value, or `None` when it would overflow or underflow to zero.
    pub fn to_f64(&self) -> Option<f64> {
        if self.mantissa == 0.0 {
            return Some(0.0);
        }
        let v = self.mantissa * self.log_scale.exp();
        (v.is_finite() && v != 0.0).then_some(v)
    }

    /// `|self| / |other|` evaluated without forming either magnitude.
    pub fn abs_ratio(&self, other: &ScaledReal) -> f64 {
        if self.mantissa == 0.0 {
            return 0.0;
        }
        (self.mantissa / other.mantissa).abs() * (self.log_scale - other.log_scale).exp()
    }

    pub fn abs(&self) -> Self {
        ScaledReal {
            mantissa: self.mantissa.abs(),
            log_scale: self.log_scale,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.mantissa == 0.0
            || ((1.0 / E..=E).contains(&self.mantissa.abs()) && self.log_scale.fract() == 0.0)
    }
}

impl Mul for ScaledReal {
    type Output = ScaledReal;

    fn mul(self, rhs: ScaledReal) -> ScaledReal {
        ScaledReal::new(self.mantissa * rhs.mantissa, self.log_scale + rhs.log_scale)
    }
}

impl Neg for ScaledReal {
    type Output = ScaledReal;

    fn neg(self) -> ScaledReal {
        ScaledReal {
            mantissa: -self.mantissa,
            log_scale: self.log_scale,
        }
    }
}

impl fmt::Display for ScaledReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} * exp({})", self.mantissa, self.log_scale)
    }
}

/// A complex number stored as `unit_phase * series_sum * exp(log_scale)`.
///
/// `unit_phase` has modulus one; it carries the rapidly rotating phase of the
/// prefactor while `series_sum` carries the slowly varying factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledComplex {
    pub unit_phase: Complex64,
    pub series_sum: Complex64,
    pub log_scale: f64,
}

impl ScaledComplex {
    /// `unit_phase * series_sum`, i.e. the value with the positive scale stripped.
    pub fn unit_normalized(&self) -> Complex64 {
        self.unit_phase * self.series_sum
    }

    /// Plain value, or `None` if `exp(log_scale)` is not representable.
    pub fn value(&self) -> Option<Complex64> {
        let scale = self.log_scale.exp();
        if !scale.is_finite() || scale == 0.0 {
            return None;
        }
        Some(self.unit_normalized() * scale)
    }

    /// `ln |value|`.
    pub fn ln_abs(&self) -> f64 {
        self.unit_normalized().norm().ln() + self.log_scale
    }

    /// Complex conjugate; for real order and argument this maps `nu` to `-nu`.
    pub fn conj(&self) -> Self {
        ScaledComplex {
            unit_phase: self.unit_phase.conj(),
            series_sum: self.series_sum.conj(),
            log_scale: self.log_scale,
        }
    }

    pub fn re(&self) -> ScaledReal {
        ScaledReal::new(self.unit_normalized().re, self.log_scale)
    }

    pub fn im(&self) -> ScaledReal {
        ScaledReal::new(self.unit_normalized().im, self.log_scale)
    }
}
