//! Coefficients of the large-order expansions and of the zero expansion.
//!
//! The pipeline runs `chi = x^2/4 -> C_k(chi) -> a_k -> A_k -> (b_k, B_k)`:
//!
//! * `C_k` are the coefficients of the Bessel power series rewritten in
//!   inverse powers of `i nu`;
//! * `a_k` fold in the reciprocal-gamma Stirling series;
//! * `A_k` come from inverting `tan(eps) = (a_1/nu - a_3/nu^3 + ...)/(1 - a_2/nu^2 + ...)`,
//!   giving `eps = A_0/nu + A_1/nu^3 + A_2/nu^5`;
//! * `b_k`, `B_k` are the corrections in `nu = xi + b_0/xi + b_1/xi^3 + b_2/xi^5`
//!   solving `nu log(lambda nu) = m - eps(nu)`, with `B_k/m^{2k+1} = b_k/xi^{2k+1}`.
//!
//! For the ordinary family (`J`) every `C_k` is evaluated at `-chi`.

use crate::besseval::Family;
use crate::cgamma::StirlingCoefficients;
use crate::error::{Error, Result};
use serde::Serialize;

/// `C_0 .. C_5` evaluated at `chi`.
pub fn c_polynomials(chi: f64) -> [f64; 6] {
    let c = chi;
    [
        1.0,
        c,
        c / 2.0 * (-2.0 + c),
        c / 6.0 * (6.0 + c * (-9.0 + c)),
        c / 24.0 * (-24.0 + c * (84.0 + c * (-24.0 + c))),
        c / 120.0 * (120.0 + c * (-900.0 + c * (500.0 + c * (-50.0 + c)))),
    ]
}

/// `a_k = C_k + sum_{r=1}^k gamma_r C_{k-r}`, with `C` taken at `chi` for the
/// modified family and at `-chi` for the ordinary one.
pub fn a_coefficients(chi: f64, family: Family) -> [f64; 6] {
    let c = c_polynomials(family.sign() * chi);
    let gamma = StirlingCoefficients::values();
    let mut a = [0.0; 6];
    for k in 0..6 {
        a[k] = (0..=k).map(|r| gamma[r] * c[k - r]).sum();
    }
    a
}

/// `A_0, A_1, A_2` of `eps = A_0/nu + A_1/nu^3 + A_2/nu^5`.
pub fn phase_shift_coefficients(a: &[f64; 6]) -> [f64; 3] {
    let [_, a1, a2, a3, a4, a5] = *a;
    [
        a1,
        a1 * a2 - a3 - a1.powi(3) / 3.0,
        a1 * a2 * a2 + a1 * a1 * a3 - a1.powi(3) * a2 - a2 * a3 - a1 * a4 + a5 + a1.powi(5) / 5.0,
    ]
}

/// Everything that depends only on `(x, family)`; shared by all `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientSet {
    pub x: f64,
    /// `x^2 / 4`.
    pub chi: f64,
    pub family: Family,
    /// `C_k` at `chi` (modified) or `-chi` (ordinary).
    pub c: [f64; 6],
    /// `a_k` (modified) or `a-hat_k` (ordinary).
    pub a: [f64; 6],
    /// `A_0, A_1, A_2`.
    pub phase_shift: [f64; 3],
}

impl CoefficientSet {
    pub fn new(x: f64, family: Family) -> Result<Self> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::domain("CoefficientSet", format!("x must be positive, got {x}")));
        }
        let chi = 0.25 * x * x;
        let a = a_coefficients(chi, family);
        Ok(CoefficientSet {
            x,
            chi,
            family,
            c: c_polynomials(family.sign() * chi),
            a,
            phase_shift: phase_shift_coefficients(&a),
        })
    }

    /// `eps(nu) = A_0/nu + A_1/nu^3 + A_2/nu^5`.
    pub fn phase_shift_at(&self, nu: f64) -> f64 {
        let [a0, a1, a2] = self.phase_shift;
        let inv2 = 1.0 / (nu * nu);
        (a0 + inv2 * (a1 + inv2 * a2)) / nu
    }

    /// Even and odd truncated sums `(1 - a_2/nu^2 + a_4/nu^4, a_1/nu - a_3/nu^3 + a_5/nu^5)`.
    pub fn even_odd_sums(&self, nu: f64) -> (f64, f64) {
        let a = &self.a;
        let inv2 = 1.0 / (nu * nu);
        let even = 1.0 - a[2] * inv2 + a[4] * inv2 * inv2;
        let odd = (a[1] - a[3] * inv2 + a[5] * inv2 * inv2) / nu;
        (even, odd)
    }
}

/// How the correction coefficients `B_k` are formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrectionScheme {
    /// Coefficients from balancing powers of `xi` in the zero equation, with
    /// the ratio `xi/m` taken from the exact leading term.
    #[default]
    Balanced,
    /// The variant behind the commonly tabulated three-term values: the ratio
    /// is the leading-order estimate `1/log(lambda m)` and the `b_0`, `b_1`
    /// entering the `B_1`, `B_2` numerators are frozen at `C_0 = 1` and `C_1`.
    /// Less accurate than [`CorrectionScheme::Balanced`]; kept so those tables
    /// can be regenerated digit for digit.
    Tabulated,
}

impl std::str::FromStr for CorrectionScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "balanced" => Ok(CorrectionScheme::Balanced),
            "tabulated" => Ok(CorrectionScheme::Tabulated),
            other => Err(format!("unknown correction scheme `{other}`")),
        }
    }
}

/// Corrections to the leading zero approximation `xi`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrectionCoefficients {
    pub scheme: CorrectionScheme,
    pub xi: f64,
    pub m: f64,
    /// `xi / m` for the balanced scheme, `1 / log(lambda m)` for the tabulated one.
    pub chi_ratio: f64,
    /// `b_0, b_1, b_2` in `nu = xi + b_0/xi + b_1/xi^3 + b_2/xi^5` (balanced),
    /// or the frozen values fed to the `B` numerators (tabulated).
    pub b: [f64; 3],
    /// `B_0, B_1, B_2` in `nu = xi + B_0/m + B_1/m^3 + B_2/m^5`.
    pub b_scaled: [f64; 3],
}

impl CorrectionCoefficients {
    /// `B_k / m^{2k+1}` for `k = 0, 1, 2`.
    pub fn terms(&self) -> [f64; 3] {
        let m = self.m;
        [
            self.b_scaled[0] / m,
            self.b_scaled[1] / m.powi(3),
            self.b_scaled[2] / m.powi(5),
        ]
    }
}

fn numerators(phase_shift: &[f64; 3], b0: f64, b1: f64) -> (f64, f64) {
    let [a0, a1, a2] = *phase_shift;
    let n1 = a0 * b0 - a1 - 0.5 * b0 * b0;
    let n2 = 3.0 * a1 * b0 - a0 * (b0 * b0 - b1) - a2 - b0 * b1 + b0.powi(3) / 6.0;
    (n1, n2)
}

/// Balanced correction coefficients for a leading term `xi` with
/// `xi log(lambda xi) = m`.
///
/// Uses `1 + log(lambda xi) = (1 + xi/m) / (xi/m)`, so `lambda` is not needed.
pub fn correction_coefficients(
    phase_shift: &[f64; 3],
    xi: f64,
    m: f64,
) -> Result<CorrectionCoefficients> {
    if !(xi > 0.0) || !(m > 0.0) {
        return Err(Error::domain(
            "correction_coefficients",
            format!("xi and m must be positive, got xi = {xi}, m = {m}"),
        ));
    }
    let ratio = xi / m;
    // 1 + log(lambda xi)
    let denom = (1.0 + ratio) / ratio;
    let a0 = phase_shift[0];
    let b0 = -a0 / denom;
    let (n1, _) = numerators(phase_shift, b0, 0.0);
    let b1 = n1 / denom;
    let (_, n2) = numerators(phase_shift, b0, b1);
    let b2 = n2 / denom;
    let tail = 1.0 + ratio;
    Ok(CorrectionCoefficients {
        scheme: CorrectionScheme::Balanced,
        xi,
        m,
        chi_ratio: ratio,
        b: [b0, b1, b2],
        b_scaled: [
            -a0 / tail,
            n1 / (ratio.powi(2) * tail),
            n2 / (ratio.powi(4) * tail),
        ],
    })
}

/// Correction coefficients under the [`CorrectionScheme::Tabulated`] variant.
pub fn tabulated_correction_coefficients(
    set: &CoefficientSet,
    xi: f64,
    m: f64,
    lambda: f64,
) -> Result<CorrectionCoefficients> {
    let log_lm = (lambda * m).ln();
    if !(log_lm > 0.0) {
        return Err(Error::Degenerate { denominator: log_lm });
    }
    let ratio = 1.0 / log_lm;
    let tail = 1.0 + ratio;
    let (b0, b1) = (set.c[0], set.c[1]);
    let (n1, n2) = numerators(&set.phase_shift, b0, b1);
    Ok(CorrectionCoefficients {
        scheme: CorrectionScheme::Tabulated,
        xi,
        m,
        chi_ratio: ratio,
        b: [b0, b1, n2 * ratio / tail],
        b_scaled: [
            -set.phase_shift[0] / tail,
            n1 / (ratio.powi(2) * tail),
            n2 / (ratio.powi(4) * tail),
        ],
    })
}

/// Dispatches on `scheme`.
pub fn corrections_for(
    scheme: CorrectionScheme,
    set: &CoefficientSet,
    xi: f64,
    m: f64,
    lambda: f64,
) -> Result<CorrectionCoefficients> {
    match scheme {
        CorrectionScheme::Balanced => correction_coefficients(&set.phase_shift, xi, m),
        CorrectionScheme::Tabulated => tabulated_correction_coefficients(set, xi, m, lambda),
    }
}
