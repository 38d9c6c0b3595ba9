//! Asymptotic estimates of the `nu`-zeros and their refinement.
//!
//! For fixed `x` the zeros of `L`, `F` sit near phase `(n + 1/2) pi` and those
//! of `K`, `G` near `n pi`, where the phase is `nu log(lambda nu) + pi/4` with
//! `lambda = 2/(e x)`. The leading term solves `xi log(lambda xi) = m` with
//! `m = (n +- 1/4) pi`, i.e. `xi = m / W(lambda m)`.

use crate::asymcoeff::{corrections_for, CoefficientSet, CorrectionCoefficients, CorrectionScheme};
use crate::besseval::{eval_function, zero_detector, Family, NU_MIN};
use crate::error::{Error, Result};
use crate::lambertw::lambert_w0;
use crate::scaled::ScaledReal;
use serde::Serialize;
use std::f64::consts::{E, FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

/// One of the four real functions of imaginary order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FunctionKind {
    L,
    K,
    F,
    G,
}

impl FunctionKind {
    pub const ALL: [FunctionKind; 4] = [FunctionKind::L, FunctionKind::K, FunctionKind::F, FunctionKind::G];

    /// `L`, `K` are built from `I`; `F`, `G` from `J`.
    pub fn family(self) -> Family {
        match self {
            FunctionKind::L | FunctionKind::K => Family::Modified,
            FunctionKind::F | FunctionKind::G => Family::Ordinary,
        }
    }

    /// `+1/4` for `L`, `F` (phase target `(n+1/2) pi`), `-1/4` for `K`, `G` (`n pi`).
    pub fn quarter_offset(self) -> f64 {
        match self {
            FunctionKind::L | FunctionKind::F => 0.25,
            FunctionKind::K | FunctionKind::G => -0.25,
        }
    }

    /// `m = (n +- 1/4) pi`.
    pub fn m(self, n: u32) -> f64 {
        (n as f64 + self.quarter_offset()) * PI
    }

    /// Phase value at which the `n`th zero sits to leading order.
    pub fn target_phase(self, n: u32) -> f64 {
        self.m(n) + FRAC_PI_4
    }
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FunctionKind::L => "L",
            FunctionKind::K => "K",
            FunctionKind::F => "F",
            FunctionKind::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for FunctionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "L" | "l" => Ok(FunctionKind::L),
            "K" | "k" => Ok(FunctionKind::K),
            "F" | "f" => Ok(FunctionKind::F),
            "G" | "g" => Ok(FunctionKind::G),
            other => Err(format!("unknown function kind `{other}` (expected L, K, F or G)")),
        }
    }
}

/// `lambda = 2 / (e x)`.
pub fn lambda(x: f64) -> f64 {
    2.0 / (E * x)
}

/// `nu log(lambda nu) + pi/4`.
pub fn phase(nu: f64, x: f64) -> f64 {
    nu * (lambda(x) * nu).ln() + FRAC_PI_4
}

/// `xi = m / W(lambda m)`, the solution of `xi log(lambda xi) = m`.
pub fn leading_xi(m: f64, lambda: f64) -> Result<f64> {
    if !(m > 0.0) || !(lambda > 0.0) {
        return Err(Error::domain(
            "leading_xi",
            format!("m and lambda must be positive, got m = {m}, lambda = {lambda}"),
        ));
    }
    Ok(m / lambert_w0(lambda * m)?.w)
}

fn check_args(n: u32, x: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("zeros", "n must be at least 1"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("zeros", format!("x must be positive, got {x}")));
    }
    Ok(())
}

/// Crude leading behaviour `m / log(lambda m)`.
pub fn leading_zero(kind: FunctionKind, n: u32, x: f64) -> Result<f64> {
    check_args(n, x)?;
    let m = kind.m(n);
    let log_lm = (lambda(x) * m).ln();
    if !(log_lm > 0.0) {
        return Err(Error::domain(
            "leading_zero",
            format!("lambda m = {} must exceed 1", lambda(x) * m),
        ));
    }
    Ok(m / log_lm)
}

/// Asymptotic data for the `n`th zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroEstimate {
    pub kind: FunctionKind,
    pub n: u32,
    pub x: f64,
    /// `(n +- 1/4) pi`.
    pub m: f64,
    pub lambda: f64,
    pub xi: f64,
    /// Number of correction terms included in [`ZeroEstimate::nu`].
    pub order: usize,
    pub corrections: CorrectionCoefficients,
    /// `xi`, then adding `B_0/m`, `B_1/m^3`, `B_2/m^5` in turn.
    pub partial: [f64; 4],
}

impl ZeroEstimate {
    pub fn nu(&self) -> f64 {
        self.partial[self.order]
    }

    pub fn scheme(&self) -> CorrectionScheme {
        self.corrections.scheme
    }
}

/// Asymptotic estimate with the default (balanced) corrections.
pub fn asymptotic_zero(kind: FunctionKind, n: u32, x: f64, order: usize) -> Result<ZeroEstimate> {
    asymptotic_zero_with(kind, n, x, order, CorrectionScheme::Balanced)
}

/// Asymptotic estimate of the `n`th zero of `kind` at `x`, summing `order`
/// (0 to 3) correction terms built under `scheme`.
pub fn asymptotic_zero_with(
    kind: FunctionKind,
    n: u32,
    x: f64,
    order: usize,
    scheme: CorrectionScheme,
) -> Result<ZeroEstimate> {
    check_args(n, x)?;
    if order > 3 {
        return Err(Error::domain("asymptotic_zero", format!("order must be 0..=3, got {order}")));
    }
    let set = CoefficientSet::new(x, kind.family())?;
    estimate_from_set(&set, kind, n, order, scheme)
}

pub(crate) fn estimate_from_set(
    set: &CoefficientSet,
    kind: FunctionKind,
    n: u32,
    order: usize,
    scheme: CorrectionScheme,
) -> Result<ZeroEstimate> {
    let x = set.x;
    let m = kind.m(n);
    let lam = lambda(x);
    let xi = leading_xi(m, lam)?;
    let threshold = x.max(2.0);
    if !(xi > threshold) {
        return Err(Error::Unreliable { xi, threshold });
    }
    let corrections = corrections_for(scheme, set, xi, m, lam)?;
    let mut partial = [xi; 4];
    for (k, t) in corrections.terms().iter().enumerate() {
        partial[k + 1] = partial[k] + t;
    }
    Ok(ZeroEstimate {
        kind,
        n,
        x,
        m,
        lambda: lam,
        xi,
        order,
        corrections,
        partial,
    })
}

/// A located zero together with the estimate it started from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroRecord {
    pub kind: FunctionKind,
    pub n: u32,
    pub x: f64,
    pub nu_asymptotic: f64,
    pub nu_refined: f64,
    pub discrepancy: f64,
    /// Sign-change bracket the refinement started from.
    pub bracket: (f64, f64),
    /// Zero-detector values at the bracket ends.
    pub bracket_values: (f64, f64),
    /// Zero-detector value at `nu_refined`.
    pub detector_value: f64,
    /// The function itself at `nu_refined`.
    pub residual: ScaledReal,
    pub estimate: ZeroEstimate,
}

/// Controls for [`refine_zero_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefineOptions {
    /// Bisection stops once the bracket is narrower than this.
    pub width: f64,
    /// Number of times the initial half-width may be doubled.
    pub max_expansions: usize,
}

impl Default for RefineOptions {
    fn default() -> Self {
        RefineOptions {
            width: 1e-12,
            max_expansions: 6,
        }
    }
}

const MAX_BISECTIONS: usize = 200;

pub fn refine_zero(estimate: &ZeroEstimate) -> Result<ZeroRecord> {
    refine_zero_with(estimate, RefineOptions::default())
}

/// Locates the zero nearest the estimate: brackets a sign change of the zero
/// detector, bisects, and finishes with one secant step.
///
/// The bracket is widened geometrically from `max(0.05, 2 |B_2/m^5|)` but may
/// never leave the phase window `target +- pi/2`, which holds exactly one zero.
pub fn refine_zero_with(estimate: &ZeroEstimate, opts: RefineOptions) -> Result<ZeroRecord> {
    if !(opts.width > 0.0) {
        return Err(Error::domain("refine_zero", format!("width must be positive, got {}", opts.width)));
    }
    let ZeroEstimate { kind, n, x, .. } = *estimate;
    let g = |nu: f64| zero_detector(kind, nu, x);
    let center = estimate.nu();
    let target = kind.target_phase(n);
    let mut half = (2.0 * (estimate.partial[3] - estimate.partial[2]).abs()).max(0.05);

    let mut found = None;
    let (mut lo, mut hi) = (center - half, center + half);
    for _ in 0..=opts.max_expansions {
        lo = center - half;
        hi = center + half;
        if lo < NU_MIN.max(0.5 * x) || phase(lo, x) <= target - FRAC_PI_2 || phase(hi, x) >= target + FRAC_PI_2 {
            return Err(Error::Bracketing {
                lo,
                hi,
                reason: "bracket would leave the phase window of this zero".into(),
            });
        }
        let (glo, ghi) = (g(lo)?, g(hi)?);
        if glo == 0.0 || ghi == 0.0 || glo.signum() != ghi.signum() {
            found = Some((glo, ghi));
            break;
        }
        half *= 2.0;
    }
    let Some((glo0, ghi0)) = found else {
        return Err(Error::Bracketing {
            lo,
            hi,
            reason: "no sign change".into(),
        });
    };
    let bracket = (lo, hi);

    let (mut a, mut b, mut ga, mut gb) = (lo, hi, glo0, ghi0);
    let mut iterations = 0;
    while b - a > opts.width && ga != 0.0 && gb != 0.0 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let gm = g(mid)?;
        if gm == 0.0 {
            (a, b, ga, gb) = (mid, mid, 0.0, 0.0);
            break;
        }
        if gm.signum() == ga.signum() {
            (a, ga) = (mid, gm);
        } else {
            (b, gb) = (mid, gm);
        }
        iterations += 1;
        if iterations > MAX_BISECTIONS {
            return Err(Error::NonConvergence {
                routine: "refine_zero",
                iterations,
            });
        }
    }
    let root = if ga == 0.0 {
        a
    } else if gb == 0.0 {
        b
    } else {
        (a - ga * (b - a) / (gb - ga)).clamp(a, b)
    };

    let nu_asymptotic = estimate.nu();
    Ok(ZeroRecord {
        kind,
        n,
        x,
        nu_asymptotic,
        nu_refined: root,
        discrepancy: (nu_asymptotic - root).abs(),
        bracket,
        bracket_values: (glo0, ghi0),
        detector_value: g(root)?,
        residual: eval_function(kind, root, x)?,
        estimate: estimate.clone(),
    })
}

/// Failure partway through [`enumerate_zeros`].
#[derive(Debug, Clone, thiserror::Error)]
#[error("zero n = {n} failed: {source}")]
pub struct EnumerationError {
    pub n: u32,
    pub source: Error,
    /// Records for `1..n`.
    pub partial: Vec<ZeroRecord>,
}

/// Estimates and refines zeros `1..=n_max` of `kind` at `x`.
pub fn enumerate_zeros(
    kind: FunctionKind,
    x: f64,
    n_max: u32,
    order: usize,
    scheme: CorrectionScheme,
) -> std::result::Result<Vec<ZeroRecord>, EnumerationError> {
    enumerate_zeros_with(kind, x, n_max, order, scheme, RefineOptions::default())
}

/// [`enumerate_zeros`] with explicit refinement controls.
pub fn enumerate_zeros_with(
    kind: FunctionKind,
    x: f64,
    n_max: u32,
    order: usize,
    scheme: CorrectionScheme,
    opts: RefineOptions,
) -> std::result::Result<Vec<ZeroRecord>, EnumerationError> {
    let fail = |n, source, partial| EnumerationError { n, source, partial };
    if n_max == 0 {
        return Err(fail(0, Error::domain("enumerate_zeros", "n_max must be at least 1"), Vec::new()));
    }
    if order > 3 {
        let source = Error::domain("enumerate_zeros", format!("order must be 0..=3, got {order}"));
        return Err(fail(1, source, Vec::new()));
    }
    let set = CoefficientSet::new(x, kind.family()).map_err(|e| fail(1, e, Vec::new()))?;
    let mut out: Vec<ZeroRecord> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let record = estimate_from_set(&set, kind, n, order, scheme).and_then(|e| refine_zero_with(&e, opts));
        match record {
            Ok(r) => {
                if let Some(prev) = out.last() {
                    if !(r.nu_refined > prev.nu_refined) {
                        let source = Error::Bracketing {
                            lo: r.bracket.0,
                            hi: r.bracket.1,
                            reason: format!("zero {} not above zero {}", r.nu_refined, prev.nu_refined),
                        };
                        return Err(fail(n, source, out));
                    }
                }
                out.push(r);
            }
            Err(source) => return Err(fail(n, source, out)),
        }
    }
    Ok(out)
}
