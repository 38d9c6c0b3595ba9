//! Bessel functions of purely imaginary order and their zeros in the order.
//!
//! For fixed `x > 0` the real functions
//!
//! ```text
//! L_{i nu}(x) =  pi/sinh(pi nu) Re I_{i nu}(x)
//! K_{i nu}(x) = -pi/sinh(pi nu) Im I_{i nu}(x)
//! F_{i nu}(x) = Re J_{i nu}(x) / cosh(pi nu / 2)
//! G_{i nu}(x) = Im J_{i nu}(x) / sinh(pi nu / 2)
//! ```
//!
//! oscillate in `nu` with infinitely many zeros. This crate evaluates them
//! in scaled form, builds three-term Lambert-W asymptotic estimates of the
//! zeros, and refines those estimates to machine accuracy.
//!
//! ```
//! use imbessel::{asymptotic_zero, refine_zero, FunctionKind};
//!
//! let est = asymptotic_zero(FunctionKind::K, 1, 1.0, 3).unwrap();
//! let rec = refine_zero(&est).unwrap();
//! assert!((rec.nu_refined - 2.962549).abs() < 5e-7);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymcoeff;
pub mod besseval;
pub mod cgamma;
pub mod cli;
pub mod error;
pub mod lambertw;
pub mod scaled;
pub mod zerofinder;

pub use asymcoeff::{CoefficientSet, CorrectionCoefficients, CorrectionScheme};
pub use besseval::{eval_function, eval_i_scaled, eval_j_scaled, ln_envelope, zero_detector, Family};
pub use cgamma::{log_gamma, recip_gamma_prefactor};
pub use error::{Error, Result};
pub use lambertw::{lambert_w0, w_asymptotic, WResult};
pub use scaled::{ScaledComplex, ScaledReal};
pub use zerofinder::{
    asymptotic_zero, asymptotic_zero_with, enumerate_zeros, enumerate_zeros_with, leading_xi, leading_zero, refine_zero,
    refine_zero_with, EnumerationError, FunctionKind, RefineOptions, ZeroEstimate, ZeroRecord,
};
