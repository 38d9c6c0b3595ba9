//! The coefficient pipeline for one argument: C_k, a_k, A_k, then b_k and B_k
//! for the first few zeros under both correction schemes.
//!
//! ```text
//! cargo run --example coefficients -- 2.0
//! ```

use imbessel::asymcoeff::CoefficientSet;
use imbessel::{asymptotic_zero_with, CorrectionScheme, FunctionKind};

fn main() -> imbessel::Result<()> {
    let x: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1.0);
    for kind in [FunctionKind::K, FunctionKind::G] {
        let set = CoefficientSet::new(x, kind.family())?;
        println!("{kind} ({:?} family), x = {x}", set.family);
        println!("  C = {:?}", set.c);
        println!("  a = {:?}", set.a);
        println!("  A = {:?}", set.phase_shift);
        for scheme in [CorrectionScheme::Balanced, CorrectionScheme::Tabulated] {
            for n in 1..=3 {
                let e = asymptotic_zero_with(kind, n, x, 3, scheme)?;
                let c = &e.corrections;
                println!(
                    "  {scheme:?} n = {n}: xi = {:.6}, b = {:.5?}, B = {:.5?}",
                    e.xi, c.b, c.b_scaled
                );
            }
        }
    }
    Ok(())
}
