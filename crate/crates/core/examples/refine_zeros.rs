//! Refines the first zeros of one function and shows bracket, discrepancy
//! and residual for each.
//!
//! ```text
//! cargo run --example refine_zeros -- K 0.5 12
//! ```

use imbessel::{enumerate_zeros, CorrectionScheme, FunctionKind};

fn main() {
    let mut args = std::env::args().skip(1);
    let kind: FunctionKind = args.next().and_then(|s| s.parse().ok()).unwrap_or(FunctionKind::K);
    let x: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1.0);
    let n_max: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);

    let records = match enumerate_zeros(kind, x, n_max, 3, CorrectionScheme::Balanced) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("stopped at n = {}: {}", e.n, e.source);
            e.partial
        }
    };
    for r in &records {
        println!(
            "{kind} n = {:>3}: zero {:.12}  estimate {:.12}  discrepancy {:.2e}  bracket [{:.4}, {:.4}]  value {}",
            r.n, r.nu_refined, r.nu_asymptotic, r.discrepancy, r.bracket.0, r.bracket.1, r.residual
        );
    }
}
