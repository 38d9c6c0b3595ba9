//! Evaluates L, K, F and G over a range of orders at x = 1, including orders
//! where the plain values no longer fit in an `f64`.
//!
//! ```text
//! cargo run --example evaluate_functions
//! ```

use imbessel::{eval_function, ln_envelope, FunctionKind};

fn main() -> imbessel::Result<()> {
    let x = 1.0;
    println!("{:>6} {:>4} {:>24} {:>24} {:>12}", "nu", "kind", "scaled", "plain", "ln envelope");
    for nu in [0.5, 1.0, 2.962549, 5.0, 20.0, 300.0] {
        for kind in FunctionKind::ALL {
            let v = eval_function(kind, nu, x)?;
            let plain = v.to_f64().map_or("underflow".to_string(), |p| format!("{p:.6e}"));
            println!(
                "{nu:>6} {kind:>4} {:>24} {plain:>24} {:>12.4}",
                v.to_string(),
                ln_envelope(kind, nu, x)?
            );
        }
    }
    Ok(())
}
