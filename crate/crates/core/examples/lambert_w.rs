//! Principal-branch Lambert W and its large-argument forms.
//!
//! ```text
//! cargo run --example lambert_w
//! ```

use imbessel::{lambert_w0, w_asymptotic};

fn main() -> imbessel::Result<()> {
    println!("{:>10} {:>20} {:>10} {:>12} {:>12}", "z", "W(z)", "residual", "2-term", "3-term");
    for z in [1e-3, 0.5, 2.0, std::f64::consts::E, 1e2, 1e6, 1e12] {
        let r = lambert_w0(z)?;
        let two = w_asymptotic(z, 2).map_or("-".into(), |v| format!("{v:.6}"));
        let three = w_asymptotic(z, 3).map_or("-".into(), |v| format!("{v:.6}"));
        println!("{z:>10.3e} {:>20.16} {:>10.1e} {two:>12} {three:>12}", r.w, r.residual);
    }
    Ok(())
}
