//! Asymptotic zero estimates order by order, against the crude leading
//! behaviour m / log(lambda m).
//!
//! ```text
//! cargo run --example asymptotic_zeros
//! ```

use imbessel::{asymptotic_zero, leading_zero, FunctionKind};

fn main() -> imbessel::Result<()> {
    let x = 1.0;
    for kind in FunctionKind::ALL {
        println!("{kind}:");
        println!("  {:>3} {:>10} {:>10} {:>10} {:>10} {:>10}", "n", "crude", "xi", "+B0", "+B1", "+B2");
        for n in [1, 2, 5, 10, 20] {
            let e = asymptotic_zero(kind, n, x, 3)?;
            let crude = leading_zero(kind, n, x).map_or(f64::NAN, |v| v);
            let p = e.partial;
            println!(
                "  {n:>3} {crude:>10.5} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
                p[0], p[1], p[2], p[3]
            );
        }
    }
    Ok(())
}
