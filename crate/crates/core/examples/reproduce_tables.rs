//! Regenerates both reference tables at x = 1 in text, then table 1 as CSV.
//!
//! ```text
//! cargo run --example reproduce_tables
//! ```

use imbessel::cli::{run, Command, Format, RunConfig};

fn main() {
    for which in [1, 2] {
        let report = run(&RunConfig::new(Command::Table { which }));
        print!("{}", report.stdout);
        println!();
    }
    let csv = run(&RunConfig {
        format: Format::Csv,
        ..RunConfig::new(Command::Table { which: 1 })
    });
    print!("{}", csv.stdout);
}
