use clap::{Parser, Subcommand};
use imbessel::cli::{run, Command, Format, RunConfig};
use imbessel::{CorrectionScheme, FunctionKind};
use std::io::Write;
use std::process::ExitCode;

/// Bessel functions of imaginary order: values, zeros in the order, reference tables.
#[derive(Parser)]
#[command(name = "imbessel", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,

    /// Argument x > 0.
    #[arg(long, global = true, default_value_t = 1.0)]
    x: f64,

    /// Number of correction terms in the asymptotic estimate (0..=3).
    #[arg(long, global = true, default_value_t = 3)]
    order: usize,

    /// Output format: text, csv or json.
    #[arg(long, global = true, default_value = "text")]
    format: Format,

    /// Final bracket width of the zero refinement.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,

    /// Correction scheme: balanced or tabulated.
    #[arg(long, global = true)]
    scheme: Option<CorrectionScheme>,
}

#[derive(Subcommand)]
enum Sub {
    /// Evaluate L, K, F or G at (nu, x).
    Eval {
        #[arg(long)]
        kind: FunctionKind,
        #[arg(long)]
        nu: f64,
    },
    /// Estimate and refine zeros n = 1..=n_max.
    Zeros {
        #[arg(long)]
        kind: FunctionKind,
        #[arg(long = "n-max", alias = "n")]
        n_max: u32,
    },
    /// Regenerate table 1 (L, K) or table 2 (F, G).
    Table {
        #[arg(long, default_value_t = 1)]
        table: u8,
    },
    /// Dump expansion coefficients as JSON.
    Coeffs {
        #[arg(long)]
        kind: FunctionKind,
        #[arg(long = "n-max", alias = "n", default_value_t = 5)]
        n_max: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Sub::Eval { kind, nu } => Command::Eval { kind, nu },
        Sub::Zeros { kind, n_max } => Command::Zeros { kind, n_max },
        Sub::Table { table } => Command::Table { which: table },
        Sub::Coeffs { kind, n_max } => Command::Coeffs { kind, n_max },
    };
    let config = RunConfig {
        command,
        x: cli.x,
        order: cli.order,
        tol: cli.tol,
        format: cli.format,
        scheme: cli.scheme,
    };
    let report = run(&config);
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(report.stdout.as_bytes());
    let _ = out.flush();
    if let Some(e) = &report.error {
        eprintln!("imbessel: {e}");
    }
    ExitCode::from(report.exit_code() as u8)
}
