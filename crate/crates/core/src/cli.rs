//! Command logic behind the `imbessel` binary: `eval`, `zeros`, `table`, `coeffs`.
//!
//! Every command renders into a [`Report`] so output can be tested without
//! spawning a process. Numbers in CSV and JSON use shortest round-trip
//! formatting; the text tables use 6 decimal places.

use crate::asymcoeff::{CoefficientSet, CorrectionScheme};
use crate::besseval::eval_function;
use crate::error::Error;
use crate::zerofinder::{
    asymptotic_zero_with, enumerate_zeros_with, refine_zero_with, FunctionKind, RefineOptions, ZeroRecord,
};
use serde::Serialize;
use std::fmt::Write as _;
use std::str::FromStr;

/// Orders shown in the reference tables.
pub const TABLE_ROWS: [u32; 8] = [1, 2, 3, 4, 5, 10, 20, 50];

/// Exact header of CSV zero reports.
pub const CSV_HEADER: &str = "kind,n,x,zero,asymptotic,discrepancy";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text, csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Eval { kind: FunctionKind, nu: f64 },
    Zeros { kind: FunctionKind, n_max: u32 },
    /// Table 1 holds `L` and `K`, table 2 holds `F` and `G`.
    Table { which: u8 },
    Coeffs { kind: FunctionKind, n_max: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub x: f64,
    pub order: usize,
    /// Final bracket width of the zero refinement.
    pub tol: f64,
    pub format: Format,
    /// `None` picks [`CorrectionScheme::Tabulated`] for `table` and
    /// [`CorrectionScheme::Balanced`] elsewhere.
    pub scheme: Option<CorrectionScheme>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            x: 1.0,
            order: 3,
            tol: 1e-12,
            format: Format::Text,
            scheme: None,
        }
    }

    fn scheme(&self) -> CorrectionScheme {
        match (self.scheme, &self.command) {
            (Some(s), _) => s,
            (None, Command::Table { .. }) => CorrectionScheme::Tabulated,
            (None, _) => CorrectionScheme::Balanced,
        }
    }

    fn refine_options(&self) -> RefineOptions {
        RefineOptions {
            width: self.tol,
            ..RefineOptions::default()
        }
    }
}

/// Rendered output plus the first error met, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub stdout: String,
    pub error: Option<Error>,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report { stdout, error: None }
    }

    fn failed(error: Error) -> Self {
        Report {
            stdout: String::new(),
            error: Some(error),
        }
    }

    /// 0 on success, otherwise [`Error::exit_code`].
    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, Error::exit_code)
    }
}

pub fn run(config: &RunConfig) -> Report {
    if !(config.x > 0.0) || !config.x.is_finite() {
        return Report::failed(Error::domain("cli", format!("x must be positive, got {}", config.x)));
    }
    if config.order > 3 {
        return Report::failed(Error::domain("cli", format!("order must be 0..=3, got {}", config.order)));
    }
    if !(config.tol > 0.0) {
        return Report::failed(Error::domain("cli", format!("tol must be positive, got {}", config.tol)));
    }
    match config.command {
        Command::Eval { kind, nu } => cmd_eval(kind, nu, config.x, config.format),
        Command::Zeros { kind, n_max } => cmd_zeros(config, kind, n_max),
        Command::Table { which } => cmd_table(config, which),
        Command::Coeffs { kind, n_max } => cmd_coeffs(kind, config.x, n_max, config.scheme()),
    }
}

fn num(v: f64) -> String {
    format!("{v:?}")
}

#[derive(Serialize)]
struct ZeroRow {
    kind: FunctionKind,
    n: u32,
    x: f64,
    nu_asymptotic: f64,
    nu_refined: f64,
    discrepancy: f64,
    residual_mantissa: f64,
    residual_log_scale: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    partial_sums: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bracket: Option<[f64; 2]>,
}

impl ZeroRow {
    fn from_record(r: &ZeroRecord, detailed: bool) -> Self {
        ZeroRow {
            kind: r.kind,
            n: r.n,
            x: r.x,
            nu_asymptotic: r.nu_asymptotic,
            nu_refined: r.nu_refined,
            discrepancy: r.discrepancy,
            residual_mantissa: r.residual.mantissa(),
            residual_log_scale: r.residual.log_scale(),
            partial_sums: detailed.then_some(r.estimate.partial),
            bracket: detailed.then_some([r.bracket.0, r.bracket.1]),
        }
    }
}

fn csv_line(r: &ZeroRecord) -> String {
    format!(
        "{},{},{},{},{},{}\n",
        r.kind,
        r.n,
        num(r.x),
        num(r.nu_refined),
        num(r.nu_asymptotic),
        num(r.discrepancy)
    )
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report values serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct EvalOutput {
    kind: FunctionKind,
    nu: f64,
    x: f64,
    mantissa: f64,
    log_scale: f64,
    value: Option<f64>,
    sign: i8,
}

/// Evaluates one function and prints its scaled form and, when it fits in an
/// `f64`, its plain value.
pub fn cmd_eval(kind: FunctionKind, nu: f64, x: f64, format: Format) -> Report {
    let v = match eval_function(kind, nu, x) {
        Ok(v) => v,
        Err(e) => return Report::failed(e),
    };
    let sign = v.signum() as i8;
    let out = EvalOutput {
        kind,
        nu,
        x,
        mantissa: v.mantissa(),
        log_scale: v.log_scale(),
        value: v.to_f64(),
        sign,
    };
    let text = match format {
        Format::Json => to_json(&out),
        Format::Csv => format!(
            "kind,nu,x,mantissa,log_scale,value\n{kind},{},{},{},{},{}\n",
            num(nu),
            num(x),
            num(out.mantissa),
            num(out.log_scale),
            out.value.map(num).unwrap_or_default()
        ),
        Format::Text => {
            let mut s = format!("{kind}_{{i{nu}}}({x}) = {v}\n");
            match out.value {
                Some(value) => writeln!(s, "value = {value:.15e}").unwrap(),
                None => s.push_str("value = (outside f64 range)\n"),
            }
            let sign_word = match sign {
                1 => "positive",
                -1 => "negative",
                _ => "zero",
            };
            writeln!(s, "sign = {sign_word}").unwrap();
            s
        }
    };
    Report::ok(text)
}

/// Zeros `1..=n_max` with all partial sums, the refined value and the residual.
pub fn cmd_zeros(config: &RunConfig, kind: FunctionKind, n_max: u32) -> Report {
    let result = enumerate_zeros_with(kind, config.x, n_max, config.order, config.scheme(), config.refine_options());
    let (records, error) = match result {
        Ok(r) => (r, None),
        Err(e) => (e.partial, Some(e.source)),
    };
    let stdout = match config.format {
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            records.iter().for_each(|r| s.push_str(&csv_line(r)));
            s
        }
        Format::Json => to_json(&records.iter().map(|r| ZeroRow::from_record(r, true)).collect::<Vec<_>>()),
        Format::Text => {
            let mut s = format!(
                "{kind} zeros at x = {}, order {}, {:?} corrections\n",
                config.x,
                config.order,
                config.scheme()
            );
            writeln!(
                s,
                "{:>3} {:>12} {:>12} {:>12} {:>12} {:>12} {:>10} {:>10} {:>22}",
                "n", "xi", "+B0", "+B1", "+B2", "refined", "discrep", "bracket", "residual"
            )
            .unwrap();
            for r in &records {
                let p = r.estimate.partial;
                writeln!(
                    s,
                    "{:>3} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>10.3e} {:>10.3e} {:>22}",
                    r.n,
                    p[0],
                    p[1],
                    p[2],
                    p[3],
                    r.nu_refined,
                    r.discrepancy,
                    r.bracket.1 - r.bracket.0,
                    r.residual.to_string()
                )
                .unwrap();
            }
            if let Some(e) = &error {
                writeln!(s, "error: {e}").unwrap();
            }
            s
        }
    };
    Report { stdout, error }
}

fn table_kinds(which: u8) -> Option<[FunctionKind; 2]> {
    match which {
        1 => Some([FunctionKind::L, FunctionKind::K]),
        2 => Some([FunctionKind::F, FunctionKind::G]),
        _ => None,
    }
}

/// The refined zeros and asymptotic estimates of one reference table.
///
/// A failing cell is marked and the remaining cells are still computed.
pub fn cmd_table(config: &RunConfig, which: u8) -> Report {
    let Some(kinds) = table_kinds(which) else {
        return Report::failed(Error::domain("cmd_table", format!("table must be 1 or 2, got {which}")));
    };
    let scheme = config.scheme();
    let opts = config.refine_options();
    let mut first_error = None;
    let cells: Vec<Vec<Option<ZeroRecord>>> = kinds
        .iter()
        .map(|&kind| {
            TABLE_ROWS
                .iter()
                .map(|&n| {
                    let r = asymptotic_zero_with(kind, n, config.x, config.order, scheme)
                        .and_then(|e| refine_zero_with(&e, opts));
                    r.map_err(|e| {
                        first_error.get_or_insert(e);
                    })
                    .ok()
                })
                .collect()
        })
        .collect();

    let stdout = match config.format {
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for (kind, col) in kinds.iter().zip(&cells) {
                for (n, cell) in TABLE_ROWS.iter().zip(col) {
                    match cell {
                        Some(r) => s.push_str(&csv_line(r)),
                        None => writeln!(s, "{kind},{n},{},error,error,error", num(config.x)).unwrap(),
                    }
                }
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = cells.iter().flatten().flatten().map(|r| ZeroRow::from_record(r, false)).collect();
            to_json(&rows)
        }
        Format::Text => {
            let [k1, k2] = kinds;
            let mut s = format!("Table {which}: zeros of {k1} and {k2} at x = {}\n", config.x);
            writeln!(
                s,
                "{:>3}  {:>11}  {:>11}  {:>11}  {:>11}",
                "n",
                format!("{k1} zero"),
                format!("{k1} asympt"),
                format!("{k2} zero"),
                format!("{k2} asympt")
            )
            .unwrap();
            for (i, n) in TABLE_ROWS.iter().enumerate() {
                write!(s, "{n:>3}").unwrap();
                for col in &cells {
                    match &col[i] {
                        Some(r) => write!(s, "  {:>11.6}  {:>11.6}", r.nu_refined, r.nu_asymptotic).unwrap(),
                        None => write!(s, "  {:>11}  {:>11}", "error", "error").unwrap(),
                    }
                }
                s.push('\n');
            }
            s
        }
    };
    Report {
        stdout,
        error: first_error,
    }
}

#[derive(Serialize)]
struct CoeffRow {
    n: u32,
    m: f64,
    xi: f64,
    chi_ratio: f64,
    b: [f64; 3],
    #[serde(rename = "B")]
    b_scaled: [f64; 3],
    partial_sums: [f64; 4],
}

#[derive(Serialize)]
struct CoeffDump {
    kind: FunctionKind,
    x: f64,
    scheme: CorrectionScheme,
    #[serde(rename = "C")]
    c: [f64; 6],
    a: [f64; 6],
    #[serde(rename = "A")]
    phase_shift: [f64; 3],
    zeros: Vec<CoeffRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// JSON dump of `C_k`, `a_k`, `A_k` and, for `n = 1..=n_max`, `b_k` and `B_k`.
pub fn cmd_coeffs(kind: FunctionKind, x: f64, n_max: u32, scheme: CorrectionScheme) -> Report {
    let set = match CoefficientSet::new(x, kind.family()) {
        Ok(s) => s,
        Err(e) => return Report::failed(e),
    };
    let mut zeros = Vec::new();
    let mut error = None;
    for n in 1..=n_max {
        match asymptotic_zero_with(kind, n, x, 3, scheme) {
            Ok(e) => zeros.push(CoeffRow {
                n,
                m: e.m,
                xi: e.xi,
                chi_ratio: e.corrections.chi_ratio,
                b: e.corrections.b,
                b_scaled: e.corrections.b_scaled,
                partial_sums: e.partial,
            }),
            Err(e) => {
                error = Some(e);
                break;
            }
        }
    }
    let dump = CoeffDump {
        kind,
        x,
        scheme,
        c: set.c,
        a: set.a,
        phase_shift: set.phase_shift,
        zeros,
        error: error.as_ref().map(ToString::to_string),
    };
    Report {
        stdout: to_json(&dump),
        error,
    }
}
