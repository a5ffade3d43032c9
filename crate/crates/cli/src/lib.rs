//! Front end for `hansen-core`: body presets, argument handling and the
//! table, CSV and JSON renderers used by the `hansen` binary.

use std::fmt::{self, Write as _};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::{ArgGroup, Parser, ValueEnum};
use hansen_core::{
    compute_from_grid, evaluate_signals, FitStatistics, HansenError, HansenRequest, HansenTable,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyPreset {
    pub name: &'static str,
    pub e: f64,
}

pub const BODIES: [BodyPreset; 6] = [
    BodyPreset {
        name: "earth",
        e: 0.016708617,
    },
    BodyPreset {
        name: "pluto",
        e: 0.249050,
    },
    BodyPreset {
        name: "ceres",
        e: 0.078,
    },
    BodyPreset {
        name: "sekhmet",
        e: 0.296,
    },
    BodyPreset {
        name: "wild2",
        e: 0.541,
    },
    BodyPreset {
        name: "lexell",
        e: 0.786,
    },
];

/// Case-insensitive preset lookup.
pub fn find_body(name: &str) -> Option<BodyPreset> {
    BODIES
        .iter()
        .copied()
        .find(|body| body.name.eq_ignore_ascii_case(name))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

/// Hansen coefficients of (r/a)^n cos(m v) and (r/a)^n sin(m v) in multiples
/// of the mean anomaly.
#[derive(Debug, Clone, Parser)]
#[command(name = "hansen", version)]
#[command(group(ArgGroup::new("orbit").required(true).args(["body", "eccentricity"])))]
pub struct Cli {
    /// Named body preset (earth, pluto, ceres, sekhmet, wild2, lexell).
    #[arg(long)]
    pub body: Option<String>,

    /// Orbital eccentricity in [0, 1).
    #[arg(long)]
    pub eccentricity: Option<f64>,

    /// Power of r/a.
    #[arg(long, allow_negative_numbers = true)]
    pub n: i32,

    /// Multiple of the true anomaly.
    #[arg(long)]
    pub m: u32,

    /// Number of grid points over one period.
    #[arg(long, default_value_t = hansen_core::series::DEFAULT_SAMPLES)]
    pub samples: usize,

    /// Target standard error of a retained coefficient.
    #[arg(long, default_value_t = hansen_core::series::DEFAULT_TOLERANCE)]
    pub tol: f64,

    /// Kepler solver tolerance.
    #[arg(long, default_value_t = hansen_core::series::DEFAULT_KEPLER_TOLERANCE)]
    pub eps1: f64,

    /// Upper bound on the truncation order.
    #[arg(long)]
    pub max_order: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Also write the sampled grid as CSV to this path.
    #[arg(long, value_name = "PATH")]
    pub dump_grid: Option<PathBuf>,
}

/// Rejected command-line input that the library never saw.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;
pub const EXIT_IO: u8 = 1;

/// Maps a failure to the process exit status: 2 for invalid input, 3 for a
/// numerical failure, 1 for I/O.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<HansenError>() {
        Some(e) if e.is_input_error() => EXIT_USAGE,
        Some(_) => EXIT_NUMERICAL,
        None => EXIT_IO,
    }
}

impl Cli {
    pub fn eccentricity(&self) -> anyhow::Result<f64> {
        match (&self.body, self.eccentricity) {
            (Some(name), None) => find_body(name).map(|body| body.e).ok_or_else(|| {
                let known: Vec<_> = BODIES.iter().map(|b| b.name).collect();
                UsageError(format!(
                    "unknown body {name:?}; expected one of {}",
                    known.join(", ")
                ))
                .into()
            }),
            (None, Some(e)) => Ok(e),
            (Some(_), Some(_)) => {
                Err(UsageError("--body and --eccentricity are mutually exclusive".into()).into())
            }
            (None, None) => {
                Err(UsageError("one of --body or --eccentricity is required".into()).into())
            }
        }
    }

    pub fn request(&self) -> anyhow::Result<HansenRequest> {
        let mut request = HansenRequest::new(self.eccentricity()?, self.n, self.m)
            .with_samples(self.samples)
            .with_tol(self.tol)
            .with_eps1(self.eps1);
        request.max_order = self.max_order;
        request.validate()?;
        Ok(request)
    }
}

/// Computes the table for `cli` and writes it to `out`.
///
/// Nothing is written to `out` unless the computation succeeds.
pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<()> {
    let request = cli.request()?;
    let grid = evaluate_signals(
        request.eccentricity,
        request.n,
        request.m,
        request.samples,
        request.eps1,
    )?;
    if let Some(path) = &cli.dump_grid {
        let file = File::create(path)
            .with_context(|| format!("cannot create grid dump {}", path.display()))?;
        let mut writer = BufWriter::new(file);
        grid.write_csv(&mut writer)
            .and_then(|_| writer.flush())
            .with_context(|| format!("cannot write grid dump {}", path.display()))?;
    }
    let table = compute_from_grid(&request, &grid)?;
    out.write_all(render(&table, cli.format).as_bytes())?;
    Ok(())
}

pub fn render(table: &HansenTable, format: Format) -> String {
    match format {
        Format::Table => render_table(table),
        Format::Csv => render_csv(table),
        Format::Json => render_json(table),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsDocument {
    pub delta_sq: f64,
    pub sigma_sq: f64,
    pub pe_fit: f64,
    pub sigma_coeff: f64,
    pub pe_coeff: f64,
    pub q_dist: f64,
}

impl From<&FitStatistics> for StatsDocument {
    fn from(stats: &FitStatistics) -> Self {
        Self {
            delta_sq: stats.delta_sq,
            sigma_sq: stats.sigma_sq,
            pe_fit: stats.pe_fit,
            sigma_coeff: stats.sigma_coeff,
            pe_coeff: stats.pe_coeff,
            q_dist: stats.q_dist,
        }
    }
}

/// JSON layout of a table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub e: f64,
    pub n: i32,
    pub m: u32,
    pub l: usize,
    pub s: usize,
    #[serde(rename = "A")]
    pub a: Vec<f64>,
    #[serde(rename = "B")]
    pub b: Vec<f64>,
    #[serde(rename = "stats_A")]
    pub stats_a: StatsDocument,
    #[serde(rename = "stats_B")]
    pub stats_b: StatsDocument,
}

impl From<&HansenTable> for TableDocument {
    fn from(table: &HansenTable) -> Self {
        Self {
            e: table.request.eccentricity,
            n: table.request.n,
            m: table.request.m,
            l: table.request.samples,
            s: table.order,
            a: table.a.clone(),
            b: table.b.clone(),
            stats_a: (&table.stats_a).into(),
            stats_b: (&table.stats_b).into(),
        }
    }
}

pub fn render_json(table: &HansenTable) -> String {
    let mut text = serde_json::to_string_pretty(&TableDocument::from(table))
        .expect("table holds only finite numbers");
    text.push('\n');
    text
}

pub fn render_csv(table: &HansenTable) -> String {
    let mut text = String::from("k,A_k,B_k\n");
    for (k, a) in table.a.iter().enumerate() {
        match table.b_at(k) {
            Some(b) => writeln!(text, "{k},{a:e},{b:e}"),
            None => writeln!(text, "{k},{a:e},"),
        }
        .unwrap();
    }
    for (side, stats) in [("A", &table.stats_a), ("B", &table.stats_b)] {
        writeln!(text, "delta2_{side},{:e},", stats.delta_sq).unwrap();
        writeln!(text, "sigma_coeff_{side},{:e},", stats.sigma_coeff).unwrap();
        writeln!(text, "Q_{side},{:e},", stats.q_dist).unwrap();
    }
    text
}

pub fn render_table(table: &HansenTable) -> String {
    let request = &table.request;
    let mut text = String::new();
    writeln!(
        text,
        "e = {}  n = {}  m = {}  l = {}  s = {}",
        request.eccentricity, request.n, request.m, request.samples, table.order
    )
    .unwrap();
    writeln!(text, "{:>11}  {:>13}  {:>13}", "k", "A_k", "B_k").unwrap();
    for (k, &a) in table.a.iter().enumerate() {
        let b = table.b_at(k).map(|b| format_g(b, 6)).unwrap_or_default();
        writeln!(text, "{k:>11}  {:>13}  {b:>13}", format_g(a, 6)).unwrap();
    }
    for (label, a, b) in [
        ("delta^2", table.stats_a.delta_sq, table.stats_b.delta_sq),
        (
            "sigma_coeff",
            table.stats_a.sigma_coeff,
            table.stats_b.sigma_coeff,
        ),
        ("Q", table.stats_a.q_dist, table.stats_b.q_dist),
    ] {
        writeln!(
            text,
            "{label:<11}  {:>13}  {:>13}",
            format_g(a, 6),
            format_g(b, 6)
        )
        .unwrap();
    }
    if table.aliasing_risk {
        text.push_str("note: series not converged at s; increase --samples\n");
    }
    text
}

/// `printf("%.{digits}g")` with Rust-style exponents (`1.5e-7`).
pub fn format_g(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let precision = digits.max(1) - 1;
    let scientific = format!("{value:.precision$e}");
    let (mantissa, exponent) = scientific.split_once('e').unwrap();
    let exponent: i32 = exponent.parse().unwrap();
    if exponent < -4 || exponent >= digits as i32 {
        format!("{}e{exponent}", trim_zeros(mantissa))
    } else {
        let decimals = (precision as i32 - exponent).max(0) as usize;
        trim_zeros(&format!("{value:.decimals$}")).to_string()
    }
}

fn trim_zeros(number: &str) -> &str {
    if number.contains('.') {
        number.trim_end_matches('0').trim_end_matches('.')
    } else {
        number
    }
}
