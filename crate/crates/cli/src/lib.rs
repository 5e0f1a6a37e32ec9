//! Command-line front end: degrees, tables, polytope volumes, pattern
//! counts and the self-verification suite, with machine-readable output.
//!
//! Exit codes: 0 success, 1 domain or consistency failure, 2 usage.
//! JSON output is deterministic (keys sorted) and serializes every
//! potentially large integer as a decimal string, since table entries
//! outgrow 64-bit integers.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use stiefel_core::degree::{degree, degree_table, Method};
use stiefel_core::exact::rat;
use stiefel_core::checks::{run_checks, VerifyLevel};
use stiefel_core::gt::{count_invariants, enumerate_fillings};
use stiefel_core::volumes::{vol_closed, vol_symbolic};
use stiefel_core::weights::Partition;
use stiefel_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "stiefel",
    version,
    about = "Exact degrees of Stiefel manifolds and the combinatorics behind them"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree of St(k, n), the variety of k orthonormal vectors in n-space.
    Degree {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: i64,
        /// Computation route; `auto` dispatches on the regime of (k, n).
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// The triangular table of degrees for 1 <= k <= n <= max-n.
    Table {
        #[arg(long = "max-n", value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
    },
    /// Volume of the Gelfand-Tsetlin polytope for SO(n-k) inside SO(n).
    Volume {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: i64,
        /// Evaluate the volume at this top row (r comma-separated integers).
        #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true)]
        at: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// Number of pattern fillings from lambda down to the zero weight,
    /// i.e. dim of the SO(m)-invariant space of the SO(n)-representation.
    GtCount {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true)]
        lambda: Vec<i64>,
        #[arg(long)]
        m: u32,
        /// Also list every filling, top row first.
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// Run the self-verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Auto,
    Determinant,
    Paths,
    Integral,
}

impl From<MethodArg> for Method {
    fn from(value: MethodArg) -> Method {
        match value {
            MethodArg::Auto => Method::Auto,
            MethodArg::Determinant => Method::Determinant,
            MethodArg::Paths => Method::Paths,
            MethodArg::Integral => Method::Integral,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ScalarFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LevelArg {
    Fast,
    Full,
}

/// One emitted record, the unit of machine-readable output.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub witnesses: Value,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Parse and run; returns the process exit code.
pub fn execute<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return if err.use_stderr() {
                let _ = write!(stderr, "{err}");
                2
            } else {
                // --help / --version
                let _ = write!(stdout, "{err}");
                0
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        // Downstream closed the pipe (e.g. `stiefel table | head`).
        Err(Failure::Io(err)) if err.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(err)) => {
            let _ = writeln!(stderr, "error: output failed: {err}");
            1
        }
        Err(Failure::Core(err)) => {
            let _ = writeln!(stderr, "error: {err}");
            1
        }
    }
}

/// Anything a subcommand can fail with: a domain error from the library
/// or a write failure on the output stream.
enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        Failure::Core(err)
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Failure {
        Failure::Io(err)
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<i32, Failure> {
    match command {
        Command::Degree { k, n, method, format } => cmd_degree(k, n, method, format, out),
        Command::Table { max_n, format } => cmd_table(max_n, format, out),
        Command::Volume { k, n, at, format } => cmd_volume(k, n, at, format, out),
        Command::GtCount { n, lambda, m, enumerate, format } => {
            cmd_gt_count(n, lambda, m, enumerate, format, out)
        }
        Command::Verify { level } => cmd_verify(level, out),
    }
}

fn matrix_json<T: std::fmt::Display>(m: &stiefel_core::Matrix<T>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(|e| json!(e.to_string())).collect()))
        .collect();
    Value::Array(rows)
}

fn cmd_degree(
    k: i64,
    n: i64,
    method: MethodArg,
    format: ScalarFormat,
    out: &mut impl Write,
) -> Result<i32, Failure> {
    let result = degree(k, n, method.into())?;
    match format {
        ScalarFormat::Text => {
            writeln!(out, "deg St({k}, {n}) = {}", result.degree)?;
            writeln!(out, "regime: {}", result.regime)?;
            writeln!(out, "method: {}", result.method)?;
            if let Some(matrix) = &result.witnesses.matrix {
                writeln!(out, "path matrix:")?;
                for i in 0..matrix.rows() {
                    let row: Vec<String> =
                        matrix.row(i).iter().map(|e| e.to_string()).collect();
                    writeln!(out, "  [{}]", row.join(", "))?;
                }
            }
            if let Some(det) = &result.witnesses.det {
                writeln!(out, "determinant: {det}")?;
            }
            if let Some(count) = &result.witnesses.path_count {
                writeln!(out, "non-intersecting path tuples: {count}")?;
            }
        }
        ScalarFormat::Json => {
            let mut witnesses = serde_json::Map::new();
            if let Some(matrix) = &result.witnesses.matrix {
                witnesses.insert("matrix".into(), matrix_json(matrix));
            }
            if let Some(det) = &result.witnesses.det {
                witnesses.insert("det".into(), json!(det.to_string()));
            }
            if let Some(count) = &result.witnesses.path_count {
                witnesses.insert("path_count".into(), json!(count.to_string()));
            }
            let record = OutputRecord {
                command: "degree".into(),
                inputs: json!({
                    "k": k,
                    "n": n,
                    "method": format!("{:?}", method).to_lowercase(),
                }),
                result: json!({
                    "degree": result.degree.to_string(),
                    "regime": result.regime.to_string(),
                    "method": result.method.to_string(),
                }),
                witnesses: if witnesses.is_empty() {
                    Value::Null
                } else {
                    Value::Object(witnesses)
                },
            };
            writeln!(out, "{}", record.to_json())?;
        }
    }
    Ok(0)
}

fn cmd_table(max_n: i64, format: TableFormat, out: &mut impl Write) -> Result<i32, Failure> {
    let rows = degree_table(max_n)?;
    match format {
        TableFormat::Markdown => {
            // Same layout as the usual presentation: one row per k, `*`
            // below the diagonal.
            let header: Vec<String> = (1..=max_n).map(|n| n.to_string()).collect();
            writeln!(out, "| k\\n | {} |", header.join(" | "))?;
            writeln!(out, "|{}|", vec!["---"; max_n as usize + 1].join("|"))?;
            for k in 1..=max_n {
                let mut cells = Vec::new();
                for n in 1..=max_n {
                    if n < k {
                        cells.push("*".to_string());
                    } else {
                        let row = rows.iter().find(|r| (r.k, r.n) == (k, n)).expect("cell");
                        cells.push(row.degree.to_string());
                    }
                }
                writeln!(out, "| {k} | {} |", cells.join(" | "))?;
            }
        }
        TableFormat::Csv => {
            writeln!(out, "k,n,degree,regime")?;
            for row in &rows {
                writeln!(out, "{},{},{},{}", row.k, row.n, row.degree, row.regime)
                    ?;
            }
        }
        TableFormat::Json => {
            let cells: Vec<Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "k": row.k,
                        "n": row.n,
                        "degree": row.degree.to_string(),
                        "regime": row.regime.to_string(),
                    })
                })
                .collect();
            let record = OutputRecord {
                command: "table".into(),
                inputs: json!({ "max_n": max_n }),
                result: json!({ "rows": cells }),
                witnesses: Value::Null,
            };
            writeln!(out, "{}", record.to_json())?;
        }
    }
    Ok(0)
}

fn cmd_volume(
    k: i64,
    n: i64,
    at: Option<Vec<i64>>,
    format: ScalarFormat,
    out: &mut impl Write,
) -> Result<i32, Failure> {
    let formula = vol_closed(k, n)?;
    if let Some(point) = &at {
        if point.len() != formula.rank {
            return Err(Failure::Core(Error::Domain(format!(
                "--at expects {} coordinates for (k, n) = ({k}, {n}), got {}",
                formula.rank,
                point.len()
            ))));
        }
    }
    // Expansion is feasible for every rank the closed form allows here;
    // fall back to the unexpanded form if it ever is not.
    let expanded = vol_symbolic(k, n).or_else(|_| formula.expand()).ok();
    let value = at
        .as_ref()
        .map(|point| {
            let coords: Vec<_> = point.iter().map(|&v| rat(v, 1)).collect();
            formula.eval(&coords)
        })
        .transpose()?;
    match format {
        ScalarFormat::Text => {
            writeln!(out, "vol GT(SO({}) < SO({n}))(L) = {}", n - k, formula.describe())
                ?;
            if let Some(poly) = &expanded {
                writeln!(out, "expanded: {poly}")?;
            }
            if let (Some(point), Some(v)) = (&at, &value) {
                let coords: Vec<String> = point.iter().map(|c| c.to_string()).collect();
                writeln!(out, "value at ({}): {v}", coords.join(","))?;
            }
        }
        ScalarFormat::Json => {
            let mut result = serde_json::Map::new();
            result.insert("scalar".into(), json!(formula.scalar.to_string()));
            result.insert("omega".into(), json!(formula.omega.parts()));
            result.insert("rank".into(), json!(formula.rank));
            if let Some(poly) = &expanded {
                result.insert("expanded".into(), json!(poly.to_string()));
            }
            if let Some(v) = &value {
                result.insert("value".into(), json!(v.to_string()));
            }
            let record = OutputRecord {
                command: "volume".into(),
                inputs: json!({ "k": k, "n": n, "at": at }),
                result: Value::Object(result),
                witnesses: Value::Null,
            };
            writeln!(out, "{}", record.to_json())?;
        }
    }
    Ok(0)
}

fn cmd_gt_count(
    n: u32,
    lambda: Vec<i64>,
    m: u32,
    enumerate: bool,
    format: ScalarFormat,
    out: &mut impl Write,
) -> Result<i32, Failure> {
    let weight = Partition::new(lambda.clone());
    let count = count_invariants(n, &weight, m)?;
    let fillings: Option<Vec<stiefel_core::GTFilling>> =
        if enumerate { Some(enumerate_fillings(n, &weight, m)?.collect()) } else { None };
    match format {
        ScalarFormat::Text => {
            writeln!(
                out,
                "chains from {weight} for SO({n}) down to the zero weight of SO({m}): {count}"
            )
            ?;
            if let Some(fillings) = &fillings {
                for filling in fillings {
                    writeln!(out, "{filling}")?;
                }
            }
        }
        ScalarFormat::Json => {
            let witnesses = match &fillings {
                Some(fillings) => {
                    let rows: Vec<Value> = fillings
                        .iter()
                        .map(|f| json!(f.rows))
                        .collect();
                    json!({ "fillings": rows })
                }
                None => Value::Null,
            };
            let record = OutputRecord {
                command: "gt-count".into(),
                inputs: json!({ "n": n, "lambda": lambda, "m": m, "enumerate": enumerate }),
                result: json!({ "count": count.to_string() }),
                witnesses,
            };
            writeln!(out, "{}", record.to_json())?;
        }
    }
    Ok(0)
}

fn cmd_verify(level: LevelArg, out: &mut impl Write) -> Result<i32, Failure> {
    let level = match level {
        LevelArg::Fast => VerifyLevel::Fast,
        LevelArg::Full => VerifyLevel::Full,
    };
    let reports = run_checks(level);
    let mut failures = 0;
    for report in &reports {
        let tag = if report.passed { "ok  " } else { "FAIL" };
        writeln!(out, "{tag} {}: {}", report.name, report.detail)?;
        if !report.passed {
            failures += 1;
        }
    }
    writeln!(out, "{} checks, {} failed", reports.len(), failures)?;
    Ok(if failures == 0 { 0 } else { 1 })
}
