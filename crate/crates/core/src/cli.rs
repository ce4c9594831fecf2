//! Command-line front end: sweeps written as CSV or JSON.
//!
//! Exit codes: 0 when every asserted inequality holds, 1 when one is
//! violated by more than [`VIOLATION_TOLERANCE`], 2 on usage or domain
//! errors (message on stderr).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::entropy::{QParam, SubadditivityReport};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::probability::SeriesKind;
use crate::specfun::{dmatrix, hyp2f1, Su11Args};
use crate::su11::{
    continuous_series_report, discrete_series_distribution, discrete_series_truncated,
    mixed_series_report, su11_subadditivity, SeriesReport,
};
use crate::su2::{sweep, Su2Sweep};

/// Slack below `-VIOLATION_TOLERANCE` on an asserted report exits with 1.
pub const VIOLATION_TOLERANCE: f64 = 1e-10;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "irrep-entropy",
    version,
    about = "Entropic inequalities for SU(2) and SU(1,1) matrix elements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Wigner d-matrix d^j(θ).
    Dmat(DmatArgs),
    /// Shannon subadditivity of a d-matrix column over a θ grid.
    Su2Check(Su2Args),
    /// Tsallis subadditivity of a d-matrix column over a θ grid.
    Su2Tsallis(Su2TsallisArgs),
    /// Shannon subadditivity of SU(1,1) columns over a rapidity grid.
    Su11Check(Su11CheckArgs),
    /// Evaluate the Gauss hypergeometric function 2F1(a, b; c; z).
    Hyp2f1(Hyp2f1Args),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// `start:stop:count`, both endpoints included.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i as f64 / last
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("grid {s:?} is not start:stop:count"));
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts.as_slice() else {
            return Err(bad());
        };
        let start: f64 = start.trim().parse().map_err(|_| bad())?;
        let stop: f64 = stop.trim().parse().map_err(|_| bad())?;
        let count: usize = count.trim().parse().map_err(|_| bad())?;
        if count == 0 || !start.is_finite() || !stop.is_finite() {
            return Err(Error::Parse(format!(
                "grid {s:?} needs finite endpoints and count >= 1"
            )));
        }
        Ok(Grid { start, stop, count })
    }
}

#[derive(Debug, Args)]
pub struct DmatArgs {
    #[arg(long)]
    pub j: HalfInt,
    #[arg(long, allow_negative_numbers = true)]
    pub theta: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Su2Args {
    #[arg(long)]
    pub j: HalfInt,
    /// Fixed column index; defaults to `j`.
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<HalfInt>,
    #[arg(long, allow_negative_numbers = true)]
    pub grid: Grid,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Su2TsallisArgs {
    #[command(flatten)]
    pub sweep: Su2Args,
    /// Entropy index; `q > 1` is asserted, `0 < q < 1` is report-only.
    #[arg(long)]
    pub q: f64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Su11Series {
    #[default]
    Discrete,
    Mixed,
    Continuous,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Lattice {
    #[default]
    Integer,
    HalfInteger,
}

#[derive(Debug, Args)]
pub struct Su11CheckArgs {
    #[arg(long, value_enum, default_value_t = Su11Series::Discrete)]
    pub series: Su11Series,
    /// Discrete and mixed series: spin `j = -k/2`.
    #[arg(long)]
    pub k: Option<u32>,
    /// Column label: a weight `m >= -j` (discrete) or a real label.
    #[arg(long, allow_negative_numbers = true)]
    pub m: String,
    /// Continuous series: `j = -1/2 + i s`.
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub sigma: u8,
    #[arg(long, value_enum, default_value_t = Lattice::Integer)]
    pub lattice: Lattice,
    #[arg(long, allow_negative_numbers = true)]
    pub grid: Grid,
    /// Fixed number of terms. Discrete series truncate adaptively without it;
    /// the others default to 64.
    #[arg(long)]
    pub truncation: Option<usize>,
    /// Discrete series: required captured mass is `1 - eps`.
    #[arg(long, default_value_t = 1e-9)]
    pub eps: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Hyp2f1Args {
    #[arg(long, allow_negative_numbers = true)]
    pub a: String,
    #[arg(long, allow_negative_numbers = true)]
    pub b: String,
    #[arg(long, allow_negative_numbers = true)]
    pub c: String,
    #[arg(long, allow_negative_numbers = true)]
    pub z: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Reflection signs can produce `-0.0`; both zeros print as `0`.
fn unsigned_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Cell {
    Num(f64),
    Int(usize),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format!("{:.16e}", unsigned_zero(*x)),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => json!(unsigned_zero(*x)),
            Cell::Int(n) => json!(n),
            Cell::Text(s) => json!(s),
        }
    }
}

/// A rendered result: column names, rows and the configuration echo.
#[derive(Debug)]
struct Table {
    config: Value,
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
    violated: bool,
}

impl Table {
    fn new(config: Value, header: &[&str]) -> Self {
        Table {
            config,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            violated: false,
        }
    }

    fn record(&mut self, report: &SubadditivityReport) {
        if report.is_asserted() && report.slack < -VIOLATION_TOLERANCE {
            self.violated = true;
        }
    }

    fn render(&self, format: Format) -> io::Result<Vec<u8>> {
        match format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.into_inner().map_err(|e| e.into_error())
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .header
                            .iter()
                            .cloned()
                            .zip(row.iter().map(Cell::json))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let doc = json!({ "config": self.config, "rows": rows });
                let mut out = serde_json::to_vec_pretty(&doc)?;
                out.push(b'\n');
                Ok(out)
            }
        }
    }
}

fn report_cells(r: &SubadditivityReport) -> [Cell; 3] {
    [
        Cell::Num(r.h_joint),
        Cell::Num(r.h_first),
        Cell::Num(r.h_second),
    ]
}

fn mode(r: &SubadditivityReport) -> Cell {
    Cell::Text(
        if r.is_asserted() {
            "asserted"
        } else {
            "report-only"
        }
        .into(),
    )
}

fn grid_json(g: &Grid) -> Value {
    json!({ "start": g.start, "stop": g.stop, "count": g.count })
}

fn cmd_dmat(args: &DmatArgs) -> Result<Table> {
    let d = dmatrix(args.j, args.theta)?;
    let mut header = vec!["m'\\m".to_string()];
    header.extend((0..d.dim()).map(|i| d.weight(i).to_string()));
    let mut table = Table::new(
        json!({ "command": "dmat", "j": args.j.to_string(), "theta": args.theta }),
        &[],
    );
    table.header = header;
    for (i, row) in d.rows().enumerate() {
        let mut cells = vec![Cell::Text(d.weight(i).to_string())];
        cells.extend(row.iter().map(|&v| Cell::Num(v)));
        table.rows.push(cells);
    }
    Ok(table)
}

fn su2_table(args: &Su2Args, q: Option<QParam>) -> Result<Table> {
    let m = args.m.unwrap_or(args.j);
    let s = Su2Sweep::new(args.j, m, args.grid.points(), q)?;
    let command = if q.is_some() {
        "su2-tsallis"
    } else {
        "su2-check"
    };
    let mut config = json!({
        "command": command,
        "j": args.j.to_string(),
        "m": m.to_string(),
        "grid": grid_json(&args.grid),
    });
    let mut header = vec!["theta", "h_joint", "h1", "h2", "lhs", "slack"];
    if let Some(q) = q {
        config["q"] = json!(q.get());
        header.extend(["power_sum_gap", "mode"]);
    }
    let mut table = Table::new(config, &header);
    for (theta, r) in sweep(&s)? {
        table.record(&r);
        let mut row = vec![Cell::Num(theta)];
        row.extend(report_cells(&r));
        row.extend([Cell::Num(r.lhs()), Cell::Num(r.slack)]);
        if let Some(gap) = r.power_sum_gap {
            row.extend([Cell::Num(gap), mode(&r)]);
        }
        table.rows.push(row);
    }
    Ok(table)
}

fn cmd_su2_tsallis(args: &Su2TsallisArgs) -> Result<Table> {
    su2_table(&args.sweep, Some(QParam::new(args.q)?))
}

fn parse_label(s: &str) -> Result<f64> {
    s.parse::<HalfInt>().map(HalfInt::value).or_else(|_| {
        s.parse::<f64>()
            .map_err(|_| Error::Parse(format!("{s:?} is not a number")))
    })
}

fn require<T>(v: Option<T>, flag: &str, series: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("--{flag} is required for the {series} series")))
}

fn cmd_su11_check(args: &Su11CheckArgs) -> Result<Table> {
    let points = args.grid.points();
    let mut config = json!({ "command": "su11-check", "m": args.m, "grid": grid_json(&args.grid) });
    if let Some(n) = args.truncation {
        config["truncation"] = json!(n);
    }
    if args.series == Su11Series::Discrete {
        let k = require(args.k, "k", "discrete")?;
        let m: HalfInt = args.m.parse()?;
        config["series"] = json!("discrete");
        config["k"] = json!(k);
        config["eps"] = json!(args.eps);
        let header = [
            "t",
            "truncation",
            "captured_mass",
            "h_joint",
            "h1",
            "h2",
            "slack",
        ];
        let mut table = Table::new(config, &header);
        for t in points {
            let d = match args.truncation {
                Some(n) => discrete_series_truncated(k, m, t, n)?,
                None => discrete_series_distribution(k, m, t, args.eps)?,
            };
            let r = su11_subadditivity(&d)?;
            table.record(&r);
            let mut row = vec![
                Cell::Num(t),
                Cell::Int(d.truncation),
                Cell::Num(d.captured_mass),
            ];
            row.extend(report_cells(&r));
            row.push(Cell::Num(r.slack));
            table.rows.push(row);
        }
        return Ok(table);
    }

    let m = parse_label(&args.m)?;
    let truncation = args.truncation.unwrap_or(64);
    let evaluate: Box<dyn Fn(f64) -> Result<SeriesReport>> = match args.series {
        Su11Series::Mixed => {
            let k = require(args.k, "k", "mixed")?;
            config["series"] = json!("mixed");
            config["k"] = json!(k);
            let j = HalfInt::from_doubled(-i64::from(k));
            Box::new(move |t| mixed_series_report(&Su11Args::mixed(k, -j, m, t)?, truncation))
        }
        _ => {
            let s = require(args.s, "s", "continuous")?;
            let sigma = args.sigma;
            let lattice = match args.lattice {
                Lattice::Integer => SeriesKind::ContinuousInteger,
                Lattice::HalfInteger => SeriesKind::ContinuousHalfInteger,
            };
            config["series"] = json!("continuous");
            config["s"] = json!(s);
            config["sigma"] = json!(sigma);
            config["lattice"] = json!(lattice.as_str());
            let start = lattice.weight_at(HalfInt::ZERO, 0);
            Box::new(move |t| {
                continuous_series_report(
                    &Su11Args::continuous(s, sigma, start, m, t)?,
                    truncation,
                    lattice,
                )
            })
        }
    };
    let header = [
        "t",
        "truncation",
        "raw_mass",
        "h_joint",
        "h1",
        "h2",
        "slack",
        "mode",
    ];
    let mut table = Table::new(config, &header);
    for t in points {
        let out = evaluate(t)?;
        table.record(&out.report);
        let mut row = vec![
            Cell::Num(t),
            Cell::Int(out.truncation),
            Cell::Num(out.raw_mass),
        ];
        row.extend(report_cells(&out.report));
        row.extend([
            Cell::Num(out.report.slack),
            Cell::Text("report-only".into()),
        ]);
        table.rows.push(row);
    }
    Ok(table)
}

fn parse_complex(name: &str, s: &str) -> Result<Complex64> {
    Complex64::from_str(s.trim())
        .map_err(|_| Error::Parse(format!("--{name} {s:?} is not a complex number")))
}

fn cmd_hyp2f1(args: &Hyp2f1Args) -> Result<Table> {
    let a = parse_complex("a", &args.a)?;
    let b = parse_complex("b", &args.b)?;
    let c = parse_complex("c", &args.c)?;
    let z = parse_complex("z", &args.z)?;
    let v = hyp2f1(a, b, c, z)?;
    let config = json!({
        "command": "hyp2f1",
        "a": args.a, "b": args.b, "c": args.c, "z": args.z,
    });
    let mut table = Table::new(config, &["re", "im"]);
    table.rows.push(vec![Cell::Num(v.re), Cell::Num(v.im)]);
    Ok(table)
}

fn execute(command: &Command) -> Result<(Table, &OutputArgs)> {
    Ok(match command {
        Command::Dmat(a) => (cmd_dmat(a)?, &a.out),
        Command::Su2Check(a) => (su2_table(a, None)?, &a.out),
        Command::Su2Tsallis(a) => (cmd_su2_tsallis(a)?, &a.sweep.out),
        Command::Su11Check(a) => (cmd_su11_check(a)?, &a.out),
        Command::Hyp2f1(a) => (cmd_hyp2f1(a)?, &a.out),
    })
}

fn emit(bytes: &[u8], out: &OutputArgs, stdout: &mut dyn Write) -> io::Result<()> {
    match &out.output {
        Some(path) => File::create(path)?.write_all(bytes),
        None => stdout.write_all(bytes),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let (table, out) = match execute(&cli.command) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = table
        .render(out.format)
        .and_then(|bytes| emit(&bytes, out, stdout));
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    if table.violated {
        let _ = writeln!(
            stderr,
            "subadditivity violated beyond {VIOLATION_TOLERANCE}"
        );
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}
