//! The `gfrust` command line: `emax`, `table`, `scan` and `verify`.
//!
//! [`run`] takes the argument list and output streams explicitly and
//! returns the process exit code, so the binary is a one-line wrapper and
//! tests can drive the commands in-process.

pub mod format;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::entanglement::{eof_from_delta, epr_uncertainty_global};
use crate::graph::{build_graph, parse_symmetric_graph, GraphSpec, PlatonicSolid};
use crate::group::DEFAULT_GROUP_CAP;
use crate::lattice::{infinite_lattice_energy, LatticeKind, MIN_RESOLUTION};
use crate::solver::{
    build_pair_edges, closed_form_energy, emax_for_custom_graph, emax_for_graph, ground_cm,
    platonic_closed_form, ring_envelopes, ClosedForm, FrustrationResult,
};

use format::{Cell, Table};
use verify::{Fault, Suite, VerifyOptions};

/// Environment variable overriding the group-closure cap.
pub const GROUP_CAP_ENV: &str = "GF_MAX_GROUP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gfrust",
    version,
    about = "Maximal nearest-neighbour entanglement of symmetric Gaussian states on graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ground-state energy E0 and maximal entanglement E_max of graphs.
    Emax(EmaxArgs),
    /// Print the platonic-solid or infinite-lattice table.
    Table(TableArgs),
    /// E0 and E_max over a range of ring sizes.
    Scan(ScanArgs),
    /// Run verification suites; exit status 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RecordFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct EmaxArgs {
    /// ring, torus, complete, meanfield, honeycomb, triangular,
    /// platonic:<solid> or file:<path>.
    #[arg(long)]
    graph: String,
    /// Vertex count (ring, complete, meanfield) or sites per axis (torus);
    /// a comma-separated list of values and inclusive ranges such as `3..8`.
    #[arg(long)]
    n: Option<String>,
    /// Torus dimension.
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Unit cells per axis for honeycomb and triangular tori; same list
    /// syntax as `--n`.
    #[arg(long)]
    size: Option<String>,
    #[arg(long, value_enum, default_value_t = RecordFormat::Csv)]
    format: RecordFormat,
    /// Also build the regularized ground-state covariance matrix at this ε
    /// and report its EPR uncertainty.
    #[arg(long)]
    epsilon: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Platonic,
    Lattice,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(value_enum)]
    kind: TableKind,
    /// Starting Brillouin-zone grid resolution for the lattice table.
    #[arg(long, default_value_t = MIN_RESOLUTION)]
    resolution: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanFamily {
    Ring,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(value_enum)]
    family: ScanFamily,
    #[arg(long, default_value_t = 3)]
    min: usize,
    #[arg(long, default_value_t = 50)]
    max: usize,
    /// Add the even and odd closed-form branches evaluated at real N.
    #[arg(long)]
    envelopes: bool,
    #[arg(long, value_enum, default_value_t = RecordFormat::Csv)]
    format: RecordFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Tables,
    Oracle,
    Appendix,
    Invariants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FaultArg {
    HMinusSign,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Run a reduced set of graphs and ring sizes.
    #[arg(long)]
    quick: bool,
    /// Corrupt the Hamiltonian before verifying (mutation test fixture).
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<FaultArg>,
}

/// Error carrying the exit status it should produce.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn runtime(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FAILURE,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::runtime(format!("write failed: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Emax(a) => cmd_emax(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Scan(a) => cmd_scan(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Parses `3,5,7..9` into `[3, 5, 7, 8, 9]`.
fn parse_list(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || {
        Failure::usage(format!(
            "invalid list `{text}`: expected values like `4` or `3,5,8..12`"
        ))
    };
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

fn group_cap() -> Result<usize, Failure> {
    match std::env::var(GROUP_CAP_ENV) {
        Err(_) => Ok(DEFAULT_GROUP_CAP),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| {
                Failure::usage(format!(
                    "{GROUP_CAP_ENV} must be a positive integer, got `{v}`"
                ))
            }),
    }
}

enum Target {
    Spec(GraphSpec),
    File(PathBuf),
}

fn targets(a: &EmaxArgs) -> Result<Vec<Target>, Failure> {
    let need = |opt: &Option<String>, flag: &str| -> Result<Vec<usize>, Failure> {
        let text = opt
            .as_deref()
            .ok_or_else(|| Failure::usage(format!("--graph {} requires --{flag}", a.graph)))?;
        parse_list(text)
    };
    let family = a.graph.as_str();
    let specs: Vec<GraphSpec> = match family {
        "ring" => need(&a.n, "n")?.into_iter().map(GraphSpec::Ring).collect(),
        "complete" | "meanfield" => need(&a.n, "n")?
            .into_iter()
            .map(GraphSpec::Complete)
            .collect(),
        "torus" => need(&a.n, "n")?
            .into_iter()
            .map(|n| GraphSpec::Torus { n, dim: a.dim })
            .collect(),
        "honeycomb" => need(&a.size, "size")?
            .into_iter()
            .map(GraphSpec::HoneycombTorus)
            .collect(),
        "triangular" => need(&a.size, "size")?
            .into_iter()
            .map(GraphSpec::TriangularTorus)
            .collect(),
        other => {
            if let Some(name) = other.strip_prefix("platonic:") {
                let solid: PlatonicSolid = name.parse().map_err(Failure::usage)?;
                vec![GraphSpec::Platonic(solid)]
            } else if let Some(path) = other.strip_prefix("file:") {
                return Ok(vec![Target::File(PathBuf::from(path))]);
            } else {
                return Err(Failure::usage(format!(
                    "unknown graph family `{other}` (expected ring, torus, complete, meanfield, honeycomb, triangular, platonic:<solid> or file:<path>)"
                )));
            }
        }
    };
    for s in &specs {
        s.validate().map_err(|e| Failure::usage(e.to_string()))?;
    }
    Ok(specs.into_iter().map(Target::Spec).collect())
}

const EMAX_COLUMNS: [&str; 9] = [
    "graph",
    "n",
    "degree",
    "e0",
    "e_max_ebits",
    "method",
    "epsilon",
    "delta_epsilon",
    "runtime_ms",
];

fn cmd_emax(a: &EmaxArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if let Some(eps) = a.epsilon {
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Failure::usage(format!(
                "--epsilon must be positive, got {eps}"
            )));
        }
    }
    let mut table = Table::new(EMAX_COLUMNS.to_vec());
    for target in targets(a)? {
        let start = Instant::now();
        let (result, graph) = match target {
            Target::Spec(spec) => {
                let r =
                    emax_for_graph(&spec).map_err(|e| Failure::runtime(format!("{spec}: {e}")))?;
                let g = match a.epsilon {
                    Some(_) => {
                        Some(build_graph(&spec).map_err(|e| Failure::runtime(e.to_string()))?)
                    }
                    None => None,
                };
                (r, g)
            }
            Target::File(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
                let mut g = parse_symmetric_graph(&text)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                g.set_label(format!("file:{}", path.display()));
                let r = emax_for_custom_graph(&g).map_err(|e| Failure::runtime(e.to_string()))?;
                (r, Some(g))
            }
        };
        let delta_eps = match (a.epsilon, &graph) {
            (Some(eps), Some(g)) => {
                let hp = build_pair_edges(g).map_err(|e| Failure::runtime(e.to_string()))?;
                let cm = ground_cm(&hp, eps).map_err(|e| Failure::runtime(e.to_string()))?;
                Some(
                    epr_uncertainty_global(&cm, &hp)
                        .map_err(|e| Failure::runtime(e.to_string()))?,
                )
            }
            _ => None,
        };
        let ms = start.elapsed().as_secs_f64() * 1e3;
        table.push(emax_row(&result, a.epsilon, delta_eps, ms));
    }
    write_records(&table, a.format, out)?;
    Ok(EXIT_OK)
}

fn emax_row(r: &FrustrationResult, eps: Option<f64>, delta: Option<f64>, ms: f64) -> Vec<Cell> {
    vec![
        r.graph.clone().into(),
        r.n.into(),
        r.degree.into(),
        r.e0.into(),
        r.e_max.into(),
        r.method.tag().into(),
        eps.into(),
        delta.into(),
        ((ms * 1e3).round() / 1e3).into(),
    ]
}

fn write_records(table: &Table, format: RecordFormat, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        RecordFormat::Csv => table.write_csv(out)?,
        RecordFormat::Json => table.write_json(out)?,
    }
    Ok(())
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let table = match a.kind {
        TableKind::Platonic => platonic_table()?,
        TableKind::Lattice => lattice_table(a.resolution)?,
    };
    match a.format {
        TableFormat::Text => table.write_text(out)?,
        TableFormat::Csv => table.write_csv(out)?,
        TableFormat::Json => table.write_json(out)?,
    }
    Ok(EXIT_OK)
}

/// `E_max` in units of 10⁻² ebits, rounded to two decimals.
fn centi_ebits(e_max: f64) -> String {
    format!("{:.2}", 100.0 * e_max)
}

fn platonic_table() -> Result<Table, Failure> {
    let mut t = Table::new(vec![
        "solid",
        "n",
        "degree",
        "e_max_1e-2_ebits",
        "e0_closed_form",
        "e0",
        "e_max_ebits",
    ]);
    for solid in PlatonicSolid::ALL {
        let r = emax_for_graph(&GraphSpec::Platonic(solid))
            .map_err(|e| Failure::runtime(e.to_string()))?;
        let (expr, _) = platonic_closed_form(solid);
        t.push(vec![
            solid.name().into(),
            r.n.into(),
            r.degree.into(),
            centi_ebits(r.e_max).into(),
            expr.into(),
            r.e0.into(),
            r.e_max.into(),
        ]);
    }
    Ok(t)
}

fn lattice_table(resolution: usize) -> Result<Table, Failure> {
    if resolution < MIN_RESOLUTION {
        return Err(Failure::usage(format!(
            "--resolution must be at least {MIN_RESOLUTION}, got {resolution}"
        )));
    }
    let mut t = Table::new(vec![
        "lattice",
        "degree",
        "e_max_1e-2_ebits",
        "e0",
        "e_max_ebits",
        "resolution",
    ]);
    for kind in LatticeKind::TABLE {
        let l = infinite_lattice_energy(kind, resolution)
            .map_err(|e| Failure::runtime(e.to_string()))?;
        let e = eof_from_delta(l.e0).map_err(|e| Failure::runtime(e.to_string()))?;
        t.push(vec![
            kind.name().into(),
            kind.coordination().into(),
            centi_ebits(e).into(),
            l.e0.into(),
            e.into(),
            l.resolution.into(),
        ]);
    }
    Ok(t)
}

fn cmd_scan(a: &ScanArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let ScanFamily::Ring = a.family;
    if a.min < 3 || a.max < a.min {
        return Err(Failure::usage(format!(
            "scan needs 3 <= --min <= --max, got {}..{}",
            a.min, a.max
        )));
    }
    let mut columns = vec!["n", "e0", "e_max_ebits", "parity"];
    if a.envelopes {
        columns.extend(["envelope_even_e_max", "envelope_odd_e_max"]);
    }
    let mut t = Table::new(columns);
    let eof = |d: f64| eof_from_delta(d).map_err(|e| Failure::runtime(e.to_string()));
    for n in a.min..=a.max {
        let e0 =
            closed_form_energy(ClosedForm::Ring(n)).map_err(|e| Failure::runtime(e.to_string()))?;
        let mut row: Vec<Cell> = vec![
            n.into(),
            e0.into(),
            eof(e0)?.into(),
            (if n % 2 == 0 { "even" } else { "odd" }).into(),
        ];
        if a.envelopes {
            let (even, odd) = ring_envelopes(n as f64);
            row.push(eof(even)?.into());
            row.push(eof(odd)?.into());
        }
        t.push(row);
    }
    write_records(&t, a.format, out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let opts = VerifyOptions {
        suite: match a.suite {
            SuiteArg::All => Suite::All,
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Appendix => Suite::Appendix,
            SuiteArg::Invariants => Suite::Invariants,
        },
        quick: a.quick,
        fault: a.inject_fault.map(|FaultArg::HMinusSign| Fault::HMinusSign),
        group_cap: group_cap()?,
    };
    let report = verify::run(&opts);
    serde_json::to_writer_pretty(&mut *out, &report)
        .map_err(|e| Failure::runtime(e.to_string()))?;
    writeln!(out)?;
    if report.passed {
        Ok(EXIT_OK)
    } else {
        for c in report.failing() {
            writeln!(err, "FAILED {}", c.name)?;
        }
        Ok(EXIT_FAILURE)
    }
}
