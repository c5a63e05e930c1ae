//! The `quenta` command line: cosets, single constructions, parameter tables
//! and verification sweeps.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quenta_core::config::{Config, ConfigError};
use quenta_core::defset::CosetPartition;
use quenta_core::oracle::{self, Instance, OracleError, Summary, SweepRange};
use quenta_core::quenta::Family;
use thiserror::Error;

pub mod output;

use output::{OutputRow, SweepOutput, VerifyOutput};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Io(String),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "quenta",
    version,
    about = "Entanglement-assisted quantum code parameters from classical cyclic codes"
)]
pub struct Cli {
    /// Output format (default: text for cosets and verify, json otherwise)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Config file with caps and modulus overrides
    #[arg(long, global = true, env = "QUENTA_CONFIG")]
    pub config: Option<PathBuf>,
    /// Run metadata on stderr
    #[arg(long, short, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the q-cyclotomic cosets modulo n
    Cosets {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
    },
    /// Build one instance of a family
    Construct(ConstructArgs),
    /// Emit the parameter table of a family over a range
    Table(TableArgs),
    /// Check a family (or the default suite) against the brute-force oracle
    Verify(VerifyArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
    #[arg(long)]
    pub k1: Option<u64>,
    #[arg(long)]
    pub b1: Option<u64>,
    #[arg(long)]
    pub k2: Option<u64>,
    #[arg(long)]
    pub b2: Option<u64>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub t: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub delta: Option<u64>,
    /// Defining set, comma separated (e.g. 1,2,4)
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    #[arg(long)]
    pub z1: Option<String>,
    #[arg(long)]
    pub z2: Option<String>,
    /// Attach the oracle's verdict; exit 2 if it fails
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args, Default)]
pub struct RangeArgs {
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub a_max: Option<u64>,
    #[arg(long)]
    pub delta_min: Option<u64>,
    #[arg(long)]
    pub delta_max: Option<u64>,
}

impl RangeArgs {
    fn to_range(&self) -> SweepRange {
        SweepRange {
            q: self.q,
            n: self.n,
            m: self.m,
            a_max: self.a_max,
            delta_min: self.delta_min,
            delta_max: self.delta_max,
        }
    }

    fn is_empty(&self) -> bool {
        self.to_range() == SweepRange::default()
    }
}

fn describe_range(r: &SweepRange) -> String {
    let mut parts = Vec::new();
    let mut push = |name: &str, v: Option<String>| {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    };
    push("q", r.q.map(|v| v.to_string()));
    push("n", r.n.map(|v| v.to_string()));
    push("m", r.m.map(|v| v.to_string()));
    push("a_max", r.a_max.map(|v| v.to_string()));
    push("delta_min", r.delta_min.map(|v| v.to_string()));
    push("delta_max", r.delta_max.map(|v| v.to_string()));
    parts.join(" ")
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[command(flatten)]
    pub range: RangeArgs,
    /// Write here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A family name, or `all` for the default suite
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub range: RangeArgs,
}

/// Parses `1,2,4`, `{1,2,4}`, `1;2;4` or the empty string.
pub fn parse_set(s: &str) -> Result<Vec<usize>, CliError> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    inner
        .split([',', ';'])
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| CliError::Usage(format!("`{p}` in `{s}` is not a non-negative integer"))))
        .collect()
}

impl ConstructArgs {
    fn given(&self) -> Vec<&'static str> {
        let mut g = Vec::new();
        let flags: [(&'static str, bool); 14] = [
            ("n", self.n.is_some()),
            ("k", self.k.is_some()),
            ("b", self.b.is_some()),
            ("k1", self.k1.is_some()),
            ("b1", self.b1.is_some()),
            ("k2", self.k2.is_some()),
            ("b2", self.b2.is_some()),
            ("a", self.a.is_some()),
            ("t", self.t.is_some()),
            ("r", self.r.is_some()),
            ("m", self.m.is_some()),
            ("delta", self.delta.is_some()),
            ("z", self.z.is_some()),
            ("z1", self.z1.is_some() || self.z2.is_some()),
        ];
        for (name, set) in flags {
            if set {
                g.push(name);
            }
        }
        g
    }

    fn need<T: Copy>(&self, v: Option<T>, name: &str) -> Result<T, CliError> {
        v.ok_or_else(|| CliError::Usage(format!("construct {} requires --{name}", self.family)))
    }

    fn need_set(&self, v: &Option<String>, name: &str) -> Result<Vec<usize>, CliError> {
        match v {
            Some(s) => parse_set(s),
            None => Err(CliError::Usage(format!("construct {} requires --{name}", self.family))),
        }
    }

    /// The family instance these flags describe; unused flags are refused.
    pub fn instance(&self) -> Result<Instance, CliError> {
        let allowed: &[&str] = match self.family {
            Family::EuclidPair => &["n", "z1"],
            Family::EuclidLcd | Family::Hermitian | Family::HermitianLcd => &["n", "z"],
            Family::RsEuclid => &["n", "k1", "b1", "k2", "b2"],
            Family::RsMds => &["n", "k", "b"],
            Family::BchEuclid => &["a", "b"],
            Family::RsHermit => &["t", "r"],
            Family::BchHermit => &["a"],
            Family::LiLcd => &["m", "delta"],
        };
        if let Some(extra) = self.given().into_iter().find(|g| !allowed.contains(g)) {
            let extra = if extra == "z1" { "z1/--z2" } else { extra };
            return Err(CliError::Usage(format!("--{extra} is not a parameter of {}", self.family)));
        }
        let q = self.q;
        let length = |v: u64| usize::try_from(v).map_err(|_| CliError::Usage(format!("--n {v} is too large")));
        Ok(match self.family {
            Family::EuclidPair => Instance::EuclidPair {
                q,
                n: length(self.need(self.n, "n")?)?,
                z1: self.need_set(&self.z1, "z1")?,
                z2: self.need_set(&self.z2, "z2")?,
            },
            Family::EuclidLcd | Family::Hermitian | Family::HermitianLcd => {
                let n = length(self.need(self.n, "n")?)?;
                let z = self.need_set(&self.z, "z")?;
                match self.family {
                    Family::EuclidLcd => Instance::EuclidLcd { q, n, z },
                    Family::Hermitian => Instance::Hermitian { q, n, z },
                    _ => Instance::HermitianLcd { q, n, z },
                }
            }
            Family::RsEuclid => Instance::RsEuclid {
                q,
                n: self.n.unwrap_or(q.saturating_sub(1)),
                k1: self.need(self.k1, "k1")?,
                b1: self.need(self.b1, "b1")?,
                k2: self.need(self.k2, "k2")?,
                b2: self.need(self.b2, "b2")?,
            },
            Family::RsMds => Instance::RsMds {
                q,
                n: self.n.unwrap_or(q.saturating_sub(1)),
                k: self.need(self.k, "k")?,
                b: self.need(self.b, "b")?,
            },
            Family::BchEuclid => Instance::BchEuclid { q, a: self.need(self.a, "a")?, b: self.need(self.b, "b")? },
            Family::RsHermit => Instance::RsHermit { q, t: self.need(self.t, "t")?, r: self.need(self.r, "r")? },
            Family::BchHermit => Instance::BchHermit { q, a: self.need(self.a, "a")? },
            Family::LiLcd => Instance::LiLcd { q, m: self.need(self.m, "m")?, delta: self.need(self.delta, "delta")? },
        })
    }
}

struct Ctx<'a> {
    cfg: Config,
    format: Option<Format>,
    verbose: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn note(&mut self, msg: &str) {
        if self.verbose {
            let _ = writeln!(self.err, "{msg}");
        }
    }

    fn row_format(&self) -> Result<Format, CliError> {
        match self.format {
            None | Some(Format::Json) => Ok(Format::Json),
            Some(Format::Csv) => Ok(Format::Csv),
            Some(Format::Text) => Err(CliError::Usage("rows are written as json or csv".into())),
        }
    }
}

fn write_rows(out: &mut dyn Write, format: Format, rows: &[OutputRow]) -> Result<(), CliError> {
    match format {
        Format::Csv => output::write_rows_csv(out, rows),
        _ => output::write_rows_json(out, rows),
    }
}

fn cmd_cosets(ctx: &mut Ctx, q: u64, n: usize) -> Result<bool, CliError> {
    let part = CosetPartition::new(n, q).map_err(|e| CliError::Precondition(e.to_string()))?;
    let cosets: Vec<Vec<usize>> = part.cosets().iter().map(|c| c.elems().to_vec()).collect();
    match ctx.format.unwrap_or(Format::Text) {
        Format::Text => output::write_cosets_text(ctx.out, &cosets)?,
        Format::Json => output::write_cosets_json(ctx.out, &cosets)?,
        Format::Csv => output::write_cosets_csv(ctx.out, &cosets)?,
    }
    Ok(true)
}

fn cmd_construct(ctx: &mut Ctx, args: &ConstructArgs) -> Result<bool, CliError> {
    let format = ctx.row_format()?;
    let inst = args.instance()?;
    let params = oracle::construct(&inst, &ctx.cfg).map_err(|e| CliError::Precondition(e.to_string()))?;
    let mut row = OutputRow::from_params(&params)?;
    let mut pass = true;
    if args.verify {
        let start = Instant::now();
        let report = oracle::verify_instance(&inst, &ctx.cfg);
        ctx.note(&format!("verified {} {} in {:.2?}", inst.family(), inst, start.elapsed()));
        pass = report.pass;
        row = row.with_report(&report);
    }
    write_rows(ctx.out, format, &[row])?;
    Ok(pass)
}

fn cmd_table(ctx: &mut Ctx, args: &TableArgs) -> Result<bool, CliError> {
    let format = ctx.row_format()?;
    let start = Instant::now();
    let insts = oracle::instances(args.family, &args.range.to_range())?;
    let mut rows = Vec::with_capacity(insts.len());
    for (inst, built) in insts.iter().zip(oracle::construct_all(&insts, &ctx.cfg)) {
        let p = built.map_err(|e| CliError::Precondition(format!("{} {inst}: {e}", inst.family())))?;
        rows.push(OutputRow::from_params(&p)?);
    }
    ctx.note(&format!("{} rows of {} in {:.2?}", rows.len(), args.family, start.elapsed()));
    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_rows(&mut w, format, &rows)?;
            w.flush()?;
        }
        None => write_rows(ctx.out, format, &rows)?,
    }
    Ok(true)
}

fn cmd_verify(ctx: &mut Ctx, args: &VerifyArgs) -> Result<bool, CliError> {
    let plan: Vec<(Family, SweepRange)> = if args.family == "all" {
        if !args.range.is_empty() {
            return Err(CliError::Usage("verify --family all takes no range flags".into()));
        }
        oracle::default_suite()
    } else {
        let family = args.family.parse::<Family>().map_err(CliError::Usage)?;
        vec![(family, args.range.to_range())]
    };
    let mut sweeps = Vec::with_capacity(plan.len());
    let mut total = Summary::default();
    for (family, range) in plan {
        let start = Instant::now();
        let insts = oracle::instances(family, &range)?;
        let reports = oracle::sweep(&insts, &ctx.cfg);
        let summary = Summary::of(&reports);
        ctx.note(&format!("{family} {}: {} instances in {:.2?}", describe_range(&range), insts.len(), start.elapsed()));
        total.passed += summary.passed;
        total.failed += summary.failed;
        total.skipped += summary.skipped;
        sweeps.push(SweepOutput { family, range: describe_range(&range), summary, reports });
    }
    let v = VerifyOutput { sweeps, total };
    match ctx.format.unwrap_or(Format::Text) {
        Format::Text => output::write_verify_text(ctx.out, &v)?,
        Format::Json => output::write_verify_json(ctx.out, &v)?,
        Format::Csv => output::write_verify_csv(ctx.out, &v)?,
    }
    Ok(total.failed == 0)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, CliError> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let mut ctx = Ctx { cfg, format: cli.format, verbose: cli.verbose, out, err };
    match &cli.config {
        Some(path) => ctx.note(&format!("config: {}", path.display())),
        None => ctx.note("config: defaults"),
    }
    match &cli.command {
        Command::Cosets { q, n } => cmd_cosets(&mut ctx, *q, *n),
        Command::Construct(a) => cmd_construct(&mut ctx, a),
        Command::Table(a) => cmd_table(&mut ctx, a),
        Command::Verify(a) => cmd_verify(&mut ctx, a),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFY_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
