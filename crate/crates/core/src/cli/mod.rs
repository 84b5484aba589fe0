//! Command-line front end: `compute`, `chambers`, `table`, `verify`.
//!
//! Exit codes: 0 on success (and when every check passes), 1 on an
//! internal inconsistency or a failed check, 2 on invalid parameters.

mod cache;
mod record;

pub use cache::{Cache, CACHE_ENV, SCHEMA_VERSION};
pub use record::{latex_poly, latex_univariate, OutputRecord, PoincareTerm, Request, Term};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::blocks::Genus;
use crate::laurent::rational_string;
use crate::triples::{
    chamber_d0, chamber_representatives, critical_values, hodge_bundles_odd, hodge_pairs,
    hodge_triples_closed, pair_chamber_representatives, sigma_interval, tau_floor, HodgeResult,
    RankPair, StabilityValue, TripleSpec, TriplesError,
};
use crate::verify::{run_suite, D1Range, Grid, CHECKS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hodge",
    version,
    about = "Exact Hodge polynomials of moduli of pairs, triples and rank-2 bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one Hodge polynomial.
    Compute(ComputeArgs),
    /// List the σ-interval, its walls, and a representative of each chamber.
    Chambers(ChambersArgs),
    /// Sweep parameter ranges, one record per (parameters, chamber).
    Table(TableArgs),
    /// Run the invariant suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Triple,
    Pair,
    PairFixed,
    Bundle,
    BundleFixed,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::Triple => "triple",
            Target::Pair => "pair",
            Target::PairFixed => "pair-fixed",
            Target::Bundle => "bundle",
            Target::BundleFixed => "bundle-fixed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComputeFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    JsonLines,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub target: Target,
    #[arg(long, allow_hyphen_values = true)]
    pub genus: i64,
    /// Degree for pairs and bundles.
    #[arg(long, allow_hyphen_values = true)]
    pub degree: Option<i64>,
    #[arg(long, default_value = "2,1")]
    pub rank: RankPair,
    #[arg(long, allow_hyphen_values = true)]
    pub d1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d2: Option<i64>,
    /// σ for triples: `p`, `p/q`, or a wall with `+`/`-`.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// τ for pairs: `p`, `p/q`, or a wall with `+`/`-`.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ComputeFormat,
    /// Also report the Poincaré polynomial `e(t, t)`.
    #[arg(long)]
    pub poincare: bool,
}

#[derive(Debug, Args)]
pub struct ChambersArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub genus: i64,
    #[arg(long, default_value = "2,1")]
    pub rank: RankPair,
    #[arg(long, allow_hyphen_values = true)]
    pub d1: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub d2: i64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub target: Target,
    /// Genus range, e.g. `2`, `2..4`, `2,3`.
    #[arg(long, allow_hyphen_values = true)]
    pub genus: String,
    #[arg(long, allow_hyphen_values = true)]
    pub degree: Option<String>,
    #[arg(long, default_value = "2,1")]
    pub rank: RankPair,
    #[arg(long, allow_hyphen_values = true)]
    pub d1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d2: Option<String>,
    #[arg(long, value_enum, default_value = "json-lines")]
    pub format: TableFormat,
    #[arg(long)]
    pub poincare: bool,
    /// Cache file; defaults to the `HODGE_CACHE` environment variable.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "g", allow_hyphen_values = true, default_value = "2..3")]
    pub genera: String,
    /// Absolute `d1` values; overrides `--d1-offset`.
    #[arg(long, allow_hyphen_values = true)]
    pub d1: Option<String>,
    /// `d1 = 2 d2 + k` for each `k`.
    #[arg(long, allow_hyphen_values = true, default_value = "1..8")]
    pub d1_offset: String,
    #[arg(long, allow_hyphen_values = true, default_value = "-2..0")]
    pub d2: String,
    /// Comma-separated subset of checks.
    #[arg(long)]
    pub checks: Option<String>,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub random_cases: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
    /// Only print failures and the summary.
    #[arg(long)]
    pub quiet: bool,
    /// Deliberately fail the named check.
    #[arg(long, hide = true)]
    pub inject_fault: Option<String>,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<TriplesError> for CliError {
    fn from(e: TriplesError) -> Self {
        let code = if e.is_internal() {
            EXIT_INTERNAL
        } else {
            EXIT_USAGE
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses arguments and runs the command; returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(diag, "{}", e.render());
            return e.exit_code();
        }
    };
    match run(&cli, out, diag) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(diag, "error: {}", e.message);
            if e.code == EXIT_USAGE {
                let _ = writeln!(diag, "see `hodge --help` for usage");
            }
            e.code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, diag: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Compute(a) => compute(a, out).map(|_| EXIT_OK),
        Command::Chambers(a) => chambers(a, out).map(|_| EXIT_OK),
        Command::Table(a) => table(a, out, diag).map(|_| EXIT_OK),
        Command::Verify(a) => verify(a, out),
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError {
        code: EXIT_INTERNAL,
        message: format!("write failed: {e}"),
    }
}

fn parse_stability(flag: &str, s: &Option<String>) -> Result<StabilityValue, CliError> {
    let s = s
        .as_deref()
        .ok_or_else(|| CliError::usage(format!("--{flag} is required for this target")))?;
    s.parse()
        .map_err(|e| CliError::usage(format!("--{flag}: {e}")))
}

fn require(flag: &str, v: Option<i64>) -> Result<i64, CliError> {
    v.ok_or_else(|| CliError::usage(format!("--{flag} is required for this target")))
}

/// One evaluation request, fully resolved.
#[derive(Clone, Debug)]
struct Job {
    target: Target,
    g: Genus,
    rank: RankPair,
    d1: i64,
    d2: i64,
    degree: i64,
    stability: Option<StabilityValue>,
}

impl Job {
    fn chamber(&self) -> Result<Option<i64>, TriplesError> {
        let Some(s) = &self.stability else {
            return Ok(None);
        };
        match self.target {
            Target::Triple => {
                let spec = TripleSpec {
                    g: self.g,
                    rank: self.rank,
                    d1: self.d1,
                    d2: self.d2,
                };
                chamber_d0(&spec, s).map(|c| Some(c.d0))
            }
            _ => Ok(tau_floor(self.degree, s)?.map(|f| f + 1)),
        }
    }

    fn request(&self) -> Result<Request, TriplesError> {
        let d0 = self.chamber()?;
        let mut r = Request {
            target: self.target.name().to_string(),
            g: self.g.as_i64(),
            rank: None,
            d1: None,
            d2: None,
            degree: None,
            sigma: None,
            tau: None,
            d0,
        };
        match self.target {
            Target::Triple => {
                r.rank = Some(self.rank.to_string());
                r.d1 = Some(self.d1);
                r.d2 = Some(self.d2);
                r.sigma = self.stability.as_ref().map(|s| s.to_string());
            }
            Target::Pair | Target::PairFixed => {
                r.degree = Some(self.degree);
                r.tau = self.stability.as_ref().map(|s| s.to_string());
            }
            Target::Bundle | Target::BundleFixed => r.degree = Some(self.degree),
        }
        Ok(r)
    }

    fn cache_key(&self, d0: Option<i64>) -> String {
        let degrees = match self.target {
            Target::Triple => format!("rank={}|d1={}|d2={}", self.rank, self.d1, self.d2),
            _ => format!("d={}", self.degree),
        };
        let chamber = d0.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
        format!(
            "{}|g={}|{}|d0={}",
            self.target.name(),
            self.g,
            degrees,
            chamber
        )
    }

    fn evaluate(&self) -> Result<HodgeResult, TriplesError> {
        let s = self.stability.as_ref();
        match self.target {
            Target::Triple => {
                let spec = TripleSpec {
                    g: self.g,
                    rank: self.rank,
                    d1: self.d1,
                    d2: self.d2,
                };
                hodge_triples_closed(&spec, s.expect("triples carry sigma"))
            }
            Target::Pair => hodge_pairs(self.g, self.degree, s.expect("pairs carry tau"), false),
            Target::PairFixed => {
                hodge_pairs(self.g, self.degree, s.expect("pairs carry tau"), true)
            }
            Target::Bundle => hodge_bundles_odd(self.g, self.degree, false),
            Target::BundleFixed => hodge_bundles_odd(self.g, self.degree, true),
        }
    }

    fn record(&self, with_poincare: bool) -> Result<OutputRecord, TriplesError> {
        Ok(OutputRecord::new(
            self.request()?,
            &self.evaluate()?,
            with_poincare,
        ))
    }
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = Genus::new(a.genus).map_err(TriplesError::from)?;
    let mut job = Job {
        target: a.target,
        g,
        rank: a.rank,
        d1: 0,
        d2: 0,
        degree: 0,
        stability: None,
    };
    match a.target {
        Target::Triple => {
            job.d1 = require("d1", a.d1)?;
            job.d2 = require("d2", a.d2)?;
            job.stability = Some(parse_stability("sigma", &a.sigma)?);
        }
        Target::Pair | Target::PairFixed => {
            job.degree = require("degree", a.degree)?;
            job.stability = Some(parse_stability("tau", &a.tau)?);
        }
        Target::Bundle | Target::BundleFixed => job.degree = require("degree", a.degree)?,
    }
    let record = job.record(a.poincare)?;
    let text = match a.format {
        ComputeFormat::Text => record.to_text(),
        ComputeFormat::Json => record.to_json(),
        ComputeFormat::Latex => record.to_latex(),
    };
    writeln!(out, "{text}").map_err(io_err)
}

fn chambers(a: &ChambersArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = TripleSpec::new(a.genus, a.rank, a.d1, a.d2)?;
    let walls = critical_values(&spec)?;
    let (lo, hi) = sigma_interval(&spec).expect("nonempty once walls exist");
    let s = rational_string;
    let mut text = format!(
        "family: rank {}, g={}, d1={}, d2={}\ninterval: [{}, {}]\n",
        spec.rank,
        spec.g,
        spec.d1,
        spec.d2,
        s(&lo),
        s(&hi)
    );
    for w in &walls {
        let tag = if w.sigma == lo { " (sigma_m)" } else { "" };
        text.push_str(&format!(
            "wall: sigma_c={} d_M={}{}\n",
            s(&w.sigma),
            w.d_m,
            tag
        ));
    }
    let reps = chamber_representatives(&spec)?;
    let mut lower = lo.clone();
    for (rep, w) in reps.iter().zip(walls.iter().filter(|w| w.sigma > lo)) {
        let d0 = chamber_d0(&spec, &StabilityValue::exact(rep.clone()))?.d0;
        text.push_str(&format!(
            "chamber: ({}, {}) d0={} representative={}\n",
            s(&lower),
            s(&w.sigma),
            d0,
            s(rep)
        ));
        lower = w.sigma.clone();
    }
    write!(out, "{text}").map_err(io_err)
}

/// Parses `a`, `a..b` (inclusive), or `a,b,c`.
pub fn parse_range(s: &str) -> Result<Vec<i64>, String> {
    let bad = || format!("cannot parse range {s:?}; use a, a..b, or a,b,c");
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect()
}

fn table_jobs(a: &TableArgs) -> Result<Vec<Job>, CliError> {
    let range = |flag: &str, v: &Option<String>| -> Result<Vec<i64>, CliError> {
        let v = v
            .as_deref()
            .ok_or_else(|| CliError::usage(format!("--{flag} is required for this target")))?;
        parse_range(v).map_err(CliError::usage)
    };
    let genera = parse_range(&a.genus).map_err(CliError::usage)?;
    let mut jobs = Vec::new();
    for g in genera {
        let g = Genus::new(g).map_err(TriplesError::from)?;
        let base = Job {
            target: a.target,
            g,
            rank: a.rank,
            d1: 0,
            d2: 0,
            degree: 0,
            stability: None,
        };
        match a.target {
            Target::Triple => {
                for d1 in range("d1", &a.d1)? {
                    for d2 in range("d2", &a.d2)? {
                        let spec = TripleSpec {
                            g,
                            rank: a.rank,
                            d1,
                            d2,
                        };
                        let Ok(reps) = chamber_representatives(&spec) else {
                            continue;
                        };
                        for sigma in reps {
                            jobs.push(Job {
                                d1,
                                d2,
                                stability: Some(StabilityValue::exact(sigma)),
                                ..base.clone()
                            });
                        }
                    }
                }
            }
            Target::Pair | Target::PairFixed => {
                for d in range("degree", &a.degree)? {
                    for tau in pair_chamber_representatives(d) {
                        jobs.push(Job {
                            degree: d,
                            stability: Some(StabilityValue::exact(tau)),
                            ..base.clone()
                        });
                    }
                }
            }
            Target::Bundle | Target::BundleFixed => {
                for d in range("degree", &a.degree)?
                    .into_iter()
                    .filter(|d| d.rem_euclid(2) == 1)
                {
                    jobs.push(Job {
                        degree: d,
                        ..base.clone()
                    });
                }
            }
        }
    }
    Ok(jobs)
}

fn table(a: &TableArgs, out: &mut dyn Write, diag: &mut dyn Write) -> Result<(), CliError> {
    let jobs = table_jobs(a)?;
    let path = a
        .cache
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let mut cache = match &path {
        Some(p) => Cache::open(p, diag),
        None => Cache::disabled(),
    };

    // Cached entries are stored with the Poincaré polynomial and the
    // request echo of the run that produced them.
    let resolved: Vec<(String, Option<OutputRecord>, Request)> = jobs
        .iter()
        .map(|job| {
            let request = job.request()?;
            let key = job.cache_key(request.d0);
            let hit = cache.get(&key).cloned();
            Ok((key, hit, request))
        })
        .collect::<Result<_, TriplesError>>()?;
    let computed: Vec<Option<OutputRecord>> = jobs
        .par_iter()
        .zip(resolved.par_iter())
        .map(|(job, (_, hit, _))| match hit {
            Some(_) => Ok(None),
            None => job.record(true).map(Some),
        })
        .collect::<Result<_, TriplesError>>()?;

    let mut lines = Vec::with_capacity(jobs.len());
    for ((key, hit, request), fresh) in resolved.into_iter().zip(computed) {
        let full = match (hit, fresh) {
            (Some(h), _) => h,
            (None, Some(f)) => {
                cache.insert(key, f.clone());
                f
            }
            (None, None) => unreachable!(),
        };
        let mut record = OutputRecord { request, ..full };
        if !a.poincare {
            record.poincare = None;
        }
        lines.push(match a.format {
            TableFormat::JsonLines => record.to_json(),
            TableFormat::Csv => record.to_csv(),
            TableFormat::Latex => record.to_latex_row(),
        });
    }
    if let Err(e) = cache.flush() {
        let _ = writeln!(diag, "warning: cannot write cache: {e}");
    }

    let mut text = String::new();
    if a.format == TableFormat::Csv && !lines.is_empty() {
        text.push_str(OutputRecord::CSV_HEADER);
        text.push('\n');
    }
    for l in lines {
        text.push_str(&l);
        text.push('\n');
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let usage = CliError::usage;
    let checks = match &a.checks {
        None => None,
        Some(list) => {
            let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            if let Some(bad) = names.iter().find(|n| !CHECKS.contains(&n.as_str())) {
                return Err(usage(format!(
                    "unknown check {bad:?}; known checks: {}",
                    CHECKS.join(", ")
                )));
            }
            Some(names)
        }
    };
    let genera = parse_range(&a.genera).map_err(usage)?;
    if let Some(g) = genera.iter().find(|g| **g < 2) {
        return Err(usage(format!(
            "genus {g} is out of range; curves of genus at least 2 are required"
        )));
    }
    let d1 = match &a.d1 {
        Some(r) => D1Range::Absolute(parse_range(r).map_err(usage)?),
        None => D1Range::Offset(parse_range(&a.d1_offset).map_err(usage)?),
    };
    let grid = Grid {
        genera,
        d1,
        d2: parse_range(&a.d2).map_err(usage)?,
        checks,
        seed: a.seed,
        random_cases: a.random_cases,
        inject_fault: a.inject_fault.clone(),
    };
    let report = run_suite(&grid);
    let mut text = String::new();
    for r in &report.reports {
        if a.quiet && r.passed() {
            continue;
        }
        match a.format {
            ReportFormat::Text => text.push_str(&r.to_string()),
            ReportFormat::Json => {
                text.push_str(&serde_json::to_string(r).expect("reports serialize"))
            }
        }
        text.push('\n');
    }
    let s = report.summary;
    match a.format {
        ReportFormat::Text => text.push_str(&format!(
            "summary: {} checks, {} passed, {} failed (seed {})\n",
            s.total, s.passed, s.failed, report.seed
        )),
        ReportFormat::Json => {
            text.push_str(&serde_json::json!({"summary": s, "seed": report.seed}).to_string());
            text.push('\n');
        }
    }
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut diag = Vec::new();
        let code = run_from(
            std::iter::once("hodge").chain(args.iter().copied()),
            &mut out,
            &mut diag,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(diag).unwrap(),
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_range("-2..0").unwrap(), vec![-2, -1, 0]);
        assert_eq!(parse_range("4").unwrap(), vec![4]);
        assert_eq!(parse_range("1,5").unwrap(), vec![1, 5]);
        assert_eq!(parse_range("3..1").unwrap(), Vec::<i64>::new());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn compute_triple_text_and_json() {
        let (code, out, _) = run_args(&[
            "compute", "triple", "--genus", "2", "--d1", "2", "--d2", "0", "--sigma", "3",
        ]);
        assert_eq!(code, 0);
        assert!(out.trim_end().ends_with("(uv)^6"));
        let (code, out, _) = run_args(&[
            "compute", "triple", "--genus", "2", "--d1", "5", "--d2", "0", "--sigma", "7+",
            "--format", "json",
        ]);
        assert_eq!(code, 0);
        let rec: OutputRecord = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(rec.request.d0, Some(5));
        assert_eq!(rec.request.sigma.as_deref(), Some("7+"));
        assert_eq!(rec.dim, Some(9));
    }

    #[test]
    fn missing_and_bad_parameters() {
        let (code, _, err) = run_args(&["compute", "pair", "--genus", "2", "--degree", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--tau is required"));
        let (code, _, _) = run_args(&[
            "compute", "pair", "--genus", "1", "--degree", "1", "--tau", "3/4",
        ]);
        assert_eq!(code, 2);
        let (code, _, _) = run_args(&["compute", "bundle", "--genus", "2", "--degree", "2"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_args(&["compute", "nonsense", "--genus", "2"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_args(&["verify", "--checks", "nope"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn chambers_listing() {
        let (code, out, _) = run_args(&["chambers", "--genus", "2", "--d1", "5", "--d2", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("interval: [5/2, 10]"));
        assert!(out.contains("wall: sigma_c=4 d_M=3"));
        assert!(out.contains("wall: sigma_c=10 d_M=5"));
        assert!(out.contains("chamber: (7, 10) d0=5 representative=17/2"));
        let (code, _, err) = run_args(&["chambers", "--genus", "2", "--d1", "0", "--d2", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("moduli empty: mu1 < mu2"));
    }

    #[test]
    fn verify_subset_and_fault() {
        let (code, out, _) = run_args(&[
            "verify",
            "--checks",
            "cross-pipeline",
            "--g",
            "2",
            "--d1",
            "1..4",
            "--d2",
            "0",
            "--quiet",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("0 failed"));
        let (code, out, _) = run_args(&[
            "verify",
            "--checks",
            "poincare-univariate",
            "--g",
            "2",
            "--d1",
            "3",
            "--d2",
            "0",
            "--inject-fault",
            "poincare-univariate",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL poincare-univariate"));
    }
}
