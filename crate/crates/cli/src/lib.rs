//! Command-line front end: generate instances, solve them with any method,
//! reproduce the benchmark tables and draw SVG plots.

pub mod report;
pub mod svg;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maximin_core::instances::{self, generate_points, InstanceSpec, RegionSpec, SQUARE_SIDE};
use maximin_core::mesh::ConvexPolygon;
use maximin_core::solvers::{apollonius_global, btst, multistart_heuristic, BtstVariant, SolverConfig};
use maximin_core::{Instance, WeightedPoint};
use serde::{Deserialize, Serialize};

pub use report::{InstanceDescriptor, RunReport};

/// Environment variable capping solver worker threads (unset or 0: single-threaded).
pub const THREADS_ENV: &str = "MAXIMIN_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Unsupported(String),
}

impl CliError {
    /// Process exit code: 2 usage, 3 input or output, 4 unsupported combination.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Unsupported(_) => 4,
        }
    }
}

impl From<maximin_core::Error> for CliError {
    fn from(e: maximin_core::Error) -> Self {
        match e {
            maximin_core::Error::Unsupported(m) => CliError::Unsupported(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "maximin", version, about = "Weighted obnoxious facility location in the plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the generated benchmark instance with n points as CSV.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve an instance file and print a run report.
    Solve(SolveArgs),
    /// Solve generated instances over a range of sizes and write one CSV row per (n, method).
    Bench(BenchArgs),
    /// Draw an instance, its hull and optionally a solution as SVG.
    Plot(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Btst1,
    Btst2,
    Apollonius,
    Heuristic,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Btst1 => "btst1",
            Method::Btst2 => "btst2",
            Method::Apollonius => "apollonius",
            Method::Heuristic => "heuristic",
        }
    }

    fn is_btst(self) -> bool {
        matches!(self, Method::Btst1 | Method::Btst2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Region {
    Hull,
    Square,
}

impl From<Region> for RegionSpec {
    fn from(r: Region) -> Self {
        match r {
            Region::Hull => RegionSpec::Hull,
            Region::Square => RegionSpec::Square,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Relative accuracy of the triangle branch and bound.
    #[arg(long, default_value_t = 1e-10)]
    pub epsilon: f64,
    /// Random starts of the heuristic.
    #[arg(long, default_value_t = 1000)]
    pub starts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Instance CSV with header id,x,y,w.
    pub instance: PathBuf,
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long, value_enum, default_value = "hull")]
    pub region: Region,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Known optimum; the heuristic then counts the starts that reach it.
    #[arg(long)]
    pub reference: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Sizes: a single value or an inclusive range `lo..hi`.
    #[arg(long, value_parser = parse_sizes)]
    pub n: (usize, usize),
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub step: u64,
    /// Comma-separated methods.
    #[arg(long, value_enum, value_delimiter = ',', required = true, num_args = 1..)]
    pub method: Vec<Method>,
    #[arg(long, value_enum, default_value = "hull")]
    pub region: Region,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    pub instance: PathBuf,
    /// JSON run report whose optimum is marked.
    #[arg(long)]
    pub solution: Option<PathBuf>,
    /// Draw the Delaunay triangulation.
    #[arg(long)]
    pub delaunay: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_sizes(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("invalid size `{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo < 3 || hi < lo {
        return Err(format!("sizes must satisfy 3 <= lo <= hi, got {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Worker threads from [`THREADS_ENV`].
pub fn threads_from_env() -> CliResult<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a non-negative integer, got `{v}`"))),
        _ => Ok(0),
    }
}

fn solver_config(args: &SolverArgs) -> CliResult<SolverConfig> {
    if !(args.epsilon > 0.0 && args.epsilon < 1.0) {
        return Err(CliError::Usage(format!("--epsilon must lie in (0, 1), got {}", args.epsilon)));
    }
    if args.starts == 0 {
        return Err(CliError::Usage("--starts must be at least 1".into()));
    }
    Ok(SolverConfig { epsilon: args.epsilon, starts: args.starts, seed: args.seed, threads: threads_from_env()? })
}

fn build_instance(points: Vec<WeightedPoint>, region: Region) -> CliResult<Instance> {
    Ok(match region {
        Region::Hull => Instance::with_hull(points)?,
        Region::Square => Instance::with_region(points, ConvexPolygon::square(0.0, SQUARE_SIDE)?)?,
    })
}

fn check_combination(method: Method, region: Region) -> CliResult<()> {
    if method.is_btst() && region == Region::Square {
        return Err(CliError::Unsupported(format!(
            "method {} requires --region hull; the square region is supported by apollonius and heuristic",
            method.name()
        )));
    }
    Ok(())
}

/// Runs one method and wraps the result in a report.
pub fn solve_instance(
    inst: &Instance,
    descriptor: InstanceDescriptor,
    method: Method,
    config: &SolverConfig,
    reference: Option<f64>,
) -> CliResult<RunReport> {
    let started = Instant::now();
    let solution = match method {
        Method::Btst1 => btst(inst, BtstVariant::Btst1, config)?,
        Method::Btst2 => btst(inst, BtstVariant::Btst2, config)?,
        Method::Apollonius => apollonius_global(inst, config),
        Method::Heuristic => multistart_heuristic(inst, config, reference).solution,
    };
    Ok(RunReport {
        instance: descriptor,
        method,
        config: config.clone(),
        solution,
        wall_time: started.elapsed().as_secs_f64(),
    })
}

fn output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::Input(format!("cannot write {}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_points(path: &Path) -> CliResult<Vec<WeightedPoint>> {
    let file = File::open(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    instances::read_points(io::BufReader::new(file))
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Generate { n, out } => {
            let points = generate_points(&InstanceSpec::new(n as usize))?;
            let mut w = output(out.as_deref())?;
            instances::write_points(&points, &mut w)?;
            w.flush()?;
            Ok(())
        }
        Command::Solve(args) => cmd_solve(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Plot(args) => cmd_plot(args),
    }
}

fn cmd_solve(args: SolveArgs) -> CliResult<()> {
    check_combination(args.method, args.region)?;
    let config = solver_config(&args.solver)?;
    let points = read_points(&args.instance)?;
    let inst = build_instance(points, args.region)?;
    let descriptor = InstanceDescriptor::new(Some(args.instance.display().to_string()), &inst, args.region.into());
    let report = solve_instance(&inst, descriptor, args.method, &config, args.reference)?;
    let mut w = output(args.out.as_deref())?;
    match args.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &report).map_err(|e| CliError::Input(e.to_string()))?;
            writeln!(w)?;
        }
        Format::Csv => report::write_csv(std::slice::from_ref(&report), &mut w)?,
    }
    w.flush()?;
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> CliResult<()> {
    for &m in &args.method {
        check_combination(m, args.region)?;
    }
    let config = solver_config(&args.solver)?;
    let (lo, hi) = args.n;
    let mut rows = Vec::new();
    for n in (lo..=hi).step_by(args.step as usize) {
        let spec = InstanceSpec::new(n).with_region(args.region.into());
        let inst = instances::generate(&spec)?;
        let descriptor = InstanceDescriptor::new(None, &inst, args.region.into());
        let mut reference = None;
        for &m in &args.method {
            let report = solve_instance(&inst, descriptor.clone(), m, &config, reference)?;
            if m != Method::Heuristic {
                reference = Some(report.solution.objective);
            }
            rows.push(report);
        }
    }
    let mut w = output(args.out.as_deref())?;
    report::write_csv(&rows, &mut w)?;
    w.flush()?;
    Ok(())
}

fn cmd_plot(args: PlotArgs) -> CliResult<()> {
    let points = read_points(&args.instance)?;
    let solution = match &args.solution {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Input(format!("cannot read solution {}: {e}", p.display())))?;
            let report: RunReport = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            Some(report)
        }
        None => None,
    };
    let region = solution.as_ref().map_or(RegionSpec::Hull, |r| r.instance.region);
    let inst = build_instance(
        points,
        match region {
            RegionSpec::Hull => Region::Hull,
            RegionSpec::Square => Region::Square,
        },
    )?;
    let doc = svg::render(&inst, solution.as_ref().map(|r| &r.solution), args.delaunay)?;
    let mut w = output(args.out.as_deref())?;
    w.write_all(doc.as_bytes())?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_single_and_range() {
        assert_eq!(parse_sizes("100"), Ok((100, 100)));
        assert_eq!(parse_sizes("100..1000"), Ok((100, 1000)));
        assert_eq!(parse_sizes("3..=5"), Ok((3, 5)));
        assert!(parse_sizes("2").is_err());
        assert!(parse_sizes("500..100").is_err());
        assert!(parse_sizes("a..b").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
        assert_eq!(CliError::Input(String::new()).exit_code(), 3);
        assert_eq!(CliError::Unsupported(String::new()).exit_code(), 4);
    }

    #[test]
    fn btst_rejects_square_region() {
        assert!(matches!(check_combination(Method::Btst1, Region::Square), Err(CliError::Unsupported(_))));
        assert!(check_combination(Method::Btst2, Region::Hull).is_ok());
        assert!(check_combination(Method::Heuristic, Region::Square).is_ok());
    }

    #[test]
    fn solver_config_validation() {
        let args = SolverArgs { epsilon: 1e-10, starts: 10, seed: 1 };
        assert!(solver_config(&args).is_ok());
        assert!(solver_config(&SolverArgs { epsilon: 1.0, ..args.clone() }).is_err());
        assert!(solver_config(&SolverArgs { starts: 0, ..args }).is_err());
    }
}
