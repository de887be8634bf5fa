//! Run reports: full-precision JSON and a five-decimal CSV table.

use std::io::Write;

use maximin_core::instances::RegionSpec;
use maximin_core::solvers::{Solution, SolverConfig};
use maximin_core::Instance;
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult, Method};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    /// Source file, absent for generated instances.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    pub n: usize,
    pub region: RegionSpec,
    pub region_sides: usize,
}

impl InstanceDescriptor {
    pub fn new(path: Option<String>, inst: &Instance, region: RegionSpec) -> Self {
        Self { path, n: inst.len(), region, region_sides: inst.region().len() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: InstanceDescriptor,
    pub method: Method,
    pub config: SolverConfig,
    pub solution: Solution,
    /// Wall-clock seconds for the whole solve.
    pub wall_time: f64,
}

pub const CSV_HEADER: [&str; 19] = [
    "n",
    "method",
    "region",
    "x",
    "y",
    "objective",
    "phase1_lb",
    "phase1_ub",
    "phase1_remaining",
    "max_queue",
    "iterations",
    "objective_calls",
    "boundary_candidates",
    "triplets",
    "starts",
    "hits",
    "epsilon",
    "seed",
    "elapsed",
];

fn fixed(v: f64) -> String {
    format!("{v:.5}")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

/// One CSV row per report; coordinates, objectives and bounds at 5 decimals.
pub fn write_csv(reports: &[RunReport], w: impl Write) -> CliResult<()> {
    let mut wtr = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
    let err = |e: csv::Error| CliError::Input(e.to_string());
    wtr.write_record(CSV_HEADER).map_err(err)?;
    for r in reports {
        let s = &r.solution;
        let st = &s.stats;
        let region = match r.instance.region {
            RegionSpec::Hull => "hull",
            RegionSpec::Square => "square",
        };
        wtr.write_record([
            r.instance.n.to_string(),
            r.method.name().to_string(),
            region.to_string(),
            fixed(s.location.x),
            fixed(s.location.y),
            fixed(s.objective),
            st.phase1_lb.map_or_else(String::new, fixed),
            st.phase1_ub.map_or_else(String::new, fixed),
            opt(st.phase1_remaining),
            opt(st.max_queue),
            opt(st.iterations),
            opt(st.objective_calls),
            opt(st.boundary_candidates),
            opt(st.triplets),
            opt(st.starts),
            opt(st.hits),
            format!("{:e}", r.config.epsilon),
            r.config.seed.to_string(),
            format!("{:.3}", r.wall_time),
        ])
        .map_err(err)?;
    }
    wtr.flush()?;
    Ok(())
}
