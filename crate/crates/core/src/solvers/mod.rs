//! Global and heuristic solvers.

mod btst;
mod enumeration;
mod heuristic;

use serde::{Deserialize, Serialize};

use crate::apollonius::{solve_triangle, WeightedPoint};
use crate::geom::{Point, Triangle};
use crate::objective::{evaluate, Evaluation, Instance};
use crate::Result;

pub use btst::{btst, BtstVariant, TriangleNode};
pub use enumeration::apollonius_global;
pub use heuristic::{local_ascent, multistart_heuristic, random_starts, HeuristicOutcome, LocalOptimum};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Relative accuracy of the triangle branch and bound, in `(0, 1)`.
    pub epsilon: f64,
    /// Number of random starts of the multi-start heuristic.
    pub starts: usize,
    pub seed: u64,
    /// Worker threads for the candidate and start loops; 0 or 1 runs inline.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { epsilon: 1e-10, starts: 1000, seed: 0, threads: 0 }
    }
}

impl SolverConfig {
    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(crate::Error::Unsupported(format!(
                "epsilon must lie in (0, 1), got {}",
                self.epsilon
            )));
        }
        Ok(())
    }

    /// Runs `f` on a pool of `threads` workers, or inline for fewer than two.
    pub(crate) fn run<R: Send>(&self, f: impl FnOnce(bool) -> R + Send) -> R {
        if self.threads > 1 {
            match rayon::ThreadPoolBuilder::new().num_threads(self.threads).build() {
                Ok(pool) => pool.install(|| f(true)),
                Err(_) => f(false),
            }
        } else {
            f(false)
        }
    }
}

/// Counters reported by the solvers. Fields not produced by a method are `None`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SolverStats {
    /// Best lower bound after scanning the Delaunay triangles.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase1_lb: Option<f64>,
    /// Largest upper bound over the Delaunay triangles.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase1_ub: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase1_remaining: Option<usize>,
    /// Largest number of live triangles during the splitting phase.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_queue: Option<usize>,
    /// Splits performed during the second phase.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objective_calls: Option<u64>,
    /// Pair bisectors times region sides.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_candidates: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triplets: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub starts: Option<usize>,
    /// Starts that reached the reference objective.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hits: Option<usize>,
    /// Wall-clock seconds; excluded from any comparison of results.
    pub elapsed: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub location: Point,
    pub objective: f64,
    pub stats: SolverStats,
}

/// Lower and upper bound of the objective over a triangle, with a point
/// attaining the lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub lb: f64,
    pub ub: f64,
    pub witness: Point,
}

/// Objective at the centroid, and the smallest weighted farthest-vertex distance.
pub fn bounds_set1(t: &Triangle, inst: &Instance) -> Bounds {
    let centroid = t.centroid();
    let lb = inst.value(centroid);
    let v = t.vertices();
    let mut ub_sq = f64::INFINITY;
    for p in inst.points() {
        let far = v
            .iter()
            .map(|q| q.distance_sq(&p.location))
            .fold(0.0, f64::max);
        ub_sq = ub_sq.min(p.weight * p.weight * far);
    }
    Bounds { lb, ub: ub_sq.sqrt(), witness: centroid }
}

/// Bounds from the exact three-vertex solution: its objective over all points
/// (lower) and over the three vertices (upper).
pub fn bounds_set2(vertices: [&WeightedPoint; 3], inst: &Instance) -> Result<Bounds> {
    let s = solve_triangle(vertices[0], vertices[1], vertices[2])?;
    let lb = match evaluate(s.location, inst.points(), None) {
        Evaluation::Value(v) => v,
        Evaluation::Pruned => unreachable!(),
    };
    Ok(Bounds { lb, ub: s.objective, witness: s.location })
}
