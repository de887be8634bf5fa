//! Multi-start local search baseline.
//!
//! Each start runs a pattern search over eight directions with a halving step,
//! projecting trial points onto the region. Pattern search stalls on the
//! ridges of a maximin surface, so every stall is followed by a polishing
//! step that tries the exact local structures formed by the nearest demand
//! points: equidistant points of three of them, and crossings of their pair
//! bisectors with the region sides. Search resumes from any improvement.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Solution, SolverConfig, SolverStats};
use crate::apollonius::bisector_unchecked;
use crate::geom::{Containment, Point};
use crate::objective::{in_region, Instance};

/// Initial pattern step as a fraction of the region diameter.
const INITIAL_STEP: f64 = 0.1;
const MIN_STEP: f64 = 1e-9;
/// Polishing only considers points within this fraction of the diameter.
const POLISH_RADIUS: f64 = 0.05;
const POLISH_NEIGHBORS: usize = 4;
const MAX_POLISH_ROUNDS: usize = 100;
/// Relative tolerance for counting a start as having reached the reference.
pub const HIT_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalOptimum {
    pub location: Point,
    pub objective: f64,
    pub evaluations: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicOutcome {
    pub solution: Solution,
    /// Starts whose local optimum is within [`HIT_TOL`] (relative) of the
    /// reference objective, when one was supplied.
    pub hits: Option<usize>,
}

/// `count` points drawn uniformly from the region by rejection sampling.
pub fn random_starts(inst: &Instance, count: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = inst.region().bounds();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = Point::new(rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y));
        if in_region(p, inst.region()) != Containment::Outside {
            out.push(p);
        }
    }
    out
}

/// Local ascent from `start` (projected onto the region first).
pub fn local_ascent(inst: &Instance, start: Point) -> LocalOptimum {
    const DIRS: [(f64, f64); 8] = [
        (1.0, 0.0),
        (0.0, 1.0),
        (-1.0, 0.0),
        (0.0, -1.0),
        (std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2),
        (-std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2),
        (-std::f64::consts::FRAC_1_SQRT_2, -std::f64::consts::FRAC_1_SQRT_2),
        (std::f64::consts::FRAC_1_SQRT_2, -std::f64::consts::FRAC_1_SQRT_2),
    ];
    let region = inst.region();
    let diam = region.diameter();
    let mut evals = 1u64;
    let mut x = region.project(start);
    let mut fx = inst.value(x);
    let mut step = INITIAL_STEP * diam;

    for _ in 0..MAX_POLISH_ROUNDS {
        while step >= MIN_STEP {
            let mut moved = false;
            for (dx, dy) in DIRS {
                let y = region.project(Point::new(x.x + step * dx, x.y + step * dy));
                let fy = inst.value(y);
                evals += 1;
                if fy > fx {
                    x = y;
                    fx = fy;
                    moved = true;
                    break;
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
        match polish(inst, x, fx, &mut evals) {
            Some((y, fy)) => {
                step = (x.distance(&y)).max(1e3 * MIN_STEP);
                x = y;
                fx = fy;
            }
            None => break,
        }
    }
    LocalOptimum { location: x, objective: fx, evaluations: evals }
}

fn polish(inst: &Instance, x: Point, fx: f64, evals: &mut u64) -> Option<(Point, f64)> {
    let pts = inst.points();
    let region = inst.region();
    let radius = POLISH_RADIUS * region.diameter();

    let mut near: Vec<(f64, usize)> = pts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.weighted_distance(x), i))
        .collect();
    let k = POLISH_NEIGHBORS.min(near.len());
    near.select_nth_unstable_by(k - 1, |a, b| a.0.total_cmp(&b.0));
    let near: Vec<usize> = near[..k].iter().map(|&(_, i)| i).collect();

    let mut candidates = Vec::new();
    let sides = region.sides();
    for (a, &i) in near.iter().enumerate() {
        for &j in &near[a + 1..] {
            let (pi, pj) = (&pts[i], &pts[j]);
            if pi.location == pj.location {
                continue;
            }
            let bij = bisector_unchecked(pi.location, pi.weight, pj.location, pj.weight);
            for side in &sides {
                candidates.extend(bij.intersect_segment(side));
            }
            for &l in &near {
                if l == i || l == j || pts[l].location == pi.location {
                    continue;
                }
                let pl = &pts[l];
                let bil = bisector_unchecked(pi.location, pi.weight, pl.location, pl.weight);
                candidates.extend(bij.intersect(&bil));
            }
        }
    }

    let mut best: Option<(Point, f64)> = None;
    for p in candidates {
        if p.distance(&x) > radius || in_region(p, region) == Containment::Outside {
            continue;
        }
        let v = inst.value(p);
        *evals += 1;
        if v > fx && best.map_or(true, |(_, b)| v > b) {
            best = Some((p, v));
        }
    }
    best
}

/// Runs [`local_ascent`] from `cfg.starts` random feasible points and keeps
/// the best local optimum. The first start wins ties.
pub fn multistart_heuristic(inst: &Instance, cfg: &SolverConfig, reference: Option<f64>) -> HeuristicOutcome {
    let started = Instant::now();
    let starts = random_starts(inst, cfg.starts.max(1), cfg.seed);
    let results: Vec<LocalOptimum> = cfg.run(|parallel| {
        if parallel {
            starts.par_iter().map(|&s| local_ascent(inst, s)).collect()
        } else {
            starts.iter().map(|&s| local_ascent(inst, s)).collect()
        }
    });
    let mut best = results[0];
    for r in &results[1..] {
        if r.objective > best.objective {
            best = *r;
        }
    }
    let hits = reference.map(|target| {
        results
            .iter()
            .filter(|r| (r.objective - target).abs() <= HIT_TOL * target.abs())
            .count()
    });
    HeuristicOutcome {
        solution: Solution {
            location: best.location,
            objective: best.objective,
            stats: SolverStats {
                objective_calls: Some(results.iter().map(|r| r.evaluations).sum()),
                starts: Some(results.len()),
                hits,
                elapsed: started.elapsed().as_secs_f64(),
                ..SolverStats::default()
            },
        },
        hits,
    }
}
