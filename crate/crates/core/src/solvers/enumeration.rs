//! Apollonius candidate enumeration.
//!
//! The optimum is either where a pair bisector crosses a side of the region,
//! or an equidistant point of three demand points lying inside their triangle.
//! Every such candidate is evaluated, abandoning an evaluation as soon as a
//! weighted distance drops below the best value found so far.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{Solution, SolverConfig, SolverStats};
use crate::apollonius::{bisector_unchecked, interior_equidistant, Bisector};
use crate::geom::{Containment, Point};
use crate::objective::{evaluate, in_region, Evaluation, Instance, RegionKind};

/// Best candidate so far; `key` orders candidates for tie-breaking.
#[derive(Debug, Clone, Copy)]
struct Best {
    value: f64,
    location: Point,
    key: (u8, usize, usize, usize, usize),
}

impl Best {
    const NONE: Best = Best {
        value: f64::NEG_INFINITY,
        location: Point::new(f64::NAN, f64::NAN),
        key: (u8::MAX, 0, 0, 0, 0),
    };

    fn better(self, other: Best) -> Best {
        match self.value.total_cmp(&other.value) {
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Less => other,
            std::cmp::Ordering::Equal if self.key <= other.key => self,
            std::cmp::Ordering::Equal => other,
        }
    }
}

/// Non-negative incumbent shared between workers; non-negative `f64` bit
/// patterns order like the values.
struct SharedIncumbent(AtomicU64);

impl SharedIncumbent {
    fn new() -> Self {
        Self(AtomicU64::new(0f64.to_bits()))
    }

    fn get(&self) -> f64 {
        f64::from_bits(self.0.load(Ordering::Relaxed))
    }

    fn raise(&self, v: f64) {
        if v > 0.0 {
            self.0.fetch_max(v.to_bits(), Ordering::Relaxed);
        }
    }
}

struct Tally {
    best: Best,
    calls: u64,
}

impl Tally {
    fn new() -> Self {
        Self { best: Best::NONE, calls: 0 }
    }

    fn consider(&mut self, p: Point, key: (u8, usize, usize, usize, usize), inst: &Instance, inc: &SharedIncumbent) {
        self.calls += 1;
        if let Evaluation::Value(v) = evaluate(p, inst.points(), Some(inc.get())) {
            self.best = self.best.better(Best { value: v, location: p, key });
            inc.raise(v);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.best = self.best.better(other.best);
        self.calls += other.calls;
        self
    }
}

/// Exact global optimum over any convex region containing the points.
pub fn apollonius_global(inst: &Instance, cfg: &SolverConfig) -> Solution {
    let start = Instant::now();
    let pts = inst.points();
    let n = pts.len();
    let sides = inst.region().sides();
    let custom = inst.region_kind() == RegionKind::Custom;
    let inc = SharedIncumbent::new();
    let mut tally = Tally::new();

    // Region corners are only candidates when they are not demand points.
    if custom {
        for (s, v) in inst.region().vertices().iter().enumerate() {
            tally.consider(*v, (0, s, 0, 0, 0), inst, &inc);
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&pts[i], &pts[j]);
            if a.location == b.location {
                continue;
            }
            let bis = bisector_unchecked(a.location, a.weight, b.location, b.weight);
            for (s, side) in sides.iter().enumerate() {
                for (m, p) in bis.intersect_segment(side).into_iter().enumerate() {
                    tally.consider(p, (1, i, j, s, m), inst, &inc);
                }
            }
        }
    }

    // Triplets are visited in ascending weight so the first vertex of each
    // triple is the lightest one and both bisectors come from its row.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| pts[a].weight.total_cmp(&pts[b].weight).then(a.cmp(&b)));

    let row = |r: usize| -> Tally {
        let mut t = Tally::new();
        let i = order[r];
        let pi = &pts[i];
        let bisectors: Vec<Option<Bisector>> = order
            .iter()
            .map(|&j| {
                let pj = &pts[j];
                (pj.location != pi.location)
                    .then(|| bisector_unchecked(pi.location, pi.weight, pj.location, pj.weight))
            })
            .collect();
        for s in r + 1..n {
            let Some(bj) = &bisectors[s] else { continue };
            let pj = pts[order[s]].location;
            for u in s + 1..n {
                let Some(bk) = &bisectors[u] else { continue };
                let pk = pts[order[u]].location;
                let Some(p) = interior_equidistant(bj, bk, [pi.location, pj, pk]) else {
                    continue;
                };
                if custom && in_region(p, inst.region()) == Containment::Outside {
                    continue;
                }
                let key = (2, r, s, u, 0);
                if pi.weighted_distance(p) < inc.get() {
                    continue;
                }
                t.consider(p, key, inst, &inc);
            }
        }
        t
    };

    let triplets = cfg.run(|parallel| {
        if parallel {
            (0..n).into_par_iter().map(row).reduce(Tally::new, Tally::merge)
        } else {
            (0..n).map(row).fold(Tally::new(), Tally::merge)
        }
    });
    let tally = tally.merge(triplets);

    let n64 = n as u64;
    let pairs = n64 * n64.saturating_sub(1) / 2;
    Solution {
        location: tally.best.location,
        objective: tally.best.value,
        stats: SolverStats {
            objective_calls: Some(tally.calls),
            boundary_candidates: Some(pairs * sides.len() as u64),
            triplets: Some(pairs * n64.saturating_sub(2) / 3),
            elapsed: start.elapsed().as_secs_f64(),
            ..SolverStats::default()
        },
    }
}
