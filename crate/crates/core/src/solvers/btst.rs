//! Big Triangle Small Triangle branch and bound over the Delaunay triangles.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{bounds_set1, bounds_set2, Bounds, Solution, SolverConfig, SolverStats};
use crate::geom::{Point, Triangle};
use crate::mesh::{delaunay, split_triangle};
use crate::objective::{Instance, RegionKind};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BtstVariant {
    /// Centroid / farthest-vertex bounds throughout.
    Btst1,
    /// Exact three-point bounds on the Delaunay triangles, then as `Btst1`.
    Btst2,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleNode {
    pub triangle: Triangle,
    pub lb: f64,
    pub ub: f64,
    pub demand_vertices: bool,
}

/// Heap entry: largest `ub` first, older entries first among equals.
struct Queued {
    node: TriangleNode,
    seq: u64,
}

impl PartialEq for Queued {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Queued {}

impl PartialOrd for Queued {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Queued {
    fn cmp(&self, other: &Self) -> Ordering {
        self.node.ub.total_cmp(&other.node.ub).then_with(|| other.seq.cmp(&self.seq))
    }
}

struct Incumbent {
    value: f64,
    location: Point,
}

impl Incumbent {
    fn offer(&mut self, b: &Bounds) -> bool {
        if b.lb > self.value {
            self.value = b.lb;
            self.location = b.witness;
            true
        } else {
            false
        }
    }
}

/// Solves over the convex hull to relative accuracy `cfg.epsilon`.
pub fn btst(inst: &Instance, variant: BtstVariant, cfg: &SolverConfig) -> Result<Solution> {
    cfg.validate()?;
    if inst.region_kind() != RegionKind::Hull {
        return Err(Error::Unsupported(
            "triangle branch and bound requires the convex hull as region".into(),
        ));
    }
    let start = Instant::now();
    let eps = cfg.epsilon;
    let mut calls = 0u64;
    let tri = delaunay(inst.points())?;
    let pts = inst.points();

    let mut best = Incumbent { value: f64::NEG_INFINITY, location: pts[0].location };
    let mut nodes = Vec::with_capacity(tri.len());
    for (k, &[a, b, c]) in tri.indices().iter().enumerate() {
        let bounds = match variant {
            BtstVariant::Btst1 => bounds_set1(&tri.triangle(k), inst),
            BtstVariant::Btst2 => bounds_set2([&pts[a], &pts[b], &pts[c]], inst)?,
        };
        calls += 1;
        best.offer(&bounds);
        nodes.push(TriangleNode {
            triangle: tri.triangle(k),
            lb: bounds.lb,
            ub: bounds.ub,
            demand_vertices: true,
        });
    }
    let phase1_lb = best.value;
    let phase1_ub = nodes.iter().map(|n| n.ub).fold(f64::NEG_INFINITY, f64::max);
    let mut threshold = best.value * (1.0 + eps);

    let mut seq = 0u64;
    let mut heap: BinaryHeap<Queued> = nodes
        .into_iter()
        .filter(|n| n.ub > threshold)
        .map(|node| {
            seq += 1;
            Queued { node, seq }
        })
        .collect();
    let phase1_remaining = heap.len();
    let mut max_queue = heap.len();
    let mut iterations = 0u64;

    while let Some(Queued { node, .. }) = heap.pop() {
        if node.ub <= threshold {
            break;
        }
        iterations += 1;
        let mut raised = false;
        for child in split_triangle(&node.triangle) {
            let b = bounds_set1(&child, inst);
            calls += 1;
            if best.offer(&b) {
                threshold = best.value * (1.0 + eps);
                raised = true;
            }
            if b.ub > threshold {
                seq += 1;
                heap.push(Queued {
                    node: TriangleNode { triangle: child, lb: b.lb, ub: b.ub, demand_vertices: false },
                    seq,
                });
            }
        }
        if raised {
            heap.retain(|q| q.node.ub > threshold);
        }
        max_queue = max_queue.max(heap.len());
    }

    Ok(Solution {
        location: best.location,
        objective: inst.value(best.location),
        stats: SolverStats {
            phase1_lb: Some(phase1_lb),
            phase1_ub: Some(phase1_ub),
            phase1_remaining: Some(phase1_remaining),
            max_queue: Some(max_queue),
            iterations: Some(iterations),
            objective_calls: Some(calls),
            elapsed: start.elapsed().as_secs_f64(),
            ..SolverStats::default()
        },
    })
}
