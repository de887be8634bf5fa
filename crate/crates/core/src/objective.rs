//! The maximin objective and region membership.

use crate::apollonius::WeightedPoint;
use crate::geom::{Containment, Point};
use crate::mesh::{convex_hull, ConvexPolygon};
use crate::{Error, Result};

/// Relative (to the region diameter) width of the boundary band in [`in_region`].
pub const REGION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionKind {
    /// Convex hull of the demand points.
    Hull,
    /// Any other convex polygon containing the demand points.
    Custom,
}

/// Demand points together with the convex feasible region.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    points: Vec<WeightedPoint>,
    region: ConvexPolygon,
    kind: RegionKind,
}

impl Instance {
    /// Instance whose feasible region is the convex hull of the points.
    pub fn with_hull(points: Vec<WeightedPoint>) -> Result<Self> {
        validate(&points)?;
        let locs: Vec<Point> = points.iter().map(|p| p.location).collect();
        let region = convex_hull(&locs)?;
        Ok(Self { points, region, kind: RegionKind::Hull })
    }

    /// Instance with an explicit region, which must contain every point.
    pub fn with_region(points: Vec<WeightedPoint>, region: ConvexPolygon) -> Result<Self> {
        validate(&points)?;
        if let Some(p) = points.iter().find(|p| in_region(p.location, &region) == Containment::Outside) {
            return Err(Error::PointOutsideRegion { id: p.id });
        }
        Ok(Self { points, region, kind: RegionKind::Custom })
    }

    pub fn points(&self) -> &[WeightedPoint] {
        &self.points
    }

    pub fn region(&self) -> &ConvexPolygon {
        &self.region
    }

    pub fn region_kind(&self) -> RegionKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_weight(&self) -> f64 {
        self.points.iter().map(|p| p.weight).fold(0.0, f64::max)
    }

    /// Shorthand for [`evaluate`] on this instance.
    pub fn evaluate(&self, x: Point, incumbent: Option<f64>) -> Evaluation {
        evaluate(x, &self.points, incumbent)
    }

    /// Exact objective value at `x`.
    pub fn value(&self, x: Point) -> f64 {
        match evaluate(x, &self.points, None) {
            Evaluation::Value(v) => v,
            Evaluation::Pruned => unreachable!("no incumbent supplied"),
        }
    }
}

fn validate(points: &[WeightedPoint]) -> Result<()> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: points.len() });
    }
    for p in points {
        WeightedPoint::new(p.id, p.location, p.weight)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Evaluation {
    Value(f64),
    /// Some weighted distance fell strictly below the incumbent.
    Pruned,
}

impl Evaluation {
    pub fn value(self) -> Option<f64> {
        match self {
            Evaluation::Value(v) => Some(v),
            Evaluation::Pruned => None,
        }
    }
}

/// Minimum weighted distance from `x` to the points.
///
/// With an incumbent, stops at the first weighted distance strictly below it.
#[inline]
pub fn evaluate(x: Point, points: &[WeightedPoint], incumbent: Option<f64>) -> Evaluation {
    let cutoff = incumbent.map_or(f64::NEG_INFINITY, |v| if v > 0.0 { v * v } else { f64::NEG_INFINITY });
    let mut best = f64::INFINITY;
    for p in points {
        let w = p.weight;
        let sq = w * w * x.distance_sq(&p.location);
        if sq < cutoff && sq.sqrt() < incumbent.unwrap_or(f64::NEG_INFINITY) {
            return Evaluation::Pruned;
        }
        if sq < best {
            best = sq;
        }
    }
    Evaluation::Value(best.sqrt())
}

/// Half-plane classification of `x` against every side of `poly`.
pub fn in_region(x: Point, poly: &ConvexPolygon) -> Containment {
    let tol = REGION_TOL * poly.diameter();
    let v = poly.vertices();
    let n = v.len();
    let mut on_side = false;
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        let edge = b - a;
        let dist = edge.cross(&(x - a)) / edge.norm();
        if dist < -tol {
            return Containment::Outside;
        }
        if dist <= tol {
            on_side = true;
        }
    }
    if on_side {
        Containment::OnBoundary
    } else {
        Containment::Inside
    }
}
