//! Weighted bisectors and the exact three-point maximin solver.
//!
//! The locus of points with equal weighted distance to two weighted points is
//! an Apollonius circle when the weights differ and the perpendicular bisector
//! when they are equal. A local maximum of the three-point problem in the
//! interior of the triangle is equidistant (in weighted terms) from all three
//! vertices, and there is at most one such point inside; otherwise the optimum
//! sits on a side, where a side's end vertex and the opposite vertex have equal
//! weighted distance.

use serde::{Deserialize, Serialize};

use crate::geom::{
    self, circle_circle_intersections, circle_line_intersections, circle_segment_intersections,
    line_line_intersection, line_segment_intersection, point_in_triangle, Containment, Intersections,
    Point, Segment, Triangle,
};
use crate::{Error, Result};

/// Relative weight difference below which a bisector is a straight line.
pub const EQUAL_WEIGHT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedPoint {
    pub id: usize,
    pub location: Point,
    pub weight: f64,
}

impl WeightedPoint {
    pub fn new(id: usize, location: Point, weight: f64) -> Result<Self> {
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::InvalidWeight { id, weight });
        }
        if !location.is_finite() {
            return Err(Error::NonFinite { id });
        }
        Ok(Self { id, location, weight })
    }

    /// `w·d`, computed as `sqrt(w²·d²)` so that it agrees bit for bit with
    /// [`crate::objective::evaluate`].
    #[inline]
    pub fn weighted_distance(&self, p: Point) -> f64 {
        (self.weight * self.weight * self.location.distance_sq(&p)).sqrt()
    }
}

/// Locus of points with equal weighted distance to two weighted points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bisector {
    Circle { center: Point, radius: f64 },
    /// `direction` has unit length.
    Line { point: Point, direction: Point },
}

impl Bisector {
    pub fn intersect(&self, other: &Bisector) -> Intersections {
        match (*self, *other) {
            (Bisector::Circle { center: c1, radius: r1 }, Bisector::Circle { center: c2, radius: r2 }) => {
                circle_circle_intersections(c1, r1, c2, r2)
            }
            (Bisector::Circle { center, radius }, Bisector::Line { point, direction })
            | (Bisector::Line { point, direction }, Bisector::Circle { center, radius }) => {
                circle_line_intersections(center, radius, point, direction)
            }
            (Bisector::Line { point: p1, direction: d1 }, Bisector::Line { point: p2, direction: d2 }) => {
                line_line_intersection(p1, d1, p2, d2)
            }
        }
    }

    pub fn intersect_segment(&self, s: &Segment) -> Intersections {
        match *self {
            Bisector::Circle { center, radius } => circle_segment_intersections(center, radius, s),
            Bisector::Line { point, direction } => line_segment_intersection(point, direction, s),
        }
    }

    /// Evenly spaced points along the locus (a window of the line for the
    /// equal-weight case).
    pub fn sample(&self, count: usize, half_width: f64) -> Vec<Point> {
        match *self {
            Bisector::Circle { center, radius } => (0..count)
                .map(|k| {
                    let theta = std::f64::consts::TAU * k as f64 / count as f64;
                    Point::new(center.x + radius * theta.cos(), center.y + radius * theta.sin())
                })
                .collect(),
            Bisector::Line { point, direction } => (0..count)
                .map(|k| {
                    let t = if count > 1 {
                        -half_width + 2.0 * half_width * k as f64 / (count - 1) as f64
                    } else {
                        0.0
                    };
                    point + direction * t
                })
                .collect(),
        }
    }
}

/// Builds the weighted bisector of two demand points.
pub fn apollonius_bisector(p1: &WeightedPoint, p2: &WeightedPoint) -> Result<Bisector> {
    let (a, b) = (p1.location, p2.location);
    if a == b {
        return Err(Error::CoincidentPoints(p1.id, p2.id));
    }
    Ok(bisector_unchecked(a, p1.weight, b, p2.weight))
}

#[inline]
pub(crate) fn bisector_unchecked(a: Point, w1: f64, b: Point, w2: f64) -> Bisector {
    if (w1 - w2).abs() <= EQUAL_WEIGHT_TOL * w1.max(w2) {
        let d = b - a;
        let len = d.norm();
        return Bisector::Line {
            point: a.midpoint(&b),
            direction: Point::new(-d.y / len, d.x / len),
        };
    }
    let s1 = w1 * w1;
    let s2 = w2 * w2;
    let denom = s1 - s2;
    let center = Point::new((s1 * a.x - s2 * b.x) / denom, (s1 * a.y - s2 * b.y) / denom);
    let radius = w1 * w2 / denom.abs() * a.distance(&b);
    Bisector::Circle { center, radius }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolutionKind {
    InteriorEquidistant,
    OnSide,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleSolution {
    pub location: Point,
    pub objective: f64,
    pub kind: SolutionKind,
}

fn min_weighted_distance(p: Point, v: [&WeightedPoint; 3]) -> f64 {
    v.iter().map(|q| q.weighted_distance(p)).fold(f64::INFINITY, f64::min)
}

fn vertex_triangle(v: [&WeightedPoint; 3]) -> Result<Triangle> {
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        if v[i].location == v[j].location {
            return Err(Error::CoincidentPoints(v[i].id, v[j].id));
        }
    }
    Triangle::new(v[0].location, v[1].location, v[2].location)
}

/// Position (0..3) of the smallest weight; the first wins ties.
fn lightest(v: [&WeightedPoint; 3]) -> usize {
    let mut m = 0;
    for k in 1..3 {
        if v[k].weight < v[m].weight {
            m = k;
        }
    }
    m
}

/// Points where the two bisectors sharing the lightest vertex meet, with
/// their classification against the triangle.
pub fn equidistant_points(v: [&WeightedPoint; 3]) -> Result<Vec<(Point, Containment)>> {
    let tri = vertex_triangle(v)?;
    let m = lightest(v);
    let (a, b) = ((m + 1) % 3, (m + 2) % 3);
    let ba = apollonius_bisector(v[m], v[a])?;
    let bb = apollonius_bisector(v[m], v[b])?;
    Ok(ba
        .intersect(&bb)
        .into_iter()
        .map(|p| (p, point_in_triangle(p, &tri)))
        .collect())
}

/// Candidate points on the sides: for each side, its intersections with the
/// bisectors pairing each end vertex with the opposite vertex.
pub fn side_candidates(v: [&WeightedPoint; 3]) -> Result<Vec<(Point, f64)>> {
    vertex_triangle(v)?;
    let mut out = Vec::new();
    for (i, j, opposite) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let side = Segment::new(v[i].location, v[j].location)?;
        for end in [i, j] {
            let bis = apollonius_bisector(v[end], v[opposite])?;
            for p in bis.intersect_segment(&side) {
                out.push((p, min_weighted_distance(p, v)));
            }
        }
    }
    Ok(out)
}

/// Solves `max L` subject to `w_k d_k(X) >= L` for the three vertices and `X`
/// in their triangle.
pub fn solve_triangle(
    p1: &WeightedPoint,
    p2: &WeightedPoint,
    p3: &WeightedPoint,
) -> Result<TriangleSolution> {
    let v = [p1, p2, p3];
    let equidistant = equidistant_points(v)?;

    let interior = equidistant
        .iter()
        .filter(|(_, c)| *c == Containment::Inside)
        .map(|&(p, _)| (p, min_weighted_distance(p, v)))
        .max_by(|a, b| a.1.total_cmp(&b.1));
    if let Some((location, objective)) = interior {
        return Ok(TriangleSolution { location, objective, kind: SolutionKind::InteriorEquidistant });
    }

    let mut best: Option<(Point, f64)> = None;
    for (p, value) in side_candidates(v)? {
        if best.map_or(true, |(_, b)| value > b) {
            best = Some((p, value));
        }
    }
    if best.is_none() {
        // Only reachable when the equidistant point sits on a side and rounding
        // pushed the side crossings off the segment.
        for &(p, c) in &equidistant {
            if c == Containment::OnBoundary {
                let value = min_weighted_distance(p, v);
                if best.map_or(true, |(_, b)| value > b) {
                    best = Some((p, value));
                }
            }
        }
    }
    let (location, objective) = best.ok_or(Error::DegenerateTriangle)?;
    Ok(TriangleSolution { location, objective, kind: SolutionKind::OnSide })
}

/// Shortcut used by the candidate enumeration: the single equidistant point
/// strictly inside the triangle `(a, b, c)`, where `a` carries the smallest
/// weight and the bisectors `ab`, `ac` are supplied.
#[inline]
pub(crate) fn interior_equidistant(
    ab: &Bisector,
    ac: &Bisector,
    tri: [Point; 3],
) -> Option<Point> {
    let t = Triangle::new_unchecked(tri[0], tri[1], tri[2]);
    ab.intersect(ac)
        .into_iter()
        .find(|p| geom::point_in_triangle(*p, &t) == Containment::Inside)
}
