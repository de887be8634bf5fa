//! Planar primitives.
//!
//! Intersections are computed in a translated and rotated frame in which the
//! reference segment (or the line of centers) lies on the positive x-axis,
//! then mapped back. No trigonometric functions are evaluated.

use std::ops::{Add, Mul, Sub};

use arrayvec::ArrayVec;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Up to two intersection points.
pub type Intersections = ArrayVec<Point, 2>;

/// Relative tolerance under which a discriminant is treated as zero.
pub(crate) const TANGENCY_TOL: f64 = 1e-12;

/// Relative tolerance of the boundary band in [`point_in_triangle`].
pub(crate) const AREA_TOL: f64 = 1e-12;

/// Sine of the angle under which three points are considered collinear.
pub(crate) const COLLINEAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point) -> f64 {
        self.distance_sq(other).sqrt()
    }

    pub fn distance_sq(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dot(&self, other: &Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, other: &Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// Translation and rotation taking `origin` to `(0, 0)` and a second point to
/// `(separation, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameTransform {
    origin: Point,
    cosine: f64,
    sine: f64,
    separation: f64,
}

impl FrameTransform {
    pub fn new(a1: Point, a2: Point) -> Result<Self> {
        let delta = a2 - a1;
        let separation = delta.norm();
        if separation == 0.0 || !separation.is_finite() {
            return Err(Error::DegenerateFrame { x: a1.x, y: a1.y });
        }
        Ok(Self {
            origin: a1,
            cosine: delta.x / separation,
            sine: delta.y / separation,
            separation,
        })
    }

    pub fn origin(&self) -> Point {
        self.origin
    }

    pub fn cosine(&self) -> f64 {
        self.cosine
    }

    pub fn sine(&self) -> f64 {
        self.sine
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn to_frame(&self, p: Point) -> Point {
        let dx = p.x - self.origin.x;
        let dy = p.y - self.origin.y;
        Point::new(
            self.cosine * dx + self.sine * dy,
            -self.sine * dx + self.cosine * dy,
        )
    }

    pub fn from_frame(&self, p: Point) -> Point {
        Point::new(
            self.origin.x + self.cosine * p.x - self.sine * p.y,
            self.origin.y + self.cosine * p.y + self.sine * p.x,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateSegment);
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn length(&self) -> f64 {
        self.a.distance(&self.b)
    }

    pub(crate) fn frame(&self) -> FrameTransform {
        // Endpoints are distinct by construction.
        FrameTransform::new(self.a, self.b).expect("segment endpoints are distinct")
    }

    /// Closest point of the segment to `p`.
    pub fn closest_point(&self, p: Point) -> Point {
        let ab = self.b - self.a;
        let t = ((p - self.a).dot(&ab) / ab.dot(&ab)).clamp(0.0, 1.0);
        self.a + ab * t
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    v: [Point; 3],
}

impl Triangle {
    /// Rejects triangles with zero signed area.
    pub fn new(v1: Point, v2: Point, v3: Point) -> Result<Self> {
        let t = Self { v: [v1, v2, v3] };
        let area = t.signed_area();
        if area == 0.0 || !area.is_finite() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(t)
    }

    /// For subdivision children, which are similar to a valid parent.
    pub(crate) fn new_unchecked(v1: Point, v2: Point, v3: Point) -> Self {
        Self { v: [v1, v2, v3] }
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.v
    }

    pub fn signed_area(&self) -> f64 {
        signed_triangle_area(self.v[0], self.v[1], self.v[2])
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    pub fn centroid(&self) -> Point {
        Point::new(
            (self.v[0].x + self.v[1].x + self.v[2].x) / 3.0,
            (self.v[0].y + self.v[1].y + self.v[2].y) / 3.0,
        )
    }

    pub fn sides(&self) -> [(Point, Point); 3] {
        [(self.v[0], self.v[1]), (self.v[1], self.v[2]), (self.v[2], self.v[0])]
    }
}

/// Twice-area expression `x1(y2-y3) + x2(y3-y1) + x3(y1-y2)`; positive for
/// counterclockwise vertices. The terms are summed in sorted order so that any
/// vertex permutation yields exactly the same magnitude.
#[inline]
pub(crate) fn doubled_area(a: Point, b: Point, c: Point) -> f64 {
    let t = [a.x * (b.y - c.y), b.x * (c.y - a.y), c.x * (a.y - b.y)];
    let lo = t[0].min(t[1]).min(t[2]);
    let hi = t[0].max(t[1]).max(t[2]);
    (lo + hi) + median(t)
}

#[inline]
fn median(t: [f64; 3]) -> f64 {
    let [a, b, c] = t;
    a.max(b).min(a.min(b).max(c))
}

/// Signed area of the triangle `(a, b, c)`, positive when counterclockwise.
pub fn signed_triangle_area(a: Point, b: Point, c: Point) -> f64 {
    0.5 * doubled_area(a, b, c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Containment {
    Inside,
    OnBoundary,
    Outside,
}

/// Classifies `p` against `t` by the signs of the three sub-triangle terms.
pub fn point_in_triangle(p: Point, t: &Triangle) -> Containment {
    let [a, b, c] = t.v;
    let terms = [doubled_area(p, b, c), doubled_area(a, p, c), doubled_area(a, b, p)];
    let tol = AREA_TOL * (1.0 + t.area());
    let mut pos = false;
    let mut neg = false;
    let mut zero = false;
    for term in terms {
        if term.abs() <= tol {
            zero = true;
        } else if term > 0.0 {
            pos = true;
        } else {
            neg = true;
        }
    }
    match (pos && neg, zero) {
        (true, _) => Containment::Outside,
        (false, true) => Containment::OnBoundary,
        (false, false) => Containment::Inside,
    }
}

/// Orientation of `c` relative to the directed line `a -> b`, with collinearity
/// decided by the sine of the angle at `a`.
pub(crate) fn orientation(a: Point, b: Point, c: Point) -> std::cmp::Ordering {
    let u = b - a;
    let v = c - a;
    let cross = u.cross(&v);
    let scale = u.norm() * v.norm();
    if cross.abs() <= COLLINEAR_TOL * scale {
        std::cmp::Ordering::Equal
    } else if cross > 0.0 {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Less
    }
}

/// Intersections of two circles. Tangent circles yield one point; concentric
/// circles yield none.
pub fn circle_circle_intersections(c1: Point, r1: f64, c2: Point, r2: f64) -> Intersections {
    let mut out = Intersections::new();
    let Ok(frame) = FrameTransform::new(c1, c2) else {
        return out;
    };
    let d = frame.separation;
    let d2 = d * d;
    let outer = (r1 + r2) * (r1 + r2) - d2;
    let inner = d2 - (r1 - r2) * (r1 - r2);
    let disc = outer * inner;
    let tol = TANGENCY_TOL * d2;
    if disc < -tol {
        return out;
    }
    let x = (r1 * r1 + d2 - r2 * r2) / (2.0 * d);
    if disc <= tol {
        out.push(frame.from_frame(Point::new(x, 0.0)));
    } else {
        let y = disc.sqrt() / (2.0 * d);
        out.push(frame.from_frame(Point::new(x, y)));
        out.push(frame.from_frame(Point::new(x, -y)));
    }
    out
}

/// Intersections of a circle with the x-axis of `frame`, as frame abscissae.
fn circle_axis_abscissae(frame: &FrameTransform, center: Point, r: f64) -> ArrayVec<f64, 2> {
    let mut out = ArrayVec::new();
    let c = frame.to_frame(center);
    let disc = r * r - c.y * c.y;
    let tol = TANGENCY_TOL * r * r;
    if disc < -tol {
        return out;
    }
    if disc <= tol {
        out.push(c.x);
    } else {
        let h = disc.sqrt();
        out.push(c.x - h);
        out.push(c.x + h);
    }
    out
}

/// Keeps abscissae within `[0, d]` (with a relative slack) and maps them back.
fn keep_on_segment(frame: &FrameTransform, xs: impl IntoIterator<Item = f64>) -> Intersections {
    let d = frame.separation;
    let slack = TANGENCY_TOL * d;
    let mut out = Intersections::new();
    for x in xs {
        if x >= -slack && x <= d + slack {
            out.push(frame.from_frame(Point::new(x.clamp(0.0, d), 0.0)));
        }
    }
    out
}

/// Intersections of a circle with a segment.
pub fn circle_segment_intersections(center: Point, r: f64, s: &Segment) -> Intersections {
    let frame = s.frame();
    keep_on_segment(&frame, circle_axis_abscissae(&frame, center, r))
}

/// Intersections of a circle with the infinite line through `p` with direction `dir`.
pub(crate) fn circle_line_intersections(center: Point, r: f64, p: Point, dir: Point) -> Intersections {
    let Ok(frame) = FrameTransform::new(p, p + dir) else {
        return Intersections::new();
    };
    circle_axis_abscissae(&frame, center, r)
        .into_iter()
        .map(|x| frame.from_frame(Point::new(x, 0.0)))
        .collect()
}

/// Intersection of the line through `p` with direction `dir` and a segment.
pub(crate) fn line_segment_intersection(p: Point, dir: Point, s: &Segment) -> Intersections {
    let frame = s.frame();
    let q = frame.to_frame(p);
    let rot = FrameTransform { origin: Point::default(), ..frame };
    let u = rot.to_frame(dir);
    if u.y.abs() <= COLLINEAR_TOL * u.norm() {
        return Intersections::new();
    }
    let x = q.x - q.y * u.x / u.y;
    keep_on_segment(&frame, [x])
}

/// Intersection of two infinite lines given by point and direction.
pub(crate) fn line_line_intersection(p1: Point, d1: Point, p2: Point, d2: Point) -> Intersections {
    let mut out = Intersections::new();
    let denom = d1.cross(&d2);
    if denom.abs() <= COLLINEAR_TOL * d1.norm() * d2.norm() {
        return out;
    }
    let t = (p2 - p1).cross(&d2) / denom;
    out.push(p1 + d1 * t);
    out
}
