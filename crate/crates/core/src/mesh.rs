//! Convex hull, Delaunay triangulation and triangle subdivision.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::apollonius::WeightedPoint;
use crate::geom::{orientation, Point, Segment, Triangle};
use crate::{Error, Result};

/// Convex polygon with counterclockwise vertices.
///
/// Collinear vertices along a side are allowed; the hull of a point set keeps
/// every input point that lies on its boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
    diameter: f64,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewPoints { needed: 3, got: n });
        }
        let mut turned = false;
        for i in 0..n {
            let (a, b, c) = (vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if a == b || !a.is_finite() {
                return Err(Error::NotConvex);
            }
            match orientation(a, b, c) {
                Ordering::Less => return Err(Error::NotConvex),
                Ordering::Greater => turned = true,
                Ordering::Equal => {}
            }
        }
        if !turned {
            return Err(Error::Collinear);
        }
        let diameter = vertices
            .iter()
            .enumerate()
            .flat_map(|(i, a)| vertices[i + 1..].iter().map(move |b| a.distance(b)))
            .fold(0.0, f64::max);
        Ok(Self { vertices, diameter })
    }

    /// Axis-aligned square `[lo, hi]²`.
    pub fn square(lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![
            Point::new(lo, lo),
            Point::new(hi, lo),
            Point::new(hi, hi),
            Point::new(lo, hi),
        ])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn sides(&self) -> Vec<Segment> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                Segment::new(self.vertices[i], self.vertices[(i + 1) % n])
                    .expect("consecutive vertices are distinct")
            })
            .collect()
    }

    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        0.5 * (0..n)
            .map(|i| self.vertices[i].cross(&self.vertices[(i + 1) % n]))
            .sum::<f64>()
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounds(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo = Point::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Point::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        (lo, hi)
    }

    /// Nearest point of the polygon to `p` (`p` itself when inside).
    pub fn project(&self, p: Point) -> Point {
        if crate::objective::in_region(p, self) != crate::geom::Containment::Outside {
            return p;
        }
        self.sides()
            .iter()
            .map(|s| s.closest_point(p))
            .min_by(|a, b| a.distance_sq(&p).total_cmp(&b.distance_sq(&p)))
            .expect("polygon has sides")
    }
}

/// Counterclockwise convex hull by Andrew's monotone chain.
///
/// Points lying on a hull side are kept as vertices; duplicates are merged.
pub fn convex_hull(points: &[Point]) -> Result<ConvexPolygon> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: points.len() });
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        let (a, b) = (points[i], points[j]);
        a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)).then(i.cmp(&j))
    });
    order.dedup_by(|a, b| points[*a] == points[*b]);
    if order.len() < 3 {
        return Err(Error::Collinear);
    }

    let chain = |iter: &mut dyn Iterator<Item = usize>| {
        let mut h: Vec<usize> = Vec::new();
        for i in iter {
            while h.len() >= 2
                && orientation(points[h[h.len() - 2]], points[h[h.len() - 1]], points[i]) == Ordering::Less
            {
                h.pop();
            }
            h.push(i);
        }
        h
    };
    let mut lower = chain(&mut order.iter().copied());
    let mut upper = chain(&mut order.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.extend(upper);

    let vertices: Vec<Point> = lower.into_iter().map(|i| points[i]).collect();
    if vertices.len() < 3 {
        return Err(Error::Collinear);
    }
    ConvexPolygon::new(vertices)
}

/// Triangulation of a point set; vertex indices refer to the input slice.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangulation {
    points: Vec<Point>,
    ids: Vec<usize>,
    triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Counterclockwise index triples into the input points.
    pub fn indices(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Demand-point ids of the vertices of triangle `k`.
    pub fn vertex_ids(&self, k: usize) -> [usize; 3] {
        self.triangles[k].map(|i| self.ids[i])
    }

    pub fn triangle(&self, k: usize) -> Triangle {
        let [a, b, c] = self.triangles[k];
        Triangle::new_unchecked(self.points[a], self.points[b], self.points[c])
    }

    pub fn triangles(&self) -> impl Iterator<Item = Triangle> + '_ {
        (0..self.len()).map(|k| self.triangle(k))
    }

    /// Undirected edges, each once, as sorted index pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|&[a, b, c]| [(a, b), (b, c), (c, a)])
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }
}

/// Standard (unweighted) Delaunay triangulation of the demand locations.
///
/// Points are inserted in lexicographic order; each new point is joined to
/// the hull edges it sees and the new edges are legalized by Lawson flips.
/// In-circle tests are exact; a cocircular quadrilateral takes the diagonal
/// through its lowest-index vertex.
pub fn delaunay(points: &[WeightedPoint]) -> Result<Triangulation> {
    let locs: Vec<Point> = points.iter().map(|p| p.location).collect();
    let ids: Vec<usize> = points.iter().map(|p| p.id).collect();
    let triangles = DelaunayBuilder::build(&locs, points)?;
    Ok(Triangulation { points: locs, ids, triangles })
}

struct DelaunayBuilder<'a> {
    pts: &'a [Point],
    tris: Vec<[usize; 3]>,
    /// Directed edge -> triangle having it in counterclockwise order.
    edges: HashMap<(usize, usize), usize>,
}

impl<'a> DelaunayBuilder<'a> {
    fn build(pts: &'a [Point], labels: &[WeightedPoint]) -> Result<Vec<[usize; 3]>> {
        let n = pts.len();
        if n < 3 {
            return Err(Error::TooFewPoints { needed: 3, got: n });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| {
            let (a, b) = (pts[i], pts[j]);
            a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)).then(i.cmp(&j))
        });
        for w in order.windows(2) {
            if pts[w[0]] == pts[w[1]] {
                return Err(Error::CoincidentPoints(labels[w[0]].id, labels[w[1]].id));
            }
        }

        let (p0, p1) = (pts[order[0]], pts[order[1]]);
        let k = (2..n)
            .find(|&k| orientation(p0, p1, pts[order[k]]) != Ordering::Equal)
            .ok_or(Error::Collinear)?;

        let mut b = DelaunayBuilder {
            pts,
            tris: Vec::with_capacity(2 * n),
            edges: HashMap::with_capacity(6 * n),
        };

        // Fan from the first off-line point to the collinear prefix.
        let apex = order[k];
        let chain = &order[..k];
        let mut hull: Vec<usize>;
        if orientation(p0, p1, pts[apex]) == Ordering::Greater {
            for w in chain.windows(2) {
                b.push([w[0], w[1], apex]);
            }
            hull = chain.to_vec();
            hull.push(apex);
        } else {
            for w in chain.windows(2) {
                b.push([w[1], w[0], apex]);
            }
            hull = chain.iter().rev().copied().collect();
            hull.push(apex);
        }

        for &q in &order[k + 1..] {
            let h = hull.len();
            let visible = |i: usize, hull: &[usize]| {
                let (a, c) = (pts[hull[i]], pts[hull[(i + 1) % h]]);
                orientation(a, c, pts[q]) == Ordering::Less
            };
            // q is lexicographically beyond every inserted point, so it lies
            // strictly outside the current hull and sees a contiguous chain.
            let first = (0..h)
                .find(|&i| visible(i, &hull) && !visible((i + h - 1) % h, &hull))
                .expect("new point sees at least one hull edge");
            let mut last = first;
            while visible((last + 1) % h, &hull) {
                last = (last + 1) % h;
            }
            let mut i = first;
            loop {
                let (a, c) = (hull[i], hull[(i + 1) % h]);
                b.push([c, a, q]);
                b.legalize(c, a);
                if i == last {
                    break;
                }
                i = (i + 1) % h;
            }
            // Replace the vertices strictly inside the visible chain with q.
            let start = (first + 1) % h;
            let removed = (last + h - first) % h;
            hull.rotate_left(start);
            hull.drain(..removed);
            hull.insert(0, q);
        }
        Ok(b.tris)
    }

    fn push(&mut self, v: [usize; 3]) {
        let t = self.tris.len();
        self.tris.push(v);
        self.link(t);
    }

    fn link(&mut self, t: usize) {
        let [a, b, c] = self.tris[t];
        for e in [(a, b), (b, c), (c, a)] {
            self.edges.insert(e, t);
        }
    }

    fn unlink(&mut self, t: usize) {
        let [a, b, c] = self.tris[t];
        for e in [(a, b), (b, c), (c, a)] {
            if self.edges.get(&e) == Some(&t) {
                self.edges.remove(&e);
            }
        }
    }

    fn set(&mut self, t: usize, v: [usize; 3]) {
        self.unlink(t);
        self.tris[t] = v;
        self.link(t);
    }

    fn third(&self, t: usize, a: usize, b: usize) -> usize {
        let v = self.tris[t];
        *v.iter().find(|&&x| x != a && x != b).expect("triangle has three vertices")
    }

    /// Restores the empty-circle property around the directed edge `(a, b)`
    /// whose owning triangle holds the newly inserted point.
    fn legalize(&mut self, a: usize, b: usize) {
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            let Some(&t) = self.edges.get(&(a, b)) else { continue };
            let Some(&u) = self.edges.get(&(b, a)) else { continue };
            let c = self.third(t, a, b);
            let d = self.third(u, b, a);
            if self.should_flip(a, b, c, d) {
                self.unlink(u);
                self.set(t, [c, a, d]);
                self.tris[u] = [d, b, c];
                self.link(u);
                stack.push((a, d));
                stack.push((d, b));
            }
        }
    }

    /// `(a, b, c)` is counterclockwise and `d` lies across `ab`.
    fn should_flip(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let co = |i: usize| robust::Coord { x: self.pts[i].x, y: self.pts[i].y };
        let det = robust::incircle(co(a), co(b), co(c), co(d));
        if det > 0.0 {
            true
        } else if det < 0.0 {
            false
        } else {
            let lowest = a.min(b).min(c).min(d);
            lowest == c || lowest == d
        }
    }
}

/// Midpoint subdivision into three corner triangles and the medial triangle.
pub fn split_triangle(t: &Triangle) -> [Triangle; 4] {
    let [a, b, c] = t.vertices();
    let (ab, bc, ca) = (a.midpoint(&b), b.midpoint(&c), c.midpoint(&a));
    [
        Triangle::new_unchecked(a, ab, ca),
        Triangle::new_unchecked(ab, b, bc),
        Triangle::new_unchecked(ca, bc, c),
        Triangle::new_unchecked(ab, bc, ca),
    ]
}
