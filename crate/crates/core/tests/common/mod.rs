#![allow(dead_code)]

use maximin_core::apollonius::WeightedPoint;
use maximin_core::geom::Point;
use rand::Rng;

/// First 30 generated points as published: (x, y, w).
pub const TABLE1: [(&str, &str, &str); 30] = [
    ("0.0097", "0.0367", "1.12347"),
    ("8.5243", "8.4373", "1.67993"),
    ("8.4217", "5.3687", "1.06467"),
    ("4.7523", "0.1453", "1.20273"),
    ("8.3537", "5.4207", "1.15787"),
    ("3.8603", "5.5333", "1.01353"),
    ("9.0057", "1.3927", "1.32307"),
    ("0.6483", "7.4013", "1.59233"),
    ("1.5777", "6.4847", "1.68027"),
    ("7.9163", "6.5493", "1.21913"),
    ("9.2697", "5.8967", "1.54947"),
    ("6.4643", "1.7773", "1.97393"),
    ("7.2817", "6.8287", "1.45067"),
    ("5.0923", "9.8853", "1.73673"),
    ("2.8137", "8.4807", "1.10387"),
    ("0.6003", "5.6733", "1.18753"),
    ("5.0657", "2.0527", "1.42907"),
    ("7.7883", "1.9413", "1.80633"),
    ("5.2377", "0.7447", "1.54627"),
    ("9.4563", "9.4893", "1.87313"),
    ("6.5297", "9.7567", "1.77547"),
    ("6.4043", "7.1173", "1.46793"),
    ("4.1417", "6.2887", "1.63667"),
    ("7.4323", "1.6253", "1.47073"),
    ("5.2737", "9.5407", "1.84987"),
    ("9.3403", "7.8133", "1.56153"),
    ("9.1257", "0.7127", "1.33507"),
    ("6.9283", "8.4813", "1.22033"),
    ("6.8977", "3.0047", "1.21227"),
    ("2.9963", "4.4293", "1.72713"),
];

/// Optimum over the hull: n, x*, y*, objective, Delaunay triangles, hull sides.
pub const TABLE2: [(usize, f64, f64, f64, usize, usize); 10] = [
    (100, 8.04233, 9.83530, 2.13972, 189, 9),
    (200, 9.89778, 3.12986, 1.63585, 387, 11),
    (300, 4.11567, 7.65730, 1.37183, 585, 13),
    (400, 8.88491, 9.85960, 1.10596, 786, 12),
    (500, 0.04420, 7.14163, 1.04703, 985, 13),
    (600, 0.04420, 7.14163, 1.04703, 1183, 15),
    (700, 0.04420, 7.14163, 1.04703, 1382, 16),
    (800, 0.04420, 7.14163, 1.04703, 1582, 16),
    (900, 0.04420, 7.14163, 1.04703, 1781, 17),
    (1000, 0.04421, 7.14310, 1.04609, 1981, 17),
];

/// Phase-one record of a branch and bound run: lb, ub, remaining, max queue, iterations.
#[derive(Debug, Clone, Copy)]
pub struct PhaseOne {
    pub lb: f64,
    pub ub: f64,
    pub remaining: usize,
    pub max_queue: usize,
    pub iterations: u64,
}

const fn p1(lb: f64, ub: f64, remaining: usize, max_queue: usize, iterations: u64) -> PhaseOne {
    PhaseOne { lb, ub, remaining, max_queue, iterations }
}

/// n, first bound set, second bound set.
pub const TABLE3: [(usize, PhaseOne, PhaseOne); 10] = [
    (100, p1(1.65610, 4.84069, 84, 101, 1087), p1(2.00742, 3.63158, 11, 88, 1044)),
    (200, p1(1.54729, 5.52649, 72, 510, 7166), p1(1.61199, 5.12565, 13, 510, 7086)),
    (300, p1(1.14756, 5.01672, 155, 219, 388), p1(1.32627, 5.29483, 17, 108, 320)),
    (400, p1(0.94573, 3.94609, 254, 373, 543), p1(1.10233, 3.43307, 20, 76, 392)),
    (500, p1(0.88090, 3.94609, 253, 335, 489), p1(0.90744, 3.61715, 25, 121, 328)),
    (600, p1(0.93155, 3.94609, 177, 285, 1409), p1(0.95256, 3.61715, 27, 119, 1294)),
    (700, p1(0.93155, 3.94609, 163, 264, 1360), p1(0.95256, 3.61715, 25, 115, 1279)),
    (800, p1(0.93155, 3.94609, 128, 218, 1307), p1(0.95256, 3.03222, 25, 106, 1249)),
    (900, p1(0.93155, 3.94609, 91, 171, 1253), p1(0.95256, 3.03222, 24, 98, 1221)),
    (1000, p1(0.93155, 3.94609, 75, 730, 9004), p1(0.91536, 2.36876, 27, 730, 8981)),
];

/// Optimum over the square [0, 10]^2: n, x*, y*, objective.
pub const TABLE5: [(usize, f64, f64, f64); 10] = [
    (100, 10.00000, 2.77952, 2.25773),
    (200, 10.00000, 3.09849, 1.69987),
    (300, 10.00000, 2.90534, 1.41960),
    (400, 8.88615, 10.00000, 1.14393),
    (500, 0.00000, 7.17256, 1.09468),
    (600, 0.00000, 7.17256, 1.09468),
    (700, 0.00000, 7.17256, 1.09468),
    (800, 0.00000, 7.17256, 1.09468),
    (900, 0.00000, 7.17256, 1.09468),
    (1000, 0.00000, 7.17256, 1.09468),
];

pub fn wp(id: usize, x: f64, y: f64, w: f64) -> WeightedPoint {
    WeightedPoint::new(id, Point::new(x, y), w).unwrap()
}

/// Smallest weighted distance, computed directly.
pub fn brute_value(x: f64, y: f64, pts: &[WeightedPoint]) -> f64 {
    let mut best = f64::INFINITY;
    for p in pts {
        let d = ((x - p.location.x).powi(2) + (y - p.location.y).powi(2)).sqrt();
        best = best.min(p.weight * d);
    }
    best
}

/// Barycentric coordinates of `p` with respect to `(a, b, c)`.
pub fn barycentric(p: Point, a: Point, b: Point, c: Point) -> (f64, f64, f64) {
    let det = (b.y - c.y) * (a.x - c.x) + (c.x - b.x) * (a.y - c.y);
    let l1 = ((b.y - c.y) * (p.x - c.x) + (c.x - b.x) * (p.y - c.y)) / det;
    let l2 = ((c.y - a.y) * (p.x - c.x) + (a.x - c.x) * (p.y - c.y)) / det;
    (l1, l2, 1.0 - l1 - l2)
}

/// Distance from `p` to the line through `a` and `b`.
pub fn line_distance(p: Point, a: Point, b: Point) -> f64 {
    let d = b - a;
    ((p - a).cross(&d)).abs() / d.norm()
}

/// Feasibility test shared by the oracles: inside a counterclockwise convex polygon.
fn inside_polygon(p: Point, poly: &[Point]) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        (b - a).cross(&(p - a)) >= 0.0
    })
}

fn ccw(poly: &[Point]) -> Vec<Point> {
    let mut v = poly.to_vec();
    let area: f64 = (0..v.len()).map(|i| v[i].cross(&v[(i + 1) % v.len()])).sum();
    if area < 0.0 {
        v.reverse();
    }
    v
}

/// Grid search over a convex polygon followed by nested zoom refinement
/// around the best cells. Every evaluated point is feasible, so the result
/// never exceeds the true maximum.
pub fn grid_max_polygon(poly: &[Point], pts: &[WeightedPoint], steps: usize) -> (Point, f64) {
    let poly = ccw(poly);
    let (mut lo, mut hi) = (poly[0], poly[0]);
    for p in &poly {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let hx = (hi.x - lo.x) / steps as f64;
    let hy = (hi.y - lo.y) / steps as f64;
    let mut cells: Vec<(f64, Point)> = Vec::new();
    for i in 0..=steps {
        for j in 0..=steps {
            let p = Point::new(lo.x + i as f64 * hx, lo.y + j as f64 * hy);
            if inside_polygon(p, &poly) {
                cells.push((brute_value(p.x, p.y, pts), p));
            }
        }
    }
    for v in &poly {
        cells.push((brute_value(v.x, v.y, pts), *v));
    }
    let keep = 40.min(cells.len());
    cells.select_nth_unstable_by(keep - 1, |a, b| b.0.total_cmp(&a.0));
    cells.truncate(keep);
    let mut best = (Point::new(f64::NAN, f64::NAN), f64::NEG_INFINITY);
    for &(v, p) in &cells {
        let r = zoom(p, v, hx.max(hy), pts, |q| inside_polygon(q, &poly));
        if r.1 > best.1 {
            best = r;
        }
    }
    best
}

/// Grid search over a triangle in barycentric coordinates, then zoom refinement.
pub fn grid_max_triangle(t: [Point; 3], pts: &[WeightedPoint], steps: usize) -> (Point, f64) {
    let [a, b, c] = t;
    let inside = |q: Point| {
        let (l1, l2, l3) = barycentric(q, a, b, c);
        l1 >= 0.0 && l2 >= 0.0 && l3 >= 0.0
    };
    let mut cells: Vec<(f64, Point)> = Vec::new();
    for i in 0..=steps {
        for j in 0..=steps - i {
            let (u, v) = (i as f64 / steps as f64, j as f64 / steps as f64);
            let p = Point::new(
                a.x + u * (b.x - a.x) + v * (c.x - a.x),
                a.y + u * (b.y - a.y) + v * (c.y - a.y),
            );
            cells.push((brute_value(p.x, p.y, pts), p));
        }
    }
    let keep = 20.min(cells.len());
    cells.select_nth_unstable_by(keep - 1, |x, y| y.0.total_cmp(&x.0));
    cells.truncate(keep);
    let scale = a.distance(&b).max(b.distance(&c)).max(c.distance(&a)) / steps as f64;
    let mut best = (Point::new(f64::NAN, f64::NAN), f64::NEG_INFINITY);
    for &(v, p) in &cells {
        let r = zoom(p, v, scale, pts, &inside);
        if r.1 > best.1 {
            best = r;
        }
    }
    best
}

fn zoom(
    mut p: Point,
    mut v: f64,
    mut h: f64,
    pts: &[WeightedPoint],
    feasible: impl Fn(Point) -> bool,
) -> (Point, f64) {
    const K: i32 = 6;
    for _ in 0..60 {
        let centre = p;
        for i in -K..=K {
            for j in -K..=K {
                let q = Point::new(centre.x + i as f64 * h / K as f64, centre.y + j as f64 * h / K as f64);
                if feasible(q) {
                    let f = brute_value(q.x, q.y, pts);
                    if f > v {
                        v = f;
                        p = q;
                    }
                }
            }
        }
        h *= 0.6;
    }
    (p, v)
}

/// Random weighted triangle with area at least `min_area`.
pub fn random_triangle(rng: &mut impl Rng, min_area: f64, weights: (f64, f64)) -> [WeightedPoint; 3] {
    loop {
        let v: Vec<Point> = (0..3).map(|_| Point::new(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0))).collect();
        let area = 0.5 * (v[1] - v[0]).cross(&(v[2] - v[0])).abs();
        if area >= min_area {
            return [0, 1, 2].map(|k| wp(k + 1, v[k].x, v[k].y, rng.gen_range(weights.0..weights.1)));
        }
    }
}

/// Random instance with `n` points in the unit square.
pub fn random_points(rng: &mut impl Rng, n: usize) -> Vec<WeightedPoint> {
    (0..n)
        .map(|k| wp(k + 1, rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), rng.gen_range(1.0..2.0)))
        .collect()
}

/// Circumcenter and radius of a non-degenerate triangle.
pub fn circumcircle(a: Point, b: Point, c: Point) -> (Point, f64) {
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    let a2 = a.x * a.x + a.y * a.y;
    let b2 = b.x * b.x + b.y * b.y;
    let c2 = c.x * c.x + c.y * c.y;
    let ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    let uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    let o = Point::new(ux, uy);
    (o, o.distance(&a))
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
