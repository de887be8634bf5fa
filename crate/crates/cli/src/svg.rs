//! Static SVG rendering of an instance: demand points sized by weight, the
//! convex hull, the feasible region, optional Delaunay edges and the optimum.

use std::fmt::Write as _;

use maximin_core::geom::Point;
use maximin_core::mesh::{convex_hull, delaunay};
use maximin_core::solvers::Solution;
use maximin_core::{Instance, RegionKind};

use crate::CliResult;

/// Fraction of the region extent added on every side of the view box.
pub const MARGIN: f64 = 0.05;
const WIDTH_PX: f64 = 800.0;

struct Frame {
    lo: Point,
    hi: Point,
}

impl Frame {
    /// Flips the y axis so that north is up.
    fn map(&self, p: Point) -> (f64, f64) {
        (p.x, self.lo.y + self.hi.y - p.y)
    }

    fn polygon(&self, pts: &[Point]) -> String {
        pts.iter()
            .map(|p| {
                let (x, y) = self.map(*p);
                format!("{x:.6},{y:.6}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn render(inst: &Instance, solution: Option<&Solution>, with_delaunay: bool) -> CliResult<String> {
    let (lo, hi) = inst.region().bounds();
    let frame = Frame { lo, hi };
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let (mx, my) = (MARGIN * w, MARGIN * h);
    let (vx, vy, vw, vh) = (lo.x - mx, lo.y - my, w + 2.0 * mx, h + 2.0 * my);
    let span = vw.max(vh);
    let base_radius = 0.004 * span;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}">"#,
        WIDTH_PX,
        WIDTH_PX * vh / vw
    );
    let _ = writeln!(
        s,
        r#"<style>.region{{fill:#f7f7f7;stroke:#999}}.hull{{fill:none;stroke:#1f4e79}}.delaunay line{{stroke:#bbb}}.point{{fill:#333}}.optimum{{fill:none;stroke:#c00000}}*{{vector-effect:non-scaling-stroke}}</style>"#
    );

    if inst.region_kind() == RegionKind::Custom {
        let _ = writeln!(s, r#"<polygon class="region" points="{}"/>"#, frame.polygon(inst.region().vertices()));
    }

    if with_delaunay {
        let tri = delaunay(inst.points())?;
        let pts = inst.points();
        let _ = writeln!(s, r#"<g class="delaunay">"#);
        for (a, b) in tri.edges() {
            let (x1, y1) = frame.map(pts[a].location);
            let (x2, y2) = frame.map(pts[b].location);
            let _ = writeln!(s, r#"<line x1="{x1:.6}" y1="{y1:.6}" x2="{x2:.6}" y2="{y2:.6}"/>"#);
        }
        let _ = writeln!(s, "</g>");
    }

    let locs: Vec<Point> = inst.points().iter().map(|p| p.location).collect();
    let hull = convex_hull(&locs)?;
    let _ = writeln!(s, r#"<polygon class="hull" points="{}"/>"#, frame.polygon(hull.vertices()));

    let _ = writeln!(s, r#"<g class="points">"#);
    for p in inst.points() {
        let (x, y) = frame.map(p.location);
        let _ = writeln!(
            s,
            r#"<circle class="point" data-id="{}" cx="{x:.6}" cy="{y:.6}" r="{:.6}"><title>{} w={}</title></circle>"#,
            p.id,
            base_radius * p.weight,
            p.id,
            p.weight
        );
    }
    let _ = writeln!(s, "</g>");

    if let Some(sol) = solution {
        let (x, y) = frame.map(sol.location);
        let _ = writeln!(
            s,
            r#"<circle class="optimum" cx="{x:.6}" cy="{y:.6}" r="{:.6}"><title>({:.5}, {:.5}) objective {:.5}</title></circle>"#,
            3.0 * base_radius,
            sol.location.x,
            sol.location.y,
            sol.objective
        );
    }
    let _ = writeln!(s, "</svg>");
    Ok(s)
}
