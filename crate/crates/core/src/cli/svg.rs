use std::fmt::Write;

use crate::geometry::{ConvexQuad, Point};
use crate::inscribed::{chord_x, locus, InscribedResult};

use super::json::round_number;

fn f(x: f64) -> String {
    format!("{}", round_number(x))
}

struct Bounds {
    min: Point,
    max: Point,
}

impl Bounds {
    fn new(p: Point) -> Self {
        Bounds { min: p, max: p }
    }

    fn add(&mut self, p: Point) {
        self.min = Point::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = Point::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }
}

/// SVG 1.1 document showing the quad, its locus segment, chord and the
/// given ellipses with their contact points. Coordinates are in the quad's
/// own units with the y axis pointing up.
pub fn render(q: &ConvexQuad, results: &[InscribedResult]) -> String {
    let v = q.vertices();
    let mut bounds = Bounds::new(v[0]);
    v.iter().for_each(|p| bounds.add(*p));
    let chord = chord_x(q).ok();
    for r in results {
        let e = &r.ellipse;
        let reach = Point::new(e.semi_major, e.semi_major);
        bounds.add(e.center - reach);
        bounds.add(e.center + reach);
    }
    let span = (bounds.max.x - bounds.min.x).max(bounds.max.y - bounds.min.y);
    let pad = 0.05 * span;
    let (x0, y0) = (bounds.min.x - pad, bounds.min.y - pad);
    let (w, h) = (
        bounds.max.x - bounds.min.x + 2.0 * pad,
        bounds.max.y - bounds.min.y + 2.0 * pad,
    );
    let stroke = span / 400.0;
    let dot = span / 150.0;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\">",
        f(x0),
        f(y0),
        f(w),
        f(h),
        (800.0 * h / w).round()
    );
    let _ = writeln!(
        s,
        "<g transform=\"matrix(1 0 0 -1 0 {})\" fill=\"none\" stroke-width=\"{}\">",
        f(2.0 * y0 + h),
        f(stroke)
    );
    let path: Vec<String> = v.iter().map(|p| format!("{} {}", f(p.x), f(p.y))).collect();
    let _ = writeln!(
        s,
        "<path class=\"quad\" d=\"M {} Z\" stroke=\"black\"/>",
        path.join(" L ")
    );
    if let Some(c) = chord {
        let _ = writeln!(
            s,
            "<line class=\"chord\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-dasharray=\"{} {}\"/>",
            f(c.p_start.x),
            f(c.p_start.y),
            f(c.p_end.x),
            f(c.p_end.y),
            f(4.0 * stroke),
            f(3.0 * stroke)
        );
    }
    let seg = locus(q);
    let _ = writeln!(
        s,
        "<line class=\"locus\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"red\"/>",
        f(seg.m1.x),
        f(seg.m1.y),
        f(seg.m2.x),
        f(seg.m2.y)
    );
    for r in results {
        let e = &r.ellipse;
        let _ = writeln!(
            s,
            "<ellipse cx=\"{}\" cy=\"{}\" rx=\"{}\" ry=\"{}\" transform=\"rotate({} {} {})\" stroke=\"blue\"/>",
            f(e.center.x),
            f(e.center.y),
            f(e.semi_major),
            f(e.semi_minor),
            f(e.angle.to_degrees()),
            f(e.center.x),
            f(e.center.y)
        );
        for p in r.tangencies.iter().filter_map(|t| t.to_point()) {
            let _ = writeln!(
                s,
                "<circle class=\"contact\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"blue\" stroke=\"none\"/>",
                f(p.x),
                f(p.y),
                f(dot)
            );
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}
