//! Convex quadrilateral validation and classification.

use std::fmt;

use super::point::{Line, Point};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Parallel-side classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadKind {
    /// No two sides parallel.
    Trapezium,
    /// Exactly one pair of parallel sides.
    Trapezoid,
    Parallelogram,
}

impl QuadKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            QuadKind::Trapezium => "trapezium",
            QuadKind::Trapezoid => "trapezoid",
            QuadKind::Parallelogram => "parallelogram",
        }
    }
}

impl fmt::Display for QuadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Vertex pairs of the four side lines, in the order used for every
/// per-side report: `v0v1`, `v0v3`, `v1v2`, `v2v3`.
pub const SIDE_VERTICES: [(usize, usize); 4] = [(0, 1), (0, 3), (1, 2), (2, 3)];

/// A strictly convex quadrilateral, counterclockwise, starting at the
/// lexicographically smallest vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexQuad {
    vertices: [Point; 4],
    kind: QuadKind,
}

impl ConvexQuad {
    pub fn vertices(&self) -> [Point; 4] {
        self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % 4]
    }

    pub fn kind(&self) -> QuadKind {
        self.kind
    }

    /// Edge vector `v(i+1) − v(i)`.
    pub fn edge(&self, i: usize) -> Point {
        self.vertex(i + 1) - self.vertex(i)
    }

    /// Side lines in [`SIDE_VERTICES`] order.
    pub fn side_lines(&self) -> [Line; 4] {
        SIDE_VERTICES.map(|(i, j)| {
            Line::through(self.vertices[i], self.vertices[j]).expect("distinct vertices")
        })
    }

    /// Side segments in [`SIDE_VERTICES`] order.
    pub fn side_segments(&self) -> [(Point, Point); 4] {
        SIDE_VERTICES.map(|(i, j)| (self.vertices[i], self.vertices[j]))
    }

    /// Midpoints of the diagonals `v0v2` and `v1v3`.
    pub fn diagonal_midpoints(&self) -> (Point, Point) {
        let v = self.vertices;
        (v[0].midpoint(v[2]), v[1].midpoint(v[3]))
    }

    pub fn diameter(&self) -> f64 {
        let v = self.vertices;
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                d = d.max(v[i].distance(v[j]));
            }
        }
        d
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    /// Signed distances of `p` to the four edge lines, positive inside.
    pub fn edge_distances(&self, p: Point) -> [f64; 4] {
        std::array::from_fn(|i| {
            let e = self.edge(i);
            e.cross(p - self.vertex(i)) / e.norm()
        })
    }

    /// Strict interior test with an absolute margin.
    pub fn contains(&self, p: Point, margin: f64) -> bool {
        self.edge_distances(p).iter().all(|&d| d > margin)
    }
}

fn signed_area(v: &[Point; 4]) -> f64 {
    0.5 * (0..4).map(|i| v[i].cross(v[(i + 1) % 4])).sum::<f64>()
}

fn unit(p: Point) -> Point {
    p * (1.0 / p.norm())
}

/// Validates four vertices given in either cyclic direction and returns the
/// canonical counterclockwise quad.
pub fn validate_quad(vertices: [Point; 4], tol: &Tolerances) -> Result<ConvexQuad> {
    if !vertices.iter().all(|p| p.is_finite()) {
        return Err(Error::DegenerateQuad("non-finite coordinate".into()));
    }
    let mut scale: f64 = 0.0;
    let mut closest = f64::INFINITY;
    for i in 0..4 {
        for j in i + 1..4 {
            let d = vertices[i].distance(vertices[j]);
            scale = scale.max(d);
            closest = closest.min(d);
        }
    }
    if !(closest > 1e-12 * scale) {
        return Err(Error::DegenerateQuad("repeated vertex".into()));
    }
    let area = signed_area(&vertices);
    if area.abs() <= tol.par * scale * scale {
        return Err(Error::DegenerateQuad("vertices are collinear".into()));
    }
    let mut v = vertices;
    if area < 0.0 {
        v.reverse();
    }
    let start = (0..4)
        .min_by(|&a, &b| v[a].x.total_cmp(&v[b].x).then(v[a].y.total_cmp(&v[b].y)))
        .unwrap_or(0);
    v.rotate_left(start);

    let edges: [Point; 4] = std::array::from_fn(|i| unit(v[(i + 1) % 4] - v[i]));
    for i in 0..4 {
        let turn = edges[(i + 3) % 4].cross(edges[i]);
        if !(turn > tol.par) {
            return Err(Error::NotConvex(format!(
                "turn at vertex ({}, {}) is {turn:e}",
                v[i].x, v[i].y
            )));
        }
    }
    let parallel_pairs = (0..2)
        .filter(|&i| edges[i].cross(edges[i + 2]).abs() < tol.par)
        .count();
    let kind = match parallel_pairs {
        0 => QuadKind::Trapezium,
        1 => QuadKind::Trapezoid,
        _ => QuadKind::Parallelogram,
    };
    Ok(ConvexQuad { vertices: v, kind })
}
