#![allow(dead_code)]

use std::f64::consts::PI;

use inconic::geometry::{validate_quad, AffineMap, Conic, ConvexQuad, Line, Point, QuadKind};
use inconic::Tolerances;
use nalgebra::{DMatrix, Matrix3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum |sin| between opposite sides for a sampled trapezium.
pub const MIN_PARALLELISM: f64 = 1e-3;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn tol() -> Tolerances {
    Tolerances::default()
}

/// Smallest |sin| of the angle between opposite sides.
pub fn parallelism(q: &ConvexQuad) -> f64 {
    let unit = |i: usize| {
        let e = q.edge(i);
        e * (1.0 / e.norm())
    };
    unit(0)
        .cross(unit(2))
        .abs()
        .min(unit(1).cross(unit(3)).abs())
}

/// Smallest exterior turn, a measure of how far the quad is from having a
/// straight angle.
pub fn min_turn(q: &ConvexQuad) -> f64 {
    (0..4)
        .map(|i| {
            let (a, b) = (q.edge(i), q.edge((i + 1) % 4));
            a.cross(b) / (a.norm() * b.norm())
        })
        .fold(f64::INFINITY, f64::min)
}

fn random_convex_points(rng: &mut ChaCha8Rng) -> [Point; 4] {
    let center = Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    let scale = rng.gen_range(0.3..4.0);
    let mut angles: Vec<f64> = (0..4).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
    angles.sort_by(f64::total_cmp);
    let mut pts = [Point::new(0.0, 0.0); 4];
    for (p, a) in pts.iter_mut().zip(angles) {
        let r = scale * rng.gen_range(0.5..1.5);
        *p = center + Point::new(a.cos(), a.sin()) * r;
    }
    pts
}

/// Rejection-sampled convex quad with no parallel sides.
pub fn random_trapezium(rng: &mut ChaCha8Rng) -> ConvexQuad {
    loop {
        let pts = random_convex_points(rng);
        if let Ok(q) = validate_quad(pts, &tol()) {
            if q.kind() == QuadKind::Trapezium
                && parallelism(&q) > MIN_PARALLELISM
                && min_turn(&q) > 1e-2
            {
                return q;
            }
        }
    }
}

/// Random affine image of a quad with exactly one pair of parallel sides.
pub fn random_trapezoid(rng: &mut ChaCha8Rng) -> ConvexQuad {
    loop {
        let a: f64 = rng.gen_range(0.3..3.0);
        let c: f64 = rng.gen_range(-1.0..1.0);
        let b = c + rng.gen_range(0.3..3.0);
        if (a - (b - c)).abs() < 0.1 {
            continue;
        }
        let raw = [
            Point::new(0.0, 0.0),
            Point::new(a, 0.0),
            Point::new(b, 1.0),
            Point::new(c, 1.0),
        ];
        let map = random_affine(rng);
        if let Ok(q) = validate_quad(raw.map(|p| map.apply(p)), &tol()) {
            if q.kind() == QuadKind::Trapezoid && min_turn(&q) > 1e-2 {
                return q;
            }
        }
    }
}

/// Convex quad that is a trapezoid a quarter of the time.
pub fn random_quad(rng: &mut ChaCha8Rng) -> ConvexQuad {
    if rng.gen_bool(0.25) {
        random_trapezoid(rng)
    } else {
        random_trapezium(rng)
    }
}

/// Invertible affine map with bounded condition number.
pub fn random_affine(rng: &mut ChaCha8Rng) -> AffineMap {
    loop {
        let m: [f64; 4] = [0; 4].map(|_| rng.gen_range(-2.0..2.0));
        let det = m[0] * m[3] - m[1] * m[2];
        let frob2 = m.iter().map(|x| x * x).sum::<f64>();
        if det.abs() < 0.2 || frob2 / det.abs() > 20.0 {
            continue;
        }
        let (tx, ty) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        return AffineMap::new(m[0], m[1], m[2], m[3], tx, ty, 1e-12).unwrap();
    }
}

/// The conic tangent to four lines with a given center, as the null vector
/// of the six linear conditions on its dual matrix.
pub fn dual_conic_oracle(lines: &[Line; 4], center: Point) -> Conic {
    // unknowns: D11 D12 D13 D22 D23 D33
    let mut rows = Vec::with_capacity(36);
    for l in lines {
        let (a, b, c) = (l.a(), l.b(), l.c());
        rows.extend_from_slice(&[a * a, 2.0 * a * b, 2.0 * a * c, b * b, 2.0 * b * c, c * c]);
    }
    rows.extend_from_slice(&[0.0, 0.0, 1.0, 0.0, 0.0, -center.x]);
    rows.extend_from_slice(&[0.0, 0.0, 0.0, 0.0, 1.0, -center.y]);
    let m = DMatrix::from_row_slice(6, 6, &rows);
    let svd = m.svd(false, true);
    let v_t = svd.v_t.unwrap();
    let (idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();
    let d: Vec<f64> = v_t.row(idx).iter().copied().collect();
    let dual = Matrix3::new(d[0], d[1], d[2], d[1], d[3], d[4], d[2], d[4], d[5]);
    let point = dual.try_inverse().expect("nondegenerate dual conic");
    Conic::from_matrix(&point).unwrap()
}

/// True if every sampled boundary point of the ellipse satisfies all four
/// side half-planes within `slack`.
pub fn ellipse_inside(
    q: &ConvexQuad,
    e: &inconic::geometry::EllipseGeo,
    samples: usize,
    slack: f64,
) -> bool {
    (0..samples).all(|i| {
        let p = e.point_at(2.0 * PI * i as f64 / samples as f64);
        q.edge_distances(p).iter().all(|d| *d >= -slack)
    })
}

pub fn map_quad(q: &ConvexQuad, map: &AffineMap) -> ConvexQuad {
    validate_quad(q.vertices().map(|p| map.apply(p)), &tol()).unwrap()
}
