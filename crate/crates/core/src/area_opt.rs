//! Areas of inscribed ellipses and the maximal one.

use std::f64::consts::PI;

use num_traits::Num;

use crate::error::{Error, Result};
use crate::geometry::{ConvexQuad, EllipseGeo, Point, QuadKind};
use crate::inscribed::{inscribe_at_center, inscribe_at_param, locus_line, normalize, NormalForm};
use crate::roots::real_quadratic_roots;
use crate::tolerance::Tolerances;

/// Relative size below which a triangle or sub-triangle counts as flat.
const FLAT: f64 = 1e-12;

/// Unsigned sub-triangle areas for a point `P` and triangle `ABC`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaTriple {
    /// area(BPC)
    pub alpha: f64,
    /// area(CPA)
    pub beta: f64,
    /// area(APB)
    pub gamma: f64,
    pub sigma: f64,
}

impl AreaTriple {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        AreaTriple {
            alpha,
            beta,
            gamma,
            sigma: 0.5 * (alpha + beta + gamma),
        }
    }

    /// `σ(σ − α)(σ − β)(σ − γ)`.
    pub fn heron_product(&self) -> f64 {
        let s = self.sigma;
        s * (s - self.alpha) * (s - self.beta) * (s - self.gamma)
    }
}

fn half_cross(a: Point, b: Point, c: Point) -> f64 {
    0.5 * (b - a).cross(c - a)
}

pub fn area_triple(a: Point, b: Point, c: Point, p: Point) -> Result<(AreaTriple, f64)> {
    let total = half_cross(a, b, c).abs();
    let scale = a.distance(b).max(b.distance(c)).max(c.distance(a));
    if !(total > FLAT * scale * scale) {
        return Err(Error::DegenerateTriangle);
    }
    let t = AreaTriple::new(
        half_cross(b, p, c).abs(),
        half_cross(c, p, a).abs(),
        half_cross(a, p, b).abs(),
    );
    Ok((t, total))
}

/// Area of the conic tangent to the side lines of `ABC` with center `P`:
/// `4π/area(ABC) · √(σ(σ−α)(σ−β)(σ−γ))`.
pub fn triangle_tangent_ellipse_area(a: Point, b: Point, c: Point, p: Point) -> Result<f64> {
    let (t, total) = area_triple(a, b, c, p)?;
    if t.alpha.min(t.beta).min(t.gamma) <= FLAT * total {
        return Err(Error::NoRealEllipse);
    }
    let prod = t.heron_product();
    if !(prod > 0.0) {
        return Err(Error::NoRealEllipse);
    }
    Ok(4.0 * PI / total * prod.sqrt())
}

/// `A(h) = (s − 2h)(2h − 1)(s + 2h(t − 1))` over any field.
pub fn area_cubic_exact<T: Num + Copy>(s: T, t: T, h: T) -> T {
    let one = T::one();
    let two = one + one;
    (s - two * h) * (two * h - one) * (s + two * h * (t - one))
}

pub fn area_cubic(nf: &NormalForm, h: f64) -> f64 {
    area_cubic_exact(nf.s, nf.t, h)
}

/// Coefficients `[a, b, c]` of `A′(h) = a h² + b h + c`.
pub fn area_derivative(nf: &NormalForm) -> [f64; 3] {
    let (s, g) = (nf.s, nf.t - 1.0);
    [
        -24.0 * g,
        2.0 * (4.0 * g * (s + 1.0) - 4.0 * s),
        2.0 * s * (s + 1.0) - 2.0 * g * s,
    ]
}

/// Real roots of `A′`, ascending.
pub fn area_critical_points(nf: &NormalForm) -> Vec<f64> {
    let [a, b, c] = area_derivative(nf);
    real_quadratic_roots(a, b, c)
}

/// Normal-frame area `π/(2|s − 1|) · √A(h)`.
pub fn inscribed_area(nf: &NormalForm, h: f64, tol: &Tolerances) -> Result<f64> {
    let (_, interval) = locus_line(nf, tol)?;
    if !interval.contains(h, tol.interval) {
        return Err(Error::CenterOffLocus(format!(
            "h = {h} outside ({}, {})",
            interval.lo, interval.hi
        )));
    }
    Ok(PI / (2.0 * (nf.s - 1.0).abs()) * area_cubic(nf, h).max(0.0).sqrt())
}

/// `inscribed_area` scaled back to the original frame.
pub fn inscribed_area_original(nf: &NormalForm, h: f64, tol: &Tolerances) -> Result<f64> {
    Ok(inscribed_area(nf, h, tol)? / nf.map.det().abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxAreaResult {
    pub ellipse: EllipseGeo,
    pub center: Point,
    pub area: f64,
    /// Abscissa of the center in the normal frame.
    pub h0: f64,
}

/// The unique inscribed ellipse of maximal area.
pub fn max_area(q: &ConvexQuad, tol: &Tolerances) -> Result<MaxAreaResult> {
    match q.kind() {
        QuadKind::Parallelogram => Err(Error::ParallelogramUnsupported),
        QuadKind::Trapezium => max_area_trapezium(q, tol),
        QuadKind::Trapezoid => max_area_trapezoid(q, tol),
    }
}

fn max_area_trapezium(q: &ConvexQuad, tol: &Tolerances) -> Result<MaxAreaResult> {
    let nf = normalize(q, tol)?;
    let (line, interval) = locus_line(&nf, tol)?;
    let roots = area_critical_points(&nf);
    let inside: Vec<f64> = roots
        .iter()
        .copied()
        .filter(|h| interval.contains(*h, 0.0))
        .collect();
    let h0 = match inside.as_slice() {
        [h] => *h,
        _ => {
            return Err(Error::NumericalFailure(format!(
                "{} critical points of A in ({}, {}): {roots:?}",
                inside.len(),
                interval.lo,
                interval.hi
            )))
        }
    };
    let center = nf.inverse_map().apply(Point::new(h0, line.eval(h0)));
    let res = inscribe_at_center(q, center, tol)?;
    Ok(MaxAreaResult {
        ellipse: res.ellipse,
        center,
        area: res.area(),
        h0,
    })
}

/// Target bracket width in `u` for the golden-section search.
const GOLDEN_TOL: f64 = 1e-12;

fn max_area_trapezoid(q: &ConvexQuad, tol: &Tolerances) -> Result<MaxAreaResult> {
    let nf = normalize(q, tol)?;
    let area = |u: f64| inscribe_at_param(q, u, tol).map(|r| r.area());
    let invphi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (0.0f64, 1.0f64);
    let mut c = b - invphi * (b - a);
    let mut d = a + invphi * (b - a);
    let (mut fc, mut fd) = (area(c)?, area(d)?);
    while b - a > GOLDEN_TOL {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = area(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = area(d)?;
        }
    }
    let res = inscribe_at_param(q, 0.5 * (a + b), tol)?;
    let center = res.ellipse.center;
    Ok(MaxAreaResult {
        ellipse: res.ellipse,
        center,
        area: res.area(),
        h0: nf.map.apply(center).x,
    })
}
