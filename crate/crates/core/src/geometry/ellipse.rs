//! Ellipses in geometric (center, axes, rotation, foci) form.

use std::f64::consts::{FRAC_PI_2, PI};

use super::conic::{classify_conic, Conic, ConicKind};
use super::point::Point;
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// An ellipse with `semi_major >= semi_minor > 0` and the major axis at
/// `angle ∈ (−π/2, π/2]` from the x axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseGeo {
    pub center: Point,
    pub semi_major: f64,
    pub semi_minor: f64,
    pub angle: f64,
    pub focus1: Point,
    pub focus2: Point,
}

impl EllipseGeo {
    pub fn new(center: Point, semi_major: f64, semi_minor: f64, angle: f64) -> Result<Self> {
        if !(center.is_finite() && semi_major.is_finite() && angle.is_finite()) {
            return Err(Error::InvalidEllipse("non-finite parameter".into()));
        }
        if !(semi_minor > 0.0) || semi_major < semi_minor {
            return Err(Error::InvalidEllipse(format!(
                "need semi_major >= semi_minor > 0, got {semi_major} and {semi_minor}"
            )));
        }
        let angle = normalize_angle(angle);
        let c = ((semi_major - semi_minor) * (semi_major + semi_minor)).sqrt();
        let (s, co) = angle.sin_cos();
        let offset = Point::new(c * co, c * s);
        Ok(EllipseGeo {
            center,
            semi_major,
            semi_minor,
            angle,
            focus1: center + offset,
            focus2: center - offset,
        })
    }

    pub fn area(&self) -> f64 {
        PI * self.semi_major * self.semi_minor
    }

    /// Half the focal distance.
    pub fn linear_eccentricity(&self) -> f64 {
        0.5 * self.focus1.distance(self.focus2)
    }

    /// Boundary point at eccentric anomaly `theta`.
    pub fn point_at(&self, theta: f64) -> Point {
        let (s, c) = self.angle.sin_cos();
        let (u, v) = (self.semi_major * theta.cos(), self.semi_minor * theta.sin());
        self.center + Point::new(c * u - s * v, s * u + c * v)
    }
}

/// Reduces an axis direction to `(−π/2, π/2]`.
pub fn normalize_angle(angle: f64) -> f64 {
    let mut a = angle % PI;
    if a > FRAC_PI_2 {
        a -= PI;
    } else if a <= -FRAC_PI_2 {
        a += PI;
    }
    a
}

pub fn conic_from_ellipse(e: &EllipseGeo) -> Conic {
    let (s, c) = e.angle.sin_cos();
    let ia = 1.0 / (e.semi_major * e.semi_major);
    let ib = 1.0 / (e.semi_minor * e.semi_minor);
    let a = c * c * ia + s * s * ib;
    let b = 2.0 * c * s * (ia - ib);
    let cc = s * s * ia + c * c * ib;
    let (x0, y0) = (e.center.x, e.center.y);
    let d = -2.0 * a * x0 - b * y0;
    let ee = -b * x0 - 2.0 * cc * y0;
    let f = a * x0 * x0 + b * x0 * y0 + cc * y0 * y0 - 1.0;
    Conic::new(a, b, cc, d, ee, f).expect("ellipse coefficients are nonzero")
}

pub fn ellipse_from_conic(c: &Conic, tol: &Tolerances) -> Result<EllipseGeo> {
    let kind = classify_conic(c, tol);
    if kind != ConicKind::RealEllipse {
        return Err(Error::NotAnEllipse(kind.to_string()));
    }
    let center = c
        .center()
        .ok_or_else(|| Error::NotAnEllipse("no center".into()))?;
    ellipse_from_conic_at(c, center)
}

/// Axes and orientation of a conic known to be an ellipse centered at
/// `center`. Avoids solving for the center, which is ill-conditioned for
/// very thin ellipses.
pub fn ellipse_from_conic_at(c: &Conic, center: Point) -> Result<EllipseGeo> {
    let [mut a, mut b, mut cc, ..] = c.coefficients();
    let mut f0 = c.eval(center);
    if a + cc < 0.0 {
        (a, b, cc, f0) = (-a, -b, -cc, -f0);
    }
    // eigenvalues of [[a, b/2], [b/2, cc]], smaller one via det for accuracy
    let mean = 0.5 * (a + cc);
    let r = (0.5 * (a - cc)).hypot(0.5 * b);
    let big = mean + r;
    let small = (a * cc - 0.25 * b * b) / big;
    if !(small > 0.0) || !(f0 < 0.0) {
        return Err(Error::NotAnEllipse("indefinite quadratic part".into()));
    }
    let semi_major = (-f0 / small).sqrt();
    let semi_minor = (-f0 / big).sqrt();
    let angle = if r <= 1e-13 * big {
        0.0
    } else {
        0.5 * b.atan2(a - cc) + FRAC_PI_2
    };
    EllipseGeo::new(center, semi_major, semi_minor.min(semi_major), angle)
}

/// The ellipse with foci `f1`, `f2` passing through `p`.
pub fn ellipse_from_foci_point(f1: Point, f2: Point, p: Point) -> Result<EllipseGeo> {
    let semi_major = 0.5 * (p.distance(f1) + p.distance(f2));
    let c = 0.5 * f1.distance(f2);
    if !(semi_major > c * (1.0 + 1e-12)) || !(semi_major > 0.0) {
        return Err(Error::DegeneratePoint);
    }
    let semi_minor = ((semi_major - c) * (semi_major + c)).sqrt();
    let d = f1 - f2;
    let angle = if c <= 1e-14 * semi_major {
        0.0
    } else {
        d.y.atan2(d.x)
    };
    EllipseGeo::new(f1.midpoint(f2), semi_major, semi_minor, angle)
}
