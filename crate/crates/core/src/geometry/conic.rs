//! Conics in homogeneous coefficient form.

use std::fmt;

use nalgebra::{Matrix2, Matrix3, SymmetricEigen, Vector2};

use super::affine::AffineMap;
use super::point::{HomPoint, Line, Point};
use crate::error::{Error, Result};
use crate::linalg::{adjugate, symmetrize};
use crate::tolerance::Tolerances;

/// Coefficients smaller than this (after unit normalization) are skipped by
/// the sign rule.
const SIGN_EPS: f64 = 1e-12;

/// `A x² + B xy + C y² + D x + E y + F = 0`, stored at canonical scale: the
/// symmetric matrix `[[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]]` has unit
/// Frobenius norm and the first non-negligible coefficient is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic {
    coeffs: [f64; 6],
}

impl Conic {
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Result<Self> {
        let coeffs = [a, b, c, d, e, f];
        let norm = frobenius(&coeffs);
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::ZeroConic);
        }
        let lead = coeffs
            .iter()
            .copied()
            .find(|v| v.abs() / norm > SIGN_EPS)
            .unwrap_or(1.0);
        let k = lead.signum() / norm;
        Ok(Conic {
            coeffs: coeffs.map(|v| v * k),
        })
    }

    /// From a (not necessarily symmetric) 3×3 matrix; the symmetric part is used.
    pub fn from_matrix(m: &Matrix3<f64>) -> Result<Self> {
        let m = symmetrize(m);
        Conic::new(
            m[(0, 0)],
            2.0 * m[(0, 1)],
            m[(1, 1)],
            2.0 * m[(0, 2)],
            2.0 * m[(1, 2)],
            m[(2, 2)],
        )
    }

    /// `[A, B, C, D, E, F]`.
    pub fn coefficients(&self) -> [f64; 6] {
        self.coeffs
    }

    pub fn matrix(&self) -> Matrix3<f64> {
        let [a, b, c, d, e, f] = self.coeffs;
        Matrix3::new(
            a,
            b / 2.0,
            d / 2.0,
            b / 2.0,
            c,
            e / 2.0,
            d / 2.0,
            e / 2.0,
            f,
        )
    }

    /// Value of the defining polynomial at `p`.
    pub fn eval(&self, p: Point) -> f64 {
        let [a, b, c, d, e, f] = self.coeffs;
        a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f
    }

    /// Gradient of the defining polynomial at `p`.
    pub fn gradient(&self, p: Point) -> Point {
        let [a, b, c, d, e, _] = self.coeffs;
        Point::new(2.0 * a * p.x + b * p.y + d, b * p.x + 2.0 * c * p.y + e)
    }

    /// Center of a central conic (where the gradient vanishes).
    pub fn center(&self) -> Option<Point> {
        let [a, b, c, d, e, _] = self.coeffs;
        let s = Matrix2::new(a, b / 2.0, b / 2.0, c);
        let det = s.determinant();
        if det.abs() <= 1e-15 * (a * a + c * c + b * b / 2.0) {
            return None;
        }
        let x = s.try_inverse()? * Vector2::new(-d / 2.0, -e / 2.0);
        Some(Point::new(x[0], x[1]))
    }

    /// Dual conic matrix (the adjugate).
    pub fn dual(&self) -> Matrix3<f64> {
        adjugate(&self.matrix())
    }

    /// Frobenius distance between canonical matrices, insensitive to the
    /// overall sign so that near-zero leading coefficients cannot flip it.
    pub fn distance(&self, other: &Conic) -> f64 {
        let diff: [f64; 6] = std::array::from_fn(|i| self.coeffs[i] - other.coeffs[i]);
        let sum: [f64; 6] = std::array::from_fn(|i| self.coeffs[i] + other.coeffs[i]);
        frobenius(&diff).min(frobenius(&sum))
    }
}

fn frobenius(c: &[f64; 6]) -> f64 {
    let [a, b, cc, d, e, f] = *c;
    (a * a + cc * cc + f * f + 0.5 * (b * b + d * d + e * e)).sqrt()
}

/// Projective/affine type of a conic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    RealEllipse,
    Hyperbola,
    Parabola,
    DegenerateLines,
    ImaginaryEllipse,
}

impl ConicKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConicKind::RealEllipse => "real_ellipse",
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::Parabola => "parabola",
            ConicKind::DegenerateLines => "degenerate_lines",
            ConicKind::ImaginaryEllipse => "imaginary_ellipse",
        }
    }
}

impl fmt::Display for ConicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rank is judged by the eigenvalue spread of the full matrix, the affine
/// type by the sign of `AC − B²/4` relative to the quadratic part's size.
pub fn classify_conic(c: &Conic, tol: &Tolerances) -> ConicKind {
    let m = c.matrix();
    let eig = SymmetricEigen::new(m).eigenvalues;
    let max_abs = eig.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    let min_abs = eig.iter().fold(f64::INFINITY, |acc, v| acc.min(v.abs()));
    if min_abs <= tol.class * max_abs {
        return ConicKind::DegenerateLines;
    }
    let [a, b, cc, ..] = c.coefficients();
    let quad_scale = a * a + cc * cc + b * b / 2.0;
    let delta = a * cc - b * b / 4.0;
    if delta > tol.class * quad_scale {
        let det: f64 = eig.iter().product();
        if det * (a + cc) < 0.0 {
            ConicKind::RealEllipse
        } else {
            ConicKind::ImaginaryEllipse
        }
    } else if delta < -tol.class * quad_scale {
        ConicKind::Hyperbola
    } else {
        ConicKind::Parabola
    }
}

/// Image of the conic's zero set under `map`: `M' = H⁻ᵀ M H⁻¹`.
pub fn transform_conic(c: &Conic, map: &AffineMap) -> Result<Conic> {
    let h_inv = map.inverse()?.matrix();
    Conic::from_matrix(&(h_inv.transpose() * c.matrix() * h_inv))
}

/// `|lᵀ adj(M) l| / ‖adj(M)‖`: zero iff `l` is tangent, asymptotes included.
/// Infinite for conics of rank ≤ 1, whose adjugate vanishes.
pub fn tangency_residual(c: &Conic, l: &Line) -> f64 {
    let adj = c.dual();
    let n = adj.norm();
    if n == 0.0 {
        return f64::INFINITY;
    }
    let v = l.vector();
    (v.transpose() * adj * v)[(0, 0)].abs() / n
}

/// Contact point of a tangent line: the pole of `l`. Asymptotes give a point
/// at infinity (`w = 0`).
pub fn tangency_point(c: &Conic, l: &Line, tol: &Tolerances) -> Result<HomPoint> {
    let residual = tangency_residual(c, l);
    if !(residual < tol.tan) {
        return Err(Error::NotTangent(residual));
    }
    let pole = c.dual() * l.vector();
    Ok(HomPoint::from_vector(&pole).normalized(tol.tan))
}
