//! Invertible affine maps of the plane.

use nalgebra::{Matrix2, Matrix3, Vector2};

use super::point::{HomPoint, Line, Point};
use crate::error::{Error, Result};

/// `p ↦ M p + t` with `M = [[m11, m12], [m21, m22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
    pub tx: f64,
    pub ty: f64,
}

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap {
        m11: 1.0,
        m12: 0.0,
        m21: 0.0,
        m22: 1.0,
        tx: 0.0,
        ty: 0.0,
    };

    /// Fails with `SingularMap` when `|det| <= tol_det`.
    pub fn new(
        m11: f64,
        m12: f64,
        m21: f64,
        m22: f64,
        tx: f64,
        ty: f64,
        tol_det: f64,
    ) -> Result<Self> {
        let map = AffineMap {
            m11,
            m12,
            m21,
            m22,
            tx,
            ty,
        };
        let det = map.det();
        if !(det.abs() > tol_det) || ![m11, m12, m21, m22, tx, ty].iter().all(|v| v.is_finite()) {
            return Err(Error::SingularMap(det));
        }
        Ok(map)
    }

    pub fn scaling(sx: f64, sy: f64) -> AffineMap {
        AffineMap {
            m11: sx,
            m22: sy,
            ..Self::IDENTITY
        }
    }

    pub fn translation(tx: f64, ty: f64) -> AffineMap {
        AffineMap {
            tx,
            ty,
            ..Self::IDENTITY
        }
    }

    pub fn rotation(angle: f64) -> AffineMap {
        let (s, c) = angle.sin_cos();
        AffineMap {
            m11: c,
            m12: -s,
            m21: s,
            m22: c,
            ..Self::IDENTITY
        }
    }

    /// The unique map sending `src[i]` to `dst[i]`.
    pub fn from_triangles(src: [Point; 3], dst: [Point; 3], tol_det: f64) -> Result<Self> {
        let s = Matrix2::new(
            src[1].x - src[0].x,
            src[2].x - src[0].x,
            src[1].y - src[0].y,
            src[2].y - src[0].y,
        );
        let d = Matrix2::new(
            dst[1].x - dst[0].x,
            dst[2].x - dst[0].x,
            dst[1].y - dst[0].y,
            dst[2].y - dst[0].y,
        );
        let s_inv = s.try_inverse().ok_or(Error::SingularMap(s.determinant()))?;
        let m = d * s_inv;
        let t = Vector2::new(dst[0].x, dst[0].y) - m * Vector2::new(src[0].x, src[0].y);
        AffineMap::new(
            m[(0, 0)],
            m[(0, 1)],
            m[(1, 0)],
            m[(1, 1)],
            t[0],
            t[1],
            tol_det,
        )
    }

    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(
            self.m11 * p.x + self.m12 * p.y + self.tx,
            self.m21 * p.x + self.m22 * p.y + self.ty,
        )
    }

    /// Linear part only.
    pub fn apply_vector(&self, v: Point) -> Point {
        Point::new(
            self.m11 * v.x + self.m12 * v.y,
            self.m21 * v.x + self.m22 * v.y,
        )
    }

    pub fn apply_hom(&self, p: &HomPoint) -> HomPoint {
        HomPoint::from_vector(&(self.matrix() * p.vector()))
    }

    /// Image of a line: `l' = H⁻ᵀ l`.
    pub fn apply_line(&self, l: &Line) -> Result<Line> {
        let inv = self.inverse()?;
        Line::from_vector(&(inv.matrix().transpose() * l.vector()))
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return Err(Error::SingularMap(det));
        }
        let (a, b, c, d) = (
            self.m22 / det,
            -self.m12 / det,
            -self.m21 / det,
            self.m11 / det,
        );
        Ok(AffineMap {
            m11: a,
            m12: b,
            m21: c,
            m22: d,
            tx: -(a * self.tx + b * self.ty),
            ty: -(c * self.tx + d * self.ty),
        })
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            m11: other.m11 * self.m11 + other.m12 * self.m21,
            m12: other.m11 * self.m12 + other.m12 * self.m22,
            m21: other.m21 * self.m11 + other.m22 * self.m21,
            m22: other.m21 * self.m12 + other.m22 * self.m22,
            tx: other.m11 * self.tx + other.m12 * self.ty + other.tx,
            ty: other.m21 * self.tx + other.m22 * self.ty + other.ty,
        }
    }

    /// Homogeneous 3×3 matrix.
    pub fn matrix(&self) -> Matrix3<f64> {
        Matrix3::new(
            self.m11, self.m12, self.tx, self.m21, self.m22, self.ty, 0.0, 0.0, 1.0,
        )
    }
}
