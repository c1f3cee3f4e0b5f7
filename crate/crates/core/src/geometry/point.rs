//! Affine points, homogeneous points and lines.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Vector3;

use crate::error::{Error, Result};

/// A point (or vector) of the affine plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// `self + u * (other - self)`.
    pub fn lerp(self, other: Point, u: f64) -> Point {
        self + (other - self) * u
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn to_hom(self) -> HomPoint {
        HomPoint::new(self.x, self.y, 1.0)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// A point of the projective plane. `w == 0` is a point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomPoint {
    pub x: f64,
    pub y: f64,
    pub w: f64,
}

impl HomPoint {
    pub const fn new(x: f64, y: f64, w: f64) -> Self {
        HomPoint { x, y, w }
    }

    pub fn from_vector(v: &Vector3<f64>) -> Self {
        HomPoint::new(v[0], v[1], v[2])
    }

    pub fn vector(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.w)
    }

    pub fn is_at_infinity(&self) -> bool {
        self.w == 0.0
    }

    /// The affine point, if finite.
    pub fn to_point(&self) -> Option<Point> {
        (self.w != 0.0).then(|| Point::new(self.x / self.w, self.y / self.w))
    }

    /// Representative with `w = 1`, or a unit direction with `w = 0` when
    /// `|w| <= tol * |(x, y)|`. Directions have their first nonzero
    /// component positive.
    pub fn normalized(&self, tol: f64) -> HomPoint {
        let planar = self.x.hypot(self.y);
        if self.w.abs() <= tol * planar {
            let sign = if self.x > 0.0 || (self.x == 0.0 && self.y > 0.0) {
                1.0
            } else {
                -1.0
            };
            HomPoint::new(sign * self.x / planar, sign * self.y / planar, 0.0)
        } else {
            HomPoint::new(self.x / self.w, self.y / self.w, 1.0)
        }
    }
}

impl From<Point> for HomPoint {
    fn from(p: Point) -> Self {
        p.to_hom()
    }
}

/// The line `a x + b y + c = 0`, normalized with `a² + b² = 1` and the first
/// nonzero of `(a, b)` positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    a: f64,
    b: f64,
    c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let n = a.hypot(b);
        if !(n > 0.0) || !c.is_finite() || !n.is_finite() {
            return Err(Error::DegenerateLine);
        }
        let sign = if a > 0.0 || (a == 0.0 && b > 0.0) {
            1.0
        } else {
            -1.0
        };
        let k = sign / n;
        Ok(Line {
            a: a * k,
            b: b * k,
            c: c * k,
        })
    }

    pub fn from_vector(v: &Vector3<f64>) -> Result<Self> {
        Line::new(v[0], v[1], v[2])
    }

    /// Line through two distinct points.
    pub fn through(p: Point, q: Point) -> Result<Self> {
        Line::from_vector(&p.to_hom().vector().cross(&q.to_hom().vector()))
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn vector(&self) -> Vector3<f64> {
        Vector3::new(self.a, self.b, self.c)
    }

    /// Signed distance of `p` from the line.
    pub fn eval(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    /// Intersection point, at infinity for parallel lines.
    pub fn meet(&self, other: &Line) -> HomPoint {
        HomPoint::from_vector(&self.vector().cross(&other.vector()))
    }
}
