//! Conics tangent to four fixed lines, as the pencil of dual conics spanned
//! by two point-pair members of the complete quadrilateral.
//!
//! A dual conic `D` is tangent to line `l` iff `lᵀ D l = 0`. For points
//! `p`, `q` the rank-two dual `p qᵀ + q pᵀ` is tangent to every line through
//! `p` or `q`, so picking `p = l1 × l2`, `q = l3 × l4` (and the analogous
//! pair `l1 × l3`, `l2 × l4`) gives two members through all four lines.
//! The center of the point conic `adj(D)` is `D · (0, 0, 1)ᵀ`.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::geometry::{Conic, HomPoint, Line, Point};
use crate::linalg::adjugate;
use crate::tolerance::Tolerances;

/// Relative determinant below which a dual member counts as rank-deficient.
const RANK_EPS: f64 = 1e-12;

/// A symmetric matrix acting on line coordinates, at unit Frobenius norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualConic {
    matrix: Matrix3<f64>,
}

impl DualConic {
    pub fn new(m: Matrix3<f64>) -> Result<Self> {
        let m = (m + m.transpose()) * 0.5;
        let n = m.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::DegenerateConfiguration("zero dual conic".into()));
        }
        Ok(DualConic { matrix: m / n })
    }

    /// Rank-two dual of the point pair `{p, q}`.
    pub fn point_pair(p: &Vector3<f64>, q: &Vector3<f64>) -> Result<Self> {
        DualConic::new(p * q.transpose() + q * p.transpose())
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.matrix
    }

    /// `|lᵀ D l|` (the matrix has unit norm).
    pub fn residual(&self, l: &Line) -> f64 {
        let v = l.vector();
        (v.transpose() * self.matrix * v)[(0, 0)].abs()
    }

    /// Homogeneous center of the underlying point conic.
    pub fn center(&self) -> HomPoint {
        HomPoint::from_vector(&self.matrix.column(2).into_owned())
    }

    pub fn is_degenerate(&self) -> bool {
        self.matrix.determinant().abs() < RANK_EPS || adjugate(&self.matrix).norm() < 1e-14
    }

    /// The point conic `adj(D)`.
    pub fn point_conic(&self) -> Result<Conic> {
        if self.is_degenerate() {
            return Err(Error::DegenerateMember);
        }
        Conic::from_matrix(&adjugate(&self.matrix))
    }
}

/// All dual conics tangent to four lines: `D(λ) = λ_den·d_a + λ_num·d_b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentPencil {
    pub d_a: DualConic,
    pub d_b: DualConic,
    pub lines: [Line; 4],
}

fn unit_point(v: Vector3<f64>) -> Vector3<f64> {
    let v = if v[2] < 0.0 { -v } else { v };
    v / v.norm()
}

pub fn pencil_from_lines(lines: [Line; 4], tol: &Tolerances) -> Result<TangentPencil> {
    let v = lines.map(|l| l.vector());
    for i in 0..4 {
        for j in i + 1..4 {
            if (v[i] - v[j]).norm() < tol.par {
                return Err(Error::DegenerateConfiguration(format!(
                    "lines {i} and {j} coincide"
                )));
            }
        }
    }
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        let det = Matrix3::from_columns(&[v[i], v[j], v[k]]).determinant();
        let scale = v[i].norm() * v[j].norm() * v[k].norm();
        if det.abs() <= tol.par * scale {
            return Err(Error::DegenerateConfiguration(format!(
                "lines {i}, {j}, {k} are concurrent"
            )));
        }
    }
    let d_a = DualConic::point_pair(
        &unit_point(v[0].cross(&v[1])),
        &unit_point(v[2].cross(&v[3])),
    )?;
    let d_b = DualConic::point_pair(
        &unit_point(v[0].cross(&v[2])),
        &unit_point(v[1].cross(&v[3])),
    )?;
    Ok(TangentPencil { d_a, d_b, lines })
}

impl TangentPencil {
    /// Member at projective parameter `(λ_num : λ_den)`; `(1 : 0)` is `d_b`.
    pub fn member(&self, lambda_num: f64, lambda_den: f64) -> Result<DualConic> {
        DualConic::new(self.d_a.matrix * lambda_den + self.d_b.matrix * lambda_num)
    }

    /// Largest tangency residual of a member over the four lines.
    pub fn max_residual(&self, d: &DualConic) -> f64 {
        self.lines.iter().map(|l| d.residual(l)).fold(0.0, f64::max)
    }
}

/// The member centered at `center`, returned as a point conic.
///
/// Solves `D13(λ) − h·D33(λ) = 0` (or the `k` row, whichever is better
/// conditioned) and requires the other row to vanish too.
pub fn member_with_center(
    pencil: &TangentPencil,
    center: Point,
    tol: &Tolerances,
) -> Result<Conic> {
    let (h, k) = (center.x, center.y);
    let row = |m: &Matrix3<f64>| (m[(0, 2)] - h * m[(2, 2)], m[(1, 2)] - k * m[(2, 2)]);
    let (ua, va) = row(&pencil.d_a.matrix);
    let (ub, vb) = row(&pencil.d_b.matrix);
    // λ_den·(ua, va) + λ_num·(ub, vb) = 0
    let (lambda_num, lambda_den) = if ua.abs() + ub.abs() >= va.abs() + vb.abs() {
        (ua, -ub)
    } else {
        (va, -vb)
    };
    if lambda_num == 0.0 && lambda_den == 0.0 {
        return Err(Error::DegenerateMember);
    }
    let d = pencil.member(lambda_num, lambda_den)?;
    let (r1, r2) = row(&d.matrix);
    let scale = 1.0 + h.abs() + k.abs();
    if r1.abs().max(r2.abs()) > tol.center * scale {
        return Err(Error::CenterOffCentersLine);
    }
    d.point_conic()
}

/// The line swept by the centers of the pencil's members.
pub fn centers_line(pencil: &TangentPencil) -> Result<Line> {
    const SAMPLES: [(f64, f64); 8] = [
        (1.0, 1.0),
        (-1.0, 1.0),
        (2.0, 1.0),
        (1.0, 2.0),
        (-2.0, 1.0),
        (-1.0, 2.0),
        (3.0, 1.0),
        (1.0, 3.0),
    ];
    let centers: Vec<Vector3<f64>> = SAMPLES
        .iter()
        .filter_map(|&(n, d)| pencil.member(n, d).ok())
        .filter(|m| !m.is_degenerate())
        .map(|m| {
            let c = m.center().vector();
            c / c.norm()
        })
        .collect();
    let mut best: Option<Vector3<f64>> = None;
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            let l = centers[i].cross(&centers[j]);
            if best.is_none_or(|b| l.norm() > b.norm()) {
                best = Some(l);
            }
        }
    }
    let line_vec = best
        .filter(|l| l.norm() > 1e-9)
        .ok_or_else(|| Error::DegenerateConfiguration("member centers coincide".into()))?;
    let line = Line::from_vector(&line_vec).map_err(|_| {
        Error::DegenerateConfiguration("centers lie on the line at infinity".into())
    })?;
    let lv = line.vector();
    for c in &centers {
        if lv.dot(c).abs() > 1e-9 * lv.norm().max(1.0) {
            return Err(Error::DegenerateConfiguration(
                "member centers are not collinear".into(),
            ));
        }
    }
    Ok(line)
}
