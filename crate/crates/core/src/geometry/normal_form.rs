//! Affine normal form: the quad mapped to `(0,0), (1,0), (s,t), (0,1)`.

use super::affine::AffineMap;
use super::point::Point;
use super::quad::{ConvexQuad, QuadKind};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalForm {
    /// Original frame → normalized frame.
    pub map: AffineMap,
    pub s: f64,
    pub t: f64,
    /// Indices into the quad's vertices of the points sent to
    /// `(0,0)`, `(1,0)`, `(s,t)`, `(0,1)` respectively.
    pub labeling: [usize; 4],
    pub kind: QuadKind,
}

impl NormalForm {
    /// Normalized frame → original frame.
    pub fn inverse_map(&self) -> AffineMap {
        self.map.inverse().expect("normal-form map is invertible")
    }

    pub fn is_trapezium(&self) -> bool {
        self.kind == QuadKind::Trapezium
    }

    /// The quad's vertices in the normalized frame.
    pub fn vertices(&self) -> [Point; 4] {
        [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(self.s, self.t),
            Point::new(0.0, 1.0),
        ]
    }
}

/// Trapezia keep the canonical labeling; trapezoids are relabeled so the
/// parallel pair lands on `y = 0` and `y = 1` (`t = 1`).
pub fn normalize(q: &ConvexQuad, tol: &Tolerances) -> Result<NormalForm> {
    let start = match q.kind() {
        QuadKind::Parallelogram => return Err(Error::ParallelogramUnsupported),
        QuadKind::Trapezium => 0,
        QuadKind::Trapezoid => {
            let unit = |p: Point| p * (1.0 / p.norm());
            if unit(q.edge(0)).cross(unit(q.edge(2))).abs() < tol.par {
                0
            } else {
                1
            }
        }
    };
    let labeling = [start, start + 1, start + 2, start + 3].map(|i| i % 4);
    let [p0, p1, p2, p3] = labeling.map(|i| q.vertex(i));
    let map = AffineMap::from_triangles(
        [p0, p1, p3],
        [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ],
        tol.det,
    )?;
    let Point { x: s, y: t } = map.apply(p2);
    if !(s > 0.0 && t > 0.0 && s + t > 1.0) {
        return Err(Error::NumericalFailure(format!(
            "normal form out of range: s={s}, t={t}"
        )));
    }
    Ok(NormalForm {
        map,
        s,
        t,
        labeling,
        kind: q.kind(),
    })
}
