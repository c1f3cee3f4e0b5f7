//! Foci and contact points of the conic tangent to a triangle's side lines,
//! obtained from the zeros of a weighted partial-fraction sum
//! `Σ t_k / (z − z_k)` with `t1 + t2 + t3 = 1`.

use num_complex::Complex64;
use num_traits::Num;

use crate::error::{Error, Result};
use crate::geometry::{ellipse_from_foci_point, EllipseGeo, Point};
use crate::roots::monic_complex_roots;
use crate::tolerance::Tolerances;

/// A plane point read as a complex number.
pub type ComplexPoint = Complex64;

pub fn to_complex(p: Point) -> ComplexPoint {
    Complex64::new(p.x, p.y)
}

pub fn to_point(z: ComplexPoint) -> Point {
    Point::new(z.re, z.im)
}

/// Three noncollinear vertices. Side `k` is the side opposite `z_k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleZ {
    pub z: [ComplexPoint; 3],
}

impl TriangleZ {
    pub fn new(z1: ComplexPoint, z2: ComplexPoint, z3: ComplexPoint) -> Result<Self> {
        let area2 = ((z2 - z1).conj() * (z3 - z1)).im;
        let scale = (z2 - z1).norm().max((z3 - z1).norm()).max((z3 - z2).norm());
        if !(area2.abs() > 1e-12 * scale * scale) {
            return Err(Error::DegenerateTriangle);
        }
        Ok(TriangleZ { z: [z1, z2, z3] })
    }

    pub fn from_points(a: Point, b: Point, c: Point) -> Result<Self> {
        TriangleZ::new(to_complex(a), to_complex(b), to_complex(c))
    }

    /// Endpoints of side `k` (0-based), the side not containing vertex `k`.
    pub fn side(&self, k: usize) -> (ComplexPoint, ComplexPoint) {
        match k {
            0 => (self.z[1], self.z[2]),
            1 => (self.z[0], self.z[2]),
            _ => (self.z[0], self.z[1]),
        }
    }
}

/// Weights `(t1, t2, 1 − t1 − t2)`; the third is never stored independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightTriple<T = f64> {
    t1: T,
    t2: T,
    t3: T,
}

impl<T: Num + Copy> WeightTriple<T> {
    pub fn new(t1: T, t2: T) -> Self {
        WeightTriple {
            t1,
            t2,
            t3: T::one() - t1 - t2,
        }
    }

    pub fn t1(&self) -> T {
        self.t1
    }

    pub fn t2(&self) -> T {
        self.t2
    }

    pub fn t3(&self) -> T {
        self.t3
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.t1, self.t2, self.t3]
    }

    pub fn product(&self) -> T {
        self.t1 * self.t2 * self.t3
    }
}

impl<T: Num + Copy + PartialOrd> WeightTriple<T> {
    /// Whether the tangent conic is an ellipse (`t1 t2 t3 > 0`).
    pub fn is_ellipse(&self) -> bool {
        self.product() > T::zero()
    }
}

pub fn marden_validity(w: &WeightTriple) -> bool {
    w.is_ellipse()
}

/// `z² + linear·z + constant`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonicQuadratic {
    pub linear: Complex64,
    pub constant: Complex64,
}

impl MonicQuadratic {
    pub fn from_roots_data(sum: Complex64, product: Complex64) -> Self {
        MonicQuadratic {
            linear: -sum,
            constant: product,
        }
    }

    pub fn root_sum(&self) -> Complex64 {
        -self.linear
    }

    pub fn root_product(&self) -> Complex64 {
        self.constant
    }

    pub fn roots(&self) -> (Complex64, Complex64) {
        monic_complex_roots(self.linear, self.constant)
    }

    /// Largest coefficient difference, relative to the coefficient sizes.
    pub fn relative_distance(&self, other: &MonicQuadratic) -> f64 {
        let scale = 1.0
            + self.linear.norm().max(other.linear.norm())
            + self.constant.norm().max(other.constant.norm());
        (self.linear - other.linear)
            .norm()
            .max((self.constant - other.constant).norm())
            / scale
    }
}

/// Numerator of the partial-fraction sum,
/// `t1(z−z2)(z−z3) + t2(z−z1)(z−z3) + t3(z−z1)(z−z2)`, divided by its
/// leading coefficient `t1 + t2 + t3`.
pub fn focal_polynomial(tri: &TriangleZ, w: &WeightTriple) -> Result<MonicQuadratic> {
    let [z1, z2, z3] = tri.z;
    let [t1, t2, t3] = w.as_array();
    let lead = t1 + t2 + t3;
    if !((lead - 1.0).abs() < 1e-12) {
        return Err(Error::DegenerateFoci(lead));
    }
    let sum = (z2 + z3) * t1 + (z1 + z3) * t2 + (z1 + z2) * t3;
    let product = z2 * z3 * t1 + z1 * z3 * t2 + z1 * z2 * t3;
    Ok(MonicQuadratic::from_roots_data(sum / lead, product / lead))
}

/// The two zeros of the partial-fraction sum (an unordered pair).
pub fn foci_from_weights(
    tri: &TriangleZ,
    w: &WeightTriple,
) -> Result<(ComplexPoint, ComplexPoint)> {
    Ok(focal_polynomial(tri, w)?.roots())
}

/// Contact points `ζ1, ζ2, ζ3` on the sides opposite `z1, z2, z3`:
/// `ζ1 = (t2 z3 + t3 z2)/(t2 + t3)` and cyclically.
pub fn tangent_points(
    tri: &TriangleZ,
    w: &WeightTriple,
    tol: &Tolerances,
) -> Result<[ComplexPoint; 3]> {
    let [z1, z2, z3] = tri.z;
    let [t1, t2, t3] = w.as_array();
    let pairs = [(t2, z3, t3, z2), (t1, z3, t3, z1), (t1, z2, t2, z1)];
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for (k, &(ta, za, tb, zb)) in pairs.iter().enumerate() {
        let denom = ta + tb;
        if denom.abs() <= tol.pair * (ta.abs() + tb.abs()) {
            return Err(Error::AsymptoteContact { side: k });
        }
        out[k] = (za * ta + zb * tb) / denom;
    }
    Ok(out)
}

/// The ellipse with the weights' foci through the first contact point.
pub fn marden_ellipse(tri: &TriangleZ, w: &WeightTriple, tol: &Tolerances) -> Result<EllipseGeo> {
    if !marden_validity(w) {
        return Err(Error::NotEllipse(w.product()));
    }
    let (f1, f2) = foci_from_weights(tri, w)?;
    let zeta = tangent_points(tri, w, tol)?;
    ellipse_from_foci_point(to_point(f1), to_point(f2), to_point(zeta[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{conic_from_ellipse, tangency_residual, Line};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    /// T1 for s = 3, t = 2: vertices 0, 1, −i.
    fn t1_tri() -> TriangleZ {
        TriangleZ::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, -1.0)).unwrap()
    }

    /// T2 for s = 3, t = 2: vertices 0, i, −3.
    fn t2_tri() -> TriangleZ {
        TriangleZ::new(c(0.0, 0.0), c(0.0, 1.0), c(-3.0, 0.0)).unwrap()
    }

    fn contains_pair(found: (Complex64, Complex64), a: Complex64, b: Complex64, eps: f64) -> bool {
        let (x, y) = found;
        ((x - a).norm() < eps && (y - b).norm() < eps)
            || ((x - b).norm() < eps && (y - a).norm() < eps)
    }

    #[test]
    fn four_decimal_foci_first_triangle() {
        let w = WeightTriple::new(-0.25, 1.5);
        let foci = foci_from_weights(&t1_tri(), &w).unwrap();
        assert!(contains_pair(
            foci,
            c(-0.1957, -0.0496),
            c(-0.3043, -1.2004),
            1e-4
        ));
    }

    #[test]
    fn four_decimal_foci_second_triangle() {
        let w = WeightTriple::new(1.0 / 3.0, 0.5);
        let foci = foci_from_weights(&t2_tri(), &w).unwrap();
        assert!(contains_pair(
            foci,
            c(-0.0159, 0.4019),
            c(-2.4841, 0.0981),
            1e-4
        ));
    }

    #[test]
    fn steiner_weights_match_vieta_expansion() {
        let tri = TriangleZ::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        let w = WeightTriple::new(1.0 / 3.0, 1.0 / 3.0);
        let [z1, z2, z3] = tri.z;
        // 3z² − 2(z1+z2+z3)z + (z1z2+z1z3+z2z3) = 0
        let oracle = monic_complex_roots(
            -(z1 + z2 + z3) * (2.0 / 3.0),
            (z1 * z2 + z1 * z3 + z2 * z3) / 3.0,
        );
        let foci = foci_from_weights(&tri, &w).unwrap();
        assert!(contains_pair(foci, oracle.0, oracle.1, 1e-15));
    }

    #[test]
    fn validity_examples() {
        assert!(marden_validity(&WeightTriple::new(-0.25, 1.5)));
        assert!(marden_validity(&WeightTriple::new(1.0 / 3.0, 0.5)));
        assert!(!marden_validity(&WeightTriple::new(0.5, 0.5)));
    }

    #[test]
    fn tangent_points_exact_example() {
        // ζ1 = (−1·(−i) + 2.5·1)/1.5, ζ2 = (−0.5·(−i))/2, ζ3 = (−0.5·1)/(−1.5)
        let w = WeightTriple::new(-0.5, -1.0);
        let z = tangent_points(&t1_tri(), &w, &tol()).unwrap();
        assert!((z[0] - c(5.0 / 3.0, 2.0 / 3.0)).norm() < 1e-15);
        assert!((z[1] - c(0.0, 0.25)).norm() < 1e-15);
        assert!((z[2] - c(1.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn steiner_contacts_are_midpoints() {
        let tri = TriangleZ::new(c(0.0, 0.0), c(4.0, 0.0), c(1.0, 3.0)).unwrap();
        let z = tangent_points(&tri, &WeightTriple::new(1.0 / 3.0, 1.0 / 3.0), &tol()).unwrap();
        for (k, zk) in z.iter().enumerate() {
            let (a, b) = tri.side(k);
            assert!((zk - (a + b) * 0.5).norm() < 1e-15);
        }
    }

    #[test]
    fn vanishing_pair_sum_is_asymptote_contact() {
        // t1 + t3 = 0
        let w = WeightTriple::new(0.5, 1.0);
        assert_eq!(w.t1() + w.t3(), 0.0);
        assert_eq!(
            tangent_points(&t1_tri(), &w, &tol()),
            Err(Error::AsymptoteContact { side: 1 })
        );
    }

    fn side_lines(tri: &TriangleZ) -> Vec<Line> {
        (0..3)
            .map(|k| {
                let (a, b) = tri.side(k);
                Line::through(to_point(a), to_point(b)).unwrap()
            })
            .collect()
    }

    #[test]
    fn second_triangle_ellipse_is_inscribed() {
        let tri = t2_tri();
        let e = marden_ellipse(&tri, &WeightTriple::new(1.0 / 3.0, 0.5), &tol()).unwrap();
        let conic = conic_from_ellipse(&e);
        for l in side_lines(&tri) {
            assert!(tangency_residual(&conic, &l) < 1e-12);
        }
        // all weights positive: boundary samples stay inside the triangle
        let [a, b, cc] = tri.z.map(to_point);
        let orient = (b - a).cross(cc - a).signum();
        for k in 0..64 {
            let p = e.point_at(k as f64 * std::f64::consts::TAU / 64.0);
            for (u, v) in [(a, b), (b, cc), (cc, a)] {
                assert!(orient * (v - u).cross(p - u) > -1e-12);
            }
        }
    }

    #[test]
    fn first_triangle_ellipse_is_tangent_but_not_inscribed() {
        let tri = t1_tri();
        let e = marden_ellipse(&tri, &WeightTriple::new(-0.25, 1.5), &tol()).unwrap();
        let conic = conic_from_ellipse(&e);
        for l in side_lines(&tri) {
            assert!(tangency_residual(&conic, &l) < 1e-12);
        }
        let [a, b, cc] = tri.z.map(to_point);
        assert!(!(0..64).all(|k| {
            let p = e.point_at(k as f64 * std::f64::consts::TAU / 64.0);
            [(a, b), (b, cc), (cc, a)]
                .iter()
                .all(|&(u, v)| (v - u).cross(p - u) <= 0.0)
        }));
    }

    #[test]
    fn steiner_inellipse_area() {
        let tri = TriangleZ::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        let e = marden_ellipse(&tri, &WeightTriple::new(1.0 / 3.0, 1.0 / 3.0), &tol()).unwrap();
        // π·area(ABC)/(3√3) with area 1/2
        let expected = std::f64::consts::PI * 0.5 / (3.0 * 3f64.sqrt());
        assert!((e.area() - expected).abs() < 1e-14);
        assert!((expected - 0.302300).abs() < 1e-6);
    }

    #[test]
    fn invalid_weights_rejected() {
        let r = marden_ellipse(&t1_tri(), &WeightTriple::new(0.5, 0.5), &tol());
        assert!(matches!(r, Err(Error::NotEllipse(_))));
    }

    #[test]
    fn collinear_triangle_rejected() {
        assert_eq!(
            TriangleZ::new(c(0.0, 0.0), c(1.0, 1.0), c(2.0, 2.0)),
            Err(Error::DegenerateTriangle)
        );
    }
}
