//! The inscribed-ellipse construction.
//!
//! In the normal frame `(0,0), (1,0), (s,t), (0,1)` the side lines `y = 0`,
//! `x = 0` and the line through `(1,0), (s,t)` bound triangle T1 with
//! complex vertices `0, 1, −i·t/(s−1)`; `y = 0`, `x = 0` and the line through
//! `(0,1), (s,t)` bound T2 with vertices `0, i, −s/(t−1)`. A center
//! `(h, L(h))` on the locus fixes Marden weights on both triangles; both
//! focal polynomials reduce to the same monic quadratic, and both ellipses
//! touch `x = 0` at the same point, so they coincide and touch all four
//! sides.

use num_complex::Complex64;
use num_traits::Num;

use crate::error::{Error, Result};
use crate::geometry::{
    classify_conic, conic_from_ellipse, ellipse_from_conic_at, ellipse_from_foci_point,
    tangency_point, tangency_residual, transform_conic, Conic, ConicKind, ConvexQuad, EllipseGeo,
    HomPoint, Line, Point, QuadKind, SIDE_VERTICES,
};
use crate::marden::{focal_polynomial, to_point, MonicQuadratic, TriangleZ, WeightTriple};
use crate::pencil::{member_with_center, pencil_from_lines};
use crate::tolerance::Tolerances;

pub use crate::geometry::{normalize, NormalForm};

/// Tolerance on the agreement of the two focal polynomials.
const FOCAL_AGREEMENT: f64 = 1e-10;

/// The open segment `M1M2` of admissible centers. `m1 < m2`
/// lexicographically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusSegment {
    pub m1: Point,
    pub m2: Point,
    /// Endpoints are excluded.
    pub open: bool,
    /// Set for parallelograms, where `m1 == m2`.
    pub degenerate: bool,
}

impl LocusSegment {
    pub fn point_at(&self, u: f64) -> Point {
        self.m1.lerp(self.m2, u)
    }

    /// Parameter `u` of the projection of `p` onto the Newton line, and the
    /// signed offset from the line in units of `|M2 − M1|`.
    pub fn param_of(&self, p: Point) -> (f64, f64) {
        let d = self.m2 - self.m1;
        let n2 = d.dot(d);
        let r = p - self.m1;
        (r.dot(d) / n2, d.cross(r) / n2)
    }

    pub fn length(&self) -> f64 {
        self.m1.distance(self.m2)
    }
}

/// The diagonal midpoints.
pub fn locus(q: &ConvexQuad) -> LocusSegment {
    let (a, b) = q.diagonal_midpoints();
    let (m1, m2) = if (a.x, a.y) <= (b.x, b.y) {
        (a, b)
    } else {
        (b, a)
    };
    LocusSegment {
        m1,
        m2,
        open: true,
        degenerate: q.kind() == QuadKind::Parallelogram,
    }
}

/// `y = intercept + slope · x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusLine {
    pub intercept: f64,
    pub slope: f64,
}

impl LocusLine {
    pub fn eval(&self, x: f64) -> f64 {
        self.intercept + self.slope * x
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpenInterval {
    pub lo: f64,
    pub hi: f64,
}

impl OpenInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Strict membership, `margin` relative to the width.
    pub fn contains(&self, x: f64, margin: f64) -> bool {
        let m = margin * self.width();
        x > self.lo + m && x < self.hi - m
    }
}

/// `L(x) = (s − t + 2x(t − 1)) / (2(s − 1))` on the interval between `1/2`
/// and `s/2`.
pub fn locus_line(nf: &NormalForm, tol: &Tolerances) -> Result<(LocusLine, OpenInterval)> {
    let (s, t) = (nf.s, nf.t);
    if (s - 1.0).abs() <= tol.par {
        return Err(Error::TrapezoidForm);
    }
    let line = LocusLine {
        intercept: (s - t) / (2.0 * (s - 1.0)),
        slope: (t - 1.0) / (s - 1.0),
    };
    let interval = OpenInterval {
        lo: (0.5f64).min(s / 2.0),
        hi: (0.5f64).max(s / 2.0),
    };
    Ok((line, interval))
}

/// `L(h)` over any field.
pub fn locus_height<T: Num + Copy>(s: T, t: T, h: T) -> T {
    let two = T::one() + T::one();
    (s - t + two * h * (t - T::one())) / (two * (s - T::one()))
}

/// Weights on T1 and T2 for the center `(h, L(h))`, in reduced form:
/// `t1 = (2h − s)/t`, `t2 = 1 − 2h`, `s1 = (t − 1)(2h − s)/(s(s − 1))`,
/// `s2 = (t − 1)(1 − 2h)/(s − 1)`.
pub fn center_weights<T: Num + Copy>(s: T, t: T, h: T) -> (WeightTriple<T>, WeightTriple<T>) {
    let one = T::one();
    let two = one + one;
    let wt = WeightTriple::new((two * h - s) / t, one - two * h);
    let ws = WeightTriple::new(
        (t - one) * (two * h - s) / (s * (s - one)),
        (t - one) * (one - two * h) / (s - one),
    );
    (wt, ws)
}

/// Weights for an arbitrary center `(h, k)` from the center conditions
/// `t1 = 2h − 1 − 2k(s−1)/t`, `t2 = 1 − 2h`, `s1 = 2k − 1 − 2h(t−1)/s`,
/// `s2 = 1 − 2k`. Agrees with [`center_weights`] when `k = L(h)`.
pub fn center_weights_general<T: Num + Copy>(
    s: T,
    t: T,
    h: T,
    k: T,
) -> (WeightTriple<T>, WeightTriple<T>) {
    let one = T::one();
    let two = one + one;
    let wt = WeightTriple::new(two * h - one - two * k * (s - one) / t, one - two * h);
    let ws = WeightTriple::new(two * k - one - two * h * (t - one) / s, one - two * k);
    (wt, ws)
}

/// Triangles T1 and T2 of the normal frame.
pub fn normal_triangles(nf: &NormalForm) -> Result<(TriangleZ, TriangleZ)> {
    let (s, t) = (nf.s, nf.t);
    let zero = Complex64::new(0.0, 0.0);
    let t1 = TriangleZ::new(
        zero,
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, -t / (s - 1.0)),
    )?;
    let t2 = TriangleZ::new(
        zero,
        Complex64::new(0.0, 1.0),
        Complex64::new(-s / (t - 1.0), 0.0),
    )?;
    Ok((t1, t2))
}

pub fn weights_from_center(
    nf: &NormalForm,
    h: f64,
    tol: &Tolerances,
) -> Result<(WeightTriple, WeightTriple)> {
    if !nf.is_trapezium() {
        return Err(Error::TrapezoidForm);
    }
    let (_, interval) = locus_line(nf, tol)?;
    if !interval.contains(h, tol.interval) {
        return Err(Error::CenterOffLocus(format!(
            "h = {h} outside ({}, {})",
            interval.lo, interval.hi
        )));
    }
    Ok(center_weights(nf.s, nf.t, h))
}

/// The shared monic focal quadratic `z² − 2(h + iL(h))z + i(s − 2h)/(s − 1)`,
/// after checking that both triangles' focal polynomials reduce to it.
pub fn foci_quadratic(nf: &NormalForm, h: f64, tol: &Tolerances) -> Result<MonicQuadratic> {
    let (wt, ws) = weights_from_center(nf, h, tol)?;
    let (line, _) = locus_line(nf, tol)?;
    let (s, _) = (nf.s, nf.t);
    let monic = MonicQuadratic::from_roots_data(
        Complex64::new(2.0 * h, 2.0 * line.eval(h)),
        Complex64::new(0.0, (s - 2.0 * h) / (s - 1.0)),
    );
    let (tri1, tri2) = normal_triangles(nf)?;
    let p = focal_polynomial(&tri1, &wt)?;
    let q = focal_polynomial(&tri2, &ws)?;
    let gap = p.relative_distance(&monic).max(q.relative_distance(&monic));
    if !(gap < FOCAL_AGREEMENT) {
        return Err(Error::NumericalFailure(format!(
            "focal polynomials disagree by {gap:e}"
        )));
    }
    Ok(monic)
}

/// Contact point on `x = 0` shared by both triangle ellipses.
pub fn shared_contact_point(nf: &NormalForm, h: f64) -> Point {
    Point::new(0.0, (nf.s - 2.0 * h) / (2.0 * h * (nf.s - 1.0)))
}

/// Side lines of the normal frame, in the same order as
/// [`ConvexQuad::side_lines`].
pub fn normal_side_lines(nf: &NormalForm) -> [Line; 4] {
    let v = nf.vertices();
    SIDE_VERTICES.map(|(i, j)| Line::through(v[i], v[j]).expect("distinct vertices"))
}

/// The inscribed ellipse for one center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribedResult {
    pub ellipse: EllipseGeo,
    pub conic: Conic,
    /// Contact points, one per side line in [`SIDE_VERTICES`] order.
    pub tangencies: [HomPoint; 4],
    /// Weights on T1; absent for trapezoids, which use the pencil path.
    pub weights_t: Option<WeightTriple>,
    /// Weights on T2; absent for trapezoids.
    pub weights_s: Option<WeightTriple>,
}

impl InscribedResult {
    pub fn tangency_residuals(&self, q: &ConvexQuad) -> [f64; 4] {
        q.side_lines().map(|l| tangency_residual(&self.conic, &l))
    }

    pub fn area(&self) -> f64 {
        self.ellipse.area()
    }
}

fn check_on_locus(q: &ConvexQuad, center: Point, tol: &Tolerances) -> Result<LocusSegment> {
    if q.kind() == QuadKind::Parallelogram {
        return Err(Error::ParallelogramUnsupported);
    }
    let seg = locus(q);
    let (u, offset) = seg.param_of(center);
    if !(offset.abs() <= tol.on) {
        return Err(Error::CenterOffLocus(format!(
            "({}, {}) is off the Newton line (relative offset {offset:e})",
            center.x, center.y
        )));
    }
    if !(u > tol.interval && u < 1.0 - tol.interval) {
        return Err(Error::CenterOffLocus(format!(
            "({}, {}) is outside the open segment (u = {u})",
            center.x, center.y
        )));
    }
    Ok(seg)
}

fn numerical(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::NumericalFailure(format!("{what}: {e}"))
}

/// The unique ellipse inscribed in `q` with the given center.
pub fn inscribe_at_center(
    q: &ConvexQuad,
    center: Point,
    tol: &Tolerances,
) -> Result<InscribedResult> {
    check_on_locus(q, center, tol)?;
    match q.kind() {
        QuadKind::Trapezium => inscribe_trapezium(q, center, tol),
        _ => inscribe_by_pencil(q, center, tol),
    }
}

/// `inscribe_at_center` at `M1 + u (M2 − M1)`.
pub fn inscribe_at_param(q: &ConvexQuad, u: f64, tol: &Tolerances) -> Result<InscribedResult> {
    if q.kind() == QuadKind::Parallelogram {
        return Err(Error::ParallelogramUnsupported);
    }
    if !(u > tol.interval && u < 1.0 - tol.interval) {
        return Err(Error::CenterOffLocus(format!("u = {u} outside (0, 1)")));
    }
    inscribe_at_center(q, locus(q).point_at(u), tol)
}

fn inscribe_trapezium(q: &ConvexQuad, center: Point, tol: &Tolerances) -> Result<InscribedResult> {
    let nf = normalize(q, tol)?;
    let Point { x: h, y: k } = nf.map.apply(center);
    let (line, _) = locus_line(&nf, tol)?;
    let span = (nf.s - 1.0).hypot(nf.t - 1.0);
    if (k - line.eval(h)).abs() > tol.on * span.max(1.0) {
        return Err(Error::CenterOffLocus(format!(
            "k = {k} but L(h) = {}",
            line.eval(h)
        )));
    }
    let (wt, ws) = weights_from_center(&nf, h, tol)?;
    let (f1, f2) = foci_quadratic(&nf, h, tol)?.roots();
    let touch = shared_contact_point(&nf, h);
    let local = ellipse_from_foci_point(to_point(f1), to_point(f2), touch)
        .map_err(numerical("focal ellipse"))?;
    let local_conic = conic_from_ellipse(&local);
    for (i, l) in normal_side_lines(&nf).iter().enumerate() {
        let r = tangency_residual(&local_conic, l);
        if !(r < tol.tan) {
            return Err(Error::NumericalFailure(format!(
                "side {i} residual {r:e} in normal frame"
            )));
        }
    }
    let conic = transform_conic(&local_conic, &nf.inverse_map())?;
    finish(q, center, conic, Some(wt), Some(ws), tol)
}

fn inscribe_by_pencil(q: &ConvexQuad, center: Point, tol: &Tolerances) -> Result<InscribedResult> {
    let pencil = pencil_from_lines(q.side_lines(), tol).map_err(numerical("pencil"))?;
    let conic = member_with_center(&pencil, center, tol).map_err(|e| match e {
        Error::CenterOffCentersLine => Error::CenterOffLocus("off the line of centers".into()),
        other => Error::NumericalFailure(other.to_string()),
    })?;
    let kind = classify_conic(&conic, tol);
    if kind != ConicKind::RealEllipse {
        return Err(Error::NumericalFailure(format!(
            "pencil member is a {kind}"
        )));
    }
    finish(q, center, conic, None, None, tol)
}

fn finish(
    q: &ConvexQuad,
    center: Point,
    conic: Conic,
    weights_t: Option<WeightTriple>,
    weights_s: Option<WeightTriple>,
    tol: &Tolerances,
) -> Result<InscribedResult> {
    let kind = classify_conic(&conic, tol);
    if kind != ConicKind::RealEllipse {
        return Err(Error::NumericalFailure(format!(
            "constructed conic is a {kind}"
        )));
    }
    let ellipse = ellipse_from_conic_at(&conic, center).map_err(numerical("ellipse"))?;
    // solving for the conic's own center loses (a/b)^2 in accuracy
    let cond = (ellipse.semi_major / ellipse.semi_minor).powi(2);
    let err = conic.center().map_or(f64::INFINITY, |c| c.distance(center));
    if !(err <= tol.center * q.diameter() * cond) {
        return Err(Error::NumericalFailure(format!("center error {err:e}")));
    }
    let tangencies = contact_points(q, &conic, tol)?;
    Ok(InscribedResult {
        ellipse,
        conic,
        tangencies,
        weights_t,
        weights_s,
    })
}

fn contact_points(q: &ConvexQuad, conic: &Conic, tol: &Tolerances) -> Result<[HomPoint; 4]> {
    let lines = q.side_lines();
    let mut out = [HomPoint::new(0.0, 0.0, 1.0); 4];
    for (slot, l) in out.iter_mut().zip(lines.iter()) {
        *slot = tangency_point(conic, l, tol).map_err(numerical("contact point"))?;
    }
    Ok(out)
}

/// The open part of the Newton line inside the quad. Parameters are on the
/// same scale as [`LocusSegment::param_of`] (`M1` at 0, `M2` at 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordX {
    pub p_start: Point,
    pub p_end: Point,
    pub u_start: f64,
    pub u_end: f64,
}

pub fn chord_x(q: &ConvexQuad) -> Result<ChordX> {
    if q.kind() == QuadKind::Parallelogram {
        return Err(Error::ParallelogramUnsupported);
    }
    let seg = locus(q);
    let d = seg.m2 - seg.m1;
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for i in 0..4 {
        let e = q.edge(i);
        // inside iff e × (m1 + u d − v_i) > 0
        let base = e.cross(seg.m1 - q.vertex(i));
        let rate = e.cross(d);
        if rate > 0.0 {
            lo = lo.max(-base / rate);
        } else if rate < 0.0 {
            hi = hi.min(-base / rate);
        }
    }
    if !(lo.is_finite() && hi.is_finite() && lo < 0.0 && hi > 1.0) {
        return Err(Error::NumericalFailure(format!(
            "chord clipping gave ({lo}, {hi})"
        )));
    }
    Ok(ChordX {
        p_start: seg.point_at(lo),
        p_end: seg.point_at(hi),
        u_start: lo,
        u_end: hi,
    })
}

/// A conic tangent to all four side lines with a prescribed center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentConic {
    pub conic: Conic,
    pub kind: ConicKind,
    /// Contact points in [`SIDE_VERTICES`] order; `w = 0` marks an asymptote.
    pub tangencies: [HomPoint; 4],
}

/// Ellipse for centers in the locus, hyperbola elsewhere on the chord.
pub fn tangent_conic_at_center(
    q: &ConvexQuad,
    center: Point,
    tol: &Tolerances,
) -> Result<TangentConic> {
    let chord = chord_x(q)?;
    let seg = locus(q);
    let (u, offset) = seg.param_of(center);
    if !(offset.abs() <= tol.on) {
        return Err(Error::CenterOffChord(format!(
            "relative offset {offset:e} from the Newton line"
        )));
    }
    if !(u > chord.u_start + tol.interval && u < chord.u_end - tol.interval) {
        return Err(Error::CenterOffChord(format!(
            "u = {u} outside ({}, {})",
            chord.u_start, chord.u_end
        )));
    }
    if u.abs() <= tol.interval || (u - 1.0).abs() <= tol.interval {
        return Err(Error::DegenerateAtMidpoint);
    }
    let pencil = pencil_from_lines(q.side_lines(), tol).map_err(numerical("pencil"))?;
    let conic = member_with_center(&pencil, center, tol).map_err(|e| match e {
        Error::DegenerateMember => Error::DegenerateAtMidpoint,
        Error::CenterOffCentersLine => Error::CenterOffChord("off the line of centers".into()),
        other => Error::NumericalFailure(other.to_string()),
    })?;
    let kind = classify_conic(&conic, tol);
    let tangencies = contact_points(q, &conic, tol)?;
    Ok(TangentConic {
        conic,
        kind,
        tangencies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_quad;
    use crate::marden::tangent_points;
    use num_rational::Ratio;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn quad(raw: [(f64, f64); 4]) -> ConvexQuad {
        validate_quad(raw.map(Point::from), &tol()).unwrap()
    }

    const QUAD: [(f64, f64); 4] = [(0.0, 0.0), (1.0, 0.0), (3.0, 2.0), (0.0, 1.0)];
    const SQUARE: [(f64, f64); 4] = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn locus_of_example() {
        let seg = locus(&quad(QUAD));
        assert_eq!(seg.m1, Point::new(0.5, 0.5));
        assert_eq!(seg.m2, Point::new(1.5, 1.0));
        assert!(!seg.degenerate);
    }

    #[test]
    fn locus_of_square_is_a_point() {
        let seg = locus(&quad(SQUARE));
        assert!(seg.degenerate);
        assert_eq!(seg.m1, seg.m2);
        assert_eq!(seg.m1, Point::new(0.5, 0.5));
    }

    #[test]
    fn locus_line_example() {
        let nf = normalize(&quad(QUAD), &tol()).unwrap();
        let (line, interval) = locus_line(&nf, &tol()).unwrap();
        // L(x) = (1 + 2x)/4
        assert!((line.intercept - 0.25).abs() < 1e-15 && (line.slope - 0.5).abs() < 1e-15);
        assert_eq!((interval.lo, interval.hi), (0.5, 1.5));
        assert_eq!(line.eval(0.5), 0.5);
        assert_eq!(line.eval(1.5), 1.0);
    }

    #[test]
    fn locus_height_passes_through_midpoints_exactly() {
        let (s, t) = (r(4, 1), r(2, 1));
        assert_eq!(locus_height(s, t, r(4, 3)), r(7, 9));
        for (s, t) in [(r(3, 1), r(2, 1)), (r(7, 5), r(1, 3)), (r(1, 2), r(5, 2))] {
            assert_eq!(locus_height(s, t, r(1, 2)), r(1, 2));
            assert_eq!(locus_height(s, t, s / 2), t / 2);
        }
    }

    #[test]
    fn exact_weights_example() {
        let (s, t, h) = (r(3, 1), r(2, 1), r(1, 1));
        let (wt, ws) = center_weights(s, t, h);
        assert_eq!(wt.as_array(), [r(-1, 2), r(-1, 1), r(5, 2)]);
        assert_eq!(ws.as_array(), [r(-1, 6), r(-1, 2), r(5, 3)]);
        assert_eq!(wt.product(), r(5, 4));
        assert_eq!(ws.product(), r(5, 36));
        let k = locus_height(s, t, h);
        assert_eq!(k, r(3, 4));
        assert_eq!(center_weights_general(s, t, h, k), (wt, ws));
    }

    #[test]
    fn reduced_weights_match_center_conditions_exactly() {
        for (sn, tn, hn) in [(3, 2, 1), (7, 3, 2), (1, 5, 1), (9, 1, 3), (2, 7, 1)] {
            for d in 2..6 {
                let (s, t, h) = (r(sn, 1), r(tn, d), r(hn, d));
                if s == r(1, 1) || t == r(1, 1) {
                    continue;
                }
                let k = locus_height(s, t, h);
                assert_eq!(center_weights(s, t, h), center_weights_general(s, t, h, k));
            }
        }
    }

    #[test]
    fn weight_products_closed_form() {
        // t1t2t3 = (s − 2h)(2h − 1)(s + 2h(t−1))/t² and
        // s1s2s3 = (s + 2h(t−1))(2h − 1)(s − 2h)(t−1)²/(s²(s−1)²)
        for (s, t, h) in [
            (r(3, 1), r(2, 1), r(1, 1)),
            (r(5, 2), r(1, 3), r(6, 5)),
            (r(1, 3), r(4, 1), r(2, 5)),
        ] {
            let (wt, ws) = center_weights(s, t, h);
            let two = r(2, 1);
            let one = r(1, 1);
            let g = s + two * h * (t - one);
            assert_eq!(wt.product(), (s - two * h) * (two * h - one) * g / (t * t));
            assert_eq!(
                ws.product(),
                g * (two * h - one) * (s - two * h) * (t - one) * (t - one)
                    / (s * s * (s - one) * (s - one))
            );
        }
    }

    #[test]
    fn weights_off_interval_rejected() {
        let nf = normalize(&quad(QUAD), &tol()).unwrap();
        assert!(matches!(
            weights_from_center(&nf, 0.5, &tol()),
            Err(Error::CenterOffLocus(_))
        ));
        assert!(matches!(
            weights_from_center(&nf, 1.6, &tol()),
            Err(Error::CenterOffLocus(_))
        ));
        let (wt, _) = weights_from_center(&nf, 0.5 + 1e-6, &tol()).unwrap();
        assert!(wt.product() > 0.0 && wt.product() < 1e-5);
    }

    #[test]
    fn focal_quadratic_example() {
        let nf = normalize(&quad(QUAD), &tol()).unwrap();
        let m = foci_quadratic(&nf, 1.0, &tol()).unwrap();
        assert!((m.linear - Complex64::new(-2.0, -1.5)).norm() < 1e-15);
        assert!((m.constant - Complex64::new(0.0, 0.5)).norm() < 1e-15);
        let (a, b) = m.roots();
        let expect = [
            Complex64::new(1.87436, 1.32184),
            Complex64::new(0.12564, 0.17816),
        ];
        assert!(
            ((a - expect[0]).norm() < 1e-5 && (b - expect[1]).norm() < 1e-5)
                || ((a - expect[1]).norm() < 1e-5 && (b - expect[0]).norm() < 1e-5)
        );
        assert!(((a + b) * 0.5 - Complex64::new(1.0, 0.75)).norm() < 1e-15);
    }

    #[test]
    fn first_triangle_polynomial() {
        // 2z² + (1 + 2.5i)z + 0.5i: monic form of the first worked example
        let nf = normalize(&quad(QUAD), &tol()).unwrap();
        let (tri1, _) = normal_triangles(&nf).unwrap();
        let p = focal_polynomial(&tri1, &WeightTriple::new(-0.25, 1.5)).unwrap();
        assert!((p.linear - Complex64::new(0.5, 1.25)).norm() < 1e-15);
        assert!((p.constant - Complex64::new(0.0, 0.25)).norm() < 1e-15);
    }

    #[test]
    fn inscribe_worked_example() {
        let q = quad(QUAD);
        let res = inscribe_at_center(&q, Point::new(1.0, 0.75), &tol()).unwrap();
        let e = res.ellipse;
        assert!(e.center.distance(Point::new(1.0, 0.75)) < 1e-12);
        assert!((e.semi_major - 1.15196).abs() < 1e-5);
        assert!((e.semi_minor - 0.48528).abs() < 1e-5);
        assert!((e.angle - 0.579193).abs() < 1e-5);
        let expected = [
            (1.0 / 3.0, 0.0),
            (0.0, 0.25),
            (5.0 / 3.0, 2.0 / 3.0),
            (9.0 / 7.0, 10.0 / 7.0),
        ];
        for (p, (x, y)) in res.tangencies.iter().zip(expected) {
            assert_eq!(p.w, 1.0);
            assert!((p.x - x).abs() < 1e-10 && (p.y - y).abs() < 1e-10, "{p:?}");
        }
        for r in res.tangency_residuals(&q) {
            assert!(r < 1e-12);
        }
    }

    #[test]
    fn contact_points_agree_with_marden_formulas() {
        let q = quad(QUAD);
        let nf = normalize(&q, &tol()).unwrap();
        let (tri1, tri2) = normal_triangles(&nf).unwrap();
        let (wt, ws) = weights_from_center(&nf, 1.0, &tol()).unwrap();
        let z1 = tangent_points(&tri1, &wt, &tol()).unwrap();
        let z2 = tangent_points(&tri2, &ws, &tol()).unwrap();
        let res = inscribe_at_center(&q, Point::new(1.0, 0.75), &tol()).unwrap();
        let found: Vec<Point> = res
            .tangencies
            .iter()
            .map(|p| p.to_point().unwrap())
            .collect();
        // T1 sides: ζ1 on L3, ζ2 on L2 (x = 0), ζ3 on L1 (y = 0)
        assert!(found[2].distance(to_point(z1[0])) < 1e-12);
        assert!(found[1].distance(to_point(z1[1])) < 1e-12);
        assert!(found[0].distance(to_point(z1[2])) < 1e-12);
        // T2 = (0, i, −s/(t−1)): ζ1 on L4, ζ2 on y = 0, ζ3 on x = 0
        assert!(found[3].distance(to_point(z2[0])) < 1e-12);
        assert!(found[0].distance(to_point(z2[1])) < 1e-12);
        assert!(found[1].distance(to_point(z2[2])) < 1e-12);
        assert!(found[1].distance(shared_contact_point(&nf, 1.0)) < 1e-12);
    }

    #[test]
    fn endpoints_are_excluded() {
        let q = quad(QUAD);
        let r = inscribe_at_center(&q, Point::new(0.5, 0.5), &tol());
        assert!(matches!(r, Err(Error::CenterOffLocus(_))));
        assert!(matches!(
            inscribe_at_param(&q, 0.0, &tol()),
            Err(Error::CenterOffLocus(_))
        ));
        assert!(matches!(
            inscribe_at_param(&q, 1e-12, &tol()),
            Err(Error::CenterOffLocus(_))
        ));
    }

    #[test]
    fn off_line_center_rejected() {
        let r = inscribe_at_center(&quad(QUAD), Point::new(0.7, 0.7), &tol());
        assert!(matches!(r, Err(Error::CenterOffLocus(_))));
    }

    #[test]
    fn param_midpoint_is_example_center() {
        let q = quad(QUAD);
        let a = inscribe_at_param(&q, 0.5, &tol()).unwrap();
        let b = inscribe_at_center(&q, Point::new(1.0, 0.75), &tol()).unwrap();
        assert!(a.conic.distance(&b.conic) < 1e-14);
    }

    #[test]
    fn kite_ellipse_is_symmetric() {
        let c = 2.0;
        let q = quad([(0.0, 0.0), (1.0, 0.0), (c, c), (0.0, 1.0)]);
        let res = inscribe_at_param(&q, 0.4, &tol()).unwrap();
        let [a, b, cc, d, e, f] = res.conic.coefficients();
        let swapped = Conic::new(cc, b, a, e, d, f).unwrap();
        assert!(res.conic.distance(&swapped) < 1e-9);
    }

    #[test]
    fn parallelogram_rejected() {
        let q = quad(SQUARE);
        assert_eq!(
            inscribe_at_center(&q, Point::new(0.5, 0.5), &tol()),
            Err(Error::ParallelogramUnsupported)
        );
        assert_eq!(
            inscribe_at_param(&q, 0.5, &tol()),
            Err(Error::ParallelogramUnsupported)
        );
        assert_eq!(chord_x(&q), Err(Error::ParallelogramUnsupported));
    }

    #[test]
    fn trapezoid_uses_pencil() {
        let q = quad([(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 1.0)]);
        let res = inscribe_at_param(&q, 0.3, &tol()).unwrap();
        assert!(res.weights_t.is_none() && res.weights_s.is_none());
        for r in res.tangency_residuals(&q) {
            assert!(r < 1e-10);
        }
    }

    #[test]
    fn chord_contains_locus_and_ends_on_boundary() {
        let q = quad(QUAD);
        let chord = chord_x(&q).unwrap();
        assert!(chord.u_start < 0.0 && chord.u_end > 1.0);
        for p in [chord.p_start, chord.p_end] {
            let on_side = q.side_lines().iter().any(|l| l.eval(p).abs() < 1e-12);
            assert!(on_side);
        }
        // y = (1 + 2x)/4 meets x = 0 at y = 1/4 and y = x − 1 at (5/2, 3/2)
        assert!(chord.p_start.distance(Point::new(0.0, 0.25)) < 1e-12);
        assert!(chord.p_end.distance(Point::new(2.5, 1.5)) < 1e-12);
    }

    #[test]
    fn tangent_conic_ellipse_and_hyperbola() {
        let q = quad(QUAD);
        let t = tol();
        let inside = tangent_conic_at_center(&q, Point::new(1.0, 0.75), &t).unwrap();
        assert_eq!(inside.kind, ConicKind::RealEllipse);
        let marden = inscribe_at_center(&q, Point::new(1.0, 0.75), &t).unwrap();
        assert!(inside.conic.distance(&marden.conic) < 1e-8);

        let chord = chord_x(&q).unwrap();
        let beyond = locus(&q).point_at(0.5 * (1.0 + chord.u_end));
        let hyp = tangent_conic_at_center(&q, beyond, &t).unwrap();
        assert_eq!(hyp.kind, ConicKind::Hyperbola);
        for l in q.side_lines() {
            assert!(tangency_residual(&hyp.conic, &l) < 1e-8);
        }
        assert_eq!(
            tangent_conic_at_center(&q, Point::new(0.5, 0.5), &t),
            Err(Error::DegenerateAtMidpoint)
        );
        assert!(matches!(
            tangent_conic_at_center(&q, locus(&q).point_at(chord.u_end + 0.1), &t),
            Err(Error::CenterOffChord(_))
        ));
    }

    #[test]
    fn asymptote_contact_at_chord_end() {
        // A member centered on a side line has that side as an asymptote.
        let q = quad(QUAD);
        let chord = chord_x(&q).unwrap();
        let pencil = pencil_from_lines(q.side_lines(), &tol()).unwrap();
        let conic = member_with_center(&pencil, chord.p_start, &tol()).unwrap();
        assert_eq!(classify_conic(&conic, &tol()), ConicKind::Hyperbola);
        let side = q.side_lines()[1];
        assert!(side.eval(chord.p_start).abs() < 1e-12);
        let contact = tangency_point(&conic, &side, &tol()).unwrap();
        assert!(contact.is_at_infinity());
        assert!((contact.x.abs() - 0.0).abs() < 1e-9 && (contact.y.abs() - 1.0).abs() < 1e-9);
    }
}
