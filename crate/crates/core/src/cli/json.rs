use serde_json::{json, Value};

use crate::area_opt::MaxAreaResult;
use crate::geometry::{Conic, ConicKind, EllipseGeo, HomPoint, Point};
use crate::inscribed::InscribedResult;

/// Values this close to zero print as zero.
const SNAP: f64 = 1e-12;

/// Snaps tiny values to zero and rounds to 15 significant digits.
pub fn round_number(x: f64) -> f64 {
    if x.abs() < SNAP {
        return 0.0;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

pub(crate) fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round_number(x))
    } else {
        Value::Null
    }
}

pub(crate) fn point(p: Point) -> Value {
    json!([num(p.x), num(p.y)])
}

fn hom(p: &HomPoint) -> Value {
    json!([num(p.x), num(p.y), num(p.w)])
}

/// The JSON object describing one ellipse.
pub fn ellipse_output(
    e: &EllipseGeo,
    conic: &Conic,
    tangencies: &[HomPoint; 4],
    kind: ConicKind,
) -> Value {
    json!({
        "center": point(e.center),
        "semi_major": num(e.semi_major),
        "semi_minor": num(e.semi_minor),
        "angle_rad": num(e.angle),
        "foci": [point(e.focus1), point(e.focus2)],
        "conic": conic.coefficients().iter().map(|c| num(*c)).collect::<Vec<_>>(),
        "tangencies": tangencies.iter().map(hom).collect::<Vec<_>>(),
        "area": num(e.area()),
        "classification": kind.as_str(),
    })
}

pub(crate) fn inscribed_output(res: &InscribedResult) -> Value {
    ellipse_output(
        &res.ellipse,
        &res.conic,
        &res.tangencies,
        ConicKind::RealEllipse,
    )
}

pub(crate) fn max_area_output(m: &MaxAreaResult, res: &InscribedResult) -> Value {
    json!({
        "center": point(m.center),
        "area": num(m.area),
        "h0": num(m.h0),
        "ellipse": inscribed_output(res),
    })
}
