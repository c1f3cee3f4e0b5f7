//! Planar primitives: points, lines, affine maps, conics, ellipses and
//! convex quadrilaterals.

pub mod affine;
pub mod conic;
pub mod ellipse;
pub mod normal_form;
pub mod point;
pub mod quad;

pub use affine::AffineMap;
pub use conic::{
    classify_conic, tangency_point, tangency_residual, transform_conic, Conic, ConicKind,
};
pub use ellipse::{
    conic_from_ellipse, ellipse_from_conic, ellipse_from_conic_at, ellipse_from_foci_point,
    EllipseGeo,
};
pub use normal_form::{normalize, NormalForm};
pub use point::{HomPoint, Line, Point};
pub use quad::{validate_quad, ConvexQuad, QuadKind, SIDE_VERTICES};
