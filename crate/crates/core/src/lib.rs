//! Ellipses inscribed in convex quadrilaterals.
//!
//! For a convex quadrilateral the centers of inscribed ellipses fill the open
//! segment between the midpoints of its diagonals. This crate constructs the
//! unique inscribed ellipse for any such center (through the foci of conics
//! tangent to triangle side lines), finds the unique ellipse of maximal area,
//! and extends the construction to tangent hyperbolas centered on the rest of
//! the Newton line inside the quad. An independent dual-conic pencil engine
//! handles trapezoids and cross-checks every result.

// `!(x < tol)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod area_opt;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod inscribed;
mod linalg;
pub mod marden;
pub mod pencil;
pub mod roots;
pub mod tolerance;

pub use error::{Error, Result};
pub use geometry::{ConvexQuad, Point, QuadKind};
pub use tolerance::Tolerances;
