use thiserror::Error;

/// Errors raised by the inscribed-conic constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quadrilateral is not strictly convex: {0}")]
    NotConvex(String),
    #[error("degenerate quadrilateral: {0}")]
    DegenerateQuad(String),
    #[error("degenerate line: coefficients a and b are both zero")]
    DegenerateLine,
    #[error("invalid ellipse parameters: {0}")]
    InvalidEllipse(String),
    #[error("conic coefficients are all zero")]
    ZeroConic,
    #[error("conic is not a real ellipse (classified as {0})")]
    NotAnEllipse(String),
    #[error("affine map is singular (det = {0:e})")]
    SingularMap(f64),
    #[error("line is not tangent to the conic (residual {0:e})")]
    NotTangent(f64),
    #[error("point lies on the focal segment; no ellipse passes through it")]
    DegeneratePoint,
    #[error("triangle vertices are collinear")]
    DegenerateTriangle,
    #[error("focal polynomial has vanishing leading coefficient ({0:e})")]
    DegenerateFoci(f64),
    #[error("weights do not define an ellipse: t1*t2*t3 = {0:e} is not positive")]
    NotEllipse(f64),
    #[error("tangency at infinity on side {side}: pairwise weight sum vanishes")]
    AsymptoteContact { side: usize },
    #[error("parallelograms have no unique inscribed ellipse for a given center")]
    ParallelogramUnsupported,
    #[error("normal form has s = 1; the closed-form locus line is unavailable")]
    TrapezoidForm,
    #[error("center is not on the open locus segment: {0}")]
    CenterOffLocus(String),
    #[error("center is not on the open chord of the Newton line: {0}")]
    CenterOffChord(String),
    #[error("center coincides with a diagonal midpoint")]
    DegenerateAtMidpoint,
    #[error("no real conic with this center is tangent to the triangle's side lines")]
    NoRealEllipse,
    #[error("degenerate line configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("center is not on the line of centers of the tangent pencil")]
    CenterOffCentersLine,
    #[error("pencil member with this center is degenerate")]
    DegenerateMember,
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
