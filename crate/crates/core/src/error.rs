use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("frame endpoints coincide at ({x}, {y})")]
    DegenerateFrame { x: f64, y: f64 },

    #[error("segment endpoints coincide")]
    DegenerateSegment,

    #[error("triangle vertices are collinear")]
    DegenerateTriangle,

    #[error("demand points {0} and {1} share a location")]
    CoincidentPoints(usize, usize),

    #[error("all points are collinear")]
    Collinear,

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("weight of point {id} must be positive and finite, got {weight}")]
    InvalidWeight { id: usize, weight: f64 },

    #[error("coordinates of point {id} are not finite")]
    NonFinite { id: usize },

    #[error("polygon is not convex and counterclockwise")]
    NotConvex,

    #[error("demand point {id} lies outside the feasible region")]
    PointOutsideRegion { id: usize },

    #[error("invalid generator state: {0}")]
    Generator(String),

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("{0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
