use thiserror::Error;

/// Errors raised by the arithmetic, geometry and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no square class")]
    ZeroSquareClass,

    #[error("discriminant is only defined for effective forms (class <{class}> has coefficient {coeff})")]
    VirtualForm { class: i64, coeff: i64 },

    #[error("invalid quadratic extension parameter {0}: must be squarefree and different from 0 and 1")]
    BadExtension(i64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("trace form of the zero element")]
    ZeroTrace,

    #[error("symbol b{0} already occurs in the polynomial")]
    IndexCollision(u32),

    #[error("no square class assigned to b{0}")]
    MissingIndex(u32),

    #[error("no sign assigned to b{0}")]
    MissingSign(u32),

    #[error("invalid polygon: {0}")]
    BadPolygon(String),

    #[error("unknown polygon preset {0:?}")]
    UnknownPreset(String),

    #[error("({x}, {y}) is not a vertex of the polygon")]
    NotAVertex { x: i64, y: i64 },

    #[error("edge at the corner has lattice length {have}, chop depth {want} needs at least that much")]
    EdgeTooShort { have: i64, want: i64 },

    #[error("corner at ({x}, {y}) is not smooth; it cannot be blown up")]
    SingularCorner { x: i64, y: i64 },

    #[error("chopping the corner leaves a degenerate polygon")]
    DegenerateChop,

    #[error("invalid surface chain: {0}")]
    BadChain(String),

    #[error("degree must be at least 1")]
    BadDegree,

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
