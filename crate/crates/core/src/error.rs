use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("intersection of halfspaces is unbounded")]
    Unbounded,

    #[error("intersection of halfspaces is empty")]
    Infeasible,

    #[error("polytope is not full-dimensional (affine dimension {affine} < {ambient})")]
    NotFullDimensional { affine: usize, ambient: usize },

    #[error("the origin is not in the relative interior of the polytope")]
    OriginNotInterior,

    #[error("vector does not lie in the linear span of the unit ball")]
    NotInSpan,

    #[error("vertex set {0:?} is not a face of the polytope")]
    NotAFace(Vec<usize>),

    #[error("expected a proper face, got the whole polytope")]
    NotProper,

    #[error("direction vector is zero; the ray does not diverge")]
    ZeroDirection,

    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    #[error("horofunctions belong to different norms")]
    MismatchedNorms,

    #[error("rays converge to distinct horofunctions")]
    DistinctLimits,

    #[error("unsupported root system {kind}{rank}")]
    UnsupportedRootSystem { kind: char, rank: usize },

    #[error("Weyl group closure exceeded {0} elements")]
    WeylGroupTooLarge(usize),

    #[error("vector is not dominant")]
    NotDominant,

    #[error("simple root index {0} out of range")]
    BadRootIndex(usize),

    #[error("root systems differ")]
    MismatchedRootSystems,

    #[error("unit ball is not invariant under the Weyl group")]
    NotWeylInvariant,

    #[error("matrix is not a valid SPD point: {0}")]
    NotSpd(String),

    #[error("ill-conditioned input (condition number {0:e})")]
    IllConditioned(f64),

    #[error("sequence is bounded; it has no type")]
    BoundedSequence,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid polytope data: {0}")]
    InvalidPolytope(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
