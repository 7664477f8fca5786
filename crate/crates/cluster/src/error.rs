use kasteleyn::KasteleynError;
use torusgraph::{ValidationError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClusterError {
    #[error("FaceOutOfRange: face {face} of {count}")]
    FaceOutOfRange { face: usize, count: usize },
    #[error("NotQuadrilateral: face {face} has boundary length {len}")]
    NotQuadrilateral { face: usize, len: usize },
    #[error("NotTrivalent: corner {vertex} has degree {degree}")]
    NotTrivalent { vertex: Vertex, degree: usize },
    #[error("NonzeroFaceOffsets: face {face} has an edge with nonzero offset")]
    NonzeroFaceOffsets { face: usize },
    #[error("MissingBivalentLeg: {vertex} should have degree 2")]
    MissingBivalentLeg { vertex: Vertex },
    #[error("SingularTransform: X = -1 at face {face}")]
    SingularTransform { face: usize },
    #[error("InconsistentSeed: product of face coordinates is {product}")]
    InconsistentSeed { product: String },
    #[error("TooLarge: {vertices} black vertices exceed the subset expansion limit of 24")]
    TooLarge { vertices: usize },
    #[error(transparent)]
    Kasteleyn(#[from] KasteleynError),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}
