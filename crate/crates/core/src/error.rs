use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A point was mapped onto (or queried at) the hyperplane u5 = 0 of the
    /// homogeneous chart, where no finite event exists.
    #[error("projective infinity: {0}")]
    ProjectiveInfinity(String),

    /// The line through the two query points does not meet the absolute in
    /// real points.
    #[error("line does not meet the absolute in real points")]
    NoRealIntersection,

    /// The line is tangent to the absolute (or light-like): the chord
    /// endpoints coincide or escape to infinity.
    #[error("degenerate chord: line is tangent to the absolute")]
    DegenerateChord,

    /// A matrix drifted off the signature-orthogonal manifold farther than
    /// renormalization can repair.
    #[error("non-orthogonal matrix: {0}")]
    NonOrthogonal(String),

    /// An iterative routine exhausted its budget or observed inconsistent
    /// behaviour.
    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
