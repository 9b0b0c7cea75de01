use thiserror::Error;

/// Errors produced by mesh construction, solvers and file I/O.
#[derive(Debug, Error)]
pub enum MeshError {
    /// Input points are coincident, collinear or coplanar where a full-dimensional
    /// set was required.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// An iterative solver (LP, ball) failed to reach its tolerance.
    #[error("solver failure: {0}")]
    SolverFailure(String),

    /// A mesh file could not be parsed.
    #[error("mesh parse error: {0}")]
    MeshParse(String),

    /// A constructed or loaded mesh violates a structural invariant
    /// (open surface, non-manifold edge, non-convex, bad normals).
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl MeshError {
    /// Stable machine-readable code for CLI error envelopes.
    pub fn code(&self) -> &'static str {
        match self {
            MeshError::DegenerateInput(_) => "DegenerateInput",
            MeshError::SolverFailure(_) => "SolverFailure",
            MeshError::MeshParse(_) => "MeshParse",
            MeshError::InvalidMesh(_) => "InvalidMesh",
            MeshError::Io(_) => "Io",
        }
    }
}
