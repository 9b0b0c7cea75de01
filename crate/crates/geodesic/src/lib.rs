//! Exact shortest paths on the boundary of a convex polytope.
//!
//! The pipeline: a Steiner-subdivided edge graph seeds candidate routes
//! ([`seed_path`]), each route's crossed-edge sequence is unfolded into the
//! plane ([`unfold`]) and straightened by a funnel walk with local
//! edge-sequence repair ([`straighten`]), and [`shortest_path`] takes the best
//! result over several homotopy hints, certifying against an exhaustive
//! enumeration when the facet count is small.

pub mod enumerate;
pub mod funnel;
pub mod graph;
pub mod solver;
pub mod surface;
pub mod unfold;

pub use solver::{
    distance_to_edge_set, seed_path, shortest_path, straighten, GeoOptions, Geodesic,
    GeodesicSolver,
};
pub use surface::{SurfacePath, SurfacePoint};
pub use unfold::{unfold, UnfoldedStrip};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeoError {
    /// The edge sequence does not describe a connected facet strip.
    #[error("not a strip: {0}")]
    NotAStrip(String),

    /// Straightening failed to reach a fixed point within the iteration cap.
    #[error("straightening did not converge within {0} iterations")]
    NoConvergence(usize),

    /// A query point does not lie on the polytope surface.
    #[error("point not on surface: {0}")]
    PointNotOnSurface(String),

    /// Source and target coincide.
    #[error("degenerate query: source equals target")]
    DegenerateQuery,

    #[error(transparent)]
    Mesh(#[from] mesh_core::MeshError),
}
