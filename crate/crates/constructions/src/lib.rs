//! Generators for the polytope families used by the experiment harness:
//!
//! - [`annulus_polytope`]: random hulls squeezed between two concentric balls,
//!   the input class for inscribed-radius curvature sweeps;
//! - [`spiral_tower`]: stacked homothetic equilateral triangles whose shortest
//!   paths spiral, with per-level geodesic verification;
//! - [`build_y_alpha`] / [`attach_cones`] / [`build_delta`]: the slanted-slab
//!   chain that drives a shortest path's total curvature past 2π.

pub mod annulus;
pub mod slab;
pub mod tower;

pub use annulus::{annulus_polytope, AnnulusParams};
pub use slab::{
    attach_cones, build_delta, build_y_alpha, evaluate_delta, evaluate_monotonicity, DeltaEvaluation,
    DeltaParams, DeltaPolytope, YAlpha, YTilde,
};
pub use tower::{spiral_tower, LevelReport, MarkerEdge, SpiralTower, SpiralTowerParams, TurnPattern};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("generation failure: {0}")]
    GenerationFailure(String),

    #[error("construction conditions unsatisfiable: {0}")]
    ConditionUnsatisfiable(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("attached cones overlap: {0}")]
    ConeOverlap(String),

    #[error("attached cone touches a planar face: {0}")]
    ConeTouchesFace(String),

    #[error("glued body is not convex: {0}")]
    NotConvexAfterGlue(String),

    #[error(transparent)]
    Mesh(#[from] mesh_core::MeshError),

    #[error(transparent)]
    Geo(#[from] geodesic::GeoError),

    #[error(transparent)]
    Metric(#[from] path_metrics::MetricError),
}
