//! Path statistics for geodesics on convex polytopes: total curvature,
//! spiralling number, and the certificates that bound curvature in terms of
//! facet normals and inscribed-ball geometry.

pub mod minnorm;
pub mod report;
pub mod spiral;
pub mod theorem2;
pub mod turning;

pub use minnorm::{lemma1_certificate, lemma1_for_normals, min_norm_point, Lemma1Certificate};
pub use report::{sweep_csv_header, sweep_csv_row, PathReport};
pub use spiral::{spiral_of_polyline, spiralling_number, SpiralReport};
pub use theorem2::{theorem2_audit, ShadowSegment, Theorem2Flags, Theorem2Report};
pub use turning::{closed_total_curvature, total_curvature, turning_data, TurningData};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MetricError {
    /// A polyline segment has (numerically) zero length.
    #[error("degenerate segment at index {0}")]
    DegenerateSegment(usize),

    /// The whole path lies on the spiral axis; the angular coordinate is
    /// undefined everywhere.
    #[error("axis degenerate: the path lies on the axis")]
    AxisDegenerate,

    /// The audit requires the polytope normalized into the unit ball at the
    /// origin.
    #[error("polytope not normalized: {0}")]
    NotNormalized(String),

    #[error(transparent)]
    Geo(#[from] geodesic::GeoError),
}
