//! Convex polytope meshes in R³.
//!
//! The [`Polytope`] type is a closed, edge-manifold, outward-oriented
//! triangulated surface that is convex up to a diameter-scaled tolerance.
//! On top of it this crate provides:
//!
//! - [`convex_hull`]: incremental 3D convex hull of a point set,
//! - [`inscribed_ball`]: Chebyshev center via a small linear program,
//! - [`circumscribed_ball`]: minimum enclosing ball of the vertices,
//! - [`normalize_to_unit_ball`]: translate/scale so the enclosing ball is the
//!   unit ball at the origin,
//! - OFF/OBJ readers and writers in [`io`].
//!
//! A `Polytope` is immutable after construction and can be shared freely
//! across threads.

pub mod balls;
pub mod error;
pub mod hull;
pub mod io;
pub mod lp;
pub mod polytope;

pub use balls::{circumscribed_ball, inscribed_ball, minimum_enclosing_ball, BallData};
pub use error::MeshError;
pub use hull::convex_hull;
pub use polytope::{normalize_to_unit_ball, Edge, EdgeId, FacetId, Polytope, VertexId};

/// 3D point in model units.
pub type Point3 = nalgebra::Point3<f64>;
/// 3D vector in model units.
pub type Vec3 = nalgebra::Vector3<f64>;
/// 2D point (used for unfoldings and planar work).
pub type Point2 = nalgebra::Point2<f64>;
/// 2D vector.
pub type Vec2 = nalgebra::Vector2<f64>;

/// Convexity slack per unit diameter: max (facet, vertex) plane violation.
pub const TOL_CONVEX: f64 = 1e-9;
/// Two adjacent facets count as coplanar when their normals differ by less
/// than this angle (radians; not diameter-scaled).
pub const TOL_COPLANAR: f64 = 1e-9;
/// Ball containment slack per unit diameter.
pub const TOL_BALL: f64 = 1e-9;
