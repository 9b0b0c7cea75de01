//! Test fixtures and brute-force reference implementations.
//!
//! Everything here is deliberately simple and independent of the production
//! geodesic solver: the oracle enumerates facet strips recursively and only
//! accepts straight unfolded chords, which is exactly what a globally shortest
//! path on a convex polytope looks like in the generic case.

pub mod fixtures;
pub mod oracle;

pub use fixtures::*;
pub use oracle::brute_shortest_length;
