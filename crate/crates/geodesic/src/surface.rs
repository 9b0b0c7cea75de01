//! Points and polyline paths pinned to the polytope surface.

use mesh_core::{EdgeId, FacetId, Point3, Polytope, VertexId};
use serde::{Deserialize, Serialize};

use crate::GeoError;

const BARY_EPS: f64 = 1e-12;

/// A point on the surface: a facet and barycentric coordinates within it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfacePoint {
    pub facet: FacetId,
    pub bary: [f64; 3],
}

impl SurfacePoint {
    pub fn new(facet: FacetId, bary: [f64; 3]) -> Result<SurfacePoint, GeoError> {
        let sum: f64 = bary.iter().sum();
        if (sum - 1.0).abs() > 1e-9 || bary.iter().any(|&b| b < -1e-9) {
            return Err(GeoError::PointNotOnSurface(format!(
                "invalid barycentric coordinates {bary:?}"
            )));
        }
        // renormalize away rounding
        let mut b = bary;
        for x in &mut b {
            *x = x.max(0.0) / sum;
        }
        Ok(SurfacePoint { facet, bary: b })
    }

    pub fn at_vertex(poly: &Polytope, v: VertexId) -> SurfacePoint {
        let (_, f) = poly.vertex_fan(v)[0];
        let corner = poly.facets()[f].iter().position(|&x| x == v).unwrap();
        let mut bary = [0.0; 3];
        bary[corner] = 1.0;
        SurfacePoint { facet: f, bary }
    }

    pub fn on_edge(poly: &Polytope, e: EdgeId, t: f64) -> SurfacePoint {
        let edge = poly.edge(e);
        let f = edge.facets[0];
        let verts = poly.facets()[f];
        let i0 = verts.iter().position(|&x| x == edge.vertices[0]).unwrap();
        let i1 = verts.iter().position(|&x| x == edge.vertices[1]).unwrap();
        let mut bary = [0.0; 3];
        bary[i0] = 1.0 - t;
        bary[i1] = t;
        SurfacePoint { facet: f, bary }
    }

    pub fn position(&self, poly: &Polytope) -> Point3 {
        poly.point_from_bary(self.facet, self.bary)
    }

    /// Locates an arbitrary 3D point on the surface (it must lie within `tol`
    /// of some facet).
    pub fn locate(poly: &Polytope, p: &Point3) -> Result<SurfacePoint, GeoError> {
        let tol = 1e-9 * poly.tol_scale();
        poly.locate_point(p, tol)
            .map(|(facet, bary)| SurfacePoint {
                facet,
                bary: clamp_bary(bary),
            })
            .ok_or_else(|| GeoError::PointNotOnSurface(format!("{p:?}")))
    }

    /// Same surface position expressed in another facet (which must contain it).
    pub fn relocate(&self, poly: &Polytope, facet: FacetId) -> Option<SurfacePoint> {
        let p = self.position(poly);
        let bary = poly.bary_from_point(facet, &p);
        let scale = poly.diameter().max(1.0);
        let plane = (poly.facet_normal(facet).dot(&p.coords) - poly.facet_offset(facet)).abs();
        if plane > 1e-9 * scale || bary.iter().any(|&b| b < -1e-7) {
            return None;
        }
        Some(SurfacePoint {
            facet,
            bary: clamp_bary(bary),
        })
    }

    /// Facets whose closed triangles contain this point (more than one when the
    /// point sits on an edge or vertex).
    pub fn incident_facets(&self, poly: &Polytope) -> Vec<FacetId> {
        let verts = poly.facets()[self.facet];
        let zero: Vec<usize> = (0..3).filter(|&i| self.bary[i] <= BARY_EPS.max(1e-9)).collect();
        match zero.len() {
            0 => vec![self.facet],
            1 => {
                // on the edge opposite to the zero corner? no: zero corner i means
                // the point is on the edge joining the other two corners.
                let others: Vec<usize> = (0..3).filter(|i| *i != zero[0]).collect();
                let (u, v) = (verts[others[0]], verts[others[1]]);
                match poly.edge_between(u, v) {
                    Some(e) => poly.edge(e).facets.to_vec(),
                    None => vec![self.facet],
                }
            }
            _ => {
                // at a vertex: all fan facets
                let corner = (0..3).find(|i| !zero.contains(i)).unwrap();
                let v = verts[corner];
                poly.vertex_fan(v).iter().map(|&(_, f)| f).collect()
            }
        }
    }
}

fn clamp_bary(mut b: [f64; 3]) -> [f64; 3] {
    for x in &mut b {
        *x = x.max(0.0);
    }
    let s: f64 = b.iter().sum();
    for x in &mut b {
        *x /= s;
    }
    b
}

/// Internal path node: endpoints, transversal edge crossings, vertex pins.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PathNode {
    Endpoint(SurfacePoint),
    Cross { edge: EdgeId, t: f64 },
    Pin(VertexId),
}

impl PathNode {
    pub fn position(&self, poly: &Polytope) -> Point3 {
        match *self {
            PathNode::Endpoint(sp) => sp.position(poly),
            PathNode::Cross { edge, t } => poly.edge_point(edge, t),
            PathNode::Pin(v) => poly.vertex(v),
        }
    }
}

/// An oriented geodesic polyline on the surface.
///
/// `points[i]` carries the facet of the segment `points[i] → points[i+1]`
/// (the last point repeats the final segment's facet). `crossed_edges` lists,
/// in order, the edge crossed by each consecutive pair that changes facet;
/// pairs meeting at a vertex pin share a facet and contribute no entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfacePath {
    pub points: Vec<SurfacePoint>,
    pub crossed_edges: Vec<EdgeId>,
    pub length: f64,
}

impl SurfacePath {
    /// Two-point path inside one facet.
    pub fn segment(poly: &Polytope, a: SurfacePoint, b: SurfacePoint) -> SurfacePath {
        let len = (b.position(poly) - a.position(poly)).norm();
        SurfacePath {
            points: vec![a, b],
            crossed_edges: Vec::new(),
            length: len,
        }
    }

    /// Assembles a path from nodes, merging coincident consecutive nodes and
    /// assigning carrying facets.
    pub fn from_nodes(poly: &Polytope, nodes: &[PathNode]) -> Result<SurfacePath, GeoError> {
        let scale = poly.diameter().max(1.0);
        let merge_tol = 1e-12 * scale;

        // merge consecutive nodes at the same position (vertex-grazing crossings)
        let mut merged: Vec<(PathNode, Point3)> = Vec::with_capacity(nodes.len());
        for &n in nodes {
            let p = n.position(poly);
            match merged.last() {
                Some((last, q)) if (p - q).norm() <= merge_tol => {
                    // prefer the more specific designation: pins and endpoints win
                    if matches!(last, PathNode::Cross { .. }) && !matches!(n, PathNode::Cross { .. }) {
                        *merged.last_mut().unwrap() = (n, p);
                    }
                }
                _ => merged.push((n, p)),
            }
        }
        if merged.len() < 2 {
            return Err(GeoError::DegenerateQuery);
        }

        // carrying facet per segment
        let mut seg_facets = Vec::with_capacity(merged.len() - 1);
        for w in merged.windows(2) {
            let fa = node_facets(poly, &w[0].0);
            let fb = node_facets(poly, &w[1].0);
            let common = fa.iter().find(|f| fb.contains(f)).copied().ok_or_else(|| {
                GeoError::NotAStrip("consecutive path nodes share no facet".into())
            })?;
            seg_facets.push(common);
        }

        let mut points = Vec::with_capacity(merged.len());
        for (i, (node, pos)) in merged.iter().enumerate() {
            let f = seg_facets[i.min(seg_facets.len() - 1)];
            let sp = match node {
                PathNode::Endpoint(sp) => sp.relocate(poly, f).unwrap_or(*sp),
                _ => SurfacePoint {
                    facet: f,
                    bary: clamp_bary(poly.bary_from_point(f, pos)),
                },
            };
            points.push(sp);
        }

        let mut crossed = Vec::new();
        for (i, (node, _)) in merged.iter().enumerate().skip(1) {
            if i == merged.len() - 1 {
                break;
            }
            if let PathNode::Cross { edge, .. } = node {
                if seg_facets[i - 1] != seg_facets[i] {
                    crossed.push(*edge);
                }
            }
        }

        let length = merged.windows(2).map(|w| (w[1].1 - w[0].1).norm()).sum();
        Ok(SurfacePath {
            points,
            crossed_edges: crossed,
            length,
        })
    }

    pub fn positions(&self, poly: &Polytope) -> Vec<Point3> {
        self.points.iter().map(|sp| sp.position(poly)).collect()
    }

    pub fn recompute_length(&self, poly: &Polytope) -> f64 {
        self.positions(poly).windows(2).map(|w| (w[1] - w[0]).norm()).sum()
    }

    pub fn source(&self) -> &SurfacePoint {
        self.points.first().expect("non-empty path")
    }

    pub fn target(&self) -> &SurfacePoint {
        self.points.last().expect("non-empty path")
    }

    /// Facet carrying segment `i` (between points i and i+1).
    pub fn segment_facet(&self, i: usize) -> FacetId {
        self.points[i].facet
    }

    pub fn num_segments(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    /// True when the path crosses the given edge transversally at an interior
    /// point (used by the spiral-tower marker checks).
    pub fn crosses_edge(&self, e: EdgeId) -> bool {
        self.crossed_edges.contains(&e)
    }

    /// Minimum distance from the polyline to a 3D point.
    pub fn min_distance_to(&self, poly: &Polytope, q: &Point3) -> f64 {
        let pos = self.positions(poly);
        let mut best = f64::INFINITY;
        for w in pos.windows(2) {
            best = best.min(point_segment_distance3(q, &w[0], &w[1]));
        }
        best
    }
}

fn node_facets(poly: &Polytope, n: &PathNode) -> Vec<FacetId> {
    match *n {
        PathNode::Endpoint(sp) => sp.incident_facets(poly),
        PathNode::Cross { edge, t } => {
            if t <= 1e-12 || t >= 1.0 - 1e-12 {
                // grazing an endpoint: all fan facets of that vertex qualify
                let v = if t <= 1e-12 {
                    poly.edge(edge).vertices[0]
                } else {
                    poly.edge(edge).vertices[1]
                };
                poly.vertex_fan(v).iter().map(|&(_, f)| f).collect()
            } else {
                poly.edge(edge).facets.to_vec()
            }
        }
        PathNode::Pin(v) => poly.vertex_fan(v).iter().map(|&(_, f)| f).collect(),
    }
}

fn point_segment_distance3(p: &Point3, a: &Point3, b: &Point3) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(&ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use mesh_core::convex_hull;

    fn tetra() -> Polytope {
        convex_hull(&[
            Point3::new(1.0, 1.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn locate_and_relocate() {
        let p = tetra();
        let sp = SurfacePoint::new(0, [0.5, 0.25, 0.25]).unwrap();
        let pos = sp.position(&p);
        let sp2 = SurfacePoint::locate(&p, &pos).unwrap();
        assert!((sp2.position(&p) - pos).norm() < 1e-12);
    }

    #[test]
    fn incident_facets_at_vertex() {
        let p = tetra();
        let sp = SurfacePoint::at_vertex(&p, 0);
        let facets = sp.incident_facets(&p);
        assert_eq!(facets.len(), 3);
    }

    #[test]
    fn incident_facets_on_edge() {
        let p = tetra();
        let sp = SurfacePoint::on_edge(&p, 0, 0.5);
        assert_eq!(sp.incident_facets(&p).len(), 2);
    }
}
