//! Rigid planar development of facet strips.
//!
//! A strip is a start facet plus a sequence of crossed edges; each facet is
//! mapped isometrically into the plane, consecutive facets sharing the full
//! common edge segment. Portals carry a consistent left/right orientation as
//! seen when walking the strip.

use mesh_core::{EdgeId, FacetId, Point2, Polytope, Vec2, VertexId};

use crate::surface::SurfacePoint;
use crate::GeoError;

/// One unfolded shared edge with walk-orientation.
#[derive(Debug, Clone, Copy)]
pub struct Portal2 {
    pub edge: EdgeId,
    pub left: Point2,
    pub right: Point2,
    pub left_vertex: VertexId,
    pub right_vertex: VertexId,
}

impl Portal2 {
    /// Point at parameter `u ∈ [0,1]` from left to right.
    pub fn point(&self, u: f64) -> Point2 {
        Point2::from(self.left.coords * (1.0 - u) + self.right.coords * u)
    }

    /// Converts a left→right parameter to the edge's own vertex order.
    pub fn edge_param(&self, poly: &Polytope, u: f64) -> f64 {
        if poly.edge(self.edge).vertices[0] == self.left_vertex {
            u
        } else {
            1.0 - u
        }
    }
}

/// A facet strip developed into the plane.
#[derive(Debug, Clone)]
pub struct UnfoldedStrip {
    pub facets: Vec<FacetId>,
    /// Per-facet 2D images of its three vertices (facet vertex order).
    pub frames: Vec<[Point2; 3]>,
    pub portals: Vec<Portal2>,
}

impl UnfoldedStrip {
    /// 2D image of a surface point lying on strip facet `idx`.
    pub fn embed(&self, poly: &Polytope, idx: usize, sp: &SurfacePoint) -> Option<Point2> {
        let sp = if sp.facet == self.facets[idx] {
            *sp
        } else {
            sp.relocate(poly, self.facets[idx])?
        };
        let f = &self.frames[idx];
        Some(Point2::from(
            f[0].coords * sp.bary[0] + f[1].coords * sp.bary[1] + f[2].coords * sp.bary[2],
        ))
    }

    pub fn num_portals(&self) -> usize {
        self.portals.len()
    }

    /// 2D image of a vertex of strip facet `idx`.
    pub fn vertex_image(&self, poly: &Polytope, idx: usize, v: VertexId) -> Option<Point2> {
        let verts = poly.facets()[self.facets[idx]];
        verts.iter().position(|&x| x == v).map(|k| self.frames[idx][k])
    }
}

/// Develops the strip reached from `start_facet` by crossing `edge_sequence`
/// in order. Fails with `NotAStrip` when an edge does not bound the current
/// facet.
pub fn unfold(poly: &Polytope, edge_sequence: &[EdgeId], start_facet: FacetId) -> Result<UnfoldedStrip, GeoError> {
    let mut facets = Vec::with_capacity(edge_sequence.len() + 1);
    let mut frames = Vec::with_capacity(edge_sequence.len() + 1);
    let mut portals = Vec::with_capacity(edge_sequence.len());

    facets.push(start_facet);
    frames.push(root_frame(poly, start_facet));

    for (k, &e) in edge_sequence.iter().enumerate() {
        let cur = *facets.last().unwrap();
        if !poly.facet_edges(cur).contains(&e) {
            return Err(GeoError::NotAStrip(format!(
                "edge {e} does not bound facet {cur} (strip position {k})"
            )));
        }
        let next = poly.other_facet(e, cur);
        let frame = unfold_next(poly, cur, frames.last().unwrap(), e, next);
        let portal = orient_portal(poly, cur, frames.last().unwrap(), &frame, next, e);
        facets.push(next);
        frames.push(frame);
        portals.push(portal);
    }

    Ok(UnfoldedStrip {
        facets,
        frames,
        portals,
    })
}

pub(crate) fn root_frame(poly: &Polytope, f: FacetId) -> [Point2; 3] {
    let [p0, p1, p2] = poly.facet_points(f);
    let ux = (p1 - p0).normalize();
    let c = p2 - p0;
    let cx = c.dot(&ux);
    let cy = (c - ux * cx).norm();
    [
        Point2::new(0.0, 0.0),
        Point2::new((p1 - p0).norm(), 0.0),
        Point2::new(cx, cy),
    ]
}

pub(crate) fn image_of(poly: &Polytope, facet: FacetId, frame: &[Point2; 3], v: VertexId) -> Point2 {
    let verts = poly.facets()[facet];
    let k = verts.iter().position(|&x| x == v).expect("vertex in facet");
    frame[k]
}

/// Places `next` across edge `e`, on the far side of the shared edge line.
pub(crate) fn unfold_next(poly: &Polytope, cur: FacetId, cur_frame: &[Point2; 3], e: EdgeId, next: FacetId) -> [Point2; 3] {
    let [eu, ev] = poly.edge(e).vertices;
    let u2 = image_of(poly, cur, cur_frame, eu);
    let v2 = image_of(poly, cur, cur_frame, ev);
    let u3 = poly.vertex(eu);
    let v3 = poly.vertex(ev);
    let w = *poly.facets()[next].iter().find(|&&x| x != eu && x != ev).unwrap();
    let w3 = poly.vertex(w);

    let axis = v3 - u3;
    let axis_len2 = axis.norm_squared();
    let t = (w3 - u3).dot(&axis) / axis_len2;
    let h = ((w3 - u3) - axis * t).norm();
    let dir2 = (v2 - u2) / axis_len2.sqrt();
    let n2 = Vec2::new(-dir2.y, dir2.x);

    let cur_apex3 = *poly.facets()[cur].iter().find(|&&x| x != eu && x != ev).unwrap();
    let apex2 = image_of(poly, cur, cur_frame, cur_apex3);
    let sign = if n2.dot(&(apex2 - u2)) > 0.0 { -1.0 } else { 1.0 };
    let w2 = u2 + dir2 * (t * axis_len2.sqrt()) + n2 * (sign * h);

    let mut frame = [Point2::origin(); 3];
    for (slot, &v) in frame.iter_mut().zip(poly.facets()[next].iter()) {
        *slot = if v == eu {
            u2
        } else if v == ev {
            v2
        } else {
            w2
        };
    }
    frame
}

fn orient_portal(
    poly: &Polytope,
    cur: FacetId,
    cur_frame: &[Point2; 3],
    next_frame: &[Point2; 3],
    next: FacetId,
    e: EdgeId,
) -> Portal2 {
    let [eu, ev] = poly.edge(e).vertices;
    let u2 = image_of(poly, cur, cur_frame, eu);
    let v2 = image_of(poly, cur, cur_frame, ev);
    let c_prev = centroid(cur_frame);
    let c_next = centroid(next_frame);
    let d = c_next - c_prev;
    let _ = next;
    // left endpoint lies counterclockwise of the walking direction
    let (l, r, lv, rv) = if cross2(&d, &(u2 - c_prev)) > 0.0 {
        (u2, v2, eu, ev)
    } else {
        (v2, u2, ev, eu)
    };
    Portal2 {
        edge: e,
        left: l,
        right: r,
        left_vertex: lv,
        right_vertex: rv,
    }
}

fn centroid(frame: &[Point2; 3]) -> Point2 {
    Point2::from((frame[0].coords + frame[1].coords + frame[2].coords) / 3.0)
}

pub(crate) fn cross2(a: &Vec2, b: &Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

#[cfg(test)]
mod tests {
    use super::*;
    use mesh_core::{convex_hull, Point3};

    #[test]
    fn empty_sequence_is_isometric() {
        let p = convex_hull(&[
            Point3::new(1.0, 1.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
        ])
        .unwrap();
        let strip = unfold(&p, &[], 0).unwrap();
        let f3 = p.facet_points(0);
        let f2 = strip.frames[0];
        for i in 0..3 {
            for j in 0..3 {
                let d3 = (f3[i] - f3[j]).norm();
                let d2 = (f2[i] - f2[j]).norm();
                assert!((d3 - d2).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn strip_facets_are_congruent() {
        let p = convex_hull(&[
            Point3::new(1.0, 1.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
        ])
        .unwrap();
        let e = p.facet_edges(0)[0];
        let strip = unfold(&p, &[e], 0).unwrap();
        for (idx, &f) in strip.facets.iter().enumerate() {
            let f3 = p.facet_points(f);
            let f2 = strip.frames[idx];
            for i in 0..3 {
                for j in 0..3 {
                    assert!(((f3[i] - f3[j]).norm() - (f2[i] - f2[j]).norm()).abs() < 1e-12);
                }
            }
        }
        // shared edge segment is common to both frames
        let portal = strip.portals[0];
        assert!((portal.left - portal.right).norm() > 0.0);
    }

    #[test]
    fn not_a_strip_detected() {
        let p = convex_hull(&[
            Point3::new(1.0, 1.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
        ])
        .unwrap();
        // an edge not bounding facet 0 exists on a tetra (opposite edge)
        let bad = (0..p.num_edges())
            .find(|&e| !p.facet_edges(0).contains(&e))
            .unwrap();
        assert!(matches!(unfold(&p, &[bad], 0), Err(GeoError::NotAStrip(_))));
    }
}

/// Maximum turning angle (radians) of the path at its transversal edge
/// crossings, measured in the local two-facet unfolding. Straight geodesics
/// score ≈ 0; vertex pins are genuine corners and are skipped.
pub fn local_straightness(poly: &Polytope, path: &crate::surface::SurfacePath) -> f64 {
    let pos = path.positions(poly);
    let mut worst: f64 = 0.0;
    for j in 1..path.points.len().saturating_sub(1) {
        let f1 = path.points[j - 1].facet;
        let f2 = path.points[j].facet;
        if f1 == f2 {
            continue; // in-facet corner (e.g. a pin handled elsewhere)
        }
        let Some(e) = poly
            .facet_edges(f1)
            .into_iter()
            .find(|&e| poly.edge(e).facets.contains(&f2))
        else {
            continue; // pin between non-adjacent facets
        };
        // skip crossings grazing a vertex: those are pins in disguise
        let (u, v) = poly.edge_endpoints(e);
        let pj = pos[j];
        let t = (pj - u).dot(&(v - u)) / (v - u).norm_squared();
        if !(1e-9..=1.0 - 1e-9).contains(&t) {
            continue;
        }
        let frame1 = root_frame(poly, f1);
        let frame2 = unfold_next(poly, f1, &frame1, e, f2);
        let b_prev = poly.bary_from_point(f1, &pos[j - 1]);
        let b_mid = poly.bary_from_point(f1, &pj);
        let b_next = poly.bary_from_point(f2, &pos[j + 1]);
        let to2 = |frame: &[Point2; 3], b: [f64; 3]| {
            Point2::from(frame[0].coords * b[0] + frame[1].coords * b[1] + frame[2].coords * b[2])
        };
        let p0 = to2(&frame1, b_prev);
        let p1 = to2(&frame1, b_mid);
        let p2 = to2(&frame2, b_next);
        let d1 = p1 - p0;
        let d2 = p2 - p1;
        if d1.norm() < 1e-300 || d2.norm() < 1e-300 {
            continue;
        }
        let ang = cross2(&d1, &d2).atan2(d1.dot(&d2)).abs();
        worst = worst.max(ang);
    }
    worst
}
