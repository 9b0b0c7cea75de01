//! Exhaustive edge-sequence enumeration for small polytopes.
//!
//! Depth-first search over facet strips unfolded from every facet containing
//! the source. A strip yields a candidate when the straight chord between the
//! unfolded endpoints crosses all its portals in order; the globally shortest
//! path unfolds straight, so the best candidate below the incumbent certifies
//! (or improves) it. Pruning mirrors the straight-chord feasibility: a
//! direction cone, a vertex-run cap, and a funnel lower bound against the
//! incumbent.

use mesh_core::{EdgeId, FacetId, Point2, Polytope, Vec2};

use crate::funnel::shortest_to_segment;
use crate::surface::SurfacePoint;
use crate::unfold::{cross2, image_of, root_frame, unfold_next};

const MAX_DEPTH: usize = 64;

struct Dfs<'a> {
    poly: &'a Polytope,
    a2: Point2,
    b: SurfacePoint,
    end_facets: Vec<FacetId>,
    portals: Vec<(Point2, Point2)>,
    seq: Vec<EdgeId>,
    best: f64,
    best_seq: Option<(FacetId, Vec<EdgeId>)>,
    start_facet: FacetId,
}

/// Best straight-unfolding sequence strictly shorter than `bound`, if any.
/// Returns `(start_facet, edge_sequence, length)`.
pub fn enumerate_shortest(
    poly: &Polytope,
    a: &SurfacePoint,
    b: &SurfacePoint,
    bound: f64,
) -> Option<(FacetId, Vec<EdgeId>, f64)> {
    let mut best = bound;
    let mut result: Option<(FacetId, Vec<EdgeId>, f64)> = None;
    let end_facets = b.incident_facets(poly);
    for depth_cap in [10usize, MAX_DEPTH] {
        for &fa in &a.incident_facets(poly) {
            let frame = root_frame(poly, fa);
            let a_here = match a.relocate(poly, fa) {
                Some(x) => x,
                None => continue,
            };
            let a2 = bary_embed(&frame, &a_here);
            let mut dfs = Dfs {
                poly,
                a2,
                b: *b,
                end_facets: end_facets.clone(),
                portals: Vec::new(),
                seq: Vec::new(),
                best,
                best_seq: None,
                start_facet: fa,
            };
            dfs.run(fa, frame, usize::MAX, None, None, 0, depth_cap);
            if dfs.best < best {
                best = dfs.best;
                if let Some((sf, seq)) = dfs.best_seq {
                    result = Some((sf, seq, best));
                }
            }
        }
    }
    result
}

impl<'a> Dfs<'a> {
    #[allow(clippy::too_many_arguments)]
    fn run(
        &mut self,
        facet: FacetId,
        frame: [Point2; 3],
        entry: EdgeId,
        cone: Option<(Vec2, Vec2)>,
        pivot: Option<usize>,
        run: usize,
        depth_cap: usize,
    ) {
        if self.seq.len() >= depth_cap {
            return;
        }
        if !self.seq.is_empty() && self.end_facets.contains(&facet) {
            if let Some(bh) = self.b.relocate(self.poly, facet) {
                let b2 = bary_embed(&frame, &bh);
                if let Some(len) = straight_through(self.a2, b2, &self.portals) {
                    if len < self.best {
                        self.best = len;
                        self.best_seq = Some((self.start_facet, self.seq.clone()));
                    }
                }
            }
        }
        for &e in &self.poly.facet_edges(facet) {
            if e == entry {
                continue;
            }
            let (u2, v2) = edge_image(self.poly, facet, &frame, e);
            if point_segment_distance(self.a2, u2, v2) >= self.best {
                continue;
            }
            let Some(new_cone) = clip_cone(self.a2, u2, v2, cone) else {
                continue;
            };
            let (new_pivot, new_run) = if entry == usize::MAX {
                (None, 1)
            } else {
                match shared_vertex(self.poly, entry, e) {
                    Some(v) if pivot == Some(v) => (Some(v), run + 1),
                    Some(v) => (Some(v), 2),
                    None => (None, 1),
                }
            };
            if let Some(v) = new_pivot {
                if new_run > self.poly.vertex_fan(v).len() + 1 {
                    continue;
                }
            }
            if self.portals.len() >= 4 {
                let lb = shortest_to_segment(self.a2, &self.portals, u2, v2);
                if lb - 1e-9 >= self.best {
                    continue;
                }
            }
            let next = self.poly.other_facet(e, facet);
            let next_frame = unfold_next(self.poly, facet, &frame, e, next);
            self.portals.push((u2, v2));
            self.seq.push(e);
            self.run(next, next_frame, e, Some(new_cone), new_pivot, new_run, depth_cap);
            self.portals.pop();
            self.seq.pop();
        }
    }
}

fn bary_embed(frame: &[Point2; 3], sp: &SurfacePoint) -> Point2 {
    Point2::from(
        frame[0].coords * sp.bary[0] + frame[1].coords * sp.bary[1] + frame[2].coords * sp.bary[2],
    )
}

fn edge_image(poly: &Polytope, facet: FacetId, frame: &[Point2; 3], e: EdgeId) -> (Point2, Point2) {
    let [u, v] = poly.edge(e).vertices;
    (image_of(poly, facet, frame, u), image_of(poly, facet, frame, v))
}

fn straight_through(a: Point2, b: Point2, portals: &[(Point2, Point2)]) -> Option<f64> {
    let d = b - a;
    let len = d.norm();
    if len == 0.0 {
        return Some(0.0);
    }
    let mut last_s = 0.0;
    for &(u, v) in portals {
        let e = v - u;
        let denom = cross2(&d, &e);
        if denom.abs() < 1e-300 {
            return None;
        }
        let w = u - a;
        let sc = cross2(&w, &e) / denom;
        let tc = cross2(&w, &d) / denom;
        if !(-1e-9..=1.0 + 1e-9).contains(&tc) {
            return None;
        }
        if sc < last_s - 1e-9 || sc > 1.0 + 1e-9 {
            return None;
        }
        last_s = sc.max(last_s);
    }
    Some(len)
}

fn shared_vertex(poly: &Polytope, e1: EdgeId, e2: EdgeId) -> Option<usize> {
    let a = poly.edge(e1).vertices;
    let b = poly.edge(e2).vertices;
    a.into_iter().find(|x| b.contains(x))
}

fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(&ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

fn clip_cone(a: Point2, u: Point2, v: Point2, cone: Option<(Vec2, Vec2)>) -> Option<(Vec2, Vec2)> {
    let du = u - a;
    let dv = v - a;
    if du.norm() < 1e-14 || dv.norm() < 1e-14 {
        return cone.or(Some((Vec2::zeros(), Vec2::zeros())));
    }
    let (pr, pl) = if cross2(&du, &dv) >= 0.0 { (du, dv) } else { (dv, du) };
    let Some((mut r, mut l)) = cone else {
        return Some((pr, pl));
    };
    if r == Vec2::zeros() {
        return Some((pr, pl));
    }
    if cross2(&r, &pr) > 0.0 {
        r = pr;
    }
    if cross2(&pl, &l) > 0.0 {
        l = pl;
    }
    if cross2(&r, &l) < -1e-12 {
        return None;
    }
    Some((r, l))
}
