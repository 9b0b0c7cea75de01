//! Brute-force geodesic length by exhaustive strip enumeration.
//!
//! Recursively unfolds facet strips from the source facet and accepts a strip
//! only when the straight 2D chord from source to target image threads every
//! unfolded edge in order. On a convex polytope the globally shortest path
//! unfolds straight, so the minimum over all accepted strips is the geodesic
//! distance (up to the cap, and excluding non-generic vertex-pinned ties).
//!
//! Three prunes keep the recursion exhaustive but finite:
//! - direction cone: some ray from the source must still hit every portal,
//! - vertex runs: a straight chord crosses at most one fan's worth of
//!   consecutive portals around a single vertex,
//! - funnel bound: the shortest *path* threading the portals to the newest
//!   portal must stay below the incumbent, which cuts strips that wander.

use mesh_core::{EdgeId, FacetId, Point2, Point3, Polytope, Vec2};

const BARY_TOL: f64 = 1e-9;
const MAX_PORTALS: usize = 64;

struct Frame {
    /// 2D images of the three facet vertices, same order as the facet record.
    pts: [Point2; 3],
    facet: FacetId,
}

struct Search<'a> {
    poly: &'a Polytope,
    a2: Point2,
    b3: Point3,
    end_facets: Vec<FacetId>,
    portals: Vec<(Point2, Point2)>,
    best: f64,
    max_portals: usize,
}

/// Shortest-path length between two boundary points, or `cap` if nothing
/// shorter is found. Points must lie on the surface within tolerance.
pub fn brute_shortest_length(poly: &Polytope, a: &Point3, b: &Point3, cap: f64) -> f64 {
    let start_facets = facets_containing(poly, a);
    let end_facets = facets_containing(poly, b);
    assert!(!start_facets.is_empty(), "point a is not on the surface");
    assert!(!end_facets.is_empty(), "point b is not on the surface");

    // same facet: the in-plane chord attains the 3D distance lower bound
    for fa in &start_facets {
        if end_facets.contains(fa) {
            return (b - a).norm();
        }
    }

    // warm start: a shallow pass finds a near-optimal incumbent cheaply,
    // which makes the funnel bound bite from the beginning of the full pass
    let mut best = cap;
    for &max_portals in &[8usize, MAX_PORTALS] {
        for &fa in &start_facets {
            let frame = root_frame(poly, fa);
            let a2 = embed(poly, &frame, a);
            let mut search = Search {
                poly,
                a2,
                b3: *b,
                end_facets: end_facets.clone(),
                portals: Vec::new(),
                best,
                max_portals,
            };
            dfs(&mut search, frame, usize::MAX, None, None, 0);
            best = best.min(search.best);
        }
    }
    best
}

fn dfs(
    s: &mut Search,
    frame: Frame,
    entry_edge: EdgeId,
    cone: Option<(Vec2, Vec2)>,
    pivot: Option<usize>,
    run: usize,
) {
    if s.portals.len() >= s.max_portals {
        return;
    }
    if s.end_facets.contains(&frame.facet) && !s.portals.is_empty() {
        let b2 = embed(s.poly, &frame, &s.b3);
        if let Some(len) = straight_candidate(s.a2, b2, &s.portals) {
            if len < s.best {
                s.best = len;
            }
        }
    }
    let edges = s.poly.facet_edges(frame.facet);
    for &e in &edges {
        if e == entry_edge {
            continue;
        }
        let (u2, v2) = portal_image(s.poly, &frame, e);
        if point_segment_distance(s.a2, u2, v2) >= s.best {
            continue;
        }
        let new_cone = match clip_cone(s.a2, u2, v2, cone) {
            Some(c) => c,
            None => continue, // no straight chord can thread this strip
        };
        // A straight chord crosses at most a fan's worth of consecutive
        // portals around one vertex; longer runs are strips spinning in place.
        let (new_pivot, new_run) = if entry_edge == usize::MAX {
            (None, 1)
        } else {
            match shared_vertex(s.poly, entry_edge, e) {
                Some(v) if pivot == Some(v) => (Some(v), run + 1),
                Some(v) => (Some(v), 2),
                None => (None, 1),
            }
        };
        if let Some(v) = new_pivot {
            if new_run > s.poly.vertex_fan(v).len() + 1 {
                continue;
            }
        }
        if s.portals.len() >= 4 && threading_bound(s.a2, &s.portals, u2, v2) >= s.best {
            continue;
        }
        let next_facet = s.poly.other_facet(e, frame.facet);
        let next = unfold_across(s.poly, &frame, e, next_facet);
        s.portals.push((u2, v2));
        dfs(s, next, e, Some(new_cone), new_pivot, new_run);
        s.portals.pop();
    }
}

fn facets_containing(poly: &Polytope, p: &Point3) -> Vec<FacetId> {
    let tol = 1e-9 * poly.tol_scale();
    let mut out = Vec::new();
    for f in 0..poly.num_facets() {
        let plane = (poly.facet_normal(f).dot(&p.coords) - poly.facet_offset(f)).abs();
        if plane > tol {
            continue;
        }
        let bary = poly.bary_from_point(f, p);
        if bary.iter().all(|&x| x >= -BARY_TOL) {
            out.push(f);
        }
    }
    out
}

fn root_frame(poly: &Polytope, f: FacetId) -> Frame {
    let [p0, p1, p2] = poly.facet_points(f);
    let ux = (p1 - p0).normalize();
    let c = p2 - p0;
    let cx = c.dot(&ux);
    let cy = (c - ux * cx).norm();
    Frame {
        pts: [
            Point2::new(0.0, 0.0),
            Point2::new((p1 - p0).norm(), 0.0),
            Point2::new(cx, cy),
        ],
        facet: f,
    }
}

fn embed(poly: &Polytope, frame: &Frame, p: &Point3) -> Point2 {
    let bary = poly.bary_from_point(frame.facet, p);
    Point2::from(
        frame.pts[0].coords * bary[0] + frame.pts[1].coords * bary[1] + frame.pts[2].coords * bary[2],
    )
}

fn portal_image(poly: &Polytope, frame: &Frame, e: EdgeId) -> (Point2, Point2) {
    let verts = poly.facets()[frame.facet];
    let [eu, ev] = poly.edge(e).vertices;
    let iu = verts.iter().position(|&v| v == eu).expect("edge endpoint in facet");
    let iv = verts.iter().position(|&v| v == ev).expect("edge endpoint in facet");
    (frame.pts[iu], frame.pts[iv])
}

/// 2D image of the facet across edge `e`, placed on the far side of the
/// shared-edge line.
fn unfold_across(poly: &Polytope, frame: &Frame, e: EdgeId, next: FacetId) -> Frame {
    let verts_next = poly.facets()[next];
    let [eu, ev] = poly.edge(e).vertices;
    let (u2, v2) = portal_image(poly, frame, e);
    let u3 = poly.vertex(eu);
    let v3 = poly.vertex(ev);
    let w = *verts_next.iter().find(|&&x| x != eu && x != ev).unwrap();
    let w3 = poly.vertex(w);
    let axis = v3 - u3;
    let axis_len = axis.norm();
    let t = (w3 - u3).dot(&axis) / (axis_len * axis_len);
    let perp = (w3 - u3) - axis * t;
    let h = perp.norm();
    let dir2 = (v2 - u2) / axis_len;
    let n2 = Vec2::new(-dir2.y, dir2.x);
    // previous facet's apex side decides the sign: place on the opposite side
    let prev_apex = frame
        .pts
        .iter()
        .zip(poly.facets()[frame.facet].iter())
        .find(|(_, &v)| v != eu && v != ev)
        .map(|(p, _)| *p)
        .unwrap();
    let side = n2.dot(&(prev_apex - u2));
    let sign = if side > 0.0 { -1.0 } else { 1.0 };
    let w2 = u2 + dir2 * (t * axis_len) + n2 * (sign * h);

    let mut pts = [Point2::origin(); 3];
    for (slot, &v) in pts.iter_mut().zip(verts_next.iter()) {
        *slot = if v == eu {
            u2
        } else if v == ev {
            v2
        } else {
            w2
        };
    }
    Frame { pts, facet: next }
}

/// Length of the straight chord if it crosses every portal in order.
fn straight_candidate(a: Point2, b: Point2, portals: &[(Point2, Point2)]) -> Option<f64> {
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

fn cross2(a: &Vec2, b: &Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

fn shared_vertex(poly: &Polytope, e1: EdgeId, e2: EdgeId) -> Option<usize> {
    let a = poly.edge(e1).vertices;
    let b = poly.edge(e2).vertices;
    for &x in &a {
        if b.contains(&x) {
            return Some(x);
        }
    }
    None
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

/// Intersects the direction cone at `a` with the cone subtended by portal
/// `(u,v)`. Cones are (right, left) direction pairs spanning < π CCW.
fn clip_cone(a: Point2, u: Point2, v: Point2, cone: Option<(Vec2, Vec2)>) -> Option<(Vec2, Vec2)> {
    let du = u - a;
    let dv = v - a;
    if du.norm() < 1e-14 || dv.norm() < 1e-14 {
        // source sits on the portal: no constraint from it
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

/// Lower bound on the length of any surface path that threads `portals` and
/// then reaches segment `(gu, gv)`: a funnel walk to the best point of the
/// goal segment (unimodal along the segment, located by ternary search).
fn threading_bound(a2: Point2, portals: &[(Point2, Point2)], gu: Point2, gv: Point2) -> f64 {
    let eval = |t: f64| {
        let y = Point2::from(gu.coords * (1.0 - t) + gv.coords * t);
        funnel_length(a2, portals, y)
    };
    let mut lo = 0.0;
    let mut hi = 1.0;
    for _ in 0..12 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if eval(m1) <= eval(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    // the threading length is 1-Lipschitz in the goal point: subtracting the
    // final bracket width keeps this a true lower bound
    let slack = (gv - gu).norm() * (2.0f64 / 3.0).powi(12);
    eval(lo).min(eval(hi)) - slack
}

/// Exact shortest length from `s` to point `t` threading the oriented portal
/// sequence (simple stupid funnel; grazing portals at endpoints is allowed).
fn funnel_length(s: Point2, portals: &[(Point2, Point2)], t: Point2) -> f64 {
    // Orient portals consistently: consecutive portals of a triangle strip
    // share an endpoint, and the shared endpoint keeps its side.
    let mut oriented: Vec<(Point2, Point2)> = Vec::with_capacity(portals.len() + 1);
    for &(u, v) in portals {
        let lr = match oriented.last() {
            None => {
                if cross2(&(u - s), &(v - s)) >= 0.0 {
                    (v, u)
                } else {
                    (u, v)
                }
            }
            Some(&(pl, pr)) => {
                if same_pt(u, pl) || same_pt(v, pr) {
                    (u, v)
                } else if same_pt(v, pl) || same_pt(u, pr) {
                    (v, u)
                } else if cross2(&(u - s), &(v - s)) >= 0.0 {
                    (v, u)
                } else {
                    (u, v)
                }
            }
        };
        oriented.push(lr);
    }
    oriented.push((t, t));

    let mut length = 0.0;
    let mut apex = s;
    let mut left = oriented[0].0;
    let mut right = oriented[0].1;
    let mut li = 0usize;
    let mut ri = 0usize;
    let mut i = 1usize;
    let mut guard = 0usize;
    let guard_max = 8 * oriented.len() * oriented.len() + 64;
    while i < oriented.len() {
        guard += 1;
        if guard > guard_max {
            break; // numerical stalemate: the partial length is still a bound
        }
        let (pl, pr) = oriented[i];
        // tighten the right boundary (new right rotates CCW, toward left)
        if tri_area2(apex, right, pr) >= 0.0 {
            if same_pt(apex, right) || tri_area2(apex, left, pr) < 0.0 {
                right = pr;
                ri = i;
            } else {
                // right sweep crossed the left boundary: advance apex to left
                length += (left - apex).norm();
                apex = left;
                ri = li;
                i = li + 1;
                right = apex;
                continue;
            }
        }
        // tighten the left boundary (new left rotates CW, toward right)
        if tri_area2(apex, left, pl) <= 0.0 {
            if same_pt(apex, left) || tri_area2(apex, right, pl) > 0.0 {
                left = pl;
                li = i;
            } else {
                length += (right - apex).norm();
                apex = right;
                li = ri;
                i = ri + 1;
                left = apex;
                continue;
            }
        }
        i += 1;
    }
    length + (t - apex).norm()
}

fn same_pt(a: Point2, b: Point2) -> bool {
    (a - b).norm_squared() < 1e-24
}

fn tri_area2(a: Point2, b: Point2, c: Point2) -> f64 {
    cross2(&(b - a), &(c - a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{regular_tetra, unit_cube};

    #[test]
    fn cube_diagonal_is_sqrt5() {
        let p = unit_cube();
        let len = brute_shortest_length(
            &p,
            &Point3::new(0.0, 0.0, 0.0),
            &Point3::new(1.0, 1.0, 1.0),
            10.0,
        );
        assert!((len - 5f64.sqrt()).abs() < 1e-12, "len = {len}");
    }

    #[test]
    fn same_face_chord() {
        let p = unit_cube();
        let len = brute_shortest_length(
            &p,
            &Point3::new(0.2, 0.2, 0.0),
            &Point3::new(0.8, 0.5, 0.0),
            10.0,
        );
        assert!((len - 0.45f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn funnel_length_straight_corridor() {
        let portals = vec![
            (Point2::new(1.0, -1.0), Point2::new(1.0, 1.0)),
            (Point2::new(2.0, -1.0), Point2::new(2.0, 1.0)),
        ];
        let len = funnel_length(Point2::new(0.0, 0.0), &portals, Point2::new(3.0, 0.0));
        assert!((len - 3.0).abs() < 1e-12);
    }

    #[test]
    fn funnel_length_bends_at_corner() {
        // corridor forcing a bend around the corner (1, 0.5)
        let corner = Point2::new(1.0, 0.5);
        let portals = vec![
            (corner, Point2::new(1.0, 3.0)),
            (corner, Point2::new(3.0, 0.5)),
        ];
        let s = Point2::new(0.0, 2.0);
        let t = Point2::new(1.2, -1.0);
        let len = funnel_length(s, &portals, t);
        let expect = (corner - s).norm() + (t - corner).norm();
        assert!((len - expect).abs() < 1e-12, "len={len} expect={expect}");
    }

    #[test]
    fn tetra_opposite_edge_midpoints() {
        let p = regular_tetra();
        // midpoints of two opposite edges
        let a = Point3::new(1.0, 0.0, 0.0); // midpoint of (1,1,1)-(1,-1,-1)
        let b = Point3::new(-1.0, 0.0, 0.0); // midpoint of (-1,1,-1)-(-1,-1,1)
        let len = brute_shortest_length(&p, &a, &b, 100.0);
        // classic: equals the edge length 2√2
        assert!((len - 2.0 * 2f64.sqrt()).abs() < 1e-9, "len = {len}");
    }
}
