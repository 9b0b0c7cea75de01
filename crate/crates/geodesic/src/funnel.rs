//! Funnel walk: shortest path threading a sequence of oriented portals.
//!
//! The output records where the path bends (always at portal endpoints, which
//! are mesh vertices) and the crossing parameter on every portal.

use mesh_core::{Point2, Polytope, VertexId};

use crate::unfold::{cross2, Portal2, UnfoldedStrip};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A bend of the funnel path at a portal endpoint.
#[derive(Debug, Clone, Copy)]
pub struct Apex {
    pub portal: usize,
    pub side: Side,
    pub point: Point2,
}

/// How the path meets one portal.
#[derive(Debug, Clone, Copy)]
pub enum Crossing {
    /// Param along the portal from left (0) to right (1).
    Transversal(f64),
    /// The path passes through this portal endpoint.
    AtVertex(VertexId, Side),
}

#[derive(Debug, Clone)]
pub struct FunnelPath {
    pub apexes: Vec<Apex>,
    pub crossings: Vec<Crossing>,
    pub length2d: f64,
}

/// Shortest s→t path threading the strip's portals in order.
pub fn funnel_strip(_poly: &Polytope, strip: &UnfoldedStrip, s: Point2, t: Point2) -> FunnelPath {
    let oriented: Vec<(Point2, Point2)> = strip.portals.iter().map(|p| (p.left, p.right)).collect();
    let (events, length2d) = funnel_polyline(s, &oriented, t);
    // events at the virtual target portal are arrivals, not bends
    let apexes: Vec<Apex> = events
        .iter()
        .filter(|&&(portal, _, _)| portal < strip.portals.len())
        .map(|&(portal, side, point)| Apex {
            portal,
            side,
            point,
        })
        .collect();
    let crossings = extract_crossings(strip, s, t, &apexes);
    FunnelPath {
        apexes,
        crossings,
        length2d,
    }
}

/// Low-level funnel on raw oriented portals `(left, right)`; returns the bend
/// events `(portal index, side, point)` and the total length.
pub fn funnel_polyline(s: Point2, portals: &[(Point2, Point2)], t: Point2) -> (Vec<(usize, Side, Point2)>, f64) {
    let mut events: Vec<(usize, Side, Point2)> = Vec::new();
    if portals.is_empty() {
        return (events, (t - s).norm());
    }
    let mut length = 0.0;
    let mut apex = s;
    let mut left = portals[0].0;
    let mut right = portals[0].1;
    let mut li = 0usize;
    let mut ri = 0usize;
    let n = portals.len();
    let mut i = 1usize;
    let mut guard = 0usize;
    let guard_max = 16 * (n + 2) * (n + 2) + 64;
    while i <= n {
        guard += 1;
        if guard > guard_max {
            break;
        }
        let (pl, pr) = if i == n { (t, t) } else { portals[i] };
        // tighten the right boundary (rotating counterclockwise, toward left)
        if tri_area2(apex, right, pr) >= 0.0 {
            if same_pt(apex, right) || tri_area2(apex, left, pr) < 0.0 {
                right = pr;
                ri = i;
            } else {
                // right sweep crossed left: the left point becomes a bend
                length += (left - apex).norm();
                apex = left;
                events.push((li, Side::Left, apex));
                ri = li;
                i = li + 1;
                right = apex;
                continue;
            }
        }
        // tighten the left boundary (rotating clockwise, toward right)
        if tri_area2(apex, left, pl) <= 0.0 {
            if same_pt(apex, left) || tri_area2(apex, right, pl) > 0.0 {
                left = pl;
                li = i;
            } else {
                length += (right - apex).norm();
                apex = right;
                events.push((ri, Side::Right, apex));
                li = ri;
                i = ri + 1;
                left = apex;
                continue;
            }
        }
        i += 1;
    }
    length += (t - apex).norm();
    // an apex event at the virtual final portal is arrival at t, not a bend
    events.retain(|&(portal, _, _)| portal < n);
    (events, length)
}

/// Shortest threading length from `s` through `portals` to the *segment*
/// `(gu, gv)`; the restriction of the threading distance to the goal segment
/// is unimodal, so ternary search locates its minimum.
pub fn shortest_to_segment(s: Point2, portals: &[(Point2, Point2)], gu: Point2, gv: Point2) -> f64 {
    const ITERS: usize = 12;
    let eval = |u: f64| {
        let y = Point2::from(gu.coords * (1.0 - u) + gv.coords * u);
        funnel_polyline(s, portals, y).1
    };
    let mut lo = 0.0;
    let mut hi = 1.0;
    for _ in 0..ITERS {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if eval(m1) <= eval(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    // the threading length is 1-Lipschitz in the goal point, so the sampled
    // minimum overshoots the true one by at most the bracket width
    let slack = (gv - gu).norm() * (2.0f64 / 3.0).powi(ITERS as i32);
    eval(lo).min(eval(hi)) - slack
}

fn extract_crossings(strip: &UnfoldedStrip, s: Point2, t: Point2, apexes: &[Apex]) -> Vec<Crossing> {
    let n = strip.portals.len();
    let mut crossings = vec![Crossing::Transversal(0.5); n];

    // waypoints: source, bends, target with their portal spans
    let mut way: Vec<(i64, Point2)> = Vec::with_capacity(apexes.len() + 2);
    way.push((-1, s));
    for a in apexes {
        way.push((a.portal as i64, a.point));
    }
    way.push((n as i64, t));

    for w in way.windows(2) {
        let (i0, p0) = w[0];
        let (i1, p1) = w[1];
        for k in (i0.max(-1) + 1)..i1 {
            let k = k as usize;
            let portal = &strip.portals[k];
            crossings[k] = transversal_param(p0, p1, portal);
        }
    }
    // portals where the funnel bends: crossing at that endpoint
    for a in apexes {
        crossings[a.portal] = Crossing::AtVertex(
            match a.side {
                Side::Left => strip.portals[a.portal].left_vertex,
                Side::Right => strip.portals[a.portal].right_vertex,
            },
            a.side,
        );
    }
    crossings
}

fn transversal_param(p0: Point2, p1: Point2, portal: &Portal2) -> Crossing {
    let tol = 1e-12 * (portal.right - portal.left).norm().max(1.0);
    // segment endpoints grazing a portal endpoint
    if (p0 - portal.left).norm() <= tol || (p1 - portal.left).norm() <= tol {
        return Crossing::AtVertex(portal.left_vertex, Side::Left);
    }
    if (p0 - portal.right).norm() <= tol || (p1 - portal.right).norm() <= tol {
        return Crossing::AtVertex(portal.right_vertex, Side::Right);
    }
    let d = p1 - p0;
    let e = portal.right - portal.left;
    let denom = cross2(&d, &e);
    if denom.abs() < 1e-300 {
        return Crossing::Transversal(0.5);
    }
    let w = portal.left - p0;
    let u = (cross2(&w, &d) / denom).clamp(0.0, 1.0);
    if u <= 1e-12 {
        Crossing::AtVertex(portal.left_vertex, Side::Left)
    } else if u >= 1.0 - 1e-12 {
        Crossing::AtVertex(portal.right_vertex, Side::Right)
    } else {
        Crossing::Transversal(u)
    }
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

    #[test]
    fn straight_corridor() {
        let portals = vec![
            (Point2::new(1.0, 1.0), Point2::new(1.0, -1.0)),
            (Point2::new(2.0, 1.0), Point2::new(2.0, -1.0)),
        ];
        let (events, len) = funnel_polyline(Point2::new(0.0, 0.0), &portals, Point2::new(3.0, 0.0));
        assert!(events.is_empty());
        assert!((len - 3.0).abs() < 1e-12);
    }

    #[test]
    fn bend_recorded() {
        let corner = Point2::new(1.0, 0.5);
        let portals = vec![
            (Point2::new(1.0, 3.0), corner),
            (Point2::new(3.0, 0.5), corner),
        ];
        let s = Point2::new(0.0, 2.0);
        let t = Point2::new(1.2, -1.0);
        let (events, len) = funnel_polyline(s, &portals, t);
        let expect = (corner - s).norm() + (t - corner).norm();
        assert!((len - expect).abs() < 1e-12, "len={len} expect={expect}");
        assert_eq!(events.len(), 1);
        assert!((events[0].2 - corner).norm() < 1e-12);
    }

    #[test]
    fn segment_goal_distance() {
        let portals = vec![(Point2::new(1.0, 1.0), Point2::new(1.0, -1.0))];
        let d = shortest_to_segment(
            Point2::new(0.0, 0.0),
            &portals,
            Point2::new(2.0, -5.0),
            Point2::new(2.0, 5.0),
        );
        // a lower bound close below the true distance 2
        assert!(d <= 2.0 + 1e-12 && d > 2.0 - 0.2, "d = {d}");
    }
}
