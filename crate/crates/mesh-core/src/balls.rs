//! Inscribed and circumscribed balls.
//!
//! The inscribed ball (Chebyshev center) comes from a linear program over the
//! facet planes; the circumscribed ball is the minimum enclosing ball of the
//! vertex set (Welzl's move-to-front algorithm with exact small-case solves).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::MeshError;
use crate::lp::solve_min_lp;
use crate::polytope::Polytope;
use crate::{Point3, Vec3, TOL_BALL};

/// Inscribed and circumscribed ball data of a polytope.
#[derive(Debug, Clone, Copy)]
pub struct BallData {
    pub in_center: Point3,
    /// Inscribed (Chebyshev) radius.
    pub r: f64,
    pub out_center: Point3,
    /// Circumscribed (minimum enclosing) radius.
    pub big_r: f64,
}

impl BallData {
    pub fn of(p: &Polytope) -> Result<BallData, MeshError> {
        let (in_center, r) = inscribed_ball(p)?;
        let (out_center, big_r) = circumscribed_ball(p);
        Ok(BallData {
            in_center,
            r,
            out_center,
            big_r,
        })
    }
}

/// Chebyshev center: the center and radius of the largest ball inside the
/// polytope, via `max r  s.t.  n_f·c + r ≤ d_f` over all facet planes.
pub fn inscribed_ball(p: &Polytope) -> Result<(Point3, f64), MeshError> {
    let m = p.num_facets();
    let scale = p.tol_scale();
    let tol = 1e-12 * scale;

    // Dual of the max-r LP: min d·y s.t. M^T y = (0,0,0,1), y ≥ 0,
    // where row f of M is (n_f, 1). Multipliers recover (center, r).
    let mut a = vec![vec![0.0; m]; 4];
    let mut d = vec![0.0; m];
    for f in 0..m {
        let n = p.facet_normal(f);
        a[0][f] = n.x;
        a[1][f] = n.y;
        a[2][f] = n.z;
        a[3][f] = 1.0;
        d[f] = p.facet_offset(f);
    }
    let sol = solve_min_lp(&a, &[0.0, 0.0, 0.0, 1.0], &d, tol)?;
    let center = Point3::new(sol.multipliers[0], sol.multipliers[1], sol.multipliers[2]);

    // The geometric radius at the recovered center is the binding truth.
    let r = (0..m)
        .map(|f| p.facet_offset(f) - p.facet_normal(f).dot(&center.coords))
        .fold(f64::INFINITY, f64::min);
    if !r.is_finite() || (r - sol.objective).abs() > 1e-6 * scale {
        return Err(MeshError::SolverFailure(format!(
            "chebyshev center inconsistent: geometric r {} vs LP objective {}",
            r, sol.objective
        )));
    }
    Ok((center, r))
}

/// Minimum enclosing ball of the polytope's vertices.
pub fn circumscribed_ball(p: &Polytope) -> (Point3, f64) {
    minimum_enclosing_ball(p.vertices())
}

/// Ball containment check used by tests: `ball(in) ⊂ P ⊂ ball(out)` within
/// `TOL_BALL · tol_scale`.
pub fn check_ball_containment(p: &Polytope, b: &BallData) -> bool {
    let tol = TOL_BALL * p.tol_scale();
    let inside = (0..p.num_facets()).all(|f| {
        p.facet_normal(f).dot(&b.in_center.coords) + b.r <= p.facet_offset(f) + tol
    });
    let outside = p
        .vertices()
        .iter()
        .all(|v| (v - b.out_center).norm() <= b.big_r + tol);
    inside && outside && b.r <= b.big_r + tol
}

/// Welzl's algorithm (move-to-front) over an explicitly shuffled copy.
pub fn minimum_enclosing_ball(points: &[Point3]) -> (Point3, f64) {
    assert!(!points.is_empty(), "minimum_enclosing_ball of empty set");
    let mut pts: Vec<Point3> = points.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4d45_4221);
    pts.shuffle(&mut rng);
    let mut support: Vec<Point3> = Vec::with_capacity(4);
    let (c, r) = welzl(&mut pts, points.len(), &mut support);
    // absorb rounding: grow to actually cover
    let r = points.iter().map(|p| (p - c).norm()).fold(r, f64::max);
    (c, r)
}

fn welzl(pts: &mut [Point3], n: usize, support: &mut Vec<Point3>) -> (Point3, f64) {
    if n == 0 || support.len() == 4 {
        return ball_of_support(support);
    }
    let p = pts[n - 1];
    let (c, r) = welzl(pts, n - 1, support);
    if (p - c).norm() <= r * (1.0 + 1e-12) + 1e-300 {
        return (c, r);
    }
    support.push(p);
    let result = welzl(pts, n - 1, support);
    support.pop();
    // move-to-front keeps the expected recursion shallow
    pts[..n].rotate_right(1);
    result
}

fn ball_of_support(s: &[Point3]) -> (Point3, f64) {
    match s.len() {
        0 => (Point3::origin(), 0.0),
        1 => (s[0], 0.0),
        2 => {
            let c = Point3::from((s[0].coords + s[1].coords) / 2.0);
            (c, (s[0] - c).norm())
        }
        3 => circumball3(s[0], s[1], s[2]),
        _ => circumball4(s[0], s[1], s[2], s[3]),
    }
}

/// Smallest ball with the three points on its boundary (their circumcircle).
fn circumball3(a: Point3, b: Point3, c: Point3) -> (Point3, f64) {
    let ab = b - a;
    let ac = c - a;
    let n = ab.cross(&ac);
    let nn = n.norm_squared();
    if nn < 1e-300 {
        // collinear: fall back to the widest pair
        return widest_pair(&[a, b, c]);
    }
    let d = (ac.norm_squared() * n.cross(&ab) + ab.norm_squared() * ac.cross(&n)) / (2.0 * nn);
    let center = a + d;
    (center, d.norm())
}

fn circumball4(a: Point3, b: Point3, c: Point3, d: Point3) -> (Point3, f64) {
    // solve |x-a|² = |x-b|² = |x-c|² = |x-d|²
    let rows = [b - a, c - a, d - a];
    let rhs = Vec3::new(
        0.5 * rows[0].norm_squared(),
        0.5 * rows[1].norm_squared(),
        0.5 * rows[2].norm_squared(),
    );
    let m = nalgebra::Matrix3::from_rows(&[rows[0].transpose(), rows[1].transpose(), rows[2].transpose()]);
    match m.lu().solve(&rhs) {
        Some(x) => {
            let center = a + x;
            (center, (a - center).norm())
        }
        // near-coplanar support: the 3-point face balls cover it
        None => {
            let mut best = circumball3(a, b, c);
            for tri in [[a, b, d], [a, c, d], [b, c, d]] {
                let cand = circumball3(tri[0], tri[1], tri[2]);
                let covers_all = [a, b, c, d]
                    .iter()
                    .all(|p| (p - cand.0).norm() <= cand.1 * (1.0 + 1e-10));
                if covers_all && cand.1 < best.1 {
                    best = cand;
                }
            }
            best
        }
    }
}

fn widest_pair(pts: &[Point3]) -> (Point3, f64) {
    let mut best = (Point3::origin(), -1.0);
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let c = Point3::from((pts[i].coords + pts[j].coords) / 2.0);
            let r = (pts[i] - c).norm();
            if r > best.1 {
                best = (c, r);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::convex_hull;

    fn cube(scale: f64) -> Polytope {
        let mut v = Vec::new();
        for &x in &[-scale, scale] {
            for &y in &[-scale, scale] {
                for &z in &[-scale, scale] {
                    v.push(Point3::new(x, y, z));
                }
            }
        }
        convex_hull(&v).unwrap()
    }

    #[test]
    fn cube_inscribed() {
        let p = cube(1.0);
        let (c, r) = inscribed_ball(&p).unwrap();
        assert!(c.coords.norm() < 1e-9);
        assert!((r - 1.0).abs() < 1e-9);
    }

    #[test]
    fn scaled_cube_inscribed() {
        let s = 1.0 / 3f64.sqrt();
        let p = cube(s);
        let (_, r) = inscribed_ball(&p).unwrap();
        assert!((r - 0.577_350_3).abs() < 1e-6, "r = {r}");
    }

    #[test]
    fn regular_tetra_inscribed() {
        let pts = vec![
            Point3::new(1.0, 1.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
        ];
        let p = convex_hull(&pts).unwrap();
        let (_, r) = inscribed_ball(&p).unwrap();
        // circumradius √3, inscribed radius √3/3 for the regular tetrahedron
        assert!((r - 3f64.sqrt() / 3.0).abs() < 1e-9, "r = {r}");
    }

    #[test]
    fn cube_circumscribed() {
        let p = cube(1.0);
        let (c, r) = circumscribed_ball(&p);
        assert!(c.coords.norm() < 1e-9);
        assert!((r - 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn stretched_box_circumscribed() {
        let mut v = Vec::new();
        for &x in &[-2.0, 2.0] {
            for &y in &[-1.0, 1.0] {
                for &z in &[-1.0, 1.0] {
                    v.push(Point3::new(x, y, z));
                }
            }
        }
        let p = convex_hull(&v).unwrap();
        let (_, r) = circumscribed_ball(&p);
        assert!((r - 6f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn meb_random_cloud_is_covering() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let pts: Vec<Point3> = (0..200)
                .map(|_| Point3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let (c, r) = minimum_enclosing_ball(&pts);
            for p in &pts {
                assert!((p - c).norm() <= r + 1e-9);
            }
            // not wastefully large: some point is near the boundary
            let max_d = pts.iter().map(|p| (p - c).norm()).fold(0.0, f64::max);
            assert!(max_d > r - 1e-9);
        }
    }
}
