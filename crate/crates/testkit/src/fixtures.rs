//! Deterministic fixture generators shared across test suites.

use mesh_core::{convex_hull, Point3, Polytope, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Cube with corners (±1, ±1, ±1).
pub fn cube() -> Polytope {
    let mut v = Vec::new();
    for &x in &[-1.0, 1.0] {
        for &y in &[-1.0, 1.0] {
            for &z in &[-1.0, 1.0] {
                v.push(Point3::new(x, y, z));
            }
        }
    }
    convex_hull(&v).unwrap()
}

/// Unit cube [0,1]³.
pub fn unit_cube() -> Polytope {
    let mut v = Vec::new();
    for &x in &[0.0, 1.0] {
        for &y in &[0.0, 1.0] {
            for &z in &[0.0, 1.0] {
                v.push(Point3::new(x, y, z));
            }
        }
    }
    convex_hull(&v).unwrap()
}

/// Regular tetrahedron inscribed in the sphere of radius √3.
pub fn regular_tetra() -> Polytope {
    convex_hull(&[
        Point3::new(1.0, 1.0, 1.0),
        Point3::new(1.0, -1.0, -1.0),
        Point3::new(-1.0, 1.0, -1.0),
        Point3::new(-1.0, -1.0, 1.0),
    ])
    .unwrap()
}

pub fn random_unit_vector(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n;
        }
    }
}

/// Hull of `n` random points on the unit sphere. `n ≤ 9` keeps the facet
/// count at or below 14 (generic hulls have 2n−4 facets).
pub fn random_hull(n: usize, seed: u64) -> Polytope {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pts: Vec<Point3> = (0..n).map(|_| Point3::from(random_unit_vector(&mut rng))).collect();
        if let Ok(p) = convex_hull(&pts) {
            return p;
        }
    }
}

/// Random point strictly inside a random facet.
pub fn random_surface_point(p: &Polytope, rng: &mut impl Rng) -> (usize, [f64; 3]) {
    let f = rng.gen_range(0..p.num_facets());
    let mut b = [
        rng.gen_range(0.05..1.0f64),
        rng.gen_range(0.05..1.0f64),
        rng.gen_range(0.05..1.0f64),
    ];
    let s: f64 = b.iter().sum();
    for x in &mut b {
        *x /= s;
    }
    (f, b)
}

/// Closed convex polygon in a random plane (returned in traversal order).
pub fn random_planar_convex_polygon(n: usize, seed: u64) -> Vec<Point3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = random_unit_vector(&mut rng);
    let mut w = random_unit_vector(&mut rng);
    w = (w - u * w.dot(&u)).normalize();
    let origin = Point3::from(random_unit_vector(&mut rng) * rng.gen_range(0.0..5.0));
    // sorted angles on an ellipse give a convex traversal
    let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
    while angles.len() < 3 {
        angles.push(angles.last().unwrap() + 1.0);
    }
    let (ra, rb) = (rng.gen_range(0.5..2.0), rng.gen_range(0.5..2.0));
    angles
        .iter()
        .map(|t| origin + u * (ra * t.cos()) + w * (rb * t.sin()))
        .collect()
}

/// Closed random polyline in 3D with non-degenerate segments.
pub fn random_skew_polygon(n: usize, seed: u64) -> Vec<Point3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pts: Vec<Point3> = (0..n)
            .map(|_| {
                Point3::new(
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                )
            })
            .collect();
        let ok = (0..n).all(|i| {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            (b - a).norm() > 1e-2
        });
        if ok {
            return pts;
        }
    }
}
