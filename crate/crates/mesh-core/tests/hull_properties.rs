//! Property-style checks for hull construction and ball computations on
//! seeded random inputs.

use mesh_core::{
    balls::{check_ball_containment, BallData},
    circumscribed_ball, convex_hull, inscribed_ball, normalize_to_unit_ball, Point3, Polytope, Vec3,
    TOL_CONVEX,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sphere_points(n: usize, seed: u64) -> Vec<Point3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            loop {
                let v = Vec3::new(
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                );
                let len = v.norm();
                if len > 1e-3 {
                    return Point3::from(v / len);
                }
            }
        })
        .collect()
}

fn random_directions(n: usize, seed: u64) -> Vec<Vec3> {
    random_sphere_points(n, seed).into_iter().map(|p| p.coords).collect()
}

#[test]
fn hull_idempotence_support_function() {
    let dirs = random_directions(1000, 99);
    for seed in 0..8 {
        let pts = random_sphere_points(30, seed);
        let p = convex_hull(&pts).unwrap();
        let q = convex_hull(p.vertices()).unwrap();
        assert_eq!(p.num_vertices(), q.num_vertices());
        for d in &dirs {
            assert!((p.support(d) - q.support(d)).abs() < 1e-9);
        }
        // and the hull supports match the input's
        for d in &dirs {
            let input_support = pts.iter().map(|v| d.dot(&v.coords)).fold(f64::NEG_INFINITY, f64::max);
            assert!((p.support(d) - input_support).abs() < 1e-9);
        }
    }
}

#[test]
fn inscribed_never_exceeds_circumscribed() {
    for seed in 0..10 {
        let p = convex_hull(&random_sphere_points(20 + seed as usize, seed)).unwrap();
        let b = BallData::of(&p).unwrap();
        assert!(b.r <= b.big_r + 1e-12);
        assert!(check_ball_containment(&p, &b));
    }
}

#[test]
fn ball_radii_scale_covariantly() {
    let p = convex_hull(&random_sphere_points(25, 3)).unwrap();
    let (_, r1) = inscribed_ball(&p).unwrap();
    let (_, big1) = circumscribed_ball(&p);
    for &lambda in &[0.5, 2.0, 17.0] {
        let q = p.transformed(Vec3::zeros(), lambda).unwrap();
        let (_, r2) = inscribed_ball(&q).unwrap();
        let (_, big2) = circumscribed_ball(&q);
        assert!((r2 - lambda * r1).abs() < 1e-9 * lambda.max(1.0), "r: {} vs {}", r2, lambda * r1);
        assert!((big2 - lambda * big1).abs() < 1e-9 * lambda.max(1.0));
    }
}

#[test]
fn convexity_certificate_on_unit_inputs() {
    for seed in 20..30 {
        let p = convex_hull(&random_sphere_points(40, seed)).unwrap();
        assert!(p.max_convexity_violation() <= TOL_CONVEX * p.tol_scale());
    }
}

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
fn normalize_cube() {
    let p = cube(1.0);
    let q = normalize_to_unit_ball(&p).unwrap();
    let (c, r) = circumscribed_ball(&q);
    assert!(c.coords.norm() < 1e-9);
    assert!((r - 1.0).abs() < 1e-9);
    // corners land on the unit sphere, i.e. side 2/√3
    for v in q.vertices() {
        assert!((v.coords.norm() - 1.0).abs() < 1e-12);
    }
    let (a, b) = q.edge_endpoints(0);
    let shortest_side = (0..q.num_edges()).map(|e| q.edge_length(e)).fold((b - a).norm(), f64::min);
    assert!((shortest_side - 2.0 / 3f64.sqrt()).abs() < 1e-12);
}

#[test]
fn normalize_is_idempotent() {
    let p = convex_hull(&random_sphere_points(15, 5)).unwrap();
    let q = normalize_to_unit_ball(&p).unwrap();
    let q2 = normalize_to_unit_ball(&q).unwrap();
    for (a, b) in q.vertices().iter().zip(q2.vertices()) {
        assert!((a - b).norm() < 1e-9);
    }
}

#[test]
fn normalize_is_translation_invariant() {
    let base = cube(1.0);
    let shifted = base.transformed(Vec3::new(5.0, 0.0, 0.0), 1.0).unwrap();
    let a = normalize_to_unit_ball(&base).unwrap();
    let b = normalize_to_unit_ball(&shifted).unwrap();
    // same vertex sets up to ordering
    for v in a.vertices() {
        assert!(b.vertices().iter().any(|w| (v - w).norm() < 1e-9));
    }
}
