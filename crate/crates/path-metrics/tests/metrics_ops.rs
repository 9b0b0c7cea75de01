//! Turning/curvature examples on real meshes, plus invariance properties.

use geodesic::{shortest_path, GeodesicSolver, SurfacePath, SurfacePoint};
use mesh_core::{convex_hull, normalize_to_unit_ball, Point3, Polytope, Vec3};
use nalgebra::{Rotation3, Unit};
use path_metrics::{
    lemma1_certificate, lemma1_for_normals, spiralling_number, theorem2_audit, total_curvature,
    turning_data,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use testkit::{random_hull, random_surface_point, unit_cube};

fn flat_box() -> Polytope {
    let mut v = Vec::new();
    for &x in &[0.0, 4.0] {
        for &y in &[0.0, 4.0] {
            for &z in &[0.0, 1.0] {
                v.push(Point3::new(x, y, z));
            }
        }
    }
    convex_hull(&v).unwrap()
}

fn path_in_one_facet(poly: &Polytope, pts: &[Point3]) -> SurfacePath {
    let sps: Vec<SurfacePoint> = pts.iter().map(|p| SurfacePoint::locate(poly, p).unwrap()).collect();
    // relocate all onto a common facet
    let f = sps[0]
        .incident_facets(poly)
        .into_iter()
        .find(|&f| sps.iter().all(|sp| sp.relocate(poly, f).is_some()))
        .expect("points share a facet");
    let points: Vec<SurfacePoint> = sps.iter().map(|sp| sp.relocate(poly, f).unwrap()).collect();
    let length = pts.windows(2).map(|w| (w[1] - w[0]).norm()).sum();
    SurfacePath {
        points,
        crossed_edges: Vec::new(),
        length,
    }
}

#[test]
fn collinear_path_turns_zero() {
    let p = flat_box();
    let path = path_in_one_facet(
        &p,
        &[
            Point3::new(0.5, 0.25, 0.0),
            Point3::new(1.0, 0.5, 0.0),
            Point3::new(1.5, 0.75, 0.0),
        ],
    );
    let td = turning_data(&p, &path).unwrap();
    assert_eq!(td.turn_angles.len(), 1);
    assert!(td.turn_angles[0].abs() < 1e-12);
    assert!(td.normal_gaps[0].abs() < 1e-12);
}

#[test]
fn right_angle_in_one_facet() {
    let p = flat_box();
    let path = path_in_one_facet(
        &p,
        &[
            Point3::new(1.0, 0.5, 0.0),
            Point3::new(2.0, 0.5, 0.0),
            Point3::new(2.0, 1.5, 0.0),
        ],
    );
    let td = turning_data(&p, &path).unwrap();
    assert_eq!(td.turn_angles.len(), 1);
    assert!((td.turn_angles[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert!((total_curvature(&td) - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
}

#[test]
fn cube_diagonal_turn_is_arccos_one_fifth() {
    let cube = unit_cube();
    let a = SurfacePoint::locate(&cube, &Point3::new(0.0, 0.0, 0.0)).unwrap();
    let b = SurfacePoint::locate(&cube, &Point3::new(1.0, 1.0, 1.0)).unwrap();
    let geo = shortest_path(&cube, &a, &b).unwrap();
    let td = turning_data(&cube, &geo.path).unwrap();
    // coplanar face-diagonal crossings drop out: one real corner remains
    assert_eq!(td.corners.len(), 3, "corners: {:?}", td.corners);
    assert_eq!(td.turn_angles.len(), 1);
    let expect = 0.2f64.acos();
    assert!(
        (td.turn_angles[0] - expect).abs() < 1e-9,
        "ξ = {} vs arccos(0.2) = {expect}",
        td.turn_angles[0]
    );
}

#[test]
fn two_curvature_formulas_agree() {
    // Σξ computed from directions must equal Σ(π − interior angle)
    let p = random_hull(12, 3);
    let solver = GeodesicSolver::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..5 {
        let (fa, ba) = random_surface_point(&p, &mut rng);
        let (fb, bb) = random_surface_point(&p, &mut rng);
        let a = SurfacePoint::new(fa, ba).unwrap();
        let b = SurfacePoint::new(fb, bb).unwrap();
        if (a.position(&p) - b.position(&p)).norm() < 1e-6 {
            continue;
        }
        let geo = solver.shortest_path(&a, &b).unwrap();
        let td = turning_data(&p, &geo.path).unwrap();
        let mut interior_sum = 0.0;
        for i in 1..td.corners.len() - 1 {
            let u = (td.corners[i - 1] - td.corners[i]).normalize();
            let w = (td.corners[i + 1] - td.corners[i]).normalize();
            let interior = u.cross(&w).norm().atan2(u.dot(&w));
            interior_sum += std::f64::consts::PI - interior;
        }
        assert!((total_curvature(&td) - interior_sum).abs() < 1e-12);
    }
}

#[test]
fn geodesic_reflection_residuals_are_small() {
    let p = random_hull(14, 8);
    let solver = GeodesicSolver::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..5 {
        let (fa, ba) = random_surface_point(&p, &mut rng);
        let (fb, bb) = random_surface_point(&p, &mut rng);
        let a = SurfacePoint::new(fa, ba).unwrap();
        let b = SurfacePoint::new(fb, bb).unwrap();
        if (a.position(&p) - b.position(&p)).norm() < 1e-6 {
            continue;
        }
        let geo = solver.shortest_path(&a, &b).unwrap();
        let td = turning_data(&p, &geo.path).unwrap();
        let Some(lambdas) = &td.lambdas else {
            panic!("geodesic should have reflection coefficients");
        };
        for (i, lambda) in lambdas.iter().enumerate() {
            let Some(l) = lambda else { continue };
            let s = td.facet_normals[i] + td.facet_normals[i + 1];
            let resid = (td.directions[i] - td.directions[i + 1]) - s * *l;
            assert!(resid.norm() <= 1e-8, "residual {}", resid.norm());
            assert!(*l >= -1e-12, "λ must be nonnegative, got {l}");
        }
    }
}

#[test]
fn lemma1_bound_holds_on_geodesics_and_subpaths() {
    let p = random_hull(14, 21);
    let solver = GeodesicSolver::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..6 {
        let (fa, ba) = random_surface_point(&p, &mut rng);
        let (fb, bb) = random_surface_point(&p, &mut rng);
        let a = SurfacePoint::new(fa, ba).unwrap();
        let b = SurfacePoint::new(fb, bb).unwrap();
        if (a.position(&p) - b.position(&p)).norm() < 1e-6 {
            continue;
        }
        let geo = solver.shortest_path(&a, &b).unwrap();
        let td = turning_data(&p, &geo.path).unwrap();
        let cert = lemma1_certificate(&td);
        if cert.eta > 0.0 {
            assert!(td.xi_sum() < cert.bound, "Σξ {} ≥ π/η {}", td.xi_sum(), cert.bound);
        }
        // random contiguous sub-paths satisfy the same bound
        let n = td.facet_normals.len();
        if n >= 2 {
            for _ in 0..4 {
                let i = rng.gen_range(0..n - 1);
                let j = rng.gen_range(i + 1..n);
                let sub = &td.facet_normals[i..=j];
                let sub_cert = lemma1_for_normals(sub);
                let xi: f64 = td.turn_angles[i..j].iter().sum();
                if sub_cert.eta > 0.0 {
                    assert!(xi < sub_cert.bound + 1e-12);
                }
            }
        }
    }
}

#[test]
fn metrics_are_rigid_motion_invariant() {
    let p = random_hull(12, 31);
    let solver = GeodesicSolver::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let (fa, ba) = random_surface_point(&p, &mut rng);
    let (fb, bb) = random_surface_point(&p, &mut rng);
    let a = SurfacePoint::new(fa, ba).unwrap();
    let b = SurfacePoint::new(fb, bb).unwrap();
    let geo = solver.shortest_path(&a, &b).unwrap();
    let td = turning_data(&p, &geo.path).unwrap();
    let spiral = spiralling_number(&p, &geo.path, &a.position(&p), &b.position(&p)).unwrap();

    let rot = Rotation3::from_axis_angle(&Unit::new_normalize(Vec3::new(0.3, -0.8, 0.5)), 1.234);
    let shift = Vec3::new(5.0, -2.0, 0.7);
    let moved: Vec<Point3> = p.vertices().iter().map(|v| rot * v + shift).collect();
    let q = Polytope::from_parts(moved, p.facets().to_vec()).unwrap();
    // the same combinatorial path lives on the moved mesh
    let path_q = SurfacePath {
        points: geo.path.points.clone(),
        crossed_edges: geo.path.crossed_edges.clone(),
        length: geo.path.recompute_length(&q),
    };
    let td_q = turning_data(&q, &path_q).unwrap();
    assert!((total_curvature(&td) - total_curvature(&td_q)).abs() < 1e-9);

    let a_q = rot * a.position(&p) + shift;
    let b_q = rot * b.position(&p) + shift;
    let spiral_q = spiralling_number(&q, &path_q, &a_q, &b_q).unwrap();
    assert!((spiral.s - spiral_q.s).abs() < 1e-9, "{} vs {}", spiral.s, spiral_q.s);
}

#[test]
fn curvature_is_scale_invariant() {
    let p = random_hull(12, 55);
    let solver = GeodesicSolver::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(56);
    let (fa, ba) = random_surface_point(&p, &mut rng);
    let (fb, bb) = random_surface_point(&p, &mut rng);
    let a = SurfacePoint::new(fa, ba).unwrap();
    let b = SurfacePoint::new(fb, bb).unwrap();
    let geo = solver.shortest_path(&a, &b).unwrap();
    let td = turning_data(&p, &geo.path).unwrap();

    let q = p.transformed(Vec3::zeros(), 17.0).unwrap();
    let path_q = SurfacePath {
        points: geo.path.points.clone(),
        crossed_edges: geo.path.crossed_edges.clone(),
        length: geo.path.recompute_length(&q),
    };
    let td_q = turning_data(&q, &path_q).unwrap();
    assert!((total_curvature(&td) - total_curvature(&td_q)).abs() < 1e-12);
}

#[test]
fn audit_bound_for_half_inscribed_radius() {
    // box with facet distances (a, a, c), c = 1/2, normalized: bound = 16π²
    let a = 0.375f64.sqrt();
    let mut v = Vec::new();
    for &x in &[-a, a] {
        for &y in &[-a, a] {
            for &z in &[-0.5, 0.5] {
                v.push(Point3::new(x, y, z));
            }
        }
    }
    let p = normalize_to_unit_ball(&convex_hull(&v).unwrap()).unwrap();
    let src = SurfacePoint::new(0, [0.5, 0.25, 0.25]).unwrap();
    let dst = SurfacePoint::new(p.num_facets() - 1, [0.25, 0.5, 0.25]).unwrap();
    let geo = shortest_path(&p, &src, &dst).unwrap();
    let report = theorem2_audit(&p, &geo.path).unwrap();
    assert!((report.r - 0.5).abs() < 1e-9, "r = {}", report.r);
    assert!((report.bound - 16.0 * std::f64::consts::PI.powi(2)).abs() < 1e-6);
    assert!(report.flags.all_ok);
}

#[test]
fn audit_holds_on_random_normalized_hulls() {
    for seed in 0..5u64 {
        let p = normalize_to_unit_ball(&random_hull(24, seed)).unwrap();
        let solver = GeodesicSolver::new(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed + 600);
        for _ in 0..4 {
            let (fa, ba) = random_surface_point(&p, &mut rng);
            let (fb, bb) = random_surface_point(&p, &mut rng);
            let a = SurfacePoint::new(fa, ba).unwrap();
            let b = SurfacePoint::new(fb, bb).unwrap();
            if (a.position(&p) - b.position(&p)).norm() < 1e-6 {
                continue;
            }
            let geo = solver.shortest_path(&a, &b).unwrap();
            let report = theorem2_audit(&p, &geo.path).unwrap();
            assert!(report.flags.all_ok, "violation: {:?}", report.flags);
        }
    }
}
