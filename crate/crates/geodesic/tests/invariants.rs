//! Cross-cutting geodesic invariants on seeded random polytopes.

use geodesic::unfold::local_straightness;
use geodesic::{seed_path, shortest_path, straighten, GeodesicSolver, SurfacePoint};
use mesh_core::{normalize_to_unit_ball, Point3, Polytope};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use testkit::{brute_shortest_length, random_hull, random_surface_point, regular_tetra, unit_cube};

fn sp(p: &Polytope, rng: &mut ChaCha8Rng) -> SurfacePoint {
    let (f, b) = random_surface_point(p, rng);
    SurfacePoint::new(f, b).unwrap()
}

#[test]
fn oracle_equivalence_on_small_hulls() {
    for seed in 0..6u64 {
        let p = random_hull(8, seed);
        assert!(p.num_facets() <= 14);
        let solver = GeodesicSolver::new(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed + 500);
        for _ in 0..5 {
            let a = sp(&p, &mut rng);
            let b = sp(&p, &mut rng);
            if (a.position(&p) - b.position(&p)).norm() < 1e-6 {
                continue;
            }
            let geo = solver.shortest_path(&a, &b).unwrap();
            let oracle = brute_shortest_length(&p, &a.position(&p), &b.position(&p), 3.0 * p.diameter());
            assert!(
                (geo.path.length - oracle).abs() <= 1e-9 * oracle.max(1e-9),
                "seed {seed}: lib {} vs oracle {}",
                geo.path.length,
                oracle
            );
        }
    }
}

#[test]
fn symmetry_of_length() {
    let p = random_hull(12, 77);
    let solver = GeodesicSolver::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    for _ in 0..8 {
        let a = sp(&p, &mut rng);
        let b = sp(&p, &mut rng);
        if (a.position(&p) - b.position(&p)).norm() < 1e-6 {
            continue;
        }
        let ab = solver.shortest_path(&a, &b).unwrap().path.length;
        let ba = solver.shortest_path(&b, &a).unwrap().path.length;
        assert!((ab - ba).abs() <= 1e-9, "asymmetry {ab} vs {ba}");
    }
}

#[test]
fn triangle_inequality() {
    let p = random_hull(10, 41);
    let solver = GeodesicSolver::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..6 {
        let a = sp(&p, &mut rng);
        let b = sp(&p, &mut rng);
        let c = sp(&p, &mut rng);
        let pa = a.position(&p);
        let pb = b.position(&p);
        let pc = c.position(&p);
        if (pa - pb).norm() < 1e-6 || (pb - pc).norm() < 1e-6 || (pa - pc).norm() < 1e-6 {
            continue;
        }
        let ac = solver.shortest_path(&a, &c).unwrap().path.length;
        let ab = solver.shortest_path(&a, &b).unwrap().path.length;
        let bc = solver.shortest_path(&b, &c).unwrap().path.length;
        assert!(ac <= ab + bc + 1e-8, "triangle inequality violated");
    }
}

#[test]
fn normalized_shortest_paths_are_shorter_than_pi() {
    let fixtures: Vec<Polytope> = vec![unit_cube(), regular_tetra(), random_hull(20, 5), random_hull(40, 6)];
    for p in &fixtures {
        let q = normalize_to_unit_ball(p).unwrap();
        let solver = GeodesicSolver::new(&q);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..6 {
            let a = sp(&q, &mut rng);
            let b = sp(&q, &mut rng);
            if (a.position(&q) - b.position(&q)).norm() < 1e-6 {
                continue;
            }
            let geo = solver.shortest_path(&a, &b).unwrap();
            assert!(
                geo.path.length < std::f64::consts::PI,
                "length {} ≥ π on a unit-ball polytope",
                geo.path.length
            );
        }
    }
}

#[test]
fn returned_geodesics_unfold_straight() {
    let p = random_hull(14, 99);
    let solver = GeodesicSolver::new(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for _ in 0..8 {
        let a = sp(&p, &mut rng);
        let b = sp(&p, &mut rng);
        if (a.position(&p) - b.position(&p)).norm() < 1e-6 {
            continue;
        }
        let geo = solver.shortest_path(&a, &b).unwrap();
        let dev = local_straightness(&p, &geo.path);
        assert!(dev <= 1e-10, "unfolded deviation {dev}");
    }
}

#[test]
fn monotone_refinement_chain() {
    let cube = unit_cube();
    let a = SurfacePoint::locate(&cube, &Point3::new(0.1, 0.3, 0.0)).unwrap();
    let b = SurfacePoint::locate(&cube, &Point3::new(0.9, 0.2, 1.0)).unwrap();
    let seed = seed_path(&cube, &a, &b, 16).unwrap();
    let tightened = straighten(&cube, &seed).unwrap();
    let best = shortest_path(&cube, &a, &b).unwrap();
    assert!(seed.length + 1e-12 >= tightened.length);
    assert!(tightened.length + 1e-12 >= best.path.length);
}
