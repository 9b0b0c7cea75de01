//! Operation-level checks against frozen expected values and the brute-force
//! enumeration oracle.

use geodesic::{
    distance_to_edge_set, seed_path, shortest_path, straighten, unfold, SurfacePath, SurfacePoint,
};
use mesh_core::{Point3, Polytope};
use testkit::{brute_shortest_length, regular_tetra, unit_cube};

fn locate(p: &Polytope, x: f64, y: f64, z: f64) -> SurfacePoint {
    SurfacePoint::locate(p, &Point3::new(x, y, z)).unwrap()
}

#[test]
fn seed_same_facet_is_straight_segment() {
    let cube = unit_cube();
    let a = locate(&cube, 0.2, 0.2, 0.0);
    let b = locate(&cube, 0.8, 0.5, 0.0);
    let path = seed_path(&cube, &a, &b, 16).unwrap();
    assert_eq!(path.points.len(), 2);
    assert!((path.length - 0.45f64.sqrt()).abs() < 1e-12);
}

#[test]
fn seed_cube_diagonal_within_two_percent() {
    let cube = unit_cube();
    let a = locate(&cube, 0.0, 0.0, 0.0);
    let b = locate(&cube, 1.0, 1.0, 1.0);
    let path = seed_path(&cube, &a, &b, 64).unwrap();
    let exact = 5f64.sqrt();
    assert!(path.length >= exact - 1e-12, "seed below geodesic length");
    assert!(path.length <= exact * 1.02, "seed {} too loose", path.length);
}

#[test]
fn seed_vertex_graph_dominates_refined() {
    let cube = unit_cube();
    let a = locate(&cube, 0.0, 0.0, 0.0);
    let b = locate(&cube, 1.0, 1.0, 1.0);
    let coarse = seed_path(&cube, &a, &b, 0).unwrap();
    let refined = seed_path(&cube, &a, &b, 32).unwrap();
    assert!(coarse.length >= refined.length - 1e-12);
}

#[test]
fn unfold_cube_bottom_and_side_strip() {
    let cube = unit_cube();
    let a = locate(&cube, 0.0, 0.0, 0.0);
    let b = locate(&cube, 1.0, 1.0, 1.0);
    let geo = shortest_path(&cube, &a, &b).unwrap();
    assert!(geo.certified);
    // develop the geodesic's own strip: endpoint images must be √5 apart
    let start = geo.path.points[0].facet;
    let strip = unfold(&cube, &geo.path.crossed_edges, start).unwrap();
    let a2 = strip.embed(&cube, 0, &geo.path.points[0]).unwrap();
    let last = strip.facets.len() - 1;
    let b2 = strip.embed(&cube, last, geo.path.target()).unwrap();
    assert!(((b2 - a2).norm() - 5f64.sqrt()).abs() < 1e-9);
}

#[test]
fn unfold_coplanar_pair_is_flat() {
    let cube = unit_cube();
    // find a coplanar edge (a face diagonal of the cube)
    let e = (0..cube.num_edges()).find(|&e| cube.is_coplanar_edge(e)).unwrap();
    let f = cube.edge(e).facets[0];
    let strip = unfold(&cube, &[e], f).unwrap();
    // the two frames together must be a rigid image of the planar quad:
    // check all cross-frame vertex distances against 3D
    let f2 = strip.facets[1];
    for i in 0..3 {
        for j in 0..3 {
            let d3 = (cube.facet_points(f)[i] - cube.facet_points(f2)[j]).norm();
            let d2 = (strip.frames[0][i] - strip.frames[1][j]).norm();
            assert!((d3 - d2).abs() < 1e-12, "fold not flat across coplanar edge");
        }
    }
}

#[test]
fn straighten_is_fixed_point_on_straight_paths() {
    let cube = unit_cube();
    let a = locate(&cube, 0.0, 0.0, 0.0);
    let b = locate(&cube, 1.0, 1.0, 1.0);
    let geo = shortest_path(&cube, &a, &b).unwrap();
    let again = straighten(&cube, &geo.path).unwrap();
    assert!((again.length - geo.path.length).abs() < 1e-12);
}

#[test]
fn straighten_recovers_cube_diagonal_from_seed() {
    let cube = unit_cube();
    let a = locate(&cube, 0.0, 0.0, 0.0);
    let b = locate(&cube, 1.0, 1.0, 1.0);
    let seed = seed_path(&cube, &a, &b, 32).unwrap();
    let tight = straighten(&cube, &seed).unwrap();
    assert!((tight.length - 5f64.sqrt()).abs() < 1e-9, "len = {}", tight.length);
    assert!(tight.length <= seed.length + 1e-12);
}

#[test]
fn straighten_removes_redundant_zig() {
    let cube = unit_cube();
    // both endpooints on the bottom face, in the same triangle, with a zig
    // across the coplanar diagonal and back
    let a = locate(&cube, 0.1, 0.2, 0.0);
    let b = locate(&cube, 0.25, 0.6, 0.0);
    let e = (0..cube.num_edges())
        .find(|&e| {
            cube.is_coplanar_edge(e) && {
                let (u, v) = cube.edge_endpoints(e);
                u.z == 0.0 && v.z == 0.0
            }
        })
        .unwrap();
    let x1 = SurfacePoint::on_edge(&cube, e, 0.3);
    let x2 = SurfacePoint::on_edge(&cube, e, 0.7);
    let zig = SurfacePath {
        points: vec![a, x1, x2, b],
        crossed_edges: vec![e, e],
        length: 0.0,
    };
    let zig = SurfacePath {
        length: zig.recompute_length(&cube),
        ..zig
    };
    let tight = straighten(&cube, &zig).unwrap();
    assert!(tight.length < zig.length, "zig not removed");
    assert!((tight.length - (b.position(&cube) - a.position(&cube)).norm()).abs() < 1e-12);
}

#[test]
fn shortest_cube_diagonal() {
    let cube = unit_cube();
    let a = locate(&cube, 0.0, 0.0, 0.0);
    let b = locate(&cube, 1.0, 1.0, 1.0);
    let geo = shortest_path(&cube, &a, &b).unwrap();
    assert!((geo.path.length - 5f64.sqrt()).abs() < 1e-9, "len = {}", geo.path.length);
    assert!(geo.certified);
    // many tied routings exist by symmetry
    assert!(geo.tie_detected);
}

#[test]
fn shortest_same_facet_chord() {
    let cube = unit_cube();
    let a = locate(&cube, 0.2, 0.2, 0.0);
    let b = locate(&cube, 0.8, 0.5, 0.0);
    let geo = shortest_path(&cube, &a, &b).unwrap();
    assert!((geo.path.length - 0.45f64.sqrt()).abs() < 1e-12);
}

#[test]
fn shortest_tetra_opposite_edge_midpoints_matches_oracle() {
    let tetra = regular_tetra();
    let a = locate(&tetra, 1.0, 0.0, 0.0);
    let b = locate(&tetra, -1.0, 0.0, 0.0);
    let geo = shortest_path(&tetra, &a, &b).unwrap();
    let oracle = brute_shortest_length(
        &tetra,
        &Point3::new(1.0, 0.0, 0.0),
        &Point3::new(-1.0, 0.0, 0.0),
        3.0 * tetra.diameter(),
    );
    assert!(
        (geo.path.length - oracle).abs() <= 1e-9 * oracle,
        "lib {} vs oracle {}",
        geo.path.length,
        oracle
    );
}

#[test]
fn distance_to_containing_edge_is_zero() {
    let cube = unit_cube();
    let e = 0;
    let x0 = SurfacePoint::on_edge(&cube, e, 0.37);
    let (d, argmin, _) = distance_to_edge_set(&cube, &x0, &[e]).unwrap();
    assert!(d.abs() < 1e-12);
    assert!((argmin.position(&cube) - x0.position(&cube)).norm() < 1e-9);
}

#[test]
fn distance_bottom_center_to_top_edge() {
    let cube = unit_cube();
    let x0 = locate(&cube, 0.5, 0.5, 0.0);
    // top edge directly above the bottom edge y=0: from (0,0,1) to (1,0,1)
    let top_edge = (0..cube.num_edges())
        .find(|&e| {
            let (u, v) = cube.edge_endpoints(e);
            u.z == 1.0 && v.z == 1.0 && u.y == 0.0 && v.y == 0.0
        })
        .unwrap();
    let (d, _, path) = distance_to_edge_set(&cube, &x0, &[top_edge]).unwrap();
    assert!((d - 1.5).abs() < 1e-9, "d = {d}");
    assert!(path.length >= d - 1e-12);
}

#[test]
fn distance_picks_closer_edge() {
    let cube = unit_cube();
    let x0 = locate(&cube, 0.5, 0.1, 0.0);
    let near = (0..cube.num_edges())
        .find(|&e| {
            let (u, v) = cube.edge_endpoints(e);
            u.z == 0.0 && v.z == 0.0 && u.y == 0.0 && v.y == 0.0
        })
        .unwrap();
    let far = (0..cube.num_edges())
        .find(|&e| {
            let (u, v) = cube.edge_endpoints(e);
            u.z == 0.0 && v.z == 0.0 && u.y == 1.0 && v.y == 1.0
        })
        .unwrap();
    let (d, argmin, _) = distance_to_edge_set(&cube, &x0, &[near, far]).unwrap();
    assert!((d - 0.1).abs() < 1e-9);
    let (u, v) = cube.edge_endpoints(near);
    let p = argmin.position(&cube);
    // argmin lies on the closer edge
    let on_near = (p - u).cross(&(v - u)).norm() < 1e-9 && p.y.abs() < 1e-9;
    assert!(on_near, "argmin not on the nearer edge: {p:?}");
}
