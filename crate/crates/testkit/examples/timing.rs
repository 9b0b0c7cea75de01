use mesh_core::Point3;
use std::time::Instant;
fn main() {
    // timing: cube + tetra + random hull oracle queries
    let cube = testkit::fixtures::unit_cube();
    let t0 = Instant::now();
    let len = testkit::brute_shortest_length(&cube, &Point3::new(0.0,0.0,0.0), &Point3::new(1.0,1.0,1.0), 3.0*cube.diameter());
    println!("cube corner-corner: {len:.12} in {:?}", t0.elapsed());

    let tetra = testkit::fixtures::regular_tetra();
    let t0 = Instant::now();
    let len = testkit::brute_shortest_length(&tetra, &Point3::new(1.0,0.0,0.0), &Point3::new(-1.0,0.0,0.0), 3.0*tetra.diameter());
    println!("tetra midpoints: {len:.12} in {:?}", t0.elapsed());

    use rand::{Rng, SeedableRng};
    let mut total = std::time::Duration::ZERO;
    let mut n = 0;
    for seed in 0..10u64 {
        let p = testkit::fixtures::random_hull(9, seed);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed+1000);
        for _ in 0..20 {
            let (fa, ba) = testkit::fixtures::random_surface_point(&p, &mut rng);
            let (fb, bb) = testkit::fixtures::random_surface_point(&p, &mut rng);
            let a = p.point_from_bary(fa, ba);
            let b = p.point_from_bary(fb, bb);
            let t0 = Instant::now();
            let len = testkit::brute_shortest_length(&p, &a, &b, 3.0*p.diameter());
            total += t0.elapsed();
            n += 1;
            assert!(len.is_finite() && len > 0.0);
        }
    }
    println!("{n} random-hull queries, total {total:?}");
}
