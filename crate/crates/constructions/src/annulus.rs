//! Random polytopes squeezed between concentric balls: all vertices on the
//! unit sphere, every facet plane at distance at least `r` from the origin.

use mesh_core::{convex_hull, Point3, Polytope, Vec3, TOL_BALL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ConstructionError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnnulusParams {
    /// Target inscribed radius, in (0, 1).
    pub r: f64,
    /// Number of sphere samples (the result may gain a few augmentation
    /// points when facets start too shallow).
    pub n_points: usize,
    pub seed: u64,
    /// Points placed before random sampling (e.g. exact cube corners); they
    /// count toward `n_points`.
    #[serde(default)]
    pub forced_points: Vec<[f64; 3]>,
}

impl Default for AnnulusParams {
    fn default() -> Self {
        AnnulusParams {
            r: 0.5,
            n_points: 40,
            seed: 0,
            forced_points: Vec::new(),
        }
    }
}

const MAX_RETRIES: usize = 100;

/// Hull of sphere points with every facet plane at distance ≥ `r` from the
/// origin, so `rB ⊂ Q ⊂ B` holds with both balls centered there.
pub fn annulus_polytope(params: &AnnulusParams) -> Result<Polytope, ConstructionError> {
    if !(params.r > 0.0 && params.r < 1.0) {
        return Err(ConstructionError::InvalidParams(format!(
            "r must be in (0,1), got {}",
            params.r
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut pts: Vec<Point3> = params
        .forced_points
        .iter()
        .map(|c| Point3::new(c[0], c[1], c[2]))
        .collect();
    for p in &pts {
        if (p.coords.norm() - 1.0).abs() > 1e-9 {
            return Err(ConstructionError::InvalidParams(
                "forced points must lie on the unit sphere".into(),
            ));
        }
    }
    while pts.len() < params.n_points {
        pts.push(Point3::from(random_unit(&mut rng)));
    }

    for _ in 0..MAX_RETRIES {
        let hull = convex_hull(&pts)?;
        // deepest-cutting facets first
        let mut shallow: Vec<(f64, usize)> = (0..hull.num_facets())
            .map(|f| (hull.facet_offset(f), f))
            .filter(|&(d, _)| d < params.r - TOL_BALL)
            .collect();
        if shallow.is_empty() {
            return Ok(hull);
        }
        shallow.sort_by(|a, b| a.0.total_cmp(&b.0));
        for &(_, f) in shallow.iter().take(8) {
            // a sphere point along the facet normal splits the shallow facet
            pts.push(Point3::from(hull.facet_normal(f)));
        }
    }
    Err(ConstructionError::GenerationFailure(format!(
        "facet depth ≥ {} not reached after {MAX_RETRIES} augmentation rounds",
        params.r
    )))
}

fn random_unit(rng: &mut impl Rng) -> Vec3 {
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

#[cfg(test)]
mod tests {
    use super::*;
    use mesh_core::inscribed_ball;

    #[test]
    fn forced_cube_corners_give_scaled_cube() {
        let s = 1.0 / 3f64.sqrt();
        let mut forced = Vec::new();
        for &x in &[-s, s] {
            for &y in &[-s, s] {
                for &z in &[-s, s] {
                    forced.push([x, y, z]);
                }
            }
        }
        let p = annulus_polytope(&AnnulusParams {
            r: s - 1e-12,
            n_points: 8,
            seed: 1,
            forced_points: forced,
        })
        .unwrap();
        assert_eq!(p.num_vertices(), 8);
        assert_eq!(p.num_facets(), 12);
        let (_, r) = inscribed_ball(&p).unwrap();
        assert!((r - s).abs() < 1e-9);
    }

    #[test]
    fn deep_annulus_reaches_target() {
        let p = annulus_polytope(&AnnulusParams {
            r: 0.9,
            n_points: 200,
            seed: 7,
            forced_points: Vec::new(),
        })
        .unwrap();
        let (_, r) = inscribed_ball(&p).unwrap();
        assert!(r >= 0.9 - 1e-6, "r = {r}");
        for v in p.vertices() {
            assert!((v.coords.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn needle_ish_small_sample_still_contained() {
        let p = annulus_polytope(&AnnulusParams {
            r: 0.2,
            n_points: 6,
            seed: 3,
            forced_points: Vec::new(),
        })
        .unwrap();
        let (_, r) = inscribed_ball(&p).unwrap();
        assert!(r >= 0.2 - 1e-6);
        for f in 0..p.num_facets() {
            assert!(p.facet_offset(f) >= 0.2 - 1e-9);
        }
    }
}
