//! Certificate for curvature bounds from facet normals: the unit vector `v`
//! maximizing `min_i u_i·v` is the direction of the minimum-norm point of
//! `conv{u_i}`, found by a small support-set iteration (Wolfe/GJK style).

use mesh_core::Vec3;
use serde::{Deserialize, Serialize};

use crate::turning::TurningData;

/// Witness for the normal-cap curvature bound: if `eta > 0` the total turning
/// of the path is below `π/eta`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Lemma1Certificate {
    pub v: [f64; 3],
    pub eta: f64,
    /// `π/eta` when `eta > 0`, infinite otherwise (vacuous certificate).
    pub bound: f64,
}

pub fn lemma1_certificate(td: &TurningData) -> Lemma1Certificate {
    lemma1_for_normals(&td.facet_normals)
}

pub fn lemma1_for_normals(normals: &[Vec3]) -> Lemma1Certificate {
    assert!(!normals.is_empty(), "certificate needs at least one normal");
    let p = min_norm_point(normals);
    let v = if p.norm() > 1e-12 {
        p.normalize()
    } else {
        // 0 lies in the hull: no positive-margin direction exists; report the
        // average direction so eta ≤ 0 is measured against something concrete
        let sum: Vec3 = normals.iter().sum();
        if sum.norm() > 1e-12 {
            sum.normalize()
        } else {
            Vec3::z()
        }
    };
    let eta = normals.iter().map(|u| u.dot(&v)).fold(f64::INFINITY, f64::min);
    let bound = if eta > 0.0 { std::f64::consts::PI / eta } else { f64::INFINITY };
    Lemma1Certificate {
        v: [v.x, v.y, v.z],
        eta,
        bound,
    }
}

/// Point of minimum norm in the convex hull of `points`.
pub fn min_norm_point(points: &[Vec3]) -> Vec3 {
    assert!(!points.is_empty());
    let start = points
        .iter()
        .copied()
        .min_by(|a, b| a.norm_squared().total_cmp(&b.norm_squared()))
        .unwrap();
    let mut support: Vec<Vec3> = vec![start];
    let mut p = start;
    for _ in 0..200 {
        let (q, reduced) = simplex_min_norm(&support);
        p = q;
        support = reduced;
        if p.norm_squared() < 1e-28 {
            return Vec3::zeros();
        }
        // support point most opposed to p
        let (best_val, best) = points
            .iter()
            .map(|u| (u.dot(&p), *u))
            .min_by(|a, b| a.0.total_cmp(&b.0))
            .unwrap();
        if best_val >= p.norm_squared() - 1e-14 * p.norm_squared().max(1e-30) - 1e-30 {
            return p; // no improving direction
        }
        if support.iter().any(|s| (s - best).norm_squared() < 1e-28) {
            return p; // numerically stalled
        }
        support.push(best);
        if support.len() > 4 {
            support.remove(0);
        }
    }
    p
}

/// Minimum-norm point of a simplex with ≤ 4 vertices, with the minimal
/// face that supports it. Enumerates faces and solves the equality-constrained
/// least squares on each.
fn simplex_min_norm(verts: &[Vec3]) -> (Vec3, Vec<Vec3>) {
    let n = verts.len();
    let mut best: Option<(f64, Vec3, Vec<Vec3>)> = None;
    for mask in 1u32..(1 << n) {
        let subset: Vec<Vec3> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| verts[i]).collect();
        if let Some((point, lambda)) = affine_min_norm(&subset) {
            if lambda.iter().all(|&l| l >= -1e-12) {
                let score = point.norm_squared();
                if best.as_ref().map_or(true, |(s, _, _)| score < *s - 1e-18) {
                    let kept: Vec<Vec3> = subset
                        .iter()
                        .zip(lambda.iter())
                        .filter(|(_, &l)| l > 1e-12)
                        .map(|(v, _)| *v)
                        .collect();
                    let kept = if kept.is_empty() { subset.clone() } else { kept };
                    best = Some((score, point, kept));
                }
            }
        }
    }
    match best {
        Some((_, p, kept)) => (p, kept),
        None => (verts[0], vec![verts[0]]),
    }
}

/// Minimum-norm point of the affine hull of `verts` with its barycentric
/// coordinates; `None` when the normal system is singular.
fn affine_min_norm(verts: &[Vec3]) -> Option<(Vec3, Vec<f64>)> {
    let m = verts.len();
    if m == 1 {
        return Some((verts[0], vec![1.0]));
    }
    // KKT system for min |Σ λ_i v_i|², Σ λ = 1
    let dim = m + 1;
    let mut a = vec![vec![0.0; dim]; dim];
    let mut rhs = vec![0.0; dim];
    for i in 0..m {
        for j in 0..m {
            a[i][j] = 2.0 * verts[i].dot(&verts[j]);
        }
        a[i][m] = 1.0;
        a[m][i] = 1.0;
    }
    rhs[m] = 1.0;
    let sol = solve_dense(&mut a, &mut rhs)?;
    let lambda = sol[..m].to_vec();
    let mut p = Vec3::zeros();
    for (l, v) in lambda.iter().zip(verts) {
        p += v * *l;
    }
    Some((p, lambda))
}

fn solve_dense(a: &mut [Vec<f64>], b: &mut [f64]) -> Option<Vec<f64>> {
    let n = b.len();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))?;
        if a[piv][k].abs() < 1e-14 {
            return None;
        }
        a.swap(k, piv);
        b.swap(k, piv);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = b[k];
        for j in k + 1..n {
            s -= a[k][j] * x[j];
        }
        x[k] = s / a[k][k];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_normal() {
        let cert = lemma1_for_normals(&[Vec3::z()]);
        assert!((cert.eta - 1.0).abs() < 1e-12);
        assert!((cert.bound - std::f64::consts::PI).abs() < 1e-12);
        assert!((Vec3::new(cert.v[0], cert.v[1], cert.v[2]) - Vec3::z()).norm() < 1e-9);
    }

    #[test]
    fn two_orthogonal_normals_bisector() {
        let cert = lemma1_for_normals(&[Vec3::z(), Vec3::x()]);
        let expect = Vec3::new(1.0, 0.0, 1.0).normalize();
        let v = Vec3::new(cert.v[0], cert.v[1], cert.v[2]);
        assert!((v - expect).norm() < 1e-9, "v = {v:?}");
        assert!((cert.eta - 0.707_106_78).abs() < 1e-7);
        assert!((cert.bound - std::f64::consts::PI * 2f64.sqrt()).abs() < 1e-7);
    }

    #[test]
    fn opposite_normals_vacuous() {
        let cert = lemma1_for_normals(&[Vec3::z(), -Vec3::z()]);
        assert!(cert.eta <= 1e-9);
        assert!(cert.bound.is_infinite());
    }

    #[test]
    fn min_norm_point_inside_hull_is_zero() {
        let pts = vec![
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(-1.0, 0.5, 0.0),
            Vec3::new(-1.0, -0.5, 0.5),
            Vec3::new(0.0, 0.0, -1.0),
        ];
        let p = min_norm_point(&pts);
        assert!(p.norm() < 1e-10, "p = {p:?}");
    }

    #[test]
    fn min_norm_matches_brute_force_sampling() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let pts: Vec<Vec3> = (0..6)
                .map(|_| {
                    Vec3::new(
                        rng.gen_range(0.2..1.0),
                        rng.gen_range(-1.0..1.0),
                        rng.gen_range(-1.0..1.0),
                    )
                })
                .collect();
            let p = min_norm_point(&pts);
            // brute force: random convex combinations never beat it
            for _ in 0..2000 {
                let mut w: Vec<f64> = (0..pts.len()).map(|_| rng.gen_range(0.0..1.0)).collect();
                let s: f64 = w.iter().sum();
                for x in &mut w {
                    *x /= s;
                }
                let q: Vec3 = pts.iter().zip(&w).map(|(v, &l)| v * l).sum();
                assert!(q.norm_squared() >= p.norm_squared() - 1e-9);
            }
        }
    }
}
