//! Audit of the inscribed-radius curvature bound on a normalized polytope.
//!
//! For a polytope `Q` with `rB ⊂ Q ⊂ B` (balls centered at the origin) and a
//! shortest path `P` on its boundary, the audited chain is: `|P| < π`; the
//! path decomposes into pieces by a shadow recursion (each piece leaves the
//! cylinder of radius `r/2` around the ray through its anchor before the next
//! anchor is set); every facet met strictly inside a shadow satisfies
//! `u·v/‖v‖ > r/2`; each piece turns less than `π/(r/2)`; there are fewer than
//! `2π/r + 1` pieces; and the whole path turns less than `4π²/r²`.

use mesh_core::{Point3, Polytope, Vec3};
use serde::{Deserialize, Serialize};

use geodesic::SurfacePath;

use crate::minnorm::{lemma1_for_normals, Lemma1Certificate};
use crate::turning::{total_curvature, turning_data};
use crate::MetricError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShadowSegment {
    /// Arc-length range of this piece along the path.
    pub start_arc: f64,
    pub end_arc: f64,
    /// The anchor point whose ray defines the shadow.
    pub anchor: [f64; 3],
    /// Chord length to the next anchor.
    pub hop: f64,
    /// Minimum `u·v̂` over facets met strictly inside the shadow (∞ when the
    /// piece stays within one facet crossing no interior).
    pub eta_measured: f64,
    /// Turning summed over corners strictly inside the piece.
    pub xi_sum: f64,
    /// Best-direction certificate for this piece's facet normals.
    pub lemma1: Lemma1Certificate,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Theorem2Flags {
    pub length_below_pi: bool,
    pub curvature_below_bound: bool,
    /// `k < 2π/r + 1`.
    pub segment_count_ok: bool,
    /// Every facet met strictly inside a shadow has `u·v̂ > r/2 − 1e-8`.
    pub shadow_claim_ok: bool,
    /// Every piece satisfies `Σξ < π/(r/2)`.
    pub per_segment_curvature_ok: bool,
    pub all_ok: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Theorem2Report {
    /// Origin-centered inscribed radius (min facet-plane distance).
    pub r: f64,
    /// Circumscribed radius (max vertex norm).
    pub big_r: f64,
    pub path_length: f64,
    pub total_curvature: f64,
    /// `4π²/r²`.
    pub bound: f64,
    pub k: usize,
    pub segments: Vec<ShadowSegment>,
    pub flags: Theorem2Flags,
}

const CLAIM_SLACK: f64 = 1e-8;

pub fn theorem2_audit(poly: &Polytope, path: &SurfacePath) -> Result<Theorem2Report, MetricError> {
    let big_r = poly
        .vertices()
        .iter()
        .map(|v| v.coords.norm())
        .fold(0.0, f64::max);
    if big_r > 1.0 + 1e-9 {
        return Err(MetricError::NotNormalized(format!(
            "circumscribed radius {big_r} exceeds 1"
        )));
    }
    let r = (0..poly.num_facets())
        .map(|f| poly.facet_offset(f))
        .fold(f64::INFINITY, f64::min);
    if r <= 0.0 {
        return Err(MetricError::NotNormalized(
            "origin is not interior to the polytope".into(),
        ));
    }

    let pts = path.positions(poly);
    let cum = cumulative_arc(&pts);
    let path_length = *cum.last().unwrap();

    let td = turning_data(poly, path)?;
    let t_total = total_curvature(&td);
    // arc positions of the kept corners, for per-piece turning sums
    let corner_arcs: Vec<f64> = td
        .corners
        .iter()
        .map(|c| arc_of_point(&pts, &cum, c))
        .collect();

    let pieces = shadow_decomposition(&pts, &cum, r);
    let mut segments = Vec::with_capacity(pieces.len());
    let mut shadow_claim_ok = true;
    let mut per_segment_curvature_ok = true;
    for piece in &pieces {
        let v_hat = piece.anchor.coords.normalize();
        // facets met strictly inside the shadow: carrying facets of polyline
        // portions inside the open cylinder
        let mut normals: Vec<Vec3> = Vec::new();
        let mut eta_measured = f64::INFINITY;
        for (seg_idx, facet) in
            facets_inside(poly, path, &pts, &cum, piece.start_arc, piece.end_arc, &piece.anchor, r)
        {
            let _ = seg_idx;
            let u = poly.facet_normal(facet);
            if !normals.iter().any(|n| (n - u).norm() < 1e-15) {
                normals.push(u);
            }
            let m = u.dot(&v_hat);
            eta_measured = eta_measured.min(m);
            if m <= r / 2.0 - CLAIM_SLACK {
                shadow_claim_ok = false;
            }
        }
        let xi_sum: f64 = td
            .turn_angles
            .iter()
            .zip(corner_arcs.iter().skip(1))
            .filter(|(_, &arc)| arc > piece.start_arc + 1e-12 && arc < piece.end_arc - 1e-12)
            .map(|(xi, _)| *xi)
            .sum();
        if xi_sum >= std::f64::consts::PI / (r / 2.0) {
            per_segment_curvature_ok = false;
        }
        let lemma1 = if normals.is_empty() {
            lemma1_for_normals(&[v_hat])
        } else {
            lemma1_for_normals(&normals)
        };
        segments.push(ShadowSegment {
            start_arc: piece.start_arc,
            end_arc: piece.end_arc,
            anchor: [piece.anchor.x, piece.anchor.y, piece.anchor.z],
            hop: piece.hop,
            eta_measured,
            xi_sum,
            lemma1,
        });
    }

    let k = segments.len();
    let bound = 4.0 * std::f64::consts::PI.powi(2) / (r * r);
    let flags = Theorem2Flags {
        length_below_pi: path_length < std::f64::consts::PI,
        curvature_below_bound: t_total < bound,
        segment_count_ok: (k as f64) < 2.0 * std::f64::consts::PI / r + 1.0,
        shadow_claim_ok,
        per_segment_curvature_ok,
        all_ok: false,
    };
    let flags = Theorem2Flags {
        all_ok: flags.length_below_pi
            && flags.curvature_below_bound
            && flags.segment_count_ok
            && flags.shadow_claim_ok
            && flags.per_segment_curvature_ok,
        ..flags
    };

    Ok(Theorem2Report {
        r,
        big_r,
        path_length,
        total_curvature: t_total,
        bound,
        k,
        segments,
        flags,
    })
}

struct Piece {
    start_arc: f64,
    end_arc: f64,
    anchor: Point3,
    hop: f64,
}

/// Distance from a point to the ray from the origin through `dir` (unit).
fn ray_distance(p: &Point3, dir: &Vec3) -> f64 {
    let t = p.coords.dot(dir);
    if t <= 0.0 {
        p.coords.norm()
    } else {
        (p.coords - dir * t).norm()
    }
}

/// Anchor recursion: each piece runs until the path first leaves the open
/// shadow cylinder of radius r/2 around its anchor's ray.
fn shadow_decomposition(pts: &[Point3], cum: &[f64], r: f64) -> Vec<Piece> {
    let total = *cum.last().unwrap();
    let mut pieces = Vec::new();
    let mut anchor = pts[0];
    let mut start_arc = 0.0;
    let mut guard = 0;
    loop {
        guard += 1;
        if guard > 10_000 {
            break;
        }
        let dir = anchor.coords.normalize();
        let exit = first_exit(pts, cum, start_arc, &dir, r / 2.0);
        match exit {
            Some((arc, point)) => {
                pieces.push(Piece {
                    start_arc,
                    end_arc: arc,
                    anchor,
                    hop: (point - anchor).norm(),
                });
                anchor = point;
                start_arc = arc;
                if arc >= total - 1e-15 {
                    break;
                }
            }
            None => {
                pieces.push(Piece {
                    start_arc,
                    end_arc: total,
                    anchor,
                    hop: (pts[pts.len() - 1] - anchor).norm(),
                });
                break;
            }
        }
    }
    pieces
}

/// First arc position after `from_arc` where the ray-distance reaches `radius`.
fn first_exit(pts: &[Point3], cum: &[f64], from_arc: f64, dir: &Vec3, radius: f64) -> Option<(f64, Point3)> {
    let step = radius / 20.0;
    for i in 0..pts.len() - 1 {
        let (s0, s1) = (cum[i], cum[i + 1]);
        if s1 <= from_arc {
            continue;
        }
        let lo = s0.max(from_arc);
        let len = s1 - lo;
        let samples = ((len / step).ceil() as usize).clamp(1, 400);
        let mut prev_arc = lo;
        let mut prev_f = ray_distance(&interp(pts, cum, i, prev_arc), dir) - radius;
        for k in 1..=samples {
            let arc = lo + len * k as f64 / samples as f64;
            let f = ray_distance(&interp(pts, cum, i, arc), dir) - radius;
            if prev_f < 0.0 && f >= 0.0 {
                // bisect the crossing
                let (mut a, mut b) = (prev_arc, arc);
                for _ in 0..60 {
                    let m = 0.5 * (a + b);
                    if ray_distance(&interp(pts, cum, i, m), dir) - radius >= 0.0 {
                        b = m;
                    } else {
                        a = m;
                    }
                }
                let arc = 0.5 * (a + b);
                return Some((arc, interp(pts, cum, i, arc)));
            }
            prev_arc = arc;
            prev_f = f;
        }
    }
    None
}

fn interp(pts: &[Point3], cum: &[f64], seg: usize, arc: f64) -> Point3 {
    let (s0, s1) = (cum[seg], cum[seg + 1]);
    if s1 <= s0 {
        return pts[seg];
    }
    let t = ((arc - s0) / (s1 - s0)).clamp(0.0, 1.0);
    pts[seg] + (pts[seg + 1] - pts[seg]) * t
}

fn cumulative_arc(pts: &[Point3]) -> Vec<f64> {
    let mut cum = Vec::with_capacity(pts.len());
    let mut acc = 0.0;
    cum.push(0.0);
    for w in pts.windows(2) {
        acc += (w[1] - w[0]).norm();
        cum.push(acc);
    }
    cum
}

fn arc_of_point(pts: &[Point3], cum: &[f64], q: &Point3) -> f64 {
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..pts.len() - 1 {
        let ab = pts[i + 1] - pts[i];
        let len2 = ab.norm_squared();
        let t = if len2 == 0.0 {
            0.0
        } else {
            ((q - pts[i]).dot(&ab) / len2).clamp(0.0, 1.0)
        };
        let d = (q - (pts[i] + ab * t)).norm();
        if d < best.0 {
            best = (d, cum[i] + (cum[i + 1] - cum[i]) * t);
        }
    }
    best.1
}

/// Carrying facets of the polyline portions strictly inside the open shadow.
#[allow(clippy::too_many_arguments)]
fn facets_inside(
    _poly: &Polytope,
    path: &SurfacePath,
    pts: &[Point3],
    cum: &[f64],
    start_arc: f64,
    end_arc: f64,
    anchor: &Point3,
    r: f64,
) -> Vec<(usize, usize)> {
    let dir = anchor.coords.normalize();
    let radius = r / 2.0 - 1e-12;
    let mut out = Vec::new();
    for i in 0..pts.len() - 1 {
        let (s0, s1) = (cum[i], cum[i + 1]);
        if s1 <= start_arc || s0 >= end_arc {
            continue;
        }
        let lo = s0.max(start_arc);
        let hi = s1.min(end_arc);
        // probe interior points of the in-range portion
        let mut inside = false;
        for k in 1..8 {
            let arc = lo + (hi - lo) * k as f64 / 8.0;
            if ray_distance(&interp(pts, cum, i, arc), &dir) < radius {
                inside = true;
                break;
            }
        }
        if inside {
            out.push((i, path.segment_facet(i)));
        }
    }
    out
}
