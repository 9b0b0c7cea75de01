//! The slanted-slab chain: a thin convex body whose shortest path between two
//! marked points turns by nearly π, then past π once three cones perturb it
//! off its plane, and past 2π after doubling across the cut plane.
//!
//! Construction stages (all polyhedral approximations of smooth bodies):
//!
//! 1. base slab: the convex hull of two parabolas `x₂ = x₁²` in the planes
//!    `x₃ = ±ε` and a positively curved ribbon obtained by sliding a
//!    quarter-circle of radius √2·ε along a slightly bulged convex curve;
//! 2. slant: the lower planar region is tilted by α about the line through
//!    the lower parabola vertex (`y_alpha`);
//! 3. cones: three apices just outside the curved ribbon, alternating sides
//!    of its central arc, force the shortest path to wiggle (`attach_cones`);
//! 4. doubling: the body is cut at `x₂ = g` and fused with its mirror image
//!    (`build_delta`), doubling the path and its total curvature.

use geodesic::{GeodesicSolver, SurfacePath, SurfacePoint};
use mesh_core::{convex_hull, EdgeId, FacetId, Point3, Polytope, Vec3};
use path_metrics::{total_curvature, turning_data};
use serde::{Deserialize, Serialize};

use crate::ConstructionError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaParams {
    /// Half-thickness of the slab; must stay below √2/(8π) so the ribbon is
    /// shorter than the focal gap 1/8.
    pub eps: f64,
    /// Slant angle in [0, π/4); 0 reproduces the unslanted slab.
    pub alpha: f64,
    /// Requested max |x₁| of parabola sampling; must cover the cut corners.
    pub parabola_extent: f64,
    /// Samples per parabola (the ribbon grid scales with it).
    pub n_samples: usize,
    /// Sagitta of the convex slide curve; 0 degenerates the ribbon to a
    /// cylinder.
    pub lprime_bulge: f64,
    /// Cone stations as arc parameters in (0,1) along the central ribbon arc,
    /// equally spaced.
    pub cone_targets: [f64; 3],
    /// Apex height above the ribbon surface.
    pub cone_pullback: f64,
    /// Lateral apex offset along x₁, alternating sides per cone.
    pub cone_side_offset: f64,
    /// Cut coordinate: the body is clipped (and later mirrored) at x₂ = g.
    pub g: f64,
}

impl Default for DeltaParams {
    fn default() -> Self {
        DeltaParams {
            eps: 0.05,
            alpha: 0.12,
            parabola_extent: 10.0,
            n_samples: 160,
            lprime_bulge: 0.004,
            cone_targets: [0.35, 0.5, 0.65],
            cone_pullback: 0.012,
            cone_side_offset: 0.01,
            g: 60.0,
        }
    }
}

pub const EPS_UPPER: f64 = 0.056_269_769_339_963_1; // √2/(8π)

#[derive(Debug)]
pub struct YAlpha {
    pub polytope: Polytope,
    /// The top cut edge (the image of the line G in the top plane).
    pub g_edge: EdgeId,
    pub b1_prime: SurfacePoint,
    pub v1: Point3,
    pub v2: Point3,
    /// Midpoint of the central ribbon arc.
    pub v3: Point3,
    pub params: DeltaParams,
}

#[derive(Debug)]
pub struct YTilde {
    pub polytope: Polytope,
    pub g_edge: EdgeId,
    pub b1_prime: SurfacePoint,
    pub apices: [Point3; 3],
    pub cone_facets: [Vec<FacetId>; 3],
    pub v1: Point3,
    pub v2: Point3,
    pub v3: Point3,
}

#[derive(Debug)]
pub struct DeltaPolytope {
    pub polytope: Polytope,
    pub b1_prime: SurfacePoint,
    pub b1_doubleprime: SurfacePoint,
    pub seam_x2: f64,
}

fn validate_params(p: &DeltaParams) -> Result<(), ConstructionError> {
    if !(p.eps > 0.0 && p.eps < EPS_UPPER) {
        return Err(ConstructionError::InvalidParams(format!(
            "eps must lie in (0, {EPS_UPPER:.6}), got {}",
            p.eps
        )));
    }
    if !(0.0..std::f64::consts::FRAC_PI_4).contains(&p.alpha) {
        return Err(ConstructionError::InvalidParams(format!(
            "alpha must lie in [0, π/4), got {}",
            p.alpha
        )));
    }
    if p.g <= 1.0 {
        return Err(ConstructionError::InvalidParams("g must exceed 1".into()));
    }
    let needed = (p.g / p.alpha.cos()).sqrt();
    if p.parabola_extent < needed {
        return Err(ConstructionError::InvalidParams(format!(
            "parabola_extent {} does not reach the cut corners (need ≥ {needed:.3})",
            p.parabola_extent
        )));
    }
    if p.n_samples < 16 {
        return Err(ConstructionError::InvalidParams("n_samples must be ≥ 16".into()));
    }
    if p.lprime_bulge < 0.0 || p.lprime_bulge >= 0.25 {
        return Err(ConstructionError::InvalidParams("lprime_bulge must lie in [0, 0.25)".into()));
    }
    let [t1, t2, t3] = p.cone_targets;
    if !(0.0 < t1 && t1 < t2 && t2 < t3 && t3 < 1.0) {
        return Err(ConstructionError::InvalidParams("cone targets must be increasing in (0,1)".into()));
    }
    if ((t2 - t1) - (t3 - t2)).abs() > 1e-9 {
        return Err(ConstructionError::InvalidParams("cone stations must be equally spaced".into()));
    }
    Ok(())
}

/// Sagitta-parameterized slide curve: circular arc through (0,0) and (±1/2, s).
fn bulge_at(s: f64, u: f64) -> f64 {
    if s <= 0.0 {
        return 0.0;
    }
    let k = (0.25 + s * s) / (2.0 * s);
    k - (k * k - u * u).max(0.0).sqrt()
}

/// Grid on [-half, half] with cubic clustering at 0 (n odd, endpoints exact).
fn centered_grid(n: usize, half: f64) -> Vec<f64> {
    let n = if n % 2 == 0 { n + 1 } else { n };
    (0..n)
        .map(|k| {
            let xi = 2.0 * k as f64 / (n - 1) as f64 - 1.0;
            half * xi * xi * xi
        })
        .collect()
}

/// Grid on [a, b] clustered at both endpoints via a smooth-step (n odd).
fn end_clustered_grid(n: usize, a: f64, b: f64) -> Vec<f64> {
    let n = if n % 2 == 0 { n + 1 } else { n };
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (0..n)
        .map(|k| {
            let xi = 2.0 * k as f64 / (n - 1) as f64 - 1.0;
            mid + half * xi * (3.0 - xi * xi) / 2.0
        })
        .collect()
}

fn omega(alpha: f64, x1: f64, x2: f64, eps: f64) -> Point3 {
    Point3::new(x1, x2 * alpha.cos(), -eps - x2 * alpha.sin())
}

/// Central ribbon arc at station `t ∈ [0,1]` (t=0 at the top vertex, t=1 at
/// the bottom vertex) and its outward normal.
pub fn ribbon_arc_point(eps: f64, t: f64) -> (Point3, Vec3) {
    let theta = 0.75 * std::f64::consts::PI + t * std::f64::consts::FRAC_PI_2;
    let p = Point3::new(
        0.0,
        eps + 2f64.sqrt() * eps * theta.cos(),
        2f64.sqrt() * eps * theta.sin(),
    );
    (p, Vec3::new(0.0, theta.cos(), theta.sin()))
}

pub fn build_y_alpha(params: &DeltaParams) -> Result<YAlpha, ConstructionError> {
    validate_params(params)?;
    let eps = params.eps;
    let alpha = params.alpha;
    let g = params.g;
    let s2 = 2f64.sqrt();

    let mut pts: Vec<Point3> = Vec::new();

    // top parabola A₂ up to the cut corners
    for x1 in centered_grid(params.n_samples, g.sqrt()) {
        pts.push(Point3::new(x1, x1 * x1, eps));
    }
    // slanted image of the bottom parabola A₁ (reaches output x₂ = g)
    for x1 in centered_grid(params.n_samples, (g / alpha.cos()).sqrt()) {
        pts.push(omega(alpha, x1, x1 * x1, eps));
    }
    // ribbon grid: quarter-circle slid along the bulged curve
    let m_arc = (params.n_samples / 4).clamp(25, 201);
    let m_slide = (params.n_samples / 8).clamp(17, 101);
    let thetas = end_clustered_grid(m_arc, 0.75 * std::f64::consts::PI, 1.25 * std::f64::consts::PI);
    let slides = centered_grid(m_slide, 0.5);
    for &u in &slides {
        let lam = bulge_at(params.lprime_bulge, u);
        for &th in &thetas {
            pts.push(Point3::new(u, lam + eps + s2 * eps * th.cos(), s2 * eps * th.sin()));
        }
        // slanted image of the ribbon's bottom rim (part of the lower region)
        pts.push(omega(alpha, u, lam, eps));
    }

    let poly = convex_hull(&pts)?;
    poly.validate()?;

    let top_left = Point3::new(-g.sqrt(), g, eps);
    let top_right = Point3::new(g.sqrt(), g, eps);
    let g_edge = find_edge(&poly, &top_left, &top_right).ok_or_else(|| {
        ConstructionError::GenerationFailure("top cut edge not present in the hull".into())
    })?;
    let b1_pos = omega(alpha, 0.0, 0.125, eps);
    let b1_prime = SurfacePoint::locate(&poly, &b1_pos)
        .map_err(|e| ConstructionError::GenerationFailure(format!("b1' not on surface: {e}")))?;

    let (v3, _) = ribbon_arc_point(eps, 0.5);
    Ok(YAlpha {
        polytope: poly,
        g_edge,
        b1_prime,
        v1: Point3::new(0.0, 0.0, -eps),
        v2: Point3::new(0.0, 0.0, eps),
        v3,
        params: params.clone(),
    })
}

pub fn attach_cones(y: &YAlpha, params: &DeltaParams) -> Result<YTilde, ConstructionError> {
    let eps = params.eps;
    let sides = [1.0, -1.0, 1.0];
    let mut apices = [Point3::origin(); 3];
    for (i, (&t, &side)) in params.cone_targets.iter().zip(sides.iter()).enumerate() {
        let (p, n) = ribbon_arc_point(eps, t);
        apices[i] = p + Vec3::x() * (side * params.cone_side_offset) + n * params.cone_pullback;
        // apex must be strictly outside for a cone to exist
        let outside = (0..y.polytope.num_facets()).any(|f| {
            y.polytope.facet_normal(f).dot(&apices[i].coords) - y.polytope.facet_offset(f)
                > 1e-12 * y.polytope.tol_scale()
        });
        if !outside {
            return Err(ConstructionError::InvalidParams(format!(
                "cone apex {i} lies inside the body (pullback too small)"
            )));
        }
    }

    let mut pts: Vec<Point3> = y.polytope.vertices().to_vec();
    pts.extend_from_slice(&apices);
    let poly = convex_hull(&pts)?;
    poly.validate()?;

    let mut cone_facets: [Vec<FacetId>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut cone_base_vertices: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for i in 0..3 {
        let w = find_vertex(&poly, &apices[i]).ok_or_else(|| {
            ConstructionError::ConeTouchesFace(format!("cone apex {i} vanished from the hull"))
        })?;
        for &(_, f) in poly.vertex_fan(w) {
            cone_facets[i].push(f);
            for &v in &poly.facets()[f] {
                if v != w && !cone_base_vertices[i].contains(&v) {
                    cone_base_vertices[i].push(v);
                }
            }
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if cone_base_vertices[i].iter().any(|v| cone_base_vertices[j].contains(v)) {
                return Err(ConstructionError::ConeOverlap(format!("cones {i} and {j} share base vertices")));
            }
        }
    }
    // cones must stay on the ribbon: no base vertex on the top plane or the
    // slanted bottom plane
    let scale = poly.tol_scale();
    for (i, base) in cone_base_vertices.iter().enumerate() {
        for &v in base {
            let p = poly.vertex(v);
            let on_top = (p.z - eps).abs() <= 1e-9 * scale;
            let on_bottom = (p.z + eps + p.y * params.alpha.tan()).abs() <= 1e-9 * scale;
            if on_top || on_bottom {
                return Err(ConstructionError::ConeTouchesFace(format!(
                    "cone {i} reaches a planar region at vertex {v}"
                )));
            }
        }
    }

    let top_left = Point3::new(-params.g.sqrt(), params.g, eps);
    let top_right = Point3::new(params.g.sqrt(), params.g, eps);
    let g_edge = find_edge(&poly, &top_left, &top_right)
        .ok_or_else(|| ConstructionError::GenerationFailure("top cut edge lost after cones".into()))?;
    let b1_pos = y.b1_prime.position(&y.polytope);
    let b1_prime = SurfacePoint::locate(&poly, &b1_pos)
        .map_err(|e| ConstructionError::GenerationFailure(format!("b1' lost after cones: {e}")))?;

    Ok(YTilde {
        polytope: poly,
        g_edge,
        b1_prime,
        apices,
        cone_facets,
        v1: y.v1,
        v2: y.v2,
        v3: y.v3,
    })
}

/// Mirrors the body across `x₂ = g` and fuses along the cut face.
pub fn build_delta(polytope: &Polytope, b1_prime: &SurfacePoint, g: f64) -> Result<DeltaPolytope, ConstructionError> {
    let scale = polytope.tol_scale();
    let on_seam = |p: &Point3| (p.y - g).abs() <= 1e-9 * scale;

    let mut verts: Vec<Point3> = polytope.vertices().to_vec();
    let mut mirror_map: Vec<usize> = vec![usize::MAX; verts.len()];
    for v in 0..polytope.num_vertices() {
        let p = polytope.vertex(v);
        if on_seam(&p) {
            mirror_map[v] = v;
        } else {
            mirror_map[v] = verts.len();
            verts.push(Point3::new(p.x, 2.0 * g - p.y, p.z));
        }
    }

    let mut facets: Vec<[usize; 3]> = Vec::new();
    for f in polytope.facets() {
        let all_seam = f.iter().all(|&v| on_seam(&polytope.vertex(v)));
        if all_seam {
            continue; // interior wall after gluing
        }
        facets.push(*f);
        // mirrored copy with reversed orientation
        facets.push([mirror_map[f[0]], mirror_map[f[2]], mirror_map[f[1]]]);
    }

    let poly = Polytope::from_parts(verts, facets).map_err(|e| {
        ConstructionError::NotConvexAfterGlue(format!("glued surface rejected: {e}"))
    })?;
    poly.validate()
        .map_err(|e| ConstructionError::NotConvexAfterGlue(e.to_string()))?;

    let b1_pos = b1_prime.position(polytope);
    let b1_prime_new = SurfacePoint::locate(&poly, &b1_pos)
        .map_err(|e| ConstructionError::GenerationFailure(format!("b1' lost after glue: {e}")))?;
    let b1_dd_pos = Point3::new(b1_pos.x, 2.0 * g - b1_pos.y, b1_pos.z);
    let b1_doubleprime = SurfacePoint::locate(&poly, &b1_dd_pos)
        .map_err(|e| ConstructionError::GenerationFailure(format!("b1'' not on surface: {e}")))?;

    Ok(DeltaPolytope {
        polytope: poly,
        b1_prime: b1_prime_new,
        b1_doubleprime,
        seam_x2: g,
    })
}

/// Full evaluation record for one parameter set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaEvaluation {
    pub t_tilde: f64,
    /// Path curvature with cones attached (absent when cone placement failed).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    /// Doubled-path curvature 2·t(K) predicted by mirror symmetry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_bar_symmetric: Option<f64>,
    /// Directly measured t(K̄) on the glued body.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_bar_direct: Option<f64>,
    pub crosses_all_cones: bool,
    pub passes_2pi: bool,
    /// Min distances from the pre-cone path to the three vertex markers.
    pub near_v1: f64,
    pub near_v2: f64,
    pub near_v3: f64,
}

/// Shortest path from the top cut edge to `b1'` and its total curvature.
pub fn measure_slab_path(
    poly: &Polytope,
    g_edge: EdgeId,
    b1_prime: &SurfacePoint,
) -> Result<(SurfacePath, f64), ConstructionError> {
    let solver = GeodesicSolver::new(poly);
    let (_, _, path) = solver.distance_to_edge_set(b1_prime, &[g_edge])?;
    let td = turning_data(poly, &path)?;
    Ok((path, total_curvature(&td)))
}

/// Builds the chain for one parameter set and measures every stage.
/// `with_delta` additionally builds the glued body and re-measures there.
pub fn evaluate_delta(params: &DeltaParams, with_delta: bool) -> Result<DeltaEvaluation, ConstructionError> {
    let y = build_y_alpha(params)?;
    let (path_y, t_tilde) = measure_slab_path(&y.polytope, y.g_edge, &y.b1_prime)?;
    let pos_y = path_y.positions(&y.polytope);
    let near_v1 = min_dist(&pos_y, &y.v1);
    let near_v2 = min_dist(&pos_y, &y.v2);
    let near_v3 = min_dist(&pos_y, &y.v3);

    let mut t_k = None;
    let mut beta = None;
    let mut t_bar_symmetric = None;
    let mut t_bar_direct = None;
    let mut crosses_all_cones = false;
    let mut passes_2pi = false;

    if let Ok(yt) = attach_cones(&y, params) {
        let (path_k, tk) = measure_slab_path(&yt.polytope, yt.g_edge, &yt.b1_prime)?;
        let visited: Vec<FacetId> = path_k.points.iter().map(|sp| sp.facet).collect();
        crosses_all_cones = yt
            .cone_facets
            .iter()
            .all(|facets| visited.iter().any(|f| facets.contains(f)));
        t_k = Some(tk);
        beta = Some(tk - (std::f64::consts::PI - params.alpha));
        t_bar_symmetric = Some(2.0 * tk);

        if with_delta {
            let delta = build_delta(&yt.polytope, &yt.b1_prime, params.g)?;
            let solver = GeodesicSolver::new(&delta.polytope);
            let geo = solver.shortest_path(&delta.b1_prime, &delta.b1_doubleprime)?;
            let td = turning_data(&delta.polytope, &geo.path)?;
            let tbar = total_curvature(&td);
            t_bar_direct = Some(tbar);
            passes_2pi = tbar > std::f64::consts::TAU + 1e-3;
        }
    }

    Ok(DeltaEvaluation {
        t_tilde,
        t_k,
        beta,
        t_bar_symmetric,
        t_bar_direct,
        crosses_all_cones,
        passes_2pi,
        near_v1,
        near_v2,
        near_v3,
    })
}

/// Monotonicity probe: lengths of the constrained paths `G → e → b1'` for
/// `e = (e₁, e₁², ε)` on the top parabola, sampled over `0 < e₁ < 1/2`.
pub fn evaluate_monotonicity(y: &YAlpha, n: usize) -> Result<Vec<(f64, f64)>, ConstructionError> {
    let solver = GeodesicSolver::new(&y.polytope);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let e1 = 0.025 + 0.45 * k as f64 / (n - 1) as f64;
        let e_pos = Point3::new(e1, e1 * e1, y.params.eps);
        let e = SurfacePoint::locate(&y.polytope, &e_pos)
            .map_err(|er| ConstructionError::GenerationFailure(format!("probe point off surface: {er}")))?;
        let leg_top = y.params.g - e1 * e1;
        let leg_down = solver.one_sided_distance(&y.b1_prime, &e)?;
        out.push((e1, leg_top + leg_down));
    }
    Ok(out)
}

fn min_dist(pts: &[Point3], q: &Point3) -> f64 {
    let mut best = f64::INFINITY;
    for w in pts.windows(2) {
        let ab = w[1] - w[0];
        let t = ((q - w[0]).dot(&ab) / ab.norm_squared()).clamp(0.0, 1.0);
        best = best.min((q - (w[0] + ab * t)).norm());
    }
    best
}

fn find_vertex(poly: &Polytope, p: &Point3) -> Option<usize> {
    let tol = 1e-9 * poly.tol_scale();
    (0..poly.num_vertices()).find(|&v| (poly.vertex(v) - p).norm() <= tol)
}

fn find_edge(poly: &Polytope, p: &Point3, q: &Point3) -> Option<EdgeId> {
    let u = find_vertex(poly, p)?;
    let v = find_vertex(poly, q)?;
    poly.edge_between(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_params() -> DeltaParams {
        DeltaParams {
            n_samples: 48,
            g: 20.0,
            parabola_extent: 5.0,
            alpha: 0.12,
            ..Default::default()
        }
    }

    #[test]
    fn bulge_curve_hits_sagitta() {
        let s = 0.01;
        assert!((bulge_at(s, 0.0)).abs() < 1e-15);
        assert!((bulge_at(s, 0.5) - s).abs() < 1e-12);
        assert!(bulge_at(s, 0.25) > 0.0 && bulge_at(s, 0.25) < s);
    }

    #[test]
    fn y_alpha_builds_and_is_convex() {
        let y = build_y_alpha(&quick_params()).unwrap();
        y.polytope.validate().unwrap();
        // marker vertices exist on the surface
        assert!(find_vertex(&y.polytope, &y.v1).is_some());
        assert!(find_vertex(&y.polytope, &y.v2).is_some());
    }

    #[test]
    fn invalid_eps_rejected() {
        let p = DeltaParams {
            eps: 0.06,
            ..quick_params()
        };
        assert!(matches!(build_y_alpha(&p), Err(ConstructionError::InvalidParams(_))));
    }

    #[test]
    fn extent_must_reach_cut() {
        let p = DeltaParams {
            parabola_extent: 2.0,
            g: 20.0,
            ..quick_params()
        };
        assert!(matches!(build_y_alpha(&p), Err(ConstructionError::InvalidParams(_))));
    }
}
