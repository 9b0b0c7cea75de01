//! Spiralling triangle towers.
//!
//! The body is the convex hull of a family of equilateral triangles with
//! pairwise parallel edges, each the image of the previous one under a
//! homothety of ratio `q > 3` centered at a point `z` just behind the apex of
//! a containing regular pyramid. Offsetting `z` toward one edge makes the
//! image of that edge the intrinsically closest one to a fixed point `x0` on
//! the tip, so shortest paths from `x0` to each new triangle wind around the
//! tower, gaining about a third of a turn per level.
//!
//! Every level is accepted only after geodesic verification: the new closest
//! edge is strictly closest, sampled shortest paths to it cross the previous
//! marker edge, and the measured slack inequalities hold; otherwise the level
//! retries with `z` pushed farther out and `q` grown, which flattens the
//! descent angles.

use geodesic::{GeodesicSolver, SurfacePoint};
use mesh_core::{convex_hull, EdgeId, Point3, Polytope, Vec3};
use serde::{Deserialize, Serialize};

use crate::ConstructionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TurnPattern {
    /// Same turning sense at every level.
    Uniform,
    /// Alternate the jitter side each level, flipping the spiral sense.
    Alternating,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpiralTowerParams {
    /// Number of constructed triangles beyond the base.
    pub n_triangles: usize,
    /// Homothety ratio, must exceed 3.
    pub q: f64,
    /// Relative extra height of `z` beyond the minimal containing-pyramid apex.
    pub apex_offset: f64,
    /// Lateral offset of `z` toward the favored edge, as a fraction of the
    /// current triangle side.
    pub axis_jitter: f64,
    pub base_side: f64,
    pub seed: u64,
    pub turns: TurnPattern,
}

impl Default for SpiralTowerParams {
    fn default() -> Self {
        SpiralTowerParams {
            n_triangles: 4,
            q: 4.0,
            apex_offset: 1.0,
            axis_jitter: 0.3,
            base_side: 1.0,
            seed: 0,
            turns: TurnPattern::Uniform,
        }
    }
}

/// A marker edge (one level's `bc`) that verified shortest paths must cross.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MarkerEdge {
    pub v0: [f64; 3],
    pub v1: [f64; 3],
    /// Edge id in the final mesh.
    pub edge: EdgeId,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LevelReport {
    pub level: usize,
    /// Slack ε before this level: min over the two non-closest edges of
    /// `δ(x0, e) − δ(x0, closest)`.
    pub eps: f64,
    pub delta_closest: f64,
    pub delta_second: f64,
    pub delta_third: f64,
    /// `δ(pivot, far new edge) − δ(pivot, close new edge)`, must exceed ε.
    pub gap: f64,
    /// Unfolded corner shortcut `δ(c, s)`, must stay below ε/2.
    pub corner_shortcut: f64,
    /// `δ(s, a′) − δ(a, a′)`, must stay below ε/2.
    pub descent_slack: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub q_used: f64,
    pub apex_offset_used: f64,
    pub retries: usize,
}

#[derive(Debug)]
pub struct SpiralTower {
    pub polytope: Polytope,
    pub x0: SurfacePoint,
    /// The last level's closest edge (paths from `x0` to it realize the spiral).
    pub top_edge: EdgeId,
    /// Level markers in construction order.
    pub markers: Vec<MarkerEdge>,
    pub levels: Vec<LevelReport>,
}

const MAX_RETRIES: usize = 16;

/// What went wrong in a level attempt, so the retry can move the right knob.
enum LevelFailure {
    /// a'b' did not come out intrinsically closest: strengthen the jitter
    /// (and the homothety) so the image shift wins.
    ClosestEdge(String),
    /// pivot gap below ε: grow the homothety ratio.
    PivotGap(String),
    /// unfolded corner quantities too large: push z farther out.
    Shortcut(String),
    /// angle ordering broke: z is too close (or the jitter too wild).
    Angles(String),
    /// a sampled path dodged the marker edge: flatten the descent (z out)
    /// and stretch the homothety.
    Crossing(String),
    /// mesh/geodesic trouble (often from extreme coordinates): back off.
    Build(String),
}

impl LevelFailure {
    fn message(&self) -> &str {
        match self {
            LevelFailure::ClosestEdge(m)
            | LevelFailure::PivotGap(m)
            | LevelFailure::Shortcut(m)
            | LevelFailure::Angles(m)
            | LevelFailure::Crossing(m)
            | LevelFailure::Build(m) => m,
        }
    }
}

pub fn spiral_tower(params: &SpiralTowerParams) -> Result<SpiralTower, ConstructionError> {
    if params.n_triangles == 0 {
        return Err(ConstructionError::InvalidParams("n_triangles must be ≥ 1".into()));
    }
    if params.q <= 3.0 {
        return Err(ConstructionError::InvalidParams(format!(
            "homothety ratio must exceed 3, got {}",
            params.q
        )));
    }
    if params.base_side <= 0.0 || params.apex_offset <= 0.0 || params.axis_jitter < 0.0 {
        return Err(ConstructionError::InvalidParams(
            "base_side and apex_offset must be positive, axis_jitter nonnegative".into(),
        ));
    }

    // base triangle in the z = 0 plane, centroid at the origin, tower grows -z
    let r0 = params.base_side / 3f64.sqrt();
    let ang = |deg: f64| deg.to_radians();
    let a0 = Point3::new(r0 * ang(150.0).cos(), r0 * ang(150.0).sin(), 0.0);
    let b0 = Point3::new(r0 * ang(30.0).cos(), r0 * ang(30.0).sin(), 0.0);
    let c0 = Point3::new(0.0, -r0, 0.0);
    let centroid0 = Point3::new(0.0, 0.0, 0.0);
    let x0_pos = centroid0 + (midpoint(&b0, &c0) - centroid0) * 0.5;

    let mut verts: Vec<Point3> = vec![a0, b0, c0];
    let mut tri = [a0, b0, c0]; // (a, b, c) with bc the closest edge to x0
    let mut up = Vec3::z();

    // planar slack on the bare triangle
    let mut eps = {
        let d_bc = dist_point_segment(&x0_pos, &tri[1], &tri[2]);
        let d_ab = dist_point_segment(&x0_pos, &tri[0], &tri[1]);
        let d_ca = dist_point_segment(&x0_pos, &tri[2], &tri[0]);
        d_ab.min(d_ca) - d_bc
    };

    let mut markers_pos: Vec<(Point3, Point3)> = Vec::new();
    let mut levels: Vec<LevelReport> = Vec::new();
    let mut poly: Option<Polytope> = None;
    let mut top_edge_pos: Option<(Point3, Point3)> = None;

    // adapted knobs persist across levels: the slack inequalities only get
    // easier once the working (q, offset, jitter) window is found
    let mut q = params.q;
    let mut off = params.apex_offset;
    let mut jitter = params.axis_jitter;

    for level in 0..params.n_triangles {
        let left_turn = match params.turns {
            TurnPattern::Uniform => true,
            TurnPattern::Alternating => level % 2 == 0,
        };
        // paper frame (A, B, C): BC is the current closest edge, the jitter
        // favors AB whose image becomes the next closest edge
        let (va, vb, vc) = if left_turn {
            (tri[0], tri[1], tri[2])
        } else {
            (tri[0], tri[2], tri[1])
        };

        let mut accepted = false;
        let mut last_err = String::new();
        for retry in 0..MAX_RETRIES {
            match try_level(
                &verts, &x0_pos, &markers_pos, va, vb, vc, up, q, off, jitter, eps, level,
            ) {
                Ok(outcome) => {
                    let mut report = outcome.report;
                    report.retries = retry;
                    report.q_used = q;
                    report.apex_offset_used = off;
                    levels.push(report);
                    markers_pos.push((vb, vc));
                    verts = outcome.verts;
                    poly = Some(outcome.poly);
                    eps = outcome.next_eps;
                    // relabel: next (a, b, c) = (C', A', B') keeps BC the closest edge
                    tri = [outcome.c_new, outcome.a_new, outcome.b_new];
                    up = outcome.next_up;
                    top_edge_pos = Some((outcome.a_new, outcome.b_new));
                    accepted = true;
                    break;
                }
                Err(failure) => {
                    if std::env::var("TOWER_DEBUG").is_ok() {
                        eprintln!("level {level} retry {retry}: {}", failure.message());
                    }
                    last_err = failure.message().to_string();
                    match failure {
                        LevelFailure::ClosestEdge(_) => {
                            jitter = (jitter * 1.5).min(0.45);
                            q = (q * 1.2).min(12.0);
                        }
                        LevelFailure::PivotGap(_) => q = (q * 1.3).min(12.0),
                        LevelFailure::Crossing(_) => {
                            off = (off * 1.8).min(400.0);
                            q = (q * 1.3).min(12.0);
                        }
                        LevelFailure::Shortcut(_) => off = (off * 1.8).min(200.0),
                        LevelFailure::Angles(_) => {
                            off = (off * 1.5).min(200.0);
                            jitter = (jitter * 0.8).max(0.02);
                        }
                        LevelFailure::Build(_) => off = (off * 0.5).max(0.05),
                    }
                }
            }
        }
        if !accepted {
            return Err(ConstructionError::ConditionUnsatisfiable(format!(
                "level {level}: {last_err} (after {MAX_RETRIES} retries)"
            )));
        }
    }

    let poly = poly.expect("at least one level built");
    let x0 = SurfacePoint::locate(&poly, &x0_pos)?;
    let (ta, tb) = top_edge_pos.expect("top edge recorded");
    let top_edge = find_edge(&poly, &ta, &tb)
        .ok_or_else(|| ConstructionError::GenerationFailure("top edge missing from final hull".into()))?;
    let markers = markers_pos
        .iter()
        .map(|(p, q)| {
            find_edge(&poly, p, q)
                .map(|edge| MarkerEdge {
                    v0: [p.x, p.y, p.z],
                    v1: [q.x, q.y, q.z],
                    edge,
                })
                .ok_or_else(|| ConstructionError::GenerationFailure("marker edge missing from final hull".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(SpiralTower {
        polytope: poly,
        x0,
        top_edge,
        markers,
        levels,
    })
}

struct LevelOutcome {
    verts: Vec<Point3>,
    poly: Polytope,
    a_new: Point3,
    b_new: Point3,
    c_new: Point3,
    next_eps: f64,
    next_up: Vec3,
    report: LevelReport,
}

#[allow(clippy::too_many_arguments)]
fn try_level(
    verts: &[Point3],
    x0_pos: &Point3,
    markers_pos: &[(Point3, Point3)],
    va: Point3,
    vb: Point3,
    vc: Point3,
    up: Vec3,
    q: f64,
    off: f64,
    jitter: f64,
    eps: f64,
    level: usize,
) -> Result<LevelOutcome, LevelFailure> {
    let centroid = Point3::from((va.coords + vb.coords + vc.coords) / 3.0);
    let side = (vb - va).norm();

    // minimal containing-pyramid apex height over the current triangle
    let mut h_star = side; // level 0: nothing above yet, any apex works
    for p in verts {
        let y = (p - centroid).dot(&up);
        if y <= 1e-12 * side {
            continue;
        }
        let radial = (p - centroid) - up * y;
        let g = triangle_gauge(&va, &vb, &vc, &centroid, &radial);
        if g >= 0.999 {
            return Err(LevelFailure::Build(format!(
                "vertex outside the pyramid base shadow (gauge {g:.3})"
            )));
        }
        h_star = h_star.max(y / (1.0 - g) * 1.0001);
    }

    let jit_dir = (midpoint(&va, &vb) - centroid).normalize();
    let z = centroid + up * (h_star * (1.0 + off)) + jit_dir * (jitter * side);

    // ‖z−a‖ = ‖z−b‖ < ‖z−c‖
    let da = (z - va).norm();
    let db = (z - vb).norm();
    let dc = (z - vc).norm();
    if (da - db).abs() > 1e-9 * side || da >= dc {
        return Err(LevelFailure::Angles("jitter failed to favor edge ab".into()));
    }

    let a_new = z + (va - z) * q;
    let b_new = z + (vb - z) * q;
    let c_new = z + (vc - z) * q;

    // descent angles at the pivot vertex b: π/2 < γ < α
    let alpha = angle3(&(va - vb), &(b_new - vb));
    let gamma = angle3(&(vc - vb), &(b_new - vb));
    if !(std::f64::consts::FRAC_PI_2 < gamma && gamma < alpha) {
        return Err(LevelFailure::Angles(format!(
            "angle ordering violated: γ={gamma:.4}, α={alpha:.4}"
        )));
    }

    let mut verts2 = verts.to_vec();
    verts2.extend_from_slice(&[a_new, b_new, c_new]);
    let poly = convex_hull(&verts2).map_err(|e| LevelFailure::Build(e.to_string()))?;
    poly.validate().map_err(|e| LevelFailure::Build(e.to_string()))?;
    // every triangle corner must survive as a hull vertex
    for p in &verts2 {
        if find_vertex(&poly, p).is_none() {
            return Err(LevelFailure::Build("a triangle corner was swallowed by the hull".into()));
        }
    }

    let e_ab = find_edge(&poly, &a_new, &b_new).ok_or(LevelFailure::Build("new edge a'b' missing".into()))?;
    let e_bc = find_edge(&poly, &b_new, &c_new).ok_or(LevelFailure::Build("new edge b'c' missing".into()))?;
    let e_ca = find_edge(&poly, &c_new, &a_new).ok_or(LevelFailure::Build("new edge c'a' missing".into()))?;

    let x0 = SurfacePoint::locate(&poly, x0_pos).map_err(|e| LevelFailure::Build(e.to_string()))?;
    // the enumeration certifier explodes on needle-like towers; the band
    // homotopy here is simple enough for seeded straightening
    let solver = GeodesicSolver::with_options(
        &poly,
        geodesic::GeoOptions {
            steiner_per_edge: 16,
            exhaustive_facet_limit: 0,
            ..Default::default()
        },
    );

    let geo_err = |e: geodesic::GeoError| LevelFailure::Build(e.to_string());
    let (d_close, _, _) = solver.distance_to_edge_set(&x0, &[e_ab]).map_err(geo_err)?;
    let (d_second, _, _) = solver.distance_to_edge_set(&x0, &[e_bc]).map_err(geo_err)?;
    let (d_third, _, _) = solver.distance_to_edge_set(&x0, &[e_ca]).map_err(geo_err)?;
    if !(d_close < d_second && d_close < d_third) {
        return Err(LevelFailure::ClosestEdge(format!(
            "closest-edge condition failed: δ={d_close:.4} vs {d_second:.4}, {d_third:.4}"
        )));
    }

    // slack inequalities at the pivot vertex b
    let b_vertex =
        SurfacePoint::locate(&poly, &vb).map_err(|e| LevelFailure::Build(e.to_string()))?;
    let (d_b_far, _, _) = solver.distance_to_edge_set(&b_vertex, &[e_bc]).map_err(geo_err)?;
    let (d_b_close, _, _) = solver.distance_to_edge_set(&b_vertex, &[e_ab]).map_err(geo_err)?;
    let gap = d_b_far - d_b_close;
    if gap <= eps {
        return Err(LevelFailure::PivotGap(format!(
            "pivot gap {gap:.5} does not exceed ε = {eps:.5}"
        )));
    }

    // unfolded corner shortcut δ(c, s) and descent slack δ(s,a') − δ(a,a')
    let (corner_shortcut, descent_slack) =
        band_unfold_checks(&poly, &va, &vb, &vc, &a_new, &b_new).map_err(LevelFailure::Shortcut)?;
    if corner_shortcut >= eps / 2.0 {
        return Err(LevelFailure::Shortcut(format!(
            "corner shortcut {corner_shortcut:.5} ≥ ε/2 = {:.5}",
            eps / 2.0
        )));
    }
    if descent_slack >= eps / 2.0 {
        return Err(LevelFailure::Shortcut(format!(
            "descent slack {descent_slack:.5} ≥ ε/2 = {:.5}",
            eps / 2.0
        )));
    }

    // sampled shortest paths to the new closest edge must cross the previous
    // marker (bc of the current triangle), and all earlier markers in order
    let marker_tol = 1e-7 * side;
    for &t in &[0.1, 0.3, 0.5, 0.7, 0.9] {
        let w = SurfacePoint::locate(&poly, &lerp(&a_new, &b_new, t)).map_err(|e| LevelFailure::Build(e.to_string()))?;
        let geo = solver.shortest_path(&x0, &w).map_err(geo_err)?;
        let miss = polyline_segment_distance(&geo.path.positions(&poly), &vb, &vc);
        if miss > marker_tol {
            return Err(LevelFailure::Crossing(format!(
                "path to w(t={t}) misses the marker edge bc by {miss:.6} (len {:.4}, {} crossings)",
                geo.path.length,
                geo.path.crossed_edges.len()
            )));
        }
        let mut last_arc = -1.0;
        for (p0, p1) in markers_pos.iter() {
            let arc = polyline_crossing_arc(&geo.path.positions(&poly), p0, p1);
            match arc {
                Some(s) if s > last_arc - 1e-9 => last_arc = s,
                _ => return Err(LevelFailure::Crossing("path does not cross earlier markers in order".into())),
            }
        }
    }

    let next_eps = d_second.min(d_third) - d_close;
    // the new triangle's plane normal, oriented back toward the old surface
    let n = (b_new - a_new).cross(&(c_new - a_new)).normalize();
    let next_up = if n.dot(&(centroid - midpoint3(&a_new, &b_new, &c_new))) > 0.0 {
        n
    } else {
        -n
    };

    Ok(LevelOutcome {
        verts: verts2,
        poly,
        a_new,
        b_new,
        c_new,
        next_eps,
        next_up,
        report: LevelReport {
            level,
            eps,
            delta_closest: d_close,
            delta_second: d_second,
            delta_third: d_third,
            gap,
            corner_shortcut,
            descent_slack,
            alpha,
            gamma,
            q_used: q,
            apex_offset_used: off,
            retries: 0,
        },
    })
}

/// Closed-form band unfolding about the pivot vertex b: developing the two
/// trapezoids flat, the old apex c lands at surface angle α+γ from the ray
/// b→a, just past the line through a and b. Returns the paper-style
/// quantities (δ(c,s), δ(s,a′) − δ(a,a′)) where s is c's projection on that
/// line.
fn band_unfold_checks(
    poly: &Polytope,
    va: &Point3,
    vb: &Point3,
    vc: &Point3,
    a_new: &Point3,
    b_new: &Point3,
) -> Result<(f64, f64), String> {
    let _ = poly;
    // 2D frame of the planar trapezoid (a, b, b', a'): a at origin, b on +x
    let origin = *va;
    let ux = (vb - va).normalize();
    let mut uy = (a_new - va) - ux * (a_new - va).dot(&ux);
    if uy.norm() < 1e-12 {
        return Err("degenerate band trapezoid".into());
    }
    uy = uy.normalize();
    let to2 = |p: &Point3| nalgebra::Point2::new((p - origin).dot(&ux), (p - origin).dot(&uy));
    let a2 = to2(va);
    let b2 = to2(vb);
    let a_new2 = to2(a_new);

    // total surface angle at b from ray b→a around through the trapezoids
    let alpha = angle3(&(va - vb), &(b_new - vb));
    let gamma = angle3(&(vc - vb), &(b_new - vb));
    let psi = alpha + gamma;
    let d_bc = (vc - vb).norm();
    // rotate the unit ray b→a by ψ toward the trapezoid side (+y)
    let dir_ba = (a2 - b2).normalize();
    let rotated = nalgebra::Vector2::new(
        dir_ba.x * psi.cos() - dir_ba.y * psi.sin(),
        dir_ba.x * psi.sin() + dir_ba.y * psi.cos(),
    );
    let c_img = b2 + rotated * d_bc;
    let s2 = nalgebra::Point2::new(c_img.x, 0.0);
    let corner_shortcut = c_img.y.abs();
    let descent_slack = (s2 - a_new2).norm() - (a2.coords - a_new2.coords).norm();
    Ok((corner_shortcut, descent_slack))
}

/// Minkowski gauge of an in-plane radial vector with respect to the triangle
/// centered at its centroid: < 1 inside, 1 on the boundary.
fn triangle_gauge(va: &Point3, vb: &Point3, vc: &Point3, centroid: &Point3, radial: &Vec3) -> f64 {
    let plane_n = (vb - va).cross(&(vc - va)).normalize();
    let mut g: f64 = 0.0;
    for (p, r) in [(va, vb), (vb, vc), (vc, va)] {
        let mut n = (r - p).cross(&plane_n); // in-plane edge normal
        let mut denom = n.dot(&(p - centroid));
        if denom < 0.0 {
            n = -n;
            denom = -denom;
        }
        if denom < 1e-300 {
            continue;
        }
        g = g.max(n.dot(radial) / denom);
    }
    g
}

fn angle3(u: &Vec3, v: &Vec3) -> f64 {
    u.cross(v).norm().atan2(u.dot(v))
}

fn midpoint(a: &Point3, b: &Point3) -> Point3 {
    nalgebra::center(a, b)
}

fn midpoint3(a: &Point3, b: &Point3, c: &Point3) -> Point3 {
    Point3::from((a.coords + b.coords + c.coords) / 3.0)
}

fn lerp(a: &Point3, b: &Point3, t: f64) -> Point3 {
    a + (b - a) * t
}

fn dist_point_segment(p: &Point3, a: &Point3, b: &Point3) -> f64 {
    let ab = b - a;
    let t = ((p - a).dot(&ab) / ab.norm_squared()).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
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

/// Minimum distance between a polyline and a segment.
fn polyline_segment_distance(pts: &[Point3], a: &Point3, b: &Point3) -> f64 {
    let mut best = f64::INFINITY;
    for w in pts.windows(2) {
        best = best.min(segment_segment_distance(&w[0], &w[1], a, b));
    }
    best
}

/// Arc-length position where the polyline comes within tolerance of segment
/// `(a, b)`, if it does.
pub(crate) fn polyline_crossing_arc(pts: &[Point3], a: &Point3, b: &Point3) -> Option<f64> {
    let scale = (b - a).norm().max(1.0);
    let mut acc = 0.0;
    for w in pts.windows(2) {
        let d = segment_segment_distance(&w[0], &w[1], a, b);
        let len = (w[1] - w[0]).norm();
        if d <= 1e-7 * scale {
            return Some(acc + len * 0.5);
        }
        acc += len;
    }
    None
}

fn segment_segment_distance(p1: &Point3, p2: &Point3, q1: &Point3, q2: &Point3) -> f64 {
    // standard clamped closest-point computation
    let d1 = p2 - p1;
    let d2 = q2 - q1;
    let r = p1 - q1;
    let a = d1.norm_squared();
    let e = d2.norm_squared();
    let f = d2.dot(&r);
    let (s, t);
    if a <= 1e-300 && e <= 1e-300 {
        return (p1 - q1).norm();
    }
    if a <= 1e-300 {
        s = 0.0;
        t = (f / e).clamp(0.0, 1.0);
    } else {
        let c = d1.dot(&r);
        if e <= 1e-300 {
            t = 0.0;
            s = (-c / a).clamp(0.0, 1.0);
        } else {
            let b = d1.dot(&d2);
            let denom = a * e - b * b;
            let mut s_ = if denom.abs() > 1e-300 {
                ((b * f - c * e) / denom).clamp(0.0, 1.0)
            } else {
                0.0
            };
            let mut t_ = (b * s_ + f) / e;
            if t_ < 0.0 {
                t_ = 0.0;
                s_ = (-c / a).clamp(0.0, 1.0);
            } else if t_ > 1.0 {
                t_ = 1.0;
                s_ = ((b - c) / a).clamp(0.0, 1.0);
            }
            s = s_;
            t = t_;
        }
    }
    ((p1 + d1 * s) - (q1 + d2 * t)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_level_tower_builds_and_verifies() {
        let tower = spiral_tower(&SpiralTowerParams {
            n_triangles: 1,
            ..Default::default()
        })
        .unwrap();
        assert_eq!(tower.markers.len(), 1);
        assert_eq!(tower.levels.len(), 1);
        tower.polytope.validate().unwrap();
        // 6 corners of two triangles
        assert_eq!(tower.polytope.num_vertices(), 6);
    }

    #[test]
    fn q_at_most_three_rejected() {
        let err = spiral_tower(&SpiralTowerParams {
            q: 3.0,
            ..Default::default()
        });
        assert!(matches!(err, Err(ConstructionError::InvalidParams(_))));
    }

    #[test]
    fn three_level_tower_keeps_angle_ordering() {
        let tower = spiral_tower(&SpiralTowerParams {
            n_triangles: 3,
            ..Default::default()
        })
        .unwrap();
        for lvl in &tower.levels {
            assert!(lvl.gamma > std::f64::consts::FRAC_PI_2);
            assert!(lvl.alpha > lvl.gamma);
        }
    }
}
