//! Turning data of a polygonal surface path: corner directions, turn angles,
//! carrying facet normals and the reflection coefficients of geodesics.

use mesh_core::{Point3, Polytope, Vec3, TOL_COPLANAR};

use geodesic::unfold::local_straightness;
use geodesic::SurfacePath;

use crate::MetricError;

/// Per-corner data of a path `z_0..z_n` with segment directions
/// `x_i = (z_i − z_{i-1})/‖…‖`.
#[derive(Debug, Clone)]
pub struct TurningData {
    /// Path corners including both endpoints, with zero-turn coplanar-edge
    /// crossings removed.
    pub corners: Vec<Point3>,
    /// Unit segment directions `x_1..x_n`.
    pub directions: Vec<Vec3>,
    /// Turn angles `ξ_1..ξ_{n-1}` in `[0, π]`.
    pub turn_angles: Vec<f64>,
    /// Outer unit normal `u_i` of the facet carrying segment `i`.
    pub facet_normals: Vec<Vec3>,
    /// Reflection coefficients `λ_i` with `x_i − x_{i+1} = λ_i (u_i + u_{i+1})`;
    /// populated only when the path is locally straight (a geodesic), `None`
    /// entries where `u_i ≈ −u_{i+1}`.
    pub lambdas: Option<Vec<Option<f64>>>,
    /// Angles `γ_i` between consecutive facet normals.
    pub normal_gaps: Vec<f64>,
}

impl TurningData {
    pub fn xi_sum(&self) -> f64 {
        self.turn_angles.iter().sum()
    }

    pub fn gamma_sum(&self) -> f64 {
        self.normal_gaps.iter().sum()
    }
}

/// Straightness threshold below which a path counts as a geodesic and the
/// reflection relation is expected to hold.
const GEODESIC_STRAIGHTNESS: f64 = 1e-7;

pub fn turning_data(poly: &Polytope, path: &SurfacePath) -> Result<TurningData, MetricError> {
    let pos = path.positions(poly);
    let scale = poly.tol_scale();
    for (i, w) in pos.windows(2).enumerate() {
        if (w[1] - w[0]).norm() < 1e-14 * scale {
            return Err(MetricError::DegenerateSegment(i));
        }
    }

    // Drop interior corners that merely cross a coplanar edge without turning.
    let mut keep: Vec<usize> = vec![0];
    for j in 1..pos.len() - 1 {
        let d1 = (pos[j] - pos[*keep.last().unwrap()]).normalize();
        let d2 = (pos[j + 1] - pos[j]).normalize();
        let turn = angle(&d1, &d2);
        let f_prev = path.points[j - 1].facet;
        let f_next = path.points[j].facet;
        let coplanar_cross = f_prev != f_next
            && angle(&poly.facet_normal(f_prev), &poly.facet_normal(f_next)) < TOL_COPLANAR;
        if coplanar_cross && turn < 1e-9 {
            continue;
        }
        keep.push(j);
    }
    keep.push(pos.len() - 1);

    let corners: Vec<Point3> = keep.iter().map(|&j| pos[j]).collect();
    let seg_facets: Vec<usize> = keep[..keep.len() - 1]
        .iter()
        .map(|&j| path.points[j].facet)
        .collect();

    let mut directions = Vec::with_capacity(corners.len() - 1);
    for w in corners.windows(2) {
        directions.push((w[1] - w[0]).normalize());
    }
    let mut turn_angles = Vec::with_capacity(directions.len().saturating_sub(1));
    for w in directions.windows(2) {
        turn_angles.push(angle(&w[0], &w[1]));
    }
    let facet_normals: Vec<Vec3> = seg_facets.iter().map(|&f| poly.facet_normal(f)).collect();
    let mut normal_gaps = Vec::with_capacity(facet_normals.len().saturating_sub(1));
    for w in facet_normals.windows(2) {
        normal_gaps.push(angle(&w[0], &w[1]));
    }

    // λ only makes sense for locally straight (geodesic) paths
    let lambdas = if local_straightness(poly, path) <= GEODESIC_STRAIGHTNESS {
        let mut ls = Vec::with_capacity(directions.len().saturating_sub(1));
        for i in 0..directions.len().saturating_sub(1) {
            let s = facet_normals[i] + facet_normals[i + 1];
            if s.norm() < 1e-8 {
                ls.push(None);
                continue;
            }
            let diff = directions[i] - directions[i + 1];
            let lambda = diff.dot(&s) / s.norm_squared();
            ls.push(Some(lambda));
        }
        Some(ls)
    } else {
        None
    };

    Ok(TurningData {
        corners,
        directions,
        turn_angles,
        facet_normals,
        lambdas,
        normal_gaps,
    })
}

/// Total curvature `t(P) = Σ ξ_i`.
pub fn total_curvature(td: &TurningData) -> f64 {
    td.xi_sum()
}

/// Total curvature of a closed polygon: sum of exterior angles over all
/// vertices including the wraparound.
pub fn closed_total_curvature(polygon: &[Point3]) -> Result<f64, MetricError> {
    let n = polygon.len();
    if n < 3 {
        return Err(MetricError::DegenerateSegment(0));
    }
    let mut dirs = Vec::with_capacity(n);
    for i in 0..n {
        let d = polygon[(i + 1) % n] - polygon[i];
        if d.norm() == 0.0 {
            return Err(MetricError::DegenerateSegment(i));
        }
        dirs.push(d.normalize());
    }
    let mut total = 0.0;
    for i in 0..n {
        total += angle(&dirs[i], &dirs[(i + 1) % n]);
    }
    Ok(total)
}

pub(crate) fn angle(a: &Vec3, b: &Vec3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}
