//! Incremental 3D convex hull.
//!
//! Points are inserted one at a time; strictly visible facets are removed and
//! the horizon is re-fanned from the new point. Points within the visibility
//! epsilon of the hull (interior or on a face) are skipped, so inputs lying on
//! larger planar faces never become spurious vertices.

use std::collections::HashMap;

use crate::error::MeshError;
use crate::polytope::{bbox_diagonal, Polytope};
use crate::{Point3, Vec3};

/// Relative visibility epsilon (scaled by the input bounding-box diagonal).
const EPS_VISIBLE: f64 = 1e-12;

#[derive(Clone, Copy)]
struct Face {
    v: [usize; 3],
    normal: Vec3,
    offset: f64,
    alive: bool,
}

impl Face {
    fn new(points: &[Point3], v: [usize; 3]) -> Face {
        let a = points[v[0]];
        let n = (points[v[1]] - a).cross(&(points[v[2]] - a));
        let len = n.norm();
        let normal = if len > 0.0 { n / len } else { Vec3::zeros() };
        Face {
            v,
            normal,
            offset: normal.dot(&a.coords),
            alive: true,
        }
    }

    fn dist(&self, p: &Point3) -> f64 {
        self.normal.dot(&p.coords) - self.offset
    }
}

/// Boundary of the convex hull of `points`, triangulated and outward-oriented.
///
/// Input points that are inside the hull (or on a face within tolerance) are
/// absent from the output. Fails with `DegenerateInput` when all points are
/// coplanar or collinear.
pub fn convex_hull(points: &[Point3]) -> Result<Polytope, MeshError> {
    for p in points {
        if !(p.x.is_finite() && p.y.is_finite() && p.z.is_finite()) {
            return Err(MeshError::DegenerateInput("non-finite input point".into()));
        }
    }
    let pts = dedupe(points);
    if pts.len() < 4 {
        return Err(MeshError::DegenerateInput(format!(
            "need at least 4 distinct points, got {}",
            pts.len()
        )));
    }
    let scale = bbox_diagonal(&pts).max(f64::MIN_POSITIVE);
    let eps = EPS_VISIBLE * scale;

    let (seed, mut faces) = initial_tetrahedron(&pts, scale)?;
    let mut inserted = vec![false; pts.len()];
    for &s in &seed {
        inserted[s] = true;
    }

    for i in 0..pts.len() {
        if inserted[i] {
            continue;
        }
        insert_point(&pts, &mut faces, i, eps);
        inserted[i] = true;
    }

    finish(&pts, &faces)
}

/// Convex hull of an existing polytope's vertices plus extra points.
/// Used to attach apex vertices to an already-built convex body.
pub fn hull_with_extra(base: &Polytope, extra: &[Point3]) -> Result<Polytope, MeshError> {
    let mut pts: Vec<Point3> = base.vertices().to_vec();
    pts.extend_from_slice(extra);
    convex_hull(&pts)
}

fn dedupe(points: &[Point3]) -> Vec<Point3> {
    let scale = bbox_diagonal(points).max(f64::MIN_POSITIVE);
    let merge = 1e-12 * scale;
    let mut out: Vec<Point3> = Vec::with_capacity(points.len());
    // grid hash at merge resolution; exact duplicates and near-duplicates collapse
    let cell = merge.max(f64::MIN_POSITIVE) * 4.0;
    let mut grid: HashMap<(i64, i64, i64), Vec<usize>> = HashMap::new();
    'outer: for p in points {
        let key = (
            (p.x / cell).floor() as i64,
            (p.y / cell).floor() as i64,
            (p.z / cell).floor() as i64,
        );
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(cands) = grid.get(&(key.0 + dx, key.1 + dy, key.2 + dz)) {
                        for &j in cands {
                            if (out[j] - p).norm() <= merge {
                                continue 'outer;
                            }
                        }
                    }
                }
            }
        }
        grid.entry(key).or_default().push(out.len());
        out.push(*p);
    }
    out
}

fn initial_tetrahedron(pts: &[Point3], scale: f64) -> Result<([usize; 4], Vec<Face>), MeshError> {
    // two extremes along the widest axis
    let mut i0 = 0;
    let mut i1 = 0;
    let mut best = -1.0;
    for axis in 0..3 {
        let lo = (0..pts.len()).min_by(|&a, &b| pts[a][axis].total_cmp(&pts[b][axis])).unwrap();
        let hi = (0..pts.len()).max_by(|&a, &b| pts[a][axis].total_cmp(&pts[b][axis])).unwrap();
        let d = pts[hi][axis] - pts[lo][axis];
        if d > best {
            best = d;
            i0 = lo;
            i1 = hi;
        }
    }
    if best < 1e-12 * scale {
        return Err(MeshError::DegenerateInput("all points coincident".into()));
    }
    // farthest from the line i0-i1
    let dir = (pts[i1] - pts[i0]).normalize();
    let line_dist = |p: &Point3| {
        let w = p - pts[i0];
        (w - dir * w.dot(&dir)).norm()
    };
    let i2 = (0..pts.len()).max_by(|&a, &b| line_dist(&pts[a]).total_cmp(&line_dist(&pts[b]))).unwrap();
    if line_dist(&pts[i2]) < 1e-12 * scale {
        return Err(MeshError::DegenerateInput("all points collinear".into()));
    }
    // farthest from the plane i0-i1-i2
    let n = (pts[i1] - pts[i0]).cross(&(pts[i2] - pts[i0])).normalize();
    let plane_dist = |p: &Point3| n.dot(&(p - pts[i0])).abs();
    let i3 = (0..pts.len()).max_by(|&a, &b| plane_dist(&pts[a]).total_cmp(&plane_dist(&pts[b]))).unwrap();
    if plane_dist(&pts[i3]) < 1e-12 * scale {
        return Err(MeshError::DegenerateInput("all points coplanar".into()));
    }

    let mut faces = vec![
        Face::new(pts, [i0, i1, i2]),
        Face::new(pts, [i0, i2, i3]),
        Face::new(pts, [i0, i3, i1]),
        Face::new(pts, [i1, i3, i2]),
    ];
    // orient outward about the tetra centroid
    let centroid =
        Point3::from((pts[i0].coords + pts[i1].coords + pts[i2].coords + pts[i3].coords) / 4.0);
    for f in &mut faces {
        if f.dist(&centroid) > 0.0 {
            f.v.swap(1, 2);
            *f = Face::new(pts, f.v);
        }
    }
    Ok(([i0, i1, i2, i3], faces))
}

fn insert_point(pts: &[Point3], faces: &mut Vec<Face>, i: usize, eps: f64) {
    let p = pts[i];
    let visible: Vec<usize> = faces
        .iter()
        .enumerate()
        .filter(|(_, f)| f.alive && f.dist(&p) > eps)
        .map(|(k, _)| k)
        .collect();
    if visible.is_empty() {
        return; // inside or on a face
    }
    // horizon = directed edges of visible faces whose reverse edge is not visible
    let mut dir_edges: HashMap<(usize, usize), ()> = HashMap::new();
    for &k in &visible {
        let v = faces[k].v;
        for e in 0..3 {
            dir_edges.insert((v[e], v[(e + 1) % 3]), ());
        }
    }
    let mut horizon: Vec<(usize, usize)> = Vec::new();
    for &k in &visible {
        let v = faces[k].v;
        for e in 0..3 {
            let edge = (v[e], v[(e + 1) % 3]);
            if !dir_edges.contains_key(&(edge.1, edge.0)) {
                horizon.push(edge);
            }
        }
    }
    for &k in &visible {
        faces[k].alive = false;
    }
    for (a, b) in horizon {
        faces.push(Face::new(pts, [a, b, i]));
    }
}

fn finish(pts: &[Point3], faces: &[Face]) -> Result<Polytope, MeshError> {
    let mut remap = vec![usize::MAX; pts.len()];
    let mut verts: Vec<Point3> = Vec::new();
    let mut tris: Vec<[usize; 3]> = Vec::new();
    for f in faces.iter().filter(|f| f.alive) {
        let mut t = [0usize; 3];
        for (slot, &vi) in t.iter_mut().zip(f.v.iter()) {
            if remap[vi] == usize::MAX {
                remap[vi] = verts.len();
                verts.push(pts[vi]);
            }
            *slot = remap[vi];
        }
        tris.push(t);
    }
    Polytope::from_parts(verts, tris)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube_corners() -> Vec<Point3> {
        let mut v = Vec::new();
        for &x in &[-1.0, 1.0] {
            for &y in &[-1.0, 1.0] {
                for &z in &[-1.0, 1.0] {
                    v.push(Point3::new(x, y, z));
                }
            }
        }
        v
    }

    #[test]
    fn cube_hull() {
        let p = convex_hull(&cube_corners()).unwrap();
        assert_eq!(p.num_vertices(), 8);
        assert_eq!(p.num_facets(), 12);
        p.validate().unwrap();
    }

    #[test]
    fn tetra_hull() {
        let pts = vec![
            Point3::new(1.0, 1.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
        ];
        let p = convex_hull(&pts).unwrap();
        assert_eq!(p.num_vertices(), 4);
        assert_eq!(p.num_facets(), 4);
        p.validate().unwrap();
    }

    #[test]
    fn interior_point_eliminated() {
        let mut pts = cube_corners();
        pts.push(Point3::new(0.0, 0.0, 0.0));
        let p = convex_hull(&pts).unwrap();
        assert_eq!(p.num_vertices(), 8);
        assert_eq!(p.num_facets(), 12);
        for v in p.vertices() {
            assert!(v.coords.norm() > 1.0); // the origin is gone
        }
    }

    #[test]
    fn coplanar_rejected() {
        let pts: Vec<Point3> = (0..10)
            .map(|i| Point3::new(i as f64, (i * i) as f64, 0.0))
            .collect();
        match convex_hull(&pts) {
            Err(MeshError::DegenerateInput(_)) => {}
            other => panic!("expected DegenerateInput, got {other:?}"),
        }
    }

    #[test]
    fn collinear_rejected() {
        let pts: Vec<Point3> = (0..6).map(|i| Point3::new(i as f64, 0.0, 0.0)).collect();
        assert!(matches!(convex_hull(&pts), Err(MeshError::DegenerateInput(_))));
    }
}
