//! The convex polytope surface mesh and its structural invariants.

use std::collections::HashMap;

use crate::error::MeshError;
use crate::{Point3, Vec3, TOL_CONVEX, TOL_COPLANAR};

pub type VertexId = usize;
pub type FacetId = usize;
pub type EdgeId = usize;

/// Undirected mesh edge with its two incident facets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    /// Endpoint vertex ids, sorted `vertices[0] < vertices[1]`.
    pub vertices: [VertexId; 2],
    /// The two incident facets (every edge of a closed surface has exactly two).
    pub facets: [FacetId; 2],
}

/// A closed, convex, outward-oriented triangulated surface in R³.
///
/// Immutable after construction; all derived connectivity (edges, per-facet
/// edge slots, cyclic vertex fans) is built once in [`Polytope::from_parts`].
#[derive(Debug, Clone)]
pub struct Polytope {
    vertices: Vec<Point3>,
    facets: Vec<[VertexId; 3]>,
    facet_normals: Vec<Vec3>,
    facet_offsets: Vec<f64>,
    edges: Vec<Edge>,
    edge_lookup: HashMap<(VertexId, VertexId), EdgeId>,
    /// `facet_edges[f][k]` is the edge between facet vertices `k` and `(k+1)%3`.
    facet_edges: Vec<[EdgeId; 3]>,
    /// `vertex_fans[v]` lists `(edge, facet)` cyclically: `fan[i].0` is shared
    /// by `fan[i-1].1` and `fan[i].1`, and `fan[i].1` contains `fan[i].0` and
    /// `fan[i+1].0` (indices mod fan length).
    vertex_fans: Vec<Vec<(EdgeId, FacetId)>>,
    diameter: f64,
}

impl Polytope {
    /// Builds the mesh from raw vertices and triangles, fixing global
    /// orientation to outward and deriving all connectivity.
    ///
    /// Fails if the surface is not closed and edge-manifold, or if a facet is
    /// degenerate. Convexity is *not* enforced here; call [`Polytope::validate`].
    pub fn from_parts(vertices: Vec<Point3>, mut facets: Vec<[VertexId; 3]>) -> Result<Self, MeshError> {
        if vertices.len() < 4 || facets.len() < 4 {
            return Err(MeshError::InvalidMesh(format!(
                "need at least 4 vertices and 4 facets, got {} and {}",
                vertices.len(),
                facets.len()
            )));
        }
        for p in &vertices {
            if !(p.x.is_finite() && p.y.is_finite() && p.z.is_finite()) {
                return Err(MeshError::InvalidMesh("non-finite vertex coordinate".into()));
            }
        }
        for f in &facets {
            if f.iter().any(|&v| v >= vertices.len()) {
                return Err(MeshError::InvalidMesh("facet vertex index out of range".into()));
            }
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(MeshError::InvalidMesh("facet with repeated vertex".into()));
            }
        }

        // Orient outward: the signed volume of the cone over the origin is
        // positive for outward-oriented closed surfaces.
        let volume6: f64 = facets
            .iter()
            .map(|f| {
                let a = vertices[f[0]].coords;
                let b = vertices[f[1]].coords;
                let c = vertices[f[2]].coords;
                a.dot(&b.cross(&c))
            })
            .sum();
        let diameter = bbox_diagonal(&vertices);
        if volume6.abs() < 1e-18 * diameter.powi(3).max(1.0) {
            return Err(MeshError::InvalidMesh("zero enclosed volume".into()));
        }
        if volume6 < 0.0 {
            for f in &mut facets {
                f.swap(1, 2);
            }
        }

        let mut facet_normals = Vec::with_capacity(facets.len());
        let mut facet_offsets = Vec::with_capacity(facets.len());
        for f in &facets {
            let a = vertices[f[0]];
            let n = (vertices[f[1]] - a).cross(&(vertices[f[2]] - a));
            let len = n.norm();
            if len < 1e-14 * diameter.max(1.0).powi(2) {
                return Err(MeshError::InvalidMesh("degenerate (zero-area) facet".into()));
            }
            let n = n / len;
            facet_normals.push(n);
            facet_offsets.push(n.dot(&a.coords));
        }

        // Edge table; every undirected edge must be used exactly once in each direction.
        let mut dir_edges: HashMap<(VertexId, VertexId), FacetId> = HashMap::new();
        for (fi, f) in facets.iter().enumerate() {
            for k in 0..3 {
                let (u, v) = (f[k], f[(k + 1) % 3]);
                if dir_edges.insert((u, v), fi).is_some() {
                    return Err(MeshError::InvalidMesh(format!(
                        "directed edge ({u},{v}) used twice: surface not manifold/oriented"
                    )));
                }
            }
        }
        let mut edges: Vec<Edge> = Vec::new();
        let mut edge_lookup: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
        for (fi, f) in facets.iter().enumerate() {
            for k in 0..3 {
                let (u, v) = (f[k], f[(k + 1) % 3]);
                if u < v {
                    let &opp = dir_edges.get(&(v, u)).ok_or_else(|| {
                        MeshError::InvalidMesh(format!("edge ({u},{v}) has no opposite facet: surface not closed"))
                    })?;
                    edge_lookup.insert((u, v), edges.len());
                    edges.push(Edge {
                        vertices: [u, v],
                        facets: [fi, opp],
                    });
                }
            }
        }

        let mut facet_edges = vec![[usize::MAX; 3]; facets.len()];
        for (fi, f) in facets.iter().enumerate() {
            for k in 0..3 {
                let (u, v) = sorted(f[k], f[(k + 1) % 3]);
                facet_edges[fi][k] = edge_lookup[&(u, v)];
            }
        }

        let vertex_fans = build_fans(vertices.len(), &facets, &facet_edges, &edges)?;

        // Euler characteristic of a sphere.
        if vertices.len() + facets.len() != edges.len() + 2 {
            return Err(MeshError::InvalidMesh(format!(
                "V - E + F = {} (expected 2): not a topological sphere",
                vertices.len() as i64 - edges.len() as i64 + facets.len() as i64
            )));
        }

        Ok(Polytope {
            vertices,
            facets,
            facet_normals,
            facet_offsets,
            edges,
            edge_lookup,
            facet_edges,
            vertex_fans,
            diameter,
        })
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }
    pub fn facets(&self) -> &[[VertexId; 3]] {
        &self.facets
    }
    pub fn facet_normals(&self) -> &[Vec3] {
        &self.facet_normals
    }
    pub fn facet_normal(&self, f: FacetId) -> Vec3 {
        self.facet_normals[f]
    }
    /// Plane offset `d` with the facet plane `n·x = d`.
    pub fn facet_offset(&self, f: FacetId) -> f64 {
        self.facet_offsets[f]
    }
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }
    pub fn facet_edges(&self, f: FacetId) -> [EdgeId; 3] {
        self.facet_edges[f]
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn vertex(&self, v: VertexId) -> Point3 {
        self.vertices[v]
    }

    /// Bounding-box diagonal; stands in for the diameter when scaling tolerances
    /// (within a factor √3 of the true diameter).
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Factor applied to absolute tolerances: `max(1, diameter)`.
    pub fn tol_scale(&self) -> f64 {
        self.diameter.max(1.0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_lookup.get(&sorted(u, v)).copied()
    }

    /// The facet on the other side of `e` from `f`.
    pub fn other_facet(&self, e: EdgeId, f: FacetId) -> FacetId {
        let [f0, f1] = self.edges[e].facets;
        if f0 == f {
            f1
        } else {
            f0
        }
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> (Point3, Point3) {
        let [u, v] = self.edges[e].vertices;
        (self.vertices[u], self.vertices[v])
    }

    pub fn edge_length(&self, e: EdgeId) -> f64 {
        let (a, b) = self.edge_endpoints(e);
        (b - a).norm()
    }

    /// Point at parameter `t ∈ [0,1]` along edge `e` (from `vertices[0]` to `vertices[1]`).
    pub fn edge_point(&self, e: EdgeId, t: f64) -> Point3 {
        let (a, b) = self.edge_endpoints(e);
        a + (b - a) * t
    }

    /// Dihedral angle gap between the two facets of `e` (angle between outer normals).
    pub fn edge_normal_gap(&self, e: EdgeId) -> f64 {
        let [f0, f1] = self.edges[e].facets;
        angle_between(&self.facet_normals[f0], &self.facet_normals[f1])
    }

    /// Geodesics cross a coplanar edge without turning.
    pub fn is_coplanar_edge(&self, e: EdgeId) -> bool {
        self.edge_normal_gap(e) < TOL_COPLANAR
    }

    pub fn facet_points(&self, f: FacetId) -> [Point3; 3] {
        let [a, b, c] = self.facets[f];
        [self.vertices[a], self.vertices[b], self.vertices[c]]
    }

    pub fn facet_centroid(&self, f: FacetId) -> Point3 {
        let [a, b, c] = self.facet_points(f);
        Point3::from((a.coords + b.coords + c.coords) / 3.0)
    }

    pub fn point_from_bary(&self, f: FacetId, bary: [f64; 3]) -> Point3 {
        let [a, b, c] = self.facet_points(f);
        Point3::from(a.coords * bary[0] + b.coords * bary[1] + c.coords * bary[2])
    }

    /// Barycentric coordinates of `p` with respect to facet `f` (least squares
    /// in the facet plane; exact when `p` lies on the plane).
    pub fn bary_from_point(&self, f: FacetId, p: &Point3) -> [f64; 3] {
        let [a, b, c] = self.facet_points(f);
        let u = b - a;
        let v = c - a;
        let w = p - a;
        let uu = u.dot(&u);
        let uv = u.dot(&v);
        let vv = v.dot(&v);
        let wu = w.dot(&u);
        let wv = w.dot(&v);
        let det = uu * vv - uv * uv;
        let b1 = (wu * vv - wv * uv) / det;
        let b2 = (uu * wv - uv * wu) / det;
        [1.0 - b1 - b2, b1, b2]
    }

    /// Finds a facet whose closed triangle contains `p` within `tol` (absolute,
    /// caller scales). Returns the facet with the deepest containment.
    pub fn locate_point(&self, p: &Point3, tol: f64) -> Option<(FacetId, [f64; 3])> {
        let mut best: Option<(FacetId, [f64; 3], f64)> = None;
        for f in 0..self.facets.len() {
            let plane_dist = (self.facet_normals[f].dot(&p.coords) - self.facet_offsets[f]).abs();
            if plane_dist > tol {
                continue;
            }
            let bary = self.bary_from_point(f, p);
            let min_b = bary[0].min(bary[1]).min(bary[2]);
            let scale = self.facet_edge_scale(f);
            if min_b * scale < -tol {
                continue;
            }
            let score = min_b * scale - plane_dist;
            if best.map_or(true, |(_, _, s)| score > s) {
                best = Some((f, bary, score));
            }
        }
        best.map(|(f, bary, _)| (f, bary))
    }

    fn facet_edge_scale(&self, f: FacetId) -> f64 {
        let [a, b, c] = self.facet_points(f);
        (b - a).norm().max((c - a).norm()).max((c - b).norm())
    }

    /// Support function `max_v dir·v`.
    pub fn support(&self, dir: &Vec3) -> f64 {
        self.vertices
            .iter()
            .map(|p| dir.dot(&p.coords))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Cyclic fan of `(edge, facet)` pairs around a vertex. See field docs.
    pub fn vertex_fan(&self, v: VertexId) -> &[(EdgeId, FacetId)] {
        &self.vertex_fans[v]
    }

    /// The two edge sequences crossing from `f_from` to `f_to` around vertex `v`
    /// (exclusive of edges bounding neither walk). The first arc walks the fan
    /// forward, the second backward. Empty arc means the facets coincide.
    pub fn fan_arcs(&self, v: VertexId, f_from: FacetId, f_to: FacetId) -> ([Vec<EdgeId>; 2], bool) {
        let fan = &self.vertex_fans[v];
        let k = fan.len();
        let pos = |f: FacetId| fan.iter().position(|&(_, ff)| ff == f);
        let (Some(i), Some(j)) = (pos(f_from), pos(f_to)) else {
            return ([Vec::new(), Vec::new()], false);
        };
        if i == j {
            return ([Vec::new(), Vec::new()], true);
        }
        // forward: edges e_{i+1}, ..., e_j ; backward: e_i, e_{i-1}, ..., e_{j+1}
        let mut fwd = Vec::new();
        let mut idx = (i + 1) % k;
        loop {
            fwd.push(fan[idx].0);
            if idx == j {
                break;
            }
            idx = (idx + 1) % k;
        }
        let mut bwd = Vec::new();
        let mut idx = i;
        loop {
            bwd.push(fan[idx].0);
            let prev = (idx + k - 1) % k;
            if prev == j {
                break;
            }
            idx = prev;
        }
        ([fwd, bwd], true)
    }

    /// Rigid translation + uniform scale: `p ↦ (p + t) * s`.
    pub fn transformed(&self, translate: Vec3, scale: f64) -> Result<Polytope, MeshError> {
        let verts = self
            .vertices
            .iter()
            .map(|p| Point3::from((p.coords + translate) * scale))
            .collect();
        Polytope::from_parts(verts, self.facets.clone())
    }

    /// Full structural validation: closed manifold (already guaranteed by
    /// construction), unit normals, and convexity within `TOL_CONVEX·tol_scale`.
    pub fn validate(&self) -> Result<(), MeshError> {
        for n in &self.facet_normals {
            if (n.norm() - 1.0).abs() > 1e-12 {
                return Err(MeshError::InvalidMesh("facet normal not unit length".into()));
            }
        }
        let worst = self.max_convexity_violation();
        let tol = TOL_CONVEX * self.tol_scale();
        if worst > tol {
            return Err(MeshError::InvalidMesh(format!(
                "convexity violated by {worst:.3e} (tolerance {tol:.3e})"
            )));
        }
        Ok(())
    }

    /// Largest `n_f·v − d_f` over all (facet, vertex) pairs; ≤ tol for convex meshes.
    pub fn max_convexity_violation(&self) -> f64 {
        let mut worst = f64::NEG_INFINITY;
        for f in 0..self.facets.len() {
            let n = self.facet_normals[f];
            let d = self.facet_offsets[f];
            for p in &self.vertices {
                worst = worst.max(n.dot(&p.coords) - d);
            }
        }
        worst
    }
}

fn sorted(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

pub(crate) fn bbox_diagonal(vertices: &[Point3]) -> f64 {
    let mut lo = Vec3::repeat(f64::INFINITY);
    let mut hi = Vec3::repeat(f64::NEG_INFINITY);
    for p in vertices {
        lo = lo.inf(&p.coords);
        hi = hi.sup(&p.coords);
    }
    (hi - lo).norm()
}

pub(crate) fn angle_between(a: &Vec3, b: &Vec3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

fn build_fans(
    n_vertices: usize,
    facets: &[[VertexId; 3]],
    facet_edges: &[[EdgeId; 3]],
    edges: &[Edge],
) -> Result<Vec<Vec<(EdgeId, FacetId)>>, MeshError> {
    let mut incident: Vec<Vec<FacetId>> = vec![Vec::new(); n_vertices];
    for (fi, f) in facets.iter().enumerate() {
        for &v in f {
            incident[v].push(fi);
        }
    }
    let mut fans = Vec::with_capacity(n_vertices);
    for v in 0..n_vertices {
        let count = incident[v].len();
        if count < 3 {
            return Err(MeshError::InvalidMesh(format!("vertex {v} has fewer than 3 incident facets")));
        }
        // Walk around the vertex: from facet f entered over edge e, leave over
        // the other edge of f at v.
        let f0 = incident[v][0];
        let e0 = edges_at_vertex(facets[f0], facet_edges[f0], v)[0];
        let mut fan = Vec::with_capacity(count);
        let mut e = e0;
        let mut f = f0;
        loop {
            fan.push((e, f));
            let [ea, eb] = edges_at_vertex(facets[f], facet_edges[f], v);
            let e_next = if ea == e { eb } else { ea };
            let f_next = if edges[e_next].facets[0] == f {
                edges[e_next].facets[1]
            } else {
                edges[e_next].facets[0]
            };
            if f_next == f0 && e_next == e0 {
                break;
            }
            e = e_next;
            f = f_next;
            if fan.len() > count {
                return Err(MeshError::InvalidMesh(format!("vertex {v} fan does not close")));
            }
        }
        if fan.len() != count {
            return Err(MeshError::InvalidMesh(format!("vertex {v} fan is not a single cycle")));
        }
        fans.push(fan);
    }
    Ok(fans)
}

fn edges_at_vertex(facet: [VertexId; 3], fe: [EdgeId; 3], v: VertexId) -> [EdgeId; 2] {
    // facet edge slot k joins vertices k and k+1; the two edges at v are the
    // slots adjacent to v's corner.
    let k = facet.iter().position(|&x| x == v).expect("vertex in facet");
    [fe[k], fe[(k + 2) % 3]]
}

/// Ball radii and centers of a polytope: inscribed `(in_center, r)` and
/// circumscribed `(out_center, R)`.
#[derive(Debug, Clone, Copy)]
pub struct BallDataRaw {
    pub in_center: Point3,
    pub r: f64,
    pub out_center: Point3,
    pub big_r: f64,
}

/// Translates by `-out_center` and scales by `1/R` so the minimum enclosing
/// ball of the result is the unit ball at the origin.
pub fn normalize_to_unit_ball(p: &Polytope) -> Result<Polytope, MeshError> {
    let (center, r) = crate::balls::circumscribed_ball(p);
    if r <= 0.0 {
        return Err(MeshError::DegenerateInput("zero circumscribed radius".into()));
    }
    p.transformed(-center.coords, 1.0 / r)
}
