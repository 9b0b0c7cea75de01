//! Shortest-path driver: seeding, funnel straightening with edge-sequence
//! repair, multi-seed search and small-polytope certification.

use std::cell::RefCell;
use std::rc::Rc;

use mesh_core::{EdgeId, FacetId, Polytope, Vec3};

use crate::enumerate::enumerate_shortest;
use crate::funnel::{funnel_strip, Crossing, FunnelPath};
use crate::graph::{DistanceField, SteinerGraph};
use crate::surface::{PathNode, SurfacePath, SurfacePoint};
use crate::unfold::{unfold, UnfoldedStrip};
use crate::GeoError;

#[derive(Debug, Clone, Copy)]
pub struct GeoOptions {
    /// Steiner points per edge in the seeding graph.
    pub steiner_per_edge: usize,
    /// Number of angular-sector routing hints around the source-target axis.
    pub num_seeds: usize,
    /// Rebuild the graph at double resolution when straightening improves the
    /// seed by more than 10% (the seed was probably in a poor class).
    pub adaptive: bool,
    /// Up to this facet count, certify by exhaustive sequence enumeration.
    pub exhaustive_facet_limit: usize,
    /// Straightening repair iteration cap.
    pub max_iters: usize,
}

impl Default for GeoOptions {
    fn default() -> Self {
        GeoOptions {
            steiner_per_edge: 32,
            num_seeds: 8,
            adaptive: true,
            exhaustive_facet_limit: 14,
            max_iters: 10_000,
        }
    }
}

/// A shortest-path result with its certification status.
#[derive(Debug, Clone)]
pub struct Geodesic {
    pub path: SurfacePath,
    /// True when exhaustive enumeration confirmed global optimality
    /// (always done at small facet counts); otherwise best-found.
    pub certified: bool,
    /// Two distinct edge sequences tied within 1e-9 relative length.
    pub tie_detected: bool,
}

type FieldKey = (FacetId, [u64; 3], bool);

/// Reusable solver holding the seeding graph and cached distance fields.
pub struct GeodesicSolver<'p> {
    poly: &'p Polytope,
    pub opts: GeoOptions,
    coarse: Rc<SteinerGraph>,
    fine: RefCell<Option<Rc<SteinerGraph>>>,
    fields: RefCell<Vec<(FieldKey, Rc<DistanceField>)>>,
}

impl<'p> GeodesicSolver<'p> {
    pub fn new(poly: &'p Polytope) -> GeodesicSolver<'p> {
        Self::with_options(poly, GeoOptions::default())
    }

    pub fn with_options(poly: &'p Polytope, opts: GeoOptions) -> GeodesicSolver<'p> {
        GeodesicSolver {
            poly,
            opts,
            coarse: Rc::new(SteinerGraph::build(poly, opts.steiner_per_edge)),
            fine: RefCell::new(None),
            fields: RefCell::new(Vec::new()),
        }
    }

    pub fn polytope(&self) -> &Polytope {
        self.poly
    }

    fn graph(&self, fine: bool) -> Rc<SteinerGraph> {
        if !fine {
            return Rc::clone(&self.coarse);
        }
        let mut slot = self.fine.borrow_mut();
        if slot.is_none() {
            *slot = Some(Rc::new(SteinerGraph::build(
                self.poly,
                (self.opts.steiner_per_edge * 2).max(4),
            )));
        }
        Rc::clone(slot.as_ref().unwrap())
    }

    /// Shortest path between two boundary points.
    pub fn shortest_path(&self, a: &SurfacePoint, b: &SurfacePoint) -> Result<Geodesic, GeoError> {
        let pa = a.position(self.poly);
        let pb = b.position(self.poly);
        let scale = self.poly.tol_scale();
        if (pa - pb).norm() < 1e-15 * scale {
            return Err(GeoError::DegenerateQuery);
        }
        // shared facet: the in-facet chord attains the 3D lower bound
        let fa_set = a.incident_facets(self.poly);
        if let Some(&f) = fa_set.iter().find(|f| b.relocate(self.poly, **f).is_some()) {
            let a2 = a.relocate(self.poly, f).unwrap_or(*a);
            let b2 = b.relocate(self.poly, f).unwrap();
            return Ok(Geodesic {
                path: SurfacePath::segment(self.poly, a2, b2),
                certified: true,
                tie_detected: false,
            });
        }

        let mut candidates = self.seeded_candidates(a, b, false)?;
        let graph_estimate = candidates.iter().map(|c| c.seed_len).fold(f64::INFINITY, f64::min);
        let best_now = candidates.iter().map(|c| c.len).fold(f64::INFINITY, f64::min);
        if self.opts.adaptive && best_now < 0.9 * graph_estimate {
            candidates.extend(self.seeded_candidates(a, b, true)?);
        }
        if candidates.is_empty() {
            return Err(GeoError::NoConvergence(0));
        }

        let mut certified = false;
        if self.poly.num_facets() <= self.opts.exhaustive_facet_limit {
            let incumbent = candidates.iter().map(|c| c.len).fold(f64::INFINITY, f64::min);
            let bound = incumbent.min(3.0 * self.poly.diameter());
            if let Some((sf, seq, _)) = enumerate_shortest(self.poly, a, b, bound) {
                if let Ok(cand) = self.straighten_on(a, b, sf, seq, f64::INFINITY) {
                    candidates.push(cand);
                }
            }
            certified = true;
        }

        candidates.sort_by(|x, y| x.len.total_cmp(&y.len));
        let best = &candidates[0];
        let tie_detected = candidates.iter().skip(1).any(|c| {
            c.signature != best.signature && (c.len - best.len).abs() <= 1e-9 * best.len.max(1e-300)
        });
        Ok(Geodesic {
            path: best.path.clone(),
            certified,
            tie_detected,
        })
    }

    fn seeded_candidates(&self, a: &SurfacePoint, b: &SurfacePoint, fine: bool) -> Result<Vec<Candidate>, GeoError> {
        let graph = self.graph(fine);
        let fa = self.field_on(&graph, a, fine);
        let fb = self.field_on(&graph, b, fine);
        let chains = hint_chains(self.poly, &graph, &fa, &fb, a, b, self.opts.num_seeds);
        let mut out: Vec<Candidate> = Vec::new();
        for (chain, seed_len) in chains {
            let Some((sf, seq)) = self.chain_to_sequence(&graph, a, b, &chain) else {
                continue;
            };
            if out.iter().any(|c| c.source_seq == seq && c.source_start == sf) {
                continue;
            }
            match self.straighten_on(a, b, sf, seq.clone(), seed_len) {
                Ok(mut cand) => {
                    cand.source_seq = seq;
                    cand.source_start = sf;
                    out.push(cand);
                }
                Err(GeoError::NoConvergence(n)) => return Err(GeoError::NoConvergence(n)),
                Err(_) => continue,
            }
        }
        Ok(out)
    }

    fn field_on(&self, graph: &SteinerGraph, sp: &SurfacePoint, fine: bool) -> Rc<DistanceField> {
        let key: FieldKey = (
            sp.facet,
            [sp.bary[0].to_bits(), sp.bary[1].to_bits(), sp.bary[2].to_bits()],
            fine,
        );
        if let Some((_, f)) = self.fields.borrow().iter().find(|(k, _)| *k == key) {
            return Rc::clone(f);
        }
        let field = Rc::new(graph.distance_field(self.poly, sp));
        let mut cache = self.fields.borrow_mut();
        if cache.len() > 24 {
            cache.remove(0);
        }
        cache.push((key, Rc::clone(&field)));
        field
    }

    /// Straightens within the strip of `seq`, repairing the sequence when the
    /// funnel pins at interior vertices and a reroute is shorter.
    fn straighten_on(
        &self,
        a: &SurfacePoint,
        b: &SurfacePoint,
        start_facet: FacetId,
        seq: Vec<EdgeId>,
        seed_len: f64,
    ) -> Result<Candidate, GeoError> {
        let mut seq = cleanup_sequence(seq);
        let mut current = self.funnel_once(a, b, start_facet, &seq)?;
        for _iter in 0..self.opts.max_iters {
            let pins = pin_runs(&current.funnel.crossings);
            let mut accepted = false;
            for (run_start, run_end, v) in pins {
                let Some(new_seq) = self.reroute(&current.strip, &seq, run_start, run_end, v) else {
                    continue;
                };
                let new_seq = cleanup_sequence(new_seq);
                if new_seq == seq {
                    continue;
                }
                if let Ok(next) = self.funnel_once(a, b, start_facet, &new_seq) {
                    if next.funnel.length2d < current.funnel.length2d * (1.0 - 1e-13) {
                        seq = new_seq;
                        current = next;
                        accepted = true;
                        break;
                    }
                }
            }
            if !accepted {
                let path = self.build_path(a, b, &current.strip, &current.funnel)?;
                let signature = (start_facet, path.crossed_edges.clone());
                return Ok(Candidate {
                    len: path.length,
                    path,
                    seed_len,
                    signature,
                    source_seq: Vec::new(),
                    source_start: start_facet,
                });
            }
        }
        Err(GeoError::NoConvergence(self.opts.max_iters))
    }

    fn funnel_once(
        &self,
        a: &SurfacePoint,
        b: &SurfacePoint,
        start_facet: FacetId,
        seq: &[EdgeId],
    ) -> Result<StripState, GeoError> {
        let strip = unfold(self.poly, seq, start_facet)?;
        let last = strip.facets.len() - 1;
        let a2 = strip
            .embed(self.poly, 0, a)
            .ok_or_else(|| GeoError::NotAStrip("source not on strip start facet".into()))?;
        let b2 = strip
            .embed(self.poly, last, b)
            .ok_or_else(|| GeoError::NotAStrip("target not on strip end facet".into()))?;
        let funnel = funnel_strip(self.poly, &strip, a2, b2);
        Ok(StripState { strip, funnel })
    }

    /// Replaces the portal run `[i..=j]` pinned at vertex `v` by the fan arc on
    /// the other side of `v`.
    fn reroute(&self, strip: &UnfoldedStrip, seq: &[EdgeId], i: usize, j: usize, v: usize) -> Option<Vec<EdgeId>> {
        let f_before = strip.facets[i];
        let f_after = strip.facets[j + 1];
        let ([fwd, bwd], ok) = self.poly.fan_arcs(v, f_before, f_after);
        if !ok {
            return None;
        }
        let current = &seq[i..=j];
        let replacement = if f_before == f_after {
            Vec::new()
        } else if fwd.as_slice() == current {
            bwd
        } else if bwd.as_slice() == current {
            fwd
        } else {
            // the pinned run does not match either pure arc (mixed pins);
            // replace with the shorter arc as a heuristic repair
            if fwd.len() <= bwd.len() {
                fwd
            } else {
                bwd
            }
        };
        let mut out = Vec::with_capacity(seq.len() - (j - i + 1) + replacement.len());
        out.extend_from_slice(&seq[..i]);
        out.extend_from_slice(&replacement);
        out.extend_from_slice(&seq[j + 1..]);
        Some(out)
    }

    fn build_path(
        &self,
        a: &SurfacePoint,
        b: &SurfacePoint,
        strip: &UnfoldedStrip,
        funnel: &FunnelPath,
    ) -> Result<SurfacePath, GeoError> {
        let mut nodes: Vec<PathNode> = Vec::with_capacity(funnel.crossings.len() + 2);
        nodes.push(PathNode::Endpoint(*a));
        for (k, crossing) in funnel.crossings.iter().enumerate() {
            let portal = &strip.portals[k];
            match crossing {
                Crossing::Transversal(u) => nodes.push(PathNode::Cross {
                    edge: portal.edge,
                    t: portal.edge_param(self.poly, *u),
                }),
                Crossing::AtVertex(v, _) => nodes.push(PathNode::Pin(*v)),
            }
        }
        nodes.push(PathNode::Endpoint(*b));
        SurfacePath::from_nodes(self.poly, &nodes)
    }

    fn chain_to_sequence(
        &self,
        graph: &SteinerGraph,
        a: &SurfacePoint,
        b: &SurfacePoint,
        chain: &[u32],
    ) -> Option<(FacetId, Vec<EdgeId>)> {
        // facet waypoints along a → chain → b
        let mut facet_sets: Vec<Vec<FacetId>> = Vec::with_capacity(chain.len() + 2);
        facet_sets.push(a.incident_facets(self.poly));
        for &n in chain {
            facet_sets.push(node_facets(self.poly, graph, n));
        }
        facet_sets.push(b.incident_facets(self.poly));

        let mut facets: Vec<FacetId> = Vec::new();
        for w in facet_sets.windows(2) {
            let common = common_facet(&w[0], &w[1])?;
            if facets.last() != Some(&common) {
                facets.push(common);
            }
        }
        // ensure the walk starts where a lives and ends where b lives
        if facets.is_empty() {
            facets.push(a.facet);
        }

        let mut seq: Vec<EdgeId> = Vec::new();
        for k in 1..facets.len() {
            let (f, g) = (facets[k - 1], facets[k]);
            if f == g {
                continue;
            }
            if let Some(e) = shared_edge(self.poly, f, g) {
                seq.push(e);
            } else if let Some(v) = shared_vertex_of_facets(self.poly, f, g) {
                let ([fwd, bwd], ok) = self.poly.fan_arcs(v, f, g);
                if !ok {
                    return None;
                }
                let arc = if fwd.len() <= bwd.len() { fwd } else { bwd };
                seq.extend(arc);
            } else {
                return None;
            }
        }
        Some((facets[0], seq))
    }

    /// Minimum geodesic distance from `x0` to a set of edges, with the
    /// attaining point. Also returns the witnessing path.
    pub fn distance_to_edge_set(
        &self,
        x0: &SurfacePoint,
        edges: &[EdgeId],
    ) -> Result<(f64, SurfacePoint, SurfacePath), GeoError> {
        assert!(!edges.is_empty(), "edge set must be nonempty");
        let p0 = x0.position(self.poly);
        let scale = self.poly.tol_scale();
        // on-an-edge short circuit
        for &e in edges {
            let (u, v) = self.poly.edge_endpoints(e);
            let d = point_segment_distance3(&p0, &u, &v);
            if d < 1e-12 * scale {
                let t = ((p0 - u).dot(&(v - u)) / (v - u).norm_squared()).clamp(0.0, 1.0);
                let sp = SurfacePoint::on_edge(self.poly, e, t);
                return Ok((0.0, sp, SurfacePath::segment(self.poly, *x0, sp)));
            }
        }

        let mut best: Option<(f64, EdgeId, f64)> = None; // (len, edge, t)
        for &e in edges {
            for i in 0..=16 {
                let t = i as f64 / 16.0;
                let len = self.eval_to_edge_point(x0, e, t)?;
                if best.map_or(true, |(bl, _, _)| len < bl) {
                    best = Some((len, e, t));
                }
            }
        }
        let (_, e, t0) = best.ok_or(GeoError::NoConvergence(0))?;
        // golden-section refinement around the best sample
        let mut lo = (t0 - 1.0 / 16.0).max(0.0);
        let mut hi = (t0 + 1.0 / 16.0).min(1.0);
        let phi = 0.5 * (3.0 - 5f64.sqrt());
        let mut x1 = lo + phi * (hi - lo);
        let mut x2 = hi - phi * (hi - lo);
        let mut f1 = self.eval_to_edge_point(x0, e, x1)?;
        let mut f2 = self.eval_to_edge_point(x0, e, x2)?;
        for _ in 0..40 {
            if f1 <= f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = lo + phi * (hi - lo);
                f1 = self.eval_to_edge_point(x0, e, x1)?;
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = hi - phi * (hi - lo);
                f2 = self.eval_to_edge_point(x0, e, x2)?;
            }
        }
        let t_star = if f1 <= f2 { x1 } else { x2 };
        let target = SurfacePoint::on_edge(self.poly, e, t_star);
        let geo = self.shortest_path(x0, &target)?;
        Ok((geo.path.length, target, geo.path))
    }

    /// One-sided evaluation: best straightened route from the cached source
    /// field to a point on an edge (no reverse field, no certification).
    fn eval_to_edge_point(&self, x0: &SurfacePoint, e: EdgeId, t: f64) -> Result<f64, GeoError> {
        let target = SurfacePoint::on_edge(self.poly, e, t);
        self.one_sided_distance(x0, &target)
    }

    /// Straightened route length from `x0`'s cached field to `target` without
    /// a reverse field or enumeration (cheap, exact within the seed's
    /// homotopy class).
    pub fn one_sided_distance(&self, x0: &SurfacePoint, target: &SurfacePoint) -> Result<f64, GeoError> {
        let target = *target;
        let pa = x0.position(self.poly);
        let pb = target.position(self.poly);
        if (pa - pb).norm() < 1e-15 * self.poly.tol_scale() {
            return Ok(0.0);
        }
        if x0
            .incident_facets(self.poly)
            .iter()
            .any(|f| target.relocate(self.poly, *f).is_some())
        {
            return Ok((pb - pa).norm());
        }
        let graph = self.graph(false);
        let field = self.field_on(&graph, x0, false);
        let Some((_, node)) = graph.eval_target(self.poly, &field, &target) else {
            return Ok(f64::INFINITY);
        };
        let chain = graph.backtrack(&field, node);
        let Some((sf, seq)) = self.chain_to_sequence(&graph, x0, &target, &chain) else {
            return Ok(f64::INFINITY);
        };
        let cand = self.straighten_on(x0, &target, sf, seq, f64::INFINITY)?;
        Ok(cand.len)
    }
}

struct StripState {
    strip: UnfoldedStrip,
    funnel: FunnelPath,
}

struct Candidate {
    len: f64,
    path: SurfacePath,
    seed_len: f64,
    signature: (FacetId, Vec<EdgeId>),
    source_seq: Vec<EdgeId>,
    source_start: FacetId,
}

/// Maximal runs of consecutive `AtVertex` crossings sharing one vertex.
fn pin_runs(crossings: &[Crossing]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut k = 0;
    while k < crossings.len() {
        if let Crossing::AtVertex(v, _) = crossings[k] {
            let mut j = k;
            while j + 1 < crossings.len() {
                match crossings[j + 1] {
                    Crossing::AtVertex(w, _) if w == v => j += 1,
                    _ => break,
                }
            }
            out.push((k, j, v));
            k = j + 1;
        } else {
            k += 1;
        }
    }
    out
}

fn cleanup_sequence(mut seq: Vec<EdgeId>) -> Vec<EdgeId> {
    loop {
        let Some(i) = (0..seq.len().saturating_sub(1)).find(|&i| seq[i] == seq[i + 1]) else {
            return seq;
        };
        seq.drain(i..=i + 1);
    }
}

fn node_facets(poly: &Polytope, graph: &SteinerGraph, n: u32) -> Vec<FacetId> {
    match graph.node_kind(n) {
        crate::graph::NodeKind::Vertex(v) => poly.vertex_fan(v).iter().map(|&(_, f)| f).collect(),
        crate::graph::NodeKind::EdgeSteiner(e, _) => poly.edge(e).facets.to_vec(),
    }
}

fn common_facet(a: &[FacetId], b: &[FacetId]) -> Option<FacetId> {
    let mut best: Option<FacetId> = None;
    for f in a {
        if b.contains(f) && best.map_or(true, |g| *f < g) {
            best = Some(*f);
        }
    }
    best
}

fn shared_edge(poly: &Polytope, f: FacetId, g: FacetId) -> Option<EdgeId> {
    poly.facet_edges(f).into_iter().find(|&e| poly.edge(e).facets.contains(&g))
}

fn shared_vertex_of_facets(poly: &Polytope, f: FacetId, g: FacetId) -> Option<usize> {
    let fv = poly.facets()[f];
    let gv = poly.facets()[g];
    fv.iter().find(|v| gv.contains(v)).copied()
}

fn point_segment_distance3(p: &mesh_core::Point3, a: &mesh_core::Point3, b: &mesh_core::Point3) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(&ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Routing hints: per angular sector around the source-target axis, the node
/// minimizing `dist_a + dist_b`, turned into a seed node chain.
fn hint_chains(
    poly: &Polytope,
    graph: &SteinerGraph,
    fa: &DistanceField,
    fb: &DistanceField,
    a: &SurfacePoint,
    b: &SurfacePoint,
    sectors: usize,
) -> Vec<(Vec<u32>, f64)> {
    let pa = a.position(poly);
    let pb = b.position(poly);
    let axis = (pb - pa).normalize();
    let mut e1 = axis.cross(&Vec3::z());
    if e1.norm() < 1e-6 {
        e1 = axis.cross(&Vec3::x());
    }
    let e1 = e1.normalize();
    let e2 = axis.cross(&e1);
    let mid = nalgebra::center(&pa, &pb);

    let mut per_sector: Vec<Option<(f64, u32)>> = vec![None; sectors.max(1)];
    let mut global: Option<(f64, u32)> = None;
    for n in 0..graph.num_nodes() as u32 {
        let (da, db) = (fa.dist[n as usize], fb.dist[n as usize]);
        if !(da.is_finite() && db.is_finite()) {
            continue;
        }
        let through = da + db;
        if global.map_or(true, |(g, _)| through < g) {
            global = Some((through, n));
        }
        let rel = graph.node_position(n) - mid;
        let ang = e2.dot(&rel).atan2(e1.dot(&rel));
        let sector = (((ang + std::f64::consts::PI) / std::f64::consts::TAU * sectors as f64) as usize)
            .min(sectors - 1);
        if per_sector[sector].map_or(true, |(s, _)| through < s) {
            per_sector[sector] = Some((through, n));
        }
    }

    let mut picks: Vec<(f64, u32)> = Vec::new();
    if let Some(g) = global {
        picks.push(g);
    }
    for s in per_sector.into_iter().flatten() {
        if !picks.iter().any(|&(_, n)| n == s.1) {
            picks.push(s);
        }
    }

    picks
        .into_iter()
        .map(|(through, n)| {
            let mut chain = graph.backtrack(fa, n);
            let back = graph.backtrack(fb, n);
            for &x in back.iter().rev().skip(1) {
                chain.push(x);
            }
            (chain, through)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// public free-function API
// ---------------------------------------------------------------------------

/// Initial path from `a` to `b` through the Steiner graph (an upper bound on
/// the geodesic length, suitable as a straightening seed).
pub fn seed_path(
    poly: &Polytope,
    a: &SurfacePoint,
    b: &SurfacePoint,
    steiner_per_edge: usize,
) -> Result<SurfacePath, GeoError> {
    let pa = a.position(poly);
    let pb = b.position(poly);
    if (pa - pb).norm() < 1e-15 * poly.tol_scale() {
        return Err(GeoError::DegenerateQuery);
    }
    if a.incident_facets(poly).iter().any(|f| b.relocate(poly, *f).is_some()) {
        return Ok(SurfacePath::segment(poly, *a, *b));
    }
    let graph = SteinerGraph::build(poly, steiner_per_edge);
    let field = graph.distance_field(poly, a);
    let (_, node) = graph
        .eval_target(poly, &field, b)
        .ok_or(GeoError::NoConvergence(0))?;
    let chain = graph.backtrack(&field, node);
    let mut nodes = vec![PathNode::Endpoint(*a)];
    for &n in &chain {
        nodes.push(match graph.node_kind(n) {
            crate::graph::NodeKind::Vertex(v) => PathNode::Pin(v),
            crate::graph::NodeKind::EdgeSteiner(e, j) => PathNode::Cross {
                edge: e,
                t: graph.steiner_param(j),
            },
        });
    }
    nodes.push(PathNode::Endpoint(*b));
    SurfacePath::from_nodes(poly, &nodes)
}

/// Straightens a path within (and locally repairing) its crossed-edge strip.
pub fn straighten(poly: &Polytope, path: &SurfacePath) -> Result<SurfacePath, GeoError> {
    let a = *path.source();
    let b = *path.target();
    if a.incident_facets(poly).iter().any(|f| b.relocate(poly, *f).is_some()) && path.crossed_edges.is_empty() {
        return Ok(SurfacePath::segment(poly, a, b));
    }
    let solver = GeodesicSolver::with_options(
        poly,
        GeoOptions {
            steiner_per_edge: 0,
            ..GeoOptions::default()
        },
    );
    let start = path.points[0].facet;
    let cand = solver.straighten_on(&a, &b, start, path.crossed_edges.clone(), path.length)?;
    Ok(cand.path)
}

/// Globally shortest path (multi-seed search, certified by enumeration on
/// small polytopes).
pub fn shortest_path(poly: &Polytope, a: &SurfacePoint, b: &SurfacePoint) -> Result<Geodesic, GeoError> {
    GeodesicSolver::new(poly).shortest_path(a, b)
}

/// Intrinsic distance from `x0` to the nearest point of an edge set.
pub fn distance_to_edge_set(
    poly: &Polytope,
    x0: &SurfacePoint,
    edges: &[EdgeId],
) -> Result<(f64, SurfacePoint, SurfacePath), GeoError> {
    GeodesicSolver::new(poly).distance_to_edge_set(x0, edges)
}
