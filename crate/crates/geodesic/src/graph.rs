//! Steiner-subdivided edge graph for seeding geodesic searches.
//!
//! Nodes are mesh vertices plus evenly spaced points on every edge; arcs join
//! nodes sharing a facet (straight in-facet segments) and consecutive nodes
//! along each edge. Dijkstra over this graph overestimates geodesic distance
//! but lands in the right homotopy class for seeding.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use mesh_core::{EdgeId, Point3, Polytope, VertexId};

use crate::surface::SurfacePoint;

#[derive(Debug, Clone, Copy)]
pub enum NodeKind {
    Vertex(VertexId),
    /// Steiner point `index` on `edge` (param (index+1)/(k+1) along the edge).
    EdgeSteiner(EdgeId, usize),
}

pub struct SteinerGraph {
    pub steiner_per_edge: usize,
    num_vertices: usize,
    node_pos: Vec<Point3>,
    offsets: Vec<u32>,
    arcs: Vec<(u32, f64)>,
}

pub struct DistanceField {
    pub dist: Vec<f64>,
    pub pred: Vec<u32>,
    /// Extra cost from the off-graph source point to each seed node.
    pub source: SurfacePoint,
}

pub const NO_PRED: u32 = u32::MAX;

impl SteinerGraph {
    pub fn build(poly: &Polytope, steiner_per_edge: usize) -> SteinerGraph {
        let k = steiner_per_edge;
        let nv = poly.num_vertices();
        let n_nodes = nv + poly.num_edges() * k;

        let mut node_pos = Vec::with_capacity(n_nodes);
        node_pos.extend(poly.vertices().iter().copied());
        for e in 0..poly.num_edges() {
            for j in 0..k {
                let t = (j + 1) as f64 / (k + 1) as f64;
                node_pos.push(poly.edge_point(e, t));
            }
        }

        // collect undirected arcs, then build CSR with both directions
        let mut pairs: Vec<(u32, u32, f64)> = Vec::new();
        // along-edge chains
        for e in 0..poly.num_edges() {
            let [u, v] = poly.edge(e).vertices;
            let mut chain = Vec::with_capacity(k + 2);
            chain.push(u as u32);
            for j in 0..k {
                chain.push((nv + e * k + j) as u32);
            }
            chain.push(v as u32);
            for w in chain.windows(2) {
                let d = (node_pos[w[1] as usize] - node_pos[w[0] as usize]).norm();
                pairs.push((w[0], w[1], d));
            }
        }
        // in-facet cross arcs (skip pairs on the same edge)
        let mut facet_nodes: Vec<(u32, EdgeId)> = Vec::new();
        for f in 0..poly.num_facets() {
            facet_nodes.clear();
            for &v in &poly.facets()[f] {
                facet_nodes.push((v as u32, usize::MAX));
            }
            for &e in &poly.facet_edges(f) {
                for j in 0..k {
                    facet_nodes.push(((nv + e * k + j) as u32, e));
                }
            }
            for i in 0..facet_nodes.len() {
                for j in i + 1..facet_nodes.len() {
                    let (a, ea) = facet_nodes[i];
                    let (b, eb) = facet_nodes[j];
                    if ea != usize::MAX && ea == eb {
                        continue; // same edge: the chain covers it
                    }
                    if ea == usize::MAX && eb == usize::MAX {
                        continue; // vertex pair of one facet = an edge: chain covers it
                    }
                    // vertex incident to the steiner node's edge: chain covers it
                    if ea == usize::MAX && poly.edge(eb).vertices.contains(&(a as usize)) {
                        continue;
                    }
                    if eb == usize::MAX && poly.edge(ea).vertices.contains(&(b as usize)) {
                        continue;
                    }
                    let d = (node_pos[b as usize] - node_pos[a as usize]).norm();
                    pairs.push((a, b, d));
                }
            }
        }

        let mut degree = vec![0u32; n_nodes];
        for &(a, b, _) in &pairs {
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut offsets = vec![0u32; n_nodes + 1];
        for i in 0..n_nodes {
            offsets[i + 1] = offsets[i] + degree[i];
        }
        let mut cursor: Vec<u32> = offsets[..n_nodes].to_vec();
        let mut arcs = vec![(0u32, 0.0f64); offsets[n_nodes] as usize];
        for &(a, b, d) in &pairs {
            arcs[cursor[a as usize] as usize] = (b, d);
            cursor[a as usize] += 1;
            arcs[cursor[b as usize] as usize] = (a, d);
            cursor[b as usize] += 1;
        }

        SteinerGraph {
            steiner_per_edge: k,
            num_vertices: nv,
            node_pos,
            offsets,
            arcs,
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.node_pos.len()
    }

    pub fn node_position(&self, n: u32) -> Point3 {
        self.node_pos[n as usize]
    }

    pub fn node_kind(&self, n: u32) -> NodeKind {
        let n = n as usize;
        if n < self.num_vertices {
            NodeKind::Vertex(n)
        } else {
            let k = self.steiner_per_edge;
            let e = (n - self.num_vertices) / k;
            let j = (n - self.num_vertices) % k;
            NodeKind::EdgeSteiner(e, j)
        }
    }

    pub fn steiner_param(&self, j: usize) -> f64 {
        (j + 1) as f64 / (self.steiner_per_edge + 1) as f64
    }

    /// Graph nodes reachable in one straight in-facet segment from `sp`.
    pub fn seed_nodes(&self, poly: &Polytope, sp: &SurfacePoint) -> Vec<(u32, f64)> {
        let p = sp.position(poly);
        let mut out = Vec::new();
        let mut seen: Vec<u32> = Vec::new();
        for f in sp.incident_facets(poly) {
            for &v in &poly.facets()[f] {
                push_seed(&mut out, &mut seen, v as u32, &p, &self.node_pos);
            }
            for &e in &poly.facet_edges(f) {
                for j in 0..self.steiner_per_edge {
                    let n = (self.num_vertices + e * self.steiner_per_edge + j) as u32;
                    push_seed(&mut out, &mut seen, n, &p, &self.node_pos);
                }
            }
        }
        out
    }

    /// Multi-source Dijkstra from an off-graph surface point.
    pub fn distance_field(&self, poly: &Polytope, source: &SurfacePoint) -> DistanceField {
        let seeds = self.seed_nodes(poly, source);
        let n = self.num_nodes();
        let mut dist = vec![f64::INFINITY; n];
        let mut pred = vec![NO_PRED; n];
        let mut heap: BinaryHeap<HeapItem> = BinaryHeap::with_capacity(n / 4);
        for &(node, cost) in &seeds {
            if cost < dist[node as usize] {
                dist[node as usize] = cost;
                heap.push(HeapItem { dist: cost, node });
            }
        }
        while let Some(HeapItem { dist: d, node }) = heap.pop() {
            if d > dist[node as usize] {
                continue;
            }
            let (lo, hi) = (self.offsets[node as usize], self.offsets[node as usize + 1]);
            for &(to, w) in &self.arcs[lo as usize..hi as usize] {
                let nd = d + w;
                if nd < dist[to as usize] {
                    dist[to as usize] = nd;
                    pred[to as usize] = node;
                    heap.push(HeapItem { dist: nd, node: to });
                }
            }
        }
        DistanceField {
            dist,
            pred,
            source: *source,
        }
    }

    /// Best graph-path estimate from the field's source to `sp`, and the node
    /// it enters `sp`'s facet neighborhood through.
    pub fn eval_target(&self, poly: &Polytope, field: &DistanceField, sp: &SurfacePoint) -> Option<(f64, u32)> {
        let mut best: Option<(f64, u32)> = None;
        for (node, cost) in self.seed_nodes(poly, sp) {
            let d = field.dist[node as usize];
            if !d.is_finite() {
                continue;
            }
            let total = d + cost;
            if best.map_or(true, |(b, _)| total < b) {
                best = Some((total, node));
            }
        }
        best
    }

    /// Node chain from the field source to `node` (inclusive), in travel order.
    pub fn backtrack(&self, field: &DistanceField, node: u32) -> Vec<u32> {
        let mut chain = vec![node];
        let mut cur = node;
        while field.pred[cur as usize] != NO_PRED {
            cur = field.pred[cur as usize];
            chain.push(cur);
        }
        chain.reverse();
        chain
    }
}

fn push_seed(out: &mut Vec<(u32, f64)>, seen: &mut Vec<u32>, node: u32, p: &Point3, pos: &[Point3]) {
    if seen.contains(&node) {
        return;
    }
    seen.push(node);
    out.push((node, (pos[node as usize] - p).norm()));
}

struct HeapItem {
    dist: f64,
    node: u32,
}

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.dist == other.dist && self.node == other.node
    }
}
impl Eq for HeapItem {}
impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on distance, deterministic node tie-break
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mesh_core::convex_hull;

    #[test]
    fn dijkstra_on_tetra() {
        let p = convex_hull(&[
            Point3::new(1.0, 1.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
        ])
        .unwrap();
        let g = SteinerGraph::build(&p, 4);
        let a = SurfacePoint::new(0, [0.4, 0.3, 0.3]).unwrap();
        let field = g.distance_field(&p, &a);
        // every node reachable on a closed surface
        assert!(field.dist.iter().all(|d| d.is_finite()));
        // distances respect the 3D chord lower bound
        let ap = a.position(&p);
        for n in 0..g.num_nodes() as u32 {
            assert!(field.dist[n as usize] >= (g.node_position(n) - ap).norm() - 1e-9);
        }
    }
}
