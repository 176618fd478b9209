//! Simple undirected graphs with stable edge ids.

mod conflict;
mod generators;
mod io;

pub use conflict::{conflict_graph, induced_config, Configuration, ConflictGraph};
pub use generators::{gen_cnplus, gen_random_cubic, gen_random_weight6, petersen, DEFAULT_CUBIC_RETRIES};

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// A simple undirected graph. Edge ids are `0..m` in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from the given pairs, rejecting loops,
    /// parallel edges and out-of-range ids.
    pub fn new(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in pairs {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            vertex_count: n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub(crate) fn push_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let n = self.vertex_count;
        if u >= n || v >= n {
            return Err(Error::input(format!("edge ({u},{v}) has a vertex id outside 0..{n}")));
        }
        if u == v {
            return Err(Error::input(format!("loop at vertex {u}")));
        }
        if self.edge_between(u, v).is_some() {
            return Err(Error::input(format!("duplicate edge ({u},{v})")));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// `(neighbor, edge id)` pairs incident to `v`.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|a| a.len() == d)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adjacency.get(u)?.iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Maximum of `d(u) + d(v)` over all edges `uv`.
    pub fn edge_weight(&self) -> Result<usize> {
        self.edges
            .iter()
            .map(|&(u, v)| self.degree(u) + self.degree(v))
            .max()
            .ok_or_else(|| Error::input("edge weight of a graph without edges"))
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent_edge.iter_mut().for_each(|p| *p = usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // nothing shorter can be closed from this depth
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &(w, e) in &self.adjacency[u] {
                    if e == parent_edge[u] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent_edge[w] = e;
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Vertices of a shortest cycle in traversal order, or `None` for a forest.
    pub fn shortest_cycle(&self) -> Option<Vec<VertexId>> {
        let mut best: Option<Vec<VertexId>> = None;
        let mut prev = vec![usize::MAX; self.vertex_count];
        let mut queue = VecDeque::new();
        for (skip, &(s, t)) in self.edges.iter().enumerate() {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[s] = s;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &(w, e) in &self.adjacency[u] {
                    if e != skip && prev[w] == usize::MAX {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if prev[t] == usize::MAX {
                continue;
            }
            let mut path = vec![t];
            while path[path.len() - 1] != s {
                path.push(prev[path[path.len() - 1]]);
            }
            if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                best = Some(path);
            }
        }
        best
    }

    /// True iff `e` and `f` share an endpoint or are joined by a common
    /// adjacent edge, i.e. they are at distance at most two in the line graph.
    pub fn sees(&self, e: EdgeId, f: EdgeId) -> Result<bool> {
        let m = self.edge_count();
        if e >= m || f >= m {
            return Err(Error::input(format!("edge id out of range 0..{m}")));
        }
        if e == f {
            return Err(Error::input(format!("edge {e} compared with itself")));
        }
        Ok(self.sees_unchecked(e, f))
    }

    pub(crate) fn sees_unchecked(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        if a == c || a == d || b == c || b == d {
            return true;
        }
        [a, b]
            .iter()
            .any(|&p| [c, d].iter().any(|&q| self.edge_between(p, q).is_some()))
    }

    /// All edges other than `e` that `e` sees.
    pub fn seen_by(&self, e: EdgeId) -> BTreeSet<EdgeId> {
        let (a, b) = self.edges[e];
        let mut out = BTreeSet::new();
        for &end in &[a, b] {
            for &(w, e1) in &self.adjacency[end] {
                out.insert(e1);
                for &(_, e2) in &self.adjacency[w] {
                    out.insert(e2);
                }
            }
        }
        out.remove(&e);
        out
    }

    /// Subgraph on the same vertex set keeping the listed edges; returns the
    /// new graph and, per new edge id, the original edge id.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Result<(Graph, Vec<EdgeId>)> {
        let mut g = Graph::empty(self.vertex_count);
        let mut origin = Vec::with_capacity(keep.len());
        for &e in keep {
            if e >= self.edge_count() {
                return Err(Error::input(format!("edge id {e} out of range")));
            }
            let (u, v) = self.edges[e];
            g.push_edge(u, v)?;
            origin.push(e);
        }
        Ok((g, origin))
    }

    /// `G - S`: same vertex ids, every edge touching `S` removed.
    pub fn remove_vertices(&self, removed: &BTreeSet<VertexId>) -> (Graph, Vec<EdgeId>) {
        let keep: Vec<EdgeId> = (0..self.edge_count())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                !removed.contains(&u) && !removed.contains(&v)
            })
            .collect();
        self.edge_subgraph(&keep).expect("edges of a simple graph stay simple")
    }
}
