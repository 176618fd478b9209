use std::collections::{BTreeMap, BTreeSet};

use super::{gen_cnplus, EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

/// The "sees" relation restricted to an ordered set of edges. Conflicts are
/// stored as position pairs `(i, j)` with `i < j` into [`ConflictGraph::edge_ids`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    edge_ids: Vec<EdgeId>,
    conflicts: BTreeSet<(usize, usize)>,
}

impl ConflictGraph {
    pub fn from_pairs(edge_ids: Vec<EdgeId>, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let conflicts = pairs
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        ConflictGraph { edge_ids, conflicts }
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn position(&self, e: EdgeId) -> Option<usize> {
        self.edge_ids.iter().position(|&x| x == e)
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.conflicts
    }

    pub fn pair_count(&self) -> usize {
        self.conflicts.len()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.conflicts.contains(&(i.min(j), i.max(j)))
    }

    /// Conflict pairs expressed in host edge ids, each as `(smaller, larger)`.
    pub fn edge_pairs(&self) -> BTreeSet<(EdgeId, EdgeId)> {
        self.conflicts
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (self.edge_ids[i], self.edge_ids[j]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Per-position neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(i, j) in &self.conflicts {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }
}

/// Conflict graph over `subset` (all edges when `None`). For a subset the
/// relation is evaluated inside the edge-induced subgraph `G[subset]`.
pub fn conflict_graph(g: &Graph, subset: Option<&[EdgeId]>) -> Result<ConflictGraph> {
    let (local, origin) = match subset {
        None => (g.clone(), (0..g.edge_count()).collect::<Vec<_>>()),
        Some(s) => {
            let distinct: BTreeSet<_> = s.iter().collect();
            if distinct.len() != s.len() {
                return Err(Error::input("edge subset contains duplicates"));
            }
            g.edge_subgraph(s)?
        }
    };
    let m = local.edge_count();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in local.seen_by(i) {
            if i < j {
                pairs.push((i, j));
            }
        }
    }
    Ok(ConflictGraph::from_pairs(origin, pairs))
}

/// The edges removed together with a vertex set `H`, their internal
/// conflicts, and their distance-two neighbours among the remaining edges.
#[derive(Debug, Clone)]
pub struct Configuration {
    host: Graph,
    deleted_vertices: BTreeSet<VertexId>,
    e0: ConflictGraph,
    external_neighbors: Vec<Vec<EdgeId>>,
    extra_conflicts: BTreeSet<(usize, usize)>,
    cnplus_pattern: Option<bool>,
}

impl Configuration {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn deleted_vertices(&self) -> &BTreeSet<VertexId> {
        &self.deleted_vertices
    }

    pub fn e0(&self) -> &ConflictGraph {
        &self.e0
    }

    /// Per E₀ position: edges of `G - V(H)` seen in the host graph.
    pub fn external_neighbors(&self) -> &[Vec<EdgeId>] {
        &self.external_neighbors
    }

    /// E₀ position pairs that see each other in the host graph only through
    /// an edge of `G - V(H)`, so they are absent from [`Self::e0`].
    pub fn extra_conflicts(&self) -> &BTreeSet<(usize, usize)> {
        &self.extra_conflicts
    }

    /// `Some(true)` when `H` induces a cycle and the internal conflict pattern
    /// is exactly that of `C_n^+`; `None` when `H` does not induce a cycle.
    pub fn cnplus_pattern(&self) -> Option<bool> {
        self.cnplus_pattern
    }

    /// Edge ids of `G - V(H)` in host order.
    pub fn remainder_edges(&self) -> Vec<EdgeId> {
        let in_e0: BTreeSet<_> = self.e0.edge_ids().iter().copied().collect();
        (0..self.host.edge_count()).filter(|e| !in_e0.contains(e)).collect()
    }

    /// Internal plus extra conflicts: every pair of E₀ edges that must differ.
    pub fn all_e0_conflicts(&self) -> ConflictGraph {
        ConflictGraph::from_pairs(
            self.e0.edge_ids().to_vec(),
            self.e0.pairs().iter().chain(&self.extra_conflicts).copied(),
        )
    }
}

pub fn induced_config(g: &Graph, h_vertices: &BTreeSet<VertexId>) -> Result<Configuration> {
    if h_vertices.is_empty() {
        return Err(Error::input("configuration vertex set is empty"));
    }
    if let Some(&v) = h_vertices.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::input(format!("vertex {v} not in graph")));
    }
    let e0_ids: Vec<EdgeId> = (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            h_vertices.contains(&u) || h_vertices.contains(&v)
        })
        .collect();
    let e0 = conflict_graph(g, Some(&e0_ids))?;
    let in_e0: BTreeSet<EdgeId> = e0_ids.iter().copied().collect();

    let external_neighbors = e0_ids
        .iter()
        .map(|&e| g.seen_by(e).into_iter().filter(|f| !in_e0.contains(f)).collect())
        .collect();
    let mut extra_conflicts = BTreeSet::new();
    for i in 0..e0_ids.len() {
        for j in (i + 1)..e0_ids.len() {
            if !e0.contains(i, j) && g.sees_unchecked(e0_ids[i], e0_ids[j]) {
                extra_conflicts.insert((i, j));
            }
        }
    }
    let cnplus_pattern = induced_cycle_order(g, h_vertices).map(|cycle| matches_cnplus(g, &cycle, &e0));
    Ok(Configuration {
        host: g.clone(),
        deleted_vertices: h_vertices.clone(),
        e0,
        external_neighbors,
        extra_conflicts,
        cnplus_pattern,
    })
}

/// Vertices of `h` in cyclic order when `G[h]` is a cycle.
fn induced_cycle_order(g: &Graph, h: &BTreeSet<VertexId>) -> Option<Vec<VertexId>> {
    if h.len() < 3 {
        return None;
    }
    let inner = |v: VertexId| -> Vec<VertexId> {
        g.incident(v)
            .iter()
            .map(|&(w, _)| w)
            .filter(|w| h.contains(w))
            .collect()
    };
    if h.iter().any(|&v| inner(v).len() != 2) {
        return None;
    }
    let start = *h.iter().next()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = inner(start)[0];
    while cur != start {
        order.push(cur);
        let nb = inner(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    (order.len() == h.len()).then_some(order)
}

fn matches_cnplus(g: &Graph, cycle: &[VertexId], e0: &ConflictGraph) -> bool {
    let n = cycle.len();
    // Cₙ⁺ numbering: cycle edge vᵢvᵢ₊₁ -> i, pendant at vᵢ -> n + i.
    let mut label: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (i, &v) in cycle.iter().enumerate() {
        let next = cycle[(i + 1) % n];
        let Some(e) = g.edge_between(v, next) else {
            return false;
        };
        label.insert(e, i);
        let pendants: Vec<EdgeId> = g
            .incident(v)
            .iter()
            .filter(|(w, _)| !cycle.contains(w))
            .map(|&(_, e)| e)
            .collect();
        if pendants.len() != 1 {
            return false;
        }
        label.insert(pendants[0], n + i);
    }
    if label.len() != e0.len() {
        return false;
    }
    let expected = gen_cnplus(n)
        .and_then(|c| conflict_graph(&c, None))
        .map(|c| c.edge_pairs())
        .unwrap_or_default();
    let actual: BTreeSet<(usize, usize)> = e0
        .edge_pairs()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (label[&a], label[&b]);
            (x.min(y), x.max(y))
        })
        .collect();
    actual == expected
}
