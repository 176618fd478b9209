//! Strong edge colorings: verification, exact solvers, and the forbidden and
//! available color sets left by a partial coloring.

mod io;

pub use io::{parse_coloring, parse_lists};
mod solver;

pub use solver::ListProblem;

use std::collections::BTreeSet;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{conflict_graph, Configuration, EdgeId, Graph};

/// Per-edge color lists. Lists are kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<u32>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    /// Every edge gets the palette `{1, ..., k}`.
    pub fn uniform(edges: usize, k: u32) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); edges],
        }
    }

    /// Every edge gets `size` distinct colors drawn uniformly from
    /// `{1, ..., palette}`.
    pub fn random<R: Rng + ?Sized>(edges: usize, size: usize, palette: u32, rng: &mut R) -> Result<Self> {
        if size > palette as usize {
            return Err(Error::input(format!(
                "lists of size {size} from a palette of {palette}"
            )));
        }
        let lists = (0..edges)
            .map(|_| {
                index::sample(rng, palette as usize, size)
                    .into_iter()
                    .map(|i| i as u32 + 1)
                    .collect()
            })
            .collect();
        Ok(ListAssignment::new(lists))
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, e: EdgeId) -> &[u32] {
        &self.lists[e]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.lists.len() != g.edge_count() {
            return Err(Error::input(format!(
                "list assignment covers {} edges, graph has {}",
                self.lists.len(),
                g.edge_count()
            )));
        }
        Ok(())
    }
}

/// A (possibly partial) color per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongColoring {
    colors: Vec<Option<u32>>,
}

impl StrongColoring {
    pub fn uncolored(edges: usize) -> Self {
        StrongColoring {
            colors: vec![None; edges],
        }
    }

    pub fn total(colors: Vec<u32>) -> Self {
        StrongColoring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn from_partial(colors: Vec<Option<u32>>) -> Self {
        StrongColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<u32> {
        self.colors.get(e).copied().flatten()
    }

    pub fn set(&mut self, e: EdgeId, color: Option<u32>) {
        self.colors[e] = color;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colors(&self) -> &[Option<u32>] {
        &self.colors
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two edges that see each other share a color.
    Conflict { e: EdgeId, f: EdgeId, color: u32 },
    /// An edge's color is missing from its list.
    NotInList { e: EdgeId, color: u32 },
}

/// All violations of `c` as a strong coloring of `g` (and of the lists, when
/// given). An empty result means `c` is a strong L-edge-coloring.
pub fn verify(g: &Graph, c: &StrongColoring, lists: Option<&ListAssignment>) -> Result<Vec<Violation>> {
    if c.len() != g.edge_count() {
        return Err(Error::input(format!(
            "coloring has {} entries, graph has {} edges",
            c.len(),
            g.edge_count()
        )));
    }
    if let Some(e) = (0..c.len()).find(|&e| c.get(e).is_none()) {
        return Err(Error::input(format!("edge {e} is uncolored")));
    }
    if let Some(l) = lists {
        l.check_covers(g)?;
    }
    let color = |e: EdgeId| c.get(e).expect("total");
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        if let Some(l) = lists {
            if l.list(e).binary_search(&color(e)).is_err() {
                out.push(Violation::NotInList { e, color: color(e) });
            }
        }
        for f in g.seen_by(e) {
            if e < f && color(e) == color(f) {
                out.push(Violation::Conflict { e, f, color: color(e) });
            }
        }
    }
    Ok(out)
}

fn edge_adjacency(g: &Graph) -> Vec<Vec<usize>> {
    conflict_graph(g, None).expect("full edge set").adjacency()
}

/// A strong coloring with colors from `{1, ..., k}`, or `None` if `g` has
/// none.
pub fn solve_strong_k(g: &Graph, k: u32) -> Option<StrongColoring> {
    let adj = edge_adjacency(g);
    let lists = ListAssignment::uniform(g.edge_count(), k);
    ListProblem {
        adjacency: &adj,
        lists: lists.lists(),
    }
    .solve_uniform()
    .map(StrongColoring::total)
}

/// Exact strong chromatic index by increasing `k` from the maximum degree.
pub fn strong_chromatic_index(g: &Graph) -> u32 {
    let mut k = g.max_degree() as u32;
    while solve_strong_k(g, k).is_none() {
        k += 1;
    }
    k
}

/// A strong coloring with every edge colored from its own list.
pub fn solve_strong_list(g: &Graph, lists: &ListAssignment) -> Result<Option<StrongColoring>> {
    lists.check_covers(g)?;
    let adj = edge_adjacency(g);
    Ok(ListProblem {
        adjacency: &adj,
        lists: lists.lists(),
    }
    .solve()
    .map(StrongColoring::total))
}

/// Forbidden, available and surviving list size for one E₀ edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeAvailability {
    pub edge: EdgeId,
    /// Colors on the outside edges this edge sees, F(e).
    pub forbidden: BTreeSet<u32>,
    /// S(e) = L(e) minus F(e).
    pub available: Vec<u32>,
    /// |L(e)| - |F(e)|, the guaranteed lower bound on |S(e)|.
    pub bound: i64,
}

impl EdgeAvailability {
    pub fn size(&self) -> usize {
        self.available.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvailabilityReport {
    /// One entry per E₀ position of the configuration.
    pub edges: Vec<EdgeAvailability>,
}

fn check_partial(g: &Graph, cfg: &Configuration, partial: &StrongColoring) -> Result<()> {
    if cfg.host() != g {
        return Err(Error::input("configuration was built for a different graph"));
    }
    if partial.len() != g.edge_count() {
        return Err(Error::input("partial coloring does not match the graph"));
    }
    if let Some(&e) = cfg.e0().edge_ids().iter().find(|&&e| partial.get(e).is_some()) {
        return Err(Error::input(format!("partial coloring colors E0 edge {e}")));
    }
    if let Some(e) = cfg.remainder_edges().into_iter().find(|&e| partial.get(e).is_none()) {
        return Err(Error::input(format!(
            "partial coloring leaves edge {e} of G - V(H) uncolored"
        )));
    }
    Ok(())
}

/// F(e), S(e) and s(e) for every E₀ edge given a coloring of `G - V(H)`.
pub fn availability(
    g: &Graph,
    cfg: &Configuration,
    partial: &StrongColoring,
    lists: &ListAssignment,
) -> Result<AvailabilityReport> {
    check_partial(g, cfg, partial)?;
    lists.check_covers(g)?;
    let edges = cfg
        .e0()
        .edge_ids()
        .iter()
        .zip(cfg.external_neighbors())
        .map(|(&e, outside)| {
            let forbidden: BTreeSet<u32> = outside.iter().filter_map(|&f| partial.get(f)).collect();
            let list = lists.list(e);
            let available = list.iter().copied().filter(|c| !forbidden.contains(c)).collect();
            EdgeAvailability {
                edge: e,
                bound: list.len() as i64 - forbidden.len() as i64,
                forbidden,
                available,
            }
        })
        .collect();
    Ok(AvailabilityReport { edges })
}

/// Extends a coloring of `G - V(H)` to all of `G` by list-coloring E₀ from
/// the surviving lists, or `None` if no extension exists.
pub fn extend_partial(
    g: &Graph,
    cfg: &Configuration,
    partial: &StrongColoring,
    lists: &ListAssignment,
) -> Result<Option<StrongColoring>> {
    let report = availability(g, cfg, partial, lists)?;
    let adj = cfg.all_e0_conflicts().adjacency();
    let s_lists: Vec<Vec<u32>> = report.edges.iter().map(|a| a.available.clone()).collect();
    let Some(choice) = (ListProblem {
        adjacency: &adj,
        lists: &s_lists,
    })
    .solve() else {
        return Ok(None);
    };
    let mut out = partial.clone();
    for (&e, c) in cfg.e0().edge_ids().iter().zip(choice) {
        out.set(e, Some(c));
    }
    Ok(Some(out))
}

/// A list coloring of `G - V(H)` (E₀ left uncolored), used as the outside
/// coloring φ in experiments.
pub fn color_remainder(g: &Graph, cfg: &Configuration, lists: &ListAssignment) -> Result<Option<StrongColoring>> {
    lists.check_covers(g)?;
    let rest = cfg.remainder_edges();
    let (sub, origin) = g.edge_subgraph(&rest)?;
    let sub_lists = ListAssignment::new(origin.iter().map(|&e| lists.list(e).to_vec()).collect());
    Ok(solve_strong_list(&sub, &sub_lists)?.map(|c| {
        let mut out = StrongColoring::uncolored(g.edge_count());
        for (i, &e) in origin.iter().enumerate() {
            out.set(e, c.get(i));
        }
        out
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_cnplus, induced_config, petersen};

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &pairs).unwrap()
    }

    #[test]
    fn verify_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let v = verify(&p3, &StrongColoring::total(vec![1, 1]), None).unwrap();
        assert_eq!(v, vec![Violation::Conflict { e: 0, f: 1, color: 1 }]);
        let c6 = cycle(6);
        assert!(verify(&c6, &StrongColoring::total(vec![1, 2, 3, 1, 2, 3]), None)
            .unwrap()
            .is_empty());
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        let l = ListAssignment::new(vec![vec![1, 2]]);
        let v = verify(&edge, &StrongColoring::total(vec![7]), Some(&l)).unwrap();
        assert_eq!(v, vec![Violation::NotInList { e: 0, color: 7 }]);
        assert!(verify(&edge, &StrongColoring::uncolored(1), None).is_err());
    }

    #[test]
    fn solve_k_examples() {
        let c = solve_strong_k(&cycle(6), 3).unwrap();
        assert!(verify(&cycle(6), &c, None).unwrap().is_empty());
        assert!(solve_strong_k(&cycle(5), 4).is_none());
        assert_eq!(solve_strong_k(&Graph::empty(0), 0), Some(StrongColoring::total(vec![])));
    }

    #[test]
    fn chromatic_index_examples() {
        assert_eq!(strong_chromatic_index(&cycle(5)), 5);
        assert_eq!(strong_chromatic_index(&cycle(6)), 3);
        assert_eq!(strong_chromatic_index(&cycle(7)), 4);
        assert_eq!(strong_chromatic_index(&petersen()), 5);
        assert_eq!(strong_chromatic_index(&Graph::empty(3)), 0);
    }

    #[test]
    fn list_examples() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        let c = solve_strong_list(&edge, &ListAssignment::new(vec![vec![7]]))
            .unwrap()
            .unwrap();
        assert_eq!(c.get(0), Some(7));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = solve_strong_list(&p3, &ListAssignment::new(vec![vec![1, 2], vec![1, 2]]))
            .unwrap()
            .unwrap();
        assert_ne!(c.get(0), c.get(1));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(solve_strong_list(&star, &ListAssignment::uniform(3, 2)).unwrap(), None);
        assert!(solve_strong_list(&star, &ListAssignment::uniform(2, 3)).is_err());
    }

    #[test]
    fn availability_without_outside_edges() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let cfg = induced_config(&g, &BTreeSet::from([0])).unwrap();
        let lists = ListAssignment::new(vec![vec![3]]);
        let partial = StrongColoring::uncolored(1);
        let report = availability(&g, &cfg, &partial, &lists).unwrap();
        assert!(report.edges[0].forbidden.is_empty());
        assert_eq!(report.edges[0].size(), 1);
        let ext = extend_partial(&g, &cfg, &partial, &lists).unwrap().unwrap();
        assert_eq!(ext.get(0), Some(3));
    }

    #[test]
    fn extension_fails_on_equal_singletons() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cfg = induced_config(&g, &BTreeSet::from([1])).unwrap();
        let lists = ListAssignment::new(vec![vec![1], vec![1]]);
        let partial = StrongColoring::uncolored(2);
        assert_eq!(extend_partial(&g, &cfg, &partial, &lists).unwrap(), None);
    }

    #[test]
    fn partial_must_match_remainder() {
        let g = gen_cnplus(6).unwrap();
        let cfg = induced_config(&g, &BTreeSet::from([0])).unwrap();
        let lists = ListAssignment::uniform(g.edge_count(), 10);
        let mut partial = StrongColoring::uncolored(g.edge_count());
        assert!(availability(&g, &cfg, &partial, &lists).is_err());
        for e in cfg.remainder_edges() {
            partial.set(e, Some(1));
        }
        assert!(availability(&g, &cfg, &partial, &lists).is_ok());
        partial.set(cfg.e0().edge_ids()[0], Some(2));
        assert!(availability(&g, &cfg, &partial, &lists).is_err());
    }
}
