use std::collections::VecDeque;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

pub const DEFAULT_CUBIC_RETRIES: usize = 10_000;

/// `C_n^+`: vertices `0..n` form the cycle (`vᵢ = i`), vertex `n + i` is the
/// pendant tip at `vᵢ`. Edge `i` is `vᵢvᵢ₊₁` (so edge 0 doubles as `eₙ`),
/// edge `n + i` is the pendant `fᵢ`.
pub fn gen_cnplus(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("C_n^+ needs n >= 3, got {n}")));
    }
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let pendants = (0..n).map(|i| (i, n + i));
    let pairs: Vec<_> = cycle.chain(pendants).collect();
    Graph::new(2 * n, &pairs)
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let pairs: Vec<_> = outer.chain(spokes).chain(inner).collect();
    Graph::new(10, &pairs).expect("petersen graph is simple")
}

/// Smallest vertex count of a cubic graph with the given girth.
fn moore_bound(girth: usize) -> usize {
    if girth <= 3 {
        return 4;
    }
    let r = (girth / 2) as u32;
    if girth % 2 == 1 {
        1 + 3 * ((1usize << r) - 1)
    } else {
        2 * ((1usize << r) - 1)
    }
}

/// Random 3-regular simple graph with girth at least `min_girth`, built by
/// random pairing of vertex stubs. A pairing step that would create a loop,
/// a parallel edge or a short cycle is never taken; a dead end restarts the
/// pairing, up to [`DEFAULT_CUBIC_RETRIES`] times.
pub fn gen_random_cubic(n: usize, min_girth: usize, seed: u64) -> Result<Graph> {
    gen_random_cubic_with_retries(n, min_girth, seed, DEFAULT_CUBIC_RETRIES)
}

pub fn gen_random_cubic_with_retries(n: usize, min_girth: usize, seed: u64, retries: usize) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(Error::Generation(format!(
            "cubic graph needs an even vertex count, got {n}"
        )));
    }
    if n < moore_bound(min_girth) {
        return Err(Error::Generation(format!(
            "no cubic graph on {n} vertices has girth >= {min_girth}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..retries {
        if let Some(g) = try_pairing(n, min_girth, &mut rng) {
            debug_assert!(g.is_regular(3));
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no cubic graph with n={n}, girth>={min_girth} after {retries} attempts"
    )))
}

fn try_pairing(n: usize, min_girth: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut g = Graph::empty(n);
    let mut stubs = vec![3usize; n];
    let mut candidates = Vec::with_capacity(n);
    loop {
        let open: usize = stubs.iter().sum();
        if open == 0 {
            return Some(g);
        }
        // a uniformly random open stub
        let mut pick = rng.random_range(0..open);
        let u = stubs
            .iter()
            .position(|&s| {
                if pick < s {
                    true
                } else {
                    pick -= s;
                    false
                }
            })
            .expect("pick is below the stub total");
        let far = far_vertices(&g, u, min_girth.saturating_sub(1));
        candidates.clear();
        for w in 0..n {
            if w != u && stubs[w] > 0 && far[w] {
                candidates.extend(std::iter::repeat_n(w, stubs[w]));
            }
        }
        let &w = candidates.choose(rng)?;
        g.push_edge(u, w).expect("candidate pairs are simple");
        stubs[u] -= 1;
        stubs[w] -= 1;
    }
}

/// `far[w]` is true when `w` is at distance at least `min_dist` from `u`
/// (or unreachable).
fn far_vertices(g: &Graph, u: VertexId, min_dist: usize) -> Vec<bool> {
    let n = g.vertex_count();
    let mut far = vec![true; n];
    if min_dist == 0 {
        return far;
    }
    let mut dist = vec![usize::MAX; n];
    dist[u] = 0;
    far[u] = false;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if dist[x] + 1 >= min_dist {
            continue;
        }
        for &(y, _) in g.incident(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                far[y] = false;
                queue.push_back(y);
            }
        }
    }
    far
}

/// Random simple graph whose edge weight is at most 6. Candidate pairs are
/// visited in a seeded random order and kept when every edge weight stays
/// within bound, until a random edge budget is met.
pub fn gen_random_weight6(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let budget = rng.random_range(n / 2..=3 * n).max(1);
    for (u, v) in pairs {
        if g.edge_count() >= budget {
            break;
        }
        if weight_ok_after_adding(&g, u, v) {
            g.push_edge(u, v).expect("fresh pair");
        }
    }
    g
}

fn weight_ok_after_adding(g: &Graph, u: VertexId, v: VertexId) -> bool {
    let du = g.degree(u) + 1;
    let dv = g.degree(v) + 1;
    du + dv <= 6
        && g.incident(u).iter().all(|&(w, _)| du + g.degree(w) <= 6)
        && g.incident(v).iter().all(|&(w, _)| dv + g.degree(w) <= 6)
}
