//! Seeded instance generators. All randomness in the crate's tests and CLI
//! flows through a `ChaCha8Rng` built from an explicit seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{GraphBuilder, VertexId};
use crate::mcsi::UGraph;
use crate::{Digraph, Rational};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` vertices labelled `v/i` with integer weights in `1..=max_weight`;
/// each ordered pair becomes an arc with probability `density`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, density: f64, max_weight: i64) -> Digraph {
    let mut b = GraphBuilder::new();
    let ids: Vec<VertexId> = (0..n)
        .map(|i| {
            let w = Rational::from_integer(rng.gen_range(1..=max_weight));
            b.add_vertex(format!("v/{i}"), Some(w)).expect("fresh label")
        })
        .collect();
    for &u in &ids {
        for &v in &ids {
            if u != v && rng.gen_bool(density) {
                b.add_edge(u, v, None).expect("fresh arc");
            }
        }
    }
    b.build()
}

/// `k` ordered pairs of distinct vertices, avoiding pairs joined by a direct
/// arc so that every pair can in principle be cut.
pub fn random_pairs(rng: &mut impl Rng, graph: &Digraph, k: usize) -> Vec<(VertexId, VertexId)> {
    let ids: Vec<VertexId> = graph.vertex_ids().collect();
    let candidates: Vec<(VertexId, VertexId)> = ids
        .iter()
        .flat_map(|&s| ids.iter().map(move |&t| (s, t)))
        .filter(|&(s, t)| s != t && graph.find_edge(s, t).is_none())
        .collect();
    candidates.choose_multiple(rng, k).copied().collect()
}

/// Erdős–Rényi graph on `n` vertices.
pub fn random_ugraph(rng: &mut impl Rng, n: usize, density: f64) -> UGraph {
    let mut g = UGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Adds all edges among `ell` random vertices and returns them sorted.
pub fn plant_clique(rng: &mut impl Rng, g: &mut UGraph, ell: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = rand::seq::index::sample(rng, g.vertex_count(), ell).into_vec();
    chosen.sort_unstable();
    for (k, &u) in chosen.iter().enumerate() {
        for &v in &chosen[k + 1..] {
            g.add_edge(u, v).expect("in range");
        }
    }
    chosen
}

/// A random bipartite-free graph: every edge joins the two halves of a
/// random split, so no triangle exists.
pub fn random_triangle_free(rng: &mut impl Rng, n: usize, density: f64) -> UGraph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = UGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(density) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}
