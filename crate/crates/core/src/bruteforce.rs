//! Exhaustive reference enumerators.
//!
//! These walk every subset in increasing bitmask order and share no code with
//! the solvers beyond plain reachability, so they serve as independent
//! oracles for the solvers' tests. They are exponential; keep inputs tiny.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::graph::{DemandSpec, EdgeId, VertexId, WeightedDigraph};
use crate::mcsi::UGraph;
use crate::Weight;

/// Largest ground set the enumerators accept.
pub const ENUMERATION_LIMIT: usize = 22;

fn best_subset<W: Weight, T: Copy + Ord>(
    ground: &[T],
    weight: impl Fn(T) -> W,
    feasible: impl Fn(&BTreeSet<T>) -> bool,
) -> Option<(W, BTreeSet<T>)> {
    assert!(ground.len() <= ENUMERATION_LIMIT, "ground set too large to enumerate");
    let mut best: Option<(W, Vec<T>)> = None;
    for mask in 0u64..(1 << ground.len()) {
        let set: Vec<T> = (0..ground.len()).filter(|k| mask >> k & 1 == 1).map(|k| ground[k]).collect();
        let cost = set.iter().fold(W::zero(), |acc, &x| acc + weight(x));
        let better = match &best {
            None => true,
            Some((c, s)) => cost < *c || (cost == *c && set < *s),
        };
        if better && feasible(&set.iter().copied().collect()) {
            best = Some((cost, set));
        }
    }
    best.map(|(c, s)| (c, s.into_iter().collect()))
}

/// Cheapest vertex set avoiding all pair endpoints that separates every
/// pair; `None` when no such set exists. Ties go to the lexicographically
/// smallest sorted id list.
pub fn min_multicut<W: Weight>(
    graph: &WeightedDigraph<W>,
    pairs: &[(VertexId, VertexId)],
) -> Option<(W, BTreeSet<VertexId>)> {
    let endpoints: BTreeSet<VertexId> = pairs.iter().flat_map(|&(s, t)| [s, t]).collect();
    let ground: Vec<VertexId> = graph.vertex_ids().filter(|v| !endpoints.contains(v)).collect();
    best_subset(
        &ground,
        |v| graph.vertex_weight(v).cloned().expect("weighted vertex"),
        |cut| pairs.iter().all(|&(s, t)| !graph.reaches(s, t, cut, None).expect("valid ids")),
    )
}

pub fn min_multiway_cut<W: Weight>(
    graph: &WeightedDigraph<W>,
    terminals: &[VertexId],
) -> Option<(W, BTreeSet<VertexId>)> {
    let pairs: Vec<(VertexId, VertexId)> =
        terminals.iter().copied().tuple_combinations().flat_map(|(a, b)| [(a, b), (b, a)]).collect();
    min_multicut(graph, &pairs)
}

pub fn min_st_cut<W: Weight>(graph: &WeightedDigraph<W>, s: VertexId, t: VertexId) -> Option<(W, BTreeSet<VertexId>)> {
    min_multicut(graph, &[(s, t)])
}

/// Cheapest edge set meeting a network demand.
pub fn min_network<W: Weight>(graph: &WeightedDigraph<W>, demand: &DemandSpec) -> Option<(W, BTreeSet<EdgeId>)> {
    let ground: Vec<EdgeId> = graph.edge_ids().collect();
    let pairs = demand.ordered_pairs();
    best_subset(
        &ground,
        |e| graph.edge_weight(e).cloned().expect("weighted edge"),
        |net| {
            let none = BTreeSet::new();
            pairs.iter().all(|&(s, t)| graph.reaches(s, t, &none, Some(net)).expect("valid ids"))
        },
    )
}

/// Does `g` contain a clique on `ell` vertices?
pub fn has_clique(g: &UGraph, ell: usize) -> bool {
    if ell == 0 {
        return true;
    }
    (0..g.vertex_count()).combinations(ell).any(|vs| vs.iter().tuple_combinations().all(|(&u, &v)| g.has_edge(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    #[test]
    fn st_examples() {
        let mut b = GraphBuilder::new();
        for (l, w) in [("s", 1), ("a", 1), ("b", 2), ("t", 1)] {
            b.add_vertex(l, Some(w as i64)).unwrap();
        }
        for (u, v) in [("s", "a"), ("a", "t"), ("s", "b"), ("b", "t")] {
            b.link(u, v, None).unwrap();
        }
        let g = b.build();
        let (s, t) = (g.by_label("s").unwrap(), g.by_label("t").unwrap());
        let (cost, cut) = min_st_cut(&g, s, t).unwrap();
        assert_eq!(cost, 3);
        assert_eq!(cut.len(), 2);
        assert!(has_clique(&UGraph::complete(3), 3));
        assert!(!has_clique(&UGraph::complete_bipartite(2, 2), 3));
    }
}
