use std::collections::{BTreeSet, HashSet, VecDeque};

use super::canonical::lex_min_optimal;
use crate::error::{Error, Result};
use crate::graph::{Certificate, VertexId, WeightedDigraph};
use crate::weight::Weight;

/// Above this many distinct subset sums the exact minimiser gives up.
const SUBSET_SUM_CAP: usize = 1 << 20;

struct CutSearch<'a, W> {
    graph: &'a WeightedDigraph<W>,
    pairs: &'a [(VertexId, VertexId)],
    deletable: Vec<bool>,
    failed: HashSet<Vec<bool>>,
}

impl<'a, W: Weight> CutSearch<'a, W> {
    fn new(
        graph: &'a WeightedDigraph<W>,
        pairs: &'a [(VertexId, VertexId)],
        protected: &[bool],
    ) -> Self {
        let endpoints: BTreeSet<VertexId> = pairs.iter().flat_map(|&(s, t)| [s, t]).collect();
        let deletable = graph
            .vertex_ids()
            .map(|v| {
                !endpoints.contains(&v) && !protected[v.0] && graph.vertex_weight(v).is_some()
            })
            .collect();
        CutSearch { graph, pairs, deletable, failed: HashSet::new() }
    }

    fn weight(&self, v: usize) -> W {
        self.graph.vertices()[v].weight.clone().unwrap_or_else(W::zero)
    }

    /// Surviving demanded path with the fewest deletable vertices, returned as
    /// those deletable vertices. `None` when every pair is already severed.
    fn surviving_path(&self, removed: &[bool]) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for &(s, t) in self.pairs {
            if let Some(path) = self.cheapest_path(s, t, removed) {
                if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                    best = Some(path);
                }
            }
        }
        best
    }

    /// 0-1 BFS where entering a deletable vertex costs one.
    fn cheapest_path(&self, s: VertexId, t: VertexId, removed: &[bool]) -> Option<Vec<usize>> {
        let n = self.graph.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s.0] = 0;
        let mut deque = VecDeque::from([s.0]);
        while let Some(u) = deque.pop_front() {
            if u == t.0 {
                break;
            }
            for &e in self.graph.out_edges(VertexId(u)) {
                let w = self.graph.endpoints(e).1 .0;
                if removed[w] {
                    continue;
                }
                let step = usize::from(self.deletable[w]);
                if dist[u] + step < dist[w] {
                    dist[w] = dist[u] + step;
                    parent[w] = u;
                    if step == 0 {
                        deque.push_front(w);
                    } else {
                        deque.push_back(w);
                    }
                }
            }
        }
        if dist[t.0] == usize::MAX {
            return None;
        }
        let mut out = Vec::new();
        let mut cur = t.0;
        while cur != s.0 {
            if self.deletable[cur] {
                out.push(cur);
            }
            cur = parent[cur];
        }
        out.sort_unstable();
        Some(out)
    }

    fn run(&mut self, removed: &mut Vec<bool>, residual: W) -> bool {
        let Some(path) = self.surviving_path(removed) else {
            return true;
        };
        for v in path {
            let w = self.weight(v);
            if w > residual {
                continue;
            }
            removed[v] = true;
            if !self.failed.contains(removed) {
                if self.run(removed, residual.clone() - w) {
                    return true;
                }
                self.failed.insert(removed.clone());
            }
            removed[v] = false;
        }
        false
    }
}

fn check_pairs<W: Weight>(graph: &WeightedDigraph<W>, pairs: &[(VertexId, VertexId)]) -> Result<()> {
    for &(s, t) in pairs {
        graph.check_vertex(s)?;
        graph.check_vertex(t)?;
        if s == t {
            return Err(Error::InvalidDemand(format!("pair ({0}, {0})", graph.label(s))));
        }
    }
    Ok(())
}

fn ordered_pairs(terminals: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for &a in terminals {
        for &b in terminals {
            if a != b {
                out.push((a, b));
            }
        }
    }
    out
}

/// Branching search with extra undeletable vertices. Returns the deleted set.
pub(crate) fn multicut_within_budget_protected<W: Weight>(
    graph: &WeightedDigraph<W>,
    pairs: &[(VertexId, VertexId)],
    budget: &W,
    protected: &[bool],
    preremoved: &[bool],
) -> Option<Vec<usize>> {
    if *budget < W::zero() {
        return None;
    }
    let mut search = CutSearch::new(graph, pairs, protected);
    let mut removed = preremoved.to_vec();
    search.run(&mut removed, budget.clone()).then(|| {
        (0..removed.len()).filter(|&v| removed[v] && !preremoved[v]).collect()
    })
}

/// Some vertex cut of weight at most `budget` separating every listed ordered
/// pair, or `None` if there is none. Pair endpoints are never deleted.
pub fn multicut_within_budget<W: Weight>(
    graph: &WeightedDigraph<W>,
    pairs: &[(VertexId, VertexId)],
    budget: &W,
) -> Result<Option<Certificate<W>>> {
    check_pairs(graph, pairs)?;
    let none = vec![false; graph.vertex_count()];
    multicut_within_budget_protected(graph, pairs, budget, &none, &none)
        .map(|cut| Certificate::priced_cut(graph, cut.into_iter().map(VertexId)))
        .transpose()
}

/// [`multicut_within_budget`] over all ordered pairs of `terminals`.
pub fn multiway_cut_within_budget<W: Weight>(
    graph: &WeightedDigraph<W>,
    terminals: &[VertexId],
    budget: &W,
) -> Result<Option<Certificate<W>>> {
    if terminals.iter().collect::<BTreeSet<_>>().len() != terminals.len() {
        return Err(Error::InvalidDemand("repeated terminal".into()));
    }
    multicut_within_budget(graph, &ordered_pairs(terminals), budget)
}

/// Optimal multicut with the lexicographically smallest member set.
pub fn min_multicut_exact<W: Weight>(
    graph: &WeightedDigraph<W>,
    pairs: &[(VertexId, VertexId)],
) -> Result<(W, Certificate<W>)> {
    check_pairs(graph, pairs)?;
    let n = graph.vertex_count();
    let none = vec![false; n];
    let probe = CutSearch::new(graph, pairs, &none);
    let candidates: Vec<usize> = (0..n).filter(|&v| probe.deletable[v]).collect();
    if let Some(&(s, t)) = pairs.iter().find(|&&(s, t)| graph.find_edge(s, t).is_some()) {
        return Err(Error::Infeasible(format!(
            "direct edge {} -> {}",
            graph.label(s),
            graph.label(t)
        )));
    }
    if probe.surviving_path(&probe.deletable).is_some() {
        return Err(Error::Infeasible("a pair stays connected through undeletable vertices".into()));
    }

    let mut sums = BTreeSet::from([W::zero()]);
    for &v in &candidates {
        let w = probe.weight(v);
        let shifted: Vec<W> = sums.iter().map(|s| s.clone() + w.clone()).collect();
        sums.extend(shifted);
        if sums.len() > SUBSET_SUM_CAP {
            return Err(Error::Refused(format!("more than {SUBSET_SUM_CAP} distinct cut costs")));
        }
    }
    let sums: Vec<W> = sums.into_iter().collect();
    let feasible = |b: &W| multicut_within_budget_protected(graph, pairs, b, &none, &none).is_some();
    // The largest sum deletes everything deletable, which was checked above.
    let (mut lo, mut hi) = (0usize, sums.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&sums[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let opt = sums[lo].clone();

    let mask = |ids: &[usize]| {
        let mut m = vec![false; n];
        for &i in ids {
            m[i] = true;
        }
        m
    };
    let members = lex_min_optimal(
        &candidates,
        |p| probe.surviving_path(&mask(p)).is_none(),
        |inn, out| {
            let forced = inn.iter().fold(W::zero(), |acc, &v| acc + probe.weight(v));
            let residual = opt.clone() - forced;
            multicut_within_budget_protected(graph, pairs, &residual, &mask(out), &mask(inn))
                .is_some()
        },
    )
    .expect("an optimal cut exists");
    let cert = Certificate::priced_cut(graph, members.into_iter().map(VertexId))?;
    debug_assert_eq!(cert.cost, opt);
    Ok((opt, cert))
}

/// [`min_multicut_exact`] over all ordered pairs of `terminals`.
pub fn min_multiway_cut_exact<W: Weight>(
    graph: &WeightedDigraph<W>,
    terminals: &[VertexId],
) -> Result<(W, Certificate<W>)> {
    min_multicut_exact(graph, &ordered_pairs(terminals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;
    use crate::Rational;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    /// t1 -> a -> t2 and t2 -> a' -> t1.
    fn star() -> (WeightedDigraph<Rational>, Vec<VertexId>) {
        let mut b = GraphBuilder::new();
        let t1 = b.add_vertex("t1", None).unwrap();
        let t2 = b.add_vertex("t2", None).unwrap();
        let a = b.add_vertex("a", Some(int(1))).unwrap();
        let a2 = b.add_vertex("a'", Some(int(1))).unwrap();
        for (x, y) in [(t1, a), (a, t2), (t2, a2), (a2, t1)] {
            b.add_edge(x, y, None).unwrap();
        }
        (b.build(), vec![t1, t2])
    }

    #[test]
    fn multiway_examples() {
        let (g, terms) = star();
        let cut = multiway_cut_within_budget(&g, &terms, &int(2)).unwrap().unwrap();
        assert_eq!(cut.cost, int(2));
        assert!(multiway_cut_within_budget(&g, &terms, &int(1)).unwrap().is_none());

        let mut b = GraphBuilder::<Rational>::new();
        let x = b.add_vertex("x", None).unwrap();
        let y = b.add_vertex("y", None).unwrap();
        let cut = multiway_cut_within_budget(&b.build(), &[x, y], &int(0)).unwrap().unwrap();
        assert!(cut.is_empty());
        assert_eq!(cut.cost, int(0));
    }

    #[test]
    fn multicut_examples() {
        let mut b = GraphBuilder::new();
        let s = b.add_vertex("s", None).unwrap();
        let a = b.add_vertex("a", Some(int(1))).unwrap();
        let t = b.add_vertex("t", None).unwrap();
        b.add_edge(s, a, None).unwrap();
        b.add_edge(a, s, None).unwrap();
        b.add_edge(a, t, None).unwrap();
        b.add_edge(t, a, None).unwrap();
        let g = b.build();
        let cut = multicut_within_budget(&g, &[(s, t)], &int(1)).unwrap().unwrap();
        assert_eq!(cut.vertices(), BTreeSet::from([a]));
        let cut = multicut_within_budget(&g, &[(s, t), (t, s)], &int(1)).unwrap().unwrap();
        assert_eq!(cut.vertices(), BTreeSet::from([a]));
        assert!(multicut_within_budget(&g, &[(s, t)], &Rational::new(1, 2)).unwrap().is_none());
        assert!(multicut_within_budget(&g, &[(s, t)], &int(-1)).unwrap().is_none());
    }

    #[test]
    fn exact_examples() {
        let (g, terms) = star();
        let (cost, cut) = min_multiway_cut_exact(&g, &terms).unwrap();
        assert_eq!(cost, int(2));
        assert_eq!(cut.len(), 2);
        let (cost, cut) = min_multicut_exact(&g, &[]).unwrap();
        assert_eq!(cost, int(0));
        assert!(cut.is_empty());

        let mut b = g.to_builder();
        b.link("t1", "t2", None).unwrap();
        assert!(matches!(min_multiway_cut_exact(&b.build(), &terms), Err(Error::Infeasible(_))));
    }

    #[test]
    fn exact_prefers_smallest_ids_on_ties() {
        let mut b = GraphBuilder::new();
        let s = b.add_vertex("s", None).unwrap();
        let t = b.add_vertex("t", None).unwrap();
        let a = b.add_vertex("a", Some(int(2))).unwrap();
        let c = b.add_vertex("c", Some(int(1))).unwrap();
        let d = b.add_vertex("d", Some(int(1))).unwrap();
        // s -> a -> t and s -> c -> d -> t plus a -> c: {a, c} and {a, d} both cost 3.
        for (x, y) in [(s, a), (a, t), (s, c), (c, d), (d, t), (a, c)] {
            b.add_edge(x, y, None).unwrap();
        }
        let (cost, cut) = min_multicut_exact(&b.build(), &[(s, t)]).unwrap();
        assert_eq!(cost, int(3));
        assert_eq!(cut.vertices(), BTreeSet::from([a, c]));
    }
}
