use crate::error::{Error, Result};
use crate::graph::{network_connects, Certificate, DemandMode, DemandSpec, EdgeId, WeightedDigraph};
use crate::weight::Weight;

pub const DEFAULT_EDGE_CAP: usize = 24;

/// Cheapest network of weight at most `budget` meeting `demand`, searched
/// exhaustively. See [`min_network_within_budget_capped`].
pub fn min_network_within_budget<W: Weight>(
    graph: &WeightedDigraph<W>,
    demand: &DemandSpec,
    budget: &W,
) -> Result<Option<Certificate<W>>> {
    min_network_within_budget_capped(graph, demand, budget, DEFAULT_EDGE_CAP)
}

/// Edges that could lie on a demanded path: some source reaches the tail and
/// the head reaches some sink.
fn candidate_edges<W: Weight>(graph: &WeightedDigraph<W>, demand: &DemandSpec) -> Vec<EdgeId> {
    let n = graph.vertex_count();
    let mut useful = vec![false; graph.edge_count()];
    let mark = |sources: &[_], sinks: &[_], useful: &mut Vec<bool>| {
        let mut fwd = vec![false; n];
        let mut bwd = vec![false; n];
        for &s in sources {
            let r = graph.reach_from(s, |_| true, |_| true);
            fwd.iter_mut().zip(r).for_each(|(a, b)| *a |= b);
        }
        for &t in sinks {
            let r = graph.reach_to(t, |_| true, |_| true);
            bwd.iter_mut().zip(r).for_each(|(a, b)| *a |= b);
        }
        for e in graph.edge_ids() {
            let (u, v) = graph.endpoints(e);
            if fwd[u.0] && bwd[v.0] {
                useful[e.0] = true;
            }
        }
    };
    if demand.mode == DemandMode::NetworkAll {
        mark(&demand.terminals, &demand.terminals, &mut useful);
    } else {
        for &(s, t) in &demand.pairs {
            mark(&[s], &[t], &mut useful);
        }
    }
    graph.edge_ids().filter(|e| useful[e.0]).collect()
}

struct NetSearch<'a, W> {
    graph: &'a WeightedDigraph<W>,
    demand: &'a DemandSpec,
    candidates: Vec<EdgeId>,
    weights: Vec<W>,
    budget: W,
    best: Option<(W, Vec<usize>)>,
}

impl<W: Weight> NetSearch<'_, W> {
    fn connects(&self, state: &[Option<bool>], optimistic: bool) -> bool {
        let mut allowed = vec![false; self.graph.edge_count()];
        for (k, e) in self.candidates.iter().enumerate() {
            allowed[e.0] = match state[k] {
                Some(b) => b,
                None => optimistic,
            };
        }
        network_connects(self.graph, self.demand, |e| allowed[e.0])
    }

    // Include-first order meets feasible sets in increasing lexicographic
    // order, so the first optimum found is the canonical one.
    fn dfs(&mut self, k: usize, state: &mut Vec<Option<bool>>, cost: W) {
        let over = match &self.best {
            Some((c, _)) => cost >= *c,
            None => cost > self.budget,
        };
        if over {
            return;
        }
        if self.connects(state, false) {
            let ids = (0..k).filter(|&i| state[i] == Some(true)).map(|i| self.candidates[i].0).collect();
            self.best = Some((cost, ids));
            return;
        }
        if k == self.candidates.len() {
            return;
        }
        state[k] = Some(true);
        self.dfs(k + 1, state, cost.clone() + self.weights[k].clone());
        state[k] = Some(false);
        if self.connects(state, true) {
            self.dfs(k + 1, state, cost);
        }
        state[k] = None;
    }
}

/// Exact search over subsets of the pruned candidate edges; refuses when more
/// than `cap` candidates remain. Among optimal networks the lexicographically
/// smallest edge-id set wins.
pub fn min_network_within_budget_capped<W: Weight>(
    graph: &WeightedDigraph<W>,
    demand: &DemandSpec,
    budget: &W,
    cap: usize,
) -> Result<Option<Certificate<W>>> {
    if demand.mode.is_cut() {
        return Err(Error::ModeMismatch(format!("{:?} is not a network demand", demand.mode)));
    }
    demand.validate(graph)?;
    let candidates = candidate_edges(graph, demand);
    if candidates.len() > cap {
        return Err(Error::Refused(format!(
            "{} candidate edges exceed the oracle cap of {cap}",
            candidates.len()
        )));
    }
    let weights = candidates
        .iter()
        .map(|&e| {
            graph.edge_weight(e).cloned().ok_or_else(|| {
                let (u, v) = graph.endpoints(e);
                Error::UnweightedMember(format!("{}->{}", graph.label(u), graph.label(v)))
            })
        })
        .collect::<Result<Vec<W>>>()?;
    if *budget < W::zero() {
        return Ok(None);
    }
    let mut search = NetSearch {
        graph,
        demand,
        weights,
        budget: budget.clone(),
        best: None,
        candidates,
    };
    let mut state = vec![None; search.candidates.len()];
    if search.connects(&state, true) {
        search.dfs(0, &mut state, W::zero());
    }
    match search.best {
        Some((_, ids)) => Ok(Some(Certificate::priced_network(graph, ids.into_iter().map(EdgeId))?)),
        None => Ok(None),
    }
}
