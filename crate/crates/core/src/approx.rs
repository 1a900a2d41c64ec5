//! Pairing approximation for directed vertex multicut.
//!
//! Demand pairs are grouped two at a time. For each group two heavy vertices
//! `r` and `q` are wired so that `r ⇝ q` and `q ⇝ r` survive exactly when the
//! first and second pair survive, and a multiway cut between them with budget
//! `p` handles both pairs at once. With `k` pairs this costs at most
//! `⌈k/2⌉·p` whenever a multicut of cost `p` exists.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{verify_cut, Certificate, DemandSpec, GraphBuilder, VertexId, WeightedDigraph};
use crate::solvers::{min_vertex_st_cut_protected, multicut_within_budget_protected};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApproxOutcome<W> {
    /// No multicut of cost at most `p` exists.
    NoSolutionAtBudget,
    Cut(Certificate<W>),
}

fn augment<W: Weight>(
    builder: &mut GraphBuilder<W>,
    pairs: &[(VertexId, VertexId)],
    first: usize,
    p: &W,
) -> Result<Vec<(VertexId, VertexId)>> {
    let heavy = p.clone() + W::one();
    let mut added = Vec::new();
    for (j, chunk) in pairs.chunks(2).enumerate() {
        let j = first + j;
        let [(s1, t1), (s2, t2)] = [chunk[0], chunk[1]];
        let r = builder.add_vertex(format!("r/{j}"), Some(heavy.clone()))?;
        let q = builder.add_vertex(format!("q/{j}"), Some(heavy.clone()))?;
        builder.add_edge(r, s1, None)?;
        builder.add_edge(t1, q, None)?;
        builder.add_edge(q, s2, None)?;
        builder.add_edge(t2, r, None)?;
        added.push((r, q));
    }
    Ok(added)
}

/// Adds `r_j`, `q_j` (weight `p + 1`) for every consecutive group of two
/// pairs, with arcs `r_j → s_{2j−1}`, `t_{2j−1} → q_j`, `q_j → s_{2j}` and
/// `t_{2j} → r_j`. Labels are `r/j` and `q/j`, with `j` counted from one.
pub fn pair_terminals<W: Weight>(
    graph: &WeightedDigraph<W>,
    pairs: &[(VertexId, VertexId)],
    p: &W,
) -> Result<(WeightedDigraph<W>, Vec<(VertexId, VertexId)>)> {
    if pairs.len() % 2 == 1 {
        return Err(Error::OddK(pairs.len()));
    }
    for &(s, t) in pairs {
        graph.check_vertex(s)?;
        graph.check_vertex(t)?;
    }
    let mut builder = graph.to_builder();
    let added = augment(&mut builder, pairs, 1, p)?;
    Ok((builder.build(), added))
}

/// Runs the pairing approximation with budget `p`.
///
/// Each group is solved on the original graph extended by that group's own
/// `r`/`q` vertices only. Demand endpoints are never deleted.
pub fn approx_multicut<W: Weight>(
    graph: &WeightedDigraph<W>,
    pairs: &[(VertexId, VertexId)],
    p: &W,
) -> Result<ApproxOutcome<W>> {
    if pairs.is_empty() {
        return Ok(ApproxOutcome::Cut(Certificate::vertex_cut([], W::zero())));
    }
    let demand = DemandSpec::cut_pairs(pairs.to_vec());
    demand.validate(graph)?;
    let n = graph.vertex_count();
    let mut endpoints = vec![false; n];
    for v in demand.endpoints() {
        endpoints[v.0] = true;
    }

    let k = pairs.len();
    let mut cut: BTreeSet<VertexId> = BTreeSet::new();
    for (j, group) in pairs[..k - k % 2].chunks(2).enumerate() {
        let mut builder = graph.to_builder();
        let (r, q) = augment(&mut builder, group, j + 1, p)?[0];
        let sub = builder.build();
        let mut protected = endpoints.clone();
        protected.resize(sub.vertex_count(), true);
        let none = vec![false; sub.vertex_count()];
        match multicut_within_budget_protected(&sub, &[(r, q), (q, r)], p, &protected, &none) {
            Some(part) => cut.extend(part.into_iter().map(VertexId)),
            None => return Ok(ApproxOutcome::NoSolutionAtBudget),
        }
    }
    if k % 2 == 1 {
        let (s, t) = pairs[k - 1];
        match min_vertex_st_cut_protected(graph, s, t, &endpoints) {
            Ok((cost, last)) if cost <= *p => cut.extend(last.vertices()),
            Ok(_) | Err(Error::Infeasible(_)) => return Ok(ApproxOutcome::NoSolutionAtBudget),
            Err(e) => return Err(e),
        }
    }

    let cert = Certificate::priced_cut(graph, cut)?;
    let rounds = W::from_int(k.div_ceil(2) as i64);
    assert!(cert.cost <= rounds * p.clone(), "approximation bound violated");
    assert!(verify_cut(graph, &demand, &cert)?, "approximation returned an infeasible cut");
    Ok(ApproxOutcome::Cut(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn shared_middle() -> (WeightedDigraph<Rational>, Vec<(VertexId, VertexId)>) {
        let mut b = GraphBuilder::new();
        let a = b.add_vertex("a", Some(int(1))).unwrap();
        let mut pairs = Vec::new();
        for i in 1..=2 {
            let s = b.add_vertex(format!("s{i}"), None).unwrap();
            let t = b.add_vertex(format!("t{i}"), None).unwrap();
            b.add_edge(s, a, None).unwrap();
            b.add_edge(a, t, None).unwrap();
            pairs.push((s, t));
        }
        (b.build(), pairs)
    }

    #[test]
    fn augmentation_shape() {
        let (g, pairs) = shared_middle();
        let (aug, added) = pair_terminals(&g, &pairs, &int(7)).unwrap();
        assert_eq!(added.len(), 1);
        assert_eq!(aug.vertex_count(), g.vertex_count() + 2);
        assert_eq!(aug.edge_count(), g.edge_count() + 4);
        assert_eq!(aug.vertex_weight(added[0].0), Some(&int(8)));
        assert_eq!(aug.label(added[0].1), "q/1");

        let four = [pairs[0], pairs[1], pairs[1], pairs[0]];
        let (aug, added) = pair_terminals(&g, &four, &int(1)).unwrap();
        assert_eq!(added.len(), 2);
        assert_eq!(aug.edge_count(), g.edge_count() + 8);
        assert!(matches!(pair_terminals(&g, &pairs[..1], &int(1)), Err(Error::OddK(1))));
    }

    #[test]
    fn shared_vertex_cut() {
        let (g, pairs) = shared_middle();
        match approx_multicut(&g, &pairs, &int(1)).unwrap() {
            ApproxOutcome::Cut(c) => {
                assert_eq!(c.cost, int(1));
                assert_eq!(c.vertices(), BTreeSet::from([g.by_label("a").unwrap()]));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            approx_multicut(&g, &pairs, &Rational::new(1, 2)).unwrap(),
            ApproxOutcome::NoSolutionAtBudget
        );
    }

    #[test]
    fn single_pair_uses_min_cut() {
        let (g, pairs) = shared_middle();
        match approx_multicut(&g, &pairs[..1], &int(3)).unwrap() {
            ApproxOutcome::Cut(c) => assert_eq!(c.cost, int(1)),
            other => panic!("{other:?}"),
        }
    }
}
