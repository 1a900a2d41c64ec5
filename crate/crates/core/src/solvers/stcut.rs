use num_integer::Integer;

use super::canonical::lex_min_optimal;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Certificate, VertexId, WeightedDigraph};
use crate::weight::Weight;

/// Vertex capacities scaled to a common integer denominator.
struct Scaled {
    cap: Vec<Option<i128>>,
    infinity: i128,
}

impl Scaled {
    fn new<W: Weight>(
        graph: &WeightedDigraph<W>,
        s: VertexId,
        t: VertexId,
        protected: &[bool],
    ) -> Self {
        let fractions: Vec<Option<(i128, i128)>> = graph
            .vertex_ids()
            .map(|v| {
                if v == s || v == t || protected[v.0] {
                    None
                } else {
                    graph.vertex_weight(v).map(Weight::to_fraction)
                }
            })
            .collect();
        let scale = fractions.iter().flatten().fold(1i128, |acc, &(_, d)| acc.lcm(&d));
        let cap: Vec<Option<i128>> =
            fractions.iter().map(|f| f.map(|(n, d)| n * (scale / d))).collect();
        let infinity = cap.iter().flatten().sum::<i128>() + 1;
        Scaled { cap, infinity }
    }

    /// Min cut value with `removed` already deleted and `protected` made
    /// undeletable, or `None` when no finite cut exists.
    fn min_cut<W: Weight>(
        &self,
        graph: &WeightedDigraph<W>,
        s: VertexId,
        t: VertexId,
        removed: &[bool],
        protected: &[bool],
    ) -> Option<i128> {
        let n = graph.vertex_count();
        let mut net = FlowNetwork::new(2 * n);
        for v in graph.vertex_ids() {
            if removed[v.0] {
                continue;
            }
            let cap = match self.cap[v.0] {
                Some(c) if !protected[v.0] => c,
                _ => self.infinity,
            };
            net.add_arc(2 * v.0, 2 * v.0 + 1, cap);
        }
        for e in graph.edges() {
            if !removed[e.from.0] && !removed[e.to.0] {
                net.add_arc(2 * e.from.0 + 1, 2 * e.to.0, self.infinity);
            }
        }
        let flow = net.max_flow(2 * s.0 + 1, 2 * t.0, self.infinity);
        (flow < self.infinity).then_some(flow)
    }
}

/// Minimum-weight vertex separator between `s` and `t`.
///
/// Among all optimal separators the lexicographically smallest id set is
/// returned. Unweighted vertices are treated as undeletable.
pub fn min_vertex_st_cut<W: Weight>(
    graph: &WeightedDigraph<W>,
    s: VertexId,
    t: VertexId,
) -> Result<(W, Certificate<W>)> {
    min_vertex_st_cut_protected(graph, s, t, &vec![false; graph.vertex_count()])
}

/// [`min_vertex_st_cut`] with additional undeletable vertices.
pub(crate) fn min_vertex_st_cut_protected<W: Weight>(
    graph: &WeightedDigraph<W>,
    s: VertexId,
    t: VertexId,
    protected: &[bool],
) -> Result<(W, Certificate<W>)> {
    graph.check_vertex(s)?;
    graph.check_vertex(t)?;
    if s == t {
        return Err(Error::InvalidDemand("source equals sink".into()));
    }
    if graph.find_edge(s, t).is_some() {
        return Err(Error::Infeasible(format!(
            "direct edge {} -> {}",
            graph.label(s),
            graph.label(t)
        )));
    }
    let n = graph.vertex_count();
    let scaled = Scaled::new(graph, s, t, protected);
    let none = vec![false; n];
    let opt = scaled
        .min_cut(graph, s, t, &none, &none)
        .ok_or_else(|| Error::Infeasible("no finite vertex cut".into()))?;

    let candidates: Vec<usize> =
        graph.vertex_ids().filter(|v| scaled.cap[v.0].is_some()).map(|v| v.0).collect();
    let mask = |ids: &[usize]| {
        let mut m = vec![false; n];
        for &i in ids {
            m[i] = true;
        }
        m
    };
    let members = lex_min_optimal(
        &candidates,
        |p| {
            let removed = mask(p);
            !graph.reach_from(s, |v| !removed[v.0], |_| true)[t.0]
        },
        |inn, out| {
            let forced: i128 = inn.iter().map(|&v| scaled.cap[v].unwrap_or(0)).sum();
            if forced > opt {
                return false;
            }
            scaled
                .min_cut(graph, s, t, &mask(inn), &mask(out))
                .is_some_and(|rest| forced + rest <= opt)
        },
    )
    .expect("an optimal cut exists");
    let cert = Certificate::priced_cut(graph, members.into_iter().map(VertexId))?;
    Ok((cert.cost.clone(), cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;
    use crate::Rational;

    fn build(weights: &[(&str, i64)], edges: &[(&str, &str)]) -> WeightedDigraph<Rational> {
        let mut b = GraphBuilder::new();
        b.add_vertex("s", None).unwrap();
        b.add_vertex("t", None).unwrap();
        for &(l, w) in weights {
            b.add_vertex(l, Some(Rational::from_integer(w))).unwrap();
        }
        for &(f, t) in edges {
            b.link(f, t, None).unwrap();
        }
        b.build()
    }

    fn labels(g: &WeightedDigraph<Rational>, c: &Certificate<Rational>) -> Vec<String> {
        c.vertices().iter().map(|&v| g.label(v).to_string()).collect()
    }

    #[test]
    fn single_vertex() {
        let g = build(&[("a", 3)], &[("s", "a"), ("a", "t")]);
        let (cost, cut) = min_vertex_st_cut(&g, VertexId(0), VertexId(1)).unwrap();
        assert_eq!(cost, Rational::from_integer(3));
        assert_eq!(labels(&g, &cut), ["a"]);
    }

    #[test]
    fn two_parallel_routes() {
        let g = build(&[("a", 1), ("b", 2)], &[("s", "a"), ("a", "t"), ("s", "b"), ("b", "t")]);
        let (cost, cut) = min_vertex_st_cut(&g, VertexId(0), VertexId(1)).unwrap();
        assert_eq!(cost, Rational::from_integer(3));
        assert_eq!(labels(&g, &cut), ["a", "b"]);
    }

    #[test]
    fn cheaper_later_vertex() {
        let g = build(&[("a", 5), ("b", 2)], &[("s", "a"), ("a", "b"), ("b", "t")]);
        let (cost, cut) = min_vertex_st_cut(&g, VertexId(0), VertexId(1)).unwrap();
        assert_eq!(cost, Rational::from_integer(2));
        assert_eq!(labels(&g, &cut), ["b"]);
    }

    #[test]
    fn ties_take_smallest_ids() {
        let g = build(&[("a", 1), ("b", 1)], &[("s", "a"), ("a", "b"), ("b", "t")]);
        let (_, cut) = min_vertex_st_cut(&g, VertexId(0), VertexId(1)).unwrap();
        assert_eq!(labels(&g, &cut), ["a"]);
    }

    #[test]
    fn fractional_weights_are_exact() {
        let mut b = GraphBuilder::new();
        let s = b.add_vertex("s", None).unwrap();
        let t = b.add_vertex("t", None).unwrap();
        let a = b.add_vertex("a", Some(Rational::new(1, 3))).unwrap();
        let c = b.add_vertex("c", Some(Rational::new(1, 6))).unwrap();
        for (x, y) in [(s, a), (a, t), (s, c), (c, t)] {
            b.add_edge(x, y, None).unwrap();
        }
        let (cost, _) = min_vertex_st_cut(&b.build(), s, t).unwrap();
        assert_eq!(cost, Rational::new(1, 2));
    }

    #[test]
    fn direct_edge_is_infeasible() {
        let g = build(&[], &[("s", "t")]);
        assert!(matches!(min_vertex_st_cut(&g, VertexId(0), VertexId(1)), Err(Error::Infeasible(_))));
    }
}
