use std::collections::{BTreeMap, BTreeSet};

use super::demand::{DemandMode, DemandSpec};
use super::digraph::{EdgeId, VertexId, WeightedDigraph};
use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    VertexCut,
    EdgeNetwork,
}

/// A proposed solution: deleted vertices or selected edges, with the cost the
/// producer claims for it. Members are raw vertex or edge indices depending on
/// `kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<W> {
    pub kind: CertificateKind,
    pub members: BTreeSet<usize>,
    pub cost: W,
}

impl<W: Weight> Certificate<W> {
    pub fn vertex_cut(members: impl IntoIterator<Item = VertexId>, cost: W) -> Self {
        Certificate {
            kind: CertificateKind::VertexCut,
            members: members.into_iter().map(|v| v.0).collect(),
            cost,
        }
    }

    pub fn edge_network(members: impl IntoIterator<Item = EdgeId>, cost: W) -> Self {
        Certificate {
            kind: CertificateKind::EdgeNetwork,
            members: members.into_iter().map(|e| e.0).collect(),
            cost,
        }
    }

    /// Builds a certificate whose cost is computed from the graph.
    pub fn priced_cut(
        graph: &WeightedDigraph<W>,
        members: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().map(|v| v.0).collect();
        let cost = cost_of(graph, &members, CertificateKind::VertexCut)?;
        Ok(Certificate { kind: CertificateKind::VertexCut, members, cost })
    }

    pub fn priced_network(
        graph: &WeightedDigraph<W>,
        members: impl IntoIterator<Item = EdgeId>,
    ) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().map(|e| e.0).collect();
        let cost = cost_of(graph, &members, CertificateKind::EdgeNetwork)?;
        Ok(Certificate { kind: CertificateKind::EdgeNetwork, members, cost })
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.members.iter().map(|&m| VertexId(m)).collect()
    }

    pub fn edges(&self) -> BTreeSet<EdgeId> {
        self.members.iter().map(|&m| EdgeId(m)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Exact total weight of `members`, read as vertices or edges per `kind`.
pub fn cost_of<W: Weight>(
    graph: &WeightedDigraph<W>,
    members: &BTreeSet<usize>,
    kind: CertificateKind,
) -> Result<W> {
    let mut sum = W::zero();
    for &m in members {
        let w = match kind {
            CertificateKind::VertexCut => {
                let v = graph.vertex(VertexId(m))?;
                v.weight.as_ref().ok_or_else(|| Error::UnweightedMember(v.label.clone()))?
            }
            CertificateKind::EdgeNetwork => {
                let e = graph.edge(EdgeId(m))?;
                e.weight.as_ref().ok_or_else(|| {
                    Error::UnweightedMember(format!(
                        "{}->{}",
                        graph.label(e.from),
                        graph.label(e.to)
                    ))
                })?
            }
        };
        sum = sum + w.clone();
    }
    Ok(sum)
}

fn check_cost<W: Weight>(graph: &WeightedDigraph<W>, cert: &Certificate<W>) -> Result<()> {
    let computed = cost_of(graph, &cert.members, cert.kind)?;
    if computed != cert.cost {
        return Err(Error::CostMismatch {
            stored: cert.cost.to_string(),
            computed: computed.to_string(),
        });
    }
    Ok(())
}

/// Does deleting `cut.members` sever every demanded pair?
pub fn verify_cut<W: Weight>(
    graph: &WeightedDigraph<W>,
    demand: &DemandSpec,
    cut: &Certificate<W>,
) -> Result<bool> {
    if !demand.mode.is_cut() {
        return Err(Error::ModeMismatch(format!("{:?} is not a cut demand", demand.mode)));
    }
    if cut.kind != CertificateKind::VertexCut {
        return Err(Error::ModeMismatch("expected a vertex cut certificate".into()));
    }
    demand.validate(graph)?;
    let removed = cut.vertices();
    for &v in &removed {
        graph.check_vertex(v)?;
    }
    if let Some(v) = demand.endpoints().intersection(&removed).next() {
        return Err(Error::EndpointDeleted(graph.label(*v).to_string()));
    }
    check_cost(graph, cut)?;
    let mut removed_mask = vec![false; graph.vertex_count()];
    for v in &removed {
        removed_mask[v.0] = true;
    }
    Ok(all_pairs(demand, |src| {
        graph.reach_from(src, |v| !removed_mask[v.0], |_| true)
    })
    .iter()
    .all(|&reached| !reached))
}

/// Does the edge set `net.members` connect every demanded pair?
pub fn verify_network<W: Weight>(
    graph: &WeightedDigraph<W>,
    demand: &DemandSpec,
    net: &Certificate<W>,
) -> Result<bool> {
    if demand.mode.is_cut() {
        return Err(Error::ModeMismatch(format!("{:?} is not a network demand", demand.mode)));
    }
    if net.kind != CertificateKind::EdgeNetwork {
        return Err(Error::ModeMismatch("expected an edge network certificate".into()));
    }
    demand.validate(graph)?;
    check_cost(graph, net)?;
    let mut allowed = vec![false; graph.edge_count()];
    for &e in &net.members {
        allowed[e] = true;
    }
    Ok(network_connects(graph, demand, |e| allowed[e.0]))
}

/// Connectivity test shared with the search oracle.
pub(crate) fn network_connects<W: Weight>(
    graph: &WeightedDigraph<W>,
    demand: &DemandSpec,
    edge_ok: impl Fn(EdgeId) -> bool,
) -> bool {
    if demand.mode == DemandMode::NetworkAll {
        // Strong connectivity of the terminal set: one forward and one
        // backward search from any terminal suffice.
        let root = demand.terminals[0];
        let fwd = graph.reach_from(root, |_| true, &edge_ok);
        let bwd = graph.reach_to(root, |_| true, &edge_ok);
        return demand.terminals.iter().all(|t| fwd[t.0] && bwd[t.0]);
    }
    all_pairs(demand, |src| graph.reach_from(src, |_| true, &edge_ok))
        .iter()
        .all(|&reached| reached)
}

/// For each demanded pair, whether its sink is reachable from its source under
/// the supplied search. One search per distinct source.
fn all_pairs(demand: &DemandSpec, search: impl Fn(VertexId) -> Vec<bool>) -> Vec<bool> {
    let mut cache: BTreeMap<VertexId, Vec<bool>> = BTreeMap::new();
    demand
        .ordered_pairs()
        .into_iter()
        .map(|(s, t)| cache.entry(s).or_insert_with(|| search(s))[t.0])
        .collect()
}
