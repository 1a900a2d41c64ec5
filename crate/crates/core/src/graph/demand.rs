use std::collections::BTreeSet;

use super::digraph::{VertexId, WeightedDigraph};
use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DemandMode {
    CutPairs,
    CutMultiway,
    NetworkPairs,
    NetworkAll,
}

impl DemandMode {
    pub fn is_cut(self) -> bool {
        matches!(self, DemandMode::CutPairs | DemandMode::CutMultiway)
    }

    pub fn uses_pairs(self) -> bool {
        matches!(self, DemandMode::CutPairs | DemandMode::NetworkPairs)
    }
}

/// What it means for a cut or network to solve an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemandSpec {
    pub mode: DemandMode,
    pub pairs: Vec<(VertexId, VertexId)>,
    pub terminals: Vec<VertexId>,
}

impl DemandSpec {
    pub fn cut_pairs(pairs: Vec<(VertexId, VertexId)>) -> Self {
        DemandSpec { mode: DemandMode::CutPairs, pairs, terminals: Vec::new() }
    }

    pub fn cut_multiway(terminals: Vec<VertexId>) -> Self {
        DemandSpec { mode: DemandMode::CutMultiway, pairs: Vec::new(), terminals }
    }

    pub fn network_pairs(pairs: Vec<(VertexId, VertexId)>) -> Self {
        DemandSpec { mode: DemandMode::NetworkPairs, pairs, terminals: Vec::new() }
    }

    pub fn network_all(terminals: Vec<VertexId>) -> Self {
        DemandSpec { mode: DemandMode::NetworkAll, pairs: Vec::new(), terminals }
    }

    /// Every ordered pair that must be separated or connected. Set modes
    /// expand to all ordered pairs of distinct terminals.
    pub fn ordered_pairs(&self) -> Vec<(VertexId, VertexId)> {
        if self.mode.uses_pairs() {
            return self.pairs.clone();
        }
        let mut out = Vec::new();
        for &a in &self.terminals {
            for &b in &self.terminals {
                if a != b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// All vertices that appear as a source, sink or terminal.
    pub fn endpoints(&self) -> BTreeSet<VertexId> {
        if self.mode.uses_pairs() {
            self.pairs.iter().flat_map(|&(s, t)| [s, t]).collect()
        } else {
            self.terminals.iter().copied().collect()
        }
    }

    pub fn validate<W: Weight>(&self, graph: &WeightedDigraph<W>) -> Result<()> {
        if self.mode.uses_pairs() {
            if self.pairs.is_empty() {
                return Err(Error::InvalidDemand("no demand pairs".into()));
            }
            for &(s, t) in &self.pairs {
                graph.check_vertex(s)?;
                graph.check_vertex(t)?;
                if s == t {
                    return Err(Error::InvalidDemand(format!(
                        "pair with identical endpoints {}",
                        graph.label(s)
                    )));
                }
            }
        } else {
            if self.terminals.len() < 2 {
                return Err(Error::InvalidDemand("fewer than two terminals".into()));
            }
            let mut seen = BTreeSet::new();
            for &t in &self.terminals {
                graph.check_vertex(t)?;
                if !seen.insert(t) {
                    return Err(Error::InvalidDemand(format!(
                        "terminal {} listed twice",
                        graph.label(t)
                    )));
                }
            }
        }
        Ok(())
    }
}
