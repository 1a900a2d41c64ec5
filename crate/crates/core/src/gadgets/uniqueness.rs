//! Uniqueness gadget `U_n`.
//!
//! Row `i` is the directed path `0_i → 1_i → 2_i → 3_i`. Two hubs tie the rows
//! together: connectors `s1 → 1_i` and `2_i → s2`, plus the bridge `s2 → s1`.
//! Any edge set letting both hubs reach the right boundary and be reached
//! from the left boundary costs at least `6B`, with equality only for the six
//! edges that single out one row.

use std::collections::BTreeSet;

use super::labels::RowKey;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, GraphBuilder, VertexId, WeightedDigraph};
use crate::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessLayout {
    pub rows: Vec<RowKey>,
    /// `path[r]` holds `0_r, 1_r, 2_r, 3_r`.
    pub path: Vec<[VertexId; 4]>,
    pub s1: VertexId,
    pub s2: VertexId,
    pub base: Vec<[EdgeId; 3]>,
    pub connect_in: Vec<EdgeId>,
    pub connect_out: Vec<EdgeId>,
    pub bridge: EdgeId,
}

impl UniquenessLayout {
    pub fn intra_edges(&self) -> BTreeSet<EdgeId> {
        let mut all: BTreeSet<EdgeId> = self.base.iter().flatten().copied().collect();
        all.extend(&self.connect_in);
        all.extend(&self.connect_out);
        all.insert(self.bridge);
        all
    }

    /// The six edges represented by row `r` (0-based).
    pub fn represented(&self, r: usize) -> BTreeSet<EdgeId> {
        let mut set: BTreeSet<EdgeId> = self.base[r].iter().copied().collect();
        set.extend([self.connect_in[r], self.connect_out[r], self.bridge]);
        set
    }

    /// Row (0-based) whose representation equals `subset` restricted to this
    /// gadget.
    pub fn represented_row(&self, subset: &BTreeSet<EdgeId>) -> Option<usize> {
        let own: BTreeSet<EdgeId> = self.intra_edges().intersection(subset).copied().collect();
        if own.len() != 6 {
            return None;
        }
        (0..self.rows.len()).find(|&r| self.represented(r) == own)
    }

    /// Both hubs reach some `3_i` and are reached from some `0_i` using only
    /// selected gadget edges.
    pub fn in_out<W: Weight>(&self, graph: &WeightedDigraph<W>, subset: &BTreeSet<EdgeId>) -> bool {
        let intra = self.intra_edges();
        let edge_ok = |e: EdgeId| subset.contains(&e) && intra.contains(&e);
        [self.s1, self.s2].iter().all(|&hub| {
            let fwd = graph.reach_from(hub, |_| true, edge_ok);
            let bwd = graph.reach_to(hub, |_| true, edge_ok);
            self.path.iter().any(|p| fwd[p[3].0]) && self.path.iter().any(|p| bwd[p[0].0])
        })
    }
}

fn name(prefix: &str, tail: impl std::fmt::Display) -> String {
    if prefix.is_empty() {
        tail.to_string()
    } else {
        format!("{prefix}/{tail}")
    }
}

pub(crate) fn add_uniqueness<W: Weight>(
    b: &mut GraphBuilder<W>,
    prefix: &str,
    rows: &[RowKey],
    weight: &W,
) -> Result<UniquenessLayout> {
    let s1 = b.add_vertex(name(prefix, "s1"), None)?;
    let s2 = b.add_vertex(name(prefix, "s2"), None)?;
    let mut path = Vec::with_capacity(rows.len());
    for &row in rows {
        let mut ids = [VertexId(0); 4];
        for (slot, id) in ids.iter_mut().enumerate() {
            *id = b.add_vertex(name(prefix, format!("{slot}/{row}")), None)?;
        }
        path.push(ids);
    }
    let w = || Some(weight.clone());
    let mut layout = UniquenessLayout {
        rows: rows.to_vec(),
        path: path.clone(),
        s1,
        s2,
        base: vec![],
        connect_in: vec![],
        connect_out: vec![],
        bridge: EdgeId(0),
    };
    for p in &path {
        layout.base.push([b.add_edge(p[0], p[1], w())?, b.add_edge(p[1], p[2], w())?, b.add_edge(p[2], p[3], w())?]);
        layout.connect_in.push(b.add_edge(s1, p[1], w())?);
        layout.connect_out.push(b.add_edge(p[2], s2, w())?);
    }
    layout.bridge = b.add_edge(s2, s1, w())?;
    Ok(layout)
}

#[derive(Debug, Clone)]
pub struct UniquenessGadget<W> {
    pub n: usize,
    pub b: W,
    pub graph: WeightedDigraph<W>,
    pub layout: UniquenessLayout,
}

pub fn build_uniqueness_gadget<W: Weight>(n: usize, b: W) -> Result<UniquenessGadget<W>> {
    let mut builder = GraphBuilder::new();
    let rows: Vec<RowKey> = (1..=n).map(RowKey::Index).collect();
    let layout = add_uniqueness(&mut builder, "", &rows, &b)?;
    Ok(UniquenessGadget { n, b, graph: builder.build(), layout })
}

pub fn in_out_satisfied<W: Weight>(g: &UniquenessGadget<W>, subset: &BTreeSet<EdgeId>) -> bool {
    g.layout.in_out(&g.graph, subset)
}

/// 1-based row represented by exactly `subset`.
pub fn representation_of<W: Weight>(g: &UniquenessGadget<W>, subset: &BTreeSet<EdgeId>) -> Option<usize> {
    if !subset.is_subset(&g.layout.intra_edges()) {
        return None;
    }
    g.layout.represented_row(subset).map(|r| r + 1)
}

/// Largest edge count [`verify_macro_lemma`] will enumerate subsets of.
pub const MACRO_LEMMA_EDGE_CAP: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacroLemmaReport<W> {
    pub n: usize,
    pub subsets_checked: u64,
    pub in_out_subsets: u64,
    pub min_inout_weight: W,
    /// In-out subsets of weight exactly `6B`, as edge sets.
    pub weight_6b_subsets: Vec<BTreeSet<EdgeId>>,
    /// Rows (1-based) those subsets represent, `None` where a subset
    /// represents no row.
    pub represented: Vec<Option<usize>>,
    pub holds: bool,
}

/// Enumerates every edge subset of `U_n` and checks the weight bound.
pub fn verify_macro_lemma<W: Weight>(n: usize, b: W) -> Result<MacroLemmaReport<W>> {
    if n == 0 {
        return Err(Error::BadShape("gadget needs at least one row".into()));
    }
    let m = 5 * n + 1;
    if m > MACRO_LEMMA_EDGE_CAP {
        return Err(Error::Refused(format!("{m} edges exceed the enumeration cap {MACRO_LEMMA_EDGE_CAP}")));
    }
    let g = build_uniqueness_gadget(n, b.clone())?;
    let ends: Vec<(u32, u32)> = g.graph.edges().iter().map(|e| (e.from.0 as u32, e.to.0 as u32)).collect();
    let weights: Vec<W> = g.graph.edges().iter().map(|e| e.weight.clone().expect("weighted")).collect();
    let left: u32 = g.layout.path.iter().map(|p| 1 << p[0].0).sum();
    let right: u32 = g.layout.path.iter().map(|p| 1 << p[3].0).sum();

    let closure = |mask: u32, start: usize, reverse: bool| -> u32 {
        let mut seen = 1u32 << start;
        loop {
            let before = seen;
            for (k, &(u, v)) in ends.iter().enumerate() {
                let (u, v) = if reverse { (v, u) } else { (u, v) };
                if mask >> k & 1 == 1 && seen >> u & 1 == 1 {
                    seen |= 1 << v;
                }
            }
            if seen == before {
                return seen;
            }
        }
    };
    let six_b = b.clone() * W::from_int(6);
    let mut report = MacroLemmaReport {
        n,
        subsets_checked: 0,
        in_out_subsets: 0,
        min_inout_weight: W::zero(),
        weight_6b_subsets: vec![],
        represented: vec![],
        holds: true,
    };
    let mut min: Option<W> = None;
    for mask in 0u32..(1 << m) {
        report.subsets_checked += 1;
        let ok = [g.layout.s1.0, g.layout.s2.0]
            .iter()
            .all(|&hub| closure(mask, hub, false) & right != 0 && closure(mask, hub, true) & left != 0);
        if !ok {
            continue;
        }
        report.in_out_subsets += 1;
        let weight = (0..m).filter(|k| mask >> k & 1 == 1).fold(W::zero(), |acc, k| acc + weights[k].clone());
        if min.as_ref().is_none_or(|w| weight < *w) {
            min = Some(weight.clone());
        }
        if weight == six_b {
            let set: BTreeSet<EdgeId> = (0..m).filter(|k| mask >> k & 1 == 1).map(EdgeId).collect();
            report.represented.push(representation_of(&g, &set));
            report.weight_6b_subsets.push(set);
        }
    }
    report.min_inout_weight = min.unwrap_or_else(W::zero);
    let mut rows: Vec<usize> = report.represented.iter().flatten().copied().collect();
    rows.sort_unstable();
    report.holds = report.min_inout_weight >= six_b
        && report.represented.iter().all(Option::is_some)
        && rows == (1..=n).collect::<Vec<_>>();
    Ok(report)
}
