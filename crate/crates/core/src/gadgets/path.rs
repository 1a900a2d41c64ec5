//! Path gadget `P_n`: `n` disjoint arcs `0_i → 1_i`, one per row.

use super::labels::RowKey;
use crate::error::Result;
use crate::graph::{EdgeId, GraphBuilder, VertexId, WeightedDigraph};
use crate::Weight;

/// Ids of one embedded path gadget, row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathLayout {
    pub rows: Vec<RowKey>,
    pub zero: Vec<VertexId>,
    pub one: Vec<VertexId>,
    pub arcs: Vec<EdgeId>,
}

impl PathLayout {
    pub fn row_of(&self, key: RowKey) -> Option<usize> {
        self.rows.iter().position(|&r| r == key)
    }
}

fn name(prefix: &str, slot: u8, row: RowKey) -> String {
    if prefix.is_empty() {
        format!("{slot}/{row}")
    } else {
        format!("{prefix}/{slot}/{row}")
    }
}

pub(crate) fn add_path<W: Weight>(
    b: &mut GraphBuilder<W>,
    prefix: &str,
    rows: &[RowKey],
    weight: &W,
) -> Result<PathLayout> {
    let mut layout = PathLayout { rows: rows.to_vec(), zero: vec![], one: vec![], arcs: vec![] };
    for &row in rows {
        let u = b.add_vertex(name(prefix, 0, row), None)?;
        let v = b.add_vertex(name(prefix, 1, row), None)?;
        layout.arcs.push(b.add_edge(u, v, Some(weight.clone()))?);
        layout.zero.push(u);
        layout.one.push(v);
    }
    Ok(layout)
}

#[derive(Debug, Clone)]
pub struct PathGadget<W> {
    pub n: usize,
    pub b: W,
    pub graph: WeightedDigraph<W>,
    pub layout: PathLayout,
}

pub fn build_path_gadget<W: Weight>(n: usize, b: W) -> Result<PathGadget<W>> {
    let mut builder = GraphBuilder::new();
    let rows: Vec<RowKey> = (1..=n).map(RowKey::Index).collect();
    let layout = add_path(&mut builder, "", &rows, &b)?;
    Ok(PathGadget { n, b, graph: builder.build(), layout })
}
