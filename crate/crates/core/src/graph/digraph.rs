use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex<W> {
    pub label: String,
    pub weight: Option<W>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge<W> {
    pub from: VertexId,
    pub to: VertexId,
    pub weight: Option<W>,
}

/// A simple directed graph with optional exact vertex and edge weights.
///
/// Graphs are immutable once built. Use [`GraphBuilder`] (or
/// [`WeightedDigraph::to_builder`]) to derive new ones.
#[derive(Debug, Clone)]
pub struct WeightedDigraph<W> {
    vertices: Vec<Vertex<W>>,
    edges: Vec<Edge<W>>,
    out_adj: Vec<Vec<EdgeId>>,
    in_adj: Vec<Vec<EdgeId>>,
    by_label: HashMap<String, VertexId>,
    by_ends: HashMap<(VertexId, VertexId), EdgeId>,
    metadata: BTreeMap<String, String>,
}

impl<W: PartialEq> PartialEq for WeightedDigraph<W> {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.metadata == other.metadata
    }
}

impl<W: Weight> WeightedDigraph<W> {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertices(&self) -> &[Vertex<W>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge<W>] {
        &self.edges
    }

    pub fn vertex(&self, v: VertexId) -> Result<&Vertex<W>> {
        self.vertices.get(v.0).ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge<W>> {
        self.edges.get(e.0).ok_or_else(|| Error::UnknownEdge(e.to_string()))
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.vertices[v.0].label
    }

    pub fn vertex_weight(&self, v: VertexId) -> Option<&W> {
        self.vertices[v.0].weight.as_ref()
    }

    pub fn edge_weight(&self, e: EdgeId) -> Option<&W> {
        self.edges[e.0].weight.as_ref()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let edge = &self.edges[e.0];
        (edge.from, edge.to)
    }

    pub fn by_label(&self, label: &str) -> Option<VertexId> {
        self.by_label.get(label).copied()
    }

    /// Like [`by_label`](Self::by_label) but reports a missing label as an error.
    pub fn expect_label(&self, label: &str) -> Result<VertexId> {
        self.by_label(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn find_edge(&self, from: VertexId, to: VertexId) -> Option<EdgeId> {
        self.by_ends.get(&(from, to)).copied()
    }

    pub fn find_edge_by_labels(&self, from: &str, to: &str) -> Option<EdgeId> {
        self.find_edge(self.by_label(from)?, self.by_label(to)?)
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_adj[v.0]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_adj[v.0]
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.vertices.len()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    pub fn to_builder(&self) -> GraphBuilder<W> {
        GraphBuilder { graph: self.clone() }
    }

    /// Is there a directed `src ⇝ dst` path avoiding `removed`, using only
    /// `allowed_edges` when given?
    pub fn reaches(
        &self,
        src: VertexId,
        dst: VertexId,
        removed: &BTreeSet<VertexId>,
        allowed_edges: Option<&BTreeSet<EdgeId>>,
    ) -> Result<bool> {
        self.check_vertex(src)?;
        self.check_vertex(dst)?;
        let seen = self.reach_from(
            src,
            |v| !removed.contains(&v),
            |e| allowed_edges.is_none_or(|a| a.contains(&e)),
        );
        Ok(seen[dst.0])
    }

    /// Forward reachability mask from `src`. A rejected `src` reaches nothing.
    pub fn reach_from(
        &self,
        src: VertexId,
        vertex_ok: impl Fn(VertexId) -> bool,
        edge_ok: impl Fn(EdgeId) -> bool,
    ) -> Vec<bool> {
        self.search(src, &vertex_ok, &edge_ok, false)
    }

    /// Backward reachability mask: vertices that can reach `dst`.
    pub fn reach_to(
        &self,
        dst: VertexId,
        vertex_ok: impl Fn(VertexId) -> bool,
        edge_ok: impl Fn(EdgeId) -> bool,
    ) -> Vec<bool> {
        self.search(dst, &vertex_ok, &edge_ok, true)
    }

    fn search(
        &self,
        start: VertexId,
        vertex_ok: &dyn Fn(VertexId) -> bool,
        edge_ok: &dyn Fn(EdgeId) -> bool,
        reverse: bool,
    ) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        if !vertex_ok(start) {
            return seen;
        }
        seen[start.0] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let adj = if reverse { &self.in_adj[u.0] } else { &self.out_adj[u.0] };
            for &e in adj {
                if !edge_ok(e) {
                    continue;
                }
                let edge = &self.edges[e.0];
                let w = if reverse { edge.from } else { edge.to };
                if !seen[w.0] && vertex_ok(w) {
                    seen[w.0] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Shortest (fewest arcs) `src ⇝ dst` path as a vertex sequence.
    pub fn shortest_path(
        &self,
        src: VertexId,
        dst: VertexId,
        vertex_ok: impl Fn(VertexId) -> bool,
    ) -> Option<Vec<VertexId>> {
        if !vertex_ok(src) || !vertex_ok(dst) {
            return None;
        }
        let mut parent: Vec<Option<VertexId>> = vec![None; self.vertices.len()];
        let mut seen = vec![false; self.vertices.len()];
        seen[src.0] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if u == dst {
                let mut path = vec![dst];
                let mut cur = dst;
                while let Some(p) = parent[cur.0] {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            for &e in &self.out_adj[u.0] {
                let w = self.edges[e.0].to;
                if !seen[w.0] && vertex_ok(w) {
                    seen[w.0] = true;
                    parent[w.0] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Kahn's algorithm; `None` if the graph has a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let mut indeg: Vec<usize> = self.in_adj.iter().map(Vec::len).collect();
        let mut queue: VecDeque<VertexId> =
            self.vertex_ids().filter(|v| indeg[v.0] == 0).collect();
        let mut order = Vec::with_capacity(self.vertices.len());
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &e in &self.out_adj[u.0] {
                let w = self.edges[e.0].to;
                indeg[w.0] -= 1;
                if indeg[w.0] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == self.vertices.len()).then_some(order)
    }

    pub fn is_dag(&self) -> bool {
        self.topological_order().is_some()
    }
}

/// Incremental construction of a [`WeightedDigraph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder<W> {
    graph: WeightedDigraph<W>,
}

impl<W: Weight> Default for GraphBuilder<W> {
    fn default() -> Self {
        Self::new()
    }
}

impl<W: Weight> GraphBuilder<W> {
    pub fn new() -> Self {
        GraphBuilder {
            graph: WeightedDigraph {
                vertices: Vec::new(),
                edges: Vec::new(),
                out_adj: Vec::new(),
                in_adj: Vec::new(),
                by_label: HashMap::new(),
                by_ends: HashMap::new(),
                metadata: BTreeMap::new(),
            },
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, weight: Option<W>) -> Result<VertexId> {
        let label = label.into();
        if self.graph.by_label.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let id = VertexId(self.graph.vertices.len());
        self.graph.by_label.insert(label.clone(), id);
        self.graph.vertices.push(Vertex { label, weight });
        self.graph.out_adj.push(Vec::new());
        self.graph.in_adj.push(Vec::new());
        Ok(id)
    }

    pub fn add_edge(&mut self, from: VertexId, to: VertexId, weight: Option<W>) -> Result<EdgeId> {
        self.graph.check_vertex(from)?;
        self.graph.check_vertex(to)?;
        if from == to {
            return Err(Error::SelfLoop(self.graph.label(from).to_string()));
        }
        if self.graph.by_ends.contains_key(&(from, to)) {
            return Err(Error::ParallelEdge(
                self.graph.label(from).to_string(),
                self.graph.label(to).to_string(),
            ));
        }
        let id = EdgeId(self.graph.edges.len());
        self.graph.edges.push(Edge { from, to, weight });
        self.graph.out_adj[from.0].push(id);
        self.graph.in_adj[to.0].push(id);
        self.graph.by_ends.insert((from, to), id);
        Ok(id)
    }

    /// Adds an edge between two already-present labels.
    pub fn link(&mut self, from: &str, to: &str, weight: Option<W>) -> Result<EdgeId> {
        let f = self.graph.expect_label(from)?;
        let t = self.graph.expect_label(to)?;
        self.add_edge(f, t, weight)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.graph.by_label(label)
    }

    pub fn set_meta(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.graph.metadata.insert(key.into(), value.to_string());
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn build(self) -> WeightedDigraph<W> {
        self.graph
    }
}
