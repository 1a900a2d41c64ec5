use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n` with string labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl UGraph {
    /// `n` vertices labelled `v/0 .. v/{n-1}` and no edges.
    pub fn new(n: usize) -> Self {
        UGraph { labels: (0..n).map(|i| format!("v/{i}")).collect(), edges: BTreeSet::new() }
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::BadShape("duplicate vertex label".into()));
        }
        Ok(UGraph { labels, edges: BTreeSet::new() })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = UGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = UGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = UGraph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.edges.insert((u, v));
            }
        }
        g
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.labels.contains(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        self.labels.push(label);
        Ok(self.labels.len() - 1)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::UnknownVertex(format!("{}", u.max(v))));
        }
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(k, &u)| vs[k + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }
}
