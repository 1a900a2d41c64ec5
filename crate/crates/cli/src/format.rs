//! JSON documents read and written by the command-line tool.
//!
//! Weights are `[num, den]` integer pairs and never floats. Vertex labels
//! are the public identity of a vertex; positions in `vertices` are only
//! meaningful inside one file. See `docs/FORMAT.md` for the full schema.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use cutlab::gridtiling::{GridTilingInstance, GtSolution};
use cutlab::mcsi::{McsiInstance, UGraph};
use cutlab::{Certificate, CertificateKind, DemandMode, DemandSpec, Digraph, GraphBuilder, Rational, VertexId};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub type WeightDoc = [i64; 2];

pub fn weight_doc(w: &Rational) -> WeightDoc {
    [*w.numer(), *w.denom()]
}

pub fn parse_weight(doc: WeightDoc, path: &str) -> Result<Rational, CliError> {
    match doc {
        [_, d] if d <= 0 => Err(CliError::schema(path, "denominator must be positive")),
        [n, _] if n < 0 => Err(CliError::schema(path, "weights must be nonnegative")),
        [n, d] => Ok(Rational::new(n, d)),
    }
}

/// Parses `text` with the JSON path of the first error in the message.
pub fn from_json<T: DeserializeOwned>(text: &str, file: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| CliError::Parse {
        file: file.to_string(),
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn expect_kind(kind: &str, want: &str) -> Result<(), CliError> {
    if kind == want {
        Ok(())
    } else {
        Err(CliError::schema("kind", &format!("expected {want:?}, found {kind:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub label: String,
    pub weight: Option<WeightDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub from: String,
    pub to: String,
    pub weight: Option<WeightDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeDoc {
    CutPairs,
    CutMultiway,
    NetworkPairs,
    NetworkAll,
}

impl From<DemandMode> for ModeDoc {
    fn from(m: DemandMode) -> Self {
        match m {
            DemandMode::CutPairs => ModeDoc::CutPairs,
            DemandMode::CutMultiway => ModeDoc::CutMultiway,
            DemandMode::NetworkPairs => ModeDoc::NetworkPairs,
            DemandMode::NetworkAll => ModeDoc::NetworkAll,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DemandDoc {
    pub mode: ModeDoc,
    #[serde(default)]
    pub pairs: Vec<[String; 2]>,
    #[serde(default)]
    pub terminals: Vec<String>,
}

/// The instance a gadget was generated from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SourceDoc {
    #[serde(rename = "mcsi")]
    Mcsi(McsiDoc),
    #[serde(rename = "gridtiling")]
    GridTiling(GtDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDoc {
    pub kind: String,
    pub problem: String,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    pub demands: DemandDoc,
    pub metadata: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SourceDoc>,
}

impl ProblemDoc {
    pub fn new(problem: &str, graph: &Digraph, demand: &DemandSpec, source: Option<SourceDoc>) -> Self {
        let label = |v: VertexId| graph.label(v).to_string();
        ProblemDoc {
            kind: "problem".into(),
            problem: problem.into(),
            vertices: graph
                .vertices()
                .iter()
                .map(|v| VertexDoc { label: v.label.clone(), weight: v.weight.as_ref().map(weight_doc) })
                .collect(),
            edges: graph
                .edges()
                .iter()
                .map(|e| EdgeDoc { from: label(e.from), to: label(e.to), weight: e.weight.as_ref().map(weight_doc) })
                .collect(),
            demands: DemandDoc {
                mode: demand.mode.into(),
                pairs: demand.pairs.iter().map(|&(s, t)| [label(s), label(t)]).collect(),
                terminals: demand.terminals.iter().map(|&t| label(t)).collect(),
            },
            metadata: graph.metadata().clone(),
            source,
        }
    }

    pub fn to_graph(&self) -> Result<(Digraph, DemandSpec), CliError> {
        expect_kind(&self.kind, "problem")?;
        let mut b = GraphBuilder::new();
        for (k, v) in self.vertices.iter().enumerate() {
            let path = format!("vertices[{k}]");
            let w = v.weight.map(|w| parse_weight(w, &format!("{path}.weight"))).transpose()?;
            b.add_vertex(v.label.clone(), w).map_err(|e| CliError::schema(&path, &e.to_string()))?;
        }
        let find = |b: &GraphBuilder<Rational>, label: &str, path: String| {
            b.vertex_by_label(label).ok_or_else(|| CliError::schema(&path, &format!("unknown vertex label {label:?}")))
        };
        for (k, e) in self.edges.iter().enumerate() {
            let path = format!("edges[{k}]");
            let from = find(&b, &e.from, format!("{path}.from"))?;
            let to = find(&b, &e.to, format!("{path}.to"))?;
            let w = e.weight.map(|w| parse_weight(w, &format!("{path}.weight"))).transpose()?;
            b.add_edge(from, to, w).map_err(|err| CliError::schema(&path, &err.to_string()))?;
        }
        for (key, value) in &self.metadata {
            b.set_meta(key.clone(), value);
        }
        let pairs = self
            .demands
            .pairs
            .iter()
            .enumerate()
            .map(|(k, [s, t])| {
                Ok((find(&b, s, format!("demands.pairs[{k}][0]"))?, find(&b, t, format!("demands.pairs[{k}][1]"))?))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let terminals = self
            .demands
            .terminals
            .iter()
            .enumerate()
            .map(|(k, t)| find(&b, t, format!("demands.terminals[{k}]")))
            .collect::<Result<Vec<_>, CliError>>()?;
        let demand = match self.demands.mode {
            ModeDoc::CutPairs => DemandSpec::cut_pairs(pairs),
            ModeDoc::CutMultiway => DemandSpec::cut_multiway(terminals),
            ModeDoc::NetworkPairs => DemandSpec::network_pairs(pairs),
            ModeDoc::NetworkAll => DemandSpec::network_all(terminals),
        };
        let graph = b.build();
        demand.validate(&graph).map_err(|e| CliError::schema("demands", &e.to_string()))?;
        Ok((graph, demand))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MemberDoc {
    Vertex(String),
    Edge([String; 2]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKindDoc {
    VertexCut,
    EdgeNetwork,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub kind: CertificateKindDoc,
    pub members: Vec<MemberDoc>,
    pub cost: WeightDoc,
}

impl CertificateDoc {
    pub fn new(graph: &Digraph, cert: &Certificate) -> Self {
        let members = match cert.kind {
            CertificateKind::VertexCut => {
                cert.vertices().into_iter().map(|v| MemberDoc::Vertex(graph.label(v).to_string())).collect()
            }
            CertificateKind::EdgeNetwork => cert
                .edges()
                .into_iter()
                .map(|e| {
                    let (u, v) = graph.endpoints(e);
                    MemberDoc::Edge([graph.label(u).to_string(), graph.label(v).to_string()])
                })
                .collect(),
        };
        let kind = match cert.kind {
            CertificateKind::VertexCut => CertificateKindDoc::VertexCut,
            CertificateKind::EdgeNetwork => CertificateKindDoc::EdgeNetwork,
        };
        CertificateDoc { kind, members, cost: weight_doc(&cert.cost) }
    }

    /// Resolves labels against `graph`. The stored cost is kept as written so
    /// that verification can detect a mismatch.
    pub fn to_certificate(&self, graph: &Digraph) -> Result<Certificate, CliError> {
        let cost = parse_weight(self.cost, "cost")?;
        let mut members = BTreeSet::new();
        for (k, m) in self.members.iter().enumerate() {
            let path = format!("members[{k}]");
            let id = match (self.kind, m) {
                (CertificateKindDoc::VertexCut, MemberDoc::Vertex(l)) => graph
                    .by_label(l)
                    .ok_or_else(|| CliError::schema(&path, &format!("unknown vertex label {l:?}")))?
                    .0,
                (CertificateKindDoc::EdgeNetwork, MemberDoc::Edge([u, v])) => graph
                    .find_edge_by_labels(u, v)
                    .ok_or_else(|| CliError::schema(&path, &format!("no edge {u:?} -> {v:?}")))?
                    .0,
                _ => return Err(CliError::schema(&path, "member shape does not match the certificate kind")),
            };
            members.insert(id);
        }
        let kind = match self.kind {
            CertificateKindDoc::VertexCut => CertificateKind::VertexCut,
            CertificateKindDoc::EdgeNetwork => CertificateKind::EdgeNetwork,
        };
        Ok(Certificate { kind, members, cost })
    }
}

/// Plain undirected graph, the input of the clique pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub kind: String,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

fn ugraph_from(vertices: &[String], edges: &[[String; 2]], at: &str) -> Result<UGraph, CliError> {
    let mut g = UGraph::with_labels(vertices.to_vec()).map_err(|e| CliError::schema(&format!("{at}vertices"), &e.to_string()))?;
    let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(k, l)| (l.as_str(), k)).collect();
    for (k, [u, v]) in edges.iter().enumerate() {
        let path = format!("{at}edges[{k}]");
        let look = |l: &String| index.get(l.as_str()).copied().ok_or_else(|| CliError::schema(&path, &format!("unknown vertex {l:?}")));
        let (a, b) = (look(u)?, look(v)?);
        g.add_edge(a, b).map_err(|e| CliError::schema(&path, &e.to_string()))?;
    }
    Ok(g)
}

fn ugraph_edges(g: &UGraph) -> Vec<[String; 2]> {
    g.edges().map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()]).collect()
}

impl GraphDoc {
    pub fn new(g: &UGraph) -> Self {
        GraphDoc { kind: "graph".into(), vertices: g.labels().to_vec(), edges: ugraph_edges(g) }
    }

    pub fn to_ugraph(&self) -> Result<UGraph, CliError> {
        expect_kind(&self.kind, "graph")?;
        ugraph_from(&self.vertices, &self.edges, "")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupergraphDoc {
    pub size: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McsiDoc {
    pub kind: String,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    /// Colour classes as vertex labels; in biclique form the V-side first.
    pub groups: Vec<Vec<String>>,
    pub supergraph: SupergraphDoc,
    pub biclique_sides: Option<usize>,
}

impl McsiDoc {
    pub fn new(inst: &McsiInstance) -> Self {
        let g = &inst.graph;
        McsiDoc {
            kind: "mcsi".into(),
            vertices: g.labels().to_vec(),
            edges: ugraph_edges(g),
            groups: inst.groups.iter().map(|grp| grp.iter().map(|&v| g.label(v).to_string()).collect()).collect(),
            supergraph: SupergraphDoc {
                size: inst.supergraph.vertex_count(),
                edges: inst.supergraph.edges().map(|(a, b)| [a, b]).collect(),
            },
            biclique_sides: inst.biclique_sides,
        }
    }

    pub fn to_instance(&self) -> Result<McsiInstance, CliError> {
        expect_kind(&self.kind, "mcsi")?;
        let graph = ugraph_from(&self.vertices, &self.edges, "")?;
        let index: HashMap<&str, usize> = self.vertices.iter().enumerate().map(|(k, l)| (l.as_str(), k)).collect();
        let groups = self
            .groups
            .iter()
            .enumerate()
            .map(|(i, grp)| {
                grp.iter()
                    .enumerate()
                    .map(|(k, l)| {
                        index.get(l.as_str()).copied().ok_or_else(|| {
                            CliError::schema(&format!("groups[{i}][{k}]"), &format!("unknown vertex {l:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let edges = self.supergraph.edges.iter().map(|&[a, b]| (a, b));
        let supergraph = UGraph::from_edges(self.supergraph.size, edges)
            .map_err(|e| CliError::schema("supergraph", &e.to_string()))?;
        let inst = McsiInstance { graph, groups, supergraph, biclique_sides: self.biclique_sides };
        inst.validate().map_err(|e| CliError::schema("groups", &e.to_string()))?;
        Ok(inst)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McsiFamilyDoc {
    pub kind: String,
    pub instances: Vec<McsiDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GtDoc {
    pub kind: String,
    pub ell: usize,
    pub n: usize,
    /// `cells[i][j]` lists the 1-based pairs of `S_{i+1,j+1}`.
    pub cells: Vec<Vec<Vec<[usize; 2]>>>,
}

impl GtDoc {
    pub fn new(gt: &GridTilingInstance) -> Self {
        GtDoc {
            kind: "gridtiling".into(),
            ell: gt.ell,
            n: gt.n,
            cells: gt.cells.iter().map(|row| row.iter().map(|c| c.iter().map(|&(x, y)| [x, y]).collect()).collect()).collect(),
        }
    }

    pub fn to_instance(&self) -> Result<GridTilingInstance, CliError> {
        expect_kind(&self.kind, "gridtiling")?;
        let cells = self.cells.iter().map(|row| row.iter().map(|c| c.iter().map(|&[x, y]| (x, y)).collect()).collect()).collect();
        GridTilingInstance::new(self.ell, self.n, cells).map_err(|e| CliError::schema("cells", &e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GtSolutionDoc {
    pub kind: String,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl GtSolutionDoc {
    pub fn new(sol: &GtSolution) -> Self {
        GtSolutionDoc { kind: "gridtiling-solution".into(), alpha: sol.alpha.clone(), beta: sol.beta.clone() }
    }

    pub fn to_solution(&self) -> Result<GtSolution, CliError> {
        expect_kind(&self.kind, "gridtiling-solution")?;
        Ok(GtSolution { alpha: self.alpha.clone(), beta: self.beta.clone() })
    }
}

/// Input of `plant`: the source instance plus what was planted in it.
///
/// `clique` names one vertex per class (multicut gadget), `v_side` and
/// `w_side` the two halves of a biclique, `solution` a grid tiling answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub kind: String,
    pub source: SourceDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma5: Option<WeightDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub clique: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub v_side: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub w_side: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<GtSolutionDoc>,
}
