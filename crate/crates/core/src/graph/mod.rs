//! Weighted digraphs, demands and solution certificates.

mod certificate;
mod demand;
mod digraph;

pub use certificate::{cost_of, verify_cut, verify_network, Certificate, CertificateKind};
pub(crate) use certificate::network_connects;
pub use demand::{DemandMode, DemandSpec};
pub use digraph::{Edge, EdgeId, GraphBuilder, Vertex, VertexId, WeightedDigraph};
