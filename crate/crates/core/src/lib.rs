//! Directed cut and connectivity laboratory.
//!
//! Exact-weight digraphs, exact oracles for multicut, multiway cut and
//! Steiner network problems, the pairing approximation for directed
//! multicut, and generators for the hardness gadgets of directed multicut,
//! directed Steiner network and strongly connected Steiner subgraph, each
//! with a planted solution builder and a soundness extractor.
//!
//! Everything is generic over the scalar [`Weight`]; the concrete aliases
//! below fix it to exact rationals.

pub mod approx;
pub mod bruteforce;
pub mod error;
mod flow;
pub mod gadgets;
pub mod graph;
pub mod gridtiling;
pub mod mcsi;
pub mod random;
pub mod solvers;
pub mod weight;

pub use error::{Error, Result};
pub use graph::{
    cost_of, verify_cut, verify_network, CertificateKind, DemandMode, DemandSpec, EdgeId,
    GraphBuilder, VertexId, WeightedDigraph,
};
pub use weight::Weight;

/// Exact rational scalar used by every generator.
pub type Rational = num_rational::Ratio<i64>;
pub type Digraph = WeightedDigraph<Rational>;
pub type Certificate = graph::Certificate<Rational>;
