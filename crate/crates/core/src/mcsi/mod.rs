//! Maximum colored subgraph isomorphism: instances, values, splitters and the
//! clique reductions built on them.

mod instance;
mod pipeline;
mod splitter;
mod ugraph;

pub use instance::{
    assignment_value, max_value_bruteforce, Assignment, McsiInstance, DEFAULT_ASSIGNMENT_CAP,
};
pub use pipeline::{clique_to_mcsi_biclique, clique_to_mcsi_clique};
pub use splitter::{build_splitter, verify_splitter, SplitterFamily, SplitterMethod, DEFAULT_SUBSET_CAP};
pub use ugraph::UGraph;
