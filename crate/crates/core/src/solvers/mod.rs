//! Exact oracles for desk-scale instances.

mod canonical;
mod multicut;
mod network;
mod stcut;

pub use multicut::{
    min_multicut_exact, min_multiway_cut_exact, multicut_within_budget,
    multiway_cut_within_budget,
};
pub(crate) use multicut::multicut_within_budget_protected;
pub use network::{min_network_within_budget, min_network_within_budget_capped, DEFAULT_EDGE_CAP};
pub use stcut::min_vertex_st_cut;
pub(crate) use stcut::min_vertex_st_cut_protected;
