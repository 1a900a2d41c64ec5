use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("parallel edge {0} -> {1}")]
    ParallelEdge(String, String),
    #[error("self-loop on {0}")]
    SelfLoop(String),

    #[error("invalid demand: {0}")]
    InvalidDemand(String),
    #[error("certificate kind or demand mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("cut deletes demand endpoint {0}")]
    EndpointDeleted(String),
    #[error("stored cost {stored} differs from recomputed cost {computed}")]
    CostMismatch { stored: String, computed: String },
    #[error("member {0} carries no weight")]
    UnweightedMember(String),

    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("number of pairs must be even, got {0}")]
    OddK(usize),

    #[error("assignment does not respect the partition: {0}")]
    BadAssignment(String),
    #[error("supergraph has the wrong shape: {0}")]
    BadSupergraph(String),
    #[error("malformed instance: {0}")]
    BadShape(String),
    #[error("grid tiling cell ({0},{1}) would be empty")]
    EmptyCell(usize, usize),

    #[error("witness is not a clique: {0}")]
    NotAClique(String),
    #[error("witness is not a biclique: {0}")]
    NotABiclique(String),
    #[error("witness is not a grid tiling solution")]
    NotAGtSolution,

    #[error("cut contains super-heavy vertex {0}")]
    SuperHeavyInCut(String),
    #[error("cut leaves a demand pair connected")]
    InfeasibleCut,
    #[error("network leaves a demand unsatisfied")]
    InfeasibleNetwork,
    #[error("cost {cost} exceeds budget {budget}")]
    BudgetExceeded { cost: String, budget: String },
    #[error("structure violation: {0}")]
    StructureViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
