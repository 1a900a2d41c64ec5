use thiserror::Error;

/// Failures of the command-line tool. Each maps to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{file}: {source}")]
    Io { file: String, source: std::io::Error },
    #[error("{file}: at {path}: {message}")]
    Parse { file: String, path: String, message: String },
    #[error("at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cutlab::Error),
}

impl CliError {
    pub fn schema(path: &str, message: &str) -> Self {
        CliError::Schema { path: path.to_string(), message: message.to_string() }
    }

    /// 2 for answers that are infeasible or rejected certificates, 3 when an
    /// oracle refuses, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        use cutlab::Error as E;
        match self {
            CliError::Core(E::Refused(_)) => 3,
            CliError::Core(
                E::Infeasible(_)
                | E::InfeasibleCut
                | E::InfeasibleNetwork
                | E::EndpointDeleted(_)
                | E::CostMismatch { .. }
                | E::ModeMismatch(_)
                | E::NotAClique(_)
                | E::NotABiclique(_)
                | E::NotAGtSolution
                | E::SuperHeavyInCut(_)
                | E::BudgetExceeded { .. }
                | E::StructureViolation(_),
            ) => 2,
            _ => 1,
        }
    }
}
