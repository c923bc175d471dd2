use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0} is not a supported prime characteristic")]
    Characteristic(u64),
    #[error("axiom violated: {axiom} (residual rank {residual})")]
    Axiom { axiom: String, residual: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("polynomial is not additive: {0}")]
    NotAdditive(String),
    #[error("invalid morphism: {0}")]
    Morphism(String),
    #[error("coalgebra mismatch: {0}")]
    CoalgebraMismatch(String),
    #[error("semisimple quotient is not split over F_{p}: {detail}")]
    Unsplit { p: u64, detail: String },
    #[error("falsified: {0}")]
    Falsified(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
