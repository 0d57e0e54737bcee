use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("connection set is not closed under negation mod {n}: {residue} present but {missing} absent")]
    NotNegationClosed { n: usize, residue: usize, missing: usize },

    #[error("residue {residue} is outside 1..{n}")]
    ResidueOutOfRange { n: usize, residue: usize },

    #[error("order mismatch: graph has n = {graph}, connection set has n = {connection}")]
    OrderMismatch { graph: usize, connection: usize },

    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("first row is not negation-symmetric at column {column}")]
    AsymmetricRow { column: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("not a circulant graph: {0}")]
    NotCirculant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
