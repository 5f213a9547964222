use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix dimension must be positive")]
    EmptyMatrix,

    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("input is not Hermitian: asymmetry residual {residual:.3e} exceeds {limit:.1e}")]
    NotHermitian { residual: f64, limit: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {off_diagonal:.3e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("function is undefined at eigenvalue {eigenvalue}")]
    Domain { eigenvalue: f64 },

    #[error("zero input: {0}")]
    ZeroInput(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid tolerance profile: {0}")]
    InvalidTolerance(String),

    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),

    #[error("generated sample violates its recipe: {0}")]
    SampleProperty(String),

    #[error("unknown case id {0:?}")]
    UnknownCase(String),

    #[error("unknown property {0:?}")]
    UnknownProperty(String),

    #[error("malformed matrix document: {0}")]
    Format(String),
}

impl Error {
    /// True for failures of the numerics, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence { .. } | Error::SampleProperty(_))
    }
}
