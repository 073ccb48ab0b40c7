use alloc::string::String;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not anti-Hermitian (residual {residual:e})")]
    NotAntiHermitian { residual: f64 },

    #[error("matrix is not unitary (residual {residual:e})")]
    NotUnitary { residual: f64 },

    #[error("closed form `{form}` does not apply: identity residual {residual:e}")]
    FormIdentityViolated { form: &'static str, residual: f64 },

    #[error("empty vector list")]
    EmptyList,

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },

    #[error("eigenvalue {value} does not settle into a frequency bucket (spread {spread:e})")]
    IllConditionedSpectrum { value: f64, spread: f64 },

    #[error("ad(xi) has no nonzero frequency: xi is central and cannot be canonical")]
    DegenerateSpectrum,

    #[error("xi is not canonical")]
    NotCanonical,

    #[error("xi is not in p (sigma(xi) + xi residual {residual:e})")]
    NotInP { residual: f64 },

    #[error("frequency ratio {ratio} is not rational within the tolerance budget")]
    IrrationalRatio { ratio: f64 },

    #[error("eigen-phase {phase} of xi is not rational within the tolerance budget")]
    IrrationalPhase { phase: f64 },

    #[error("no return to the isotropy group within n <= {n_max}")]
    NoMembershipFound { n_max: u64 },

    #[error("spindle methods disagree: exact {exact}, numeric {numeric}")]
    MethodMismatch { exact: u64, numeric: u64 },

    #[error("Jacobi components must be non-negative, one per nonzero frequency, with at least one positive")]
    InvalidComponents,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;
