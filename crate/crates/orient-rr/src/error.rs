//! Engine errors. Every variant reachable from the DSL carries a stable
//! machine-readable code, surfaced in JSON reports.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum EngineError {
    #[error("unknown symbol `{name}` in this presentation")]
    UnknownSymbol { name: String },

    #[error("laurent exponent {exponent} outside the declared window +/-{window}")]
    CoeffWindow { exponent: i32, window: i32 },

    #[error("not a unit: {value}")]
    NotAUnit { value: String },

    #[error("composition requires zero constant term, got {constant}")]
    CompositionDomain { constant: String },

    #[error("reversion requires a unit linear coefficient, got {linear}")]
    ReversionUnit { linear: String },

    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,

    #[error("truncation order {order} is below the nilpotency bound {bound}; refusing to evaluate")]
    TruncationUnsound { order: u32, bound: u32 },

    #[error("series argument is not nilpotent (nonzero part of generator degree 0)")]
    NonNilpotentArgument,

    #[error("bundle data rejected: {reason}")]
    BundleData { reason: String },

    #[error("degenerate bundle: rank 0 cannot be projectivized")]
    DegenerateBundle,

    #[error("base mismatch: {left} vs {right}")]
    BaseMismatch { left: String, right: String },

    #[error("invalid excess data: {reason}")]
    InvalidExcess { reason: String },

    #[error("incompatible orientations: {reason}")]
    Incompatibility { reason: String },

    #[error("embedding construction failed: {reason}")]
    Construction { reason: String },

    #[error("series order mismatch or malformed series: {reason}")]
    SeriesShape { reason: String },

    #[error("orientation series must satisfy theta(t) = t + O(t^2), got linear term {linear}")]
    OrientationShape { linear: String },

    #[error("internal invariant violated: {reason}")]
    Internal { reason: String },
}

impl EngineError {
    /// Stable error code for machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            EngineError::UnknownSymbol { .. } => "E_UNKNOWN_SYMBOL",
            EngineError::CoeffWindow { .. } => "E_COEFF_WINDOW",
            EngineError::NotAUnit { .. } => "E_NOT_A_UNIT",
            EngineError::CompositionDomain { .. } => "E_COMPOSE_DOMAIN",
            EngineError::ReversionUnit { .. } => "E_REVERSION_UNIT",
            EngineError::NotSymmetric => "E_NOT_SYMMETRIC",
            EngineError::TruncationUnsound { .. } => "E_TRUNCATION_UNSOUND",
            EngineError::NonNilpotentArgument => "E_NON_NILPOTENT",
            EngineError::BundleData { .. } => "E_BUNDLE_DATA",
            EngineError::DegenerateBundle => "E_DEGENERATE_BUNDLE",
            EngineError::BaseMismatch { .. } => "E_BASE_MISMATCH",
            EngineError::InvalidExcess { .. } => "E_INVALID_EXCESS",
            EngineError::Incompatibility { .. } => "E_INCOMPATIBLE",
            EngineError::Construction { .. } => "E_CONSTRUCTION",
            EngineError::SeriesShape { .. } => "E_SERIES_SHAPE",
            EngineError::OrientationShape { .. } => "E_ORIENTATION_SHAPE",
            EngineError::Internal { .. } => "E_INTERNAL",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, EngineError::Internal { .. })
    }
}

pub type Result<T> = std::result::Result<T, EngineError>;
