use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("leading coefficient of the polynomial part is not the identity")]
    NonMonicLeading,

    #[error("polynomial part must have degree at least one")]
    DegreeZero,

    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("non-finite entry in {context}")]
    NonFiniteEntry { context: String },

    #[error("pole term power must be at least one")]
    ZeroPower,

    #[error("top-order coefficient of pole {pole} (power {power}) is zero")]
    ZeroTopOrderCoefficient { pole: Complex64, power: usize },

    #[error("evaluation point {point} coincides with pole {pole}")]
    EvaluationAtPole { point: Complex64, pole: Complex64 },

    #[error("no convergence in {what}")]
    NoConvergence { what: &'static str },

    #[error("companion dimension {dim} exceeds the cap {cap}")]
    DimensionOverflow { dim: usize, cap: usize },

    #[error("method needs degree at least {needed}, got {got}")]
    DegreeTooSmall { needed: usize, got: usize },

    #[error("bad options: {0}")]
    BadOpts(String),

    #[error("polynomial part is not linear (degree {degree})")]
    NotLinear { degree: usize },

    #[error("no sign change of q found below {limit:e}")]
    BracketFailure { limit: f64 },

    #[error("instance appears to be non-regular (det R(λ) vanishes at every probe point)")]
    NonRegularSuspected,

    #[error("expected a scalar (1x1) instance, got size {size}")]
    NotScalar { size: usize },
}

impl Error {
    /// True for errors raised while checking an instance against the model
    /// assumptions (as opposed to parse or numerical failures).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NonMonicLeading
                | Error::DegreeZero
                | Error::DimensionMismatch { .. }
                | Error::NonFiniteEntry { .. }
                | Error::ZeroPower
                | Error::ZeroTopOrderCoefficient { .. }
                | Error::DimensionOverflow { .. }
                | Error::NotLinear { .. }
                | Error::NotScalar { .. }
                | Error::DegreeTooSmall { .. }
                | Error::BadOpts(_)
        )
    }
}
