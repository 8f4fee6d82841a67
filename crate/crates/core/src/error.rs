use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A normalization denominator vanished: the superposed states coincide up to phase.
    #[error("degenerate state: {normalization} = {value:e} is below {threshold:e}")]
    DegenerateState {
        normalization: &'static str,
        value: f64,
        threshold: f64,
    },

    #[error("state is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystems(String),

    #[error("parameter `{name}` = {value} is outside {domain}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),

    #[error("not a density operator: {0}")]
    InvalidDensity(String),
}
