use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Variants split into bad input (the caller asked for something that does
/// not make sense) and failed checks (a computation disagreed with a stated
/// structural fact). The CLI maps the first group to exit code 2 and the
/// second to exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u64),

    #[error("scale cap exceeded: {what} = {value} > {cap} (set BSK_SCALE_CAP to override)")]
    ScaleCap { what: &'static str, value: u128, cap: u128 },

    #[error("young subgroup {inner} does not refine {outer}")]
    NotRefinement { inner: String, outer: String },

    #[error("basis is not adapted to the radical: {0}")]
    NotAdapted(String),

    #[error("grading is not admissible at ({h}, {l}) -> {k}")]
    Inadmissible { h: String, l: String, k: String },

    #[error("group action is not free: {0}")]
    NotFree(String),

    #[error("path does not lift: {0}")]
    LiftFailure(String),

    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn check(msg: impl Into<String>) -> Self {
        Error::CheckFailed(msg.into())
    }

    /// True for errors caused by the caller's input rather than a failed
    /// verification.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_) | Error::BadCharacteristic(_) | Error::ScaleCap { .. } | Error::NotRefinement { .. }
        )
    }

    /// Short machine-readable tag used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid_input",
            Error::BadCharacteristic(_) => "bad_characteristic",
            Error::ScaleCap { .. } => "scale_cap",
            Error::NotRefinement { .. } => "not_refinement",
            Error::NotAdapted(_) => "not_adapted",
            Error::Inadmissible { .. } => "inadmissible",
            Error::NotFree(_) => "not_free",
            Error::LiftFailure(_) => "lift_failure",
            Error::CheckFailed(_) => "check_failed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
