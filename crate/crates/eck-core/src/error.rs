use thiserror::Error;

/// Errors shared across the solver and I/O layers.
#[derive(Debug, Error)]
pub enum EckError {
    /// Input file could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Instance exceeds a hard structural cap (e.g. the exact solver's edge cap).
    #[error("instance too large: {0}")]
    TooLarge(String),

    /// A configured work or time budget ran out before an answer was reached.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// Type enumeration for the vertex-cover ILP grew past its cap.
    #[error("too many ILP types: {0}")]
    TooManyTypes(usize),

    /// Witness reconstruction could not realize a supposedly feasible assignment.
    /// Signals an internal solver bug, never a property of the input.
    #[error("witness reconstruction failed: {0}")]
    Reconstruction(String),
}

pub type Result<T> = std::result::Result<T, EckError>;
