use thiserror::Error;

/// Errors raised by the library. Each variant belongs to one of three
/// families (bad input, numerical failure, broken internal invariant), see
/// [`Error::family`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("state norm {norm} deviates from 1 by more than {tol:e}")]
    NotNormalized { norm: f64, tol: f64 },

    #[error("qubit index {index} out of range 1..={num_qubits}")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("factor {slot} is not special unitary (deviation {deviation:e})")]
    NotSpecialUnitary { slot: usize, deviation: f64 },

    #[error("point lies outside the polytope: {}", .violations.join("; "))]
    NotMember { violations: Vec<String> },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("ill-conditioned rank decision: singular value {value:e} within 10x of threshold {threshold:e}")]
    IllConditioned { value: f64, threshold: f64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorFamily {
    Input,
    Numerical,
    Internal,
}

impl Error {
    pub fn family(&self) -> ErrorFamily {
        match self {
            Error::Numerical(_) | Error::IllConditioned { .. } => ErrorFamily::Numerical,
            Error::Invariant(_) => ErrorFamily::Internal,
            _ => ErrorFamily::Input,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
