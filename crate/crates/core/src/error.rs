//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by state construction, simulation, protocol execution and
/// circuit parsing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count {0} outside supported range 1..=16")]
    QubitCount(usize),

    #[error("amplitude vector has length {got}, expected {expected}")]
    AmplitudeLength { got: usize, expected: usize },

    #[error("non-finite amplitude at index {0}")]
    NonFiniteAmplitude(usize),

    #[error("qubit label {label} out of range for {num_qubits}-qubit register")]
    QubitOutOfRange { label: usize, num_qubits: usize },

    #[error("duplicate qubit label {0}")]
    DuplicateQubit(usize),

    #[error("outcome index {index} out of range for basis of {size} vectors")]
    OutcomeOutOfRange { index: usize, size: usize },

    #[error("requested branch has probability {probability:.3e}: impossible branch")]
    ImpossibleBranch { probability: f64 },

    #[error("basis vectors {i} and {j} are not orthonormal (deviation {deviation:.3e})")]
    NotOrthonormal { i: usize, j: usize, deviation: f64 },

    #[error("state norm {norm} differs from 1 beyond tolerance")]
    NotNormalized { norm: f64 },

    #[error("dimension mismatch: {left}-qubit state vs {right}-qubit state")]
    DimensionMismatch { left: usize, right: usize },

    #[error("order {got:?} is not a permutation of 0..{expected}")]
    InvalidPermutation { expected: usize, got: Vec<usize> },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("protocol violation at step {step}: {reason}")]
    ProtocolViolation { step: usize, reason: String },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("instruction {0} is a measurement or classical control; circuit must be measurement-less")]
    NotMeasurementless(usize),
}

impl Error {
    /// Line number for parse errors, if this is one.
    pub fn parse_line(&self) -> Option<usize> {
        match self {
            Error::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
