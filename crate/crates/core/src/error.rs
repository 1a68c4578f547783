use alloc::string::String;

use thiserror::Error;

use crate::set::{ElementSet, Label};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("value {value} is outside [0, {p})")]
    ValueOutOfRange { value: u64, p: u32 },
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("operands belong to GF({left}) and GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("element {0} is not in the ground set")]
    UnknownElement(Label),
    #[error("label {0} appears more than once")]
    DuplicateLabel(Label),
    #[error("labels must be positive integers")]
    ZeroLabel,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("ground set of size {size} exceeds the enumeration limit {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("{0} is not a circuit")]
    NotACircuit(ElementSet),
    #[error("invalid split parameters: {0}")]
    InvalidSpec(&'static str),
    #[error("element {0} is a coloop")]
    ColoopPresent(Label),
    #[error("label {0} is already in the ground set")]
    LabelCollision(Label),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("kernel of dimension {dim} over GF({p}) exceeds the enumeration limit {limit}")]
    KernelTooLarge { dim: usize, p: u32, limit: u64 },
    #[error("the Eulerian characterization needs p > 2, got p = {0}")]
    EulerianTheoremRequiresOddP(u32),
    #[error("the Eulerian characterization needs e = b")]
    ERequiresB,
    #[error("the characterizations assume one alpha for the new row and z (got {row} and {z})")]
    UnequalAlphas { row: u32, z: u32 },
    #[error("no acceptable random instance after {0} attempts")]
    RejectionBudgetExhausted(usize),
    #[error("{0}")]
    Unsupported(&'static str),
}
