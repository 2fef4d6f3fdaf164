use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("cannot parse partition from {0:?}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial is not symmetric: coefficient of {left:?} is {left_coeff} but of {right:?} is {right_coeff}")]
    NotSymmetric { left: Vec<u32>, left_coeff: String, right: Vec<u32>, right_coeff: String },

    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("dimension guard exceeded: {what} has dimension {dim}, guard is {guard}")]
    Guard { what: String, dim: usize, guard: usize },

    #[error("lower homology does not vanish: {0:?}")]
    LowerHomology(Vec<usize>),
}
