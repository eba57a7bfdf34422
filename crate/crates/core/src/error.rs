use thiserror::Error;

use crate::poly::VariableId;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix is singular ({size}x{size}, rank {rank})")]
    Singular { size: usize, rank: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid space signature: {0}")]
    InvalidSignature(String),

    #[error("polynomials live over different signatures")]
    SignatureMismatch,

    #[error("no value assigned to variable {0}")]
    MissingVariable(VariableId),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("n must be even for the symplectic group (got n = {0})")]
    OddSymplecticDimension(usize),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("sampler gave up after {attempts} attempts")]
    ResampleLimit { attempts: usize },

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("operation requires a finite group")]
    NotFinite,

    #[error("graded piece has dimension {dim}, above the cap of {cap}")]
    DimensionCapExceeded { dim: u128, cap: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not invariant under the group")]
    NotInvariant,

    #[error("polynomial is not in the span of generator products (residual has {residual} terms)")]
    NotInSpan { residual: usize },

    #[error(
        "inconclusive at degree {degree}: sampled kernel has dimension {dim_kernel}, \
         contraction span has dimension {dim_span}"
    )]
    Inconclusive {
        degree: u32,
        dim_kernel: usize,
        dim_span: usize,
    },

    #[error(
        "span of contraction products is not contained in the sampled kernel at degree {degree}"
    )]
    ContainmentViolated { degree: u32 },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("malformed input: {0}")]
    MalformedInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
