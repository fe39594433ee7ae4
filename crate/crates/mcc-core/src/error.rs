//! Shared error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    /// Two operands belong to different fields.
    #[error("field mismatch")]
    FieldMismatch,

    /// Two operands belong to different quotient rings.
    #[error("ring mismatch")]
    RingMismatch,

    #[error("division by zero")]
    DivisionByZero,

    /// `deg` of the zero polynomial is undefined.
    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("exponent {value} out of range at coordinate {index} (bound {bound})")]
    ExponentOutOfRange { index: usize, value: u64, bound: u64 },

    #[error("coefficient index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: u64 },

    #[error("{what} {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },

    #[error("empty basis")]
    EmptyBasis,

    #[error("rank-deficient row set: rank {rank} over {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("message length {got}, expected {want}")]
    LengthMismatch { got: usize, want: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
