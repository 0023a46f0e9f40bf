use thiserror::Error;

use crate::model::N_MAX;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("modulus {0} exceeds the supported maximum of 2^32")]
    ModulusTooLarge(u64),

    #[error("input width must be at least 1")]
    ZeroWidth,

    /// Resource limit rather than a usage error; the CLI maps it to its own exit code.
    #[error("input width {n} exceeds the limit of {max} bits", max = N_MAX)]
    WidthLimit { n: u32 },

    #[error("output index {index} out of range 1..={delta}")]
    OutputIndex { index: usize, delta: usize },

    #[error("modulus {0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("bit vector length {0} is not a power of two")]
    NotPowerOfTwoLength(usize),

    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("input {x} out of range for a {n}-bit function")]
    InputOutOfRange { x: u64, n: u32 },

    #[error("monomial mask {mask:#x} has variables beyond x{n}")]
    MaskOutOfRange { mask: u32, n: u32 },

    #[error("binomial parity oracle is capped at {cap}, got ({i}, {a})")]
    OracleCap { i: u64, a: u64, cap: u64 },

    #[error("`{0}` is not a valid design identifier")]
    InvalidIdentifier(String),

    #[error("unsupported output format `{0}`")]
    UnsupportedFormat(String),

    #[error("the combinatorial method is limited to n <= {max}, got n = {n}")]
    CombinatorialWidth { n: u32, max: u32 },

    #[error("converter has not passed verification")]
    Unverified,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
