//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported algebra kind: {0}")]
    UnsupportedKind(String),

    #[error("generator count {0} out of range (1..={1})")]
    GeneratorCount(u32, u32),

    #[error("algebra dimension {0} exceeds cap {1}")]
    DimensionCap(usize, usize),

    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),

    #[error("setting mismatch between operands")]
    SettingMismatch,

    #[error("invalid hypercomplex setting: {0}")]
    InvalidSetting(String),

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("not a slice-form polynomial (offending monomial {0})")]
    NotSliceForm(String),

    #[error("stem fails the generalized Cauchy-Riemann system: {0}")]
    NotGpsRegular(String),

    #[error("q must be odd here (got q = {0})")]
    EvenQ(u32),

    #[error("q must be at least {min} here (got q = {got})")]
    QTooSmall { got: u32, min: u32 },

    #[error("kernel order k must be >= 1 (got {0})")]
    KernelOrder(u32),

    #[error("Kelvin functions with mixed denominator parity: {0} vs {1}")]
    KernelParity(u32, u32),

    #[error("coefficients outside span(v_0..v_p) in a slice kernel right action")]
    SliceKernelCoefficients,

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
