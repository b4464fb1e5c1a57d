use crate::exactnum::ComplexDouble;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Division of a Gaussian rational by zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Zero raised to a negative power.
    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,

    /// Argument too close to a pole of the gamma function.
    #[error("gamma pole near z = {0}")]
    GammaPole(ComplexDouble),

    /// An argument lies outside the domain of the requested operation
    /// (modulus condition, excluded singularity, unsupported parameter).
    #[error("domain error: {0}")]
    Domain(String),

    /// An exact identity that must hold by construction failed; this always
    /// indicates a bug, never bad input.
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    /// Malformed textual input (number literals, angles).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn identity(msg: impl Into<String>) -> Self {
        Error::IdentityViolation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
