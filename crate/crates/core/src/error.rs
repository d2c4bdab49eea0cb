use thiserror::Error;

/// Errors produced while building rings or operating on ideals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// A construction request was malformed (bad modulus, non-ideal module
    /// carrier, unparseable spec text, out-of-range generator, ...).
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// A construction or enumeration would exceed the configured order cap.
    #[error("order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    /// An operation was applied outside its domain (ring mismatch, improper
    /// ideal where a proper one is required, zero exponent, ...).
    #[error("domain error: {0}")]
    DomainError(String),

    /// An internal invariant failed; indicates a bug, never user input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
