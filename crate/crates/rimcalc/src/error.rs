//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across parsing, polynomial algebra and the
/// Seiberg-Witten calculus. Variants carry a human-readable detail string;
/// equality compares variants and details, which keeps error paths testable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division was requested but the remainder is nonzero.
    #[error("division is not exact: {0}")]
    DivisionNotExact(String),
    /// Group-ring operands (or an exponent vector) disagree on lattice rank,
    /// or a named basis class does not exist.
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    /// A polynomial with p(1) not a unit cannot be an Alexander polynomial.
    #[error("not unit-normalizable: {0}")]
    NotUnitNormalizable(String),
    /// No unit multiple of the polynomial is palindromic.
    #[error("no symmetric representative: {0}")]
    NonSymmetrizable(String),
    /// Input text violates the declared grammar.
    #[error("syntax error: {0}")]
    SyntaxError(String),
    /// A presentation whose closure has more than one component.
    #[error("not a knot: {0}")]
    NotAKnot(String),
    /// PD/DT label constraints are broken, or the code is not realizable.
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    /// Torus-knot parameters with gcd(p, q) != 1.
    #[error("not coprime: {0}")]
    NotCoprime(String),
    /// Independent Alexander engines returned different polynomials.
    #[error("engine disagreement: {0}")]
    EngineDisagreement(String),
    /// (e + sign) is not divisible by 4, so the symmetry sign is undefined.
    #[error("bad characteristics: {0}")]
    BadCharacteristics(String),
    /// The signature of the standard pair is required input for genus > 1.
    #[error("signature unknown: {0}")]
    SignatureUnknown(String),
    /// A polynomial passed where a normalized symmetric Alexander polynomial
    /// is required.
    #[error("not a normalized Alexander polynomial: {0}")]
    NotNormalized(String),
    /// Data that contradicts itself (e.g. a surgered invariant whose support
    /// is not of the form b + 2mT over the base support).
    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),
    /// The Seiberg-Witten pair hypothesis fails (vanishing base invariant or
    /// b+ <= 1), so the theorems give no verdict.
    #[error("not an SW-pair: {0}")]
    NotAnSWPair(String),
    /// I/O failure reading a table or preset file.
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
