//! Error type shared across the crate.

use crate::form::BinaryForm;
use crate::scroll::ValidityReport;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A section sequence does not have length `d - 1`.
    #[error("length mismatch: expected {expected} parts, got {got}")]
    Length { expected: usize, got: usize },

    /// A part that must be positive is zero.
    #[error("positivity violated: part {index} of {which} is zero")]
    Positivity { which: &'static str, index: usize },

    /// Scroll parts must be weakly increasing.
    #[error("parts are not weakly increasing at index {index}")]
    NotWeaklyIncreasing { index: usize },

    /// Scroll types have at least one part, at least one of them nonzero.
    #[error("a scroll type needs at least one part")]
    EmptyScroll,

    /// All parts zero would not describe a variety.
    #[error("all parts are zero")]
    AllZeroParts,

    /// Operation defined only for scrolls of dimension >= 2.
    #[error("operation requires scroll dimension >= 2, got d = {d}")]
    DimensionTooSmall { d: usize },

    /// Multiplicity multisets for reducible checks must be nonempty.
    #[error("multiplicity multiset is empty")]
    EmptyMultiplicities,

    /// Multiplicity entries must be >= 1.
    #[error("multiplicity entry {index} is zero")]
    ZeroMultiplicity { index: usize },

    /// Adding forms of different declared degrees.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Every coefficient form of a section (or every gcd input) is zero.
    #[error("all forms are zero")]
    AllZero,

    /// Exact form division failed; carries the nonzero remainder.
    #[error("not divisible: remainder of degree {}", .remainder.degree())]
    NotDivisible { remainder: Box<BinaryForm> },

    /// `1 - sum z^a_i + sum z^b_i` is not divisible by `(1-z)^2`.
    #[error("numerator not divisible by (1-z)^2: N(1) = {at_one}, N'(1) = {derivative_at_one}")]
    SeriesNotDivisible { at_one: i64, derivative_at_one: i64 },

    /// Squarefree decomposition needs characteristic above the degree.
    #[error("characteristic {p} too small for a form of degree {degree}")]
    CharTooSmall { p: u64, degree: usize },

    /// The field characteristic must exceed the scroll degree.
    #[error("field characteristic {p} must exceed the scroll degree {required}")]
    FieldTooSmall { p: u64, required: usize },

    /// Field characteristic must be prime.
    #[error("{p} is not prime")]
    NotPrime { p: u64 },

    /// Characteristics at or above 2^63 are not supported.
    #[error("field characteristic {p} exceeds the supported bound 2^63")]
    CharTooLarge { p: u64 },

    /// `(a, b)` does not satisfy the section conditions.
    #[error("invalid section pair: {}", .report.detail)]
    InvalidPair { report: Box<ValidityReport> },

    /// `(a, b, m)` does not satisfy the reducible-section conditions.
    #[error("invalid reducible triple: {}", .report.detail)]
    InvalidTriple { report: Box<ValidityReport> },

    /// The chosen linear forms must be pairwise distinct points of P^1.
    #[error("linear form choices are not pairwise distinct")]
    NondistinctLines,

    /// Cone classification input shape errors.
    #[error("cone input invalid: {detail}")]
    ConeInput { detail: String },

    /// Text parsing of sequences, forms or section files.
    #[error("parse error: {detail}")]
    Parse { detail: String },

    /// An internal postcondition failed; indicates a bug, not bad input.
    #[error("internal verification failed: {detail}")]
    Verification { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
