//! Exact classification, enumeration, construction and verification of
//! the hyperplane sections of rational normal scrolls `S(a_1,...,a_d)`.
//!
//! The crate has two independent computational routes to the same
//! answers and cross-checks them everywhere:
//!
//! - combinatorics: the numerical section conditions on the degree
//!   sequences, their enumerators, and the generic section computed
//!   from the truncated Hilbert series ([`scroll`], [`series`]);
//! - algebra: coefficient forms over a large prime field, a graded
//!   syzygy oracle for the kernel of `sum_i A(-a_i) -> A`, and the
//!   bidiagonal Hilbert--Burch construction whose signed maximal
//!   minors realize any admissible section ([`form`], [`syzygy`]).
//!
//! Cones (zero parts) and reducible sections (common factors with
//! multiplicity structure) are covered by [`cone`] and the reducible
//! half of [`scroll`]/[`syzygy`]; [`graph`] builds the specialization
//! diagram of all scrolls of a fixed codimension.

pub mod cone;
pub mod error;
pub mod field;
pub mod form;
mod linalg;
pub mod graph;
pub mod scroll;
pub mod series;
pub mod syzygy;

pub use cone::{classify_cone_section, ConeSectionResult};
pub use error::{Error, Result};
pub use field::{is_prime_u64, FieldConfig, SplitMix64, DEFAULT_FIELD_CHAR};
pub use form::{
    exact_divide, gcd_of_forms, random_form, squarefree_decomposition, squarefree_multiplicities,
    BinaryForm,
};
pub use graph::{partitions, specialization_graph, SpecializationEdge, SpecializationGraph};
pub use scroll::{
    check_reducible_conditions, check_section_conditions, enumerate_reducible_components,
    enumerate_sections, MultiplicityMultiset, ReducibleBucket, ReducibleTable, ScrollType,
    ValidityReport, Violation,
};
pub use series::{
    generic_section, hilbert_numerator_check, koszul_numerator, koszul_quotient,
    positive_truncate, IntPolynomial,
};
pub use syzygy::{
    analyze_section_form, columns_are_syzygies, construct_irreducible_form,
    construct_reducible_form, hilbert_burch_matrix, is_prime_section, signed_maximal_minors,
    syzygy_degrees, LineChoice, SectionDecomposition, SectionForm, SyzygyMatrix,
};
