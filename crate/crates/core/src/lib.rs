//! Exact-arithmetic toolkit for the geometry of `Gr(2,5)` inside `P^9`.
//!
//! The library provides, over arbitrary-precision rationals and odd prime
//! fields:
//!
//! * dense exact linear algebra ([`exactalg`]): rank, kernel, determinant,
//!   canonical subspaces;
//! * the exterior algebra of a fixed 5-dimensional space ([`exterior`]):
//!   wedge products, the induced map on `∧²`, the contraction
//!   `∧⁴V∨ → V`;
//! * Plücker quadrics and quadric pencils on `∧²V` ([`quadrics`]):
//!   translate linear systems, spans, corank profiles, common singular
//!   points, the hyperplane attached to a 3-plane of quadrics;
//! * the invariant tensor pairing distinguishing a matrix from its inverse
//!   transpose ([`invariants`]);
//! * symmetric functions in 5 variables ([`symfunc`]): Schur polynomials by
//!   Jacobi–Trudi, the substitution plethysm `s_λ[e₂]`, Schur-multiplicity
//!   extraction, Weyl dimensions;
//! * Bott's algorithm for homogeneous bundles on `Gr(2,5)` and twisted
//!   tangent cohomology of projective space ([`cohomology`]);
//! * finite-field models of the Grassmannian, its translate intersections
//!   and their degenerations ([`geometry`]).
//!
//! All arithmetic is exact; there is no floating point anywhere. With the
//! default `parallel` feature the data-parallel inner loops run on rayon;
//! disabling it yields a fully sequential build with identical results.

pub mod cohomology;
pub mod exactalg;
pub mod exterior;
pub mod geometry;
pub mod invariants;
pub mod matfile;
mod par;
pub mod quadrics;
pub mod symfunc;

pub use exactalg::{FieldTag, Matrix, Scalar, Subspace};

/// Crate-wide error type. Variants mirror the rejection conditions of the
/// public operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an odd prime >= 5")]
    InvalidModulus(u64),
    #[error("cannot parse field tag {0:?} (expected \"rational\" or \"fp:<p>\")")]
    FieldParse(String),
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("rows have inconsistent lengths")]
    RaggedRows,
    #[error("expected a k-vector of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("variance mismatch (vector vs covector side)")]
    VarianceMismatch,
    #[error("wedge degree {0} exceeds the ambient dimension 5")]
    DegreeOverflow(usize),
    #[error("index tuple must be strictly increasing within 1..=5")]
    BadIndexTuple,
    #[error("quadric matrix must be 10x10 symmetric")]
    NotAQuadric,
    #[error("quadrics are proportional; they do not span a pencil")]
    DegeneratePencil,
    #[error("operation requires a prime-field input")]
    RationalNotSupported,
    #[error("quadric space members must be linearly independent")]
    DependentQuadrics,
    #[error("empty input")]
    EmptyInput,
    #[error("partition must be weakly decreasing, got {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("partition has {got} parts but only {limit} variables are available")]
    TooManyParts { got: usize, limit: usize },
    #[error("weight mismatch: partition weight {partition} vs polynomial degree {degree}")]
    WeightMismatch { partition: usize, degree: usize },
    #[error("degree bound exceeded: {0} > {1}")]
    DegreeBound(usize, usize),
    #[error("substituted monomials must share one total degree")]
    MixedMonomialDegrees,
    #[error("weights must be dominant within each block")]
    NotDominant,
    #[error("point does not lie on all given quadrics")]
    NotOnQuadrics,
    #[error("unknown report name {0:?}")]
    UnknownReport(String),
    #[error("matrix entry ({row},{col}): {message}")]
    EntryParse {
        row: usize,
        col: usize,
        message: String,
    },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
