//! Exact computational kernel for the neutral-signature Clifford algebras
//! Cl(m,m) in the extended Fock basis.
//!
//! Everything is computed over exact scalars (arbitrary-precision rationals,
//! optionally with an exact imaginary part), so algebraic identities hold
//! bit-for-bit rather than up to rounding. The crate provides:
//!
//! - the algebra itself: generators, Witt (null) basis, geometric product,
//!   wedge/contraction split, and the conjugation element ([`algebra`]),
//! - the minimal left ideal of spinors with its Fock coordinates, vector
//!   action and spinor conjugation ([`spinor`]),
//! - exact annihilator computations: the totally null plane M(ω), its
//!   dimension N(ω), Witt-basis normalizations ([`nullity`]),
//! - the zero-nullity classification machinery and constructive generators
//!   of spinors with prescribed nullity ([`classifier`]),
//! - an independent dense matrix representation used as a cross-checking
//!   oracle for all of the above ([`oracle`]).

pub mod algebra;
pub mod classifier;
pub mod context;
pub mod linalg;
pub mod nullity;
pub mod oracle;
pub mod sampling;
pub mod scalar;
pub mod spinor;

pub use algebra::{
    anticommutator, conjugation_element, contraction, geometric_product, make_generators, wedge,
    AlgebraElement, EFBIndex, Generators, SlotCode, VectorElement,
};
pub use classifier::{
    classify_zero_nullity, eigen_spinor_search, fock_basis_of_s_omega, m2_annihilator, s_omega,
    spinor_with_nullity, zero_nullity_basis, ClassificationResult, PlaneKind, SOmegaPlane,
    SideConditionTrace,
};
pub use context::{AlgebraContext, FieldTag};
pub use nullity::{
    exact_kernel, hyperbolic_split, nullity, tnp_check, witt_normalize, ActionMatrix,
    NullityReport, SpinorTransform, WittChange,
};
pub use scalar::Scalar;
pub use spinor::{fock_element, sign_table, BlockDecomposition, FockIndex, SignTable, Spinor};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("number of Witt pairs must be between 1 and {max}, got {got}", max = context::MAX_PAIRS)]
    InvalidPairCount { got: u32 },
    #[error("operands belong to different algebra contexts")]
    ContextMismatch,
    #[error("imaginary coefficients are not allowed over the rational field")]
    FieldMismatch,
    #[error("index length {got} does not match m = {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("element is not a vector (grade-1) element")]
    NotAVector,
    #[error("element does not lie in the spinor ideal")]
    NotASpinor,
    #[error("the zero spinor has no nullity report")]
    ZeroSpinor,
    #[error("vector is not null")]
    NonNullVector,
    #[error("vectors do not form a totally null plane")]
    DegenerateTnp,
    #[error("operation is not defined for m = 2: every nonzero spinor has positive nullity")]
    TwoPairException,
    #[error("spinor with nullity {k} is not constructible at m = {m}")]
    InfeasibleNullity { m: u32, k: u32 },
    #[error("spinor has positive nullity")]
    PositiveNullity,
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("internal contract violated: {0}")]
    ContractViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
