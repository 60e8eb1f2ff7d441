//! Graded computer algebra on the odd cotangent bundle `T*ΠA`.
//!
//! Lie algebroid, Courant and Poisson quasi-Nijenhuis structures are encoded
//! as polynomial hamiltonians; their structural conditions become exact
//! zero-tests of big-bracket expressions. A classical tensor oracle that
//! evaluates everything on basis sections provides independent ground truth.
//!
//! Conventions (see also the `conventions` integration test):
//!
//! * `{p_i, x^j} = δ_i^j`, `{θ_a, ξ^b} = {ξ^b, θ_a} = δ_a^b`.
//! * `X ↦ X^a θ_a`, `α ↦ α_a ξ^a`, `π ↦ Σ_{a<b} π^{ab} θ_a θ_b`,
//!   `ω ↦ Σ_{a<b} ω_{ab} ξ^a ξ^b`, `N ↦ Σ N^a_b ξ^b θ_a`.
//! * `μ = Σ ρ^i_a p_i ξ^a − Σ_{a<b} c^c_{ab} θ_c ξ^a ξ^b`.
//! * `d = {μ, ·}` on forms, `i_N = {N, ·}`, `J(𝒳) = {𝒳, J}`.
//! * Derived brackets `[u, v] = {{u, T}, v}` and anchors `ρ(u) f = {{u, T}, f}`.
//! * `twist_exp(φ, f) = Σ_k (1/k!) {φ, ·}^k f`, so `S̃ = twist_exp(ω, {π, μ})`.
//! * `i_{X∧Y} H = H(X, Y, ·)`; the Dorfman bracket of `μ + H` carries
//!   `−H(X, Y, ·)`.

// Index loops mirror the component formulas of the tensor calculus.
#![allow(clippy::needless_range_loop)]

pub mod base;
pub mod big_bracket;
pub mod catalog;
pub mod graded_algebra;
pub mod structures;
pub mod suites;
pub mod tensor_oracle;

pub use base::BasePoly;
pub use big_bracket::{ad, bracket, twist_exp, twist_exp_counted, Adjoint};
pub use catalog::{builtin, CatalogEntry, RandomKind};
pub use graded_algebra::{Bidegree, CoordinateSystem, GradedPoly, Parity, SuperMonomial, Symbol};
pub use structures::{
    CheckReport, Condition, CpsTriple, LieAlgebroidData, PqnQuadruple, Residual, TensorData,
    TensorKind,
};

/// Exact rationals backed by arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("coordinate systems differ: {0} vs {1}")]
    CoordinateMismatch(CoordinateSystem, CoordinateSystem),
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("invalid coordinate system: {0}")]
    InvalidCoordinates(String),
    #[error("twist generator must have bidegree (0,2) or (2,0), got {0}")]
    NotTwisting(String),
    #[error("expected bidegree {expected}, found {found}")]
    WrongBidegree { expected: Bidegree, found: String },
    #[error("{0} is not antisymmetric: {1}")]
    NotAntisymmetric(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("lambda must be -1, 0 or 1, got {0}")]
    InvalidLambda(i64),
    #[error("unknown catalog entry {0}")]
    UnknownCatalog(String),
    #[error("no Poisson bivector found for {entry} after {attempts} attempts")]
    NoPoisson { entry: String, attempts: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub(crate) fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
