//! Exact-arithmetic toolkit for low-degree Lie and Leibniz cohomology.
//!
//! The crate computes, over the rationals and with zero tolerance:
//!
//! * Chevalley–Eilenberg cohomology `H^k(g, V)` for trivial and adjoint
//!   coefficients in every degree ([`cochain`]);
//! * Leibniz cohomology `HL^2(g, V)` in degrees 1–2, including the symmetric
//!   cocycle space `ZL^2_0` and the coupled-cocycle complement ([`cochain`],
//!   [`koszul`]);
//! * invariant symmetric bilinear forms, the Koszul map `B ↦ I_B` with
//!   `I_B(X,Y,Z) = B([X,Y],Z)`, its kernel/image, and the derived predicates
//!   (null, exact, quadratic) together with the structural decomposition
//!   `HL² ≅ H² ⊕ (c ⊗ ker I) ⊕ ((c ⊗ Im I) ∩ B³)` ([`koszul`]);
//! * positive-root systems for all finite types, the triple-sum property on
//!   positive roots, and explicit nilradical models for the classical types
//!   plus `G2` and `F4` ([`roots`]);
//! * generalized Cartan matrix classification into finite / affine /
//!   indefinite-hyperbolic / indefinite-non-hyperbolic ([`gcm`]).
//!
//! All linear algebra is sparse and exact ([`linalg`]); the scalar type is
//! generic ([`scalar::Scalar`]) with [`Q`] (arbitrary-precision rationals) as
//! the concrete type used by every domain module.
//!
//! A curated catalog of example algebras with frozen expected invariants lives
//! in [`catalog`]; the `lielab` binary (separate crate) fronts all of this on
//! the command line.

pub mod algebra;
pub mod catalog;
pub mod cochain;
pub mod gcm;
pub mod koszul;
pub mod lie_file;
pub mod linalg;
pub mod notation;
pub mod roots;
pub mod scalar;

/// The scalar type used by all domain modules: arbitrary-precision rationals.
pub type Q = num_rational::BigRational;

pub use algebra::{LieAlgebra, LinearMap, Subspace};
pub use cochain::{CochainBasis, Coefficients, CohomologyReport};
pub use koszul::{BilinearForm, CoupledCocycle, KoszulAnalysis, ThreeForm, TwoForm};

/// Convenience constructor for a rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Convenience constructor for a rational from a numerator/denominator pair.
pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}
