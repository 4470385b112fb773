//! Exact arithmetic toolkit for finite-dimensional 2-term L∞-algebras.
//!
//! Algebras are given by rational structure constants. The crate verifies the
//! defining identities, computes Chevalley–Eilenberg cohomology, puts algebras
//! into the normal form `L^{g,U,ρ,J}` with an explicit isomorphism, and
//! certifies or refutes isomorphisms between them.

pub mod algebra;
pub mod builders;
pub mod classify;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactla;
pub mod lie;
pub mod morphism;

pub use algebra::{verify, GradedVector, TwoTermAlgebra, VerificationReport};
pub use error::Error;
pub use exactla::{Matrix, Rational, Subspace, Tensor};
pub use lie::{LieAlgebra, Representation};
pub use morphism::{compose, inverse, is_isomorphism, verify_morphism, Morphism};
