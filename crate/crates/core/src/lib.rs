//! Exact Schur expansions of the Chern plethysm polynomials
//! `sbar_lam(x_1..x_n) = s_lam(e_1 - x_1, ..., e_1 - x_n)`, computed by
//! direct substitution, an alternating sum, closed forms for rows and
//! columns, lattice-path determinants, and chain-complex homology.
//!
//! The polynomial and linear-algebra layers are generic over the exact
//! [`Scalar`] in use; the aliases below fix the arbitrary-precision choices
//! used by the expansion routes.

pub mod chern;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod paths;
pub mod scalar;
pub mod shapes;
pub mod sympoly;
pub mod tableaux;

pub use error::Error;
pub use scalar::Scalar;
pub use shapes::{Partition, SkewShape};
pub use sympoly::{SchurExpansion, SparsePoly};
pub use tableaux::Tableau;

/// Arbitrary-precision integer coefficients.
pub type Integer = num_bigint::BigInt;
/// Exact rationals, used wherever a field is required.
pub type Rational = num_rational::BigRational;
/// Integer polynomials.
pub type Poly = SparsePoly<Integer>;
/// Integer Schur expansions, the canonical output form.
pub type Expansion = SchurExpansion<Integer>;
