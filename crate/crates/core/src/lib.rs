//! Exact computation of the growth of graded identities for small graded
//! Lie algebras of matrices.
//!
//! The crate has two independent routes to the same numbers:
//!
//! * a *brute-force* route ([`spanning`]) that evaluates left-normed Lie
//!   words on generic matrices and takes exact ranks of the resulting
//!   coefficient matrices over the rationals, and
//! * a *closed-form* route ([`cocharacter`]) that sums products of
//!   hook-content style tableau counts over admissible shape tuples.
//!
//! Agreement of the two routes on overlapping inputs is the crate's main
//! correctness argument; the integration tests exercise exactly that.

pub mod cocharacter;
pub mod graded_model;
pub mod poly;
pub mod spanning;
pub mod tableaux;

/// Exact signed integer used throughout.
pub type Int = num_bigint::BigInt;
/// Exact unsigned integer used for dimension counts and growth values.
pub type Nat = num_bigint::BigUint;
/// Exact rational scalar; the coefficient field for all rank computations.
pub type Rat = num_rational::BigRational;
/// Multivariate polynomial over the exact rationals.
pub type Poly = poly::Polynomial<Rat>;
