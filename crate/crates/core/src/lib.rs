//! Exact enumerative combinatorics of set partitions of types A and B.
//!
//! The crate computes Stirling, Bell and Eulerian numbers of both types,
//! ordered Bell polynomials and their gamma expansions, and Rota-style umbral
//! functionals acting on polynomials through falling-factorial bases. Every
//! closed form has a brute-force counterpart in [`enumerate`], and
//! [`verify`] packages the identities tying them together as deterministic
//! checks.
//!
//! Core routines are generic over the scalar ([`scalar::Scalar`] for
//! polynomial coefficients, [`scalar::IntScalar`] for triangle entries). The
//! aliases below fix the exact big-number instantiations used by default.

pub mod enumerate;
pub mod error;
pub mod poly;
pub mod scalar;
pub mod triangles;
pub mod umbral;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Basis, Falling, Poly};
pub use triangles::{BellData, Tables, Triangle, TriangleKind};
pub use umbral::Functional;



/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
/// Polynomial with exact rational coefficients.
pub type Polynomial = Poly<Rational>;
/// Number triangles over arbitrary-precision integers.
pub type ExactTables = Tables<Int>;

/// Machine-word rational, for small inputs where overflow is impossible.
pub type Rational64 = num_rational::Rational64;
/// Polynomial over machine-word rationals.
pub type Polynomial64 = Poly<Rational64>;
/// Number triangles over `i128`; exact while entries stay in range.
pub type Tables128 = Tables<i128>;
