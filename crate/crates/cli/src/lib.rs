//! Command-line front end for `typeb`: number triangles, sequences,
//! generating polynomials, umbral functionals, enumeration listings and the
//! identity checks.

pub mod commands;
pub mod expr;
