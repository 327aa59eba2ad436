//! Exact linear algebra: fields, dense matrices, subspaces and polynomials.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod subspace;

pub use field::{is_prime, validate_scalar_literal, Field, PrimeField, Rationals, ScalarField};
pub use matrix::{kernel, quotient_map, solve, tensor, Matrix};
pub use poly::{char_poly, factor_over_prime_field, local_min_poly, min_poly, rational_roots, Polynomial};
pub use subspace::Subspace;
