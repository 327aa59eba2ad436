//! Deterministic fixture generators.

mod algebras;
mod comodules;
mod groups;

pub use algebras::{diagonal_algebra, matrix_algebra, polynomial_quotient, zero_algebra};
pub use comodules::{
    cocycle_twisted_group_algebra, free_gset_function_algebra, graded_matrix_algebra, klein_quaternion_cocycle,
    self_coaction, translation_action, z2_sign_cocycle,
};
pub use groups::{dual_group_algebra, group_algebra, sweedler_h4, GroupTable};
