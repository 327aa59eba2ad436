//! Associative algebras given by structure constants, and their modules.

mod algebra;
mod module;
mod morita;
mod wedderburn;

pub use algebra::{default_labels, StructureAlgebra};
pub use module::{AlgModule, SearchConfig, Summand};
pub use morita::{Block, Corner, MoritaContextData, MoritaVerdict};
pub use wedderburn::{BlockStatus, Verdict, WedderburnBlock, WedderburnForm};

#[allow(unused_imports)]
pub(crate) use algebra::{combine_matrices, sparse};
#[allow(unused_imports)]
pub(crate) use module::{flatten, spin_with, unflatten};
