//! Comodule algebras, Galois maps, smash products and equivariant modules.

mod biduality;
mod comodule_algebra;
mod equivariant;
mod smash;

pub use comodule_algebra::{
    ComoduleAlgebra, GaloisMap, ASSOCIATIVITY, COACTION_COASSOCIATIVE, COACTION_COUNITAL, COACTION_MULTIPLICATIVE,
    COACTION_UNITAL, UNIT,
};
pub use biduality::BidualityContext;
pub use equivariant::{Comodule, EquivariantModule};
pub use smash::{DoubleSmash, SmashAlgebra};
