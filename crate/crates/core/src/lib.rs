pub mod assoc;
pub mod coact;
mod cancel;
pub mod error;
pub mod exactla;
pub mod examples;
pub mod hopf;
pub mod igalois;
pub mod report;

pub use cancel::CancelToken;
pub use error::{Error, Result};

pub type QField = exactla::Rationals;
pub type FpField = exactla::PrimeField;
pub type QMatrix = exactla::Matrix<QField>;
pub type FpMatrix = exactla::Matrix<FpField>;
pub type QAlgebra = assoc::StructureAlgebra<QField>;
pub type FpAlgebra = assoc::StructureAlgebra<FpField>;
pub type QHopf = hopf::HopfData<QField>;
pub type FpHopf = hopf::HopfData<FpField>;
pub type QComoduleAlgebra = coact::ComoduleAlgebra<QField>;
pub type FpComoduleAlgebra = coact::ComoduleAlgebra<FpField>;
pub type QIGalois = igalois::IGaloisObject<QField>;
pub type FpIGalois = igalois::IGaloisObject<FpField>;
