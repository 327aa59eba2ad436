use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial factorization is only supported over prime fields")]
    FactorizationUnsupported,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is not square")]
    NotSquare,
    #[error("algebra has no unit")]
    NotUnital,
    #[error("commutative algebra does not split over the ground field")]
    NotSplit,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("center does not split over the ground field")]
    NotSplitCenter,
    #[error("undetermined: {0}")]
    Undetermined(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("no nonzero invariant functional")]
    NoInvariantFunctional,
    #[error("invariant functional space has dimension {0}, expected 1")]
    NonUniqueFunctional(usize),
    #[error("functional is not faithful")]
    NotFaithful,
    #[error("antipode is singular")]
    SingularAntipode,
    #[error("coaction is not Galois")]
    NotGalois,
    #[error("coinvariants are not a split commutative algebra")]
    CoinvariantsNotSplit,
    #[error("no complete invariant functional found")]
    NoCompleteFunctional,
    #[error("Galois object is not connected")]
    Disconnected,
    #[error("coaction is not homogeneous")]
    NotHomogeneous,
    #[error("cannot certify that the smash product splits: {0}")]
    CannotCertifySplit(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("axiom violated: {0}")]
    AxiomViolation(String),
    #[error("module is zero")]
    ZeroModule,
    #[error("operation cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;
