use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("entry {value} is not a residue modulo {modulus}")]
    EntryOutOfRange { value: u64, modulus: u32 },

    #[error("entries sum to {sum}, which is not 0 modulo {modulus}")]
    NotZeroSum { sum: u64, modulus: u32 },

    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("weight vector {entries:?} must have non-negative entries summing to its length {len}")]
    InvalidWeight { entries: Vec<u32>, len: usize },

    #[error("weight vector has modulus {weight}, vector has modulus {vector}")]
    ModulusMismatch { weight: u32, vector: u32 },

    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u32, modulus: u32 },

    #[error("permutation of {found} letters cannot act on vectors of length {expected}")]
    PermutationSize { expected: usize, found: usize },

    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),

    #[error("permutation does not fix the weight vector")]
    PermutationMovesWeight,

    #[error("operation requires the classical weight (1, ..., 1)")]
    NonClassicalWeight,

    #[error("vector {0:?} has a zero entry")]
    NotTotallyNonzero(Vec<u32>),

    #[error("{0}")]
    OutOfDomain(String),

    #[error("no class with a repeated weight exists for N = {n}, W = {weight:?}")]
    NoWitness { n: u32, weight: Vec<u32> },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1")]
    InvalidDegree,

    #[error("field element {value} out of range for a field of order {order}")]
    InvalidElement { value: u64, order: u64 },

    #[error("q = {q} shares a factor with N = {n}; N must be invertible in the field")]
    BadCharacteristic { q: u64, n: u32 },

    #[error("t^{n} = 1: the fiber lies outside the smooth locus t^N != 1")]
    SingularFiber { n: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("q = {q} is not 1 modulo N = {n}, so the N-th roots of unity are not in the field")]
    RootsOfUnityMissing { q: u64, n: u32 },

    #[error("group element {0:?} has an entry that is not an N-th root of unity")]
    NotRootOfUnity(Vec<u32>),

    #[error("group element does not satisfy the weight relation prod zeta_i^w_i = 1")]
    WeightRelation,

    #[error("work budget exceeded: {required} candidates required, budget is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

/// Process exit classes for the command-line front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitClass {
    Usage,
    Domain,
    Budget,
    Io,
}

impl ExitClass {
    pub fn code(self) -> i32 {
        match self {
            ExitClass::Usage => 2,
            ExitClass::Domain => 3,
            ExitClass::Budget => 4,
            ExitClass::Io => 1,
        }
    }
}

impl Error {
    pub fn exit_class(&self) -> ExitClass {
        match self {
            Error::SingularFiber { .. } | Error::BadCharacteristic { .. } | Error::RootsOfUnityMissing { .. } => {
                ExitClass::Domain
            }
            Error::BudgetExceeded { .. } => ExitClass::Budget,
            Error::Io(_) => ExitClass::Io,
            _ => ExitClass::Usage,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
