use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("entry {value} at ({row},{col}) is out of range for order {order}")]
    BadEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("malformed table: {0}")]
    BadShape(String),
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("generator {index} has {found} images, expected degree {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("closure exceeded the size limit of {limit} elements")]
    SizeLimitExceeded { limit: usize },
    #[error("subset is not a {role}: {detail}")]
    RoleViolation { role: String, detail: String },
    #[error("subset is empty")]
    EmptySubset,
    #[error("element {0} is not in the carrier")]
    NotMember(usize),
    #[error("partition is not compatible: {0}")]
    IncompatiblePartition(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("not a subsemigroup: {0}")]
    NotASubsemigroup(String),
    #[error("not a subact: {0}")]
    NotASubact(String),
    #[error("biact axiom {axiom} fails at {witness:?}")]
    ActionAxiomViolation {
        axiom: &'static str,
        witness: [usize; 3],
    },
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("unknown {relation}-class {id}")]
    UnknownClass { relation: String, id: usize },
    #[error("egg-box cell ({row},{col}) of D-class {d_class} is empty")]
    EmptyEggBoxCell {
        d_class: usize,
        row: usize,
        col: usize,
    },
    #[error("search cap exceeded after {explored} nodes")]
    SearchCapExceeded { explored: u64 },
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("{object} has no decision procedure for {relation}")]
    DecisionUnavailable { object: String, relation: String },
    #[error("action mismatch: {0}")]
    ActionMismatch(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("property sheet for {object} is inconsistent: {detail}")]
    InconsistentSheet { object: String, detail: String },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
