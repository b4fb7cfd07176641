use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("`{element}` is not an element of {{{carrier}}}")]
    OutOfCarrier { element: String, carrier: String },

    #[error("carrier mismatch: {0}")]
    TypeMismatch(String),

    #[error("order relation has a cycle: {}", .0.join(" <= "))]
    Cycle(Vec<String>),

    #[error("not an order relation: {0}")]
    NotAnOrder(String),

    #[error("no bottom element")]
    NoBottom,

    #[error("no join for ({0}, {1})")]
    NoJoin(String, String),

    #[error("not a morphism: {0}")]
    NotAMorphism(String),

    #[error("not a Dep morphism: {0}")]
    NotDepMorphism(String),

    #[error("invalid witness pair: {0}")]
    InvalidWitness(String),

    #[error("invalid subalgebra: {0}")]
    InvalidSubalgebra(String),

    #[error("not distributive")]
    NotDistributive,

    #[error("not boolean")]
    NotBoolean,

    #[error("not bilinear: {0}")]
    NotBilinear(String),

    #[error("not tight: {0}")]
    NotTight(String),

    #[error("not self-adjoint: {0}")]
    NotSelfAdjoint(String),

    #[error("unary operation violates {axiom} at {witness}")]
    Axiom { axiom: String, witness: String },

    #[error("kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },

    #[error("relation is not symmetric: ({0}, {1}) has no reverse pair")]
    NotSymmetric(String, String),

    #[error("pair does not factor: {0}")]
    Factorization(String),

    #[error("graph is not reduced")]
    NotReduced,

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("generation exhausted after {0} attempts")]
    GenerationExhausted(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown check suite `{0}`")]
    UnknownSuite(String),
}
