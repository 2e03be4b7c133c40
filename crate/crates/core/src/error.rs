use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("invalid edge weight {weight} between `{u}` and `{v}` (must be at least 3 or `inf`)")]
    InvalidWeight { u: String, v: String, weight: String },

    #[error("cannot parse parameter `{value}`: {reason}")]
    InvalidParameter { value: String, reason: String },

    #[error("too many vertices: {count} (limit {limit})")]
    TooManyVertices { count: usize, limit: usize },

    #[error("component {{{0}}} is not of finite type")]
    NotFinite(String),

    #[error("enumeration needs {required} elements but the cap is {cap}")]
    CapExceeded { required: String, cap: usize },

    #[error("diagram is not simply laced")]
    NotSimplyLaced,

    #[error("diagram is not collapse-free: edge `{0}`-`{1}` carries distinct nonzero parameters")]
    NotCollapseFree(String, String),

    #[error("diagram is not commutative: {0}")]
    NotCommutative(String),

    #[error("vertex set {0} is not independent")]
    NotIndependent(String),

    #[error("composition {0} has an internal part equal to 1")]
    ImproperComposition(String),

    #[error("the empty composition has no complement")]
    EmptyComposition,

    #[error("{what} {value} is out of range (max {max})")]
    OutOfRange { what: String, value: usize, max: usize },

    #[error("operation requires R = ∅ but R = {0}")]
    NilpotentsPresent(String),

    #[error("operation is undefined in characteristic 2")]
    Characteristic2,

    #[error("poset is not of rank at most two: {0}")]
    NotRankTwo(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
