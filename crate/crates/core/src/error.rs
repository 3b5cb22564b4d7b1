use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: sl_{left} vs sl_{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid basis label `{0}`")]
    InvalidLabel(String),

    #[error("element is not traceless")]
    NotTraceless,

    #[error("element is not diagonal: {0}")]
    NotDiagonal(String),

    #[error("ad h does not act diagonally on the span; offending vector {vector}")]
    NotGraded { vector: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {0} gives the zero orbit, which has no sl2-triplet")]
    ZeroOrbit(String),

    #[error("partition {0} is outside the |p_i - p_j| <= 1 conormal family")]
    UnsupportedFamily(String),

    #[error("expected {expected} complement vectors, got {found}")]
    WrongComplementSize { expected: usize, found: usize },

    #[error("not a direct complement: {0}")]
    RankDefect(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("complement is not transversal at e: C(0) is singular")]
    NotTransversal,

    #[error("matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
