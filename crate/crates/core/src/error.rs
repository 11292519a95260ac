use thiserror::Error;

use crate::qseries::expr::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("diagram `{0}` is not in Σ (an even row length has p_i ≠ q_i)")]
    NotInSigma(String),

    #[error("diagram `{0}` is not in Λ")]
    NotInLambda(String),

    #[error("diagram `{0}` is not a Richardson diagram of Σ_b")]
    NotRichardson(String),

    #[error("diagram `{0}` has an odd part")]
    HasOddPart(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("pair parity {parity:?} is inconsistent with signature ({p},{q})")]
    InconsistentParity {
        parity: crate::groups::PairParity,
        p: u32,
        q: u32,
    },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("series has zero constant term and cannot be inverted")]
    NotAUnit,

    #[error("coefficient x^{k} requested beyond truncation order {order}")]
    BeyondOrder { k: usize, order: usize },

    #[error("invalid product factor: {0}")]
    InvalidFactor(String),

    #[error("bilateral family is not symmetrizable: {0}")]
    NotSymmetrizable(String),

    #[error("expected an integer coefficient, found {0}")]
    NonIntegral(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
