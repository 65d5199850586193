use alloc::string::String;

use crate::poly::parse::ParseError;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is declared twice")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("block split {split} exceeds the {vars} ring variables")]
    InvalidBlock { split: usize, vars: usize },
    #[error("expected {expected} images, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("relations of `{0}` generate the unit ideal")]
    ImproperIdeal(String),
    #[error("morphism is not well defined: relation `{relation}` does not map to zero")]
    NotWellDefined { relation: String },
    #[error("morphism is not an extension (not dominant)")]
    NotAnExtension,
    #[error("morphism is not integral; subintegrality is only decided for integral morphisms")]
    NotIntegral,
    #[error("morphism is not a normalization: {0}")]
    NotANormalization(String),
    #[error("morphisms cannot be composed: target of the first is not the source of the second")]
    CompositionMismatch,
    #[error("element is transcendental over the source; generic degree is undefined")]
    Transcendental,
    #[error(transparent)]
    Parse(#[from] ParseError),
}
