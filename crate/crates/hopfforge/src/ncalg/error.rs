//! Error type shared by the algebra, tensor, and structure-map layers.

use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("rewriting fuel exhausted while reducing {word}")]
    FuelExhausted { word: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("generator index {0} out of range for the presentation")]
    GeneratorIndex(usize),
    #[error("rewrite rule #{index} has an empty left-hand side")]
    EmptyRuleLhs { index: usize },
    #[error("rewrite rule #{index} ({lhs} -> ...) does not decrease the termination measure")]
    MeasureViolation { index: usize, lhs: String },
    #[error("missing homomorphism image for generator {0}")]
    MissingImage(String),
    #[error("tensor leg count mismatch: expected {expected}, got {got}")]
    LegCount { expected: usize, got: usize },
    #[error("tensor leg index {0} out of range")]
    LegIndex(usize),
    #[error("tensor legs disagree with the expected presentations")]
    LegPresentation,
    #[error("square matrices of sizes {0} and {1} cannot be combined")]
    MatrixSize(usize, usize),
    #[error("{0}")]
    Structure(String),
}
