use alloc::string::String;

use crate::ck_matrix::{Family, GeneratorLabel};
use crate::scalars::ScalarKind;

/// Errors raised by the algebra, matrix and cohomology routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("contraction vector must have at least one coefficient")]
    EmptyOmega,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("two-index coefficient needs a <= b, got a={a}, b={b}")]
    ReversedIndices { a: usize, b: usize },
    #[error("{kind:?} scalar cannot carry components beyond its kind")]
    KindViolation { kind: ScalarKind },
    #[error("scalar kinds differ: {left:?} vs {right:?}")]
    KindMismatch { left: ScalarKind, right: ScalarKind },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator {label} is not part of the {family} family")]
    LabelFamilyMismatch { label: GeneratorLabel, family: Family },
    #[error("invalid generator label {0}")]
    InvalidLabel(GeneratorLabel),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("matrix is not in the span of the basis")]
    NotInSpan,
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error("cochain does not satisfy the cocycle equations")]
    NotCocycle,
    #[error("unknown extension coefficient {0:?}")]
    UnknownCoefficient(String),
}

pub type Result<T> = core::result::Result<T, Error>;
