//! Hodge structures: numerical tables with their tensor operations, and
//! concretely realized filtrations over number fields with a polarization
//! test.

mod numbers;
mod realized;

use thiserror::Error;

use crate::field::NumberFieldError;

pub use numbers::{parse_bidegree, HodgeNumbers};
pub use realized::{polarization_check, PolarizationForm, PolarizationVerdict, RealizedHodgeStructure, Vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HodgeError {
    #[error("bidegree ({p},{q}) does not have weight {weight}")]
    WrongWeight { p: i64, q: i64, weight: i64 },
    #[error("h^{{{p},{q}}} differs from h^{{{q},{p}}}")]
    Asymmetric { p: i64, q: i64 },
    #[error("Hodge numbers have total dimension {declared} but the ambient space has dimension {ambient}")]
    DimensionMismatch { declared: usize, ambient: usize },
    #[error("a vector of F^{p} does not have length {expected}")]
    VectorLength { p: i64, expected: usize },
    #[error("F^{0} is given twice")]
    DuplicateStep(i64),
    #[error("F^{0} is missing")]
    MissingStep(i64),
    #[error("the basis of F^{0} is linearly dependent")]
    DependentStep(i64),
    #[error("F^{p} has dimension {found}, expected {expected}")]
    StepDimension { p: i64, expected: usize, found: usize },
    #[error("F^{inner} is not contained in F^{outer}")]
    NotNested { outer: i64, inner: i64 },
    #[error("not a Hodge filtration for the declared numbers: {0}")]
    NotAHodgeFiltration(String),
    #[error("the coordinate field has no conjugation map")]
    NoConjugation,
    #[error("form must be square of the ambient dimension")]
    FormShape,
    #[error("form is not (-1)^{weight}-symmetric")]
    FormSymmetry { weight: i64 },
    #[error("form has weight {form} but the structure has weight {structure}")]
    WeightMismatch { form: i64, structure: i64 },
    #[error(transparent)]
    Field(NumberFieldError),
}
