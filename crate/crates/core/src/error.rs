use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: expected {expected:?}, found {found:?}")]
    ShapeMismatch { op: &'static str, expected: Vec<usize>, found: Vec<usize> },

    #[error("mixed ground fields: {0} and {1}")]
    FieldMismatch(crate::Field, crate::Field),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("map is singular: rank {rank} of {dim}")]
    Singular { rank: usize, dim: usize },

    #[error("{what}: basis vector {index} leaves the target subspace")]
    EscapesSubspace { what: String, index: usize },

    /// A structure failed certification; the report carries the witnesses.
    #[error("{what} failed certification:\n{report}")]
    Certification { what: String, report: Box<CheckReport> },

    #[error("{0}")]
    Structural(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),
}

impl Error {
    pub(crate) fn shape(op: &'static str, expected: &[usize], found: &[usize]) -> Error {
        Error::ShapeMismatch { op, expected: expected.to_vec(), found: found.to_vec() }
    }
}
