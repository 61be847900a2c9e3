//! Bit-exact file interchange: NPY array files, dataset manifests, and score
//! tables. Serialization is deterministic — equal inputs produce byte-identical
//! files — and readers reject malformed or invariant-violating input instead
//! of repairing it.

mod manifest;
mod npy;
mod score_table;

pub use manifest::{read_manifest, write_manifest, DatasetManifest, SampleRecord, Split};
pub use npy::{read_array_file, write_array_file};
pub use score_table::{read_score_table, write_score_table, Domain, ScoreRow, ScoreTable, Variant};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("io failure on {path}: {source}")]
    IoFailure {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed array file: {0}")]
    Malformed(String),
    #[error("unsupported dtype descriptor {0:?} (supported: <f4, <f8, <i8)")]
    UnsupportedDtype(String),
    #[error("unsupported layout: fortran_order=True (only row-major files are read)")]
    UnsupportedLayout,
    #[error("integer value {0} is not exactly representable in float64")]
    PrecisionLoss(i64),
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Tensor(#[from] crate::tensor::TensorError),
}

impl IoError {
    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        IoError::IoFailure {
            path: path.display().to_string(),
            source,
        }
    }
}
