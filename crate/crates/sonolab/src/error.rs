use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed header: {0}")]
    MalformedWav(String),

    #[error("unsupported wav format: {0}")]
    UnsupportedWav(String),

    #[error("empty audio payload")]
    EmptyAudio,

    #[error("clip `{id}` is {len} samples, shorter than one frame of {frame_len}")]
    ClipTooShort {
        id: String,
        len: usize,
        frame_len: usize,
    },

    #[error("sample rate mismatch for `{id}`: clip {got} Hz, config {want} Hz (pass resample=linear to convert)")]
    SampleRateMismatch { id: String, got: u32, want: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("mel filter {index} has zero support (degenerate band edges)")]
    DegenerateMelFilter { index: usize },

    #[error("matrix is not symmetric (relative asymmetry {0:.3e})")]
    NotSymmetric(f64),

    #[error("jacobi sweep budget exceeded after {0} sweeps")]
    SweepBudget(usize),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("need at least {need} items, got {got}: {what}")]
    TooFewItems {
        what: String,
        need: usize,
        got: usize,
    },

    #[error("all points identical: median pairwise distance is zero")]
    DegenerateAffinity,

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("empty subcategory {category}/{subcategory}")]
    EmptySubcategory {
        category: String,
        subcategory: usize,
    },

    #[error("no prototype set for subcategory {category}/{subcategory}")]
    PrototypeUnset {
        category: String,
        subcategory: usize,
    },

    #[error("prototype `{image_id}` is not a member of subcategory {category}/{subcategory}")]
    PrototypeNotMember {
        category: String,
        subcategory: usize,
        image_id: String,
    },

    #[error("dangling reference in {path}: {detail}")]
    DanglingReference { path: PathBuf, detail: String },

    #[error("format error in {path}: {detail}")]
    Format { path: PathBuf, detail: String },

    #[error("non-finite loss at epoch {epoch}, batch {batch}: {detail}")]
    NonFiniteLoss {
        epoch: usize,
        batch: usize,
        detail: String,
    },

    #[error("covariance not positive semidefinite (eigenvalue {0:.3e} below tolerance)")]
    NotPsd(f64),

    #[error("samples must lie in [-1, 1]; got {0}")]
    SampleOutOfRange(f64),

    #[error("missing prerequisite: {0}")]
    MissingPrerequisite(String),

    #[error("config hash mismatch for {artifact}: expected {expected}, found {found} (use --force to override)")]
    HashMismatch {
        artifact: String,
        expected: String,
        found: String,
    },

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
