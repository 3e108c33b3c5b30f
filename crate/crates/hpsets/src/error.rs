use std::path::PathBuf;

/// Errors reported by every module in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("no facets given")]
    EmptyInput,

    #[error("facets have mixed sizes: {0} and {1} vertices")]
    MixedDimension(usize, usize),

    #[error("facet [{0}] repeats a vertex")]
    DegenerateFacet(String),

    #[error("duplicate facet [{0}]")]
    DuplicateFacet(String),

    #[error("dimension {p} out of range (valid {lo}..={hi})")]
    DimensionOutOfRange { p: usize, lo: usize, hi: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("length mismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("complex is not a closed connected pseudomanifold: {0}")]
    NotPseudomanifold(String),

    #[error("complex is not orientable")]
    NotOrientable,

    #[error("cochain is not closed")]
    NotClosed,

    #[error("cell [{0}] not found in the complex")]
    CellNotFound(String),

    #[error("signature {signature} does not contain the anchor dimension {anchor}")]
    AnchorMissing { anchor: usize, signature: String },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("cannot read `{path}`: {source}")]
    FileUnreadable {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("corpus member `{name}` failed validation: {reason}")]
    ValidationFailed { name: String, reason: String },

    #[error("signed mode requires an orientable member, but `{member}` is not orientable")]
    SignedRequiresOrientation { member: String },

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("facet file line {line}: {msg}")]
    MalformedFacetFile { line: usize, msg: String },

    #[error("cochain file line {line}: {msg}")]
    MalformedCochainFile { line: usize, msg: String },

    #[error("malformed signature list `{0}`")]
    MalformedSignature(String),

    #[error("malformed rational `{0}`")]
    MalformedRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
