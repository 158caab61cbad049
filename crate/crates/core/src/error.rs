use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    Dimension {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("degenerate form: rank {rank} < size {size}")]
    Degenerate { rank: usize, size: usize },

    #[error("invalid structured matrix: {0}")]
    InvalidStructure(String),

    #[error("gram matrix does not satisfy the {expected} symmetry condition")]
    Symmetry { expected: &'static str },

    #[error("form kind mismatch: {left} vs {right}")]
    KindMismatch { left: &'static str, right: &'static str },

    #[error("operation not applicable: {0}")]
    NotApplicable(String),

    #[error("cocycle condition B*c(B) = Id violated")]
    CocycleViolation,

    #[error("matrix is not in the group: {0}")]
    NotInGroup(String),

    #[error("determinant must be 1, found {0}")]
    DeterminantNotOne(String),

    #[error("sampling failed after {attempts} attempts (seed {seed}); retry with a new seed")]
    SamplingFailure { seed: u64, attempts: u32 },

    #[error("parity violation: q = {q} must have the parity of p = {p}")]
    Parity { p: usize, q: usize },

    #[error("invalid descriptor field `{field}`: {reason}")]
    InvalidDescriptor { field: &'static str, reason: String },

    #[error("invalid class label {label} for {group}")]
    InvalidLabel { label: String, group: String },
}

impl Error {
    pub(crate) fn dim(op: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Error::Dimension {
            op,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
