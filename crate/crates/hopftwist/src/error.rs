use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum HopfError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable id {0} has no assignment")]
    UnassignedVariable(u32),

    #[error("denominator vanishes under the given assignment{}", fmt_detail(.0))]
    DenominatorVanishes(String),

    #[error("map is not convolution invertible (det M = 0)")]
    NotConvolutionInvertible,

    #[error("cocycle equation fails at basis triple ({0}, {1}, {2})")]
    CocycleCheckFailed(usize, usize, usize),

    #[error("linear form is not lazy at basis element {0}")]
    NotLazy(usize),

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("sweedler parameter a must be nonzero")]
    ZeroParameter,

    #[error("column count {0} exceeds the configured cap {1}")]
    ResourceLimit(usize, usize),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

fn fmt_detail(s: &str) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!(" ({s})")
    }
}
