use thiserror::Error;

/// Errors raised by the domain operations.
///
/// The `Display` strings are part of the CLI output (`{"error": ...}`), so
/// keep them short and stable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not primitive")]
    NotPrimitive,
    #[error("not a horizontal knot type")]
    NotHorizontal,
    #[error("contact parameter n must be at least 1")]
    InvalidContactParameter,
    #[error("span does not extend to an integer basis")]
    NotABasis,
    #[error("horizontal torus: profile formula inapplicable")]
    HorizontalTorus,
    #[error("component index {index} out of range for {count} components")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("malformed presentation: {0}")]
    MalformedPresentation(&'static str),
    #[error("not smoothly isotopic")]
    NotSmoothlyIsotopic,
    #[error("tb_min {tb_min} exceeds tb_max {tb_max}")]
    EmptyRange { tb_min: i64, tb_max: i64 },
    #[error("depth {depth} needs {nodes} nodes, above the bound of {bound}")]
    ResourceBound { depth: u32, nodes: u64, bound: u64 },
    #[error("insufficient depth")]
    InsufficientDepth,
}

pub type Result<T> = std::result::Result<T, Error>;
