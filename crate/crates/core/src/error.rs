use thiserror::Error;

/// Every failure the engine can report. Variants map one-to-one onto the
/// error names used by the operations that raise them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not a unit: {0}")]
    NotAUnit(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("quotient did not stabilize below precision cap {cap}")]
    NotFinite { cap: u32 },
    #[error("precision exhausted: need {needed}, have {available}")]
    PrecisionExhausted { needed: i64, available: i64 },
    #[error("forms live in different contexts")]
    ContextMismatch,
    #[error("degree error: {0}")]
    DegreeError(String),
    #[error("matrix has entries of odd degree")]
    OddEntries,
    #[error("morphisms are not composable: {0}")]
    Incomposable(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("not a cochain complex: coboundary squared is nonzero in degree {0}")]
    NotAComplex(usize),
    #[error("weight cap {cap} is insufficient: ranks changed at cap {recheck}")]
    CapInsufficient { cap: usize, recheck: usize },
    #[error("missing point: {0}")]
    MissingPoint(String),
    #[error("frame at {0} is not invertible over the chain ring")]
    NonInvertibleFrame(String),
    #[error("no coordinate of the vector field is nonvanishing at {0}")]
    NoNonvanishing(String),
    #[error("identity failed ({what}): residual {residual}")]
    IdentityFailed { what: String, residual: String },
    #[error("no power f_i^N with N <= {cap} lies in the denominator ideal")]
    MembershipNotFound { cap: u32 },
    #[error("zero is not simple (colength {0})")]
    NotSimple(usize),
    #[error("coordinate change is not invertible: {0}")]
    NotInvertibleChange(String),
    #[error("weights are not pairwise distinct")]
    RepeatedWeights,
    #[error("frame data does not cover a pole at infinity: {0}")]
    PoleAtInfinityUnhandled(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("unknown chain: {0}")]
    UnknownChain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
