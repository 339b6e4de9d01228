use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("boundary space is not contained in the cycle space")]
    ContainmentViolation,
    #[error("d^{order} is not zero ({witness})")]
    NotNilpotent { order: usize, witness: String },
    #[error("H^{degree}_({level}) depends on data outside the truncation window")]
    DegreeOutOfWindow { level: usize, degree: i64 },
    #[error("sequence is not exact at node {0}")]
    ExactnessFailure(String),
    #[error("malformed short exact sequence: {0}")]
    ExactnessViolation(String),
    #[error("premise not met: {0}")]
    PremiseNotMet(String),
    #[error("relation {relation} fails in degree {degree}")]
    RelationViolation { relation: String, degree: i64 },
    #[error("square {0} does not commute")]
    CommutativityFailure(String),
    #[error("assumption violated: {0}")]
    AssumptionViolation(String),
    #[error("q-Leibniz rule fails: {0}")]
    LeibnizFailure(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("{} mismatching cells: {}", .0.len(), .0.join("; "))]
    Mismatch(Vec<String>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unavailable: {0}")]
    Unavailable(String),
}
