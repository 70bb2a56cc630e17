use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("quarter-dimension n must be at least 1")]
    ZeroDimension,
    #[error(
        "dimension 4n = {dim} exceeds the size guard {guard}; raise the guard to build anyway"
    )]
    SizeGuard { dim: u32, guard: u32 },
    #[error("dimension 4n = {dim} cannot be materialized (limit {limit})")]
    TooLarge { dim: u32, limit: u32 },
    #[error("invalid bit vector: {0}")]
    InvalidVertex(String),
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(u32, u32),
    #[error("edge {u}-{v} has squared distance {got}, expected {expected}")]
    DistanceViolation {
        u: u32,
        v: u32,
        got: u32,
        expected: u32,
    },
    #[error("vertex index {index} out of range for {count} vertices")]
    VertexOutOfRange { index: u32, count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("cycle length {s} outside supported range {min}..={max}")]
    CycleLength { s: u32, min: u32, max: u32 },
    #[error("{what}: {count} items exceed the enumeration guard {guard}")]
    Guard {
        what: &'static str,
        count: u128,
        guard: u128,
    },
    #[error("forbidden graph #{0} is a forest")]
    Forest(usize),
    #[error("probability {0} outside the open interval (0, 1)")]
    Probability(f64),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("edge mask has length {got}, base graph has {expected} edges")]
    MaskLength { got: usize, expected: usize },
    #[error("malformed edge mask hex string")]
    MaskHex,
    #[error("{got} multipliers supplied for {expected} events")]
    AssignmentLength { got: usize, expected: usize },
    #[error("multiplier for event {index} violates the assignment invariant: {reason}")]
    Assignment { index: usize, reason: &'static str },
    #[error("hypothesis 0 < delta*P < 0.69 fails for events {0:?}")]
    BollobasHypothesis(Vec<usize>),
    #[error("no feasible parameters: {0}")]
    Infeasible(String),
    #[error("time limits need the `std` feature")]
    NoClock,
}

pub type Result<T> = core::result::Result<T, Error>;
