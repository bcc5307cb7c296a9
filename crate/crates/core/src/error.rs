use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{num} is not divisible by {den}")]
    NotDivisible { num: String, den: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid algebraic number: {0}")]
    InvalidAlgebraic(String),
    #[error("sigma maps {from} to {to}, outside 1..={n}")]
    MalformedSigma { from: usize, to: usize, n: usize },
    #[error("malformed combinatorial data: {0}")]
    MalformedComb(String),
    #[error("infeasible map: {}", .0.join("; "))]
    Infeasible(Vec<String>),
    #[error("point is exactly the turning point c{0}; its symbol is ambiguous")]
    AmbiguousBranch(usize),
    #[error("point lies outside the domain")]
    OutsideDomain,
    #[error("turning points c{0} and c{1} collide; itineraries are not unique")]
    CollidedTurningPoints(usize, usize),
    #[error("itinerary lengths differ and neither has a periodic tail")]
    LengthMismatch,
    #[error("bad itinerary: {0}")]
    BadItinerary(String),
    #[error("bifurcation factors differ across coefficients: {0} vs {1}")]
    FactorMismatch(String, String),
    #[error("bifurcation determinant vanishes at the given slope")]
    SingularAtLambda,
    #[error("expected {expected} controlled itineraries, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("operation requires a single-interval map")]
    NotSingleInterval,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
