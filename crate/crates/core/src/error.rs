use thiserror::Error;

use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GnsError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("the origin cannot be a hole")]
    ZeroIsHole,

    #[error(
        "hole set is not closed: hole {hole} = {part} + {rest} with both parts in the semigroup"
    )]
    NotClosed {
        hole: Point,
        part: Point,
        rest: Point,
    },

    #[error("operation undefined for the semigroup with no holes")]
    EmptyHoleSet,

    #[error("axis {axis} is out of range 1..={max}")]
    AxisOutOfRange { axis: usize, max: usize },

    #[error("axis {0} is used more than once")]
    RepeatedAxis(usize),

    #[error("not a monomial semigroup: n(S) = {0}")]
    NotMonomialSemigroup(usize),

    #[error("ideal is not zero-dimensional: no pure power of variable {0}")]
    NotZeroDimensional(usize),

    #[error("the unit ideal has no associated semigroup")]
    UnitIdeal,

    #[error("ideal containment fails: generator {0} is not in the larger ideal")]
    NotContained(Point),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("not a numerical semigroup gap set: {0}")]
    InvalidNumericalSemigroup(String),

    #[error("genus {genus} not reached after {restarts} restarts")]
    Unreachable { genus: usize, restarts: usize },

    #[error("oracle search space too large: {0} candidate hole sets")]
    OracleTooLarge(u128),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, GnsError>;
