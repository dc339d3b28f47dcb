use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("not a primitive half-angle tangent: {num}/{den}")]
    NotPrimitiveHat { num: BigUint, den: BigUint },

    #[error("box is not primitive: {0}")]
    NotPrimitive(String),

    #[error("not Pythagorean: {a}² + {b}² ≠ {c}²")]
    NotPythagorean { a: BigUint, b: BigUint, c: BigUint },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed path code: unexpected {0:?}")]
    MalformedPath(char),

    #[error("depth {requested} exceeds the enumeration cap of {cap}")]
    DepthLimit { requested: usize, cap: usize },

    /// Two independent computations disagreed. Never expected with the
    /// standard generator matrices.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
