use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the exact engine, the numerical oracle, and the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a discriminant (must be congruent to 0 or 1 mod 4)")]
    NotADiscriminant(i64),

    #[error("discriminant {0} is a perfect square")]
    SquareDiscriminant(i64),

    #[error("form {0} is not positive definite")]
    NotPositiveDefinite(String),

    #[error("forms {0} and {1} have different discriminants")]
    DiscriminantMismatch(String, String),

    #[error("weight parameter k = {0} must be a positive even integer")]
    OddWeight(u32),

    #[error("single-discriminant traces require k in {{2, 4}}, got k = {0}")]
    UnsupportedWeight(u32),

    /// The CM point lies on a geodesic of discriminant `disc`; the trace
    /// formula's hypothesis fails there and no value is defined.
    #[error("CM point of discriminant {cm_disc} lies on the geodesic of Q = {form} (D = {disc})")]
    GeodesicCollision {
        disc: i64,
        cm_disc: i64,
        form: String,
    },

    #[error("coefficient vector entry at square discriminant D = {0}")]
    SquareEntry(i64),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("evaluation point too close to a pole: |Q(z,1)| = {0:e}")]
    PoleProximity(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
