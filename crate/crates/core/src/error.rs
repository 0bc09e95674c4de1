//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by coin validation, series arithmetic, and the limit-law
/// evaluators.
///
/// Diagnostic payloads are reported as `f64` regardless of the scalar type
/// the computation ran at.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    /// Coin entries fail the unitarity check.
    #[error("coin matrix is not unitary (max entry deviation {max_dev:.3e})")]
    NotUnitary { max_dev: f64 },

    /// Initial coin state fails |α|² + |β|² = 1.
    #[error("initial coin state is not normalized (|α|²+|β|² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    /// A coin entry is (numerically) zero, so the generating-function and
    /// limit-density formulas, which divide by entries, do not apply.
    #[error("coin has a zero entry; generating functions and limit densities are undefined")]
    DegenerateCoin,

    /// The boundary and bulk determinants differ, so the limit law does not
    /// apply.
    #[error("boundary and bulk coin determinants differ by {mismatch:.3e}; limit law unavailable")]
    AssumptionViolated { mismatch: f64 },

    /// Density/weight evaluation requested outside the open support interval.
    #[error("point y = {y} lies outside the open support interval")]
    OutOfSupport { y: f64 },

    /// Series division by a series with vanishing constant term.
    #[error("series division requires a nonzero constant term in the divisor")]
    ZeroConstantTerm,

    /// Series square root requires a unit constant term.
    #[error("series square root requires constant term 1 (got deviation {deviation:.3e})")]
    BadConstantTerm { deviation: f64 },

    /// A denominator in the weight function dropped below the guard
    /// threshold.
    #[error("weight-function denominator magnitude {magnitude:.3e} below guard threshold")]
    NumericalSingularity { magnitude: f64 },

    /// Adaptive quadrature hit its depth limit before reaching the requested
    /// tolerance.
    #[error("quadrature failed to reach tolerance {requested:.3e} (worst panel error {achieved:.3e})")]
    QuadratureFailure { achieved: f64, requested: f64 },
}

/// Crate-wide result alias.
pub type Result<V> = std::result::Result<V, WalkError>;
