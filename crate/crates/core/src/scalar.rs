//! Floating-point scalar abstraction.
//!
//! All walk machinery is generic over the real component type of the complex
//! amplitudes. The [`Scalar`] trait bundles the numeric traits the library
//! needs together with the validation tolerances, which scale with the
//! precision of the type.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar backing all complex amplitudes (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Entrywise tolerance for unitarity, |det| = 1, and state normalization.
    const VALIDATION_TOL: Self;
    /// Tolerance on |Δ₀ − Δ| below which the boundary and bulk determinants
    /// count as equal.
    const DET_MATCH_TOL: Self;
    /// Threshold below which a coin entry counts as zero (degenerate coin).
    const DEGENERACY_TOL: Self;
    /// Guard for constant terms that must vanish before a series is divided
    /// by its variable, and for nonzero leading coefficients in division.
    const SHIFT_GUARD_TOL: Self;
    /// Smallest denominator magnitude tolerated when combining the two
    /// fractions of the limit-density weight function.
    const SINGULARITY_TOL: Self;
    /// Default absolute tolerance for adaptive quadrature.
    const DEFAULT_QUAD_TOL: Self;

    /// Shorthand for lossy conversion from `f64` literals in generic code.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 literal converts to Scalar")
    }
}

impl Scalar for f64 {
    const VALIDATION_TOL: Self = 1e-12;
    const DET_MATCH_TOL: Self = 1e-10;
    const DEGENERACY_TOL: Self = 1e-12;
    const SHIFT_GUARD_TOL: Self = 1e-12;
    const SINGULARITY_TOL: Self = 1e-13;
    const DEFAULT_QUAD_TOL: Self = 1e-8;
}

impl Scalar for f32 {
    const VALIDATION_TOL: Self = 1e-5;
    const DET_MATCH_TOL: Self = 1e-4;
    const DEGENERACY_TOL: Self = 1e-6;
    const SHIFT_GUARD_TOL: Self = 1e-5;
    const SINGULARITY_TOL: Self = 1e-6;
    const DEFAULT_QUAD_TOL: Self = 1e-4;
}
