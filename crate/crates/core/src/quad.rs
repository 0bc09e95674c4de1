//! Adaptive composite Gauss–Legendre quadrature.
//!
//! The limit-density integrals are taken after the substitution
//! `y = |a| sin φ`, which removes the inverse-square-root endpoint
//! singularity, so the integrands handed to this module are bounded. A
//! four-point Gauss rule per panel with bisection-based error control is
//! enough for the requested tolerances, and its nodes are strictly interior,
//! so integrands are never probed at the interval endpoints where the
//! weight-function decomposition can degenerate.

use crate::error::{Result, WalkError};
use crate::scalar::Scalar;

/// Controls the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<T: Scalar> {
    /// Number of equal panels the interval is split into before adaptive
    /// bisection starts.
    pub subdivisions: usize,
    /// Absolute tolerance on the whole integral.
    pub abs_tol: T,
}

impl<T: Scalar> Default for QuadratureConfig<T> {
    fn default() -> Self {
        Self {
            subdivisions: 8,
            abs_tol: T::DEFAULT_QUAD_TOL,
        }
    }
}

const MAX_DEPTH: usize = 48;

// 4-point Gauss-Legendre nodes and weights on [-1, 1].
const GL_NODES: [f64; 2] = [0.339_981_043_584_856_3, 0.861_136_311_594_052_6];
const GL_WEIGHTS: [f64; 2] = [0.652_145_154_862_546_1, 0.347_854_845_137_453_9];

/// Integrates `f` over `[a, b]`.
///
/// The integrand is fallible so singularity guards inside it propagate out
/// of the quadrature instead of being averaged away.
pub fn integrate<T, F>(f: &F, a: T, b: T, config: &QuadratureConfig<T>) -> Result<T>
where
    T: Scalar,
    F: Fn(T) -> Result<T>,
{
    assert!(config.abs_tol > T::zero(), "tolerance must be positive");
    let panels = config.subdivisions.max(1);
    let width = (b - a) / T::of(panels as f64);
    let panel_tol = config.abs_tol / T::of(panels as f64);
    let mut total = T::zero();
    for i in 0..panels {
        let lo = a + width * T::of(i as f64);
        let hi = if i + 1 == panels {
            b
        } else {
            a + width * T::of((i + 1) as f64)
        };
        let coarse = gauss4(f, lo, hi)?;
        total += adapt(f, lo, hi, coarse, panel_tol, MAX_DEPTH)?;
    }
    Ok(total)
}

fn gauss4<T, F>(f: &F, lo: T, hi: T) -> Result<T>
where
    T: Scalar,
    F: Fn(T) -> Result<T>,
{
    let mid = (lo + hi) * T::of(0.5);
    let half = (hi - lo) * T::of(0.5);
    let mut acc = T::zero();
    for (&node, &weight) in GL_NODES.iter().zip(&GL_WEIGHTS) {
        let offset = half * T::of(node);
        acc += T::of(weight) * (f(mid + offset)? + f(mid - offset)?);
    }
    Ok(acc * half)
}

fn adapt<T, F>(f: &F, lo: T, hi: T, coarse: T, tol: T, depth: usize) -> Result<T>
where
    T: Scalar,
    F: Fn(T) -> Result<T>,
{
    let mid = (lo + hi) * T::of(0.5);
    let left = gauss4(f, lo, mid)?;
    let right = gauss4(f, mid, hi)?;
    let refined = left + right;
    let err = (refined - coarse).abs();
    if err <= tol {
        return Ok(refined);
    }
    if depth == 0 {
        return Err(WalkError::QuadratureFailure {
            achieved: err.to_f64().unwrap_or(f64::NAN),
            requested: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    let half_tol = tol * T::of(0.5);
    let l = adapt(f, lo, mid, left, half_tol, depth - 1)?;
    let r = adapt(f, mid, hi, right, half_tol, depth - 1)?;
    Ok(l + r)
}
