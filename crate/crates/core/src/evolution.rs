//! Exact state-vector evolution of the walk.
//!
//! One step applies the boundary coin at site 0 and the bulk coin elsewhere,
//! then shifts: up-spin moves right, down-spin moves left, except at site 0
//! where a down spin is reflected into an up spin in place. In terms of the
//! split coin blocks the update reads
//!
//! ```text
//! ψ(0, t+1) = P ψ(1, t) + S₀ ψ(0, t)
//! ψ(1, t+1) = P ψ(2, t) + Q₀ ψ(0, t)
//! ψ(x, t+1) = P ψ(x+1, t) + Q ψ(x−1, t)    for x ≥ 2
//! ```
//!
//! with `P = [[a, b], [0, 0]]`, `Q = [[0, 0], [c, d]]`, `S₀ = [[0, 0], [a₀, b₀]]`,
//! `Q₀ = [[0, 0], [c₀, d₀]]`.

use num_complex::Complex;

use crate::coin::WalkSpec;
use crate::scalar::Scalar;

/// Spin-resolved amplitude pair at one site.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinAmplitude<T: Scalar> {
    pub down: Complex<T>,
    pub up: Complex<T>,
}

impl<T: Scalar> SpinAmplitude<T> {
    pub fn zero() -> Self {
        Self {
            down: Complex::new(T::zero(), T::zero()),
            up: Complex::new(T::zero(), T::zero()),
        }
    }

    /// Site probability |ψ_↓|² + |ψ_↑|².
    pub fn prob(&self) -> T {
        self.down.norm_sqr() + self.up.norm_sqr()
    }
}

/// The full state at time `t`: amplitudes for sites `0..=t`.
///
/// The walker starts at site 0 and moves at most one site per step, so the
/// support is contained in `0..=t` and the dense storage is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Scalar> {
    t: usize,
    amps: Vec<SpinAmplitude<T>>,
}

/// Site probabilities at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution<T: Scalar> {
    pub t: usize,
    pub p: Vec<T>,
}

impl<T: Scalar> StateVector<T> {
    /// State at `t = 0`: amplitude `(α, β)` at site 0.
    pub fn initial(spec: &WalkSpec<T>) -> Self {
        Self {
            t: 0,
            amps: vec![SpinAmplitude {
                down: spec.alpha(),
                up: spec.beta(),
            }],
        }
    }

    /// Runs `t` steps from the initial state.
    pub fn evolve(spec: &WalkSpec<T>, t: usize) -> Self {
        let mut state = Self::initial(spec);
        for _ in 0..t {
            state = state.step(spec);
        }
        state
    }

    /// Applies one step, producing a new state at `t + 1`.
    pub fn step(&self, spec: &WalkSpec<T>) -> Self {
        let u0 = spec.boundary_coin();
        let u = spec.bulk_coin();
        let (a, b, c, d) = (u.a(), u.b(), u.c(), u.d());
        let (a0, b0, c0, d0) = (u0.a(), u0.b(), u0.c(), u0.d());
        let old = &self.amps;
        let at = |x: usize| old.get(x).copied().unwrap_or_else(SpinAmplitude::zero);

        let mut amps = Vec::with_capacity(old.len() + 1);
        // Site 0: down spin fed by P from site 1, up spin reflected by S₀.
        amps.push(SpinAmplitude {
            down: a * at(1).down + b * at(1).up,
            up: a0 * at(0).down + b0 * at(0).up,
        });
        // Site 1: boundary coin feeds the up spin via Q₀.
        amps.push(SpinAmplitude {
            down: a * at(2).down + b * at(2).up,
            up: c0 * at(0).down + d0 * at(0).up,
        });
        for x in 2..old.len() + 1 {
            amps.push(SpinAmplitude {
                down: a * at(x + 1).down + b * at(x + 1).up,
                up: c * at(x - 1).down + d * at(x - 1).up,
            });
        }
        Self { t: self.t + 1, amps }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Amplitude at `x`, zero beyond the stored support.
    pub fn amp(&self, x: usize) -> SpinAmplitude<T> {
        self.amps.get(x).copied().unwrap_or_else(SpinAmplitude::zero)
    }

    pub fn amps(&self) -> &[SpinAmplitude<T>] {
        &self.amps
    }

    /// Total probability Σ_x (|ψ_↓|² + |ψ_↑|²).
    pub fn norm_sqr(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, amp| acc + amp.prob())
    }

    /// Site probabilities p(x) = |ψ_↓(x)|² + |ψ_↑(x)|².
    pub fn distribution(&self) -> Distribution<T> {
        Distribution {
            t: self.t,
            p: self.amps.iter().map(SpinAmplitude::prob).collect(),
        }
    }

    /// Empirical CDF of the rescaled position: Σ_{x ≤ y·t} p(x) for
    /// `y ∈ [0, 1]`.
    pub fn empirical_cdf(&self, y: T) -> T {
        let bound = (y * T::of(self.t as f64)).floor();
        let cut = bound.to_f64().unwrap_or(0.0).max(0.0) as usize;
        self.amps
            .iter()
            .take(cut + 1)
            .fold(T::zero(), |acc, amp| acc + amp.prob())
    }

    #[cfg(test)]
    pub(crate) fn from_raw(t: usize, amps: Vec<SpinAmplitude<T>>) -> Self {
        Self { t, amps }
    }
}

impl<T: Scalar> Distribution<T> {
    /// Probability at site `x`, zero beyond the support.
    pub fn p(&self, x: usize) -> T {
        self.p.get(x).copied().unwrap_or_else(T::zero)
    }

    pub fn total(&self) -> T {
        self.p.iter().fold(T::zero(), |acc, &v| acc + v)
    }
}

/// Simulation-based estimate of the localization weight: the probability
/// mass on sites `0..=x_cut`, averaged over times `t` and `t+1` to damp the
/// parity oscillation of the site probabilities.
pub fn estimate_rho<T: Scalar>(spec: &WalkSpec<T>, t: usize, x_cut: usize) -> T {
    let state_t = StateVector::evolve(spec, t);
    let state_t1 = state_t.step(spec);
    let mass = |state: &StateVector<T>| {
        state
            .amps()
            .iter()
            .take(x_cut + 1)
            .fold(T::zero(), |acc, amp| acc + amp.prob())
    };
    (mass(&state_t) + mass(&state_t1)) * T::of(0.5)
}
