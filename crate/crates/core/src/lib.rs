//! Two-state discrete quantum walks on the half-line with a general
//! boundary coin.
//!
//! The walk lives on sites 0, 1, 2, … with a two-component spin. A boundary
//! coin acts at site 0 (where a down spin is reflected upward in place) and
//! a bulk coin acts everywhere else. The crate provides three independent
//! computations that cross-verify each other:
//!
//! * [`evolution`] — exact state-vector evolution of the one-step rules;
//! * [`genfun`] — closed-form generating functions whose coefficients
//!   reproduce the evolution amplitudes;
//! * [`weak_limit`] — the limiting density of X_t/t, with its localization
//!   weight ρ obtained by singular-endpoint quadrature.
//!
//! Everything is generic over the floating-point scalar through the
//! [`Scalar`] trait; the `*64`/`*32` aliases below pin the common concrete
//! choices.
//!
//! ```
//! use halfline_qw::{Coin64, WalkSpec64, StateVector64};
//! use num_complex::Complex64;
//!
//! let spec = WalkSpec64::homogeneous(
//!     Coin64::hadamard(),
//!     Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
//!     Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2),
//! )
//! .unwrap();
//! let state = StateVector64::evolve(&spec, 100);
//! assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
//! ```

pub mod coin;
pub mod error;
pub mod evolution;
pub mod genfun;
pub mod quad;
pub mod scalar;
pub mod series;
#[cfg(test)]
pub(crate) mod testutil;
pub mod weak_limit;

pub use coin::{Coin, WalkSpec};
pub use error::{Result, WalkError};
pub use evolution::{estimate_rho, Distribution, SpinAmplitude, StateVector};
pub use genfun::{amplitude_at, br0, lambda_plus, psi_series, GenFunBundle};
pub use quad::QuadratureConfig;
pub use scalar::Scalar;
pub use series::PowerSeries;
pub use weak_limit::{
    density_ac, h_value, homogeneous_density, limit_cdf, rho, DensityModel, HParams,
};

/// Double-precision aliases.
pub type Coin64 = Coin<f64>;
pub type WalkSpec64 = WalkSpec<f64>;
pub type StateVector64 = StateVector<f64>;
pub type Distribution64 = Distribution<f64>;
pub type PowerSeries64 = PowerSeries<f64>;
pub type GenFunBundle64 = GenFunBundle<f64>;
pub type DensityModel64 = DensityModel<f64>;
pub type QuadratureConfig64 = QuadratureConfig<f64>;

/// Single-precision aliases.
pub type Coin32 = Coin<f32>;
pub type WalkSpec32 = WalkSpec<f32>;
pub type StateVector32 = StateVector<f32>;
pub type Distribution32 = Distribution<f32>;
pub type PowerSeries32 = PowerSeries<f32>;
pub type GenFunBundle32 = GenFunBundle<f32>;
pub type DensityModel32 = DensityModel<f32>;
pub type QuadratureConfig32 = QuadratureConfig<f32>;
