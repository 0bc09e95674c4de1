//! Helpers shared by the unit tests.

use num_complex::Complex64;
use rand::Rng;

use crate::coin::{Coin, WalkSpec};

/// `[[cosθ, e^{iφ}sinθ], [e^{iψ}sinθ, −e^{i(φ+ψ)}cosθ]]` — unitary for all
/// θ, φ, ψ, with determinant `−e^{i(φ+ψ)}`.
pub fn unitary_family(theta: f64, phi: f64, psi: f64) -> Coin<f64> {
    let (s, t) = (theta.sin(), theta.cos());
    Coin::new(
        Complex64::new(t, 0.0),
        Complex64::from_polar(s, phi),
        Complex64::from_polar(s, psi),
        -Complex64::from_polar(t, phi + psi),
    )
    .expect("family member is unitary")
}

/// Random normalized initial coin state.
pub fn random_state(rng: &mut impl Rng) -> (Complex64, Complex64) {
    let v: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
    let alpha = Complex64::new(v[0], v[1]);
    let beta = Complex64::new(v[2], v[3]);
    let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
    (alpha / norm, beta / norm)
}

/// Random generic coin with entries bounded away from zero.
pub fn random_generic_coin(rng: &mut impl Rng) -> Coin<f64> {
    let theta = rng.random_range(0.15..(std::f64::consts::FRAC_PI_2 - 0.15));
    let phi = rng.random_range(0.0..std::f64::consts::TAU);
    let psi = rng.random_range(0.0..std::f64::consts::TAU);
    unitary_family(theta, phi, psi)
}

/// Homogeneous phased-Hadamard walk with state (√2/2, i√2/2); the walk
/// localizes with weight (√3−√2)(3−√3)/6.
pub fn localizing_spec() -> WalkSpec<f64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    WalkSpec::homogeneous(
        Coin::phased_hadamard(),
        Complex64::new(s, 0.0),
        Complex64::new(0.0, s),
    )
    .expect("state is normalized")
}

/// Phased-Hadamard boundary coin, Hadamard bulk coin, state (0, 1); the walk
/// localizes with weight ≈ 0.6779.
pub fn boundary_spec() -> WalkSpec<f64> {
    WalkSpec::new(
        Coin::phased_hadamard(),
        Coin::hadamard(),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    )
    .expect("state is normalized")
}

/// Homogeneous Hadamard walk with state (√2/2, i√2/2); no localization.
pub fn hadamard_spec() -> WalkSpec<f64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    WalkSpec::homogeneous(
        Coin::hadamard(),
        Complex64::new(s, 0.0),
        Complex64::new(0.0, s),
    )
    .expect("state is normalized")
}

/// Random generic boundary/bulk pair with matching determinants, plus a
/// random normalized initial state.
pub fn random_matched_spec(rng: &mut impl Rng) -> WalkSpec<f64> {
    let bulk = random_generic_coin(rng);
    let theta0 = rng.random_range(0.15..(std::f64::consts::FRAC_PI_2 - 0.15));
    let phi0 = rng.random_range(0.0..std::f64::consts::TAU);
    // Determinant is −e^{i(φ+ψ)}: match the phase sum to match determinants.
    let sum = bulk.b().arg() + bulk.c().arg();
    let psi0 = sum - phi0;
    let boundary = unitary_family(theta0, phi0, psi0);
    let (alpha, beta) = random_state(rng);
    WalkSpec::new(boundary, bulk, alpha, beta).expect("state is normalized")
}
