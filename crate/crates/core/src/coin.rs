//! Coin matrices and walk specifications.
//!
//! A walk on the half-line is driven by two 2×2 unitary coins: a boundary
//! coin applied at site 0 and a bulk coin applied everywhere else, together
//! with the initial coin state at site 0.

use num_complex::Complex;

use crate::error::{Result, WalkError};
use crate::scalar::Scalar;

/// A validated 2×2 unitary coin matrix
/// `[[a, b], [c, d]]` with cached determinant `Δ = ad − bc`.
///
/// Values are immutable after construction and safe to share across threads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coin<T: Scalar> {
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
    det: Complex<T>,
}

impl<T: Scalar> Coin<T> {
    /// Validates the entries and builds a coin.
    ///
    /// Checks that the conjugate transpose times the matrix is the identity
    /// and that |Δ| = 1, both within [`Scalar::VALIDATION_TOL`].
    pub fn new(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Result<Self> {
        let one = T::one();
        // U†U entries: diagonal column norms and the off-diagonal overlap.
        let col0 = a.norm_sqr() + c.norm_sqr();
        let col1 = b.norm_sqr() + d.norm_sqr();
        let cross = a.conj() * b + c.conj() * d;
        let det = a * d - b * c;
        let max_dev = (col0 - one)
            .abs()
            .max((col1 - one).abs())
            .max(cross.norm())
            .max((det.norm() - one).abs());
        if max_dev > T::VALIDATION_TOL {
            return Err(WalkError::NotUnitary {
                max_dev: max_dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { a, b, c, d, det })
    }

    /// The Hadamard coin `(√2/2)·[[1, 1], [1, −1]]`.
    pub fn hadamard() -> Self {
        let h = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
        Self::new(h, h, h, -h).expect("Hadamard coin is unitary")
    }

    /// The Hadamard-like coin `(√2/2)·[[1, e^{iπ/4}], [e^{−iπ/4}, −1]]`,
    /// whose off-diagonal phases make the homogeneous walk localize.
    pub fn phased_hadamard() -> Self {
        let h = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
        let half = T::of(0.5);
        let b = Complex::new(half, half);
        let c = Complex::new(half, -half);
        Self::new(h, b, c, -h).expect("phased Hadamard coin is unitary")
    }

    /// The identity coin. Valid but degenerate: the off-diagonal entries
    /// vanish, so it is served only by direct evolution.
    pub fn identity() -> Self {
        let one = Complex::new(T::one(), T::zero());
        let zero = Complex::new(T::zero(), T::zero());
        Self::new(one, zero, zero, one).expect("identity coin is unitary")
    }

    pub fn a(&self) -> Complex<T> {
        self.a
    }

    pub fn b(&self) -> Complex<T> {
        self.b
    }

    pub fn c(&self) -> Complex<T> {
        self.c
    }

    pub fn d(&self) -> Complex<T> {
        self.d
    }

    /// Cached determinant `Δ = ad − bc`.
    pub fn det(&self) -> Complex<T> {
        self.det
    }

    /// Principal square root of the determinant: for `Δ = e^{iθ}` with
    /// `θ ∈ (−π, π]`, returns `e^{iθ/2}`.
    pub fn det_sqrt(&self) -> Complex<T> {
        let mut det = self.det;
        // A negative-zero imaginary part (an artifact of entry negation)
        // would flip arg(−1) to −π; the branch takes θ = +π on the cut.
        if det.im.is_zero() {
            det.im = T::zero();
        }
        det.sqrt()
    }

    /// True iff every entry is bounded away from zero, so the closed-form
    /// generating functions and limit densities (which divide by entries)
    /// apply.
    pub fn is_generic(&self) -> bool {
        self.a
            .norm()
            .min(self.b.norm())
            .min(self.c.norm())
            .min(self.d.norm())
            > T::DEGENERACY_TOL
    }
}

/// A complete walk specification: boundary coin, bulk coin, and the initial
/// coin state `(α, β)` at site 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkSpec<T: Scalar> {
    boundary_coin: Coin<T>,
    bulk_coin: Coin<T>,
    alpha: Complex<T>,
    beta: Complex<T>,
}

impl<T: Scalar> WalkSpec<T> {
    /// Builds a spec, validating |α|² + |β|² = 1.
    pub fn new(
        boundary_coin: Coin<T>,
        bulk_coin: Coin<T>,
        alpha: Complex<T>,
        beta: Complex<T>,
    ) -> Result<Self> {
        let norm_sqr = alpha.norm_sqr() + beta.norm_sqr();
        if (norm_sqr - T::one()).abs() > T::VALIDATION_TOL {
            return Err(WalkError::NotNormalized {
                norm_sqr: norm_sqr.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            boundary_coin,
            bulk_coin,
            alpha,
            beta,
        })
    }

    /// A homogeneous walk: the same coin everywhere.
    pub fn homogeneous(coin: Coin<T>, alpha: Complex<T>, beta: Complex<T>) -> Result<Self> {
        Self::new(coin, coin, alpha, beta)
    }

    pub fn boundary_coin(&self) -> &Coin<T> {
        &self.boundary_coin
    }

    pub fn bulk_coin(&self) -> &Coin<T> {
        &self.bulk_coin
    }

    pub fn alpha(&self) -> Complex<T> {
        self.alpha
    }

    pub fn beta(&self) -> Complex<T> {
        self.beta
    }

    /// Magnitude of the determinant mismatch `|Δ₀ − Δ|`.
    pub fn det_mismatch(&self) -> T {
        (self.boundary_coin.det() - self.bulk_coin.det()).norm()
    }

    /// True iff the boundary and bulk determinants agree within
    /// [`Scalar::DET_MATCH_TOL`]. The limit-law evaluators require this.
    pub fn limit_eligible(&self) -> bool {
        self.det_mismatch() <= T::DET_MATCH_TOL
    }

    /// True iff both coins are generic in the sense of [`Coin::is_generic`].
    pub fn is_generic(&self) -> bool {
        self.boundary_coin.is_generic() && self.bulk_coin.is_generic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hadamard_is_valid_and_generic() {
        let h: Coin<f64> = Coin::hadamard();
        assert!(h.is_generic());
        assert_abs_diff_eq!(h.det().re, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h.det().im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn identity_is_valid_but_degenerate() {
        let id: Coin<f64> = Coin::identity();
        assert!(!id.is_generic());
        assert_abs_diff_eq!(id.det().re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn phased_hadamard_is_generic_with_det_minus_one() {
        let u: Coin<f64> = Coin::phased_hadamard();
        assert!(u.is_generic());
        assert_abs_diff_eq!(u.det().re, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(u.det().im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn non_orthogonal_columns_rejected() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let e = Coin::new(c(s, 0.0), c(s, 0.0), c(s, 0.0), c(s, 0.0));
        assert!(matches!(e, Err(WalkError::NotUnitary { .. })));
    }

    #[test]
    fn entry_readback_round_trips() {
        let u: Coin<f64> = Coin::phased_hadamard();
        let v = Coin::new(u.a(), u.b(), u.c(), u.d()).unwrap();
        assert_eq!(u, v);
    }

    #[test]
    fn det_sqrt_principal_branch() {
        // Δ = 1 → 1
        let id: Coin<f64> = Coin::identity();
        assert_abs_diff_eq!(id.det_sqrt().re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(id.det_sqrt().im, 0.0, epsilon = 1e-14);
        // Δ = −1 → +i (principal branch of e^{iπ})
        let h: Coin<f64> = Coin::hadamard();
        assert_abs_diff_eq!(h.det_sqrt().re, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(h.det_sqrt().im, 1.0, epsilon = 1e-14);
        // Δ = e^{iπ/2} → e^{iπ/4}
        let u = Coin::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(u.det_sqrt().re, s, epsilon = 1e-14);
        assert_abs_diff_eq!(u.det_sqrt().im, s, epsilon = 1e-14);
    }

    #[test]
    fn spec_normalization_enforced() {
        let h: Coin<f64> = Coin::hadamard();
        let bad = WalkSpec::homogeneous(h, c(1.0, 0.0), c(0.5, 0.0));
        assert!(matches!(bad, Err(WalkError::NotNormalized { .. })));
    }

    #[test]
    fn limit_eligibility_tracks_determinants() {
        let h: Coin<f64> = Coin::hadamard();
        let e: Coin<f64> = Coin::phased_hadamard();
        let same = WalkSpec::new(e, h, c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(same.limit_eligible());
        // boundary with Δ₀ = i against bulk with Δ = −1
        let rot = Coin::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)).unwrap();
        let diff = WalkSpec::new(rot, h, c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(!diff.limit_eligible());
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn check<T: Send + Sync>() {}
        check::<Coin<f64>>();
        check::<WalkSpec<f64>>();
        check::<crate::StateVector<f64>>();
        check::<crate::PowerSeries<f64>>();
        check::<crate::DensityModel<f64>>();
    }

    #[test]
    fn single_precision_coins_validate() {
        let h: Coin<f32> = Coin::hadamard();
        assert!(h.is_generic());
        let u: Coin<f32> = Coin::phased_hadamard();
        assert!((u.det().re + 1.0).abs() < 1e-6);
        let spec = WalkSpec::homogeneous(
            h,
            Complex::new(1.0f32, 0.0),
            Complex::new(0.0, 0.0),
        )
        .unwrap();
        assert!(spec.limit_eligible());
    }

    use crate::testutil::unitary_family;

    proptest! {
        #[test]
        fn unitarity_accepts_parametrized_family(
            theta in 0.0..std::f64::consts::PI,
            phi in 0.0..std::f64::consts::TAU,
            psi in 0.0..std::f64::consts::TAU,
        ) {
            let _ = unitary_family(theta, phi, psi);
        }

        #[test]
        fn det_sqrt_squares_back(
            theta in 0.0..std::f64::consts::PI,
            phi in 0.0..std::f64::consts::TAU,
            psi in 0.0..std::f64::consts::TAU,
        ) {
            let u = unitary_family(theta, phi, psi);
            let r = u.det_sqrt() * u.det_sqrt();
            prop_assert!((r - u.det()).norm() < 1e-14);
        }
    }
}
