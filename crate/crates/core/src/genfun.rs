//! Closed-form generating functions of the walk amplitudes.
//!
//! For a walk launched from site 0 with coin state `(α, β)`, the series
//! `Ψ(x, z) = Σ_t ψ(x, t) zᵗ` has an explicit closed form built from
//!
//! ```text
//! λ₊ = (1 + Δz² − √(Δ²z⁴ + 2Δ(1 − 2|a|²)z² + 1)) / (2dz)
//! Bʳ(0, z) = (λ₊ − az) / (acz)
//! ```
//!
//! and the common denominator
//! `1 − b₀z − bc₀z² − bΔ₀z³ − adΔ₀z³Bʳ(0,z) − ac₀dz²Bʳ(0,z)`. Extracting
//! coefficients of the assembled series reproduces the amplitudes of
//! [`crate::evolution`] exactly, which is how the two routes cross-check
//! each other.
//!
//! All divisions by `z` are coefficient shifts guarded by a
//! vanishing-constant-term assertion: the closed forms are analytic at
//! z = 0, so a nonvanishing constant term indicates a branch error and
//! panics rather than silently corrupting coefficients.

use num_complex::Complex;

use crate::coin::{Coin, WalkSpec};
use crate::error::{Result, WalkError};
use crate::scalar::Scalar;
use crate::series::PowerSeries;

/// The series of `λ₊`, exact to the requested truncation order.
///
/// `λ₊` is the root of the characteristic quadratic that is analytic at
/// z = 0 (the square root branch is fixed by `√1 = +1`); its expansion
/// starts `az + O(z³)`.
pub fn lambda_plus<T: Scalar>(coin: &Coin<T>, order: usize) -> Result<PowerSeries<T>> {
    Ok(closed_form_parts(coin, order)?.0)
}

/// The series of `Bʳ(0, z) = (λ₊ − az)/(acz)`, exact to the requested
/// truncation order. Its expansion starts at z².
pub fn br0<T: Scalar>(coin: &Coin<T>, order: usize) -> Result<PowerSeries<T>> {
    Ok(closed_form_parts(coin, order)?.1)
}

/// Computes `λ₊` and `Bʳ(0, z)` at internal headroom so both come back
/// exact to `order` despite the two divisions by `z`.
fn closed_form_parts<T: Scalar>(
    coin: &Coin<T>,
    order: usize,
) -> Result<(PowerSeries<T>, PowerSeries<T>)> {
    if !coin.is_generic() {
        return Err(WalkError::DegenerateCoin);
    }
    assert!(order >= 1, "truncation order must be positive");
    let w = order + 2;
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let det = coin.det();
    let a = coin.a();

    // Δ²z⁴ + 2Δ(1 − 2|a|²)z² + 1
    let radicand = PowerSeries::from_coeffs(
        vec![
            one,
            zero,
            det.scale(T::of(2.0) * (T::one() - T::of(2.0) * a.norm_sqr())),
            zero,
            det * det,
        ],
        w,
    );
    let root = radicand.sqrt()?;

    // numerator of λ₊: 1 + Δz² − √(...); vanishes at z = 0
    let poly = PowerSeries::from_coeffs(vec![one, zero, det], w);
    let half_inv_d = one / coin.d().scale(T::of(2.0));
    let lam = (&poly - &root).shift_down().scale(half_inv_d);

    // numerator of Bʳ(0, z): λ₊ − az; also vanishes at z = 0
    let az = PowerSeries::from_coeffs(vec![zero, a], order + 1);
    let br = (&lam - &az).shift_down().scale(one / (a * coin.c()));

    Ok((lam.truncate(order), br))
}

/// The shared series ingredients of the closed form for one spec.
struct Assembly<T: Scalar> {
    lam: PowerSeries<T>,
    br: PowerSeries<T>,
    denom: PowerSeries<T>,
    /// `αΔ₀z + αc₀ + βd₀`
    boundary_mix: PowerSeries<T>,
}

impl<T: Scalar> Assembly<T> {
    fn new(spec: &WalkSpec<T>, order: usize) -> Result<Self> {
        if !spec.boundary_coin().is_generic() || !spec.bulk_coin().is_generic() {
            return Err(WalkError::DegenerateCoin);
        }
        let u0 = spec.boundary_coin();
        let u = spec.bulk_coin();
        let (a, b, d) = (u.a(), u.b(), u.d());
        let (b0, c0, d0) = (u0.b(), u0.c(), u0.d());
        let det0 = u0.det();
        let one = Complex::new(T::one(), T::zero());

        let (lam, br) = closed_form_parts(u, order)?;

        // 1 − b₀z − bc₀z² − bΔ₀z³ − adΔ₀z³Bʳ(0,z) − ac₀dz²Bʳ(0,z)
        let poly = PowerSeries::from_coeffs(vec![one, -b0, -b * c0, -b * det0], order);
        let denom = &(&poly - &br.shift_up(3).scale(a * d * det0))
            - &br.shift_up(2).scale(a * c0 * d);

        let boundary_mix = PowerSeries::from_coeffs(
            vec![spec.alpha() * c0 + spec.beta() * d0, spec.alpha() * det0],
            order,
        );

        Ok(Self {
            lam,
            br,
            denom,
            boundary_mix,
        })
    }

    /// `(Ψ_↓(0, z), Ψ_↑(0, z))`.
    fn site_zero(&self, spec: &WalkSpec<T>) -> Result<(PowerSeries<T>, PowerSeries<T>)> {
        let u0 = spec.boundary_coin();
        let u = spec.bulk_coin();
        let (a, b, d) = (u.a(), u.b(), u.d());
        let (a0, b0) = (u0.a(), u0.b());
        let det0 = u0.det();
        let order = self.denom.order();
        let zero = Complex::new(T::zero(), T::zero());
        let (alpha, beta) = (spec.alpha(), spec.beta());

        // (b + adBʳ)(αΔ₀z + αc₀ + βd₀)z² / denom + α
        let front = &PowerSeries::constant(b, order) + &self.br.clone().scale(a * d);
        let down_num = (&front * &self.boundary_mix).shift_up(2);
        let down = &down_num.div(&self.denom)? + &PowerSeries::constant(alpha, order);

        // (αa₀z + βb₀z + βbΔ₀z³ + βadΔ₀z³Bʳ) / denom + β
        let up_poly = PowerSeries::from_coeffs(
            vec![zero, alpha * a0 + beta * b0, zero, beta * b * det0],
            order,
        );
        let up_num = &up_poly + &self.br.shift_up(3).scale(beta * a * d * det0);
        let up = &up_num.div(&self.denom)? + &PowerSeries::constant(beta, order);

        Ok((down, up))
    }

    /// `(Ψ_↓(x, z), Ψ_↑(x, z))` for `x ≥ 1`, given `(dλ₊/a)^{x−1}`.
    fn site_positive(
        &self,
        spec: &WalkSpec<T>,
        gpow: &PowerSeries<T>,
    ) -> Result<(PowerSeries<T>, PowerSeries<T>)> {
        let d = spec.bulk_coin().d();
        let up_num = &gpow.shift_up(1) * &self.boundary_mix;
        let up = up_num.div(&self.denom)?;
        let down_num = &(gpow * &self.br.shift_up(1).scale(d)) * &self.boundary_mix;
        let down = down_num.div(&self.denom)?;
        Ok((down, up))
    }

    /// `dλ₊/a`, the per-site propagation factor.
    fn site_factor(&self, spec: &WalkSpec<T>) -> PowerSeries<T> {
        self.lam
            .clone()
            .scale(spec.bulk_coin().d() / spec.bulk_coin().a())
    }
}

/// `(Ψ_↓(x, z), Ψ_↑(x, z))` exact to the requested truncation order.
pub fn psi_series<T: Scalar>(
    spec: &WalkSpec<T>,
    x: usize,
    order: usize,
) -> Result<(PowerSeries<T>, PowerSeries<T>)> {
    let assembly = Assembly::new(spec, order)?;
    if x == 0 {
        return assembly.site_zero(spec);
    }
    let g = assembly.site_factor(spec);
    let mut gpow = PowerSeries::one(order);
    for _ in 0..x - 1 {
        gpow = &gpow * &g;
    }
    assembly.site_positive(spec, &gpow)
}

/// The amplitude pair `(ψ_↓(x, t), ψ_↑(x, t))`, extracted as the `z^t`
/// coefficients of the generating functions.
pub fn amplitude_at<T: Scalar>(
    spec: &WalkSpec<T>,
    x: usize,
    t: usize,
) -> Result<(Complex<T>, Complex<T>)> {
    let (down, up) = psi_series(spec, x, t + 1)?;
    Ok((down.coeff(t), up.coeff(t)))
}

/// All generating-function series of one spec up to a maximum site, sharing
/// one truncation order.
#[derive(Debug, Clone)]
pub struct GenFunBundle<T: Scalar> {
    /// `Ψ_↓(x, z)` indexed by site.
    pub psi_down: Vec<PowerSeries<T>>,
    /// `Ψ_↑(x, z)` indexed by site.
    pub psi_up: Vec<PowerSeries<T>>,
    pub lambda_plus: PowerSeries<T>,
    pub br0: PowerSeries<T>,
    pub denom: PowerSeries<T>,
}

impl<T: Scalar> GenFunBundle<T> {
    /// Assembles the series for sites `0..=x_max` at the given truncation
    /// order.
    pub fn new(spec: &WalkSpec<T>, x_max: usize, order: usize) -> Result<Self> {
        let assembly = Assembly::new(spec, order)?;
        let mut psi_down = Vec::with_capacity(x_max + 1);
        let mut psi_up = Vec::with_capacity(x_max + 1);
        let (d0, u0) = assembly.site_zero(spec)?;
        psi_down.push(d0);
        psi_up.push(u0);
        let g = assembly.site_factor(spec);
        let mut gpow = PowerSeries::one(order);
        for _ in 1..=x_max {
            let (down, up) = assembly.site_positive(spec, &gpow)?;
            psi_down.push(down);
            psi_up.push(up);
            gpow = &gpow * &g;
        }
        Ok(Self {
            psi_down,
            psi_up,
            lambda_plus: assembly.lam,
            br0: assembly.br,
            denom: assembly.denom,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::StateVector;
    use crate::testutil::{boundary_spec, localizing_spec, random_generic_coin};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn lambda_starts_at_a_times_z() {
        let h: Coin<f64> = Coin::hadamard();
        let lam = lambda_plus(&h, 6).unwrap();
        assert_abs_diff_eq!(lam.coeff(0).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(lam.coeff(1).re, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-14);
        assert_abs_diff_eq!(lam.coeff(1).im, 0.0, epsilon = 1e-14);

        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..10 {
            let coin = random_generic_coin(&mut rng);
            let lam = lambda_plus(&coin, 4).unwrap();
            assert!((lam.coeff(1) - coin.a()).norm() < 1e-13);
        }
    }

    #[test]
    fn lambda_satisfies_defining_quadratic() {
        // (2dzλ₊ − (1 + Δz²))² = Δ²z⁴ + 2Δ(1 − 2|a|²)z² + 1
        let order = 24;
        let mut rng = StdRng::seed_from_u64(5);
        let mut coins = vec![Coin::hadamard(), Coin::phased_hadamard()];
        coins.extend((0..8).map(|_| random_generic_coin(&mut rng)));
        for coin in coins {
            let det = coin.det();
            let lam = lambda_plus(&coin, order).unwrap();
            let lhs = &lam
                .shift_up(1)
                .scale(coin.d() * c(2.0, 0.0))
                - &PowerSeries::from_coeffs(vec![c(1.0, 0.0), c(0.0, 0.0), det], order);
            let square = &lhs * &lhs;
            let radicand = PowerSeries::from_coeffs(
                vec![
                    c(1.0, 0.0),
                    c(0.0, 0.0),
                    det * c(2.0 * (1.0 - 2.0 * coin.a().norm_sqr()), 0.0),
                    c(0.0, 0.0),
                    det * det,
                ],
                order,
            );
            let dev = square
                .coeffs()
                .iter()
                .zip(radicand.coeffs())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            assert!(dev < 1e-12, "residual {dev}");
        }
    }

    #[test]
    fn br0_identity_and_leading_terms() {
        let order = 20;
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..10 {
            let coin = random_generic_coin(&mut rng);
            let lam = lambda_plus(&coin, order).unwrap();
            let br = br0(&coin, order).unwrap();
            // ac z Bʳ(0,z) + az = λ₊
            let recon = &br
                .shift_up(1)
                .scale(coin.a() * coin.c())
                + &PowerSeries::from_coeffs(vec![c(0.0, 0.0), coin.a()], order);
            let dev = recon
                .coeffs()
                .iter()
                .zip(lam.coeffs())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            assert!(dev < 1e-13);
            assert_abs_diff_eq!(br.coeff(0).norm(), 0.0, epsilon = 1e-13);
        }
        let h: Coin<f64> = Coin::hadamard();
        assert_abs_diff_eq!(br0(&h, 8).unwrap().coeff(0).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn degenerate_coins_are_rejected() {
        let id: Coin<f64> = Coin::identity();
        assert!(matches!(
            lambda_plus(&id, 4),
            Err(WalkError::DegenerateCoin)
        ));
        assert!(matches!(br0(&id, 4), Err(WalkError::DegenerateCoin)));
        let spec = WalkSpec::homogeneous(id, c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(matches!(
            psi_series(&spec, 0, 4),
            Err(WalkError::DegenerateCoin)
        ));
        assert!(matches!(
            amplitude_at(&spec, 0, 3),
            Err(WalkError::DegenerateCoin)
        ));
    }

    #[test]
    fn constant_coefficients_are_initial_state() {
        let spec = localizing_spec();
        let (down, up) = psi_series(&spec, 0, 5).unwrap();
        assert_abs_diff_eq!((down.coeff(0) - spec.alpha()).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((up.coeff(0) - spec.beta()).norm(), 0.0, epsilon = 1e-15);
        let (a0, b0) = amplitude_at(&spec, 0, 0).unwrap();
        assert_eq!((a0, b0), (spec.alpha(), spec.beta()));
    }

    #[test]
    fn amplitudes_vanish_beyond_support() {
        let spec = boundary_spec();
        for (x, t) in [(3usize, 2usize), (7, 1), (12, 11)] {
            let (down, up) = amplitude_at(&spec, x, t).unwrap();
            assert!(down.norm() < 1e-10 && up.norm() < 1e-10);
        }
    }

    /// Coefficients agree with direct evolution site by site, step by step.
    fn assert_matches_evolution(spec: &WalkSpec<f64>, x_max: usize, t_max: usize, tol: f64) {
        let bundle = GenFunBundle::new(spec, x_max, t_max + 1).unwrap();
        let mut state = StateVector::initial(spec);
        for t in 0..=t_max {
            if t > 0 {
                state = state.step(spec);
            }
            for x in 0..=x_max {
                let amp = state.amp(x);
                let dev = (bundle.psi_down[x].coeff(t) - amp.down)
                    .norm()
                    .max((bundle.psi_up[x].coeff(t) - amp.up).norm());
                assert!(dev < tol, "x={x} t={t} dev={dev}");
            }
        }
    }

    #[test]
    fn coefficients_match_evolution_for_hadamard() {
        let spec =
            WalkSpec::homogeneous(Coin::hadamard(), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_matches_evolution(&spec, 10, 50, 1e-10);
    }

    #[test]
    fn coefficients_match_evolution_for_boundary_walk() {
        assert_matches_evolution(&boundary_spec(), 10, 50, 1e-10);
    }

    #[test]
    fn single_precision_coefficients_match_evolution() {
        let spec = WalkSpec::<f32>::homogeneous(
            Coin::phased_hadamard(),
            Complex::new(0.0f32, 0.0),
            Complex::new(1.0, 0.0),
        )
        .unwrap();
        let mut state = StateVector::initial(&spec);
        let bundle = GenFunBundle::new(&spec, 4, 21).unwrap();
        for t in 0..=20 {
            if t > 0 {
                state = state.step(&spec);
            }
            for x in 0..=4 {
                let amp = state.amp(x);
                assert!((bundle.psi_down[x].coeff(t) - amp.down).norm() < 1e-4);
                assert!((bundle.psi_up[x].coeff(t) - amp.up).norm() < 1e-4);
            }
        }
    }

    #[test]
    fn long_horizon_return_probability() {
        let spec = localizing_spec();
        let (down, up) = amplitude_at(&spec, 0, 400).unwrap();
        let p = down.norm_sqr() + up.norm_sqr();
        assert_abs_diff_eq!(p, 0.0492, epsilon = 5e-5);
    }
}
