//! The limiting density of the rescaled position X_t/t.
//!
//! As t → ∞ the rescaled position converges in distribution to a random
//! variable with density
//!
//! ```text
//! f(y) = ρ δ(y) + h(y) · |c|² y² / (π (1 − y²) √(|a|² − y²))    on (0, |a|)
//! ```
//!
//! where the weight function h(y) combines two fractions built from eight
//! scalars h₁…h₈ of the coin pair and the initial state, and the atom
//! weight ρ (the localization weight) follows from normalization:
//! ρ = 1 − ∫₀^{|a|} f_ac. The boundary and bulk determinants must agree for
//! the limit law to apply.
//!
//! Two independent routes are implemented: [`density_ac`] evaluates the
//! general h₁…h₈ machinery, while [`homogeneous_density`] evaluates the
//! specialized closed form available when the same coin acts everywhere.
//! Their pointwise agreement on homogeneous walks is part of the test
//! suite.

use num_complex::Complex;

use crate::coin::{Coin, WalkSpec};
use crate::error::{Result, WalkError};
use crate::quad::{integrate, QuadratureConfig};
use crate::scalar::Scalar;

/// The y-independent scalars entering h₁…h₈, precomputed from a spec.
///
/// Notation: `Δ^{1/2}` is the principal square root of the common
/// determinant, `c̄` conjugates the bulk entry c, and subscript 0 marks
/// boundary-coin entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HParams<T: Scalar> {
    /// |a| — right end of the absolutely-continuous support.
    a_abs: T,
    /// |c|
    c_abs: T,
    /// Im(c̄Δ^{1/2} − c̄₀Δ^{1/2})
    im_det_shift: T,
    /// Re(c̄Δ^{1/2} − c̄₀Δ^{1/2})
    re_det_shift: T,
    /// 1 + |c₀|² − 2Re(c̄c₀)
    coin_overlap: T,
    /// Im(c̄Δ^{1/2} + c̄c₀²Δ^{−1/2})
    im_mixed: T,
    /// Im(c̄c₀)
    im_cross: T,
    /// |α|² + |αc₀ + βd₀|²
    state_weight: T,
    /// Re(αΔ^{1/2}·conj(αc₀ + βd₀))
    re_state: T,
    /// Im(αΔ^{1/2}·conj(αc₀ + βd₀))
    im_state: T,
}

impl<T: Scalar> HParams<T> {
    /// Precomputes the scalars; fails if the determinants differ or a coin
    /// is degenerate.
    pub fn new(spec: &WalkSpec<T>) -> Result<Self> {
        if !spec.limit_eligible() {
            return Err(WalkError::AssumptionViolated {
                mismatch: spec.det_mismatch().to_f64().unwrap_or(f64::NAN),
            });
        }
        if !spec.is_generic() {
            return Err(WalkError::DegenerateCoin);
        }
        let u = spec.bulk_coin();
        let u0 = spec.boundary_coin();
        let det_sqrt = u.det_sqrt();
        // Δ^{−1/2} is the reciprocal of the same branch.
        let det_sqrt_inv = det_sqrt.inv();
        let c_bar = u.c().conj();
        let c0 = u0.c();

        let det_shift = c_bar * det_sqrt - c0.conj() * det_sqrt;
        let mixed = c_bar * det_sqrt + c_bar * c0 * c0 * det_sqrt_inv;
        let boundary_state = spec.alpha() * c0 + spec.beta() * u0.d();
        let state_proj = spec.alpha() * det_sqrt * boundary_state.conj();

        Ok(Self {
            a_abs: u.a().norm(),
            c_abs: u.c().norm(),
            im_det_shift: det_shift.im,
            re_det_shift: det_shift.re,
            coin_overlap: T::one() + c0.norm_sqr()
                - T::of(2.0) * (c_bar * c0).re,
            im_mixed: mixed.im,
            im_cross: (c_bar * c0).im,
            state_weight: spec.alpha().norm_sqr() + boundary_state.norm_sqr(),
            re_state: state_proj.re,
            im_state: state_proj.im,
        })
    }

    /// Right end of the absolutely-continuous support.
    pub fn support_end(&self) -> T {
        self.a_abs
    }

    /// h₁…h₈ at `y`.
    fn pieces(&self, y: T) -> [T; 8] {
        let two = T::of(2.0);
        let one_minus_y2 = T::one() - y * y;
        let root_unit = one_minus_y2.max(T::zero()).sqrt();
        let root_support = (self.a_abs * self.a_abs - y * y).max(T::zero()).sqrt();
        let c_sqr = self.c_abs * self.c_abs;
        [
            two * c_sqr * self.im_det_shift,
            self.coin_overlap * self.c_abs * root_unit,
            self.im_mixed * one_minus_y2,
            two * self.c_abs * self.re_det_shift * root_support,
            two * self.im_cross * root_unit * root_support,
            self.state_weight * root_unit,
            two * self.re_state * root_support,
            two * self.c_abs * self.im_state,
        ]
    }

    /// The weight function h(y) in its direct two-fraction form, with an
    /// absolute guard on each denominator.
    fn h_literal(&self, y: T) -> Result<T> {
        let [h1, h2, h3, h4, h5, h6, h7, h8] = self.pieces(y);
        let first = h1 + h2 - h3;
        let second = -h1 + h2 + h3;
        let den1 = first * first - (h4 + h5) * (h4 + h5);
        let den2 = second * second - (h4 - h5) * (h4 - h5);
        for den in [den1, den2] {
            if den.abs() < T::SINGULARITY_TOL {
                return Err(WalkError::NumericalSingularity {
                    magnitude: den.abs().to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(((h6 - h8) * first + h7 * (h4 + h5)) / den1
            + ((h6 + h8) * second + h7 * (h4 - h5)) / den2)
    }

    /// h(y)·y², evaluated in a form that stays accurate as y → 0.
    ///
    /// For coins with Im(c̄Δ^{1/2}) = |c| (the Hadamard coin among them) the
    /// first fraction's denominator scales like y⁴, so the direct form
    /// loses all digits to cancellation near the origin even though
    /// h(y)·y² has a finite limit there. Expanding h₁ + h₂ − h₃ around
    /// y = 0 removes the cancellation, and the singularity guard becomes
    /// relative to the denominator's natural scale.
    fn h_y_sqr_stable(&self, y: T) -> Result<T> {
        let two = T::of(2.0);
        let y2 = y * y;
        let one_minus_y2 = (T::one() - y2).max(T::zero());
        let root_unit = one_minus_y2.sqrt();
        let root_support = (self.a_abs * self.a_abs - y2).max(T::zero()).sqrt();
        let c_sqr = self.c_abs * self.c_abs;
        let h1 = two * c_sqr * self.im_det_shift;

        // h₁ + h₂ − h₃ = A(0) + y²·(im_mixed − |c|·overlap/(1 + √(1−y²)))
        let overlap_term = self.c_abs * self.coin_overlap;
        let shared = overlap_term / (T::one() + root_unit);
        let first0 = h1 + overlap_term - self.im_mixed;
        let second0 = -h1 + overlap_term + self.im_mixed;
        let first = first0 + y2 * (self.im_mixed - shared);
        let second = second0 + y2 * (-self.im_mixed - shared);

        let cross1 = (two * self.c_abs * self.re_det_shift + two * self.im_cross * root_unit)
            * root_support;
        let cross2 = (two * self.c_abs * self.re_det_shift - two * self.im_cross * root_unit)
            * root_support;
        let h6 = self.state_weight * root_unit;
        let h7 = two * self.re_state * root_support;
        let h8 = two * self.c_abs * self.im_state;

        let den1 = (first - cross1) * (first + cross1);
        let den2 = (second - cross2) * (second + cross2);
        let scale1 = (first.abs() + cross1.abs()) * (first.abs() + cross1.abs());
        let scale2 = (second.abs() + cross2.abs()) * (second.abs() + cross2.abs());
        for (den, scale) in [(den1, scale1), (den2, scale2)] {
            if den.abs() <= T::SINGULARITY_TOL * scale.max(T::min_positive_value()) {
                return Err(WalkError::NumericalSingularity {
                    magnitude: den.abs().to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(y2 * ((h6 - h8) * first + h7 * cross1) / den1
            + y2 * ((h6 + h8) * second + h7 * cross2) / den2)
    }

    /// f_ac(y) through the literal h(y).
    fn density_literal(&self, y: T) -> Result<T> {
        if y <= T::zero() || y >= self.a_abs {
            return Ok(T::zero());
        }
        let one_minus_y2 = T::one() - y * y;
        let root_support = (self.a_abs * self.a_abs - y * y).max(T::zero()).sqrt();
        let c_sqr = self.c_abs * self.c_abs;
        Ok(self.h_literal(y)? * c_sqr * y * y / (T::PI() * one_minus_y2 * root_support))
    }

    /// f_ac(y) through the stable evaluator; suitable for dense grids and
    /// quadrature nodes arbitrarily close to the origin.
    fn density_stable(&self, y: T) -> Result<T> {
        if y <= T::zero() || y >= self.a_abs {
            return Ok(T::zero());
        }
        let one_minus_y2 = T::one() - y * y;
        let root_support = (self.a_abs * self.a_abs - y * y).max(T::zero()).sqrt();
        let c_sqr = self.c_abs * self.c_abs;
        Ok(self.h_y_sqr_stable(y)? * c_sqr / (T::PI() * one_minus_y2 * root_support))
    }

    /// Integrand of ∫ f_ac dy after the substitution y = |a| sin φ, which
    /// cancels the 1/√(|a|² − y²) endpoint singularity against the
    /// Jacobian.
    fn mass_integrand(&self, phi: T) -> Result<T> {
        let y = self.a_abs * phi.sin();
        let c_sqr = self.c_abs * self.c_abs;
        Ok(self.h_y_sqr_stable(y)? * c_sqr / (T::PI() * (T::one() - y * y)))
    }

    /// ∫₀^{φ_hi} of the substituted integrand.
    fn ac_mass(&self, phi_hi: T, quad: &QuadratureConfig<T>) -> Result<T> {
        if phi_hi <= T::zero() {
            return Ok(T::zero());
        }
        integrate(&|phi| self.mass_integrand(phi), T::zero(), phi_hi, quad)
    }

    fn rho_value(&self, quad: &QuadratureConfig<T>) -> Result<T> {
        Ok(T::one() - self.ac_mass(T::FRAC_PI_2(), quad)?)
    }

    /// φ such that |a| sin φ = min(y, |a|).
    fn phi_of(&self, y: T) -> T {
        if y >= self.a_abs {
            T::FRAC_PI_2()
        } else {
            (y / self.a_abs).asin()
        }
    }
}

/// The weight function h(y) of the limit density, for 0 < y < |a|.
pub fn h_value<T: Scalar>(spec: &WalkSpec<T>, y: T) -> Result<T> {
    let params = HParams::new(spec)?;
    if y <= T::zero() || y >= params.support_end() {
        return Err(WalkError::OutOfSupport {
            y: y.to_f64().unwrap_or(f64::NAN),
        });
    }
    params.h_literal(y)
}

/// The absolutely-continuous part of the limit density:
/// `h(y)·|c|²y²/(π(1−y²)√(|a|²−y²))` on (0, |a|), zero elsewhere.
pub fn density_ac<T: Scalar>(spec: &WalkSpec<T>, y: T) -> Result<T> {
    HParams::new(spec)?.density_literal(y)
}

/// The absolutely-continuous limit density of a homogeneous walk (one coin
/// everywhere), via the specialized closed form rather than the h₁…h₈
/// machinery.
pub fn homogeneous_density<T: Scalar>(
    coin: &Coin<T>,
    alpha: Complex<T>,
    beta: Complex<T>,
    y: T,
) -> Result<T> {
    if !coin.is_generic() {
        return Err(WalkError::DegenerateCoin);
    }
    let a_abs = coin.a().norm();
    if y <= T::zero() || y >= a_abs {
        return Ok(T::zero());
    }
    let two = T::of(2.0);
    let det_sqrt = coin.det_sqrt();
    let c_abs = coin.c().norm();
    let c_sqr = c_abs * c_abs;
    let j = (coin.c().conj() * det_sqrt).im;
    let mix = alpha * coin.c() + beta * coin.d();
    let weight = alpha.norm_sqr() + mix.norm_sqr();
    let k = (alpha * det_sqrt * mix.conj()).im;
    let one_minus_y2 = T::one() - y * y;
    let num = two * c_sqr * c_abs * (weight - two * j * k) * y * y;
    let den = T::PI()
        * a_abs
        * a_abs
        * (c_sqr - j * j * one_minus_y2)
        * one_minus_y2
        * (a_abs * a_abs - y * y).max(T::zero()).sqrt();
    Ok(num / den)
}

/// The localization weight ρ = 1 − ∫₀^{|a|} f_ac(y) dy.
pub fn rho<T: Scalar>(spec: &WalkSpec<T>, quad: &QuadratureConfig<T>) -> Result<T> {
    HParams::new(spec)?.rho_value(quad)
}

/// The limit CDF: ρ + ∫₀^y f_ac, monotone from ρ at y = 0 to 1 at y = 1.
pub fn limit_cdf<T: Scalar>(spec: &WalkSpec<T>, y: T, quad: &QuadratureConfig<T>) -> Result<T> {
    let params = HParams::new(spec)?;
    let full = params.ac_mass(T::FRAC_PI_2(), quad)?;
    let rho = T::one() - full;
    if y <= T::zero() {
        return Ok(rho);
    }
    let partial = if y >= params.support_end() {
        full
    } else {
        params.ac_mass(params.phi_of(y), quad)?
    };
    Ok(rho + partial)
}

/// The full limit law of one spec: the atom weight ρ at the origin plus an
/// evaluable absolutely-continuous density on (0, |a|).
#[derive(Debug, Clone)]
pub struct DensityModel<T: Scalar> {
    params: HParams<T>,
    rho: T,
}

impl<T: Scalar> DensityModel<T> {
    pub fn new(spec: &WalkSpec<T>, quad: &QuadratureConfig<T>) -> Result<Self> {
        let params = HParams::new(spec)?;
        let rho = params.rho_value(quad)?;
        Ok(Self { params, rho })
    }

    /// Weight of the atom at the origin.
    pub fn rho(&self) -> T {
        self.rho
    }

    /// Right end of the absolutely-continuous support, |a|.
    pub fn support_end(&self) -> T {
        self.params.support_end()
    }

    /// f_ac(y), zero outside (0, |a|).
    pub fn density_ac(&self, y: T) -> Result<T> {
        self.params.density_stable(y)
    }

    /// ρ + ∫₀^y f_ac, reusing the cached atom weight.
    pub fn cdf(&self, y: T, quad: &QuadratureConfig<T>) -> Result<T> {
        if y <= T::zero() {
            return Ok(self.rho);
        }
        let partial = if y >= self.params.support_end() {
            T::one() - self.rho
        } else {
            self.params.ac_mass(self.params.phi_of(y), quad)?
        };
        Ok(self.rho + partial)
    }
}
