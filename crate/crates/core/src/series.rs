//! Truncated formal power series with complex coefficients.
//!
//! A series stores its first `order` coefficients. Every operation returns a
//! series whose stored coefficients equal those of the exact (untruncated)
//! result, so coefficient extraction below the truncation order is exact up
//! to floating-point rounding.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Result, WalkError};
use crate::scalar::Scalar;

/// Truncated power series `c₀ + c₁ z + … + c_{order−1} z^{order−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<T: Scalar> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> PowerSeries<T> {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "truncation order must be positive");
        Self {
            coeffs: vec![Complex::new(T::zero(), T::zero()); order],
        }
    }

    /// The constant series `value`.
    pub fn constant(value: Complex<T>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// The series `1`.
    pub fn one(order: usize) -> Self {
        Self::constant(Complex::new(T::one(), T::zero()), order)
    }

    /// A series from explicit leading coefficients, zero-padded or truncated
    /// to `order`.
    pub fn from_coeffs(coeffs: Vec<Complex<T>>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (dst, src) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = src;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `z^k`. Panics if `k` is at or beyond the truncation
    /// order.
    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Drops coefficients at or above `order`.
    pub fn truncate(mut self, order: usize) -> Self {
        assert!(
            0 < order && order <= self.coeffs.len(),
            "cannot truncate order {} to {}",
            self.coeffs.len(),
            order
        );
        self.coeffs.truncate(order);
        self
    }

    /// Multiplies by the scalar `factor`.
    pub fn scale(mut self, factor: Complex<T>) -> Self {
        for c in &mut self.coeffs {
            *c *= factor;
        }
        self
    }

    /// Multiplies by `z^k`, keeping the truncation order (top coefficients
    /// fall off).
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut s = Self::zero(order);
        for i in k..order {
            s.coeffs[i] = self.coeffs[i - k];
        }
        s
    }

    /// Divides by `z`: the constant term must vanish (within
    /// [`Scalar::SHIFT_GUARD_TOL`]) and the truncation order shrinks by one.
    ///
    /// Panics if the constant term does not vanish; the closed forms this
    /// supports guarantee analyticity at z = 0, so a nonzero constant term
    /// means the caller picked a wrong branch.
    pub fn shift_down(mut self) -> Self {
        assert!(
            self.coeffs[0].norm() <= T::SHIFT_GUARD_TOL,
            "series constant term {:?} does not vanish; cannot divide by z",
            self.coeffs[0]
        );
        assert!(self.coeffs.len() > 1, "cannot shift a constant series down");
        self.coeffs.remove(0);
        self
    }

    /// Quotient `self / den` to the common truncation order.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let order = self.matched_order(den);
        if den.coeffs[0].norm() <= T::SHIFT_GUARD_TOL {
            return Err(WalkError::ZeroConstantTerm);
        }
        let mut q = Self::zero(order);
        for n in 0..order {
            let mut acc = self.coeffs[n];
            for k in 0..n {
                acc -= q.coeffs[k] * den.coeffs[n - k];
            }
            q.coeffs[n] = acc / den.coeffs[0];
        }
        Ok(q)
    }

    /// Square root with branch fixed by s(0) = +1; requires constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        let order = self.order();
        let one = Complex::new(T::one(), T::zero());
        let deviation = (self.coeffs[0] - one).norm();
        if deviation > T::SHIFT_GUARD_TOL {
            return Err(WalkError::BadConstantTerm {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        let mut s = Self::zero(order);
        s.coeffs[0] = one;
        let half = Complex::new(T::of(0.5), T::zero());
        for n in 1..order {
            let mut acc = self.coeffs[n];
            for k in 1..n {
                acc -= s.coeffs[k] * s.coeffs[n - k];
            }
            s.coeffs[n] = acc * half;
        }
        Ok(s)
    }

    fn matched_order(&self, other: &Self) -> usize {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncation orders must match"
        );
        self.order()
    }
}

impl<T: Scalar> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn add(self, rhs: Self) -> PowerSeries<T> {
        let order = self.matched_order(rhs);
        let mut s = PowerSeries::zero(order);
        for (i, c) in s.coeffs.iter_mut().enumerate() {
            *c = self.coeffs[i] + rhs.coeffs[i];
        }
        s
    }
}

impl<T: Scalar> Sub for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn sub(self, rhs: Self) -> PowerSeries<T> {
        let order = self.matched_order(rhs);
        let mut s = PowerSeries::zero(order);
        for (i, c) in s.coeffs.iter_mut().enumerate() {
            *c = self.coeffs[i] - rhs.coeffs[i];
        }
        s
    }
}

impl<T: Scalar> Neg for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn neg(self) -> PowerSeries<T> {
        let mut s = self.clone();
        for c in &mut s.coeffs {
            *c = -*c;
        }
        s
    }
}

impl<T: Scalar> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn mul(self, rhs: Self) -> PowerSeries<T> {
        let order = self.matched_order(rhs);
        let mut s = PowerSeries::zero(order);
        for i in 0..order {
            let lhs_i = self.coeffs[i];
            if lhs_i.norm_sqr() == T::zero() {
                continue;
            }
            for j in 0..order - i {
                s.coeffs[i + j] += lhs_i * rhs.coeffs[j];
            }
        }
        s
    }
}
