//! Truncated formal power series in `t` with [`BiPoly`] coefficients, and the
//! exponential generating functions built from them.
//!
//! Every power `(1 + q t)^(a/q)` is realized as `exp(a * L)` with
//! `L = ln(1 + q t) / q`. Since `[t^n] L = (-1)^(n+1) q^(n-1) / n`, `q` is never
//! divided by.

use std::ops::{Add, Neg};

use crate::arith::{factorial, Rational};
use crate::error::{Error, Result};
use crate::poly::BiPoly;

/// Coefficients of `t^0 ..= t^order`; arithmetic is modulo `t^(order + 1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<BiPoly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BiPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = BiPoly::one();
        s
    }

    /// The series `t`, truncated at `order`.
    pub fn t(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = BiPoly::one();
        }
        s
    }

    /// Pads with zeros or truncates `coeffs` to length `order + 1`.
    pub fn from_coeffs(mut coeffs: Vec<BiPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, BiPoly::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    /// Raw coefficient of `t^n` (zero beyond the order).
    pub fn coeff(&self, n: usize) -> &BiPoly {
        self.coeffs.get(n).unwrap_or(BiPoly::zero_ref())
    }

    pub fn scale(&self, c: &BiPoly) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    /// Cauchy product modulo `t^(order + 1)`.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Series::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    fn require_zero_constant(&self) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::NonzeroConstantTerm)
        }
    }

    /// `sum_{k=0..N} self^k * weight(k)`, for a series with zero constant term.
    fn weighted_powers(&self, weight: impl Fn(usize) -> Rational) -> Result<Series> {
        self.require_zero_constant()?;
        let n = self.order();
        let mut acc = Series::one(n).scale(&BiPoly::constant(weight(0)));
        let mut power = Series::one(n);
        for k in 1..=n {
            power = power.mul(self)?;
            acc = acc.try_add(&power.scale(&BiPoly::constant(weight(k))))?;
        }
        Ok(acc)
    }

    /// `exp(self)`; the constant term must be zero.
    pub fn exp(&self) -> Result<Series> {
        self.weighted_powers(|k| Rational::from(factorial(k as u64)).recip())
    }

    /// `(exp(self) - 1) / self`, computed as `sum_k self^k / (k+1)!`.
    pub fn expm1_div(&self) -> Result<Series> {
        self.weighted_powers(|k| Rational::from(factorial(k as u64 + 1)).recip())
    }

    /// `n! * [t^n] self`: the `n`-th term of the sequence this series generates.
    pub fn coeff_extract(&self, n: usize) -> Result<BiPoly> {
        if n > self.order() {
            return Err(Error::OrderExceeded { n, order: self.order() });
        }
        Ok(self.coeffs[n].scale(&Rational::from(factorial(n as u64))))
    }
}

impl Add<&Series> for &Series {
    type Output = Series;

    /// Panics on order mismatch; use [`Series::try_add`] to handle it.
    fn add(self, rhs: &Series) -> Series {
        self.try_add(rhs).expect("series orders must match")
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

/// `ln(1 + q t) / q` truncated at `order`.
pub fn ln1p_qt_over_q(order: usize) -> Series {
    let mut s = Series::zero(order);
    for n in 1..=order {
        let c = Rational::sign_power(n + 1) * Rational::new(1, n as i64);
        s.coeffs[n] = BiPoly::monomial(c, n as u32 - 1, 0);
    }
    s
}

/// `(1 + q t)^(-r/q) * L^k / k!`, the generating function of column `k` of the
/// first-kind r-Whitney triangle.
pub fn egf_w(k: usize, order: usize) -> Series {
    let l = ln1p_qt_over_q(order);
    let prefactor = l.scale(&-BiPoly::r()).exp().expect("L has zero constant term");
    let mut column = Series::one(order);
    for _ in 0..k {
        column = column.mul(&l).expect("same order");
    }
    let column = column.scale(&BiPoly::constant(Rational::from(factorial(k as u64)).recip()));
    prefactor.mul(&column).expect("same order")
}

/// Generating function of `c_n^q(r)`: `exp(-r L) * sum_k L^k / (k! (k+1))`.
pub fn egf_c(order: usize) -> Series {
    let l = ln1p_qt_over_q(order);
    let prefactor = l.scale(&-BiPoly::r()).exp().expect("L has zero constant term");
    prefactor.mul(&l.expm1_div().expect("zero constant")).expect("same order")
}

/// Generating function of the second-kind polynomials: `exp(r L) * sum_k (-L)^k / (k! (k+1))`.
pub fn egf_chat(order: usize) -> Series {
    let l = ln1p_qt_over_q(order);
    let prefactor = l.scale(&BiPoly::r()).exp().expect("L has zero constant term");
    prefactor.mul(&(-&l).expm1_div().expect("zero constant")).expect("same order")
}
