//! Truncated formal power series with exact rational coefficients.
//!
//! A [`FormalSeries`] keeps every coefficient of `x^0 ..= x^order`. Binary
//! operations truncate to the smaller of the two orders, so a result is
//! never claimed to be known further than its inputs.

pub mod bilateral;
pub mod bivariate;
pub mod expr;
pub mod identity;
pub mod product;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use bilateral::{bilateral_sum, BilateralFamily, KParity};
pub use bivariate::BivariateSeries;
pub use identity::{check_identity, check_identity_from, Verdict};
pub use product::{eval_product, Factor, ProductSpec};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 40;

/// Convenience constructor for an integer rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for `num/den`.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `num/den`, or just `num` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl FormalSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·x^k`; zero when `k > order`.
    pub fn monomial(k: usize, c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones beyond `order` are dropped.
    pub fn from_coeffs(coeffs: Vec<BigRational>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I, order: usize) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(rat).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; an error when `k` lies beyond the truncation.
    pub fn coeff(&self, k: usize) -> Result<&BigRational> {
        self.coeffs.get(k).ok_or(Error::BeyondOrder {
            k,
            order: self.order,
        })
    }

    /// Coefficient of `x^k` as an integer.
    pub fn coeff_integer(&self, k: usize) -> Result<BigInt> {
        let c = self.coeff(k)?;
        if c.is_integer() {
            Ok(c.to_integer())
        } else {
            Err(Error::NonIntegral(format_rational(c)))
        }
    }

    /// Coefficient of `x^k` as a `u64`; errors on fractions and negatives.
    pub fn coeff_u64(&self, k: usize) -> Result<u64> {
        let c = self.coeff_integer(k)?;
        c.to_u64().ok_or_else(|| Error::NonIntegral(c.to_string()))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv0 = a0.recip();
        let mut out = Self::zero(self.order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out.coeffs[n - k];
                }
            }
            out.coeffs[n] = -acc * &inv0;
        }
        Ok(out)
    }

    /// The series `Σ c_{step·n+offset} x^n`, truncated to the coefficients
    /// that are actually known.
    pub fn section(&self, step: usize, offset: usize) -> Self {
        assert!(step > 0, "section step must be positive");
        if offset > self.order {
            return Self::zero(0);
        }
        let order = (self.order - offset) / step;
        Self {
            order,
            coeffs: (0..=order)
                .map(|n| self.coeffs[step * n + offset].clone())
                .collect(),
        }
    }

    /// The series with `x` replaced by `x^k`, at order `order·k`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k > 0, "dilation factor must be positive");
        let mut out = Self::zero(self.order * k);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for i in k..=self.order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Keeps only the coefficients at exponents `≡ residue (mod modulus)`.
    pub fn mask(&self, modulus: usize, residue: usize) -> Self {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            if i % modulus != residue {
                *c = BigRational::zero();
            }
        }
        out
    }

    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// In-place multiplication by `(1 + sign·x^d)`.
    pub(crate) fn mul_binomial(&mut self, sign: i8, d: usize) {
        if d == 0 || d > self.order {
            return;
        }
        for i in (d..=self.order).rev() {
            let t = self.coeffs[i - d].clone();
            if sign > 0 {
                self.coeffs[i] += t;
            } else {
                self.coeffs[i] -= t;
            }
        }
    }

    /// In-place division by `(1 + sign·x^d)`, `d ≥ 1`.
    pub(crate) fn div_binomial(&mut self, sign: i8, d: usize) {
        if d == 0 || d > self.order {
            return;
        }
        for i in d..=self.order {
            let t = self.coeffs[i - d].clone();
            if sign > 0 {
                self.coeffs[i] -= t;
            } else {
                self.coeffs[i] += t;
            }
        }
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_rational(&c.abs());
            let body = match i {
                0 => mag,
                1 if c.abs().is_one() => "x".to_string(),
                1 => format!("{mag}*x"),
                _ if c.abs().is_one() => format!("x^{i}"),
                _ => format!("{mag}*x^{i}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            for (idx, (sign, body)) in terms.iter().enumerate() {
                match (idx, *sign) {
                    (0, "-") => write!(f, "-{body}")?,
                    (0, _) => write!(f, "{body}")?,
                    (_, s) => write!(f, " {s} {body}")?,
                }
            }
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

impl<'a> Add<&'a FormalSeries> for &'a FormalSeries {
    type Output = FormalSeries;

    fn add(self, rhs: &FormalSeries) -> FormalSeries {
        let order = self.order.min(rhs.order);
        FormalSeries {
            order,
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl<'a> Sub<&'a FormalSeries> for &'a FormalSeries {
    type Output = FormalSeries;

    fn sub(self, rhs: &FormalSeries) -> FormalSeries {
        let order = self.order.min(rhs.order);
        FormalSeries {
            order,
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl<'a> Mul<&'a FormalSeries> for &'a FormalSeries {
    type Output = FormalSeries;

    fn mul(self, rhs: &FormalSeries) -> FormalSeries {
        let order = self.order.min(rhs.order);
        let mut out = FormalSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Neg for &FormalSeries {
    type Output = FormalSeries;

    fn neg(self) -> FormalSeries {
        FormalSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FormalSeries> for FormalSeries {
            type Output = FormalSeries;
            fn $m(self, rhs: FormalSeries) -> FormalSeries {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FormalSeries> for FormalSeries {
            type Output = FormalSeries;
            fn $m(self, rhs: &FormalSeries) -> FormalSeries {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FormalSeries {
    type Output = FormalSeries;
    fn neg(self) -> FormalSeries {
        -&self
    }
}

/// `a + b`, truncated to the smaller order.
pub fn series_add(a: &FormalSeries, b: &FormalSeries) -> FormalSeries {
    a + b
}

/// `a · b`, truncated to the smaller order.
pub fn series_mul(a: &FormalSeries, b: &FormalSeries) -> FormalSeries {
    a * b
}

/// `c · a`.
pub fn series_scale(a: &FormalSeries, c: &BigRational) -> FormalSeries {
    a.scale(c)
}

/// `1 / a`.
pub fn series_inverse(a: &FormalSeries) -> Result<FormalSeries> {
    a.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let s = FormalSeries::from_integers([1, -1], 4);
        let inv = s.inverse().unwrap();
        assert_eq!(inv, FormalSeries::from_integers([1, 1, 1, 1, 1], 4));
        assert_eq!(&s * &inv, FormalSeries::one(4));
    }

    #[test]
    fn zero_constant_is_not_a_unit() {
        let s = FormalSeries::monomial(1, rat(1), 5);
        assert_eq!(s.inverse(), Err(Error::NotAUnit));
    }

    #[test]
    fn binary_ops_truncate_to_min_order() {
        let a = FormalSeries::from_integers([1, 2, 3], 6);
        let b = FormalSeries::from_integers([1, 1], 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(
            (&a * &b).coeffs()[..4].to_vec(),
            vec![rat(1), rat(3), rat(5), rat(3)]
        );
    }

    #[test]
    fn coeff_beyond_order_errors() {
        let a = FormalSeries::one(3);
        assert_eq!(a.coeff(3).unwrap(), &rat(0));
        assert_eq!(a.coeff(4), Err(Error::BeyondOrder { k: 4, order: 3 }));
    }

    #[test]
    fn binomial_helpers_match_multiplication() {
        let mut a = FormalSeries::from_integers([1, 2, 0, -1, 5], 8);
        let b = FormalSeries::from_integers([1, 0, 0, -1], 8);
        let expected = &a * &b;
        a.mul_binomial(-1, 3);
        assert_eq!(a, expected);
        a.div_binomial(-1, 3);
        assert_eq!(a, FormalSeries::from_integers([1, 2, 0, -1, 5], 8));
    }

    #[test]
    fn sections_and_dilation() {
        let a = FormalSeries::from_integers(0..=9, 9);
        assert_eq!(
            a.section(2, 1),
            FormalSeries::from_integers([1, 3, 5, 7, 9], 4)
        );
        assert_eq!(a.section(2, 0).order(), 4);
        let d = FormalSeries::from_integers([1, 1], 1).dilate(3);
        assert_eq!(d, FormalSeries::from_integers([1, 0, 0, 1], 3));
        assert_eq!(a.shift(2).coeffs()[2], rat(0));
        assert_eq!(a.shift(2).coeffs()[3], rat(1));
    }

    #[test]
    fn display_form() {
        let s = FormalSeries::from_coeffs(vec![frac(1, 2), rat(-1), rat(0), rat(3)], 3);
        assert_eq!(s.to_string(), "1/2 - x + 3*x^3 + O(x^4)");
    }
}
