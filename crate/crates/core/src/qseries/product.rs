//! Infinite products `c · x^shift · ∏_i ∏_{s≥1} (1 ± x^{a_i s + b_i})^{e_i}`.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::{format_rational, FormalSeries};
use crate::error::{Error, Result};

/// One factor `∏_{s≥1} (1 + sign·x^{stride·s + offset})^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub sign: i8,
    pub stride: u32,
    pub offset: i32,
    pub exponent: i32,
}

impl Factor {
    pub fn new(sign: i8, stride: u32, offset: i32, exponent: i32) -> Self {
        Self {
            sign,
            stride,
            offset,
            exponent,
        }
    }

    /// `∏ (1 + x^{a s + b})^e`.
    pub fn plus(stride: u32, offset: i32, exponent: i32) -> Self {
        Self::new(1, stride, offset, exponent)
    }

    /// `∏ (1 - x^{a s + b})^e`.
    pub fn minus(stride: u32, offset: i32, exponent: i32) -> Self {
        Self::new(-1, stride, offset, exponent)
    }

    fn validate(&self) -> Result<()> {
        if self.sign != 1 && self.sign != -1 {
            return Err(Error::InvalidFactor(format!(
                "sign must be ±1, got {}",
                self.sign
            )));
        }
        if self.stride == 0 {
            return Err(Error::InvalidFactor("stride must be positive".into()));
        }
        if i64::from(self.stride) + i64::from(self.offset) < 1 {
            return Err(Error::InvalidFactor(format!(
                "lowest exponent {}·1{:+} is not positive",
                self.stride, self.offset
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign > 0 { '+' } else { '-' };
        write!(f, "prod(1{sign}x^{{{}s", self.stride)?;
        if self.offset != 0 {
            write!(f, "{:+}", self.offset)?;
        }
        write!(f, "}})")?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    pub factors: Vec<Factor>,
    pub scalar: BigRational,
    pub shift: usize,
}

impl Default for ProductSpec {
    fn default() -> Self {
        Self {
            factors: Vec::new(),
            scalar: BigRational::one(),
            shift: 0,
        }
    }
}

impl ProductSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a spec from `(sign, stride, offset, exponent)` tuples.
    pub fn from_tuples(factors: &[(i8, u32, i32, i32)]) -> Self {
        Self {
            factors: factors
                .iter()
                .map(|&(s, a, b, e)| Factor::new(s, a, b, e))
                .collect(),
            ..Self::default()
        }
    }

    pub fn factor(mut self, f: Factor) -> Self {
        self.factors.push(f);
        self
    }

    pub fn scaled(mut self, c: BigRational) -> Self {
        self.scalar *= c;
        self
    }

    pub fn shifted(mut self, k: usize) -> Self {
        self.shift += k;
        self
    }

    /// Expands the product to the given order.
    pub fn eval(&self, order: usize) -> Result<FormalSeries> {
        eval_product(self, order)
    }
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.scalar.is_one() || (self.factors.is_empty() && self.shift == 0) {
            parts.push(format_rational(&self.scalar));
        }
        if self.shift > 0 {
            parts.push(format!("x^{}", self.shift));
        }
        parts.extend(self.factors.iter().map(Factor::to_string));
        write!(f, "{}", parts.join(" * "))
    }
}

/// Expands `spec` up to `x^order`, skipping factors beyond the order.
pub fn eval_product(spec: &ProductSpec, order: usize) -> Result<FormalSeries> {
    for factor in &spec.factors {
        factor.validate()?;
    }
    let mut out = FormalSeries::one(order);
    for factor in &spec.factors {
        let stride = factor.stride as usize;
        let mut s = 1usize;
        loop {
            let d = (stride * s) as i64 + i64::from(factor.offset);
            if d as usize > order {
                break;
            }
            for _ in 0..factor.exponent.unsigned_abs() {
                if factor.exponent > 0 {
                    out.mul_binomial(factor.sign, d as usize);
                } else {
                    out.div_binomial(factor.sign, d as usize);
                }
            }
            s += 1;
        }
    }
    Ok(out.scale(&spec.scalar).shift(spec.shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{count_distinct_partitions, count_partitions};
    use crate::qseries::{frac, rat};

    #[test]
    fn hecke_b_series() {
        let spec = ProductSpec::from_tuples(&[(1, 2, 0, 1), (1, 1, 0, 1)]);
        assert_eq!(
            eval_product(&spec, 2).unwrap(),
            FormalSeries::from_integers([1, 1, 2], 2)
        );
    }

    #[test]
    fn hecke_d_series_has_half_constant() {
        let spec = ProductSpec::from_tuples(&[(1, 2, -1, 1), (1, 1, 0, 1)]).scaled(frac(1, 2));
        let s = eval_product(&spec, 1).unwrap();
        assert_eq!(s.coeffs(), &[frac(1, 2), rat(1)]);
    }

    #[test]
    fn empty_spec_is_one() {
        assert_eq!(
            eval_product(&ProductSpec::new(), 7).unwrap(),
            FormalSeries::one(7)
        );
    }

    #[test]
    fn reference_coefficients() {
        let s = ProductSpec::from_tuples(&[(-1, 2, 0, -1)])
            .eval(10)
            .unwrap();
        assert_eq!(s.coeff(4).unwrap(), &rat(2));
        let s = ProductSpec::from_tuples(&[(1, 2, 0, 2), (1, 1, 0, 2)])
            .eval(10)
            .unwrap();
        assert_eq!(s.coeff(2).unwrap(), &rat(5));
        let s = ProductSpec::from_tuples(&[(-1, 4, 0, -1), (-1, 2, 0, -1)])
            .scaled(rat(2))
            .eval(10)
            .unwrap();
        assert_eq!(s.coeff(4).unwrap(), &rat(6));
    }

    #[test]
    fn euler_and_distinct_parts() {
        let p = ProductSpec::from_tuples(&[(-1, 1, 0, -1)])
            .eval(60)
            .unwrap();
        let d = ProductSpec::from_tuples(&[(1, 1, 0, 1)]).eval(60).unwrap();
        for n in 0..=60 {
            assert_eq!(p.coeff_u64(n).unwrap(), count_partitions(n as i64));
            assert_eq!(d.coeff_u64(n).unwrap(), count_distinct_partitions(n as i64));
        }
    }

    #[test]
    fn shift_and_validation() {
        let s = ProductSpec::new().shifted(2).eval(4).unwrap();
        assert_eq!(s, FormalSeries::monomial(2, rat(1), 4));
        let bad = ProductSpec::from_tuples(&[(1, 1, -1, 1)]);
        assert!(matches!(bad.eval(4), Err(Error::InvalidFactor(_))));
        let bad = ProductSpec::from_tuples(&[(1, 0, 2, 1)]);
        assert!(matches!(bad.eval(4), Err(Error::InvalidFactor(_))));
    }

    #[test]
    fn display_round_trip_shape() {
        let spec = ProductSpec::from_tuples(&[(1, 2, -1, 2), (-1, 1, 0, -1)]).scaled(frac(3, 2));
        assert_eq!(
            spec.to_string(),
            "3/2 * prod(1+x^{2s-1})^2 * prod(1-x^{1s})^-1"
        );
    }
}
