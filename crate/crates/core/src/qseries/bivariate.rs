//! Two-variable truncated series, stored as a series in `v` whose
//! coefficients are series in `u`.

use std::ops::Add;

use num_rational::BigRational;

use super::FormalSeries;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    order_u: usize,
    rows: Vec<FormalSeries>,
}

impl BivariateSeries {
    pub fn zero(order_u: usize, order_v: usize) -> Self {
        Self {
            order_u,
            rows: vec![FormalSeries::zero(order_u); order_v + 1],
        }
    }

    pub fn one(order_u: usize, order_v: usize) -> Self {
        let mut s = Self::zero(order_u, order_v);
        s.rows[0] = FormalSeries::one(order_u);
        s
    }

    pub fn order_u(&self) -> usize {
        self.order_u
    }

    pub fn order_v(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `u^i v^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Result<&BigRational> {
        let row = self.rows.get(j).ok_or(Error::BeyondOrder {
            k: j,
            order: self.order_v(),
        })?;
        row.coeff(i)
    }

    /// The coefficient of `v^j`, as a series in `u`.
    pub fn row(&self, j: usize) -> Option<&FormalSeries> {
        self.rows.get(j)
    }

    /// Multiplies in place by `(1 + sign·u^a v^b)`.
    pub fn mul_binomial(&mut self, sign: i8, a: usize, b: usize) {
        assert!(a + b > 0, "binomial must have positive degree");
        if b == 0 {
            for row in &mut self.rows {
                row.mul_binomial(sign, a);
            }
            return;
        }
        for j in (b..self.rows.len()).rev() {
            let add = self.rows[j - b].shift(a);
            self.rows[j] = if sign > 0 {
                &self.rows[j] + &add
            } else {
                &self.rows[j] - &add
            };
        }
    }

    /// Divides in place by `(1 + sign·u^a v^b)`.
    pub fn div_binomial(&mut self, sign: i8, a: usize, b: usize) {
        assert!(a + b > 0, "binomial must have positive degree");
        if b == 0 {
            for row in &mut self.rows {
                row.div_binomial(sign, a);
            }
            return;
        }
        for j in b..self.rows.len() {
            let sub = self.rows[j - b].shift(a);
            self.rows[j] = if sign > 0 {
                &self.rows[j] - &sub
            } else {
                &self.rows[j] + &sub
            };
        }
    }

    /// `Σ_q [u^{q+t} v^q] x^q`, for as many `q` as both truncations allow.
    pub fn diagonal(&self, t: usize) -> FormalSeries {
        if t > self.order_u {
            return FormalSeries::zero(0);
        }
        let order = self.order_v().min(self.order_u - t);
        FormalSeries::from_coeffs(
            (0..=order)
                .map(|q| self.rows[q].coeffs()[q + t].clone())
                .collect(),
            order,
        )
    }
}

impl<'a> Add<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| a + b)
            .collect::<Vec<_>>();
        BivariateSeries {
            order_u: self.order_u.min(rhs.order_u),
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    #[test]
    fn binomial_round_trip() {
        let mut s = BivariateSeries::one(6, 6);
        s.mul_binomial(1, 2, 1);
        assert_eq!(s.coeff(2, 1).unwrap(), &rat(1));
        s.div_binomial(-1, 1, 1);
        // (1 + u²v)/(1 - uv): coefficient of u³v² is 1 (from u²v·uv)
        assert_eq!(s.coeff(3, 2).unwrap(), &rat(1));
        assert_eq!(s.coeff(2, 2).unwrap(), &rat(1));
        s.mul_binomial(-1, 1, 1);
        s.div_binomial(1, 2, 1);
        assert_eq!(s, BivariateSeries::one(6, 6));
    }

    #[test]
    fn u_only_factor() {
        let mut s = BivariateSeries::one(4, 2);
        s.div_binomial(-1, 1, 0);
        assert_eq!(
            s.row(0).unwrap(),
            &FormalSeries::from_integers([1, 1, 1, 1, 1], 4)
        );
        assert_eq!(s.row(1).unwrap(), &FormalSeries::zero(4));
    }

    #[test]
    fn diagonal_extraction() {
        let mut s = BivariateSeries::one(5, 5);
        s.div_binomial(-1, 1, 1);
        s.mul_binomial(1, 1, 0);
        assert_eq!(
            s.diagonal(0),
            FormalSeries::from_integers([1, 1, 1, 1, 1, 1], 5)
        );
        assert_eq!(
            s.diagonal(1),
            FormalSeries::from_integers([1, 1, 1, 1, 1], 4)
        );
        assert_eq!(s.diagonal(2), FormalSeries::zero(3));
    }
}
