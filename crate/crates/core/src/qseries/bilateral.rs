//! Bilateral sums `Σ_{k∈ℤ} x^{ak}(1 + x^{bk}) / (1 + x^{ck})`.
//!
//! Negative indices are folded onto positive ones: multiplying numerator and
//! denominator of the `k = -j` term by `x^{cj}` turns it into
//! `x^{(c-a-b)j}(1 + x^{bj}) / (1 + x^{cj})` (or `x^{(c-a)j} / (1 + x^{cj})`
//! without the numerator binomial), which is a power series whenever that
//! leading exponent is positive.

use super::FormalSeries;
use crate::error::{Error, Result};
use crate::qseries::{frac, rat};

/// Which summation indices to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KParity {
    All,
    Odd,
    Even,
}

impl KParity {
    fn admits(self, k: usize) -> bool {
        match self {
            KParity::All => true,
            KParity::Odd => k % 2 == 1,
            KParity::Even => k.is_multiple_of(2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BilateralFamily {
    /// Exponent `a` of the leading monomial `x^{ak}`.
    pub lead: u32,
    /// Exponent `b` of the numerator binomial `1 + x^{bk}`, if present.
    pub numerator: Option<u32>,
    /// Exponent `c` of the denominator binomial `1 + x^{ck}`.
    pub denominator: u32,
    pub parity: KParity,
}

impl BilateralFamily {
    pub fn new(lead: u32, numerator: Option<u32>, denominator: u32) -> Self {
        Self {
            lead,
            numerator,
            denominator,
            parity: KParity::All,
        }
    }

    pub fn with_parity(mut self, parity: KParity) -> Self {
        self.parity = parity;
        self
    }

    fn reflected_lead(&self) -> i64 {
        i64::from(self.denominator) - i64::from(self.lead) - i64::from(self.numerator.unwrap_or(0))
    }

    fn check(&self) -> Result<()> {
        if self.lead == 0 {
            return Err(Error::NotSymmetrizable(
                "positive-index terms need a positive leading exponent".into(),
            ));
        }
        if self.denominator == 0 || self.numerator == Some(0) {
            return Err(Error::NotSymmetrizable(
                "binomial exponents must be positive".into(),
            ));
        }
        if self.reflected_lead() <= 0 {
            return Err(Error::NotSymmetrizable(format!(
                "negative-index terms start at x^{}·j",
                self.reflected_lead()
            )));
        }
        Ok(())
    }

    /// `x^{lead·j}(1 + x^{b j}) / (1 + x^{c j})` for `j ≥ 1`.
    fn positive_term(&self, lead: usize, j: usize, order: usize) -> FormalSeries {
        let mut s = FormalSeries::monomial(lead * j, rat(1), order);
        if let Some(b) = self.numerator {
            s.mul_binomial(1, b as usize * j);
        }
        s.div_binomial(1, self.denominator as usize * j);
        s
    }

    fn zero_term(&self, order: usize) -> FormalSeries {
        let c = if self.numerator.is_some() {
            rat(1)
        } else {
            frac(1, 2)
        };
        FormalSeries::constant(c, order)
    }
}

/// The symmetrized bilateral sum, truncated at `order`.
pub fn bilateral_sum(family: &BilateralFamily, order: usize) -> Result<FormalSeries> {
    family.check()?;
    let mut out = if family.parity.admits(0) {
        family.zero_term(order)
    } else {
        FormalSeries::zero(order)
    };
    let lead = family.lead as usize;
    let rlead = family.reflected_lead() as usize;
    for j in 1..=order {
        if !family.parity.admits(j) {
            continue;
        }
        if lead * j <= order {
            out = &out + &family.positive_term(lead, j, order);
        }
        if rlead * j <= order {
            out = &out + &family.positive_term(rlead, j, order);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{check_identity, ProductSpec, Verdict};

    #[test]
    fn zero_term_without_numerator_is_half() {
        let s = bilateral_sum(&BilateralFamily::new(1, None, 2), 0).unwrap();
        assert_eq!(s.coeff(0).unwrap(), &frac(1, 2));
    }

    #[test]
    fn first_sum_matches_product() {
        let lhs = bilateral_sum(&BilateralFamily::new(1, None, 2), 30).unwrap();
        let rhs = ProductSpec::from_tuples(&[
            (1, 2, -1, 2),
            (-1, 2, 0, 2),
            (-1, 2, -1, -2),
            (1, 2, 0, -2),
        ])
        .scaled(frac(1, 2))
        .eval(30)
        .unwrap();
        assert_eq!(check_identity(&lhs, &rhs, 30), Verdict::Pass);
    }

    #[test]
    fn second_sum_matches_product() {
        let lhs = bilateral_sum(&BilateralFamily::new(1, Some(2), 4), 30).unwrap();
        let rhs = ProductSpec::from_tuples(&[
            (1, 2, -1, 1),
            (-1, 4, 0, 2),
            (-1, 2, -1, -1),
            (1, 4, 0, -2),
        ])
        .eval(30)
        .unwrap();
        assert_eq!(check_identity(&lhs, &rhs, 30), Verdict::Pass);
    }

    #[test]
    fn rejects_non_symmetrizable() {
        let bad = BilateralFamily::new(2, Some(2), 4);
        assert!(matches!(
            bilateral_sum(&bad, 10),
            Err(Error::NotSymmetrizable(_))
        ));
        let bad = BilateralFamily::new(0, None, 2);
        assert!(matches!(
            bilateral_sum(&bad, 10),
            Err(Error::NotSymmetrizable(_))
        ));
    }
}
