//! Coefficient-wise comparison of two truncated series.

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use super::{format_rational, FormalSeries};

fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail {
        exponent: usize,
        #[serde(serialize_with = "ser_rational")]
        lhs: BigRational,
        #[serde(serialize_with = "ser_rational")]
        rhs: BigRational,
    },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Compares `lhs` and `rhs` at every exponent `0..=order`.
///
/// # Panics
/// If either series is known to less than `order`.
pub fn check_identity(lhs: &FormalSeries, rhs: &FormalSeries, order: usize) -> Verdict {
    check_identity_from(lhs, rhs, 0, order)
}

/// Like [`check_identity`] but starts at exponent `from`.
pub fn check_identity_from(
    lhs: &FormalSeries,
    rhs: &FormalSeries,
    from: usize,
    order: usize,
) -> Verdict {
    assert!(
        lhs.order() >= order && rhs.order() >= order,
        "identity check to x^{order} on series of orders {} and {}",
        lhs.order(),
        rhs.order()
    );
    for k in from..=order {
        let (a, b) = (&lhs.coeffs()[k], &rhs.coeffs()[k]);
        if a != b {
            return Verdict::Fail {
                exponent: k,
                lhs: a.clone(),
                rhs: b.clone(),
            };
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::count_partitions;
    use crate::qseries::{frac, rat, ProductSpec};

    #[test]
    fn euler_smoke() {
        let lhs = ProductSpec::from_tuples(&[(-1, 1, 0, -1)])
            .eval(60)
            .unwrap();
        let rhs = FormalSeries::from_integers((0..=60).map(|n| count_partitions(n) as i64), 60);
        assert_eq!(check_identity(&lhs, &rhs, 60), Verdict::Pass);
    }

    #[test]
    fn reports_first_disagreement() {
        let a = FormalSeries::from_integers([1, 2, 3, 4], 3);
        let b = FormalSeries::from_integers([1, 2, 5, 0], 3);
        assert_eq!(
            check_identity(&a, &b, 3),
            Verdict::Fail {
                exponent: 2,
                lhs: rat(3),
                rhs: rat(5)
            }
        );
        assert_eq!(
            check_identity_from(&a, &b, 3, 3),
            Verdict::Fail {
                exponent: 3,
                lhs: rat(4),
                rhs: rat(0)
            }
        );
    }

    #[test]
    fn verdict_serializes_rationals_as_strings() {
        let v = Verdict::Fail {
            exponent: 1,
            lhs: frac(1, 2),
            rhs: rat(2),
        };
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"status":"FAIL","exponent":1,"lhs":"1/2","rhs":"2"}"#
        );
    }
}
