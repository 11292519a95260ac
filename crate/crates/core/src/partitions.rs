//! Ordinary, distinct-part and odd-part partitions.
//!
//! Counting functions accept any integer (and, via the `_ratio` variants,
//! any rational) and return 0 outside the nonnegative integers, so that
//! convolution sums can be written without guards.

use std::fmt;

use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each distinct part, largest part first.
    pub fn grouped(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// An ordered pair of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct BiPartition {
    pub first: Partition,
    pub second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn weight(&self) -> u32 {
        self.first.weight() + self.second.weight()
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

fn enum_restricted(n: u32, max: u32, allow: &dyn Fn(u32) -> bool, distinct: bool) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        if !allow(first) {
            continue;
        }
        let next_max = if distinct { first - 1 } else { first };
        for mut rest in enum_restricted(n - first, next_max, allow, distinct) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn enum_partitions(n: u32) -> Vec<Partition> {
    enum_restricted(n, n, &|_| true, false)
        .into_iter()
        .map(|parts| Partition { parts })
        .collect()
}

/// All partitions of `n` into odd parts, lexicographically decreasing.
pub fn enum_odd_partitions(n: u32) -> Vec<Partition> {
    enum_restricted(n, n, &|p| p % 2 == 1, false)
        .into_iter()
        .map(|parts| Partition { parts })
        .collect()
}

/// All partitions of `n` into distinct parts, lexicographically decreasing.
pub fn enum_distinct_partitions(n: u32) -> Vec<Partition> {
    enum_restricted(n, n, &|_| true, true)
        .into_iter()
        .map(|parts| Partition { parts })
        .collect()
}

/// `p(0), ..., p(n)` by the standard coin-change recurrence.
pub fn partition_numbers(n: usize) -> Vec<u64> {
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] = table[total]
                .checked_add(table[total - part])
                .expect("partition number overflows u64");
        }
    }
    table
}

/// `p(n)`, or 0 when `n < 0`.
pub fn count_partitions(n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    partition_numbers(n as usize)[n as usize]
}

fn as_natural(x: Rational64) -> Option<i64> {
    if x.is_integer() && *x.numer() >= 0 {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// `p(x)` for a rational argument: 0 unless `x` is a nonnegative integer.
pub fn count_partitions_ratio(x: Rational64) -> u64 {
    as_natural(x).map_or(0, count_partitions)
}

/// Number of bipartitions of `n`, or 0 when `n < 0`.
pub fn count_bipartitions(n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    let p = partition_numbers(n as usize);
    (0..=n as usize).map(|k| p[k] * p[n as usize - k]).sum()
}

/// Number of bipartitions of a rational argument; 0 off the naturals.
pub fn count_bipartitions_ratio(x: Rational64) -> u64 {
    as_natural(x).map_or(0, count_bipartitions)
}

/// All bipartitions of `n`, ordered by the weight of the first component
/// (descending) and then lexicographically.
pub fn enum_bipartitions(n: u32) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in enum_partitions(k) {
            for b in enum_partitions(n - k) {
                out.push(BiPartition::new(a.clone(), b));
            }
        }
    }
    out
}

/// Number of partitions of `n` into distinct parts, or 0 when `n < 0`.
pub fn count_distinct_partitions(n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in (part..=n).rev() {
            table[total] += table[total - part];
        }
    }
    table[n]
}

/// Partitions of `n` into distinct odd parts whose count of parts
/// `≡ 1 (mod 4)` minus count of parts `≡ 3 (mod 4)` equals `t`.
pub fn enum_distinct_odd_balanced(n: u32, t: i32) -> Vec<Partition> {
    enum_restricted(n, n, &|p| p % 2 == 1, true)
        .into_iter()
        .filter(|parts| {
            let bal: i32 = parts.iter().map(|&p| if p % 4 == 1 { 1 } else { -1 }).sum();
            bal == t
        })
        .map(|parts| Partition { parts })
        .collect()
}

/// The weight of an odd-part partition: a power of two counting the
/// pairs of consecutive half-parts that differ by at least 2, paired from
/// the top when the number of parts is odd and from the second part when
/// it is even.
pub fn odd_partition_weight(lambda: &Partition) -> u64 {
    let mu: Vec<u32> = lambda.parts().iter().map(|&x| (x - 1) / 2).collect();
    let s = mu.len();
    let gaps = if s % 2 == 1 {
        (1..=(s - 1) / 2)
            .filter(|&j| mu[2 * j - 2] >= mu[2 * j - 1] + 2)
            .count()
    } else {
        (1..(s / 2).max(1))
            .filter(|&j| mu[2 * j - 1] >= mu[2 * j] + 2)
            .count()
    };
    1 << gaps
}

/// Sum of [`odd_partition_weight`] over all odd-part partitions of `n`.
pub fn weighted_odd_partition_sum(n: u32) -> u64 {
    enum_odd_partitions(n)
        .iter()
        .map(odd_partition_weight)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagonal(n: usize) -> Vec<u64> {
        let mut p = vec![0i128; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut acc = 0i128;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[m - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= m {
                    acc += sign * p[m - g2];
                }
            }
            p[m] = acc;
        }
        p.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enum_partitions(0), vec![Partition::empty()]);
        let three: Vec<Vec<u32>> = enum_partitions(3)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(three, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(enum_partitions(5).len(), 7);
    }

    #[test]
    fn enumeration_is_lex_decreasing() {
        for n in 0..12 {
            let all = enum_partitions(n);
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
        }
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 0..=30 {
            assert_eq!(count_partitions(n as i64), enum_partitions(n).len() as u64);
        }
        assert_eq!(count_partitions(10), 42);
        assert_eq!(count_partitions(-1), 0);
    }

    #[test]
    fn pentagonal_recurrence_agrees() {
        assert_eq!(partition_numbers(200), pentagonal(200));
    }

    #[test]
    fn rational_arguments() {
        assert_eq!(count_partitions_ratio(Rational64::new(3, 2)), 0);
        assert_eq!(count_partitions_ratio(Rational64::new(6, 2)), 3);
        assert_eq!(count_partitions_ratio(Rational64::new(-2, 1)), 0);
        assert_eq!(count_bipartitions_ratio(Rational64::new(1, 2)), 0);
    }

    #[test]
    fn bipartitions() {
        assert_eq!(count_bipartitions(0), 1);
        assert_eq!(count_bipartitions(2), 5);
        for n in 0..10 {
            let all = enum_bipartitions(n);
            assert_eq!(all.len() as u64, count_bipartitions(n as i64));
            assert!(all.iter().all(|b| b.weight() == n));
        }
    }

    #[test]
    fn distinct_partitions() {
        assert_eq!(count_distinct_partitions(0), 1);
        assert_eq!(count_distinct_partitions(3), 2);
        assert_eq!(count_distinct_partitions(6), 4);
        for n in 0..25 {
            assert_eq!(
                count_distinct_partitions(n as i64),
                enum_distinct_partitions(n).len() as u64
            );
        }
    }

    #[test]
    fn balanced_examples() {
        assert_eq!(
            enum_distinct_odd_balanced(5, 1),
            vec![Partition::new(vec![5])]
        );
        assert_eq!(
            enum_distinct_odd_balanced(4, 0),
            vec![Partition::new(vec![3, 1])]
        );
        assert!(enum_distinct_odd_balanced(12, 2).is_empty());
    }

    #[test]
    fn weighted_sums() {
        assert_eq!(weighted_odd_partition_sum(0), 1);
        assert_eq!(weighted_odd_partition_sum(1), 1);
        assert_eq!(weighted_odd_partition_sum(2), 1);
        // 5 = 5 | 3+1+1 | 1^5 ; 3+1+1 has mu = (1,0,0): gap 1, weight 1
        assert_eq!(weighted_odd_partition_sum(5), 3);
        // 7 = 7 | 5+1+1 (gap 2 → 2) | 3+3+1 | 3+1^4 | 1^7
        assert_eq!(weighted_odd_partition_sum(7), 6);
    }

    #[test]
    fn display() {
        assert_eq!(Partition::new(vec![1, 3, 1]).to_string(), "(3,1,1)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(
            Partition::new(vec![2, 2, 1]).grouped(),
            vec![(2, 2), (1, 1)]
        );
    }
}
