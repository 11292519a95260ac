//! Signed Young diagrams and the sets that parametrize nilpotent orbits.
//!
//! A diagram is stored as groups of rows of equal length, with the number
//! of rows starting with `+` and with `-`. Its text form lists the groups by
//! decreasing length, `+` before `-`, as `<length><sign>[^<mult>]`, e.g.
//! `3- 1+^2`. The empty diagram is written `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{enum_odd_partitions, enum_partitions, BiPartition, Partition};

/// Rows of one length: `plus` rows starting with `+`, `minus` with `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowGroup {
    pub length: u32,
    pub plus: u32,
    pub minus: u32,
}

impl RowGroup {
    pub fn new(length: u32, plus: u32, minus: u32) -> Self {
        Self {
            length,
            plus,
            minus,
        }
    }

    pub fn rows(&self) -> u32 {
        self.plus + self.minus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedYoungDiagram {
    groups: Vec<RowGroup>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SigmaClass {
    #[serde(rename = "sigma1")]
    Sigma1,
    #[serde(rename = "sigma2")]
    Sigma2,
    #[serde(rename = "sigma3")]
    Sigma3,
}

impl SigmaClass {
    pub fn name(self) -> &'static str {
        match self {
            SigmaClass::Sigma1 => "sigma1",
            SigmaClass::Sigma2 => "sigma2",
            SigmaClass::Sigma3 => "sigma3",
        }
    }
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SigmaClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sigma1" => Ok(SigmaClass::Sigma1),
            "sigma2" => Ok(SigmaClass::Sigma2),
            "sigma3" => Ok(SigmaClass::Sigma3),
            _ => Err(Error::OutOfRange {
                what: "class",
                detail: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramClass {
    pub class: SigmaClass,
    pub a: u32,
    pub b: u32,
    pub r: u32,
}

/// How to read the top-row condition for Σ_b when `p + q` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SigmaBReading {
    /// `ε₁ + μ₁ ≡ q (mod 2)`; swap-symmetric and consistent with the
    /// series identities.
    #[default]
    Standard,
    /// `ε₁ ≡ min(p, q) (mod 2)`, kept for comparison.
    Literal,
}

impl SignedYoungDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a diagram from groups in any order; groups of equal length
    /// are merged and empty groups dropped.
    pub fn from_groups<I: IntoIterator<Item = RowGroup>>(groups: I) -> Result<Self> {
        let mut map: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
        for g in groups {
            if g.length == 0 {
                return Err(Error::InvalidDiagram("row length must be positive".into()));
            }
            let e = map.entry(g.length).or_default();
            e.0 += g.plus;
            e.1 += g.minus;
        }
        let groups = map
            .into_iter()
            .rev()
            .filter(|(_, (p, q))| p + q > 0)
            .map(|(length, (plus, minus))| RowGroup {
                length,
                plus,
                minus,
            })
            .collect();
        Ok(Self { groups })
    }

    /// Shorthand for tests and examples: `(length, plus, minus)` triples.
    pub fn from_triples(triples: &[(u32, u32, u32)]) -> Self {
        Self::from_groups(triples.iter().map(|&(l, p, q)| RowGroup::new(l, p, q)))
            .expect("row lengths must be positive")
    }

    pub fn groups(&self) -> &[RowGroup] {
        &self.groups
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.groups.iter().map(|g| g.length * g.rows()).sum()
    }

    pub fn row_count(&self) -> u32 {
        self.groups.iter().map(RowGroup::rows).sum()
    }

    /// The underlying partition.
    pub fn shape(&self) -> Partition {
        let mut parts = Vec::new();
        for g in &self.groups {
            parts.extend(std::iter::repeat_n(g.length, g.rows() as usize));
        }
        Partition::new(parts)
    }

    /// `(#plus boxes, #minus boxes)` by the alternating-row rule.
    pub fn signature(&self) -> (u32, u32) {
        let (mut p, mut q) = (0, 0);
        for g in &self.groups {
            let hi = g.length.div_ceil(2);
            let lo = g.length / 2;
            p += g.plus * hi + g.minus * lo;
            q += g.plus * lo + g.minus * hi;
        }
        (p, q)
    }

    /// Exchanges the roles of `+` and `-` in every row.
    pub fn sign_swap(&self) -> Self {
        Self {
            groups: self
                .groups
                .iter()
                .map(|g| RowGroup::new(g.length, g.minus, g.plus))
                .collect(),
        }
    }

    /// Even-length rows come in `+`/`-` pairs.
    pub fn is_in_sigma(&self) -> bool {
        self.groups
            .iter()
            .all(|g| g.length % 2 == 1 || g.plus == g.minus)
    }

    fn require_sigma(&self) -> Result<()> {
        if self.is_in_sigma() {
            Ok(())
        } else {
            Err(Error::NotInSigma(self.to_string()))
        }
    }

    fn raw_ab(&self) -> (u32, u32) {
        let (mut a, mut b) = (0, 0);
        for g in &self.groups {
            let (first, second) = match g.length % 4 {
                1 => (g.plus > 0, g.minus > 0),
                3 => (g.minus > 0, g.plus > 0),
                _ => (false, false),
            };
            a += u32::from(first);
            b += u32::from(second);
        }
        (a, b)
    }

    /// The class Σ₁, Σ₂ or Σ₃ together with `a`, `b` and `r`.
    pub fn classify(&self) -> Result<DiagramClass> {
        self.require_sigma()?;
        let (a, b) = self.raw_ab();
        let (class, r) = if a > 0 && b > 0 {
            (SigmaClass::Sigma1, a + b - 2)
        } else if a + b > 0 {
            (SigmaClass::Sigma2, a + b - 1)
        } else {
            (SigmaClass::Sigma3, 0)
        };
        Ok(DiagramClass { class, a, b, r })
    }

    /// Number of K-orbits over the diagram: 1, 2 or 4.
    pub fn orbit_multiplicity(&self) -> Result<u32> {
        Ok(match self.classify()?.class {
            SigmaClass::Sigma1 => 1,
            SigmaClass::Sigma2 => 2,
            SigmaClass::Sigma3 => 4,
        })
    }

    /// Rows expanded as `(μ, ε)` with length `2μ+1` and sign bit `ε`
    /// (`+ ↦ 0`, `- ↦ 1`); `None` unless all parts are odd and each length
    /// carries a single sign.
    pub fn odd_rows(&self) -> Option<Vec<(u32, u32)>> {
        let mut rows = Vec::new();
        for g in &self.groups {
            if g.length % 2 == 0 || (g.plus > 0 && g.minus > 0) {
                return None;
            }
            let eps = u32::from(g.plus == 0);
            rows.extend(std::iter::repeat_n(
                ((g.length - 1) / 2, eps),
                g.rows() as usize,
            ));
        }
        Some(rows)
    }

    /// Membership in Σ_b for the diagram's own signature.
    pub fn is_sigma_b(&self, reading: SigmaBReading) -> bool {
        if self.is_empty() {
            return false;
        }
        let Some(rows) = self.odd_rows() else {
            return false;
        };
        let (p, q) = self.signature();
        let par = |i: usize| (rows[i].0 + rows[i].1) % 2;
        if (p + q) % 2 == 1 {
            let top = match reading {
                SigmaBReading::Standard => par(0) == q % 2,
                SigmaBReading::Literal => rows[0].1 == p.min(q) % 2,
            };
            top && (1..rows.len().saturating_sub(1))
                .step_by(2)
                .all(|i| par(i) == par(i + 1))
        } else {
            rows.len() % 2 == 0 && (0..rows.len()).step_by(2).all(|i| par(i) == par(i + 1))
        }
    }

    /// Membership in Λ.
    pub fn is_in_lambda(&self) -> bool {
        self.groups.iter().all(|g| {
            if g.length % 2 == 1 {
                g.plus == g.minus
            } else {
                g.plus % 2 == 0 && g.minus % 2 == 0
            }
        })
    }

    /// Membership in Λ_b.
    pub fn is_lambda_b(&self) -> bool {
        self.is_in_lambda()
            && self.groups.iter().all(|g| {
                if g.length % 2 == 1 {
                    g.plus <= 1
                } else {
                    g.plus == 0 || g.minus == 0
                }
            })
    }

    pub fn all_parts_even(&self) -> bool {
        self.groups.iter().all(|g| g.length % 2 == 0)
    }
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for g in &self.groups {
            for (sign, mult) in [('+', g.plus), ('-', g.minus)] {
                if mult == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}{}", g.length, sign)?;
                if mult > 1 {
                    write!(f, "^{mult}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for SignedYoungDiagram {
    type Err = Error;

    /// Accepts the canonical form as well as ungrouped or unordered tokens
    /// such as `1+ 3- 1+`; `0`, `∅` and the empty string denote ∅.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Self::empty());
        }
        let mut groups = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::InvalidDiagram(format!("bad row token `{tok}` in `{s}`"));
            let sign_at = tok.find(['+', '-']).ok_or_else(bad)?;
            let length: u32 = tok[..sign_at].parse().map_err(|_| bad())?;
            let rest = &tok[sign_at + 1..];
            let mult: u32 = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?
            };
            if length == 0 || mult == 0 {
                return Err(bad());
            }
            let (plus, minus) = if tok.as_bytes()[sign_at] == b'+' {
                (mult, 0)
            } else {
                (0, mult)
            };
            groups.push(RowGroup::new(length, plus, minus));
        }
        Self::from_groups(groups)
    }
}

impl Serialize for SignedYoungDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignedYoungDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Expands per-length sign choices into diagrams, first group slowest.
fn sign_splits(options: &[Vec<RowGroup>]) -> Vec<SignedYoungDiagram> {
    let mut out = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for prefix in &out {
            for g in opts {
                let mut v: Vec<RowGroup> = prefix.clone();
                v.push(*g);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|groups| SignedYoungDiagram { groups })
        .collect()
}

/// All of Σ^{p,q}: partitions of `p + q` in lexicographically decreasing
/// order, then sign splits with the number of `+` rows decreasing.
pub fn enum_sigma(p: u32, q: u32) -> Vec<SignedYoungDiagram> {
    let mut out = Vec::new();
    for lambda in enum_partitions(p + q) {
        let mut options = Vec::new();
        let mut ok = true;
        for (length, m) in lambda.grouped() {
            if length % 2 == 0 {
                if m % 2 == 1 {
                    ok = false;
                    break;
                }
                options.push(vec![RowGroup::new(length, m / 2, m / 2)]);
            } else {
                options.push(
                    (0..=m)
                        .rev()
                        .map(|a| RowGroup::new(length, a, m - a))
                        .collect(),
                );
            }
        }
        if ok {
            out.extend(
                sign_splits(&options)
                    .into_iter()
                    .filter(|d| d.signature() == (p, q)),
            );
        }
    }
    out
}

/// Σ_b^{p,q} under the standard reading.
pub fn enum_sigma_b(p: u32, q: u32) -> Vec<SignedYoungDiagram> {
    enum_sigma_b_with(p, q, SigmaBReading::Standard)
}

/// Σ_b^{p,q} under the given reading of the top-row condition.
pub fn enum_sigma_b_with(p: u32, q: u32, reading: SigmaBReading) -> Vec<SignedYoungDiagram> {
    let mut out = Vec::new();
    for lambda in enum_odd_partitions(p + q) {
        let options: Vec<Vec<RowGroup>> = lambda
            .grouped()
            .into_iter()
            .map(|(l, m)| vec![RowGroup::new(l, m, 0), RowGroup::new(l, 0, m)])
            .collect();
        out.extend(
            sign_splits(&options)
                .into_iter()
                .filter(|d| d.signature() == (p, q) && d.is_sigma_b(reading)),
        );
    }
    out
}

/// All of Λ^{n,n}.
pub fn enum_lambda(n: u32) -> Vec<SignedYoungDiagram> {
    let mut out = Vec::new();
    for lambda in enum_partitions(2 * n) {
        let mut options = Vec::new();
        let mut ok = true;
        for (length, m) in lambda.grouped() {
            if m % 2 == 1 {
                ok = false;
                break;
            }
            if length % 2 == 1 {
                options.push(vec![RowGroup::new(length, m / 2, m / 2)]);
            } else {
                options.push(
                    (0..=m)
                        .rev()
                        .step_by(2)
                        .map(|a| RowGroup::new(length, a, m - a))
                        .collect(),
                );
            }
        }
        if ok {
            out.extend(sign_splits(&options));
        }
    }
    out
}

/// All of Λ_b^{n,n}; `enum_lambda_b(0)` is `[∅]`.
pub fn enum_lambda_b(n: u32) -> Vec<SignedYoungDiagram> {
    enum_lambda(n)
        .into_iter()
        .filter(SignedYoungDiagram::is_lambda_b)
        .collect()
}

/// The staircase `(2|t|-1) (2|t|-3) … 1`, all rows signed by the sign of
/// `t`; empty for `t = 0`.
pub fn mu_t(t: i32) -> SignedYoungDiagram {
    let n = t.unsigned_abs();
    let groups = (1..=n).rev().map(|i| {
        if t > 0 {
            RowGroup::new(2 * i - 1, 1, 0)
        } else {
            RowGroup::new(2 * i - 1, 0, 1)
        }
    });
    SignedYoungDiagram {
        groups: groups.collect(),
    }
}

/// Multiset union of the rows of two diagrams.
pub fn join(a: &SignedYoungDiagram, b: &SignedYoungDiagram) -> SignedYoungDiagram {
    SignedYoungDiagram::from_groups(a.groups.iter().chain(&b.groups).copied())
        .expect("groups of valid diagrams have positive lengths")
}

/// `1₊^m 1₋^m 2₊^k 2₋^k`.
pub fn split_block(m: u32, k: u32) -> SignedYoungDiagram {
    SignedYoungDiagram::from_groups([RowGroup::new(2, k, k), RowGroup::new(1, m, m)])
        .expect("positive lengths")
}

/// `(2μ)^{2p}_+ (2μ)^{2q}_- ⋯ ↦ (μ^p ⋯, μ^q ⋯)` on all-even diagrams of Λ.
pub fn diii_kappa1_bijection(d: &SignedYoungDiagram) -> Result<BiPartition> {
    if !d.all_parts_even() {
        return Err(Error::HasOddPart(d.to_string()));
    }
    if !d.is_in_lambda() {
        return Err(Error::NotInLambda(d.to_string()));
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    for g in &d.groups {
        let mu = g.length / 2;
        first.extend(std::iter::repeat_n(mu, (g.plus / 2) as usize));
        second.extend(std::iter::repeat_n(mu, (g.minus / 2) as usize));
    }
    Ok(BiPartition::new(
        Partition::new(first),
        Partition::new(second),
    ))
}

/// Inverse of [`diii_kappa1_bijection`].
pub fn diii_kappa1_inverse(bp: &BiPartition) -> SignedYoungDiagram {
    let plus = bp
        .first
        .grouped()
        .into_iter()
        .map(|(mu, m)| RowGroup::new(2 * mu, 2 * m, 0));
    let minus = bp
        .second
        .grouped()
        .into_iter()
        .map(|(mu, m)| RowGroup::new(2 * mu, 0, 2 * m));
    SignedYoungDiagram::from_groups(plus.chain(minus)).expect("positive lengths")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> SignedYoungDiagram {
        s.parse().unwrap()
    }

    fn names(v: &[SignedYoungDiagram]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn signatures() {
        assert_eq!(d("5+").signature(), (3, 2));
        assert_eq!(d("2+").signature(), (1, 1));
        assert_eq!(d("2-").signature(), (1, 1));
        assert_eq!(d("3- 1+ 1+").signature(), (3, 2));
        assert_eq!(SignedYoungDiagram::empty().signature(), (0, 0));
    }

    #[test]
    fn text_format() {
        assert_eq!(d("1+ 3- 1+").to_string(), "3- 1+^2");
        assert_eq!(d("1+^3 1-^2").to_string(), "1+^3 1-^2");
        assert_eq!(SignedYoungDiagram::empty().to_string(), "0");
        assert_eq!(d("0"), SignedYoungDiagram::empty());
        assert!("3".parse::<SignedYoungDiagram>().is_err());
        assert!("3+^0".parse::<SignedYoungDiagram>().is_err());
        assert!("0+".parse::<SignedYoungDiagram>().is_err());
        assert!("3*".parse::<SignedYoungDiagram>().is_err());
    }

    #[test]
    fn classification() {
        let c = d("5+").classify().unwrap();
        assert_eq!((c.a, c.b, c.class, c.r), (1, 0, SigmaClass::Sigma2, 0));
        let c = d("1+^3 1-^2").classify().unwrap();
        assert_eq!((c.a, c.b, c.class, c.r), (1, 1, SigmaClass::Sigma1, 0));
        let c = SignedYoungDiagram::empty().classify().unwrap();
        assert_eq!((c.a, c.b, c.class, c.r), (0, 0, SigmaClass::Sigma3, 0));
        let c = d("3+ 1+ 1-").classify().unwrap();
        assert_eq!((c.a, c.b, c.class, c.r), (1, 2, SigmaClass::Sigma1, 1));
        assert!(matches!(d("2+").classify(), Err(Error::NotInSigma(_))));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(d("1+^3 1-^2").orbit_multiplicity().unwrap(), 1);
        assert_eq!(d("5+").orbit_multiplicity().unwrap(), 2);
        assert_eq!(d("2+ 2-").orbit_multiplicity().unwrap(), 4);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            names(&enum_sigma(3, 2)),
            vec!["5+", "3+ 1+ 1-", "3- 1+^2", "2+ 2- 1+", "1+^3 1-^2"]
        );
        assert_eq!(enum_sigma(0, 0), vec![SignedYoungDiagram::empty()]);
        assert_eq!(names(&enum_sigma(2, 1)), vec!["3+", "1+^2 1-"]);
    }

    #[test]
    fn sigma_b_examples() {
        assert_eq!(names(&enum_sigma_b(3, 2)), vec!["5+", "3- 1+^2"]);
        assert_eq!(names(&enum_sigma_b(2, 1)), vec!["3+"]);
        assert!(enum_sigma_b(1, 1).is_empty());
        assert!(enum_sigma_b(0, 0).is_empty());
        assert_eq!(
            names(&enum_sigma_b_with(3, 2, SigmaBReading::Literal)),
            vec!["5+"]
        );
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(
            names(&enum_lambda(3)),
            vec!["3+ 3-", "2+^2 1+ 1-", "2-^2 1+ 1-", "1+^3 1-^3"]
        );
        assert_eq!(
            names(&enum_lambda_b(3)),
            vec!["3+ 3-", "2+^2 1+ 1-", "2-^2 1+ 1-"]
        );
        assert_eq!(enum_lambda_b(0), vec![SignedYoungDiagram::empty()]);
    }

    #[test]
    fn staircases() {
        assert_eq!(mu_t(2).to_string(), "3+ 1+");
        assert_eq!(mu_t(0), SignedYoungDiagram::empty());
        assert_eq!(mu_t(-3).to_string(), "5- 3- 1-");
        assert_eq!(mu_t(-3).signature(), (3, 6));
    }

    #[test]
    fn joins() {
        assert_eq!(join(&d("1+ 1-"), &mu_t(2)).to_string(), "3+ 1+^2 1-");
        assert_eq!(join(&d("5+"), &SignedYoungDiagram::empty()), d("5+"));
        assert_eq!(join(&d("2+ 2-"), &d("2+ 2-")).to_string(), "2+^2 2-^2");
        assert_eq!(split_block(1, 2).to_string(), "2+^2 2-^2 1+ 1-");
    }

    #[test]
    fn diii_bijection() {
        let bp = diii_kappa1_bijection(&d("2+^2 2-^2")).unwrap();
        assert_eq!(
            bp,
            BiPartition::new(Partition::new(vec![1]), Partition::new(vec![1]))
        );
        let bp = diii_kappa1_bijection(&d("4+^2")).unwrap();
        assert_eq!(
            bp,
            BiPartition::new(Partition::new(vec![2]), Partition::empty())
        );
        assert_eq!(
            diii_kappa1_bijection(&SignedYoungDiagram::empty()).unwrap(),
            BiPartition::default()
        );
        assert!(matches!(
            diii_kappa1_bijection(&d("3+ 3-")),
            Err(Error::HasOddPart(_))
        ));
        assert_eq!(diii_kappa1_inverse(&bp), d("4+^2"));
    }
}
