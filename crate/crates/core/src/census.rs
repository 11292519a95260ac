//! Censuses of character sheaves and the closed formulas that count them.
//!
//! A census lists support strata, each labelled by an orbit and carrying a
//! number of local systems. Totals are checked elsewhere against the
//! generating-function coefficients computed by the `*_formula` functions
//! and against orbit-by-orbit sums over component groups.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{
    enum_lambda, enum_lambda_b, enum_sigma, enum_sigma_b, join, mu_t, split_block, SigmaClass,
    SignedYoungDiagram,
};
use crate::error::{Error, Result};
use crate::groups::{eta, kappa1_data_bdi, l_of, pi_size, PairParity};
use crate::partitions::{count_bipartitions, partition_numbers};
use crate::qseries::{frac, rat, FormalSeries, ProductSpec};

/// Integer coefficients of `∏ (1 + sign·x^{a s + b})^e`, for `e > 0` only.
fn int_product(factors: &[(i8, usize, i64, u32)], order: usize) -> Vec<i128> {
    let mut c = vec![0i128; order + 1];
    c[0] = 1;
    for &(sign, a, b, e) in factors {
        let mut s = 1;
        loop {
            let d = (a * s) as i64 + b;
            if d as usize > order {
                break;
            }
            let d = d as usize;
            for _ in 0..e {
                for i in (d..=order).rev() {
                    c[i] += i128::from(sign) * c[i - d];
                }
            }
            s += 1;
        }
    }
    c
}

fn to_u64(x: i128) -> u64 {
    u64::try_from(x).expect("count is a nonnegative u64")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HeckeFamily {
    /// `∏(1+x^s)`.
    A,
    /// `∏(1+x^{2s})(1+x^s)`.
    B,
    /// `½∏(1+x^{2s-1})(1+x^s)` for `n ≥ 1`; 1 at `n = 0`.
    D,
    /// `p(n)`.
    B11,
}

/// Number of irreducibles of the Hecke algebra of the given family.
pub fn hecke_count(family: HeckeFamily, n: u32) -> u64 {
    let n = n as usize;
    match family {
        HeckeFamily::A => to_u64(int_product(&[(1, 1, 0, 1)], n)[n]),
        HeckeFamily::B => to_u64(int_product(&[(1, 2, 0, 1), (1, 1, 0, 1)], n)[n]),
        HeckeFamily::D if n == 0 => 1,
        HeckeFamily::D => to_u64(int_product(&[(1, 2, -1, 1), (1, 1, 0, 1)], n)[n] / 2),
        HeckeFamily::B11 => partition_numbers(n)[n],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theta0Variant {
    SplitB,
    SplitD,
    Ind1B,
    Ind1D,
    Ind2B,
    Ind2D,
}

impl Theta0Variant {
    pub const ALL: [Theta0Variant; 6] = [
        Theta0Variant::SplitB,
        Theta0Variant::SplitD,
        Theta0Variant::Ind1B,
        Theta0Variant::Ind1D,
        Theta0Variant::Ind2B,
        Theta0Variant::Ind2D,
    ];
}

impl FromStr for Theta0Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "split-B" | "split-b" => Theta0Variant::SplitB,
            "split-D" | "split-d" => Theta0Variant::SplitD,
            "ind1-B" | "ind1-b" => Theta0Variant::Ind1B,
            "ind1-D" | "ind1-d" => Theta0Variant::Ind1D,
            "ind2-B" | "ind2-b" => Theta0Variant::Ind2B,
            "ind2-D" | "ind2-d" => Theta0Variant::Ind2D,
            _ => {
                return Err(Error::OutOfRange {
                    what: "theta variant",
                    detail: s.to_string(),
                })
            }
        })
    }
}

/// Precomputed counting sequences up to a fixed size.
#[derive(Debug, Clone)]
pub struct CountTables {
    /// `p(n)`.
    pub p: Vec<u64>,
    /// Bipartitions.
    pub p2: Vec<u64>,
    /// Distinct partitions.
    pub h_a: Vec<u64>,
    /// `∏(1+x^{2s})(1+x^s)`.
    pub h_b: Vec<u64>,
    /// `∏(1+x^{2s-1})(1+x^s)`.
    pub h_b_full: Vec<u64>,
    /// Half of `h_b_full`, with 1 at 0.
    pub h_d: Vec<u64>,
}

impl CountTables {
    pub fn new(n: usize) -> Self {
        let p = partition_numbers(n);
        let p2 = (0..=n)
            .map(|k| (0..=k).map(|j| p[j] * p[k - j]).sum())
            .collect();
        let h_a = int_product(&[(1, 1, 0, 1)], n)
            .into_iter()
            .map(to_u64)
            .collect();
        let h_b = int_product(&[(1, 2, 0, 1), (1, 1, 0, 1)], n)
            .into_iter()
            .map(to_u64)
            .collect();
        let h_b_full: Vec<u64> = int_product(&[(1, 2, -1, 1), (1, 1, 0, 1)], n)
            .into_iter()
            .map(to_u64)
            .collect();
        let h_d = h_b_full
            .iter()
            .enumerate()
            .map(|(i, &x)| if i == 0 { 1 } else { x / 2 })
            .collect();
        Self {
            p,
            p2,
            h_a,
            h_b,
            h_b_full,
            h_d,
        }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    fn conv(h: &[u64], n: usize) -> u64 {
        (0..=n).map(|k| h[k] * h[n - k]).sum()
    }

    /// Unordered pairs `{ρ₁, ρ₂}` with `|ρ₁| + |ρ₂| = n`, where each
    /// diagonal pair `ρ₁ = ρ₂` contributes 2 and each diagonal singleton
    /// `{ρ, ρ'}` of equal weight contributes 1. The empty pair counts once.
    fn split_sym(h: &[u64], n: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut t: u64 = (0..n.div_ceil(2)).map(|k| h[k] * h[n - k]).sum();
        if n.is_multiple_of(2) {
            let hh = h[n / 2];
            t += hh * hh.saturating_sub(1) / 2 + 2 * hh;
        }
        t
    }

    fn split_d(&self, n: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        let h = &self.h_d;
        let mut t: u64 = (1..n.div_ceil(2)).map(|m| 2 * h[m] * h[n - m]).sum();
        if n.is_multiple_of(2) {
            let hh = h[n / 2];
            t += hh * hh + 3 * hh;
        }
        t + h[n]
    }

    pub fn theta_k0(&self, variant: Theta0Variant, n: usize) -> u64 {
        match variant {
            Theta0Variant::SplitB | Theta0Variant::Ind2B => Self::split_sym(&self.h_b, n),
            Theta0Variant::Ind1B => Self::conv(&self.h_b, n),
            Theta0Variant::Ind1D => Self::conv(&self.h_b_full, n),
            Theta0Variant::Ind2D => Self::split_sym(&self.h_b_full, n),
            Theta0Variant::SplitD => self.split_d(n),
        }
    }

    pub fn theta_k1(&self, m: usize, t: i32) -> u64 {
        if m >= 1 {
            return u64::from(eta(m as u32, t)) * self.h_a[m];
        }
        match t.unsigned_abs() {
            0 => 4,
            1 => 2,
            _ => staircase_kappa1_count(t),
        }
    }
}

fn staircase_kappa1_count(t: i32) -> u64 {
    let mu = mu_t(t);
    let (p, q) = mu.signature();
    kappa1_data_bdi(&mu, PairParity::of(p, q))
        .expect("staircases lie in Σ")
        .count
}

/// `|Θ^{κ₀}|` for the given variant, straight from the set definitions.
pub fn theta_k0_count(variant: Theta0Variant, n: u32) -> u64 {
    CountTables::new(n as usize).theta_k0(variant, n as usize)
}

/// `|Θ^{κ₁}_{m,t}|`.
pub fn theta_k1_count(m: u32, t: i32) -> u64 {
    CountTables::new(m as usize).theta_k1(m as usize, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Delta {
    I,
    II,
    III,
    IV,
}

impl Delta {
    pub const ALL: [Delta; 4] = [Delta::I, Delta::II, Delta::III, Delta::IV];

    /// The first `n` decorations, or none when `n == 1`.
    pub fn for_multiplicity(n: u32) -> Vec<Option<Delta>> {
        if n <= 1 {
            vec![None]
        } else {
            Self::ALL[..n as usize].iter().copied().map(Some).collect()
        }
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Delta::I => "I",
            Delta::II => "II",
            Delta::III => "III",
            Delta::IV => "IV",
        })
    }
}

/// A K-orbit: a diagram and, when several orbits share it, which one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub diagram: SignedYoungDiagram,
    pub delta: Option<Delta>,
}

impl OrbitLabel {
    /// Every orbit over `d`.
    pub fn all_over(d: &SignedYoungDiagram) -> Result<Vec<OrbitLabel>> {
        let mult = d.orbit_multiplicity()?;
        Ok(Delta::for_multiplicity(mult)
            .into_iter()
            .map(|delta| OrbitLabel {
                diagram: d.clone(),
                delta,
            })
            .collect())
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.delta {
            Some(d) => write!(f, "{} [{}]", self.diagram, d),
            None => write!(f, "{}", self.diagram),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    SigmaB1,
    SigmaB2,
    EmptyMu,
    Kappa1Staircase,
    Diii,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumEntry {
    pub support: SignedYoungDiagram,
    pub delta: Option<Delta>,
    pub m: u32,
    pub k: u32,
    pub mu: SignedYoungDiagram,
    pub family: Family,
    pub count: u64,
}

impl StratumEntry {
    pub fn orbit(&self) -> OrbitLabel {
        OrbitLabel {
            diagram: self.support.clone(),
            delta: self.delta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairType {
    Bdi,
    Diii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairDescriptor {
    #[serde(rename = "type")]
    pub kind: PairType,
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub n: Option<u32>,
}

impl PairDescriptor {
    pub fn bdi(p: u32, q: u32) -> Self {
        Self {
            kind: PairType::Bdi,
            p: Some(p),
            q: Some(q),
            n: None,
        }
    }

    pub fn diii(n: u32) -> Self {
        Self {
            kind: PairType::Diii,
            p: None,
            q: None,
            n: Some(n),
        }
    }
}

impl fmt::Display for PairDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PairType::Bdi => write!(
                f,
                "BDI (p,q)=({},{})",
                self.p.unwrap_or(0),
                self.q.unwrap_or(0)
            ),
            PairType::Diii => write!(f, "DIII n={}", self.n.unwrap_or(0)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CentralCharacter {
    K0,
    K1,
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CentralCharacter::K0 => "k0",
            CentralCharacter::K1 => "k1",
        })
    }
}

/// Which strata of a census to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Subset {
    #[default]
    All,
    Cuspidal,
    Nilpotent,
    Full,
}

impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Subset::All,
            "cuspidal" => Subset::Cuspidal,
            "nilpotent" => Subset::Nilpotent,
            "full" => Subset::Full,
            _ => {
                return Err(Error::OutOfRange {
                    what: "subset",
                    detail: s.to_string(),
                })
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub pair: PairDescriptor,
    pub central: CentralCharacter,
    pub strata: Vec<StratumEntry>,
    pub total: u64,
    pub warnings: Vec<String>,
}

impl CensusReport {
    fn new(
        pair: PairDescriptor,
        central: CentralCharacter,
        strata: Vec<StratumEntry>,
        warnings: Vec<String>,
    ) -> Self {
        let strata: Vec<StratumEntry> = strata.into_iter().filter(|e| e.count > 0).collect();
        let total = strata.iter().map(|e| e.count).sum();
        Self {
            pair,
            central,
            strata,
            total,
            warnings,
        }
    }

    /// The BDI signature difference `t = p - q`; 0 for DIII.
    fn t(&self) -> i64 {
        i64::from(self.pair.p.unwrap_or(0)) - i64::from(self.pair.q.unwrap_or(0))
    }

    fn rank(&self) -> u32 {
        match self.pair.kind {
            PairType::Bdi => self.pair.p.unwrap_or(0) + self.pair.q.unwrap_or(0),
            PairType::Diii => 2 * self.pair.n.unwrap_or(0),
        }
    }

    fn is_full(&self, e: &StratumEntry) -> bool {
        let t = self.t();
        t.abs() <= 1 && e.k == 0 && i64::from(2 * e.m) == i64::from(self.rank()) - t * t
    }

    fn keeps(&self, subset: Subset, e: &StratumEntry) -> bool {
        match subset {
            Subset::All => true,
            Subset::Nilpotent => e.m == 0 && e.k == 0,
            Subset::Full => self.pair.kind == PairType::Bdi && self.is_full(e),
            Subset::Cuspidal => match (self.pair.kind, self.central) {
                (PairType::Diii, _) => false,
                (PairType::Bdi, CentralCharacter::K0) => self.is_full(e),
                (PairType::Bdi, CentralCharacter::K1) => e.k == 0,
            },
        }
    }

    /// The report restricted to one sub-census, with its total recomputed.
    pub fn subset(&self, subset: Subset) -> CensusReport {
        let strata = self
            .strata
            .iter()
            .filter(|e| self.keeps(subset, e))
            .cloned()
            .collect();
        CensusReport::new(self.pair, self.central, strata, self.warnings.clone())
    }
}

fn low_rank_warning(n: u32) -> Vec<String> {
    if n < 5 {
        vec![format!(
            "low rank: N = {n} < 5; counts are computed but lie outside the classified range"
        )]
    } else {
        Vec::new()
    }
}

fn theta_variants(n_odd: bool) -> (Theta0Variant, Theta0Variant) {
    if n_odd {
        (Theta0Variant::Ind1B, Theta0Variant::Ind2B)
    } else {
        (Theta0Variant::Ind1D, Theta0Variant::Ind2D)
    }
}

/// κ₀ census of the BDI pair `(p, q)`.
pub fn census_bdi_k0(p: u32, q: u32) -> CensusReport {
    let n = p + q;
    let n_odd = n % 2 == 1;
    let t = i64::from(p) - i64::from(q);
    let tables = CountTables::new(n as usize);
    let (ind1, ind2) = theta_variants(n_odd);
    let mut strata = Vec::new();
    for k in 0..=n / 4 {
        let pk = tables.p[k as usize];
        for m in 0..=n {
            let used = m + 2 * k;
            if used > p || used > q {
                break;
            }
            if !n_odd && (m + q) % 2 == 1 {
                continue;
            }
            let (pp, qq) = (p - used, q - used);
            let block = split_block(m, k);
            if pp == 0 && qq == 0 {
                if t != 0 {
                    continue;
                }
                if m > 0 {
                    strata.push(StratumEntry {
                        support: block,
                        delta: None,
                        m,
                        k,
                        mu: SignedYoungDiagram::empty(),
                        family: Family::EmptyMu,
                        count: tables.theta_k0(Theta0Variant::SplitD, m as usize) * pk,
                    });
                } else {
                    for delta in Delta::ALL {
                        strata.push(StratumEntry {
                            support: block.clone(),
                            delta: Some(delta),
                            m,
                            k,
                            mu: SignedYoungDiagram::empty(),
                            family: Family::EmptyMu,
                            count: pk,
                        });
                    }
                }
                continue;
            }
            for mu in enum_sigma_b(pp, qq) {
                let class = mu.classify().expect("Σ_b ⊂ Σ").class;
                let pi = pi_size(&mu).expect("μ ∈ Σ_b");
                let support = join(&block, &mu);
                match class {
                    SigmaClass::Sigma1 => strata.push(StratumEntry {
                        support,
                        delta: None,
                        m,
                        k,
                        mu,
                        family: Family::SigmaB1,
                        count: tables.theta_k0(ind1, m as usize) * pk * pi,
                    }),
                    SigmaClass::Sigma2 if m > 0 => strata.push(StratumEntry {
                        support,
                        delta: None,
                        m,
                        k,
                        mu,
                        family: Family::SigmaB2,
                        count: tables.theta_k0(ind2, m as usize) * pk * pi,
                    }),
                    SigmaClass::Sigma2 => {
                        for delta in [Delta::I, Delta::II] {
                            strata.push(StratumEntry {
                                support: support.clone(),
                                delta: Some(delta),
                                m,
                                k,
                                mu: mu.clone(),
                                family: Family::SigmaB2,
                                count: pk * pi,
                            });
                        }
                    }
                    SigmaClass::Sigma3 => unreachable!("Σ_b and Σ₃ are disjoint"),
                }
            }
        }
    }
    CensusReport::new(
        PairDescriptor::bdi(p, q),
        CentralCharacter::K0,
        strata,
        low_rank_warning(n),
    )
}

/// κ₁ census of the BDI pair `(p, q)`.
pub fn census_bdi_k1(p: u32, q: u32) -> CensusReport {
    let n = p + q;
    let t = p as i32 - q as i32;
    let pair = PairDescriptor::bdi(p, q);
    let warnings = low_rank_warning(n);
    let rest = i64::from(n) - i64::from(t) * i64::from(t);
    if rest < 0 || rest % 2 == 1 {
        return CensusReport::new(pair, CentralCharacter::K1, Vec::new(), warnings);
    }
    let rest = rest as u32;
    let tables = CountTables::new(n as usize);
    let mu = mu_t(t);
    let mut strata = Vec::new();
    for k in 0..=rest / 4 {
        let m = (rest - 4 * k) / 2;
        let p2k = tables.p2[k as usize];
        let support = join(&split_block(m, k), &mu);
        let deltas = if m == 0 && t.unsigned_abs() <= 1 {
            Delta::for_multiplicity(if t == 0 { 4 } else { 2 })
        } else {
            vec![None]
        };
        let per_orbit = if deltas.len() > 1 {
            p2k
        } else {
            p2k * tables.theta_k1(m as usize, t)
        };
        for delta in deltas {
            strata.push(StratumEntry {
                support: support.clone(),
                delta,
                m,
                k,
                mu: mu.clone(),
                family: Family::Kappa1Staircase,
                count: per_orbit,
            });
        }
    }
    CensusReport::new(pair, CentralCharacter::K1, strata, warnings)
}

/// κ₀ and κ₁ censuses for DIII with `K^{n,n}`.
pub fn census_diii(n: u32) -> (CensusReport, CensusReport) {
    let pair = PairDescriptor::diii(n);
    let warnings = if n < 3 {
        vec![format!(
            "low rank: n = {n} < 3; counts are computed but lie outside the classified range"
        )]
    } else {
        Vec::new()
    };
    let p = partition_numbers(n as usize);
    let mut k0 = Vec::new();
    for k in 0..=n / 2 {
        let block = split_block(2 * k, 0);
        for mu in enum_lambda_b(n - 2 * k) {
            k0.push(StratumEntry {
                support: join(&block, &mu),
                delta: None,
                m: 0,
                k,
                mu,
                family: Family::Diii,
                count: p[k as usize],
            });
        }
    }
    let mut k1 = Vec::new();
    if n.is_multiple_of(2) {
        k1.push(StratumEntry {
            support: SignedYoungDiagram::empty(),
            delta: None,
            m: 0,
            k: 0,
            mu: SignedYoungDiagram::empty(),
            family: Family::Diii,
            count: count_bipartitions(i64::from(n / 2)),
        });
    }
    (
        CensusReport::new(pair, CentralCharacter::K0, k0, warnings.clone()),
        CensusReport::new(pair, CentralCharacter::K1, k1, warnings),
    )
}

/// `1 + x^t` as a series (`2` when `t = 0`).
fn one_plus_xt(t: usize, order: usize) -> FormalSeries {
    &FormalSeries::one(order) + &FormalSeries::monomial(t, rat(1), order)
}

fn orient(p: u32, q: u32) -> (usize, usize) {
    let (hi, lo) = if p >= q { (p, q) } else { (q, p) };
    ((hi - lo) as usize, lo as usize)
}

/// The κ₀ generating function for fixed `t ≥ 0`, to `x^order`.
pub fn k0_series(t: usize, order: usize) -> Result<FormalSeries> {
    let a = ProductSpec::from_tuples(&[(1, 1, 0, 1), (-1, 1, 0, -3)]).eval(order)?;
    let b = ProductSpec::from_tuples(&[(1, 2, 0, 2), (-1, 2, 0, -3)]).eval(order)?;
    let first = &one_plus_xt(t, order).inverse()?.scale(&frac(1, 2)) * &a;
    let ratio = &one_plus_xt(t, order) * &one_plus_xt(2 * t, order).inverse()?;
    let second = &ratio.scale(&frac(3, 2)) * &b;
    let mut out = &first + &second;
    if t == 0 {
        let c = ProductSpec::from_tuples(&[(-1, 2, 0, -1)]).eval(order)?;
        out = &out + &c.scale(&frac(9, 4));
    }
    Ok(out)
}

/// Closed-form κ₀ count of the BDI pair `(p, q)`.
pub fn count_formula_k0(p: u32, q: u32) -> Result<u64> {
    let (t, q) = orient(p, q);
    k0_series(t, q)?.coeff_u64(q)
}

/// `∏ 1/((1-x^{4s})(1-x^{2s}))`.
pub fn k1_series(order: usize) -> Result<FormalSeries> {
    ProductSpec::from_tuples(&[(-1, 4, 0, -1), (-1, 2, 0, -1)]).eval(order)
}

/// Closed-form κ₁ count of the BDI pair `(p, q)`.
pub fn count_formula_k1(p: u32, q: u32) -> Result<u64> {
    let t = p as i32 - q as i32;
    let rest = i64::from(p + q) - i64::from(t) * i64::from(t);
    if rest < 0 || rest % 2 == 1 {
        return Ok(0);
    }
    let rest = rest as usize;
    let c = k1_series(rest)?.coeff_u64(rest)?;
    Ok(u64::from(eta((rest / 2) as u32, t)) * c)
}

/// `Σ_λ mult(λ)·2^{r_λ}` over Σ^{p,q}: the number of κ₀-irreducibles of
/// all component groups.
pub fn orbital_count_k0(p: u32, q: u32) -> u64 {
    enum_sigma(p, q)
        .iter()
        .map(|d| {
            let c = d.classify().expect("enumerated diagrams lie in Σ");
            u64::from(d.orbit_multiplicity().unwrap()) << c.r
        })
        .sum()
}

/// `Σ_λ mult(λ)·(κ₁-count of A_K(x_λ))` over Σ^{p,q}.
pub fn orbital_count_k1(p: u32, q: u32) -> u64 {
    let parity = PairParity::of(p, q);
    enum_sigma(p, q)
        .iter()
        .map(|d| {
            let k = kappa1_data_bdi(d, parity).expect("enumerated diagrams lie in Σ");
            u64::from(d.orbit_multiplicity().unwrap()) * k.count
        })
        .sum()
}

/// `Σ_{λ ∈ Σ₂ ∪ Σ₃} 2^{r_λ}` over Σ^{p,q}.
pub fn sigma23_weight(p: u32, q: u32) -> u64 {
    enum_sigma(p, q)
        .iter()
        .filter_map(|d| {
            let c = d.classify().ok()?;
            (c.class != SigmaClass::Sigma1).then(|| 1u64 << c.r)
        })
        .sum()
}

/// The lemma series `(1+x^t)/(1+x^{2t}) ∏(1+x^{2s})²/(1-x^{2s})³`.
pub fn sigma23_series(t: usize, order: usize) -> Result<FormalSeries> {
    let ratio = &one_plus_xt(t, order) * &one_plus_xt(2 * t, order).inverse()?;
    let b = ProductSpec::from_tuples(&[(1, 2, 0, 2), (-1, 2, 0, -3)]).eval(order)?;
    Ok(&ratio * &b)
}

/// `(b¹_{p,q}, b²_{p,q})`: sums of `|Π|` over Σ_{b,1} and Σ_{b,2}.
pub fn b_sums(p: u32, q: u32) -> (u64, u64) {
    let mut b = (0, 0);
    for mu in enum_sigma_b(p, q) {
        let pi = pi_size(&mu).expect("μ ∈ Σ_b");
        match mu.classify().expect("Σ_b ⊂ Σ").class {
            SigmaClass::Sigma1 => b.0 += pi,
            _ => b.1 += pi,
        }
    }
    b
}

/// `b̃_{p,q} = 2b¹ + b²`.
pub fn b_tilde(p: u32, q: u32) -> u64 {
    let (b1, b2) = b_sums(p, q);
    2 * b1 + b2
}

/// `Σ_{μ ∈ Σ_b^{p,q}} 2^{l_μ - 1 + ε}` with `ε = (p + q) mod 2`, as a
/// rational since `l_μ = 0` occurs.
pub fn b_tilde_by_l(p: u32, q: u32) -> BigRational {
    let eps = ((p + q) % 2) as i64;
    enum_sigma_b(p, q)
        .iter()
        .map(|mu| {
            let e = i64::from(l_of(mu).expect("μ ∈ Σ_b")) - 1 + eps;
            if e >= 0 {
                rat(1 << e)
            } else {
                frac(1, 1 << -e)
            }
        })
        .fold(rat(0), |a, b| a + b)
}

/// `b²_N = Σ_{p+q=N} b²_{p,q}`.
pub fn b2_total(n: u32) -> u64 {
    (0..=n).map(|p| b_sums(p, n - p).1).sum()
}

/// `(κ₀, κ₁)` counts of cuspidal character sheaves, read off the censuses.
pub fn cuspidal_counts(p: u32, q: u32) -> (u64, u64) {
    (
        census_bdi_k0(p, q).subset(Subset::Cuspidal).total,
        census_bdi_k1(p, q).subset(Subset::Cuspidal).total,
    )
}

/// `(κ₀, κ₁)` counts of nilpotent-support character sheaves.
pub fn nilpotent_support_counts(p: u32, q: u32) -> (u64, u64) {
    (
        census_bdi_k0(p, q).subset(Subset::Nilpotent).total,
        census_bdi_k1(p, q).subset(Subset::Nilpotent).total,
    )
}

/// Closed-form cuspidal κ₀ count; `None` when the closed forms do not
/// apply (`|t| > 1`, or `p = q = 0`).
pub fn cuspidal_formula_k0(p: u32, q: u32) -> Result<Option<u64>> {
    let (t, n) = orient(p, q);
    let series = match (t, n % 2) {
        (1, _) => ProductSpec::from_tuples(&[(1, 2, 0, 2), (1, 1, 0, 2)])
            .scaled(frac(1, 2))
            .eval(n)?
            .add_product(
                &ProductSpec::from_tuples(&[(1, 4, 0, 1), (1, 2, 0, 1)]).scaled(frac(3, 2)),
            )?,
        (0, 1) => ProductSpec::from_tuples(&[(1, 4, 0, 4), (1, 2, 0, 4)])
            .shifted(1)
            .eval(n)?,
        (0, 0) if n > 0 => ProductSpec::from_tuples(&[(1, 4, -2, 4), (1, 2, 0, 4)])
            .scaled(frac(1, 4))
            .eval(n)?
            .add_product(
                &ProductSpec::from_tuples(&[(1, 4, -2, 1), (1, 2, 0, 1)]).scaled(frac(3, 2)),
            )?,
        _ => return Ok(None),
    };
    Ok(Some(series.coeff_u64(n)?))
}

/// Closed-form cuspidal κ₁ count: `η_{m,t}` times the number of distinct
/// partitions of `m`, where `p + q = 2m + t²`.
pub fn cuspidal_formula_k1(p: u32, q: u32) -> u64 {
    let t = p as i32 - q as i32;
    let rest = i64::from(p + q) - i64::from(t) * i64::from(t);
    if rest < 0 || rest % 2 == 1 {
        return 0;
    }
    let m = (rest / 2) as u32;
    u64::from(eta(m, t)) * hecke_count(HeckeFamily::A, m)
}

/// Closed-form nilpotent-support κ₀ count; `None` when `p` and `q` are
/// both odd.
pub fn nilpotent_formula_k0(p: u32, q: u32) -> Result<Option<u64>> {
    if p % 2 == 1 && q % 2 == 1 {
        return Ok(None);
    }
    let (t, n) = orient(p, q);
    let (a, b) = if t % 2 == 1 {
        (
            ProductSpec::from_tuples(&[(1, 2, -1, 2), (-1, 2, 0, -2)]),
            ProductSpec::from_tuples(&[(1, 4, -2, 1), (-1, 2, 0, -2)]),
        )
    } else {
        (
            ProductSpec::from_tuples(&[(1, 2, 0, 2), (-1, 2, 0, -2)]),
            ProductSpec::from_tuples(&[(1, 4, 0, 1), (-1, 2, 0, -2)]),
        )
    };
    let first = &one_plus_xt(t, n).inverse()?.scale(&frac(1, 2)) * &a.eval(n)?;
    let ratio = &one_plus_xt(t, n) * &one_plus_xt(2 * t, n).inverse()?;
    let second = &ratio.scale(&frac(3, 2)) * &b.eval(n)?;
    Ok(Some((&first + &second).coeff_u64(n)?))
}

/// `η_{0,t}` when `(p, q)` is the signature of `μ_t`, else 0.
pub fn nilpotent_formula_k1(p: u32, q: u32) -> u64 {
    let t = p as i32 - q as i32;
    if i64::from(p + q) == i64::from(t) * i64::from(t) {
        u64::from(eta(0, t))
    } else {
        0
    }
}

/// `(T⁰_N, T'_N)`: the κ₀ total over all `p + q = N` by the closed formula
/// and by the census.
pub fn aggregate_t(n: u32) -> Result<(u64, u64)> {
    let cells: Vec<(u64, u64)> = (0..=n)
        .into_par_iter()
        .map(|p| Ok((count_formula_k0(p, n - p)?, census_bdi_k0(p, n - p).total)))
        .collect::<Result<_>>()?;
    Ok(cells.iter().fold((0, 0), |a, c| (a.0 + c.0, a.1 + c.1)))
}

/// All orbits of Σ^{p,q} or Λ^{n,n}.
pub fn orbits_bdi(p: u32, q: u32) -> Vec<OrbitLabel> {
    enum_sigma(p, q)
        .iter()
        .flat_map(|d| OrbitLabel::all_over(d).expect("enumerated diagrams lie in Σ"))
        .collect()
}

/// All orbits of Λ^{n,n}; each diagram carries a single orbit.
pub fn orbits_diii(n: u32) -> Vec<OrbitLabel> {
    enum_lambda(n)
        .into_iter()
        .map(|diagram| OrbitLabel {
            diagram,
            delta: None,
        })
        .collect()
}

impl FormalSeries {
    fn add_product(self, spec: &ProductSpec) -> Result<FormalSeries> {
        let other = spec.eval(self.order())?;
        Ok(&self + &other)
    }
}
