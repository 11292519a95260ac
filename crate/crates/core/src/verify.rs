//! The identity harness: every census-versus-formula comparison and every
//! pure series identity, each under a stable id.
//!
//! Checks that enumerate diagrams are bounded by `p + q ≤ sweep` (or
//! `k1_sweep` for the orbit-by-orbit sums); pure series identities are
//! compared to `x^order`.

use std::fmt;

use num_rational::{BigRational, Rational64};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{
    aggregate_t, b2_total, b_tilde, b_tilde_by_l, census_bdi_k0, census_bdi_k1, census_diii,
    count_formula_k0, count_formula_k1, cuspidal_counts, cuspidal_formula_k0, cuspidal_formula_k1,
    nilpotent_formula_k0, nilpotent_formula_k1, nilpotent_support_counts, orbital_count_k0,
    orbital_count_k1, sigma23_series, sigma23_weight, theta_k0_count, Theta0Variant,
};
use crate::diagrams::{diii_kappa1_bijection, diii_kappa1_inverse, enum_lambda};
use crate::error::{Error, Result};
use crate::partitions::{
    count_bipartitions, count_partitions_ratio, enum_distinct_odd_balanced, partition_numbers,
    weighted_odd_partition_sum,
};
use crate::qseries::{
    bilateral_sum, check_identity_from, format_rational, frac, rat, BilateralFamily,
    BivariateSeries, FormalSeries, KParity, ProductSpec, Verdict,
};

/// Truncation and sweep bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Series order for pure identities.
    pub order: usize,
    /// Largest `p + q` for census-versus-formula sweeps.
    pub sweep: u32,
    /// Largest `p + q` for orbit-by-orbit sums.
    pub k1_sweep: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            order: 40,
            sweep: 24,
            k1_sweep: 20,
        }
    }
}

impl SuiteConfig {
    pub fn with_order(order: usize) -> Self {
        Self {
            order,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// First disagreement of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} != {}", self.location, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub range: String,
    pub cells: u64,
    pub status: Status,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub checks: Vec<IdentityCheck>,
    pub status: Status,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    /// `"all"` or a comma-separated list of ids.
    pub fn parse(s: &str) -> Self {
        if s.trim() == "all" {
            Selection::All
        } else {
            Selection::Ids(
                s.split(',')
                    .map(|x| x.trim().to_string())
                    .filter(|x| !x.is_empty())
                    .collect(),
            )
        }
    }
}

/// Accumulates cell comparisons and keeps the first disagreement.
#[derive(Debug, Default)]
struct Tally {
    cells: u64,
    witness: Option<Witness>,
}

impl Tally {
    fn cell<T: fmt::Display + PartialEq>(
        &mut self,
        location: impl FnOnce() -> String,
        lhs: T,
        rhs: T,
    ) {
        self.cells += 1;
        if lhs != rhs && self.witness.is_none() {
            self.witness = Some(Witness {
                location: location(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn cells<T: fmt::Display + PartialEq>(&mut self, rows: Vec<(String, T, T)>) {
        for (loc, l, r) in rows {
            self.cell(|| loc, l, r);
        }
    }

    /// Compares coefficients `from..=to`.
    fn series(
        &mut self,
        label: &str,
        lhs: &FormalSeries,
        rhs: &FormalSeries,
        from: usize,
        to: usize,
    ) {
        if from > to {
            return;
        }
        self.cells += (to - from + 1) as u64;
        if let Verdict::Fail { exponent, lhs, rhs } = check_identity_from(lhs, rhs, from, to) {
            if self.witness.is_none() {
                self.witness = Some(Witness {
                    location: format!("{label} x^{exponent}"),
                    lhs: format_rational(&lhs),
                    rhs: format_rational(&rhs),
                });
            }
        }
    }
}

struct Outcome {
    range: String,
    tally: Tally,
}

type CheckFn = fn(&SuiteConfig) -> Result<Outcome>;

struct Entry {
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    run: CheckFn,
}

const CATALOGUE: &[Entry] = &[
    Entry {
        id: "number1-k0",
        description: "κ₀ census total equals the closed-form coefficient",
        anchor: "|Char_K(g₁)_{κ₀}| = [x^q] ½/(1+x^t)·∏(1+x^s)/(1-x^s)³ + 3/2·(1+x^t)/(1+x^{2t})·∏(1+x^{2s})²/(1-x^{2s})³",
        run: number1_k0,
    },
    Entry {
        id: "number1-k1",
        description: "κ₁ census total equals η_{m,t} times the κ₁ series coefficient",
        anchor: "|Char_K(g₁)_{κ₁}| = η_{m,t}·[x^{N-t²}] ∏ 1/((1-x^{4s})(1-x^{2s}))",
        run: number1_k1,
    },
    Entry {
        id: "kappa1-orbit-sum",
        description: "κ₁ census, closed form and orbit-by-orbit κ₁-irreducible counts agree",
        anchor: "Σ_{λ ∈ Σ^{p,q}} mult(λ)·#Irr_{κ₁} A_K(x_λ)",
        run: kappa1_orbit_sum,
    },
    Entry {
        id: "orbital-k0",
        description: "κ₀ census total equals the sum of |Irr A_K̄(x_λ)| over orbits",
        anchor: "Σ_{λ ∈ Σ^{p,q}} mult(λ)·2^{r_λ}",
        run: orbital_k0,
    },
    Entry {
        id: "lemma-n1",
        description: "Σ₂ ∪ Σ₃ weighted count against its generating function",
        anchor: "Σ_q Σ_{λ ∈ Σ₂∪Σ₃, sig (q+t,q)} 2^{r_λ} x^q = (1+x^t)/(1+x^{2t})·∏(1+x^{2s})²/(1-x^{2s})³",
        run: lemma_n1,
    },
    Entry {
        id: "lemma-n1-2var",
        description: "diagonal of the two-variable product equals twice the one-variable form",
        anchor: "∏_{m≥0} (1+u^{2m+2}v^{2m+1})/(1-u^{2m+2}v^{2m+1})·(1+u^{2m}v^{2m+1})/(1-u^{2m}v^{2m+1})·∏_{m≥1} 1/(1-u^{2m}v^{2m}) + (u ↔ v)",
        run: lemma_n1_2var,
    },
    Entry {
        id: "numbert-closure",
        description: "T⁰_N = T'_N and the bilateral closed forms of Σ_N T⁰_N x^N",
        anchor: "Σ T⁰_N x^N = ¼∏(1+x^{2s-1})²/((1-x^{4s})(1-x^{2s-1})²) + 3/2∏(1+x^{2s-1})/((1-x^{4s})(1-x^{2s-1})) + 9/4∏1/(1-x^{4s})",
        run: numbert_closure,
    },
    Entry {
        id: "psi1-a",
        description: "bilateral sum Σ x^k/(1+x^{2k})",
        anchor: "Σ_{k∈ℤ} x^k/(1+x^{2k}) = ½∏(1+x^{2s-1})²(1-x^{2s})²/((1-x^{2s-1})²(1+x^{2s})²)",
        run: psi1_a,
    },
    Entry {
        id: "psi1-b",
        description: "bilateral sum Σ x^k(1+x^{2k})/(1+x^{4k})",
        anchor: "Σ_{k∈ℤ} x^k(1+x^{2k})/(1+x^{4k}) = ∏(1+x^{2s-1})(1-x^{4s})²/((1-x^{2s-1})(1+x^{4s})²)",
        run: psi1_b,
    },
    Entry {
        id: "psi1-c",
        description: "odd and even halves of the second bilateral sum",
        anchor: "Σ_{k odd} = 2x∏(1+x^{4s-2})(1-x^{8s})²/((1-x^{4s-2})(1+x^{8s-4})²); Σ_{k even} = ∏(1+x^{4s-2})(1-x^{8s})²/((1-x^{4s-2})(1+x^{8s})²)",
        run: psi1_c,
    },
    Entry {
        id: "oe-split",
        description: "odd/even split of ∏(1+x^{2s-1})/(1-x^{2s-1})",
        anchor: "∏(1+x^{2s-1})/(1-x^{2s-1}) = 2x∏(1+x^{8s})²(1+x^{4s})(1+x^{2s})² + ∏(1+x^{8s-4})²(1+x^{4s})(1+x^{2s})²",
        run: oe_split,
    },
    Entry {
        id: "eqn-oeterms",
        description: "odd/even split of the square",
        anchor: "∏(1+x^{2s-1})²/(1-x^{2s-1})² = 4x∏(1+x^{4s})⁴(1+x^{2s})⁴ + ∏(1+x^{4s-2})⁴(1+x^{2s})⁴",
        run: oeterms,
    },
    Entry {
        id: "bb-odd",
        description: "b̃ summed over p + q = 2n+1",
        anchor: "Σ_n Σ_{p+q=2n+1} b̃_{p,q} x^n = 2∏(1+x^s)²(1+x^{2s})²",
        run: bb_odd,
    },
    Entry {
        id: "bb-even",
        description: "b̃ summed over p + q = 2n, with b̃_{0,0} = ½",
        anchor: "Σ_n Σ_{p+q=2n} b̃_{p,q} x^n = ½∏(1+x^s)²(1+x^{2s-1})²",
        run: bb_even,
    },
    Entry {
        id: "tb1",
        description: "b̃_{q+t,q} for fixed t, both by |Π| and by 2^{l_μ}",
        anchor: "Σ_q b̃_{q+t,q} x^q = 1/(1+x^t)·∏(1+x^{2s-1})²/(1-x^{2s})² (t odd), ∏(1+x^{2s})²/(1-x^{2s})² (t even, even q)",
        run: tb1,
    },
    Entry {
        id: "b2-odd",
        description: "b²_N over odd N",
        anchor: "Σ_n b²_{2n+1} x^n = 2∏(1+x^s)²(1+x^{4s})",
        run: b2_odd,
    },
    Entry {
        id: "b2-even",
        description: "b²_N over even N ≥ 2",
        anchor: "Σ_n b²_{2n} x^n = ∏(1+x^s)²(1+x^{4s-2}), n ≥ 1",
        run: b2_even,
    },
    Entry {
        id: "b2-weighted-oracle",
        description: "b²_N equals twice the weighted count of odd-part partitions",
        anchor: "b²_N = 2·Σ_{λ ⊢ N, odd parts} wt_λ",
        run: b2_weighted_oracle,
    },
    Entry {
        id: "fn1B",
        description: "ind1-B and ind1-D counts against their products",
        anchor: "Σ f¹ x^m = ∏(1+x^{2s})²(1+x^s)²; D: ∏(1+x^{2s-1})²(1+x^s)²",
        run: fn1b,
    },
    Entry {
        id: "fn1D",
        description: "split-D counts against their generating function",
        anchor: "¼∏(1+x^{2s-1})²(1+x^s)² + 3/2∏(1+x^{4s-2})(1+x^{2s}), n ≥ 1",
        run: fn1d,
    },
    Entry {
        id: "fn2B",
        description: "split-B and ind2-B counts against their generating function",
        anchor: "½∏(1+x^{2s})²(1+x^s)² + 3/2∏(1+x^{4s})(1+x^{2s}), n ≥ 1",
        run: fn2b,
    },
    Entry {
        id: "fn-split-D",
        description: "odd and even sections of the split-D series",
        anchor: "odd: x∏(1+x^{4s})⁴(1+x^{2s})⁴; even: ¼∏(1+x^{4s-2})⁴(1+x^{2s})⁴ + 3/2∏(1+x^{4s-2})(1+x^{2s})",
        run: fn_split_d,
    },
    Entry {
        id: "fn-ind2-D",
        description: "ind2-D counts against their generating function",
        anchor: "½∏(1+x^{2s-1})²(1+x^s)² + 3/2∏(1+x^{4s-2})(1+x^{2s}), n ≥ 1",
        run: fn_ind2_d,
    },
    Entry {
        id: "coro-cuspidal-k0",
        description: "cuspidal κ₀ census against the three split series",
        anchor: "t = ±1: ½∏(1+x^{2s})²(1+x^s)² + 3/2∏(1+x^{4s})(1+x^{2s}); t = 0: x∏(1+x^{4s})⁴(1+x^{2s})⁴ (n odd), ¼∏(1+x^{4s-2})⁴(1+x^{2s})⁴ + 3/2∏(1+x^{4s-2})(1+x^{2s}) (n even)",
        run: coro_cuspidal_k0,
    },
    Entry {
        id: "coro-cuspidal-k1",
        description: "cuspidal κ₁ census against η_{m,t} times distinct partitions",
        anchor: "η_{m,t}·[x^m]∏(1+x^s), p + q = 2m + t²",
        run: coro_cuspidal_k1,
    },
    Entry {
        id: "nilcoro-k0-odd",
        description: "nilpotent-support κ₀ census, N odd",
        anchor: "[x^q] ½/(1+x^t)·∏(1+x^{2s-1})²/(1-x^{2s})² + 3/2·(1+x^t)/(1+x^{2t})·∏(1+x^{4s-2})/(1-x^{2s})²",
        run: nilcoro_k0_odd,
    },
    Entry {
        id: "nilcoro-k0-even",
        description: "nilpotent-support κ₀ census, N even with p, q even",
        anchor: "[x^q] ½/(1+x^t)·∏(1+x^{2s})²/(1-x^{2s})² + 3/2·(1+x^t)/(1+x^{2t})·∏(1+x^{4s})/(1-x^{2s})²",
        run: nilcoro_k0_even,
    },
    Entry {
        id: "nilcoro-k1",
        description: "nilpotent-support κ₁ census: η_{0,t} at the staircase signature",
        anchor: "η_{0,t} when (p,q) = sig(μ_t), else 0",
        run: nilcoro_k1,
    },
    Entry {
        id: "diii-k0-closure",
        description: "DIII κ₀ census total equals |Λ^{n,n}|",
        anchor: "Σ_k p(k)|Λ_b^{n-2k}| = |Λ^{n,n}|",
        run: diii_k0_closure,
    },
    Entry {
        id: "diii-k1-bijection",
        description: "all-even diagrams of Λ^{n,n} biject with bipartitions of n/2",
        anchor: "|Char_K(g₁)_{κ₁}| = |P₂(n/2)|",
        run: diii_k1_bijection,
    },
    Entry {
        id: "PNt-formula",
        description: "balanced distinct odd partitions",
        anchor: "|P_{N,t}| = p((N - (2t² - t))/4)",
        run: pnt_formula,
    },
    Entry {
        id: "jacobi-t",
        description: "triple-product instance for fixed t",
        anchor: "Σ_{t₁-t₂=t} x^{2t₁²-t₁+2t₂²-t₂} = x^{t²}∏(1-x^{4s})(1+x^{2s})",
        run: jacobi_t,
    },
    Entry {
        id: "k1-series-rewrite",
        description: "rewrite of the κ₁ generating function",
        anchor: "∏(1+x^{2s})/(1-x^{4s})² = ∏1/((1-x^{4s})(1-x^{2s}))",
        run: k1_series_rewrite,
    },
    Entry {
        id: "euler-smoke",
        description: "Euler's product against the partition numbers",
        anchor: "∏1/(1-x^s) = Σ p(n) x^n",
        run: euler_smoke,
    },
];

/// All check ids in suite order.
pub fn check_ids() -> Vec<&'static str> {
    CATALOGUE.iter().map(|e| e.id).collect()
}

/// Runs the selected checks. Failures never abort the suite; ordering
/// follows the catalogue regardless of scheduling.
pub fn run_suite(selection: &Selection, config: &SuiteConfig) -> Result<SuiteReport> {
    if config.order < 10 {
        return Err(Error::OutOfRange {
            what: "order",
            detail: format!("{} < 10", config.order),
        });
    }
    let entries: Vec<&Entry> = match selection {
        Selection::All => CATALOGUE.iter().collect(),
        Selection::Ids(ids) => {
            for id in ids {
                if !CATALOGUE.iter().any(|e| e.id == id) {
                    return Err(Error::UnknownCheck(id.clone()));
                }
            }
            CATALOGUE
                .iter()
                .filter(|e| ids.iter().any(|id| id == e.id))
                .collect()
        }
    };
    let checks: Vec<IdentityCheck> = entries.par_iter().map(|e| execute(e, config)).collect();
    let status = if checks.iter().all(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(SuiteReport {
        config: *config,
        checks,
        status,
    })
}

fn execute(entry: &Entry, config: &SuiteConfig) -> IdentityCheck {
    let (range, cells, witness) = match (entry.run)(config) {
        Ok(o) => (o.range, o.tally.cells, o.tally.witness),
        Err(e) => (
            String::new(),
            0,
            Some(Witness {
                location: "error".into(),
                lhs: e.to_string(),
                rhs: String::new(),
            }),
        ),
    };
    IdentityCheck {
        id: entry.id.into(),
        description: entry.description.into(),
        anchor: entry.anchor.into(),
        range,
        cells,
        status: if witness.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        witness,
    }
}

fn prod(tuples: &[(i8, u32, i32, i32)], order: usize) -> Result<FormalSeries> {
    ProductSpec::from_tuples(tuples).eval(order)
}

fn scaled(c: BigRational, tuples: &[(i8, u32, i32, i32)], order: usize) -> Result<FormalSeries> {
    ProductSpec::from_tuples(tuples).scaled(c).eval(order)
}

fn from_u64(v: impl IntoIterator<Item = u64>, order: usize) -> FormalSeries {
    FormalSeries::from_coeffs(v.into_iter().map(|x| rat(x as i64)).collect(), order)
}

/// All `(p, q)` with `p + q ≤ n`, ordered by `N` then `p`.
fn pairs_up_to(n: u32) -> Vec<(u32, u32)> {
    (0..=n)
        .flat_map(|s| (0..=s).map(move |p| (p, s - p)))
        .collect()
}

/// Evaluates `f` on each pair in parallel, keeping pair order.
fn sweep<T: Send>(
    pairs: &[(u32, u32)],
    f: impl Fn(u32, u32) -> Result<(T, T)> + Sync,
) -> Result<Vec<(String, T, T)>> {
    pairs
        .par_iter()
        .map(|&(p, q)| f(p, q).map(|(a, b)| (format!("(p,q)=({p},{q})"), a, b)))
        .collect()
}

fn sweep_outcome<T: Send + fmt::Display + PartialEq>(
    range: String,
    pairs: &[(u32, u32)],
    f: impl Fn(u32, u32) -> Result<(T, T)> + Sync,
) -> Result<Outcome> {
    let mut tally = Tally::default();
    tally.cells(sweep(pairs, f)?);
    Ok(Outcome { range, tally })
}

fn number1_k0(c: &SuiteConfig) -> Result<Outcome> {
    sweep_outcome(
        format!("p+q ≤ {}", c.sweep),
        &pairs_up_to(c.sweep),
        |p, q| Ok((census_bdi_k0(p, q).total, count_formula_k0(p, q)?)),
    )
}

fn number1_k1(c: &SuiteConfig) -> Result<Outcome> {
    sweep_outcome(
        format!("p+q ≤ {}", c.sweep),
        &pairs_up_to(c.sweep),
        |p, q| Ok((census_bdi_k1(p, q).total, count_formula_k1(p, q)?)),
    )
}

fn kappa1_orbit_sum(c: &SuiteConfig) -> Result<Outcome> {
    sweep_outcome(
        format!("p+q ≤ {}", c.k1_sweep),
        &pairs_up_to(c.k1_sweep),
        |p, q| {
            let census = census_bdi_k1(p, q).total;
            let formula = count_formula_k1(p, q)?;
            let orbital = orbital_count_k1(p, q);
            Ok((
                format!("{census}"),
                if formula == orbital {
                    format!("{formula}")
                } else {
                    format!("{formula}/{orbital}")
                },
            ))
        },
    )
}

fn orbital_k0(c: &SuiteConfig) -> Result<Outcome> {
    sweep_outcome(
        format!("p+q ≤ {}", c.k1_sweep),
        &pairs_up_to(c.k1_sweep),
        |p, q| Ok((census_bdi_k0(p, q).total, orbital_count_k0(p, q))),
    )
}

fn lemma_n1(c: &SuiteConfig) -> Result<Outcome> {
    let mut tally = Tally::default();
    for t in 0..=5u32 {
        if t > c.k1_sweep {
            break;
        }
        let qmax = ((c.k1_sweep - t) / 2) as usize;
        let series = sigma23_series(t as usize, qmax)?;
        let rows: Vec<_> = (0..=qmax as u32)
            .into_par_iter()
            .map(|q| {
                let w = sigma23_weight(q + t, q);
                let swapped = sigma23_weight(q, q + t);
                (
                    format!("t={t} q={q}"),
                    (w, swapped),
                    series.coeff_u64(q as usize),
                )
            })
            .collect();
        for (loc, (w, swapped), s) in rows {
            let s = s?;
            tally.cell(|| loc.clone(), w, s);
            tally.cell(|| format!("{loc} swapped"), swapped, s);
        }
    }
    Ok(Outcome {
        range: format!("0 ≤ t ≤ 5, p+q ≤ {}", c.k1_sweep),
        tally,
    })
}

fn lemma_n1_2var(c: &SuiteConfig) -> Result<Outcome> {
    let m = c.order.min(24);
    let term = |swap: bool| {
        let mut s = BivariateSeries::one(m, m);
        for k in 0..m {
            for (a, b) in [(2 * k + 2, 2 * k + 1), (2 * k, 2 * k + 1)] {
                let (a, b) = if swap { (b, a) } else { (a, b) };
                if a > m || b > m {
                    continue;
                }
                s.mul_binomial(1, a, b);
                s.div_binomial(-1, a, b);
            }
        }
        for k in 1..=m / 2 {
            s.div_binomial(-1, 2 * k, 2 * k);
        }
        s
    };
    let total = &term(false) + &term(true);
    let mut tally = Tally::default();
    for t in 0..=m {
        let diag = total.diagonal(t);
        let rhs = sigma23_series(t, diag.order())?.scale(&rat(2));
        tally.series(&format!("t={t}"), &diag, &rhs, 0, diag.order());
    }
    Ok(Outcome {
        range: format!("u, v ≤ {m}"),
        tally,
    })
}

fn numbert_closure(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let mut tally = Tally::default();
    let t0: Vec<u64> = (0..=o as u32)
        .into_par_iter()
        .map(|n| {
            (0..=n)
                .map(|p| count_formula_k0(p, n - p))
                .sum::<Result<u64>>()
        })
        .collect::<Result<_>>()?;
    let rows: Vec<(String, u64, u64)> = (0..=c.sweep)
        .into_par_iter()
        .map(|n| aggregate_t(n).map(|(a, b)| (format!("N={n}"), b, a)))
        .collect::<Result<_>>()?;
    tally.cells(rows);
    let all = from_u64(t0.iter().copied(), o);
    let rhs = &(&scaled(
        frac(1, 4),
        &[(1, 2, -1, 2), (-1, 4, 0, -1), (-1, 2, -1, -2)],
        o,
    )? + &scaled(
        frac(3, 2),
        &[(1, 2, -1, 1), (-1, 4, 0, -1), (-1, 2, -1, -1)],
        o,
    )?) + &scaled(frac(9, 4), &[(-1, 4, 0, -1)], o)?;
    tally.series("all", &all, &rhs, 0, o);
    let h = o / 2;
    if h >= 1 {
        let odd = from_u64((0..h).map(|n| t0[2 * n + 1]), h - 1);
        let rhs = &prod(&[(1, 2, 0, 4), (1, 1, 0, 3), (-1, 1, 0, -1)], h - 1)?
            + &scaled(
                rat(3),
                &[(1, 4, 0, 2), (1, 2, 0, 1), (1, 1, 0, 1), (-1, 1, 0, -1)],
                h - 1,
            )?;
        tally.series("odd", &odd, &rhs, 0, h - 1);
    }
    let even = from_u64((0..=h).map(|n| t0[2 * n]), h);
    let rhs = &(&scaled(
        frac(1, 4),
        &[(1, 2, -1, 4), (1, 1, 0, 3), (-1, 1, 0, -1)],
        h,
    )? + &scaled(
        frac(3, 2),
        &[(1, 4, -2, 2), (1, 2, 0, 1), (1, 1, 0, 1), (-1, 1, 0, -1)],
        h,
    )?) + &scaled(frac(9, 4), &[(-1, 2, 0, -1)], h)?;
    tally.series("even", &even, &rhs, 0, h);
    Ok(Outcome {
        range: format!("order {o}; T' = T⁰ for N ≤ {}", c.sweep),
        tally,
    })
}

fn series_outcome(
    c: &SuiteConfig,
    pairs: Vec<(&str, FormalSeries, FormalSeries, usize)>,
) -> Outcome {
    let mut tally = Tally::default();
    for (label, lhs, rhs, from) in pairs {
        tally.series(label, &lhs, &rhs, from, c.order);
    }
    Outcome {
        range: format!("order {}", c.order),
        tally,
    }
}

fn psi1_a(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let lhs = bilateral_sum(&BilateralFamily::new(1, None, 2), o)?;
    let rhs = scaled(
        frac(1, 2),
        &[(1, 2, -1, 2), (-1, 2, 0, 2), (-1, 2, -1, -2), (1, 2, 0, -2)],
        o,
    )?;
    Ok(series_outcome(c, vec![("", lhs, rhs, 0)]))
}

fn psi1_b(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let lhs = bilateral_sum(&BilateralFamily::new(1, Some(2), 4), o)?;
    let rhs = prod(
        &[(1, 2, -1, 1), (-1, 4, 0, 2), (-1, 2, -1, -1), (1, 4, 0, -2)],
        o,
    )?;
    Ok(series_outcome(c, vec![("", lhs, rhs, 0)]))
}

fn psi1_c(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let fam = BilateralFamily::new(1, Some(2), 4);
    let odd = bilateral_sum(&fam.with_parity(KParity::Odd), o)?;
    let odd_rhs = ProductSpec::from_tuples(&[
        (1, 4, -2, 1),
        (-1, 8, 0, 2),
        (-1, 4, -2, -1),
        (1, 8, -4, -2),
    ])
    .scaled(rat(2))
    .shifted(1)
    .eval(o)?;
    let even = bilateral_sum(&fam.with_parity(KParity::Even), o)?;
    let even_rhs = prod(
        &[(1, 4, -2, 1), (-1, 8, 0, 2), (-1, 4, -2, -1), (1, 8, 0, -2)],
        o,
    )?;
    Ok(series_outcome(
        c,
        vec![("odd", odd, odd_rhs, 0), ("even", even, even_rhs, 0)],
    ))
}

fn oe_split(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let lhs = prod(&[(1, 2, -1, 1), (-1, 2, -1, -1)], o)?;
    let rhs = &ProductSpec::from_tuples(&[(1, 8, 0, 2), (1, 4, 0, 1), (1, 2, 0, 2)])
        .scaled(rat(2))
        .shifted(1)
        .eval(o)?
        + &prod(&[(1, 8, -4, 2), (1, 4, 0, 1), (1, 2, 0, 2)], o)?;
    Ok(series_outcome(c, vec![("", lhs, rhs, 0)]))
}

fn oeterms(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let lhs = prod(&[(1, 2, -1, 2), (-1, 2, -1, -2)], o)?;
    let rhs = &ProductSpec::from_tuples(&[(1, 4, 0, 4), (1, 2, 0, 4)])
        .scaled(rat(4))
        .shifted(1)
        .eval(o)?
        + &prod(&[(1, 4, -2, 4), (1, 2, 0, 4)], o)?;
    Ok(series_outcome(c, vec![("", lhs, rhs, 0)]))
}

/// `b̃_{p,q}` with the convention `b̃_{0,0} = ½`.
fn b_tilde_conv(p: u32, q: u32) -> BigRational {
    if p == 0 && q == 0 {
        frac(1, 2)
    } else {
        rat(b_tilde(p, q) as i64)
    }
}

fn b_tilde_sums(n: u32) -> BigRational {
    (0..=n)
        .map(|p| b_tilde_conv(p, n - p))
        .fold(rat(0), |a, b| a + b)
}

fn bb_odd(c: &SuiteConfig) -> Result<Outcome> {
    let h = ((c.sweep.max(1) - 1) / 2) as usize;
    let lhs: Vec<BigRational> = (0..=h as u32)
        .into_par_iter()
        .map(|n| b_tilde_sums(2 * n + 1))
        .collect();
    let lhs = FormalSeries::from_coeffs(lhs, h);
    let rhs = scaled(rat(2), &[(1, 1, 0, 2), (1, 2, 0, 2)], h)?;
    let mut tally = Tally::default();
    tally.series("", &lhs, &rhs, 0, h);
    Ok(Outcome {
        range: format!("2n+1 ≤ {}", c.sweep),
        tally,
    })
}

fn bb_even(c: &SuiteConfig) -> Result<Outcome> {
    let h = (c.sweep / 2) as usize;
    let lhs: Vec<BigRational> = (0..=h as u32)
        .into_par_iter()
        .map(|n| b_tilde_sums(2 * n))
        .collect();
    let lhs = FormalSeries::from_coeffs(lhs, h);
    let rhs = scaled(frac(1, 2), &[(1, 1, 0, 2), (1, 2, -1, 2)], h)?;
    let mut tally = Tally::default();
    tally.series("", &lhs, &rhs, 0, h);
    Ok(Outcome {
        range: format!("2n ≤ {}", c.sweep),
        tally,
    })
}

fn tb1(c: &SuiteConfig) -> Result<Outcome> {
    let mut tally = Tally::default();
    for t in -5i32..=5 {
        let at = t.unsigned_abs();
        if at > c.sweep {
            continue;
        }
        let qmax = ((c.sweep - at) / 2) as usize;
        let inv = FormalSeries::constant(rat(1), qmax)
            + FormalSeries::monomial(at as usize, rat(1), qmax);
        let body: &[(i8, u32, i32, i32)] = if at % 2 == 1 {
            &[(1, 2, -1, 2), (-1, 2, 0, -2)]
        } else {
            &[(1, 2, 0, 2), (-1, 2, 0, -2)]
        };
        let rhs = &inv.inverse()? * &prod(body, qmax)?;
        let qs: Vec<u32> = (0..=qmax as u32)
            .filter(|q| at % 2 == 1 || q % 2 == 0)
            .collect();
        let rows: Vec<_> = qs
            .par_iter()
            .map(|&q| {
                let (p, qq) = if t >= 0 { (q + at, q) } else { (q, q + at) };
                let by_l = if p == 0 && qq == 0 {
                    frac(1, 2)
                } else {
                    b_tilde_by_l(p, qq)
                };
                (q, b_tilde_conv(p, qq), by_l)
            })
            .collect();
        for (q, by_pi, by_l) in rows {
            let r = rhs.coeff(q as usize)?.clone();
            tally.cell(
                || format!("t={t} q={q} (|Π|)"),
                format_rational(&by_pi),
                format_rational(&r),
            );
            tally.cell(
                || format!("t={t} q={q} (2^l)"),
                format_rational(&by_l),
                format_rational(&r),
            );
        }
    }
    Ok(Outcome {
        range: format!("|t| ≤ 5, p+q ≤ {}", c.sweep),
        tally,
    })
}

fn b2_odd(c: &SuiteConfig) -> Result<Outcome> {
    let h = ((c.sweep.max(1) - 1) / 2) as usize;
    let lhs = from_u64(
        (0..=h as u32)
            .into_par_iter()
            .map(|n| b2_total(2 * n + 1))
            .collect::<Vec<_>>(),
        h,
    );
    let rhs = scaled(rat(2), &[(1, 1, 0, 2), (1, 4, 0, 1)], h)?;
    let mut tally = Tally::default();
    tally.series("", &lhs, &rhs, 0, h);
    Ok(Outcome {
        range: format!("2n+1 ≤ {}", c.sweep),
        tally,
    })
}

fn b2_even(c: &SuiteConfig) -> Result<Outcome> {
    let h = (c.sweep / 2) as usize;
    let lhs = from_u64(
        (0..=h as u32)
            .into_par_iter()
            .map(|n| b2_total(2 * n))
            .collect::<Vec<_>>(),
        h,
    );
    let rhs = prod(&[(1, 1, 0, 2), (1, 4, -2, 1)], h)?;
    let mut tally = Tally::default();
    tally.series("", &lhs, &rhs, 1, h);
    Ok(Outcome {
        range: format!("2 ≤ 2n ≤ {}", c.sweep),
        tally,
    })
}

fn b2_weighted_oracle(c: &SuiteConfig) -> Result<Outcome> {
    let rows: Vec<_> = (1..=c.sweep)
        .into_par_iter()
        .map(|n| {
            (
                format!("N={n}"),
                b2_total(n),
                2 * weighted_odd_partition_sum(n),
            )
        })
        .collect();
    let mut tally = Tally::default();
    tally.cells(rows);
    Ok(Outcome {
        range: format!("1 ≤ N ≤ {}", c.sweep),
        tally,
    })
}

fn theta_series(variant: Theta0Variant, order: usize) -> FormalSeries {
    from_u64(
        (0..=order as u32).map(|n| theta_k0_count(variant, n)),
        order,
    )
}

fn fn1b(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    Ok(series_outcome(
        c,
        vec![
            (
                "ind1-B",
                theta_series(Theta0Variant::Ind1B, o),
                prod(&[(1, 2, 0, 2), (1, 1, 0, 2)], o)?,
                0,
            ),
            (
                "ind1-D",
                theta_series(Theta0Variant::Ind1D, o),
                prod(&[(1, 2, -1, 2), (1, 1, 0, 2)], o)?,
                0,
            ),
        ],
    ))
}

fn split_d_series(o: usize) -> Result<FormalSeries> {
    Ok(&scaled(frac(1, 4), &[(1, 2, -1, 2), (1, 1, 0, 2)], o)?
        + &scaled(frac(3, 2), &[(1, 4, -2, 1), (1, 2, 0, 1)], o)?)
}

fn split_b_series(o: usize) -> Result<FormalSeries> {
    Ok(&scaled(frac(1, 2), &[(1, 2, 0, 2), (1, 1, 0, 2)], o)?
        + &scaled(frac(3, 2), &[(1, 4, 0, 1), (1, 2, 0, 1)], o)?)
}

fn split_d_even_series(o: usize) -> Result<FormalSeries> {
    Ok(&scaled(frac(1, 4), &[(1, 4, -2, 4), (1, 2, 0, 4)], o)?
        + &scaled(frac(3, 2), &[(1, 4, -2, 1), (1, 2, 0, 1)], o)?)
}

fn split_d_odd_series(o: usize) -> Result<FormalSeries> {
    ProductSpec::from_tuples(&[(1, 4, 0, 4), (1, 2, 0, 4)])
        .shifted(1)
        .eval(o)
}

fn fn1d(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    Ok(series_outcome(
        c,
        vec![(
            "split-D",
            theta_series(Theta0Variant::SplitD, o),
            split_d_series(o)?,
            1,
        )],
    ))
}

fn fn2b(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let rhs = split_b_series(o)?;
    Ok(series_outcome(
        c,
        vec![
            (
                "split-B",
                theta_series(Theta0Variant::SplitB, o),
                rhs.clone(),
                1,
            ),
            ("ind2-B", theta_series(Theta0Variant::Ind2B, o), rhs, 1),
        ],
    ))
}

fn fn_split_d(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let full = split_d_series(o)?;
    Ok(series_outcome(
        c,
        vec![
            ("odd", full.mask(2, 1), split_d_odd_series(o)?.mask(2, 1), 0),
            (
                "even",
                full.mask(2, 0),
                split_d_even_series(o)?.mask(2, 0),
                0,
            ),
        ],
    ))
}

fn fn_ind2_d(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let rhs = &scaled(frac(1, 2), &[(1, 2, -1, 2), (1, 1, 0, 2)], o)?
        + &scaled(frac(3, 2), &[(1, 4, -2, 1), (1, 2, 0, 1)], o)?;
    Ok(series_outcome(
        c,
        vec![("ind2-D", theta_series(Theta0Variant::Ind2D, o), rhs, 1)],
    ))
}

fn coro_cuspidal_k0(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let mut tally = Tally::default();
    let split_b = theta_series(Theta0Variant::SplitB, o);
    let split_d = theta_series(Theta0Variant::SplitD, o);
    tally.series("split-B", &split_b, &split_b_series(o)?, 1, o);
    tally.series(
        "split-D odd",
        &split_d.mask(2, 1),
        &split_d_odd_series(o)?.mask(2, 1),
        0,
        o,
    );
    tally.series(
        "split-D even",
        &split_d.mask(2, 0),
        &split_d_even_series(o)?.mask(2, 0),
        1,
        o,
    );
    let pairs: Vec<(u32, u32)> = pairs_up_to(c.sweep)
        .into_iter()
        .filter(|&(p, q)| p.abs_diff(q) <= 1 && p + q > 0)
        .collect();
    tally.cells(sweep(&pairs, |p, q| {
        Ok((
            cuspidal_counts(p, q).0,
            cuspidal_formula_k0(p, q)?.unwrap_or(u64::MAX),
        ))
    })?);
    Ok(Outcome {
        range: format!("order {o}; census for p+q ≤ {}", c.sweep),
        tally,
    })
}

fn coro_cuspidal_k1(c: &SuiteConfig) -> Result<Outcome> {
    sweep_outcome(
        format!("p+q ≤ {}", c.sweep),
        &pairs_up_to(c.sweep),
        |p, q| Ok((cuspidal_counts(p, q).1, cuspidal_formula_k1(p, q))),
    )
}

fn nilcoro_k0(c: &SuiteConfig, odd: bool) -> Result<Outcome> {
    let pairs: Vec<(u32, u32)> = pairs_up_to(c.sweep)
        .into_iter()
        .filter(|&(p, q)| p + q > 0 && ((p + q) % 2 == 1) == odd && !(p % 2 == 1 && q % 2 == 1))
        .collect();
    sweep_outcome(format!("p+q ≤ {}", c.sweep), &pairs, |p, q| {
        Ok((
            nilpotent_support_counts(p, q).0,
            nilpotent_formula_k0(p, q)?.unwrap_or(u64::MAX),
        ))
    })
}

fn nilcoro_k0_odd(c: &SuiteConfig) -> Result<Outcome> {
    nilcoro_k0(c, true)
}

fn nilcoro_k0_even(c: &SuiteConfig) -> Result<Outcome> {
    nilcoro_k0(c, false)
}

fn nilcoro_k1(c: &SuiteConfig) -> Result<Outcome> {
    sweep_outcome(
        format!("p+q ≤ {}", c.sweep),
        &pairs_up_to(c.sweep),
        |p, q| Ok((nilpotent_support_counts(p, q).1, nilpotent_formula_k1(p, q))),
    )
}

fn diii_k0_closure(c: &SuiteConfig) -> Result<Outcome> {
    let nmax = c.sweep / 2;
    let rows: Vec<_> = (0..=nmax)
        .into_par_iter()
        .map(|n| {
            (
                format!("n={n}"),
                census_diii(n).0.total,
                enum_lambda(n).len() as u64,
            )
        })
        .collect();
    let mut tally = Tally::default();
    tally.cells(rows);
    Ok(Outcome {
        range: format!("n ≤ {nmax}"),
        tally,
    })
}

fn diii_k1_bijection(c: &SuiteConfig) -> Result<Outcome> {
    let nmax = c.sweep / 2;
    let mut tally = Tally::default();
    for n in 0..=nmax {
        let census = census_diii(n).1.total;
        if n % 2 == 1 {
            tally.cell(|| format!("n={n}"), census, 0);
            continue;
        }
        let evens: Vec<_> = enum_lambda(n)
            .into_iter()
            .filter(|d| d.all_parts_even())
            .collect();
        let mut images = Vec::with_capacity(evens.len());
        for d in &evens {
            let bp = diii_kappa1_bijection(d)?;
            tally.cell(
                || format!("n={n} inverse of {bp}"),
                diii_kappa1_inverse(&bp).to_string(),
                d.to_string(),
            );
            images.push(bp.to_string());
        }
        images.sort();
        images.dedup();
        let target = count_bipartitions(i64::from(n / 2));
        tally.cell(
            || format!("n={n} distinct images"),
            images.len() as u64,
            target,
        );
        tally.cell(|| format!("n={n} census"), census, target);
    }
    Ok(Outcome {
        range: format!("n ≤ {nmax}"),
        tally,
    })
}

fn pnt_formula(c: &SuiteConfig) -> Result<Outcome> {
    let nmax = c.order as u32;
    let rows: Vec<_> = (0..=nmax)
        .into_par_iter()
        .flat_map_iter(|n| {
            (-5i32..=5).map(move |t| {
                let x = Rational64::new(
                    i64::from(n) - (2 * i64::from(t) * i64::from(t) - i64::from(t)),
                    4,
                );
                (
                    format!("N={n} t={t}"),
                    enum_distinct_odd_balanced(n, t).len() as u64,
                    count_partitions_ratio(x),
                )
            })
        })
        .collect();
    let mut tally = Tally::default();
    tally.cells(rows);
    Ok(Outcome {
        range: format!("N ≤ {nmax}, |t| ≤ 5"),
        tally,
    })
}

fn jacobi_t(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let mut tally = Tally::default();
    for t in -3i64..=3 {
        let mut lhs = vec![rat(0); o + 1];
        let bound = o as i64;
        for t2 in -bound..=bound {
            let t1 = t2 + t;
            let e = 2 * t1 * t1 - t1 + 2 * t2 * t2 - t2;
            if e <= bound {
                lhs[e as usize] += rat(1);
            }
        }
        let lhs = FormalSeries::from_coeffs(lhs, o);
        let rhs = ProductSpec::from_tuples(&[(-1, 4, 0, 1), (1, 2, 0, 1)])
            .shifted((t * t) as usize)
            .eval(o)?;
        tally.series(&format!("t={t}"), &lhs, &rhs, 0, o);
    }
    Ok(Outcome {
        range: format!("order {o}, |t| ≤ 3"),
        tally,
    })
}

fn k1_series_rewrite(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let lhs = &prod(&[(-1, 4, 0, -2)], o)? * &prod(&[(1, 2, 0, 1)], o)?;
    let rhs = prod(&[(-1, 4, 0, -1), (-1, 2, 0, -1)], o)?;
    Ok(series_outcome(c, vec![("", lhs, rhs, 0)]))
}

fn euler_smoke(c: &SuiteConfig) -> Result<Outcome> {
    let o = c.order;
    let lhs = prod(&[(-1, 1, 0, -1)], o)?;
    let rhs = from_u64(partition_numbers(o), o);
    Ok(series_outcome(c, vec![("", lhs, rhs, 0)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            order: 16,
            sweep: 10,
            k1_sweep: 8,
        }
    }

    fn run(id: &str, config: &SuiteConfig) -> IdentityCheck {
        let r = run_suite(&Selection::Ids(vec![id.into()]), config).unwrap();
        r.checks.into_iter().next().unwrap()
    }

    #[test]
    fn catalogue_is_complete_and_unique() {
        let ids = check_ids();
        assert!(ids.len() >= 30);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
    }

    #[test]
    fn unknown_id_is_an_error() {
        let err = run_suite(&Selection::Ids(vec!["nope".into()]), &small()).unwrap_err();
        assert_eq!(err, Error::UnknownCheck("nope".into()));
    }

    #[test]
    fn low_order_is_rejected() {
        assert!(run_suite(&Selection::All, &SuiteConfig::with_order(5)).is_err());
    }

    #[test]
    fn euler_smoke_passes() {
        let c = run("euler-smoke", &SuiteConfig::with_order(60));
        assert_eq!(c.status, Status::Pass);
        assert_eq!(c.cells, 61);
    }

    #[test]
    fn whole_suite_passes_small() {
        let r = run_suite(&Selection::All, &small()).unwrap();
        let failures: Vec<String> = r
            .failures()
            .map(|c| format!("{} {:?}", c.id, c.witness))
            .collect();
        assert!(failures.is_empty(), "{failures:?}");
        assert_eq!(r.checks.len(), check_ids().len());
    }

    #[test]
    fn number1_cell_count() {
        let c = run(
            "number1-k0",
            &SuiteConfig {
                sweep: 10,
                ..small()
            },
        );
        assert_eq!(c.cells, 66);
    }

    #[test]
    fn witness_on_disagreement() {
        let mut t = Tally::default();
        t.cell(|| "a".into(), 1, 1);
        t.cell(|| "b".into(), 1, 2);
        t.cell(|| "c".into(), 3, 4);
        assert_eq!(t.cells, 3);
        assert_eq!(t.witness.unwrap().location, "b");
    }

    #[test]
    fn selection_parsing() {
        assert_eq!(Selection::parse("all"), Selection::All);
        assert_eq!(
            Selection::parse("tb1, psi1-a"),
            Selection::Ids(vec!["tb1".into(), "psi1-a".into()])
        );
    }

    #[test]
    fn report_is_deterministic() {
        let sel = Selection::Ids(vec!["psi1-a".into(), "tb1".into(), "jacobi-t".into()]);
        let a = run_suite(&sel, &small()).unwrap();
        let b = run_suite(&sel, &small()).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.checks.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(),
            ["psi1-a", "tb1", "jacobi-t"]
        );
    }
}
