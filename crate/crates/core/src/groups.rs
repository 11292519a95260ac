//! Cardinalities attached to component groups of centralizers.
//!
//! Groups are described only by their kind and the rank of their 2-group
//! quotient; what downstream code needs is how many irreducible
//! representations of each central character they carry and of what
//! dimension.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{mu_t, SigmaBReading, SigmaClass, SignedYoungDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    ElementaryAbelian,
    CentralExtensionByZ2,
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub kind: GroupKind,
    pub rank: u32,
    pub label: String,
}

impl GroupDescriptor {
    pub fn trivial() -> Self {
        Self {
            kind: GroupKind::Trivial,
            rank: 0,
            label: "1".into(),
        }
    }

    pub fn elementary(rank: u32) -> Self {
        if rank == 0 {
            return Self::trivial();
        }
        Self {
            kind: GroupKind::ElementaryAbelian,
            rank,
            label: format!("(Z/2)^{rank}"),
        }
    }

    pub fn order(&self) -> u64 {
        match self.kind {
            GroupKind::Trivial => 1,
            GroupKind::ElementaryAbelian => 1 << self.rank,
            GroupKind::CentralExtensionByZ2 => 1 << (self.rank + 1),
        }
    }
}

/// Number and common dimension of the κ₁-irreducibles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Kappa1Data {
    pub count: u64,
    pub dim: Option<u64>,
}

impl Kappa1Data {
    pub fn none() -> Self {
        Self {
            count: 0,
            dim: None,
        }
    }

    pub fn new(count: u64, dim: u64) -> Self {
        Self {
            count,
            dim: Some(dim),
        }
    }
}

/// Parity class of a BDI pair `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairParity {
    /// `p + q` odd.
    NOdd,
    /// `p`, `q` both odd.
    NEvenOuter,
    /// `p`, `q` both even.
    NEvenInner,
}

impl PairParity {
    pub fn of(p: u32, q: u32) -> Self {
        match (p % 2, q % 2) {
            (1, 1) => PairParity::NEvenOuter,
            (0, 0) => PairParity::NEvenInner,
            _ => PairParity::NOdd,
        }
    }
}

impl fmt::Display for PairParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairParity::NOdd => "N odd",
            PairParity::NEvenOuter => "N even, outer",
            PairParity::NEvenInner => "N even, inner",
        })
    }
}

/// `A_{K̄}(x_λ) ≅ (Z/2)^{r_λ}`.
pub fn component_group_bar_k(d: &SignedYoungDiagram) -> Result<GroupDescriptor> {
    Ok(GroupDescriptor::elementary(d.classify()?.r))
}

/// κ₁-irreducibles of `A_K(x_λ)` for BDI.
pub fn kappa1_data_bdi(d: &SignedYoungDiagram, parity: PairParity) -> Result<Kappa1Data> {
    let c = d.classify()?;
    let (p, q) = d.signature();
    if PairParity::of(p, q) != parity {
        return Err(Error::InconsistentParity { parity, p, q });
    }
    let repeated_odd = d
        .groups()
        .iter()
        .any(|g| g.length % 2 == 1 && (g.plus >= 2 || g.minus >= 2));
    if repeated_odd {
        return Ok(Kappa1Data::none());
    }
    let r = c.r;
    let pow = |e: u32| 1u64 << e;
    Ok(match (parity, c.class) {
        (PairParity::NOdd, SigmaClass::Sigma1) => Kappa1Data::new(2, pow((r - 1) / 2)),
        (PairParity::NOdd, _) => Kappa1Data::new(1, pow(r / 2)),
        (PairParity::NEvenOuter, _) => Kappa1Data::new(1, pow(r / 2)),
        (PairParity::NEvenInner, SigmaClass::Sigma1) => Kappa1Data::new(4, pow((r - 2) / 2)),
        (PairParity::NEvenInner, SigmaClass::Sigma2) => Kappa1Data::new(2, pow((r - 1) / 2)),
        (PairParity::NEvenInner, SigmaClass::Sigma3) => Kappa1Data::new(1, pow(r / 2)),
    })
}

/// κ₁-irreducibles for DIII: one of dimension 1 exactly when every part is
/// even. The empty diagram counts as all-even.
pub fn kappa1_data_diii(d: &SignedYoungDiagram) -> Result<Kappa1Data> {
    if !d.is_in_lambda() {
        return Err(Error::NotInLambda(d.to_string()));
    }
    Ok(if d.all_parts_even() {
        Kappa1Data::new(1, 1)
    } else {
        Kappa1Data::none()
    })
}

/// 2 for odd `t`; for even `t`, 4 when `m ≡ t/2 (mod 2)` and 1 otherwise.
pub fn eta(m: u32, t: i32) -> u32 {
    if t % 2 != 0 {
        return 2;
    }
    if (i64::from(m) - i64::from(t / 2)).rem_euclid(2) == 0 {
        4
    } else {
        1
    }
}

/// The group `I_{m,t}` and its κ₁-irreducibles, for `|t| ≥ 2`. At `m = 0`
/// this is the component group of the staircase `μ_t`.
pub fn imt_descriptor(m: u32, t: i32) -> Result<(GroupDescriptor, Kappa1Data)> {
    let at = t.unsigned_abs();
    if at < 2 {
        return Err(Error::OutOfRange {
            what: "t",
            detail: format!("|t| = {at} < 2; split pairs have no I_(m,t)"),
        });
    }
    if m == 0 {
        let mu = mu_t(t);
        let (p, q) = mu.signature();
        let data = kappa1_data_bdi(&mu, PairParity::of(p, q))?;
        let r = mu.classify()?.r;
        let group = GroupDescriptor {
            kind: GroupKind::CentralExtensionByZ2,
            rank: r,
            label: format!("A_K(mu_{t})"),
        };
        return Ok((group, data));
    }
    let group = GroupDescriptor {
        kind: GroupKind::CentralExtensionByZ2,
        rank: at - 1 + m - 1,
        label: if m == 1 {
            format!("Gamma_{at}")
        } else {
            format!("Gamma_{at} x (Z/2)^{}", m - 1)
        },
    };
    let data = if at % 2 == 1 {
        Kappa1Data::new(1 << (m - 1), 1 << ((at - 1) / 2))
    } else {
        Kappa1Data::new(1 << m, 1 << ((at - 2) / 2))
    };
    Ok((group, data))
}

/// How the braid action permutes the κ₁-irreducibles of `I_{m,t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilizerType {
    /// One orbit, stabilizer `S_m`.
    OneOrbitSm,
    /// One orbit, stabilizer `S_m ⋊ τ`.
    OneOrbitSmTau,
    /// Two orbits, each with stabilizer `S_m ⋊ τ`.
    TwoOrbitsSmTau,
}

pub fn stabilizer_type(m: u32, t: i32) -> Result<StabilizerType> {
    if m == 0 || t.unsigned_abs() < 2 {
        return Err(Error::OutOfRange {
            what: "(m, t)",
            detail: format!("({m}, {t}) needs m ≥ 1 and |t| ≥ 2"),
        });
    }
    Ok(match eta(m, t) {
        1 => StabilizerType::OneOrbitSm,
        2 => StabilizerType::OneOrbitSmTau,
        _ => StabilizerType::TwoOrbitsSmTau,
    })
}

fn require_sigma_b(d: &SignedYoungDiagram) -> Result<()> {
    if d.is_sigma_b(SigmaBReading::Standard) {
        Ok(())
    } else {
        Err(Error::NotRichardson(d.to_string()))
    }
}

/// Ω_μ as 1-based group indices of `(2μ₁+1)^{m₁}_{ε₁} ⋯ (2μ_s+1)^{m_s}_{ε_s}`.
///
/// `j ∈ Ω` when `m_j + ⋯ + m_s` is even and, for `j ≥ 2`, either
/// `μ_{j-1} ≥ μ_j + 2` or `ε_{j-1} = ε_j`.
pub fn omega_set(d: &SignedYoungDiagram) -> Result<Vec<usize>> {
    require_sigma_b(d)?;
    let g: Vec<(u32, u32, bool)> = d
        .groups()
        .iter()
        .map(|g| ((g.length - 1) / 2, g.rows(), g.plus > 0))
        .collect();
    let mut omega = Vec::new();
    for j in 1..=g.len() {
        let tail: u32 = g[j - 1..].iter().map(|x| x.1).sum();
        if tail % 2 == 1 {
            continue;
        }
        if j >= 2 {
            let (mu0, _, e0) = g[j - 2];
            let (mu1, _, e1) = g[j - 1];
            if !(mu0 >= mu1 + 2 || e0 == e1) {
                continue;
            }
        }
        omega.push(j);
    }
    Ok(omega)
}

/// `l_μ = |Ω_μ|`.
pub fn l_of(d: &SignedYoungDiagram) -> Result<u32> {
    Ok(omega_set(d)?.len() as u32)
}

/// `|Π_{O_μ}|` for `μ ∈ Σ_b`, with the parity of `N` read from `μ`.
pub fn pi_size(d: &SignedYoungDiagram) -> Result<u64> {
    let l = l_of(d)? as i64;
    let class = d.classify()?.class;
    let n_odd = d.size() % 2 == 1;
    let e = match (n_odd, class) {
        (true, SigmaClass::Sigma1) => l - 1,
        (true, _) => l,
        (false, SigmaClass::Sigma1) => l - 2,
        (false, _) => l - 1,
    };
    if e < 0 {
        return Err(Error::OutOfRange {
            what: "pi_size exponent",
            detail: format!("{e} for {d} with l = {l}"),
        });
    }
    Ok(1 << e)
}

/// Sign characters `χ` on `δ₁, …, δ_{s-1}` with `χ(δ_r) = 1` whenever
/// `r + 1 ∉ Ω`, for `μ ∈ Σ_{b,2}`.
pub fn pi_characters(d: &SignedYoungDiagram) -> Result<Vec<Vec<i8>>> {
    let omega = omega_set(d)?;
    if d.classify()?.class != SigmaClass::Sigma2 {
        return Err(Error::OutOfRange {
            what: "diagram class",
            detail: format!("{d} is not in Σ_b,2"),
        });
    }
    let s = d.groups().len();
    let mut out = Vec::new();
    for bits in 0u64..(1 << s.saturating_sub(1)) {
        let chi: Vec<i8> = (0..s - 1)
            .map(|i| if bits >> i & 1 == 1 { -1 } else { 1 })
            .collect();
        let ok = chi
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 1 || omega.contains(&(i + 2)));
        if ok {
            out.push(chi);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> SignedYoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn bar_k_groups() {
        assert_eq!(component_group_bar_k(&d("1+^3 1-^2")).unwrap().rank, 0);
        assert_eq!(
            component_group_bar_k(&d("3+ 1+ 1-")).unwrap(),
            GroupDescriptor::elementary(1)
        );
        assert_eq!(
            component_group_bar_k(&SignedYoungDiagram::empty())
                .unwrap()
                .kind,
            GroupKind::Trivial
        );
    }

    #[test]
    fn kappa1_bdi_examples() {
        assert_eq!(
            kappa1_data_bdi(&d("3+ 1+ 1-"), PairParity::NOdd).unwrap(),
            Kappa1Data::new(2, 1)
        );
        assert_eq!(
            kappa1_data_bdi(&d("1+^3 1-^2"), PairParity::NOdd).unwrap(),
            Kappa1Data::none()
        );
        assert_eq!(
            kappa1_data_bdi(&d("2+ 2- 1+"), PairParity::NOdd).unwrap(),
            Kappa1Data::new(1, 1)
        );
        assert!(matches!(
            kappa1_data_bdi(&d("5+"), PairParity::NEvenInner),
            Err(Error::InconsistentParity { .. })
        ));
    }

    #[test]
    fn kappa1_diii_examples() {
        assert_eq!(
            kappa1_data_diii(&d("2+^2 2-^2")).unwrap(),
            Kappa1Data::new(1, 1)
        );
        assert_eq!(kappa1_data_diii(&d("3+ 3-")).unwrap(), Kappa1Data::none());
        assert_eq!(
            kappa1_data_diii(&SignedYoungDiagram::empty()).unwrap(),
            Kappa1Data::new(1, 1)
        );
        assert!(kappa1_data_diii(&d("3+")).is_err());
    }

    #[test]
    fn eta_values() {
        for m in 0..5 {
            assert_eq!(eta(m, 1), 2);
            assert_eq!(eta(m, -1), 2);
        }
        assert_eq!(eta(1, 2), 4);
        assert_eq!(eta(2, 2), 1);
        assert_eq!(eta(0, 2), 1);
        assert_eq!(eta(0, 0), 4);
        assert_eq!(eta(1, -2), 4);
        assert_eq!(eta(0, 4), 4);
    }

    #[test]
    fn imt_examples() {
        let (_, k) = imt_descriptor(1, 3).unwrap();
        assert_eq!(k, Kappa1Data::new(1, 2));
        let (_, k) = imt_descriptor(2, 2).unwrap();
        assert_eq!(k, Kappa1Data::new(4, 1));
        let (_, k) = imt_descriptor(0, 2).unwrap();
        assert_eq!(k.count, u64::from(eta(0, 2)));
        assert!(imt_descriptor(3, 1).is_err());
    }

    #[test]
    fn staircase_counts_match_eta() {
        for t in 2..=6 {
            for s in [t, -t] {
                assert_eq!(
                    imt_descriptor(0, s).unwrap().1.count,
                    u64::from(eta(0, s)),
                    "t = {s}"
                );
            }
        }
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer_type(2, 2).unwrap(), StabilizerType::OneOrbitSm);
        assert_eq!(
            stabilizer_type(5, 3).unwrap(),
            StabilizerType::OneOrbitSmTau
        );
        assert_eq!(
            stabilizer_type(1, 2).unwrap(),
            StabilizerType::TwoOrbitsSmTau
        );
        assert!(stabilizer_type(0, 2).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_set(&d("5+")).unwrap(), Vec::<usize>::new());
        assert_eq!(omega_set(&d("3- 1+^2")).unwrap(), Vec::<usize>::new());
        assert_eq!(omega_set(&d("3- 1-^2")).unwrap(), vec![2]);
        assert!(matches!(
            omega_set(&d("3+ 1+ 1-")),
            Err(Error::NotRichardson(_))
        ));
    }

    #[test]
    fn pi_size_examples() {
        assert_eq!(pi_size(&d("5+")).unwrap(), 1);
        // a = b = 1, so this one lies in Σ_b,1
        assert_eq!(pi_size(&d("3- 1-^2")).unwrap(), 1);
        assert_eq!(pi_size(&d("5+ 1+^2")).unwrap(), 2);
        let two = d("3+ 1-");
        assert!(two.is_sigma_b(SigmaBReading::Standard));
        assert_eq!(l_of(&two).unwrap(), 1);
        assert_eq!(pi_size(&two).unwrap(), 1);
        assert_eq!(pi_characters(&d("5+ 1+^2")).unwrap().len(), 2);
        assert!(pi_characters(&d("3- 1-^2")).is_err());
    }
}
