//! The involution group Σ generated by the σ_ψ (ψ compact simple) and θ, its
//! parity action on root spaces, codimensions of the fixed cycles and c(X).

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::dynkin::{classify_cartan, DynkinType};
use crate::error::{Error, Result};
use crate::rootsys::{cartan_from_gram, HermitianFamily, Root, RootSystem};

/// σ = θ^theta ∘ Π_{ψ∈S} σ_ψ. `compact_subset` holds 0-based node indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SigmaElement {
    pub compact_subset: Vec<usize>,
    pub theta: bool,
}

impl SigmaElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn theta() -> Self {
        SigmaElement {
            compact_subset: Vec::new(),
            theta: true,
        }
    }

    pub fn psi(node: usize) -> Self {
        SigmaElement {
            compact_subset: vec![node],
            theta: false,
        }
    }

    pub fn new(mut compact_subset: Vec<usize>, theta: bool) -> Self {
        compact_subset.sort_unstable();
        compact_subset.dedup();
        SigmaElement {
            compact_subset,
            theta,
        }
    }

    /// Group law: symmetric difference and XOR.
    pub fn compose(&self, other: &SigmaElement) -> SigmaElement {
        let mut s: Vec<usize> = self
            .compact_subset
            .iter()
            .filter(|x| !other.compact_subset.contains(x))
            .chain(
                other
                    .compact_subset
                    .iter()
                    .filter(|x| !self.compact_subset.contains(x)),
            )
            .copied()
            .collect();
        s.sort_unstable();
        SigmaElement {
            compact_subset: s,
            theta: self.theta ^ other.theta,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.compact_subset.is_empty() && !self.theta
    }

    pub fn check(&self, rs: &RootSystem) -> Result<()> {
        for &i in &self.compact_subset {
            if i == rs.nc_index() {
                return Err(Error::NoncompactInSigma { node: i + 1 });
            }
            if i >= rs.rank() {
                return Err(Error::DimensionMismatch {
                    expected: rs.rank(),
                    found: i + 1,
                });
            }
        }
        Ok(())
    }

    /// True when σ acts by −1 on the root space of `r`.
    pub fn is_odd_on(&self, rs: &RootSystem, r: &Root) -> bool {
        let mut p: i64 = self.compact_subset.iter().map(|&i| r.0[i]).sum();
        if self.theta {
            p += r.0[rs.nc_index()];
        }
        p.rem_euclid(2) == 1
    }

    /// Parses `"psi_3,theta"`, `"psi_2,psi_5"`, `"theta"` or `"id"`.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<SigmaElement> {
        let err = |reason: String| Error::Parse {
            what: "involution",
            input: s.to_string(),
            reason,
        };
        let mut nodes = Vec::new();
        let mut theta = false;
        for tok in s
            .split([',', '.', '*', ' '])
            .map(str::trim)
            .filter(|t| !t.is_empty())
        {
            let t = tok.to_ascii_lowercase();
            if t == "theta" || tok == "θ" {
                theta = !theta;
            } else if t == "id" || t == "1" {
            } else {
                let num = t
                    .strip_prefix("psi_")
                    .or_else(|| t.strip_prefix("psi"))
                    .or_else(|| tok.strip_prefix("ψ"))
                    .ok_or_else(|| err(format!("unknown generator {tok:?}")))?;
                let k: usize = num
                    .trim_start_matches('_')
                    .parse()
                    .map_err(|_| err(format!("bad node index in {tok:?}")))?;
                if k == 0 || k > rs.rank() {
                    return Err(err(format!("node {k} out of range 1..={}", rs.rank())));
                }
                if let Some(p) = nodes.iter().position(|&x| x == k - 1) {
                    nodes.remove(p);
                } else {
                    nodes.push(k - 1);
                }
            }
        }
        let sigma = SigmaElement::new(nodes, theta);
        sigma.check(rs)?;
        Ok(sigma)
    }

    pub fn node_names(&self, rs: &RootSystem) -> Vec<String> {
        self.compact_subset
            .iter()
            .map(|&i| rs.node_name(i))
            .collect()
    }

    pub fn display(&self, rs: &RootSystem) -> String {
        let mut parts = self.node_names(rs);
        if self.theta {
            parts.push("theta".into());
        }
        if parts.is_empty() {
            "id".into()
        } else {
            parts.join(",")
        }
    }
}

/// Every element of Σ, ordered by (S lexicographic, θ-bit).
pub fn all_sigma(rs: &RootSystem) -> Vec<SigmaElement> {
    let compact = rs.compact_nodes();
    let mut out = Vec::with_capacity(1 << (compact.len() + 1));
    for mask in 0u32..(1 << compact.len()) {
        let s: Vec<usize> = compact
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        for theta in [false, true] {
            out.push(SigmaElement {
                compact_subset: s.clone(),
                theta,
            });
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimReport {
    pub sigma: SigmaElement,
    pub codim: usize,
    pub fixed_noncompact: usize,
    pub fixed_compact: usize,
}

/// Complex codimension of X(σ) ⊂ X: the number of positive noncompact roots
/// on which σ is odd.
pub fn codim(rs: &RootSystem, sigma: &SigmaElement) -> Result<CodimReport> {
    sigma.check(rs)?;
    let nc = rs.noncompact_positive();
    let odd = nc.iter().filter(|r| sigma.is_odd_on(rs, r)).count();
    let fixed_compact = rs
        .compact_positive()
        .iter()
        .filter(|r| !sigma.is_odd_on(rs, r))
        .count();
    Ok(CodimReport {
        sigma: sigma.clone(),
        codim: odd,
        fixed_noncompact: nc.len() - odd,
        fixed_compact,
    })
}

/// Codimensions of every element of Σ, in [`all_sigma`] order.
pub fn codim_all(rs: &RootSystem) -> Vec<CodimReport> {
    all_sigma(rs)
        .par_iter()
        .map(|s| codim(rs, s).expect("generated elements are valid"))
        .collect()
}

/// Least codimension over Σ ignoring the values 0 and #Φ⁺_n; ties go to the
/// first element in [`all_sigma`] order.
pub fn min_codim_over_sigma(rs: &RootSystem) -> Option<CodimReport> {
    let top = rs.noncompact_positive().len();
    codim_all(rs)
        .into_iter()
        .filter(|c| c.codim != 0 && c.codim != top)
        .min_by(|a, b| a.codim.cmp(&b.codim).then_with(|| a.sigma.cmp(&b.sigma)))
}

/// Where the minimal cycle comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleSource {
    Sigma(SigmaElement),
    /// The outer involution of SO₀(2, 2m−2) with fixed group SO₀(2, 2m−3).
    OuterTau,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleMinimum {
    pub c: usize,
    pub source: CycleSource,
}

impl CycleMinimum {
    pub fn source_label(&self, rs: &RootSystem) -> String {
        match &self.source {
            CycleSource::Sigma(s) => s.display(rs),
            CycleSource::OuterTau => "tau".into(),
        }
    }
}

/// c(X): the Σ-minimum, replaced by 1 for so(2,p) with p even.
pub fn c_of_x(rs: &RootSystem) -> Option<CycleMinimum> {
    if let HermitianFamily::BDI { p } = rs.family() {
        if p % 2 == 0 {
            return Some(CycleMinimum {
                c: 1,
                source: CycleSource::OuterTau,
            });
        }
    }
    min_codim_over_sigma(rs).map(|r| CycleMinimum {
        c: r.codim,
        source: CycleSource::Sigma(r.sigma),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSubsystem {
    /// Roots on which σ acts by +1, positive and negative.
    pub roots: Vec<Root>,
    pub compact_positive: usize,
    pub noncompact_positive: usize,
    /// Simple factors of the semisimple part, sorted.
    pub types: Vec<DynkinType>,
}

/// The root system of G(σ).
pub fn fixed_subsystem(rs: &RootSystem, sigma: &SigmaElement) -> Result<FixedSubsystem> {
    sigma.check(rs)?;
    let nc = rs.nc_index();
    let mut roots: Vec<Root> = rs
        .roots()
        .into_iter()
        .filter(|r| !sigma.is_odd_on(rs, r))
        .collect();
    roots.sort();
    let positive: Vec<&Root> = roots.iter().filter(|r| r.is_positive()).collect();
    let compact_positive = positive.iter().filter(|r| r.0[nc] == 0).count();
    let simple: Vec<&Root> = positive
        .iter()
        .filter(|a| {
            !positive.iter().any(|b| {
                let d = Root(a.sub(b));
                *b != **a && d.is_positive() && positive.contains(&&d)
            })
        })
        .copied()
        .collect();
    let gram: Vec<Vec<_>> = simple
        .iter()
        .map(|a| simple.iter().map(|b| rs.inner(&a.0, &b.0)).collect())
        .collect();
    let mut types: Vec<DynkinType> = classify_cartan(&cartan_from_gram(&gram))?
        .into_iter()
        .map(|c| c.ty)
        .collect();
    types.sort();
    Ok(FixedSubsystem {
        compact_positive,
        noncompact_positive: positive.len() - compact_positive,
        roots,
        types,
    })
}

pub fn types_display(types: &[DynkinType]) -> String {
    if types.is_empty() {
        return "0".into();
    }
    types
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

/// JSON form of a codimension report.
#[derive(Clone, Debug, Serialize)]
pub struct CodimRecord {
    pub sigma: SigmaRecord,
    pub codim: usize,
    pub fixed_counts: FixedCounts,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaRecord {
    #[serde(rename = "S")]
    pub s: Vec<String>,
    pub theta: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedCounts {
    pub compact: usize,
    pub noncompact: usize,
}

pub fn codim_record(rs: &RootSystem, r: &CodimReport) -> CodimRecord {
    CodimRecord {
        sigma: SigmaRecord {
            s: r.sigma.node_names(rs),
            theta: r.sigma.theta,
        },
        codim: r.codim,
        fixed_counts: FixedCounts {
            compact: r.fixed_compact,
            noncompact: r.fixed_noncompact,
        },
    }
}

/// Markdown row `| type | g0 | σ | c(X) |`.
pub fn c_of_x_row(rs: &RootSystem) -> String {
    let fam = rs.family();
    match c_of_x(rs) {
        Some(m) => format!(
            "| {} | {} | {} | {} |",
            fam.type_label(),
            fam,
            m.source_label(rs),
            m.c
        ),
        None => format!("| {} | {} | - | - |", fam.type_label(), fam),
    }
}

impl fmt::Display for CodimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "codim {} (fixed noncompact {}, fixed compact {})",
            self.codim, self.fixed_noncompact, self.fixed_compact
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build;

    fn fam(s: &str) -> RootSystem {
        build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn exceptional_codimensions() {
        let e6 = fam("e6-3");
        let s = SigmaElement::parse(&e6, "psi_3").unwrap();
        assert_eq!(codim(&e6, &s).unwrap().codim, 10);
        let s = SigmaElement::parse(&e6, "psi_3,theta").unwrap();
        assert_eq!(codim(&e6, &s).unwrap().codim, 6);
        assert_eq!(min_codim_over_sigma(&e6).unwrap().codim, 6);
        let e7 = fam("e7-7");
        let s = SigmaElement::parse(&e7, "theta,psi_6").unwrap();
        assert_eq!(codim(&e7, &s).unwrap().codim, 11);
    }

    #[test]
    fn noncompact_node_is_rejected() {
        let e6 = fam("e6-3");
        assert_eq!(
            SigmaElement::parse(&e6, "psi_1").unwrap_err(),
            Error::NoncompactInSigma { node: 1 }
        );
    }

    #[test]
    fn theta_negates_p() {
        let rs = fam("su(2,5)");
        assert_eq!(codim(&rs, &SigmaElement::theta()).unwrap().codim, 10);
    }

    #[test]
    fn ci_first_node() {
        for n in 3..7 {
            let rs = fam(&format!("sp({n})"));
            let f = fixed_subsystem(&rs, &SigmaElement::psi(0)).unwrap();
            assert_eq!(f.noncompact_positive, n * (n + 1) / 2 - (n - 1));
            assert_eq!(codim(&rs, &SigmaElement::psi(0)).unwrap().codim, n - 1);
        }
    }

    #[test]
    fn group_law() {
        let a = SigmaElement::new(vec![1, 3], true);
        let b = SigmaElement::new(vec![3, 4], true);
        assert_eq!(a.compose(&b), SigmaElement::new(vec![1, 4], false));
        assert!(a.compose(&a).is_identity());
    }

    #[test]
    fn bdi_even_uses_tau() {
        let rs = fam("so(2,6)");
        assert_eq!(c_of_x(&rs).unwrap().source, CycleSource::OuterTau);
        assert_eq!(min_codim_over_sigma(&rs).unwrap().codim, 2);
        let rs = fam("so(2,7)");
        assert_eq!(c_of_x(&rs).unwrap().c, 1);
    }
}
