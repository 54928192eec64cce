//! The Levi factor `l_x`: its strongly orthogonal noncompact roots, the
//! Hermitian simple factors, their compact duals, Euler characteristics and
//! Poincaré polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::dynkin::{identify_connected, weyl_ratio, CompactDual, DynkinType};
use crate::error::{Error, Result};
use crate::parabolic::ParabolicClass;
use crate::poset::Poset;
use crate::rootsys::{cartan_from_gram, DominantVector, Root, RootSystem};

/// One Hermitian simple factor of `l_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianFactor {
    /// The minimal noncompact root generating the factor.
    pub alpha: Root,
    /// Compact simple roots of `g` completing α to a base of the factor.
    pub compact_simple: Vec<usize>,
    /// All roots of the factor, positive and negative.
    pub roots: Vec<Root>,
    pub ty: DynkinType,
    /// Bourbaki position of α, canonical under diagram automorphisms.
    pub node: usize,
    pub dual: CompactDual,
}

impl HermitianFactor {
    /// Base of the factor: α followed by the compact simple roots.
    pub fn base(&self, rank: usize) -> Vec<Vec<i64>> {
        let mut b = vec![self.alpha.0.clone()];
        for &psi in &self.compact_simple {
            let mut e = vec![0; rank];
            e[psi] = 1;
            b.push(e);
        }
        b
    }

    /// Coordinates of a factor root in [`HermitianFactor::base`].
    pub fn coordinates(&self, nc: usize, r: &Root) -> Vec<i64> {
        let k = r.0[nc];
        let mut c = vec![k];
        for &psi in &self.compact_simple {
            c.push(r.0[psi] - k * self.alpha.0[psi]);
        }
        c
    }

    /// Positive noncompact roots of the factor, in factor coordinates.
    pub fn noncompact_positive(&self, nc: usize) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = self
            .roots
            .iter()
            .filter(|r| r.0[nc] == 1)
            .map(|r| self.coordinates(nc, r))
            .collect();
        v.sort_by(|a, b| {
            a.iter()
                .sum::<i64>()
                .cmp(&b.iter().sum::<i64>())
                .then_with(|| a.cmp(b))
        });
        v
    }

    pub fn dim_c(&self, nc: usize) -> usize {
        self.roots.iter().filter(|r| r.0[nc] == 1).count()
    }

    /// Betti numbers `b_0, b_2, …` of the compact dual, from the sizes of
    /// order ideals of the factor's noncompact poset.
    pub fn poincare(&self, nc: usize) -> Vec<u128> {
        let nodes = self.noncompact_positive(nc);
        let poset = Poset::new(nodes.len(), |i, j| {
            nodes[i].iter().zip(&nodes[j]).all(|(a, b)| a <= b)
        });
        poset.ideal_size_counts()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviFactorization {
    /// Roots of `l_x`: those orthogonal to λ.
    pub roots: Vec<Root>,
    /// Minimal positive noncompact roots of `l_x`.
    pub strongly_orthogonal: Vec<Root>,
    pub factors: Vec<HermitianFactor>,
    /// Roots of `l_x` outside every Hermitian factor; all compact.
    pub compact_part: Vec<Root>,
}

/// Levi factor of the class's witness.
pub fn levi_factorize(rs: &RootSystem, cls: &ParabolicClass) -> Result<LeviFactorization> {
    levi_of_weight(rs, &cls.witness)
}

pub fn levi_of_weight(rs: &RootSystem, lambda: &DominantVector) -> Result<LeviFactorization> {
    let nc = rs.nc_index();
    let mut roots = Vec::new();
    for r in rs.roots() {
        if rs.pairing(lambda, &r)?.is_zero() {
            roots.push(r);
        }
    }
    roots.sort();
    let ncz: Vec<&Root> = roots.iter().filter(|r| r.0[nc] == 1).collect();
    let geq = |b: &Root, a: &Root| b.sub(a).iter().all(|&c| c >= 0);
    let minimal: Vec<Root> = ncz
        .iter()
        .filter(|&&a| !ncz.iter().any(|&b| b != a && geq(a, b)))
        .map(|&a| a.clone())
        .collect();
    if !is_strongly_orthogonal(rs, &minimal) {
        return Err(Error::Inconsistent(
            "minimal noncompact roots of l_x are not strongly orthogonal".into(),
        ));
    }

    let mut factors = Vec::new();
    let mut covered = vec![false; roots.len()];
    for alpha in &minimal {
        let mut compact_simple: Vec<usize> = Vec::new();
        for b in ncz.iter().filter(|b| geq(b, alpha)) {
            for (psi, c) in b.sub(alpha).into_iter().enumerate() {
                if c != 0 && !compact_simple.contains(&psi) {
                    compact_simple.push(psi);
                }
            }
        }
        compact_simple.sort_unstable();
        let mut froots = Vec::new();
        for (i, g) in roots.iter().enumerate() {
            let k = g.0[nc];
            let inside = (0..rs.rank()).all(|psi| {
                psi == nc || g.0[psi] == k * alpha.0[psi] || compact_simple.contains(&psi)
            });
            if inside && (k != 0 || compact_simple.iter().any(|&p| g.0[p] != 0)) {
                froots.push(g.clone());
                covered[i] = true;
            }
        }
        let mut factor = HermitianFactor {
            alpha: alpha.clone(),
            compact_simple,
            roots: froots,
            ty: DynkinType::A(1),
            node: 1,
            dual: CompactDual::Grassmannian { k: 1, n: 2 },
        };
        let base = factor.base(rs.rank());
        let gram: Vec<Vec<_>> = base
            .iter()
            .map(|a| base.iter().map(|b| rs.inner(a, b)).collect())
            .collect();
        let (ty, perm) = identify_connected(&cartan_from_gram(&gram))?;
        let node = perm
            .iter()
            .position(|&v| v == 0)
            .expect("α is a base element")
            + 1;
        if 2 * ty.positive_root_count() != factor.roots.len() {
            return Err(Error::Inconsistent(format!(
                "factor at {} has {} roots but type {ty} needs {}",
                rs.display_root(alpha),
                factor.roots.len(),
                2 * ty.positive_root_count()
            )));
        }
        factor.dual = CompactDual::of(ty, node)?;
        factor.ty = ty;
        factor.node = ty.canonical_node(node);
        factors.push(factor);
    }
    let compact_part: Vec<Root> = roots
        .iter()
        .zip(&covered)
        .filter(|(_, &c)| !c)
        .map(|(r, _)| r.clone())
        .collect();
    if compact_part.iter().any(|r| r.0[nc] != 0) {
        return Err(Error::Inconsistent(
            "a noncompact root of l_x lies in no Hermitian factor".into(),
        ));
    }
    Ok(LeviFactorization {
        roots,
        strongly_orthogonal: minimal,
        factors,
        compact_part,
    })
}

/// Pairwise orthogonal with neither sum nor difference a root.
pub fn is_strongly_orthogonal(rs: &RootSystem, set: &[Root]) -> bool {
    set.iter().enumerate().all(|(i, a)| {
        set[i + 1..].iter().all(|b| {
            rs.inner(&a.0, &b.0).is_zero() && !rs.is_root(&a.add(b)) && !rs.is_root(&a.sub(b))
        })
    })
}

/// The compact dual `X_x` as a product of irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactDualProduct {
    /// Factors sorted by (dimension, name).
    pub factors: Vec<DualFactor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFactor {
    pub ty: DynkinType,
    pub node: usize,
    pub space: CompactDual,
    pub dim_c: usize,
    pub poincare: Vec<u128>,
}

impl CompactDualProduct {
    pub fn dim_c(&self) -> usize {
        self.factors.iter().map(|f| f.dim_c).sum()
    }

    pub fn is_point(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of the factors' Poincaré polynomials in `t²`.
    pub fn poincare(&self) -> Vec<u128> {
        let mut acc = vec![1u128];
        for f in &self.factors {
            let mut next = vec![0u128; acc.len() + f.poincare.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in f.poincare.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            acc = next;
        }
        acc
    }

    /// Euler characteristic as a product of Weyl group ratios.
    pub fn euler_weyl(&self) -> Result<BigInt> {
        let mut e = BigInt::from(1);
        for f in &self.factors {
            e *= weyl_ratio(f.ty, f.node)?;
        }
        Ok(e)
    }
}

impl fmt::Display for CompactDualProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "point");
        }
        let names: Vec<String> = self.factors.iter().map(|x| x.space.to_string()).collect();
        write!(f, "{}", names.join(" x "))
    }
}

pub fn compact_dual(rs: &RootSystem, lf: &LeviFactorization) -> CompactDualProduct {
    let nc = rs.nc_index();
    let mut factors: Vec<DualFactor> = lf
        .factors
        .iter()
        .map(|h| DualFactor {
            ty: h.ty,
            node: h.node,
            space: h.dual,
            dim_c: h.dim_c(nc),
            poincare: h.poincare(nc),
        })
        .collect();
    factors.sort_by(|a, b| {
        a.dim_c
            .cmp(&b.dim_c)
            .then_with(|| a.space.to_string().cmp(&b.space.to_string()))
    });
    CompactDualProduct { factors }
}

/// χ(X_x), computed by Weyl group ratios and checked against the Poincaré
/// polynomial at t = 1.
pub fn euler_characteristic(dual: &CompactDualProduct) -> Result<BigInt> {
    let weyl = dual.euler_weyl()?;
    let p = dual.poincare();
    let betti: BigInt = p.iter().map(|&b| BigInt::from(b)).sum();
    if betti != weyl {
        return Err(Error::Inconsistent(format!(
            "Euler characteristic {weyl} disagrees with Betti sum {betti}"
        )));
    }
    Ok(weyl)
}

/// Poincaré polynomial coefficients `b_0, b_2, …, b_{2 dim}`; checked to be
/// palindromic with `b_0 = 1`.
pub fn poincare_polynomial(dual: &CompactDualProduct) -> Result<Vec<u128>> {
    let p = dual.poincare();
    if p[0] != 1 || p.len() != dual.dim_c() + 1 || p.iter().ne(p.iter().rev()) {
        return Err(Error::Inconsistent(format!(
            "Poincaré polynomial {p:?} is malformed"
        )));
    }
    Ok(p)
}

/// Everything attached to one class, with the dimension identity
/// `dim X_x = #Φ⁺_n − R` checked.
#[derive(Clone, Debug)]
pub struct LeviSummary {
    pub levi: LeviFactorization,
    pub dual: CompactDualProduct,
    pub euler: BigInt,
    pub poincare: Vec<u128>,
}

pub fn summarize(rs: &RootSystem, cls: &ParabolicClass) -> Result<LeviSummary> {
    let levi = levi_factorize(rs, cls)?;
    let dual = compact_dual(rs, &levi);
    let expected = rs.noncompact_positive().len() - cls.degree();
    if dual.dim_c() != expected {
        return Err(Error::Inconsistent(format!(
            "dim X_x = {} but #Φ⁺_n − R = {expected}",
            dual.dim_c()
        )));
    }
    let euler = euler_characteristic(&dual)?;
    let poincare = poincare_polynomial(&dual)?;
    Ok(LeviSummary {
        levi,
        dual,
        euler,
        poincare,
    })
}

/// JSON form of a compact dual.
#[derive(Clone, Debug, Serialize)]
pub struct DualRecord {
    pub factors: Vec<DualFactorRecord>,
    pub dim_c: usize,
    pub euler: u64,
    pub poincare: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualFactorRecord {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub node: usize,
    pub dual_name: String,
}

pub fn dual_record(s: &LeviSummary) -> DualRecord {
    DualRecord {
        factors: s
            .dual
            .factors
            .iter()
            .map(|f| DualFactorRecord {
                ty: f.ty.letter().to_string(),
                rank: f.ty.rank(),
                node: f.node,
                dual_name: f.space.to_string(),
            })
            .collect(),
        dim_c: s.dual.dim_c(),
        euler: s.euler.to_u64().expect("Euler characteristic fits in u64"),
        poincare: s.poincare.iter().map(|&b| b as u64).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::hodge_of_lambda;
    use crate::rootsys::build;

    fn summary(fam: &str, lambda: &str) -> LeviSummary {
        let rs = build(fam.parse().unwrap()).unwrap();
        let cls = hodge_of_lambda(&rs, &rs.parse_weight(lambda).unwrap()).unwrap();
        summarize(&rs, &cls).unwrap()
    }

    #[test]
    fn zero_weight_gives_the_whole_dual() {
        let s = summary("e6-3", "0");
        assert_eq!(s.dual.to_string(), "E6/Spin(10)U(1)");
        assert_eq!(s.euler, BigInt::from(27));
        let s = summary("e7-7", "0");
        assert_eq!(s.euler, BigInt::from(56));
        assert_eq!(s.poincare.len(), 28);
        let s = summary("su(2,4)", "0");
        assert_eq!(s.dual.to_string(), "G_2(C^6)");
        assert_eq!(s.poincare, vec![1, 1, 2, 2, 3, 2, 2, 1, 1]);
    }

    #[test]
    fn regular_weight_gives_a_point() {
        let rs = build("sp(3)".parse().unwrap()).unwrap();
        let cls = hodge_of_lambda(&rs, &rs.parse_weight("3e1+2e2+e3").unwrap()).unwrap();
        let s = summarize(&rs, &cls).unwrap();
        assert!(s.dual.is_point());
        assert_eq!(s.euler, BigInt::from(1));
    }
}
