//! Identification of Cartan matrices with the standard connected types, Weyl
//! group orders, and the compact irreducible Hermitian symmetric spaces.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{dot, q, Q};
use crate::rootsys::cartan_from_gram;

/// Connected Dynkin types in canonical form: B₂ stands for C₂ and A₃ for D₃.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(m) | DynkinType::B(m) | DynkinType::C(m) | DynkinType::D(m) => m,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
        }
    }

    pub fn letter(&self) -> &'static str {
        match self {
            DynkinType::A(_) => "A",
            DynkinType::B(_) => "B",
            DynkinType::C(_) => "C",
            DynkinType::D(_) => "D",
            DynkinType::E6 | DynkinType::E7 => "E",
        }
    }

    pub fn positive_root_count(&self) -> usize {
        match *self {
            DynkinType::A(m) => m * (m + 1) / 2,
            DynkinType::B(m) | DynkinType::C(m) => m * m,
            DynkinType::D(m) => m * (m - 1),
            DynkinType::E6 => 36,
            DynkinType::E7 => 63,
        }
    }

    pub fn weyl_order(&self) -> BigInt {
        let fact = |m: usize| (1..=m).fold(BigInt::one(), |a, k| a * k);
        let pow2 = |m: usize| BigInt::one() << m;
        match *self {
            DynkinType::A(m) => fact(m + 1),
            DynkinType::B(m) | DynkinType::C(m) => pow2(m) * fact(m),
            DynkinType::D(m) => pow2(m - 1) * fact(m),
            DynkinType::E6 => BigInt::from(51_840),
            DynkinType::E7 => BigInt::from(2_903_040),
        }
    }

    /// Standard simple roots in ε-coordinates, Bourbaki numbering.
    pub fn simple_roots(&self) -> Vec<Vec<Q>> {
        let unit = |dim: usize, i: usize| {
            let mut v = vec![Q::zero(); dim];
            v[i] = Q::one();
            v
        };
        let diff = |dim: usize, i: usize, j: usize, s: i64| {
            let mut v = unit(dim, i);
            v[j] += q(s);
            v
        };
        let chain = |dim: usize, len: usize| {
            (0..len)
                .map(|i| diff(dim, i, i + 1, -1))
                .collect::<Vec<_>>()
        };
        match *self {
            DynkinType::A(m) => chain(m + 1, m),
            DynkinType::B(m) => {
                let mut s = chain(m, m - 1);
                s.push(unit(m, m - 1));
                s
            }
            DynkinType::C(m) => {
                let mut s = chain(m, m - 1);
                s.push(unit(m, m - 1).into_iter().map(|x| x * q(2)).collect());
                s
            }
            DynkinType::D(m) => {
                let mut s = chain(m, m - 1);
                s.push(diff(m, m - 2, m - 1, 1));
                s
            }
            DynkinType::E6 | DynkinType::E7 => {
                let half = Q::new(BigInt::from(1), BigInt::from(2));
                let mut psi1 = vec![-half.clone(); 8];
                psi1[0] = half.clone();
                psi1[7] = half;
                let mut s = vec![psi1, diff(8, 0, 1, 1), diff(8, 1, 0, -1)];
                let last = if *self == DynkinType::E6 { 4 } else { 5 };
                for i in 2..=last {
                    s.push(diff(8, i, i - 1, -1));
                }
                s
            }
        }
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let s = self.simple_roots();
        let gram: Vec<Vec<Q>> = s
            .iter()
            .map(|a| s.iter().map(|b| dot(a, b)).collect())
            .collect();
        cartan_from_gram(&gram)
    }

    /// Nodes (1-based) whose deletion leaves a Hermitian symmetric pair.
    pub fn is_hermitian_node(&self, node: usize) -> bool {
        match *self {
            DynkinType::A(m) => (1..=m).contains(&node),
            DynkinType::B(_) => node == 1,
            DynkinType::C(m) => node == m,
            DynkinType::D(m) => node == 1 || node == m - 1 || node == m,
            DynkinType::E6 => node == 1 || node == 6,
            DynkinType::E7 => node == 7,
        }
    }

    /// Representative of a node under diagram automorphisms.
    pub fn canonical_node(&self, node: usize) -> usize {
        match *self {
            DynkinType::A(m) => node.min(m + 1 - node),
            DynkinType::D(4) if node != 2 => 4,
            DynkinType::D(m) if node == m - 1 => m,
            DynkinType::E6 if node == 6 => 1,
            _ => node,
        }
    }

    fn candidates(rank: usize) -> Vec<DynkinType> {
        let mut v = vec![DynkinType::A(rank)];
        if rank >= 2 {
            v.push(DynkinType::B(rank));
        }
        if rank >= 3 {
            v.push(DynkinType::C(rank));
        }
        if rank >= 4 {
            v.push(DynkinType::D(rank));
        }
        if rank == 6 {
            v.push(DynkinType::E6);
        }
        if rank == 7 {
            v.push(DynkinType::E7);
        }
        v
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

/// A connected component: `nodes[k]` is the input vertex playing the role of
/// Bourbaki node `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub ty: DynkinType,
    pub nodes: Vec<usize>,
}

/// Splits a Cartan matrix into connected components and identifies each.
pub fn classify_cartan(cartan: &[Vec<i64>]) -> Result<Vec<Component>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..n {
                if !seen[w] && cartan[v][w] != 0 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        let (ty, perm) = identify_connected(&sub)?;
        out.push(Component {
            ty,
            nodes: perm.into_iter().map(|k| comp[k]).collect(),
        });
    }
    Ok(out)
}

/// Identifies a connected Cartan matrix; returns the type and, for each
/// standard node, the matching vertex.
pub fn identify_connected(m: &[Vec<i64>]) -> Result<(DynkinType, Vec<usize>)> {
    let r = m.len();
    if r == 0 {
        return Err(Error::Unclassifiable("empty diagram".into()));
    }
    for ty in DynkinType::candidates(r) {
        let s = ty.cartan();
        let degree = |a: &[Vec<i64>], i: usize| (0..r).filter(|&j| j != i && a[i][j] != 0).count();
        let mut assign = vec![usize::MAX; r];
        let mut used = vec![false; r];
        if match_nodes(&s, m, 0, &mut assign, &mut used, &degree) {
            return Ok((ty, assign));
        }
    }
    Err(Error::Unclassifiable(format!(
        "no connected type matches Cartan matrix {m:?}"
    )))
}

fn match_nodes(
    s: &[Vec<i64>],
    m: &[Vec<i64>],
    k: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    degree: &dyn Fn(&[Vec<i64>], usize) -> usize,
) -> bool {
    let r = s.len();
    if k == r {
        return true;
    }
    for v in 0..r {
        if used[v] || degree(m, v) != degree(s, k) || m[v][v] != s[k][k] {
            continue;
        }
        if (0..k).any(|j| m[v][assign[j]] != s[k][j] || m[assign[j]][v] != s[j][k]) {
            continue;
        }
        assign[k] = v;
        used[v] = true;
        if match_nodes(s, m, k + 1, assign, used, degree) {
            return true;
        }
        used[v] = false;
    }
    false
}

/// Product of Weyl group orders of the components of a Cartan matrix.
pub fn weyl_order_of(cartan: &[Vec<i64>]) -> Result<BigInt> {
    Ok(classify_cartan(cartan)?
        .iter()
        .fold(BigInt::one(), |a, c| a * c.ty.weyl_order()))
}

/// Compact irreducible Hermitian symmetric spaces, up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CompactDual {
    /// G_k(C^n), k ≤ n − k.
    Grassmannian { k: usize, n: usize },
    /// Q_d = SO(d+2)/SO(2)×SO(d).
    Quadric { d: usize },
    /// Sp(m)/U(m).
    SpU { m: usize },
    /// SO(2m)/U(m).
    SoU { m: usize },
    /// E6/Spin(10)·U(1).
    E6,
    /// E7/E6·U(1).
    E7,
}

impl CompactDual {
    /// The space attached to a Hermitian (type, node) pair.
    pub fn of(ty: DynkinType, node: usize) -> Result<CompactDual> {
        if !ty.is_hermitian_node(node) {
            return Err(Error::Unclassifiable(format!(
                "node {node} of {ty} is not Hermitian"
            )));
        }
        let node = ty.canonical_node(node);
        Ok(match ty {
            DynkinType::A(m) => CompactDual::Grassmannian { k: node, n: m + 1 },
            DynkinType::B(m) => CompactDual::Quadric { d: 2 * m - 1 },
            DynkinType::C(m) => CompactDual::SpU { m },
            DynkinType::D(m) if node == 1 => CompactDual::Quadric { d: 2 * m - 2 },
            DynkinType::D(m) => CompactDual::SoU { m },
            DynkinType::E6 => CompactDual::E6,
            DynkinType::E7 => CompactDual::E7,
        })
    }
}

impl CompactDual {
    pub fn dim_c(&self) -> usize {
        match *self {
            CompactDual::Grassmannian { k, n } => k * (n - k),
            CompactDual::Quadric { d } => d,
            CompactDual::SpU { m } => m * (m + 1) / 2,
            CompactDual::SoU { m } => m * (m - 1) / 2,
            CompactDual::E6 => 16,
            CompactDual::E7 => 27,
        }
    }

    /// Representative of the isomorphism class, matching [`CompactDual::of`].
    pub fn canonical(self) -> Result<CompactDual> {
        let bad = |why: &str| Err(Error::Unclassifiable(format!("{self:?}: {why}")));
        Ok(match self {
            CompactDual::Grassmannian { k, n } if k == 0 || k >= n => {
                return bad("empty Grassmannian")
            }
            CompactDual::Grassmannian { k, n } => CompactDual::Grassmannian { k: k.min(n - k), n },
            CompactDual::Quadric { d: 0 } | CompactDual::Quadric { d: 2 } => {
                return bad("not irreducible")
            }
            CompactDual::Quadric { d: 1 } => CompactDual::Grassmannian { k: 1, n: 2 },
            CompactDual::Quadric { d: 4 } => CompactDual::Grassmannian { k: 2, n: 4 },
            CompactDual::Quadric { d: 6 } => CompactDual::SoU { m: 4 },
            CompactDual::SpU { m: 0 } | CompactDual::SoU { m: 0..=1 } => return bad("a point"),
            CompactDual::SpU { m: 1 } | CompactDual::SoU { m: 2 } => {
                CompactDual::Grassmannian { k: 1, n: 2 }
            }
            CompactDual::SpU { m: 2 } => CompactDual::Quadric { d: 3 },
            CompactDual::SoU { m: 3 } => CompactDual::Grassmannian { k: 1, n: 4 },
            other => other,
        })
    }
}

impl std::str::FromStr for CompactDual {
    type Err = Error;

    /// Accepts the display forms plus `P^n`, `CP^n`, `S2`, `G2(C6)`, `Q6`,
    /// `E6`, `E7`; the result is canonical.
    fn from_str(s: &str) -> Result<CompactDual> {
        let err = |reason: &str| Error::Parse {
            what: "compact Hermitian space",
            input: s.to_string(),
            reason: reason.into(),
        };
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_' && *c != '^' && *c != '{' && *c != '}')
            .collect();
        let t = t
            .replace('ℂ', "C")
            .replace('²', "2")
            .replace('𝕊', "S")
            .replace('ℙ', "P");
        let num = |x: &str| x.parse::<usize>().map_err(|_| err("bad integer"));
        let d = if t == "S2" {
            CompactDual::Grassmannian { k: 1, n: 2 }
        } else if let Some(n) = t.strip_prefix("CP").or_else(|| t.strip_prefix('P')) {
            CompactDual::Grassmannian {
                k: 1,
                n: num(n)? + 1,
            }
        } else if let Some(rest) = t.strip_prefix('G') {
            let (k, n) = rest
                .split_once("(C")
                .ok_or_else(|| err("expected G_k(C^n)"))?;
            CompactDual::Grassmannian {
                k: num(k)?,
                n: num(n.strip_suffix(')').ok_or_else(|| err("missing )"))?)?,
            }
        } else if let Some(d) = t.strip_prefix('Q') {
            CompactDual::Quadric { d: num(d)? }
        } else if let Some(rest) = t.strip_prefix("Sp(") {
            let (m, m2) = rest
                .split_once(")/U(")
                .ok_or_else(|| err("expected Sp(m)/U(m)"))?;
            if m2 != format!("{m})") {
                return Err(err("ranks differ"));
            }
            CompactDual::SpU { m: num(m)? }
        } else if let Some(rest) = t.strip_prefix("SO(") {
            let (two_m, m2) = rest
                .split_once(")/U(")
                .ok_or_else(|| err("expected SO(2m)/U(m)"))?;
            let m = num(m2.strip_suffix(')').ok_or_else(|| err("missing )"))?)?;
            if num(two_m)? != 2 * m {
                return Err(err("expected SO(2m)/U(m)"));
            }
            CompactDual::SoU { m }
        } else if t.starts_with("E6") {
            CompactDual::E6
        } else if t.starts_with("E7") {
            CompactDual::E7
        } else {
            return Err(err("unknown space"));
        };
        d.canonical()
    }
}

impl fmt::Display for CompactDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CompactDual::Grassmannian { k: 1, n: 2 } => write!(f, "S^2"),
            CompactDual::Grassmannian { k, n } => write!(f, "G_{k}(C^{n})"),
            CompactDual::Quadric { d } => write!(f, "Q_{d}"),
            CompactDual::SpU { m } => write!(f, "Sp({m})/U({m})"),
            CompactDual::SoU { m } => write!(f, "SO({})/U({m})", 2 * m),
            CompactDual::E6 => write!(f, "E6/Spin(10)U(1)"),
            CompactDual::E7 => write!(f, "E7/E6U(1)"),
        }
    }
}

/// `#W(g)/#W(k)` for the pair obtained by deleting `node` (1-based).
pub fn weyl_ratio(ty: DynkinType, node: usize) -> Result<BigInt> {
    let c = ty.cartan();
    let keep: Vec<usize> = (0..ty.rank()).filter(|&i| i + 1 != node).collect();
    let sub: Vec<Vec<i64>> = keep
        .iter()
        .map(|&i| keep.iter().map(|&j| c[i][j]).collect())
        .collect();
    let wk = weyl_order_of(&sub)?;
    let wg = ty.weyl_order();
    if !(&wg % &wk).is_zero() {
        return Err(Error::Inconsistent(format!(
            "#W({ty}) not divisible by the Levi Weyl order"
        )));
    }
    Ok(wg / wk)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_matrices_identify_as_themselves() {
        for ty in [
            DynkinType::A(1),
            DynkinType::A(5),
            DynkinType::B(2),
            DynkinType::B(4),
            DynkinType::C(3),
            DynkinType::C(5),
            DynkinType::D(4),
            DynkinType::D(6),
            DynkinType::E6,
            DynkinType::E7,
        ] {
            let (t, perm) = identify_connected(&ty.cartan()).unwrap();
            assert_eq!(t, ty);
            let c = ty.cartan();
            for i in 0..ty.rank() {
                for j in 0..ty.rank() {
                    assert_eq!(c[perm[i]][perm[j]], c[i][j]);
                }
            }
        }
    }

    #[test]
    fn low_rank_coincidences() {
        assert_eq!(
            identify_connected(&DynkinType::D(3).cartan()).unwrap().0,
            DynkinType::A(3)
        );
        let c2 = vec![vec![2, -1], vec![-2, 2]];
        assert_eq!(identify_connected(&c2).unwrap().0, DynkinType::B(2));
    }

    #[test]
    fn weyl_ratios_of_known_spaces() {
        assert_eq!(weyl_ratio(DynkinType::E6, 1).unwrap(), BigInt::from(27));
        assert_eq!(weyl_ratio(DynkinType::E7, 7).unwrap(), BigInt::from(56));
        assert_eq!(weyl_ratio(DynkinType::A(5), 2).unwrap(), BigInt::from(15));
        assert_eq!(weyl_ratio(DynkinType::D(6), 6).unwrap(), BigInt::from(32));
        assert_eq!(weyl_ratio(DynkinType::C(4), 4).unwrap(), BigInt::from(16));
        assert_eq!(weyl_ratio(DynkinType::B(3), 1).unwrap(), BigInt::from(6));
        assert_eq!(weyl_ratio(DynkinType::D(5), 1).unwrap(), BigInt::from(10));
    }

    #[test]
    fn dual_names() {
        assert_eq!(
            CompactDual::of(DynkinType::A(5), 4).unwrap().to_string(),
            "G_2(C^6)"
        );
        assert_eq!(
            CompactDual::of(DynkinType::A(1), 1).unwrap().to_string(),
            "S^2"
        );
        assert_eq!(
            CompactDual::of(DynkinType::D(4), 1).unwrap().to_string(),
            "SO(8)/U(4)"
        );
        assert_eq!(
            CompactDual::of(DynkinType::D(6), 5).unwrap().to_string(),
            "SO(12)/U(6)"
        );
        assert_eq!(
            CompactDual::of(DynkinType::D(5), 1).unwrap().to_string(),
            "Q_8"
        );
        assert!(CompactDual::of(DynkinType::B(3), 3).is_err());
    }

    #[test]
    fn parsing_canonicalizes() {
        let p = |s: &str| s.parse::<CompactDual>().unwrap().to_string();
        assert_eq!(p("Q_6"), "SO(8)/U(4)");
        assert_eq!(p("P^1"), "S^2");
        assert_eq!(p("G4(C6)"), "G_2(C^6)");
        assert_eq!(p("Sp(2)/U(2)"), "Q_3");
        assert_eq!(p("SO(10)/U(5)"), "SO(10)/U(5)");
        assert!("SO(10)/U(4)".parse::<CompactDual>().is_err());
        assert!("Q_2".parse::<CompactDual>().is_err());
    }
}
