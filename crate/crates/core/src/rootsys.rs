//! Root systems of the irreducible Hermitian symmetric pairs, in simple-root
//! coordinates, together with the poset of positive noncompact roots.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{dot, q, RationalMatrix, Q};
use crate::poset::Poset;

/// The six families of irreducible Hermitian symmetric pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HermitianFamily {
    /// su(p,q), 1 ≤ p ≤ q.
    AIII {
        p: usize,
        q: usize,
    },
    /// so(2,p), p ≥ 3.
    BDI {
        p: usize,
    },
    /// sp(n,R), n ≥ 2.
    CI {
        n: usize,
    },
    /// so*(2n), n ≥ 4.
    DIII {
        n: usize,
    },
    EIII,
    EVII,
}

impl HermitianFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |bound: &str| {
            Err(Error::InvalidFamily {
                family: self.to_string(),
                bound: bound.to_string(),
            })
        };
        match *self {
            HermitianFamily::AIII { p, q } if p < 1 => {
                bad(&format!("AIII requires p >= 1 (p = {p}, q = {q})"))
            }
            HermitianFamily::AIII { p, q } if p > q => {
                bad(&format!("AIII requires p <= q (p = {p}, q = {q})"))
            }
            HermitianFamily::BDI { p } if p < 3 => bad(&format!("BDI requires p >= 3 (p = {p})")),
            HermitianFamily::CI { n } if n < 2 => bad(&format!("CI requires n >= 2 (n = {n})")),
            HermitianFamily::DIII { n } if n < 4 => bad(&format!("DIII requires n >= 4 (n = {n})")),
            _ => Ok(()),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            HermitianFamily::AIII { p, q } => p + q - 1,
            HermitianFamily::BDI { p } => p / 2 + 1,
            HermitianFamily::CI { n } | HermitianFamily::DIII { n } => n,
            HermitianFamily::EIII => 6,
            HermitianFamily::EVII => 7,
        }
    }

    /// Bourbaki label (1-based) of the noncompact simple root.
    pub fn noncompact_node(&self) -> usize {
        match *self {
            HermitianFamily::AIII { p, .. } => p,
            HermitianFamily::BDI { .. } => 1,
            HermitianFamily::CI { n } | HermitianFamily::DIII { n } => n,
            HermitianFamily::EIII => 1,
            HermitianFamily::EVII => 7,
        }
    }

    /// Cartan's label of the symmetric pair.
    pub fn type_label(&self) -> &'static str {
        match self {
            HermitianFamily::AIII { .. } => "AIII",
            HermitianFamily::BDI { .. } => "BDI",
            HermitianFamily::CI { .. } => "CI",
            HermitianFamily::DIII { .. } => "DIII",
            HermitianFamily::EIII => "EIII",
            HermitianFamily::EVII => "EVII",
        }
    }

    /// Dimension of the ambient ε-space.
    pub fn ambient_dim(&self) -> usize {
        match *self {
            HermitianFamily::AIII { p, q } => p + q,
            HermitianFamily::EIII | HermitianFamily::EVII => 8,
            _ => self.rank(),
        }
    }

    /// Simple roots in ε-coordinates, Bourbaki numbering.
    fn simple_roots_eps(&self) -> Vec<Vec<Q>> {
        let dim = self.ambient_dim();
        let unit = |i: usize| {
            let mut v = vec![Q::zero(); dim];
            v[i] = Q::one();
            v
        };
        let sub =
            |a: Vec<Q>, b: Vec<Q>| a.into_iter().zip(b).map(|(x, y)| x - y).collect::<Vec<Q>>();
        let add =
            |a: Vec<Q>, b: Vec<Q>| a.into_iter().zip(b).map(|(x, y)| x + y).collect::<Vec<Q>>();
        let chain = |len: usize| {
            (0..len)
                .map(|i| sub(unit(i), unit(i + 1)))
                .collect::<Vec<_>>()
        };
        match *self {
            HermitianFamily::AIII { p, q } => chain(p + q - 1),
            HermitianFamily::BDI { p } => {
                let m = self.rank();
                let mut s = chain(m - 1);
                if p % 2 == 1 {
                    s.push(unit(m - 1));
                } else {
                    s.push(add(unit(m - 2), unit(m - 1)));
                }
                s
            }
            HermitianFamily::CI { n } => {
                let mut s = chain(n - 1);
                s.push(unit(n - 1).into_iter().map(|x| x * q(2)).collect());
                s
            }
            HermitianFamily::DIII { n } => {
                let mut s = chain(n - 1);
                s.push(add(unit(n - 2), unit(n - 1)));
                s
            }
            HermitianFamily::EIII | HermitianFamily::EVII => {
                let half = Q::new(BigInt::from(1), BigInt::from(2));
                let mut psi1 = vec![-half.clone(); 8];
                psi1[0] = half.clone();
                psi1[7] = half;
                let mut s = vec![psi1, add(unit(0), unit(1)), sub(unit(1), unit(0))];
                s.push(sub(unit(2), unit(1)));
                s.push(sub(unit(3), unit(2)));
                s.push(sub(unit(4), unit(3)));
                if *self == HermitianFamily::EVII {
                    s.push(sub(unit(5), unit(4)));
                }
                s
            }
        }
    }
}

impl fmt::Display for HermitianFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HermitianFamily::AIII { p, q } => write!(f, "su({p},{q})"),
            HermitianFamily::BDI { p } => write!(f, "so(2,{p})"),
            HermitianFamily::CI { n } => write!(f, "sp({n})"),
            HermitianFamily::DIII { n } => write!(f, "so*({})", 2 * n),
            HermitianFamily::EIII => write!(f, "e6-3"),
            HermitianFamily::EVII => write!(f, "e7-7"),
        }
    }
}

impl FromStr for HermitianFamily {
    type Err = Error;

    /// Accepts `su(p,q)`, `so(2,p)`, `sp(n)`, `so*(2n)`, `e6-3` (also
    /// `e6-1`, `e6`, `eiii`) and `e7-7` (also `e7`, `evii`).
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "family",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_lowercase();
        match t.as_str() {
            "e6-3" | "e6-1" | "e6" | "eiii" | "e6(-14)" => return Ok(HermitianFamily::EIII),
            "e7-7" | "e7" | "evii" | "e7(-25)" => return Ok(HermitianFamily::EVII),
            _ => {}
        }
        let (head, rest) = t
            .split_once('(')
            .ok_or_else(|| err("expected NAME(ARGS)"))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| err("missing closing parenthesis"))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| {
                a.parse::<usize>()
                    .map_err(|_| err("arguments must be nonnegative integers"))
            })
            .collect::<Result<_>>()?;
        let fam = match (head, nums.as_slice()) {
            ("su", [p, q]) => HermitianFamily::AIII { p: *p, q: *q },
            ("so", [2, p]) => HermitianFamily::BDI { p: *p },
            ("sp", [n]) => HermitianFamily::CI { n: *n },
            ("so*", [m]) if m % 2 == 0 => HermitianFamily::DIII { n: m / 2 },
            ("so*", [_]) => return Err(err("so*(m) needs m even")),
            _ => return Err(err("unknown family")),
        };
        fam.validate()?;
        Ok(fam)
    }
}

/// A root as integer coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Root) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn add(&self, other: &Root) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()
    }
}

/// λ = Σ c_ψ ϖ_ψ over the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantVector {
    pub fw: Vec<Q>,
}

impl DominantVector {
    pub fn new(fw: Vec<Q>) -> Self {
        DominantVector { fw }
    }

    pub fn zero(rank: usize) -> Self {
        DominantVector {
            fw: vec![Q::zero(); rank],
        }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        DominantVector {
            fw: c.iter().map(|&x| q(x)).collect(),
        }
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        DominantVector {
            fw: c.iter().map(|x| Q::from_integer(x.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.fw.iter().all(Zero::is_zero)
    }

    /// The first compact node (0-based) with a negative coefficient.
    pub fn first_non_dominant(&self, rs: &RootSystem) -> Option<usize> {
        rs.compact_nodes()
            .into_iter()
            .find(|&i| self.fw[i].is_negative())
    }

    /// Coefficients as strings "num/den" (or "num").
    pub fn fw_strings(&self) -> Vec<String> {
        self.fw.iter().map(|x| x.to_string()).collect()
    }

    /// Renders as a combination of fundamental weights, positive terms first,
    /// e.g. `ϖ2+ϖ3−2ϖ1`.
    pub fn fw_display(&self) -> String {
        let mut terms: Vec<(usize, Q)> = self
            .fw
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        terms.sort_by_key(|(i, c)| (c.is_negative(), *i));
        let labels: Vec<String> = terms.iter().map(|(i, _)| format!("ϖ{}", i + 1)).collect();
        let coeffs: Vec<Q> = terms.into_iter().map(|(_, c)| c).collect();
        render_terms(&coeffs, &labels)
    }
}

/// Edge of the Hasse diagram: `upper − lower` is the compact simple root
/// with 0-based index `label`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HasseEdge {
    pub lower: usize,
    pub upper: usize,
    pub label: usize,
}

/// Positive noncompact roots under dominance order.
#[derive(Clone, Debug)]
pub struct NoncompactPoset {
    pub nodes: Vec<Root>,
    pub hasse_edges: Vec<HasseEdge>,
    pub poset: Poset,
}

impl NoncompactPoset {
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.nodes.binary_search(r).ok()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: HermitianFamily,
    nc: usize,
    simple_eps: Vec<Vec<Q>>,
    gram: Vec<Vec<Q>>,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Q>,
    positive: Vec<Root>,
    lookup: HashMap<Vec<i64>, usize>,
    highest: Root,
}

/// Builds the root system of a family.
pub fn build(family: HermitianFamily) -> Result<RootSystem> {
    family.validate()?;
    let simple_eps = family.simple_roots_eps();
    let rank = simple_eps.len();
    let gram: Vec<Vec<Q>> = simple_eps
        .iter()
        .map(|a| simple_eps.iter().map(|b| dot(a, b)).collect())
        .collect();
    let cartan = cartan_from_gram(&gram);
    let symmetrizer: Vec<Q> = (0..rank).map(|i| &gram[i][i] / q(2)).collect();
    let positive = positive_roots(&cartan);
    let mut lookup = HashMap::new();
    for (i, r) in positive.iter().enumerate() {
        lookup.insert(r.0.clone(), i);
        lookup.insert(r.neg().0, positive.len() + i);
    }
    let highest = positive
        .iter()
        .max_by_key(|r| r.height())
        .cloned()
        .expect("nonempty");
    Ok(RootSystem {
        family,
        nc: family.noncompact_node() - 1,
        simple_eps,
        gram,
        cartan,
        symmetrizer,
        positive,
        lookup,
        highest,
    })
}

/// `cartan[i][j] = 2(α_i, α_j)/(α_j, α_j) = ⟨α_i, α_j∨⟩`.
pub fn cartan_from_gram(gram: &[Vec<Q>]) -> Vec<Vec<i64>> {
    let n = gram.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = &gram[i][j] * q(2) / &gram[j][j];
                    assert!(v.is_integer(), "non-integral Cartan entry");
                    v.to_integer().to_i64().expect("small")
                })
                .collect()
        })
        .collect()
}

/// Positive roots from a Cartan matrix by the root-string algorithm, sorted
/// lexicographically.
pub fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: BTreeSet<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    all.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for b in &layer {
            for j in 0..n {
                let mut p = 0;
                let mut v = b.clone();
                loop {
                    v[j] -= 1;
                    if all.contains(&v) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..n).map(|i| b[i] * cartan[i][j]).sum();
                if p - pair > 0 {
                    let mut w = b.clone();
                    w[j] += 1;
                    if !all.contains(&w) {
                        next.insert(w);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter().map(Root).collect()
}

impl RootSystem {
    pub fn family(&self) -> HermitianFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.simple_eps.len()
    }

    /// 0-based index of the noncompact simple root.
    pub fn nc_index(&self) -> usize {
        self.nc
    }

    /// 0-based indices of the compact simple roots.
    pub fn compact_nodes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| i != self.nc).collect()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    /// `d_i = (α_i, α_i)/2`; `diag(d)·cartanᵀ` is the Gram matrix.
    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    pub fn simple_roots_epsilon(&self) -> &[Vec<Q>] {
        &self.simple_eps
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots, then their negatives in the same order.
    pub fn roots(&self) -> Vec<Root> {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(Root::neg))
            .collect()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.lookup.contains_key(v)
    }

    pub fn is_noncompact(&self, r: &Root) -> bool {
        r.0[self.nc] != 0
    }

    pub fn noncompact_positive(&self) -> Vec<Root> {
        self.positive
            .iter()
            .filter(|r| r.0[self.nc] == 1)
            .cloned()
            .collect()
    }

    pub fn compact_positive(&self) -> Vec<Root> {
        self.positive
            .iter()
            .filter(|r| r.0[self.nc] == 0)
            .cloned()
            .collect()
    }

    /// Symmetric bilinear form on integer coefficient vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let mut acc = Q::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc += &self.gram[i][j] * q(ai * bj);
                }
            }
        }
        acc
    }

    /// `⟨β, α_j∨⟩` for a coefficient vector β.
    pub fn coroot_pairing(&self, b: &[i64], j: usize) -> i64 {
        b.iter()
            .enumerate()
            .map(|(i, &bi)| bi * self.cartan[i][j])
            .sum()
    }

    /// The row `(a_ψ d_ψ)_ψ` with `pairing(λ, α) = row · c`.
    pub fn pairing_row(&self, a: &Root) -> Vec<Q> {
        a.0.iter()
            .zip(&self.symmetrizer)
            .map(|(&c, d)| d * q(c))
            .collect()
    }

    /// `(λ, α)` up to the fixed positive normalization of the form.
    pub fn pairing(&self, lambda: &DominantVector, a: &Root) -> Result<Q> {
        if lambda.fw.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: lambda.fw.len(),
            });
        }
        if a.0.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: a.0.len(),
            });
        }
        Ok(dot(&self.pairing_row(a), &lambda.fw))
    }

    pub fn noncompact_poset(&self) -> NoncompactPoset {
        let nodes = self.noncompact_positive();
        let poset = Poset::new(nodes.len(), |i, j| {
            nodes[j].sub(&nodes[i]).iter().all(|&c| c >= 0)
        });
        let mut hasse_edges = Vec::new();
        for (i, a) in nodes.iter().enumerate() {
            for k in self.compact_nodes() {
                let mut up = a.0.clone();
                up[k] += 1;
                if let Ok(j) = nodes.binary_search(&Root(up)) {
                    hasse_edges.push(HasseEdge {
                        lower: i,
                        upper: j,
                        label: k,
                    });
                }
            }
        }
        hasse_edges.sort();
        NoncompactPoset {
            nodes,
            hasse_edges,
            poset,
        }
    }

    /// ε-coordinates of a coefficient vector.
    pub fn coeffs_to_epsilon(&self, c: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.family.ambient_dim()];
        for (ci, a) in c.iter().zip(&self.simple_eps) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(a) {
                *x += ci * y;
            }
        }
        v
    }

    pub fn root_to_epsilon(&self, r: &Root) -> Vec<Q> {
        let c: Vec<Q> = r.0.iter().map(|&x| q(x)).collect();
        self.coeffs_to_epsilon(&c)
    }

    /// ε-coordinates of λ, as the vector in the span of the roots.
    pub fn weight_to_epsilon(&self, lambda: &DominantVector) -> Vec<Q> {
        let n = self.rank();
        let mut ct = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                ct.set(i, j, q(self.cartan[j][i]));
            }
        }
        let m = ct
            .inverse()
            .expect("Cartan matrix is invertible")
            .mul_vec(&lambda.fw);
        self.coeffs_to_epsilon(&m)
    }

    /// Fundamental-weight coordinates of an ε-vector: `c_i = ⟨v, α_i∨⟩`.
    pub fn weight_from_epsilon(&self, v: &[Q]) -> Result<DominantVector> {
        if v.len() != self.family.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.family.ambient_dim(),
                found: v.len(),
            });
        }
        let fw = self
            .simple_eps
            .iter()
            .map(|a| dot(v, a) * q(2) / dot(a, a))
            .collect();
        Ok(DominantVector { fw })
    }

    /// Renders an ε-vector in the family's display convention.
    pub fn epsilon_display(&self, v: &[Q]) -> String {
        match self.family {
            HermitianFamily::EIII => {
                let mut coeffs = vec![v[7].clone()];
                coeffs.extend(v[..5].iter().cloned());
                let labels: Vec<String> = (0..6).map(|i| format!("ε{i}")).collect();
                render_nonzero(&coeffs, &labels)
            }
            HermitianFamily::AIII { .. } => {
                let w = aiii_representative(v);
                let labels: Vec<String> = (1..=w.len()).map(|i| format!("ε{i}")).collect();
                render_nonzero(&w, &labels)
            }
            _ => {
                let labels: Vec<String> = (1..=v.len()).map(|i| format!("ε{i}")).collect();
                render_nonzero(v, &labels)
            }
        }
    }

    pub fn display_root(&self, r: &Root) -> String {
        self.epsilon_display(&self.root_to_epsilon(r))
    }

    pub fn display_weight(&self, lambda: &DominantVector) -> String {
        self.epsilon_display(&self.weight_to_epsilon(lambda))
    }

    /// Parses an ε-expression such as `ε1−ε2+2ε5` or `1/2e0+e1` into ambient
    /// coordinates. `ε0` is `Σεi` for AIII and `ε8−ε7−ε6` for EIII.
    pub fn parse_epsilon(&self, s: &str) -> Result<Vec<Q>> {
        let dim = self.family.ambient_dim();
        let err = |reason: String| Error::Parse {
            what: "epsilon expression",
            input: s.to_string(),
            reason,
        };
        let mut v = vec![Q::zero(); dim];
        for (coef, idx) in parse_terms(s, &['ε', 'e']).map_err(err)? {
            match idx {
                0 => match self.family {
                    HermitianFamily::AIII { .. } => {
                        for x in v.iter_mut() {
                            *x += &coef;
                        }
                    }
                    HermitianFamily::EIII => {
                        v[7] += &coef;
                        v[6] -= &coef;
                        v[5] -= &coef;
                    }
                    _ => return Err(err("ε0 is not defined for this family".into())),
                },
                i if i <= dim => v[i - 1] += coef,
                i => return Err(err(format!("index {i} exceeds ambient dimension {dim}"))),
            }
        }
        Ok(v)
    }

    /// Parses `ε…` or `ϖ…`/`w…` expressions into fundamental-weight
    /// coordinates.
    pub fn parse_weight(&self, s: &str) -> Result<DominantVector> {
        if s.contains('ϖ') || s.contains('w') {
            let err = |reason: String| Error::Parse {
                what: "weight",
                input: s.to_string(),
                reason,
            };
            let mut fw = vec![Q::zero(); self.rank()];
            for (coef, idx) in parse_terms(s, &['ϖ', 'w']).map_err(err)? {
                if idx == 0 || idx > self.rank() {
                    return Err(err(format!("no fundamental weight with index {idx}")));
                }
                fw[idx - 1] += coef;
            }
            return Ok(DominantVector { fw });
        }
        self.weight_from_epsilon(&self.parse_epsilon(s)?)
    }

    /// Name of a simple root, `psi_k` with Bourbaki label k.
    pub fn node_name(&self, i: usize) -> String {
        format!("psi_{}", i + 1)
    }

    /// DOT text of the Hasse diagram of the positive noncompact roots.
    pub fn hasse_dot(&self, poset: &NoncompactPoset) -> String {
        let mut s = String::new();
        s.push_str(&format!("digraph \"hasse {}\" {{\n", self.family));
        s.push_str("  rankdir=BT;\n  node [shape=box];\n");
        for (i, r) in poset.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", self.display_root(r)));
        }
        for e in &poset.hasse_edges {
            s.push_str(&format!(
                "  n{} -> n{} [label=\"{}\"];\n",
                e.lower,
                e.upper,
                self.node_name(e.label)
            ));
        }
        s.push_str("}\n");
        s
    }

    /// DOT text of the extended Dynkin diagram; the noncompact node is
    /// filled, edges to −α₀ are dashed.
    pub fn dynkin_dot(&self) -> String {
        let n = self.rank();
        let mut s = String::new();
        s.push_str(&format!("graph \"dynkin {}\" {{\n", self.family));
        s.push_str("  node [shape=circle];\n");
        for i in 0..n {
            if i == self.nc {
                s.push_str(&format!(
                    "  {0} [label=\"{0}\", style=filled, fillcolor=black, fontcolor=white];\n",
                    self.node_name(i)
                ));
            } else {
                s.push_str(&format!("  {0} [label=\"{0}\"];\n", self.node_name(i)));
            }
        }
        s.push_str("  minus_alpha_0 [label=\"-alpha_0\"];\n");
        for i in 0..n {
            for j in i + 1..n {
                let bond = self.cartan[i][j] * self.cartan[j][i];
                if bond > 0 {
                    s.push_str(&edge_line(
                        &self.node_name(i),
                        &self.node_name(j),
                        bond,
                        false,
                    ));
                }
            }
        }
        let a0 = self.highest.neg();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            let ip = self.inner(&a0.0, &e);
            if ip.is_zero() {
                continue;
            }
            let x = &ip * q(2) / self.inner(&e, &e);
            let y = &ip * q(2) / self.inner(&a0.0, &a0.0);
            let bond = (x * y).to_integer().to_i64().expect("small");
            s.push_str(&edge_line("minus_alpha_0", &self.node_name(i), bond, true));
        }
        s.push_str("}\n");
        s
    }
}

fn edge_line(a: &str, b: &str, bond: i64, dashed: bool) -> String {
    let mut attrs = Vec::new();
    if bond > 1 {
        attrs.push(format!("label=\"{bond}\""));
    }
    if dashed {
        attrs.push("style=dashed".to_string());
    }
    if attrs.is_empty() {
        format!("  {a} -- {b};\n")
    } else {
        format!("  {a} -- {b} [{}];\n", attrs.join(", "))
    }
}

/// Display representative modulo `ε0 = Σεi`: the sum-zero vector when it is
/// integral, otherwise the shift making the most coordinates vanish.
fn aiii_representative(v: &[Q]) -> Vec<Q> {
    let mean = v.iter().fold(Q::zero(), |a, x| a + x) / q(v.len() as i64);
    let centered: Vec<Q> = v.iter().map(|x| x - &mean).collect();
    if centered.iter().all(|x| x.is_integer()) {
        return centered;
    }
    let mut counts: Vec<(Q, usize)> = Vec::new();
    for x in &centered {
        match counts.iter_mut().find(|(y, _)| y == x) {
            Some((_, c)) => *c += 1,
            None => counts.push((x.clone(), 1)),
        }
    }
    counts.sort_by(|(a, ca), (b, cb)| {
        cb.cmp(ca)
            .then_with(|| a.abs().cmp(&b.abs()))
            .then_with(|| a.cmp(b))
    });
    let shift = counts[0].0.clone();
    centered.into_iter().map(|x| x - &shift).collect()
}

fn render_nonzero(coeffs: &[Q], labels: &[String]) -> String {
    let (c, l): (Vec<Q>, Vec<String>) = coeffs
        .iter()
        .cloned()
        .zip(labels.iter().cloned())
        .filter(|(c, _)| !c.is_zero())
        .unzip();
    render_terms(&c, &l)
}

/// `c1·l1 + c2·l2 …` with unit coefficients suppressed and U+2212 minus.
pub fn render_terms(coeffs: &[Q], labels: &[String]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, (c, l)) in coeffs.iter().zip(labels).enumerate() {
        if c.is_negative() {
            s.push('−');
        } else if k > 0 {
            s.push('+');
        }
        let a = c.abs();
        if !a.is_one() {
            s.push_str(&a.to_string());
        }
        s.push_str(l);
    }
    s
}

/// Parses `[±][coef]SYMBOL index` terms.
fn parse_terms(s: &str, symbols: &[char]) -> std::result::Result<Vec<(Q, usize)>, String> {
    let chars: Vec<char> = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .collect();
    if chars.is_empty() {
        return Err("empty expression".into());
    }
    if chars == ['0'] {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1i64;
        if chars[i] == '+' {
            i += 1;
        } else if chars[i] == '-' || chars[i] == '−' {
            sign = -1;
            i += 1;
        } else if i > 0 {
            return Err(format!("expected a sign at position {i}"));
        }
        let start = i;
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
            i += 1;
        }
        let coef_text: String = chars[start..i].iter().collect();
        let coef = if coef_text.is_empty() {
            Q::one()
        } else if let Some((a, b)) = coef_text.split_once('/') {
            let a: i64 = a
                .parse()
                .map_err(|_| format!("bad numerator in {coef_text:?}"))?;
            let b: i64 = b
                .parse()
                .map_err(|_| format!("bad denominator in {coef_text:?}"))?;
            if b == 0 {
                return Err("zero denominator".into());
            }
            Q::new(BigInt::from(a), BigInt::from(b))
        } else {
            q(coef_text
                .parse()
                .map_err(|_| format!("bad coefficient {coef_text:?}"))?)
        };
        if i >= chars.len() || !symbols.contains(&chars[i]) {
            return Err(format!("expected one of {symbols:?} at position {i}"));
        }
        i += 1;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let idx: usize = chars[start..i]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| "missing index".to_string())?;
        out.push((coef * q(sign), idx));
    }
    Ok(out)
}

/// Number of order ideals of the poset.
pub fn count_order_ideals(poset: &NoncompactPoset) -> u128 {
    poset.poset.count_ideals()
}
