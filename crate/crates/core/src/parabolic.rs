//! θ-stable parabolic subalgebras up to equality of `u ∩ p`: Hodge types,
//! classification by (filter, ideal) pairs, the counts N(r) and ι-duality.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{feasible_strict_with, q, ConstraintSystem, Feasibility, Method, Q};
use crate::rootsys::{DominantVector, NoncompactPoset, Root, RootSystem};

/// A feasible pair (U, D) with a witness λ.
///
/// `u` is the filter Φ(u ∩ p₊); `d` is the ideal −Φ(u ∩ p₋). Both are
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicClass {
    pub u: Vec<Root>,
    pub d: Vec<Root>,
    pub witness: DominantVector,
}

impl ParabolicClass {
    pub fn r_plus(&self) -> usize {
        self.u.len()
    }

    pub fn r_minus(&self) -> usize {
        self.d.len()
    }

    pub fn degree(&self) -> usize {
        self.u.len() + self.d.len()
    }

    /// The equivalence key.
    pub fn key(&self) -> (&[Root], &[Root]) {
        (&self.u, &self.d)
    }

    pub fn same_class(&self, other: &ParabolicClass) -> bool {
        self.key() == other.key()
    }
}

/// U = {α : (λ,α) > 0}, D = {α : (λ,α) < 0} over the positive noncompact
/// roots.
pub fn hodge_of_lambda(rs: &RootSystem, lambda: &DominantVector) -> Result<ParabolicClass> {
    if lambda.fw.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: lambda.fw.len(),
        });
    }
    if let Some(i) = lambda.first_non_dominant(rs) {
        return Err(Error::NotKDominant { node: i + 1 });
    }
    let mut u = Vec::new();
    let mut d = Vec::new();
    for a in rs.noncompact_positive() {
        let p = rs.pairing(lambda, &a)?;
        if p.is_positive() {
            u.push(a);
        } else if p.is_negative() {
            d.push(a);
        }
    }
    let cls = ParabolicClass {
        u,
        d,
        witness: lambda.clone(),
    };
    if !closure_holds(rs, &cls) {
        return Err(Error::Inconsistent(format!(
            "U/D closure fails for {}",
            lambda.fw_display()
        )));
    }
    Ok(cls)
}

/// U up-closed and D down-closed, checked through compact simple steps.
pub fn closure_holds(rs: &RootSystem, cls: &ParabolicClass) -> bool {
    let step = |r: &Root, k: usize, delta: i64| {
        let mut v = r.0.clone();
        v[k] += delta;
        v
    };
    let up_ok = cls.u.iter().all(|a| {
        rs.compact_nodes().into_iter().all(|k| {
            let v = step(a, k, 1);
            !rs.is_root(&v) || cls.u.binary_search(&Root(v)).is_ok()
        })
    });
    let down_ok = cls.d.iter().all(|a| {
        rs.compact_nodes().into_iter().all(|k| {
            let v = step(a, k, -1);
            !rs.is_root(&v) || v[rs.nc_index()] == 0 || cls.d.binary_search(&Root(v)).is_ok()
        })
    });
    let disjoint = cls.u.iter().all(|a| cls.d.binary_search(a).is_err());
    up_ok && down_ok && disjoint
}

/// Filters of the poset with at most `max_size` elements, as sorted index lists.
pub fn enumerate_filters(poset: &NoncompactPoset, max_size: usize) -> Vec<Vec<usize>> {
    poset.poset.filters(max_size)
}

/// Ideals of the poset with at most `max_size` elements.
pub fn enumerate_ideals(poset: &NoncompactPoset, max_size: usize) -> Vec<Vec<usize>> {
    poset.poset.ideals(max_size)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Bound on R₊ and R₋.
    pub r_max: usize,
    /// Also return classes with R₊ ≠ R₋ (and R₊ or R₋ zero).
    pub unbalanced: bool,
    pub method: Method,
}

impl ClassifyOptions {
    pub fn balanced(r_max: usize) -> Self {
        ClassifyOptions {
            r_max,
            unbalanced: false,
            method: Method::Simplex,
        }
    }
}

/// Balanced classes with `1 ≤ R₊ = R₋ ≤ r_max`, sorted by (r, U, D).
pub fn classify(rs: &RootSystem, r_max: usize) -> Result<Vec<ParabolicClass>> {
    classify_with(rs, ClassifyOptions::balanced(r_max))
}

/// Classification with explicit options. Output is sorted by
/// (degree, R₊, U, D), which for balanced output is (r, U, D).
pub fn classify_with(rs: &RootSystem, opts: ClassifyOptions) -> Result<Vec<ParabolicClass>> {
    let poset = rs.noncompact_poset();
    let filters = enumerate_filters(&poset, opts.r_max);
    let ideals = enumerate_ideals(&poset, opts.r_max);
    let mut pairs: Vec<(&Vec<usize>, &Vec<usize>)> = Vec::new();
    for f in &filters {
        for i in &ideals {
            let keep = if opts.unbalanced {
                !(f.is_empty() && i.is_empty())
            } else {
                f.len() == i.len() && !f.is_empty()
            };
            if keep && disjoint(f, i) {
                pairs.push((f, i));
            }
        }
    }
    let found: Vec<Option<ParabolicClass>> = pairs
        .par_iter()
        .map(|(f, i)| solve_pair(rs, &poset, f, i, opts.method))
        .collect::<Result<_>>()?;
    let mut out: Vec<(Vec<usize>, Vec<usize>, ParabolicClass)> = pairs
        .iter()
        .zip(found)
        .filter_map(|((f, i), c)| c.map(|c| ((*f).clone(), (*i).clone(), c)))
        .collect();
    out.sort_by(|a, b| {
        (a.2.degree(), a.2.r_plus(), &a.0, &a.1).cmp(&(b.2.degree(), b.2.r_plus(), &b.0, &b.1))
    });
    Ok(out.into_iter().map(|x| x.2).collect())
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_err())
}

/// The constraint system in fundamental-weight coordinates for a candidate
/// (U, D), given as sets of positive noncompact roots.
pub fn pair_system(rs: &RootSystem, u: &[Root], d: &[Root]) -> ConstraintSystem {
    use crate::exactla::Sign;
    let mut sys = ConstraintSystem::new(rs.rank());
    for a in rs.noncompact_positive() {
        let row = rs.pairing_row(&a);
        if u.contains(&a) {
            sys = sys.strict(row, Sign::Pos);
        } else if d.contains(&a) {
            sys = sys.strict(row, Sign::Neg);
        } else {
            sys = sys.equality(row);
        }
    }
    for k in rs.compact_nodes() {
        let mut e = vec![Q::zero(); rs.rank()];
        e[k] = Q::one();
        sys = sys.weak(e);
    }
    sys
}

fn solve_pair(
    rs: &RootSystem,
    poset: &NoncompactPoset,
    f: &[usize],
    i: &[usize],
    method: Method,
) -> Result<Option<ParabolicClass>> {
    let u: Vec<Root> = f.iter().map(|&k| poset.nodes[k].clone()).collect();
    let d: Vec<Root> = i.iter().map(|&k| poset.nodes[k].clone()).collect();
    let sys = pair_system(rs, &u, &d);
    match feasible_strict_with(&sys, method)? {
        Feasibility::Infeasible => Ok(None),
        Feasibility::Feasible(w) => Ok(Some(ParabolicClass {
            u,
            d,
            witness: DominantVector::from_bigints(&w),
        })),
    }
}

/// N(r) for `r = 1..=r_max` (index 0 holds N(1)).
pub fn counts(rs: &RootSystem, r_max: usize) -> Result<Vec<usize>> {
    let classes = classify(rs, r_max)?;
    let mut n = vec![0; r_max];
    for c in &classes {
        n[c.r_plus() - 1] += 1;
    }
    Ok(n)
}

/// Number of balanced classes of Hodge type (r, r).
pub fn n_of_r(rs: &RootSystem, r: usize) -> Result<usize> {
    if r == 0 {
        return Ok(0);
    }
    Ok(classify(rs, r)?.iter().filter(|c| c.r_plus() == r).count())
}

/// Least r ≥ 1 with N(r) ≥ 1, or `None` when there is none.
pub fn r_zero(rs: &RootSystem) -> Result<Option<usize>> {
    let total = rs.noncompact_positive().len();
    for r in 1..=total / 2 {
        if n_of_r(rs, r)? > 0 {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Reduced word (0-based node indices, in application order) for the longest
/// element of the compact Weyl group, by greedy descent from ρ_k.
pub fn longest_compact_word(rs: &RootSystem) -> Vec<usize> {
    let compact = rs.compact_nodes();
    let mut c: Vec<i64> = (0..rs.rank())
        .map(|i| if i == rs.nc_index() { 0 } else { 1 })
        .collect();
    let mut word = Vec::new();
    while let Some(&i) = compact.iter().find(|&&i| c[i] > 0) {
        let ci = c[i];
        for (j, cj) in c.iter_mut().enumerate() {
            *cj -= ci * rs.cartan()[i][j];
        }
        word.push(i);
    }
    word
}

/// Applies the simple reflections of `word`, in order, to λ.
pub fn apply_word(rs: &RootSystem, word: &[usize], lambda: &DominantVector) -> DominantVector {
    let mut c = lambda.fw.clone();
    for &i in word {
        let ci = c[i].clone();
        if ci.is_zero() {
            continue;
        }
        for (j, cj) in c.iter_mut().enumerate() {
            *cj -= &ci * q(rs.cartan()[i][j]);
        }
    }
    DominantVector::new(c)
}

/// ι(λ) = −w₀^k(λ).
pub fn iota(rs: &RootSystem, lambda: &DominantVector) -> DominantVector {
    let w = apply_word(rs, &longest_compact_word(rs), lambda);
    DominantVector::new(w.fw.into_iter().map(|x| -x).collect())
}

/// The class of ι(witness); its Hodge type is the swap of the input's.
pub fn iota_dual(rs: &RootSystem, cls: &ParabolicClass) -> Result<ParabolicClass> {
    hodge_of_lambda(rs, &iota(rs, &cls.witness))
}

/// JSON form of a class.
#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub family: String,
    pub r_plus: usize,
    pub r_minus: usize,
    #[serde(rename = "U")]
    pub u: Vec<Root>,
    #[serde(rename = "D")]
    pub d: Vec<Root>,
    pub witness_fw: Vec<String>,
    pub witness_epsilon: String,
}

pub fn class_record(rs: &RootSystem, cls: &ParabolicClass) -> ClassRecord {
    ClassRecord {
        family: rs.family().to_string(),
        r_plus: cls.r_plus(),
        r_minus: cls.r_minus(),
        u: cls.u.clone(),
        d: cls.d.clone(),
        witness_fw: cls.witness.fw_strings(),
        witness_epsilon: rs.display_weight(&cls.witness),
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
    fn zero_weight_is_the_whole_algebra() {
        let rs = fam("e6-3");
        let c = hodge_of_lambda(&rs, &DominantVector::zero(6)).unwrap();
        assert_eq!((c.r_plus(), c.r_minus()), (0, 0));
    }

    #[test]
    fn non_dominant_weight_is_rejected() {
        let rs = fam("sp(4)");
        let l = rs.parse_weight("e2-e1").unwrap();
        assert_eq!(
            hodge_of_lambda(&rs, &l).unwrap_err(),
            Error::NotKDominant { node: 1 }
        );
    }

    #[test]
    fn ci_and_diii_extreme_weight() {
        for n in 3..8 {
            let rs = fam(&format!("sp({n})"));
            let c = hodge_of_lambda(&rs, &rs.parse_weight(&format!("e1-e{n}")).unwrap()).unwrap();
            assert_eq!((c.r_plus(), c.r_minus()), (n - 1, n - 1));
        }
        for n in 4..9 {
            let rs = fam(&format!("so*({})", 2 * n));
            let c = hodge_of_lambda(&rs, &rs.parse_weight(&format!("e1-e{n}")).unwrap()).unwrap();
            assert_eq!((c.r_plus(), c.r_minus()), (n - 2, n - 2));
        }
    }

    #[test]
    fn longest_word_length_is_compact_root_count() {
        for s in [
            "su(3,4)", "so(2,7)", "so(2,8)", "sp(5)", "so*(12)", "e6-3", "e7-7",
        ] {
            let rs = fam(s);
            assert_eq!(
                longest_compact_word(&rs).len(),
                rs.compact_positive().len(),
                "{s}"
            );
        }
    }

    #[test]
    fn iota_swaps_full_filter() {
        let rs = fam("so*(10)");
        let all = rs.noncompact_positive();
        let mut l = vec![0i64; rs.rank()];
        l[rs.nc_index()] = 1;
        let c = hodge_of_lambda(&rs, &DominantVector::from_ints(&l)).unwrap();
        assert_eq!(c.u, all);
        let dual = iota_dual(&rs, &c).unwrap();
        assert!(dual.u.is_empty());
        assert_eq!(dual.d, all);
    }

    #[test]
    fn ci4_counts() {
        let rs = fam("sp(4)");
        assert_eq!(counts(&rs, 3).unwrap(), vec![0, 0, 2]);
    }
}
