//! Oracles that share no code with the library's solvers.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use hermsym::rootsys::{build, RootSystem};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type R = BigRational;

pub fn r(n: i64) -> R {
    R::from_integer(BigInt::from(n))
}

pub fn rs(name: &str) -> RootSystem {
    build(name.parse().unwrap()).unwrap()
}

fn dot(a: &[R], b: &[R]) -> R {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Basis of {x : rows·x = 0} by plain Gauss–Jordan.
pub fn kernel(rows: &[Vec<R>], dim: usize) -> Vec<Vec<R>> {
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..dim {
                    let d = &f * &m[row][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = vec![R::zero(); dim];
        v[free] = R::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Is there x with eq·x = 0, pos·x > 0 and weak·x ≥ 0?
///
/// The cone {eq = 0, pos ≥ 0, weak ≥ 0} splits as its lineality space plus a
/// pointed cone spanned by extreme rays. A strict point exists iff each row
/// of `pos` is positive on some extreme ray.
pub fn strictly_feasible(eq: &[Vec<R>], pos: &[Vec<R>], weak: &[Vec<R>], dim: usize) -> bool {
    if pos.is_empty() {
        return true;
    }
    let all: Vec<Vec<R>> = eq.iter().chain(pos).chain(weak).cloned().collect();
    let lineality = kernel(&all, dim);
    let mut cut: Vec<Vec<R>> = eq.to_vec();
    cut.extend(lineality);
    let basis = kernel(&cut, dim);
    let m = basis.len();
    if m == 0 {
        return false;
    }
    let project = |row: &Vec<R>| basis.iter().map(|b| dot(row, b)).collect::<Vec<R>>();
    let ineq: Vec<Vec<R>> = pos.iter().chain(weak).map(project).collect();
    let mut rays: Vec<Vec<R>> = Vec::new();
    for t in subsets(ineq.len(), m - 1) {
        let tight: Vec<Vec<R>> = t.iter().map(|&i| ineq[i].clone()).collect();
        let k = kernel(&tight, m);
        if k.len() != 1 {
            continue;
        }
        for sgn in [1, -1] {
            let v: Vec<R> = k[0].iter().map(|x| x * r(sgn)).collect();
            if ineq.iter().all(|row| !dot(row, &v).is_negative()) {
                rays.push(v);
            }
        }
    }
    pos.iter()
        .map(project)
        .all(|row| rays.iter().any(|v| dot(&row, v).is_positive()))
}

/// Every sign pattern on Φ⁺_n that some k-dominant λ realizes, as (U, D)
/// index sets into `noncompact_positive()`. The all-zero pattern is dropped.
pub fn brute_force_patterns(rs: &RootSystem) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let nc = rs.noncompact_positive();
    let n = rs.rank();
    let rows: Vec<Vec<R>> = nc
        .iter()
        .map(|a| {
            rs.pairing_row(a)
                .into_iter()
                .map(|x| R::new(x.numer().clone(), x.denom().clone()))
                .collect()
        })
        .collect();
    let weak: Vec<Vec<R>> = rs
        .compact_nodes()
        .into_iter()
        .map(|k| (0..n).map(|j| if j == k { r(1) } else { r(0) }).collect())
        .collect();
    let total = 3usize.pow(nc.len() as u32);
    let mut out = BTreeSet::new();
    for code in 1..total {
        let mut c = code;
        let (mut u, mut d, mut eq, mut pos) = (vec![], vec![], vec![], vec![]);
        for (i, row) in rows.iter().enumerate() {
            match c % 3 {
                0 => eq.push(row.clone()),
                1 => {
                    u.push(i);
                    pos.push(row.clone());
                }
                _ => {
                    d.push(i);
                    pos.push(row.iter().map(|x| -x).collect());
                }
            }
            c /= 3;
        }
        if strictly_feasible(&eq, &pos, &weak, n) {
            out.insert((u, d));
        }
    }
    out
}

/// Number of antichains of a poset given by its order relation, memoized on
/// the candidate set.
pub fn antichain_count(n: usize, leq: impl Fn(usize, usize) -> bool) -> u128 {
    assert!(n <= 64);
    let comparable: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| leq(i, j) || leq(j, i))
                .fold(0u64, |m, j| m | (1 << j))
        })
        .collect();
    fn go(cand: u64, comparable: &[u64], memo: &mut HashMap<u64, u128>) -> u128 {
        if cand == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&cand) {
            return v;
        }
        let i = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << i);
        let v = go(rest, comparable, memo) + go(rest & !comparable[i], comparable, memo);
        memo.insert(cand, v);
        v
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(all, &comparable, &mut HashMap::new())
}

/// Cover pairs (lower, upper) of componentwise dominance on coefficient vectors.
pub fn dominance_covers(nodes: &[Vec<i64>]) -> BTreeSet<(usize, usize)> {
    let le = |a: &Vec<i64>, b: &Vec<i64>| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut out = BTreeSet::new();
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate() {
            if i == j || !le(a, b) {
                continue;
            }
            let between = nodes
                .iter()
                .enumerate()
                .any(|(k, c)| k != i && k != j && le(a, c) && le(c, b));
            if !between {
                out.insert((i, j));
            }
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// χ of the compact dual of each family, from closed forms.
pub fn closed_form_euler(name: &str) -> u128 {
    use hermsym::rootsys::HermitianFamily::*;
    match name.parse().unwrap() {
        AIII { p, q } => binomial((p + q) as u64, p as u64),
        BDI { p } => (if p % 2 == 0 { p + 2 } else { p + 1 }) as u128,
        CI { n } => 1u128 << n,
        DIII { n } => 1u128 << (n - 1),
        EIII => 27,
        EVII => 56,
    }
}
