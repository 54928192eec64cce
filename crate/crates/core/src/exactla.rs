//! Exact rational linear algebra and strict feasibility for homogeneous
//! constraint systems.
//!
//! Everything here works over [`BigRational`]. There is no floating point
//! anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational.
pub type Q = BigRational;

/// Largest reduced dimension handed to Fourier–Motzkin.
pub const FM_MAX_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("row {row} has length {len}, expected {expected}")]
    DimensionMismatch {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("Fourier-Motzkin is capped at {max} variables, system has {dim}")]
    TooManyVariables { dim: usize, max: usize },
    #[error("feasibility routes disagree (simplex: {simplex}, fourier-motzkin: {fm})")]
    RoutesDisagree { simplex: bool, fm: bool },
    #[error("witness failed to satisfy its own system")]
    BadWitness,
}

/// Shorthand for an integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Dense rows × cols matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Q>]) -> Result<Self, LinAlgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    row: i,
                    len: r.len(),
                    expected: cols,
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self, LinAlgError> {
        let rows: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        Self::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(
            v.len(),
            self.cols,
            "vector length does not match column count"
        );
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Q::one());
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Basis of `{x : eqs·x = 0}`, returned as the columns of a `cols × nullity`
/// matrix.
pub fn nullspace(eqs: &RationalMatrix) -> RationalMatrix {
    let (r, pivots) = eqs.rref();
    let n = eqs.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = RationalMatrix::zeros(n, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, Q::one());
        for (i, &p) in pivots.iter().enumerate() {
            basis.set(p, k, -r.get(i, f).clone());
        }
    }
    basis
}

/// Scales a nonzero rational vector by a positive factor so it becomes a
/// primitive integer vector. The zero vector maps to zeros.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

/// Homogeneous constraints on `x ∈ Q^dim`.
///
/// `equalities`: `a·x = 0`; `strict`: `sign·(a·x) > 0`; `weak`: `a·x ≥ 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub dim: usize,
    pub equalities: Vec<Vec<Q>>,
    pub strict: Vec<(Vec<Q>, Sign)>,
    pub weak: Vec<Vec<Q>>,
}

impl ConstraintSystem {
    pub fn new(dim: usize) -> Self {
        ConstraintSystem {
            dim,
            ..Default::default()
        }
    }

    pub fn equality(mut self, row: Vec<Q>) -> Self {
        self.equalities.push(row);
        self
    }

    pub fn strict(mut self, row: Vec<Q>, sign: Sign) -> Self {
        self.strict.push((row, sign));
        self
    }

    pub fn weak(mut self, row: Vec<Q>) -> Self {
        self.weak.push(row);
        self
    }

    pub fn validate(&self) -> Result<(), LinAlgError> {
        let rows = self
            .equalities
            .iter()
            .chain(self.strict.iter().map(|(r, _)| r))
            .chain(self.weak.iter());
        for (i, r) in rows.enumerate() {
            if r.len() != self.dim {
                return Err(LinAlgError::DimensionMismatch {
                    row: i,
                    len: r.len(),
                    expected: self.dim,
                });
            }
        }
        Ok(())
    }

    /// Exact substitution check.
    pub fn is_satisfied_by(&self, x: &[Q]) -> bool {
        self.equalities.iter().all(|a| dot(a, x).is_zero())
            && self.strict.iter().all(|(a, s)| {
                let v = dot(a, x);
                match s {
                    Sign::Pos => v.is_positive(),
                    Sign::Neg => v.is_negative(),
                }
            })
            && self.weak.iter().all(|a| !dot(a, x).is_negative())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// Primitive integer witness.
    Feasible(Vec<BigInt>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[BigInt]> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Simplex,
    FourierMotzkin,
    /// Runs both routes and fails if they disagree. Falls back to simplex
    /// alone when the reduced dimension exceeds [`FM_MAX_DIM`].
    Both,
}

/// Decides strict feasibility with the simplex route.
///
/// The witness is the vertex of least L1 norm after normalizing strict rows
/// to `a·x ≥ 1`, found with Bland's rule, then scaled to a primitive integer
/// vector. With no strict rows the zero vector is returned, except when the
/// system has no constraints at all, where the first nullspace direction is
/// used.
pub fn feasible_strict(sys: &ConstraintSystem) -> Result<Feasibility, LinAlgError> {
    feasible_strict_with(sys, Method::Simplex)
}

pub fn feasible_strict_with(
    sys: &ConstraintSystem,
    method: Method,
) -> Result<Feasibility, LinAlgError> {
    sys.validate()?;
    let red = Reduced::new(sys);
    let out = match method {
        Method::Simplex => red.simplex(),
        Method::FourierMotzkin => {
            if red.k() > FM_MAX_DIM {
                return Err(LinAlgError::TooManyVariables {
                    dim: red.k(),
                    max: FM_MAX_DIM,
                });
            }
            red.fourier_motzkin()
        }
        Method::Both => {
            let s = red.simplex();
            if red.k() <= FM_MAX_DIM {
                let f = red.fourier_motzkin();
                if s.is_some() != f.is_some() {
                    return Err(LinAlgError::RoutesDisagree {
                        simplex: s.is_some(),
                        fm: f.is_some(),
                    });
                }
                if let Some(fx) = &f {
                    if !sys.is_satisfied_by(&red.lift(fx)) {
                        return Err(LinAlgError::BadWitness);
                    }
                }
            }
            s
        }
    };
    match out {
        None => Ok(Feasibility::Infeasible),
        Some(y) => {
            let x = red.lift(&y);
            if !sys.is_satisfied_by(&x) {
                return Err(LinAlgError::BadWitness);
            }
            Ok(Feasibility::Feasible(primitive(&x)))
        }
    }
}

/// The system restricted to the nullspace of its equalities.
struct Reduced {
    dim: usize,
    basis: RationalMatrix,
    strict: Vec<Vec<Q>>,
    weak: Vec<Vec<Q>>,
}

impl Reduced {
    fn new(sys: &ConstraintSystem) -> Self {
        let eqs = RationalMatrix::from_rows(sys.dim, &sys.equalities).expect("validated");
        let basis = nullspace(&eqs);
        let restrict = |a: &[Q]| -> Vec<Q> {
            (0..basis.cols())
                .map(|j| dot(a, &basis.column(j)))
                .collect()
        };
        let strict = sys
            .strict
            .iter()
            .map(|(a, s)| {
                let r = restrict(a);
                match s {
                    Sign::Pos => r,
                    Sign::Neg => r.into_iter().map(|x| -x).collect(),
                }
            })
            .collect();
        let weak = sys.weak.iter().map(|a| restrict(a)).collect();
        Reduced {
            dim: sys.dim,
            basis,
            strict,
            weak,
        }
    }

    fn k(&self) -> usize {
        self.basis.cols()
    }

    fn lift(&self, y: &[Q]) -> Vec<Q> {
        self.basis.mul_vec(y)
    }

    fn simplex(&self) -> Option<Vec<Q>> {
        let k = self.k();
        if self.strict.is_empty() {
            let mut y = vec![Q::zero(); k];
            if self.weak.is_empty() && k > 0 {
                y[0] = Q::one();
            }
            return Some(y);
        }
        if k == 0 {
            return None;
        }
        // Variables (y, t); minimize Σ t with t ≥ |B y| componentwise.
        let n = k + self.dim;
        let mut rows: Vec<(Vec<Q>, Q)> = Vec::new();
        for a in &self.strict {
            rows.push((pad(a, n), Q::one()));
        }
        for a in &self.weak {
            rows.push((pad(a, n), Q::zero()));
        }
        for i in 0..self.dim {
            let bi = self.basis.row(i);
            let mut plus = vec![Q::zero(); n];
            let mut minus = vec![Q::zero(); n];
            for j in 0..k {
                plus[j] = -bi[j].clone();
                minus[j] = bi[j].clone();
            }
            plus[k + i] = Q::one();
            minus[k + i] = Q::one();
            rows.push((plus, Q::zero()));
            rows.push((minus, Q::zero()));
        }
        let mut obj = vec![Q::zero(); n];
        for c in obj.iter_mut().skip(k) {
            *c = Q::one();
        }
        match lp_min_free(&rows, &obj) {
            LpOutcome::Optimal(z) => Some(z[..k].to_vec()),
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("objective is bounded below by zero"),
        }
    }

    fn fourier_motzkin(&self) -> Option<Vec<Q>> {
        fm_homogeneous(self.k(), &self.strict, &self.weak)
    }
}

fn pad(a: &[Q], n: usize) -> Vec<Q> {
    let mut v = a.to_vec();
    v.resize(n, Q::zero());
    v
}

#[derive(Debug)]
enum LpOutcome {
    Optimal(Vec<Q>),
    Infeasible,
    Unbounded,
}

/// Minimizes `obj·z` subject to `a·z ≥ rhs` for each row, `z` free.
fn lp_min_free(rows: &[(Vec<Q>, Q)], obj: &[Q]) -> LpOutcome {
    let n = obj.len();
    let m = rows.len();
    // Columns: z+ (n), z- (n), surplus (m).
    let ncols = 2 * n + m;
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for (i, (row, rhs)) in rows.iter().enumerate() {
        let mut r = vec![Q::zero(); ncols];
        for j in 0..n {
            r[j] = row[j].clone();
            r[n + j] = -row[j].clone();
        }
        r[2 * n + i] = -Q::one();
        let mut rhs = rhs.clone();
        if rhs.is_negative() {
            for x in r.iter_mut() {
                *x = -x.clone();
            }
            rhs = -rhs;
        }
        a.push(r);
        b.push(rhs);
    }
    let mut cost = vec![Q::zero(); ncols];
    for j in 0..n {
        cost[j] = obj[j].clone();
        cost[n + j] = -obj[j].clone();
    }
    match simplex_standard(a, b, &cost) {
        LpOutcome::Optimal(z) => LpOutcome::Optimal((0..n).map(|j| &z[j] - &z[n + j]).collect()),
        other => other,
    }
}

/// Two-phase dense simplex with Bland's rule on
/// `min cost·z, A z = b, z ≥ 0, b ≥ 0`.
fn simplex_standard(a: Vec<Vec<Q>>, b: Vec<Q>, cost: &[Q]) -> LpOutcome {
    let m = a.len();
    let n = cost.len();
    let mut t = Tableau {
        a,
        b,
        basis: (n..n + m).collect(),
    };
    for row in t.a.iter_mut() {
        row.extend((0..m).map(|_| Q::zero()));
    }
    for i in 0..m {
        t.a[i][n + i] = Q::one();
    }
    let mut phase1 = vec![Q::zero(); n + m];
    for c in phase1.iter_mut().skip(n) {
        *c = Q::one();
    }
    if !t.optimize(&phase1, n + m) {
        unreachable!("phase one is bounded");
    }
    if t.b
        .iter()
        .zip(&t.basis)
        .any(|(v, &j)| j >= n && v.is_positive())
    {
        return LpOutcome::Infeasible;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.a.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.a[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.a.remove(i);
                    t.b.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in t.a.iter_mut() {
        row.truncate(n);
    }
    if !t.optimize(cost, n) {
        return LpOutcome::Unbounded;
    }
    let mut z = vec![Q::zero(); n];
    for (i, &j) in t.basis.iter().enumerate() {
        z[j] = t.b[i].clone();
    }
    LpOutcome::Optimal(z)
}

struct Tableau {
    a: Vec<Vec<Q>>,
    b: Vec<Q>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.a[r][c].recip();
        for x in self.a[r].iter_mut() {
            *x *= &inv;
        }
        self.b[r] *= &inv;
        let prow = self.a[r].clone();
        let pb = self.b[r].clone();
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = self.a[i][c].clone();
            for (x, p) in self.a[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.b[i] -= &f * &pb;
        }
        self.basis[r] = c;
    }

    /// Returns false when unbounded. Only columns `< ncols` may enter.
    fn optimize(&mut self, cost: &[Q], ncols: usize) -> bool {
        loop {
            let entering = (0..ncols).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (i, &bj) in self.basis.iter().enumerate() {
                    if !self.a[i][j].is_zero() {
                        d -= &cost[bj] * &self.a[i][j];
                    }
                }
                d.is_negative()
            });
            let Some(c) = entering else { return true };
            let mut best: Option<(usize, Q)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.b[i] / &self.a[i][c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else { return false };
            self.pivot(r, c);
        }
    }
}

/// Strict/weak homogeneous Fourier–Motzkin elimination. Rows in `strict`
/// mean `a·y > 0`, rows in `weak` mean `a·y ≥ 0`. Returns a witness by back
/// substitution, or `None` when infeasible.
fn fm_homogeneous(k: usize, strict: &[Vec<Q>], weak: &[Vec<Q>]) -> Option<Vec<Q>> {
    let mut rows: BTreeMap<Vec<BigInt>, bool> = BTreeMap::new();
    for (a, s) in strict
        .iter()
        .map(|a| (a, true))
        .chain(weak.iter().map(|a| (a, false)))
    {
        if !insert_row(&mut rows, primitive(a), s) {
            return None;
        }
    }
    let mut stages: Vec<Vec<(Vec<BigInt>, bool)>> = vec![rows.clone().into_iter().collect()];
    for v in (0..k).rev() {
        let cur = stages.last().unwrap();
        let mut next: BTreeMap<Vec<BigInt>, bool> = BTreeMap::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (r, s) in cur {
            if r[v].is_positive() {
                pos.push((r, *s));
            } else if r[v].is_negative() {
                neg.push((r, *s));
            } else if !insert_row(&mut next, r.clone(), *s) {
                return None;
            }
        }
        for (p, ps) in &pos {
            for (n, ns) in &neg {
                let cp = -n[v].clone();
                let cn = p[v].clone();
                let comb: Vec<BigInt> = p
                    .iter()
                    .zip(n.iter())
                    .map(|(x, y)| &cp * x + &cn * y)
                    .collect();
                let comb = primitive_int(comb);
                if !insert_row(&mut next, comb, *ps || *ns) {
                    return None;
                }
            }
        }
        stages.push(next.into_iter().collect());
    }
    // Back substitution: x_0 from the last stage that mentions it, and so on.
    let mut x: Vec<Q> = Vec::with_capacity(k);
    for v in 0..k {
        let stage = &stages[k - 1 - v];
        let mut lower: Option<(Q, bool)> = None;
        let mut upper: Option<(Q, bool)> = None;
        for (r, s) in stage {
            let c = Q::from_integer(r[v].clone());
            if c.is_zero() {
                continue;
            }
            let rest = (0..v).fold(Q::zero(), |acc, u| {
                acc + Q::from_integer(r[u].clone()) * &x[u]
            });
            let bound = -rest / &c;
            if c.is_positive() {
                lower = Some(tighter(lower, bound, *s, true));
            } else {
                upper = Some(tighter(upper, bound, *s, false));
            }
        }
        let val = match (lower, upper) {
            (Some((l, _)), Some((u, _))) if l < u => (l + u) / q(2),
            (Some((l, _)), Some(_)) => l,
            (Some((l, _)), None) => l + Q::one(),
            (None, Some((u, _))) => u - Q::one(),
            (None, None) => Q::zero(),
        };
        x.push(val);
    }
    Some(x)
}

fn tighter(cur: Option<(Q, bool)>, b: Q, strict: bool, is_lower: bool) -> (Q, bool) {
    match cur {
        None => (b, strict),
        Some((c, cs)) => {
            if c == b {
                (c, cs || strict)
            } else if (c < b) == is_lower {
                (b, strict)
            } else {
                (c, cs)
            }
        }
    }
}

fn primitive_int(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Returns false when the row is `0 > 0`.
fn insert_row(rows: &mut BTreeMap<Vec<BigInt>, bool>, r: Vec<BigInt>, strict: bool) -> bool {
    if r.iter().all(|x| x.is_zero()) {
        return !strict;
    }
    let e = rows.entry(r).or_insert(false);
    *e |= strict;
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        assert_eq!(nullspace(&RationalMatrix::identity(4)).cols(), 0);
    }

    #[test]
    fn zero_row_has_full_nullspace() {
        let z = RationalMatrix::zeros(1, 5);
        let n = nullspace(&z);
        assert_eq!((n.rows(), n.cols()), (5, 5));
        assert_eq!(n.rank(), 5);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = RationalMatrix::from_i64_rows(4, &[vec![1, 2, 0, -1], vec![2, 4, 1, 0]]).unwrap();
        let n = nullspace(&m);
        assert_eq!(n.cols() + m.rank(), 4);
        for j in 0..n.cols() {
            assert!(m.mul_vec(&n.column(j)).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m =
            RationalMatrix::from_i64_rows(3, &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]])
                .unwrap();
        let inv = m.inverse().unwrap();
        for j in 0..3 {
            let col = m.mul_vec(&inv.column(j));
            for (i, x) in col.iter().enumerate() {
                assert_eq!(*x, if i == j { q(1) } else { q(0) });
            }
        }
        let singular = RationalMatrix::from_i64_rows(2, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn empty_system_gives_nonzero_witness() {
        let w = feasible_strict(&ConstraintSystem::new(3)).unwrap();
        let w = w.witness().unwrap();
        assert!(w.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn opposite_strict_rows_are_infeasible() {
        let sys = ConstraintSystem::new(1)
            .strict(qv(&[1]), Sign::Pos)
            .strict(qv(&[1]), Sign::Neg);
        for m in [Method::Simplex, Method::FourierMotzkin, Method::Both] {
            assert_eq!(
                feasible_strict_with(&sys, m).unwrap(),
                Feasibility::Infeasible
            );
        }
    }

    #[test]
    fn witness_is_primitive_and_valid() {
        let sys = ConstraintSystem::new(3)
            .strict(qv(&[1, 0, 0]), Sign::Pos)
            .strict(qv(&[0, 1, -1]), Sign::Neg)
            .equality(qv(&[1, 1, -3]))
            .weak(qv(&[0, 1, 0]));
        for m in [Method::Simplex, Method::FourierMotzkin, Method::Both] {
            let f = feasible_strict_with(&sys, m).unwrap();
            let w: Vec<Q> = f
                .witness()
                .unwrap()
                .iter()
                .map(|x| Q::from_integer(x.clone()))
                .collect();
            assert!(sys.is_satisfied_by(&w));
        }
    }

    #[test]
    fn weak_only_cone_with_equality() {
        let sys = ConstraintSystem::new(2)
            .weak(qv(&[1, 0]))
            .weak(qv(&[-1, 0]))
            .strict(qv(&[0, 1]), Sign::Pos);
        let f = feasible_strict_with(&sys, Method::Both).unwrap();
        assert_eq!(
            f,
            Feasibility::Feasible(vec![BigInt::from(0), BigInt::from(1)])
        );
    }

    #[test]
    fn mismatched_row_is_an_error() {
        let sys = ConstraintSystem::new(2).weak(qv(&[1, 0, 0]));
        assert!(matches!(
            feasible_strict(&sys),
            Err(LinAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fm_cap_is_enforced() {
        let sys = ConstraintSystem::new(7).strict(qv(&[1, 0, 0, 0, 0, 0, 0]), Sign::Pos);
        assert!(matches!(
            feasible_strict_with(&sys, Method::FourierMotzkin),
            Err(LinAlgError::TooManyVariables { dim: 7, .. })
        ));
        assert!(feasible_strict_with(&sys, Method::Both)
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn least_l1_vertex() {
        // x > 0, y > 0, x + y ≥ 0 picks (1, 1).
        let sys = ConstraintSystem::new(2)
            .strict(qv(&[1, 0]), Sign::Pos)
            .strict(qv(&[0, 1]), Sign::Pos);
        let f = feasible_strict(&sys).unwrap();
        assert_eq!(f.witness().unwrap(), &[BigInt::from(1), BigInt::from(1)]);
    }
}
