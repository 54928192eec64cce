//! Finite posets given by an explicit order relation, with order-ideal and
//! filter enumeration.

/// A finite poset whose index order is a linear extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

impl Poset {
    /// Builds the poset from `leq(i, j)`. Panics if the index order is not a
    /// linear extension of the relation.
    pub fn new(n: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| leq(i, j)).collect())
            .collect();
        for i in 0..n {
            assert!(leq[i][i], "relation is not reflexive at {i}");
            for j in 0..n {
                assert!(
                    !(leq[i][j] && i > j),
                    "index order is not a linear extension ({j} < {i})"
                );
            }
        }
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && !(i + 1..j).any(|k| leq[i][k] && leq[k][j]) {
                    lower_covers[j].push(i);
                    upper_covers[i].push(j);
                }
            }
        }
        Poset {
            leq,
            lower_covers,
            upper_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, lows) in self.lower_covers.iter().enumerate() {
            for &i in lows {
                out.push((i, j));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower_covers[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper_covers[i].is_empty())
            .collect()
    }

    pub fn is_down_closed(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.len()];
        for &i in set {
            member[i] = true;
        }
        set.iter()
            .all(|&j| (0..self.len()).all(|i| !self.leq[i][j] || member[i]))
    }

    pub fn is_up_closed(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.len()];
        for &i in set {
            member[i] = true;
        }
        set.iter()
            .all(|&i| (0..self.len()).all(|j| !self.leq[i][j] || member[j]))
    }

    /// Down-closed subsets of size at most `max_size`, each as a sorted index
    /// list, ordered by (size, elements).
    pub fn ideals(&self, max_size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut member = vec![false; self.len()];
        let order: Vec<usize> = (0..self.len()).collect();
        self.grow(
            &order,
            0,
            max_size,
            &mut member,
            &mut Vec::new(),
            &mut out,
            true,
        );
        sort_sets(&mut out);
        out
    }

    /// Up-closed subsets of size at most `max_size`.
    pub fn filters(&self, max_size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut member = vec![false; self.len()];
        let order: Vec<usize> = (0..self.len()).rev().collect();
        self.grow(
            &order,
            0,
            max_size,
            &mut member,
            &mut Vec::new(),
            &mut out,
            false,
        );
        for f in out.iter_mut() {
            f.sort_unstable();
        }
        sort_sets(&mut out);
        out
    }

    /// Number of order ideals, counted without materializing them.
    pub fn count_ideals(&self) -> u128 {
        let mut member = vec![false; self.len()];
        self.count_from(0, &mut member)
    }

    /// Number of order ideals of each size `0..=len`.
    pub fn ideal_size_counts(&self) -> Vec<u128> {
        let mut counts = vec![0u128; self.len() + 1];
        let mut member = vec![false; self.len()];
        self.count_sizes(0, 0, &mut member, &mut counts);
        counts
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &self,
        order: &[usize],
        pos: usize,
        max_size: usize,
        member: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        down: bool,
    ) {
        if pos == order.len() {
            out.push(cur.clone());
            return;
        }
        let x = order[pos];
        self.grow(order, pos + 1, max_size, member, cur, out, down);
        let needs = if down {
            &self.lower_covers[x]
        } else {
            &self.upper_covers[x]
        };
        if cur.len() < max_size && needs.iter().all(|&y| member[y]) {
            member[x] = true;
            cur.push(x);
            self.grow(order, pos + 1, max_size, member, cur, out, down);
            cur.pop();
            member[x] = false;
        }
    }

    fn count_from(&self, pos: usize, member: &mut Vec<bool>) -> u128 {
        if pos == self.len() {
            return 1;
        }
        let mut total = self.count_from(pos + 1, member);
        if self.lower_covers[pos].iter().all(|&y| member[y]) {
            member[pos] = true;
            total += self.count_from(pos + 1, member);
            member[pos] = false;
        }
        total
    }

    fn count_sizes(&self, pos: usize, size: usize, member: &mut Vec<bool>, counts: &mut [u128]) {
        if pos == self.len() {
            counts[size] += 1;
            return;
        }
        self.count_sizes(pos + 1, size, member, counts);
        if self.lower_covers[pos].iter().all(|&y| member[y]) {
            member[pos] = true;
            self.count_sizes(pos + 1, size + 1, member, counts);
            member[pos] = false;
        }
    }
}

fn sort_sets(sets: &mut [Vec<usize>]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        Poset::new(n, |i, j| i <= j)
    }

    fn antichain(n: usize) -> Poset {
        Poset::new(n, |i, j| i == j)
    }

    #[test]
    fn chain_ideals() {
        let p = chain(4);
        assert_eq!(p.count_ideals(), 5);
        assert_eq!(p.ideals(2), vec![vec![], vec![0], vec![0, 1]]);
        assert_eq!(p.filters(2), vec![vec![], vec![3], vec![2, 3]]);
    }

    #[test]
    fn antichain_ideals_are_all_subsets() {
        let p = antichain(5);
        assert_eq!(p.count_ideals(), 32);
        assert_eq!(p.ideals(5).len(), 32);
        assert_eq!(p.ideal_size_counts(), vec![1, 5, 10, 10, 5, 1]);
    }

    #[test]
    fn zero_size_bound() {
        let p = chain(3);
        assert_eq!(p.ideals(0), vec![Vec::<usize>::new()]);
        assert_eq!(p.filters(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn covers_of_a_square() {
        // 0 < 1, 0 < 2, 1 < 3, 2 < 3
        let rel = [[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]];
        let p = Poset::new(4, |i, j| rel[i][j] == 1);
        assert_eq!(p.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(p.count_ideals(), 6);
        assert!(p.is_down_closed(&[0, 2]));
        assert!(!p.is_down_closed(&[1]));
        assert!(p.is_up_closed(&[1, 3]));
    }
}
