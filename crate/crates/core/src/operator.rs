//! Sparse exact-rational linear operators.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::Q;

/// Square operator on ℚ^dim acting on column vectors; entries stored per
/// row as `(column, value)` pairs sorted by column, zeros omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    dim: usize,
    rows: Vec<Vec<(usize, Q)>>,
}

impl LinearOperator {
    pub fn zero(dim: usize) -> Self {
        Self { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self { dim, rows: (0..dim).map(|i| vec![(i, Q::one())]).collect() }
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = ((usize, usize), Q)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); dim];
        for ((r, c), v) in entries {
            assert!(r < dim && c < dim, "entry ({r},{c}) outside dimension {dim}");
            let e = acc[r].entry(c).or_insert_with(Q::zero);
            *e += v;
        }
        let rows = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Self { dim, rows }
    }

    pub fn from_dense(m: &[Vec<Q>]) -> Self {
        let dim = m.len();
        Self::from_entries(
            dim,
            m.iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| ((i, j), v.clone()))),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.rows[r]
            .binary_search_by_key(&c, |(j, _)| *j)
            .map(|k| self.rows[r][k].1.clone())
            .unwrap_or_else(|_| Q::zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut m = vec![vec![Q::zero(); self.dim]; self.dim];
        for (i, j, v) in self.entries() {
            m[i][j] = v.clone();
        }
        m
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(j, _)| !v[*j].is_zero())
                    .fold(Q::zero(), |acc, (j, a)| acc + a * &v[*j])
            })
            .collect()
    }

    /// Column `c`, i.e. the image of the `c`-th basis vector.
    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.dim).map(|r| self.get(r, c)).collect()
    }

    /// Matrix product `self ∘ other`.
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        let mut entries = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                }
            }
            entries.extend(acc.into_iter().map(|(j, v)| ((i, j), v)));
        }
        LinearOperator::from_entries(self.dim, entries)
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        LinearOperator::from_entries(
            self.dim,
            self.entries()
                .chain(other.entries())
                .map(|(i, j, v)| ((i, j), v.clone())),
        )
    }

    pub fn scale(&self, s: &Q) -> LinearOperator {
        LinearOperator::from_entries(self.dim, self.entries().map(|(i, j, v)| ((i, j), v * s)))
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn commutator(&self, other: &LinearOperator) -> LinearOperator {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn transpose(&self) -> LinearOperator {
        LinearOperator::from_entries(self.dim, self.entries().map(|(i, j, v)| ((j, i), v.clone())))
    }

    pub fn trace(&self) -> Q {
        (0..self.dim).fold(Q::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn compose_and_commutator() {
        // sl2 standard rep
        let e = LinearOperator::from_entries(2, [((0, 1), q(1))]);
        let f = LinearOperator::from_entries(2, [((1, 0), q(1))]);
        let h = LinearOperator::from_entries(2, [((0, 0), q(1)), ((1, 1), q(-1))]);
        assert_eq!(e.commutator(&f), h);
        assert!(e.compose(&e).is_zero());
        assert_eq!(h.trace(), q(0));
        assert_eq!(e.transpose(), f);
        assert_eq!(e.apply(&[q(3), q(4)]), vec![q(4), q(0)]);
        assert_eq!(e.column(1), vec![q(1), q(0)]);
    }
}
