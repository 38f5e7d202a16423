//! Dense linear algebra over a small prime field 𝔽ₚ.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub fn inv(a: u32, p: u32) -> u32 {
    let (mut r, mut b, mut e) = (1u64, a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Square matrix over 𝔽ₚ acting on column vectors, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpMatrix {
    pub p: u32,
    pub n: usize,
    pub data: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(p: u32, n: usize) -> Self {
        Self { p, n, data: vec![0; n * n] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zero(p, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.n + j] = v % self.p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        (0..self.n)
            .map(|i| {
                let row = &self.data[i * self.n..(i + 1) * self.n];
                (row.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p) as u32
            })
            .collect()
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        let n = self.n;
        let p = self.p as u64;
        let mut out = FpMatrix::zero(self.p, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] = ((out.data[idx] as u64 + a * other.data[k * n + j] as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        let p = self.p;
        FpMatrix {
            p,
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| (a + p - b) % p).collect(),
        }
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &FpMatrix) -> FpMatrix {
        self.mul(other).sub(&other.mul(self))
    }
}

/// A subspace of 𝔽ₚⁿ held in reduced row-echelon form; equality of
/// subspaces is equality of this form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    pub p: u32,
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, n: usize) -> Self {
        Self { p, n, rows: vec![], pivots: vec![] }
    }

    pub fn whole(p: u32, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        Self { p, n, rows, pivots: (0..n).collect() }
    }

    pub fn span(p: u32, n: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut s = Self::zero(p, n);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the echelon rows; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &mut [u32]) {
        let p = self.p;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + (p - f) * r) % p;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        let p = self.p;
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(v[c], p);
        for x in v.iter_mut() {
            *x = (*x * s) % p;
        }
        for row in self.rows.iter_mut() {
            let f = row[c];
            if f != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = (*x + (p - f) * r) % p;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < c);
        self.rows.insert(at, v);
        self.pivots.insert(at, c);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn is_invariant_under(&self, m: &FpMatrix) -> bool {
        self.rows.iter().all(|r| self.contains(&m.apply(r)))
    }

    /// Whether `S = ⊕ (S ∩ W_b)` for the coordinate blocks `W_b`.
    pub fn is_block_homogeneous(&self, blocks: &[Vec<usize>]) -> bool {
        self.rows.iter().all(|r| {
            blocks.iter().all(|b| {
                let mut proj = vec![0u32; self.n];
                for &i in b {
                    proj[i] = r[i];
                }
                self.contains(&proj)
            })
        })
    }
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let qb = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= num_traits::pow(qb.clone(), n - i) - BigUint::one();
        den *= num_traits::pow(qb.clone(), i + 1) - BigUint::one();
    }
    num / den
}

/// Number of subspaces of 𝔽_q^n.
pub fn subspace_count(n: usize, q: u32) -> BigUint {
    (0..=n).map(|k| gaussian_binomial(n, k, q)).sum()
}

/// Visits every `k`-dimensional subspace of 𝔽ₚⁿ with pivot columns
/// `pivots`, in lexicographic order of the free entries.
pub fn for_each_with_pivots(p: u32, n: usize, pivots: &[usize], mut f: impl FnMut(&Subspace)) {
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    // free positions: (row, col) with col > pivot(row), col not a pivot
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &c)| ((c + 1)..n).filter(|j| !pivot_set.contains(j)).map(move |j| (r, j)))
        .collect();
    let mut rows: Vec<Vec<u32>> = pivots
        .iter()
        .map(|&c| {
            let mut v = vec![0u32; n];
            v[c] = 1;
            v
        })
        .collect();
    let mut digits = vec![0u32; free.len()];
    let mut s = Subspace { p, n, rows: rows.clone(), pivots: pivots.to_vec() };
    loop {
        for (&(r, c), &d) in free.iter().zip(&digits) {
            rows[r][c] = d;
        }
        s.rows.clone_from(&rows);
        f(&s);
        // odometer increment
        let mut i = digits.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// All pivot patterns (k-subsets of 0..n) for every k, in (k, lex) order.
pub fn pivot_patterns(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..=n {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            out.push(comb.clone());
            let mut i = k;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if comb[i] < n - k + i {
                    comb[i] += 1;
                    for j in i + 1..k {
                        comb[j] = comb[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    out
}
