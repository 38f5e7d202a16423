//! Split root data for the classical types and G₂.
//!
//! Roots are integer vectors in the simple-root basis, weights integer
//! vectors in the fundamental-weight basis. The Cartan matrix follows the
//! convention `cartan[i][j] = ⟨α_j, α_i∨⟩`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, Q};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" => Ok(Family::G),
            other => Err(Error::Validation(format!("unsupported Cartan family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=4).contains(&rank),
            Family::B | Family::C => (2..=3).contains(&rank),
            Family::D => (3..=4).contains(&rank),
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::Validation(format!("type {family}{rank} is not supported")))
        }
    }

    /// Every supported type, in a fixed order.
    pub fn all_supported() -> Vec<CartanType> {
        let mut out = Vec::new();
        for r in 1..=4 {
            out.push(CartanType { family: Family::A, rank: r });
        }
        for f in [Family::B, Family::C] {
            for r in 2..=3 {
                out.push(CartanType { family: f, rank: r });
            }
        }
        for r in 3..=4 {
            out.push(CartanType { family: Family::D, rank: r });
        }
        out.push(CartanType { family: Family::G, rank: 2 });
        out
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G => 6,
        }
    }

    /// Gram matrix of the simple roots, scaled so short roots have
    /// squared length 2.
    fn symmetric_form(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut b = vec![vec![0i64; n]; n];
        match self.family {
            Family::A | Family::D => {
                for i in 0..n {
                    b[i][i] = 2;
                }
                let chain = if self.family == Family::D { n - 1 } else { n };
                for i in 0..chain.saturating_sub(1) {
                    b[i][i + 1] = -1;
                    b[i + 1][i] = -1;
                }
                if self.family == Family::D {
                    b[n - 3][n - 1] = -1;
                    b[n - 1][n - 3] = -1;
                }
            }
            Family::B => {
                for i in 0..n {
                    b[i][i] = if i == n - 1 { 2 } else { 4 };
                }
                for i in 0..n - 1 {
                    b[i][i + 1] = -2;
                    b[i + 1][i] = -2;
                }
            }
            Family::C => {
                for i in 0..n {
                    b[i][i] = if i == n - 1 { 4 } else { 2 };
                }
                for i in 0..n - 1 {
                    let v = if i == n - 2 { -2 } else { -1 };
                    b[i][i + 1] = v;
                    b[i + 1][i] = v;
                }
            }
            Family::G => {
                b = vec![vec![2, -3], vec![-3, 6]];
            }
        }
        b
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Positive roots first (canonical order), then their negatives in the
    /// same order.
    pub roots: Vec<Root>,
    pub positive_roots: Vec<Root>,
    form: Vec<Vec<i64>>,
    index: HashMap<Root, usize>,
}

/// Canonical order: height ascending, then coordinates in descending
/// lexicographic order (so simple roots appear as α₁, α₂, …).
fn root_order(a: &Root, b: &Root) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
}

pub fn build_root_system(t: CartanType) -> Result<RootSystem> {
    let t = CartanType::new(t.family, t.rank)?;
    let n = t.rank;
    let form = t.symmetric_form();
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * form[i][j] / form[i][i]).collect())
        .collect();

    let simple: Vec<Root> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            Root(v)
        })
        .collect();
    let mut all: BTreeSet<Root> = simple.iter().cloned().collect();
    let mut frontier: Vec<Root> = simple.clone();
    while let Some(r) = frontier.pop() {
        for i in 0..n {
            let s = reflect_root(&cartan, &r, i);
            if all.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    let mut positive: Vec<Root> = all.iter().filter(|r| r.is_positive()).cloned().collect();
    positive.sort_by(root_order);
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(Root::neg));
    if roots.len() != all.len() {
        return Err(Error::Internal("root closure produced mixed-sign vectors".into()));
    }
    let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    Ok(RootSystem { cartan_type: t, cartan_matrix: cartan, roots, positive_roots: positive, form, index })
}

fn reflect_root(cartan: &[Vec<i64>], r: &Root, i: usize) -> Root {
    let pairing: i64 = (0..r.0.len()).map(|j| r.0[j] * cartan[i][j]).sum();
    let mut v = r.0.clone();
    v[i] -= pairing;
    Root(v)
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index into `roots` (positive roots first).
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// `⟨w, α_i∨⟩` with a 1-based coroot index.
    pub fn pairing(&self, w: &Weight, i: usize) -> Result<i64> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, max: self.rank() });
        }
        Ok(w.0[i - 1])
    }

    /// `(α, β)` in the normalized invariant form on the root lattice.
    pub fn root_inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        s
    }

    /// Fundamental-weight coordinates of a root-lattice element.
    pub fn root_to_weight(&self, r: &[i64]) -> Weight {
        let n = self.rank();
        Weight((0..n).map(|i| (0..n).map(|j| self.cartan_matrix[i][j] * r[j]).sum()).collect())
    }

    /// Root-lattice coordinates of a weight (rational in general).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Q> {
        let c: Vec<Vec<Q>> = self
            .cartan_matrix
            .iter()
            .map(|row| row.iter().map(|&x| arith::q(x)).collect())
            .collect();
        let inv = arith::inverse(&c).expect("Cartan matrix is invertible");
        let wv: Vec<Q> = w.0.iter().map(|&x| arith::q(x)).collect();
        arith::mat_vec(&inv, &wv)
    }

    /// Invariant form on weights, extended from the root lattice.
    pub fn weight_inner(&self, a: &Weight, b: &Weight) -> Q {
        let x = self.weight_to_root_coords(a);
        let y = self.weight_to_root_coords(b);
        let n = self.rank();
        let mut s = Q::from_integer(0.into());
        for i in 0..n {
            for j in 0..n {
                s += &x[i] * &y[j] * arith::q(self.form[i][j]);
            }
        }
        s
    }

    /// Coroot `α∨` in simple-coroot coordinates.
    pub fn coroot_coords(&self, r: &Root) -> Vec<i64> {
        let len = self.root_inner(&r.0, &r.0);
        (0..self.rank()).map(|i| r.0[i] * self.form[i][i] / len).collect()
    }

    /// `⟨w, α∨⟩` for an arbitrary root α.
    pub fn coroot_pairing(&self, w: &Weight, r: &Root) -> i64 {
        self.coroot_coords(r).iter().zip(&w.0).map(|(c, x)| c * x).sum()
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.0.iter().all(|&c| c >= 0)
    }

    /// Simple reflection of a weight.
    pub fn reflect_weight(&self, w: &Weight, i: usize) -> Weight {
        let alpha = self.root_to_weight(&self.positive_roots[i].0);
        w.sub(&alpha.scale(w.0[i]))
    }

    /// Dominant representative of the Weyl orbit.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            w = self.reflect_weight(&w, i);
        }
        w
    }

    /// Whether `λ − μ` is a nonnegative integer combination of simple roots.
    pub fn dominates(&self, lambda: &Weight, mu: &Weight) -> bool {
        let d = self.weight_to_root_coords(&lambda.sub(mu));
        d.iter().all(|x| x.is_integer() && *x >= arith::q(0))
    }

    /// Whether μ is a weight of the simple module of highest weight λ.
    pub fn is_weight_of(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.dominates(lambda, mu) && self.dominates(lambda, &self.dominant_conjugate(mu))
    }

    /// Height of `λ − w₀λ`, i.e. the lowering depth of the simple module.
    pub fn module_depth(&self, lambda: &Weight) -> usize {
        self.positive_roots.iter().map(|a| self.coroot_pairing(lambda, a)).sum::<i64>() as usize
    }

    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let shifted = lambda.add(&self.rho());
        let rho = self.rho();
        let mut num = num_bigint::BigInt::from(1);
        let mut den = num_bigint::BigInt::from(1);
        for a in &self.positive_roots {
            num *= self.coroot_pairing(&shifted, a);
            den *= self.coroot_pairing(&rho, a);
        }
        let d = num / den;
        u64::try_from(d).map_err(|_| Error::Internal("dimension overflow".into()))
    }
}
