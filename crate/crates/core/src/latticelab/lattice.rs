//! Full-rank ℤ₍ₚ₎-lattices in canonical (p-adapted Hermite) form.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, Q};
use crate::chevalley::LinearOperator;
use crate::error::{Error, Result};
use crate::highestweight::HighestWeightModule;
use crate::rootsystem::Weight;

/// A lattice in a module, held by its unique canonical basis: row `i` has
/// zeros before column `i`, pivot `p^{k_i}` at column `i`, and every entry
/// above a pivot lies in `ℤ[1/p] ∩ [0, p^{k_i})`.
#[derive(Clone)]
pub struct PLattice {
    module: Arc<HighestWeightModule>,
    p: u32,
    basis: Vec<Vec<Q>>,
    /// `(a, b)` with `p^a M ⊇ L ⊇ p^b M` for the reference lattice `M` this
    /// lattice was enumerated from.
    pub window: Option<(i64, i64)>,
}

impl fmt::Debug for PLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self.basis.iter().map(|r| r.iter().map(arith::format_q).collect()).collect();
        f.debug_struct("PLattice").field("p", &self.p).field("basis", &rows).finish()
    }
}

impl PartialEq for PLattice {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.basis == other.basis
    }
}

impl Eq for PLattice {}

impl PartialOrd for PLattice {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PLattice {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p.cmp(&other.p).then_with(|| self.basis.cmp(&other.basis))
    }
}

/// Canonical basis of the ℤ₍ₚ₎-span of `gens`; errors unless full rank.
pub fn canonical_basis(p: u32, dim: usize, gens: Vec<Vec<Q>>) -> Result<Vec<Vec<Q>>> {
    let mut pool: Vec<Vec<Q>> = gens.into_iter().filter(|g| g.iter().any(|x| !x.is_zero())).collect();
    if pool.iter().any(|g| g.len() != dim) {
        return Err(Error::Validation(format!("generator length differs from dimension {dim}")));
    }
    let mut out: Vec<Vec<Q>> = Vec::with_capacity(dim);
    let mut exps = Vec::with_capacity(dim);
    for col in 0..dim {
        let pick = pool
            .iter()
            .enumerate()
            .filter_map(|(i, g)| arith::valuation(&g[col], p).map(|v| (v, i)))
            .min();
        let Some((v, idx)) = pick else {
            return Err(Error::Validation("generators do not span a full-rank lattice".into()));
        };
        let mut row = pool.swap_remove(idx);
        let scale = arith::p_power(p, v) / &row[col];
        for x in row.iter_mut() {
            *x *= &scale;
        }
        let pivot = row[col].clone();
        for g in pool.iter_mut() {
            if !g[col].is_zero() {
                let f = &g[col] / &pivot;
                for (x, r) in g.iter_mut().zip(&row) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        pool.retain(|g| g.iter().any(|x| !x.is_zero()));
        out.push(row);
        exps.push(v);
    }
    for i in 0..dim {
        let pivot = out[i][i].clone();
        for r in 0..i {
            let x = out[r][i].clone();
            if x.is_zero() {
                continue;
            }
            let rep = arith::residue_mod_power(&x, p, exps[i]);
            if rep == x {
                continue;
            }
            let f = (x - rep) / &pivot;
            let (head, tail) = out.split_at_mut(i);
            for (a, b) in head[r].iter_mut().zip(&tail[0]) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
    }
    Ok(out)
}

impl PLattice {
    pub fn from_generators(module: Arc<HighestWeightModule>, p: u32, gens: Vec<Vec<Q>>) -> Result<Self> {
        let basis = canonical_basis(p, module.dim(), gens)?;
        Ok(Self { module, p, basis, window: None })
    }

    /// ℤ₍ₚ₎-span of the module's own basis.
    pub fn standard(module: Arc<HighestWeightModule>, p: u32) -> Self {
        let n = module.dim();
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        Self { module, p, basis, window: None }
    }

    pub fn module(&self) -> &Arc<HighestWeightModule> {
        &self.module
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    /// `p^k · L`.
    pub fn scaled(&self, k: i64) -> PLattice {
        let s = arith::p_power(self.p, k);
        let gens = self.basis.iter().map(|r| r.iter().map(|x| x * &s).collect()).collect();
        PLattice::from_generators(self.module.clone(), self.p, gens).expect("scaling keeps full rank")
    }

    /// `L + ℤ₍ₚ₎ v₁ + …`.
    pub fn with_vectors(&self, extra: impl IntoIterator<Item = Vec<Q>>) -> Result<PLattice> {
        let mut gens = self.basis.clone();
        gens.extend(extra);
        PLattice::from_generators(self.module.clone(), self.p, gens)
    }

    /// Coordinates of `v` in the canonical basis.
    pub fn coordinates(&self, v: &[Q]) -> Vec<Q> {
        let mut rest = v.to_vec();
        let mut coords = vec![Q::zero(); self.dim()];
        for (i, row) in self.basis.iter().enumerate() {
            if rest[i].is_zero() {
                continue;
            }
            let c = &rest[i] / &row[i];
            for (x, r) in rest.iter_mut().zip(row).skip(i) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
            coords[i] = c;
        }
        coords
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coordinates(v).iter().all(|c| arith::is_p_integral(c, self.p))
    }

    pub fn is_sublattice_of(&self, other: &PLattice) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Index of the first basis vector `b` with `op·b ∉ L`.
    pub fn first_escape(&self, op: &LinearOperator) -> Option<usize> {
        self.basis.iter().position(|b| !self.contains(&op.apply(b)))
    }

    /// Weights of the basis vectors, when each one is a weight vector.
    pub fn basis_weights(&self) -> Option<Vec<Weight>> {
        let w = self.module.weights();
        self.basis
            .iter()
            .map(|row| {
                let mut support = row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, _)| &w[j]);
                let first = support.next()?.clone();
                support.all(|x| *x == first).then_some(first)
            })
            .collect()
    }

    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            p: self.p,
            dim: self.dim(),
            basis: self.basis.iter().map(|r| r.iter().map(arith::format_q).collect()).collect(),
        }
    }

    pub fn from_json(module: Arc<HighestWeightModule>, json: &LatticeJson) -> Result<Self> {
        if json.dim != module.dim() {
            return Err(Error::Validation("lattice dimension differs from module".into()));
        }
        let gens = json
            .basis
            .iter()
            .map(|r| r.iter().map(|s| arith::parse_q(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PLattice::from_generators(module, json.p, gens)
    }
}

/// Serialized lattice: canonical basis rows as `"a/b"` strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeJson {
    pub p: u32,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, q_frac};

    #[test]
    fn canonical_form_is_hermite_like() {
        // span of (3, 1/2), (0, 9) over ℤ₍₃₎
        let b = canonical_basis(3, 2, vec![vec![q(3), q_frac(1, 2)], vec![q(0), q(9)]]).unwrap();
        assert_eq!(b[0][0], q(3));
        assert_eq!(b[1], vec![q(0), q(9)]);
        // 1/2 · (unit 1/... ) scaled: row0 = (3, 1/2)*1 → entry reduced mod 9
        let x = &b[0][1];
        assert!(*x >= q(0) && *x < q(9));
        assert!(x.is_integer());
    }

    #[test]
    fn canonical_form_ignores_generator_order_and_units() {
        let g1 = vec![vec![q(1), q(2), q(0)], vec![q(0), q_frac(1, 3), q(1)], vec![q(0), q(0), q(3)]];
        let mut g2: Vec<Vec<Q>> = g1.iter().rev().map(|r| r.iter().map(|x| x * q_frac(-2, 5)).collect()).collect();
        g2.push(vec![q(1), q(2), q(3)]);
        assert_eq!(canonical_basis(3, 3, g1).unwrap(), canonical_basis(3, 3, g2).unwrap());
    }

    #[test]
    fn rank_deficient_generators_rejected() {
        assert!(canonical_basis(2, 2, vec![vec![q(1), q(1)], vec![q(2), q(2)]]).is_err());
    }
}
