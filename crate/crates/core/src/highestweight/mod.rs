//! Finite-dimensional modules over the Chevalley ℤ-form, realized over ℚ
//! in a weight basis.

mod freudenthal;
mod verma;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, Q};
use crate::chevalley::{ensure_same, ChevalleyBasis, Generator, LinearOperator};
use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};
use crate::zform::DividedPowerSet;

pub use freudenthal::{freudenthal_mult, FreudenthalTable};
pub use verma::{simple_module, simple_module_capped, verma_weight_spaces, Monomial, DEFAULT_DIM_CAP};

/// Weight → indices of the basis vectors spanning that weight space.
pub type WeightDecomposition = BTreeMap<Weight, Vec<usize>>;

/// A module given by exact action matrices of every Chevalley basis
/// element, in a basis of weight vectors.
#[derive(Debug)]
pub struct HighestWeightModule {
    cb: Arc<ChevalleyBasis>,
    weights: Vec<Weight>,
    action: Vec<LinearOperator>,
    highest_weights: OnceLock<Vec<Weight>>,
    divided: OnceLock<DividedPowerSet>,
}

impl Clone for HighestWeightModule {
    fn clone(&self) -> Self {
        Self {
            cb: self.cb.clone(),
            weights: self.weights.clone(),
            action: self.action.clone(),
            highest_weights: self.highest_weights.clone(),
            divided: OnceLock::new(),
        }
    }
}

impl HighestWeightModule {
    /// Builds a module from action matrices indexed like the Chevalley
    /// basis. Weights are read off the diagonal torus action; root vectors
    /// must shift weights by their root.
    pub fn from_action(cb: Arc<ChevalleyBasis>, action: Vec<LinearOperator>) -> Result<Self> {
        if action.len() != cb.dim() {
            return Err(Error::Validation(format!(
                "expected {} action matrices, got {}",
                cb.dim(),
                action.len()
            )));
        }
        let dim = action.first().map_or(0, LinearOperator::dim);
        if action.iter().any(|a| a.dim() != dim) {
            return Err(Error::Validation("action matrices differ in size".into()));
        }
        let rank = cb.rs.rank();
        let npos = cb.num_positive();
        let mut weights = vec![Weight::zero(rank); dim];
        for i in 0..rank {
            let h = &action[2 * npos + i];
            if !h.is_diagonal() {
                return Err(Error::NonDiagonalizable(format!("h{} has off-diagonal entries", i + 1)));
            }
            for (b, w) in weights.iter_mut().enumerate() {
                let v = h.get(b, b);
                if !v.is_integer() {
                    return Err(Error::NonDiagonalizable(format!("h{} eigenvalue {v} is not integral", i + 1)));
                }
                w.0[i] = num_traits::ToPrimitive::to_i64(&v.to_integer()).unwrap();
            }
        }
        for x in 0..2 * npos {
            let shift = cb.basis_weight(x);
            for (r, c, _) in action[x].entries() {
                if weights[r] != weights[c].add(&shift) {
                    return Err(Error::Validation(format!(
                        "{} maps weight {} to weight {}",
                        cb.name(x),
                        weights[c],
                        weights[r]
                    )));
                }
            }
        }
        Ok(Self { cb, weights, action, highest_weights: OnceLock::new(), divided: OnceLock::new() })
    }

    /// Like [`from_action`](Self::from_action), additionally verifying the
    /// bracket relations on every generator pair.
    pub fn from_action_checked(cb: Arc<ChevalleyBasis>, action: Vec<LinearOperator>) -> Result<Self> {
        let m = Self::from_action(cb, action)?;
        if let Some((x, y)) = m.homomorphism_violation() {
            return Err(Error::Validation(format!(
                "[ρ({}), ρ({})] ≠ ρ([{}, {}])",
                m.cb.name(x),
                m.cb.name(y),
                m.cb.name(x),
                m.cb.name(y)
            )));
        }
        Ok(m)
    }

    pub fn trivial(cb: Arc<ChevalleyBasis>) -> Self {
        let action = vec![LinearOperator::zero(1); cb.dim()];
        Self::from_action(cb, action).expect("trivial module is valid")
    }

    pub fn algebra(&self) -> &Arc<ChevalleyBasis> {
        &self.cb
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.cb.rs
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// `(weight, index within its weight space)` per basis vector.
    pub fn basis_labels(&self) -> Vec<(Weight, usize)> {
        let mut seen: HashMap<&Weight, usize> = HashMap::new();
        self.weights
            .iter()
            .map(|w| {
                let k = seen.entry(w).or_insert(0);
                *k += 1;
                (w.clone(), *k - 1)
            })
            .collect()
    }

    pub fn action(&self, idx: usize) -> &LinearOperator {
        &self.action[idx]
    }

    pub fn actions(&self) -> &[LinearOperator] {
        &self.action
    }

    pub fn action_of(&self, g: Generator) -> &LinearOperator {
        &self.action[self.cb.index_of(g)]
    }

    /// Divided powers, computed once per module.
    pub fn divided_powers(&self) -> &DividedPowerSet {
        self.divided.get_or_init(|| crate::zform::divided_powers(self))
    }

    /// First generator pair `(x, y)` with `[ρ(x), ρ(y)] ≠ ρ([x, y])`.
    pub fn homomorphism_violation(&self) -> Option<(usize, usize)> {
        let dim = self.cb.dim();
        for x in 0..dim {
            for y in x + 1..dim {
                let lhs = self.action[x].commutator(&self.action[y]);
                let mut rhs = LinearOperator::zero(self.dim());
                for (&k, &c) in &self.cb.bracket_of(x, y).0 {
                    rhs = rhs.add(&self.action[k].scale(&arith::q(c)));
                }
                if lhs != rhs {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn weight_decomposition(&self) -> WeightDecomposition {
        let mut out: WeightDecomposition = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    /// Vectors of weight μ killed by every raising operator.
    pub fn maximal_vectors(&self, mu: &Weight) -> Vec<Vec<Q>> {
        let idx: Vec<usize> = (0..self.dim()).filter(|&i| &self.weights[i] == mu).collect();
        if idx.is_empty() {
            return vec![];
        }
        let mut rows = Vec::new();
        for k in 0..self.cb.num_positive() {
            let e = self.action_of(Generator::E(k));
            for r in 0..self.dim() {
                let row: Vec<Q> = idx.iter().map(|&c| e.get(r, c)).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        arith::kernel(&rows, idx.len())
            .into_iter()
            .map(|k| {
                let mut v = vec![Q::zero(); self.dim()];
                for (c, x) in idx.iter().zip(k) {
                    v[*c] = x;
                }
                v
            })
            .collect()
    }

    /// Highest weights of the simple summands (with multiplicity), sorted.
    pub fn decompose(&self) -> Result<Vec<Weight>> {
        if let Some(h) = self.highest_weights.get() {
            return Ok(h.clone());
        }
        let mut out = Vec::new();
        for mu in self.weight_decomposition().keys() {
            let k = self.maximal_vectors(mu).len();
            if k > 0 && !self.cb.rs.is_dominant(mu) {
                return Err(Error::Internal(format!("maximal vector of non-dominant weight {mu}")));
            }
            out.extend(std::iter::repeat_n(mu.clone(), k));
        }
        out.sort_by(|a, b| b.cmp(a));
        let _ = self.highest_weights.set(out.clone());
        Ok(out)
    }

    pub fn is_simple(&self) -> Result<bool> {
        Ok(self.decompose()?.len() == 1)
    }

    pub fn to_json(&self) -> ModuleJson {
        let action = (0..self.cb.dim())
            .map(|x| {
                let entries = self.action[x].entries().map(|(r, c, v)| (r, c, arith::format_q(v))).collect();
                (self.cb.name(x), entries)
            })
            .collect();
        ModuleJson {
            cartan_type: self.cb.rs.cartan_type.to_string(),
            rank: self.cb.rs.rank(),
            dim: self.dim(),
            weights: self.weights.iter().map(|w| w.0.clone()).collect(),
            highest_weights: self.highest_weights.get().map(|h| h.iter().map(|w| w.0.clone()).collect()),
            action,
        }
    }

    pub fn from_json(cb: Arc<ChevalleyBasis>, json: &ModuleJson) -> Result<Self> {
        if json.cartan_type != cb.rs.cartan_type.to_string() {
            return Err(Error::MismatchedAlgebra);
        }
        let mut action = Vec::with_capacity(cb.dim());
        for x in 0..cb.dim() {
            let name = cb.name(x);
            let entries = json.action.get(&name).cloned().unwrap_or_default();
            let mut parsed = Vec::with_capacity(entries.len());
            for (r, c, v) in entries {
                if r >= json.dim || c >= json.dim {
                    return Err(Error::Validation(format!("entry ({r},{c}) of {name} out of range")));
                }
                parsed.push(((r, c), arith::parse_q(&v)?));
            }
            action.push(LinearOperator::from_entries(json.dim, parsed));
        }
        Self::from_action_checked(cb, action)
    }
}

/// Serialized module: dimension, weight labels and sparse action matrices
/// with rationals as `"a/b"` strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModuleJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub dim: usize,
    pub weights: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub highest_weights: Option<Vec<Vec<i64>>>,
    pub action: BTreeMap<String, Vec<(usize, usize, String)>>,
}

pub fn tensor(a: &HighestWeightModule, b: &HighestWeightModule) -> Result<HighestWeightModule> {
    ensure_same(&a.cb, &b.cb)?;
    let (da, db) = (a.dim(), b.dim());
    let action = (0..a.cb.dim())
        .map(|x| {
            let left = a.action[x]
                .entries()
                .flat_map(|(r, c, v)| (0..db).map(move |j| ((r * db + j, c * db + j), v.clone())));
            let right = b.action[x]
                .entries()
                .flat_map(|(r, c, v)| (0..da).map(move |i| ((i * db + r, i * db + c), v.clone())));
            LinearOperator::from_entries(da * db, left.chain(right))
        })
        .collect();
    HighestWeightModule::from_action(a.cb.clone(), action)
}

pub fn direct_sum(a: &HighestWeightModule, b: &HighestWeightModule) -> Result<HighestWeightModule> {
    ensure_same(&a.cb, &b.cb)?;
    let da = a.dim();
    let action = (0..a.cb.dim())
        .map(|x| {
            let left = a.action[x].entries().map(|(r, c, v)| ((r, c), v.clone()));
            let right = b.action[x].entries().map(|(r, c, v)| ((da + r, da + c), v.clone()));
            LinearOperator::from_entries(da + b.dim(), left.chain(right))
        })
        .collect();
    HighestWeightModule::from_action(a.cb.clone(), action)
}

pub fn dual(m: &HighestWeightModule) -> Result<HighestWeightModule> {
    let minus = -Q::one();
    let action = m.action.iter().map(|a| a.transpose().scale(&minus)).collect();
    HighestWeightModule::from_action(m.cb.clone(), action)
}

/// Non-decreasing index tuples of length `k` over `0..n`, lexicographic.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// k-th symmetric power; basis = monomials in the basis of `m`, ordered
/// lexicographically by sorted index tuple (so `x^k` comes first).
pub fn sym_power(m: &HighestWeightModule, k: usize) -> Result<HighestWeightModule> {
    let basis = multisets(m.dim(), k);
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let dim = basis.len();
    let action = m
        .action
        .iter()
        .map(|a| {
            let mut entries = Vec::new();
            for (col, mono) in basis.iter().enumerate() {
                // derivation: Σ over distinct factors i with exponent a_i
                let mut distinct: Vec<(usize, i64)> = Vec::new();
                for &i in mono {
                    match distinct.last_mut() {
                        Some((j, c)) if *j == i => *c += 1,
                        _ => distinct.push((i, 1)),
                    }
                }
                for &(i, mult) in &distinct {
                    for r in 0..m.dim() {
                        let v = a.get(r, i);
                        if v.is_zero() {
                            continue;
                        }
                        let mut new = mono.clone();
                        let pos = new.iter().position(|&x| x == i).unwrap();
                        new[pos] = r;
                        new.sort_unstable();
                        entries.push(((index[&new], col), v * arith::q(mult)));
                    }
                }
            }
            LinearOperator::from_entries(dim, entries)
        })
        .collect();
    HighestWeightModule::from_action(m.cb.clone(), action)
}

#[cfg(test)]
mod tests;
