//! Divided powers, the minimal admissible lattice, and reduction mod p.

use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{self, Q};
use crate::chevalley::{Generator, LinearOperator};
use crate::error::{Error, Result};
use crate::fp::FpMatrix;
use crate::highestweight::{verma_weight_spaces, HighestWeightModule};
use crate::latticelab::PLattice;
use crate::rootsystem::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Raise,
    Lower,
}

/// `e_α^{(k)}` and `f_α^{(k)}` for every positive root α and every
/// `1 ≤ k <` nilpotency degree.
#[derive(Clone, Debug)]
pub struct DividedPowerSet {
    /// Indexed `[root][k - 1]`.
    pub raise: Vec<Vec<LinearOperator>>,
    pub lower: Vec<Vec<LinearOperator>>,
}

impl DividedPowerSet {
    /// `x_α^{(k)}`, zero past the nilpotency degree; `k = 0` is the identity.
    pub fn get(&self, dir: Direction, root: usize, k: usize) -> Option<&LinearOperator> {
        let table = match dir {
            Direction::Raise => &self.raise,
            Direction::Lower => &self.lower,
        };
        if k == 0 {
            return None;
        }
        table[root].get(k - 1)
    }

    pub fn nilpotency_degree(&self, dir: Direction, root: usize) -> usize {
        match dir {
            Direction::Raise => self.raise[root].len() + 1,
            Direction::Lower => self.lower[root].len() + 1,
        }
    }

    /// Every nonzero divided power with a printable name.
    pub fn named(&self) -> Vec<(String, &LinearOperator)> {
        let mut out = Vec::new();
        for (dir, table) in [("e", &self.raise), ("f", &self.lower)] {
            for (r, powers) in table.iter().enumerate() {
                for (k, op) in powers.iter().enumerate() {
                    out.push((format!("{dir}{}^({})", r + 1, k + 1), op));
                }
            }
        }
        out
    }
}

fn powers(a: &LinearOperator) -> Vec<LinearOperator> {
    let mut out = Vec::new();
    let mut cur = a.clone();
    let mut k = 1i64;
    let mut fact = Q::from_integer(1.into());
    while !cur.is_zero() {
        fact *= arith::q(k);
        out.push(cur.scale(&fact.recip()));
        cur = cur.compose(a);
        k += 1;
    }
    out
}

pub fn divided_powers(m: &HighestWeightModule) -> DividedPowerSet {
    let npos = m.algebra().num_positive();
    DividedPowerSet {
        raise: (0..npos).map(|k| powers(m.action_of(Generator::E(k)))).collect(),
        lower: (0..npos).map(|k| powers(m.action_of(Generator::F(k)))).collect(),
    }
}

/// A highest-weight vector of a simple module.
pub fn highest_weight_vector(m: &HighestWeightModule) -> Result<(Weight, Vec<Q>)> {
    let hw = m.decompose()?;
    if hw.len() != 1 {
        return Err(Error::Validation(format!("module is not simple (highest weights {hw:?})")));
    }
    let lambda = hw[0].clone();
    let v = m.maximal_vectors(&lambda).pop().expect("simple module has a maximal vector");
    Ok((lambda, v))
}

/// ℤ₍ₚ₎-span of `f_{β₁}^{(a₁)}···f_{β_N}^{(a_N)} v` over all PBW exponents.
pub fn minimal_admissible_lattice(m: &Arc<HighestWeightModule>, p: u32) -> Result<PLattice> {
    let (lambda, v) = highest_weight_vector(m)?;
    let rs = m.root_system();
    let spaces = verma_weight_spaces(rs, &lambda, rs.module_depth(&lambda))?;
    let dp = m.divided_powers();
    let mut gens = Vec::new();
    for monos in spaces.values() {
        for mono in monos {
            let mut w = v.clone();
            for (k, &a) in mono.iter().enumerate().rev() {
                if a == 0 {
                    continue;
                }
                match dp.get(Direction::Lower, k, a as usize) {
                    Some(op) => w = op.apply(&w),
                    None => {
                        w = vec![Q::zero(); w.len()];
                        break;
                    }
                }
            }
            if w.iter().any(|x| !x.is_zero()) {
                gens.push(w);
            }
        }
    }
    PLattice::from_generators(m.clone(), p, gens)
}

/// Reduction of a lattice's operators to 𝔽ₚ, written in the lattice's
/// canonical basis.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModpModule {
    pub p: u32,
    pub dim: usize,
    /// Names of the Chevalley generators, aligned with `generators`.
    pub names: Vec<String>,
    pub generators: Vec<FpMatrix>,
    /// `(name, matrix)` for every nonzero divided power over ℚ.
    pub divided: Vec<(String, FpMatrix)>,
    /// Weight of each basis vector when the basis consists of weight vectors.
    pub weights: Option<Vec<Weight>>,
}

impl ModpModule {
    /// Basis indices grouped by weight.
    pub fn weight_blocks(&self) -> Option<Vec<Vec<usize>>> {
        let w = self.weights.as_ref()?;
        let mut blocks: std::collections::BTreeMap<&Weight, Vec<usize>> = Default::default();
        for (i, x) in w.iter().enumerate() {
            blocks.entry(x).or_default().push(i);
        }
        Some(blocks.into_values().collect())
    }

    pub fn generator(&self, name: &str) -> Option<&FpMatrix> {
        self.names.iter().position(|n| n == name).map(|i| &self.generators[i])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mats = |ms: Vec<(&String, &FpMatrix)>| -> serde_json::Map<String, serde_json::Value> {
            ms.into_iter()
                .map(|(n, m)| {
                    let rows: Vec<Vec<u32>> = m.data.chunks(m.n.max(1)).map(<[u32]>::to_vec).collect();
                    (n.clone(), serde_json::json!(rows))
                })
                .collect()
        };
        serde_json::json!({
            "p": self.p,
            "dim": self.dim,
            "generators": mats(self.names.iter().zip(&self.generators).collect()),
            "divided_powers": mats(self.divided.iter().map(|(n, m)| (n, m)).collect()),
            "weights": self.weights.as_ref().map(|w| w.iter().map(|x| x.0.clone()).collect::<Vec<_>>()),
        })
    }
}

fn reduce_operator(l: &PLattice, op: &LinearOperator, name: &str) -> Result<FpMatrix> {
    let p = l.p();
    let n = l.dim();
    let mut out = FpMatrix::zero(p, n);
    for (j, b) in l.basis().iter().enumerate() {
        let coords = l.coordinates(&op.apply(b));
        for (i, c) in coords.iter().enumerate() {
            match arith::reduce_mod_p(c, p) {
                Some(v) => out.set(i, j, v),
                None => return Err(Error::NotIntegral { operator: name.to_string() }),
            }
        }
    }
    Ok(out)
}

/// Reduces every Chevalley generator and divided power of the module to
/// 𝔽ₚ in the canonical basis of `l`. Fails if some operator does not
/// preserve `l`.
pub fn reduce_mod_p(l: &PLattice) -> Result<ModpModule> {
    let m = l.module();
    let cb = m.algebra();
    let mut names = Vec::new();
    let mut generators = Vec::new();
    for x in 0..cb.dim() {
        let name = cb.name(x);
        generators.push(reduce_operator(l, m.action(x), &name)?);
        names.push(name);
    }
    let mut divided = Vec::new();
    for (name, op) in m.divided_powers().named() {
        divided.push((name.clone(), reduce_operator(l, op, &name)?));
    }
    Ok(ModpModule { p: l.p(), dim: l.dim(), names, generators, divided, weights: l.basis_weights() })
}
