//! Simple modules as quotients of Verma modules by the radical of the
//! contravariant form.
//!
//! Verma vectors are integer combinations of PBW monomials
//! `f_{β₁}^{a₁}···f_{β_N}^{a_N} v` in the canonical positive-root order.
//! Generators act by commuting past the leading factor; the form on the
//! μ-weight space pairs `f`-monomials against the reversed `e`-monomials
//! and reads off the coefficient of `v`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::HighestWeightModule;
use crate::arith::{self, Q};
use crate::chevalley::{ChevalleyBasis, Generator, LinearOperator};
use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};

/// Exponent vector over the positive roots.
pub type Monomial = Vec<u32>;
type VermaVector = BTreeMap<Monomial, BigInt>;

pub const DEFAULT_DIM_CAP: usize = 64;

/// Weights of the simple module V(λ), each with the PBW monomials of the
/// Verma module in that weight (descending lexicographic on exponents).
pub fn verma_weight_spaces(rs: &RootSystem, lambda: &Weight, cutoff: usize) -> Result<BTreeMap<Weight, Vec<Monomial>>> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let needed = rs.module_depth(lambda);
    if cutoff < needed {
        return Err(Error::DepthOverflow { needed, cutoff });
    }
    let n = rs.rank();
    let simple: Vec<Weight> = (0..n).map(|i| rs.root_to_weight(&rs.positive_roots[i].0)).collect();
    let mut weights = BTreeMap::new();
    let mut frontier = vec![(lambda.clone(), vec![0i64; n])];
    weights.insert(lambda.clone(), vec![0i64; n]);
    while let Some((w, d)) = frontier.pop() {
        for i in 0..n {
            let next = w.sub(&simple[i]);
            if !weights.contains_key(&next) && rs.is_weight_of(lambda, &next) {
                let mut nd = d.clone();
                nd[i] += 1;
                weights.insert(next.clone(), nd.clone());
                frontier.push((next, nd));
            }
        }
    }
    let positive: Vec<Vec<i64>> = rs.positive_roots.iter().map(|r| r.0.clone()).collect();
    Ok(weights
        .into_iter()
        .map(|(w, d)| {
            let mut monos = Vec::new();
            partitions(&positive, 0, &mut d.clone(), &mut vec![0; positive.len()], &mut monos);
            monos.sort_by(|a, b| b.cmp(a));
            (w, monos)
        })
        .collect())
}

fn partitions(roots: &[Vec<i64>], k: usize, rest: &mut Vec<i64>, cur: &mut Monomial, out: &mut Vec<Monomial>) {
    if rest.iter().all(|&x| x == 0) {
        out.push(cur.clone());
        return;
    }
    if k == roots.len() {
        return;
    }
    // use root k zero or more times
    partitions(roots, k + 1, rest, cur, out);
    let mut used = 0;
    loop {
        if rest.iter().zip(&roots[k]).any(|(r, a)| r < a) {
            break;
        }
        for (r, a) in rest.iter_mut().zip(&roots[k]) {
            *r -= a;
        }
        used += 1;
        cur[k] += 1;
        partitions(roots, k + 1, rest, cur, out);
    }
    for (r, a) in rest.iter_mut().zip(&roots[k]) {
        *r += a * used;
    }
    cur[k] -= used as u32;
}

struct Verma<'a> {
    cb: &'a ChevalleyBasis,
    lambda: Weight,
    root_weights: Vec<Weight>,
    memo: HashMap<(usize, Monomial), VermaVector>,
}

impl<'a> Verma<'a> {
    fn new(cb: &'a ChevalleyBasis, lambda: Weight) -> Self {
        let rs = &cb.rs;
        let root_weights = rs.positive_roots.iter().map(|r| rs.root_to_weight(&r.0)).collect();
        Self { cb, lambda, root_weights, memo: HashMap::new() }
    }

    fn act_vec(&mut self, x: usize, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::new();
        for (m, c) in v {
            let img = self.act(x, m);
            add_into(&mut out, &img, c);
        }
        out
    }

    fn act(&mut self, x: usize, m: &Monomial) -> VermaVector {
        if let Some(v) = self.memo.get(&(x, m.clone())) {
            return v.clone();
        }
        let v = self.compute(x, m);
        self.memo.insert((x, m.clone()), v.clone());
        v
    }

    fn compute(&mut self, x: usize, m: &Monomial) -> VermaVector {
        let lead = m.iter().position(|&a| a > 0);
        match (self.cb.generator(x), lead) {
            (Generator::H(i), _) => {
                let mut s = self.lambda.0[i];
                for (k, &a) in m.iter().enumerate() {
                    s -= a as i64 * self.root_weights[k].0[i];
                }
                single(m, BigInt::from(s))
            }
            (Generator::E(_), None) => VermaVector::new(),
            (Generator::F(b), None) => {
                let mut n = m.clone();
                n[b] += 1;
                single(&n, BigInt::from(1))
            }
            (Generator::F(b), Some(g)) if b <= g => {
                let mut n = m.clone();
                n[b] += 1;
                single(&n, BigInt::from(1))
            }
            (_, Some(g)) => {
                let mut rest = m.clone();
                rest[g] -= 1;
                let fg = self.cb.index_of(Generator::F(g));
                let xr = self.act(x, &rest);
                let mut out = self.act_vec(fg, &xr);
                let br = self.cb.bracket_of(x, fg).clone();
                for (&y, &c) in &br.0 {
                    let img = self.act(y, &rest);
                    add_into(&mut out, &img, &BigInt::from(c));
                }
                out
            }
        }
    }

    /// `⟨f^A v, f^B v⟩`: apply `e_{β₁}^{a₁}`, then `e_{β₂}^{a₂}`, … to `f^B v`.
    fn form(&mut self, a: &Monomial, b: &Monomial) -> BigInt {
        let mut v = single(b, BigInt::from(1));
        for (k, &e) in a.iter().enumerate() {
            let ek = self.cb.index_of(Generator::E(k));
            for _ in 0..e {
                v = self.act_vec(ek, &v);
                if v.is_empty() {
                    return BigInt::zero();
                }
            }
        }
        let top = vec![0u32; a.len()];
        v.get(&top).cloned().unwrap_or_default()
    }
}

fn single(m: &Monomial, c: BigInt) -> VermaVector {
    let mut v = VermaVector::new();
    if !c.is_zero() {
        v.insert(m.clone(), c);
    }
    v
}

fn add_into(out: &mut VermaVector, v: &VermaVector, scale: &BigInt) {
    for (m, c) in v {
        let e = out.entry(m.clone()).or_insert_with(BigInt::zero);
        *e += c * scale;
        if e.is_zero() {
            out.remove(m);
        }
    }
}

/// Quotient data for one weight space.
struct WeightBlock {
    monomials: Vec<Monomial>,
    column: HashMap<Monomial, usize>,
    /// Rows of the form matrix used to read off coordinates.
    rows: Vec<Vec<Q>>,
    /// Inverse of the form restricted to (chosen rows) × (pivot columns).
    inv: Vec<Vec<Q>>,
    /// Pivot monomials, the quotient basis of this weight space.
    basis: Vec<Monomial>,
    /// Global index of the first basis vector of this block.
    offset: usize,
}

impl WeightBlock {
    fn coordinates(&self, u: &VermaVector) -> Vec<Q> {
        let mut dense = vec![Q::zero(); self.monomials.len()];
        for (m, c) in u {
            dense[self.column[m]] = Q::from_integer(c.clone());
        }
        let read = arith::mat_vec(&self.rows, &dense);
        arith::mat_vec(&self.inv, &read)
    }
}

pub fn simple_module(cb: &Arc<ChevalleyBasis>, lambda: &Weight) -> Result<HighestWeightModule> {
    simple_module_capped(cb, lambda, DEFAULT_DIM_CAP)
}

/// The simple module V(λ) over ℚ. Basis: one pivot PBW monomial image per
/// basis vector, highest-weight vector first, then by lowering depth,
/// weight, and monomial order.
pub fn simple_module_capped(cb: &Arc<ChevalleyBasis>, lambda: &Weight, dim_cap: usize) -> Result<HighestWeightModule> {
    let rs = &cb.rs;
    if lambda.0.len() != rs.rank() {
        return Err(Error::Validation(format!("weight {lambda} has wrong length for rank {}", rs.rank())));
    }
    let expected = rs.weyl_dim(lambda)? as usize;
    if expected > dim_cap {
        return Err(Error::DimensionCap { dim: expected, cap: dim_cap });
    }
    let spaces = verma_weight_spaces(rs, lambda, rs.module_depth(lambda))?;
    let mut verma = Verma::new(cb, lambda.clone());

    let depth = |w: &Weight| -> i64 {
        rs.weight_to_root_coords(&lambda.sub(w)).iter().map(|x| x.to_integer().to_i64().unwrap()).sum()
    };
    let mut order: Vec<&Weight> = spaces.keys().collect();
    order.sort_by(|a, b| depth(a).cmp(&depth(b)).then_with(|| b.cmp(a)));

    let mut blocks: BTreeMap<Weight, WeightBlock> = BTreeMap::new();
    let mut offset = 0;
    for w in order {
        let monos = &spaces[w];
        let gram: Vec<Vec<Q>> = monos
            .iter()
            .map(|a| monos.iter().map(|b| Q::from_integer(verma.form(a, b))).collect())
            .collect();
        let mut red = gram.clone();
        let pivots = arith::rref(&mut red);
        if pivots.is_empty() {
            return Err(Error::Internal(format!("weight {w} of V({lambda}) has zero multiplicity")));
        }
        // independent rows of gram[:, pivots]
        let sub_t: Vec<Vec<Q>> = pivots.iter().map(|&c| gram.iter().map(|row| row[c].clone()).collect()).collect();
        let mut sub_t_red = sub_t.clone();
        let row_pivots = arith::rref(&mut sub_t_red);
        let square: Vec<Vec<Q>> = row_pivots.iter().map(|&r| pivots.iter().map(|&c| gram[r][c].clone()).collect()).collect();
        let inv = arith::inverse(&square)?;
        let block = WeightBlock {
            monomials: monos.clone(),
            column: monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect(),
            rows: row_pivots.iter().map(|&r| gram[r].clone()).collect(),
            inv,
            basis: pivots.iter().map(|&c| monos[c].clone()).collect(),
            offset,
        };
        offset += block.basis.len();
        blocks.insert(w.clone(), block);
    }
    let dim = offset;
    if dim != expected {
        return Err(Error::Internal(format!("V({lambda}) has dimension {dim}, Weyl formula gives {expected}")));
    }

    let mut action = Vec::with_capacity(cb.dim());
    for x in 0..cb.dim() {
        let shift = cb.basis_weight(x);
        let mut entries = Vec::new();
        for (w, block) in &blocks {
            let Some(target) = blocks.get(&w.add(&shift)) else {
                continue;
            };
            for (j, m) in block.basis.iter().enumerate() {
                let img = verma.act(x, m);
                if img.is_empty() {
                    continue;
                }
                for (i, c) in target.coordinates(&img).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push(((target.offset + i, block.offset + j), c));
                    }
                }
            }
        }
        action.push(LinearOperator::from_entries(dim, entries));
    }
    let module = HighestWeightModule::from_action(cb.clone(), action)?;
    let _ = module.highest_weights.set(vec![lambda.clone()]);
    Ok(module)
}
