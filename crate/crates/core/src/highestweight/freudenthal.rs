//! Weight multiplicities by Freudenthal's recursion.

use std::collections::HashMap;

use num_traits::{ToPrimitive, Zero};

use crate::arith::{self, Q};
use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};

/// Deepest lowering depth the recursion will follow.
pub const MAX_DEPTH: usize = 4096;

/// Memoized multiplicities for one highest weight.
pub struct FreudenthalTable<'a> {
    rs: &'a RootSystem,
    lambda: Weight,
    gram: Vec<Vec<Q>>,
    root_weights: Vec<Weight>,
    norm_top: Q,
    max_depth: usize,
    memo: HashMap<Weight, u64>,
}

impl<'a> FreudenthalTable<'a> {
    pub fn new(rs: &'a RootSystem, lambda: &Weight) -> Result<Self> {
        if !rs.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let depth = rs.module_depth(lambda);
        if depth > MAX_DEPTH {
            return Err(Error::DepthOverflow { needed: depth, cutoff: MAX_DEPTH });
        }
        let n = rs.rank();
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            Weight(v)
        };
        let gram = (0..n).map(|i| (0..n).map(|j| rs.weight_inner(&unit(i), &unit(j))).collect()).collect();
        let root_weights = rs.positive_roots.iter().map(|r| rs.root_to_weight(&r.0)).collect();
        let mut t = Self {
            rs,
            lambda: lambda.clone(),
            gram,
            root_weights,
            norm_top: Q::zero(),
            max_depth: depth,
            memo: HashMap::new(),
        };
        let top = lambda.add(&rs.rho());
        t.norm_top = t.inner(&top, &top);
        Ok(t)
    }

    fn inner(&self, a: &Weight, b: &Weight) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if *y != 0 {
                    s += &self.gram[i][j] * arith::q(x * y);
                }
            }
        }
        s
    }

    fn depth(&self, mu: &Weight) -> Option<usize> {
        let d = self.rs.weight_to_root_coords(&self.lambda.sub(mu));
        if d.iter().all(|x| x.is_integer() && *x >= Q::zero()) {
            Some(d.iter().map(|x| x.to_integer().to_i64().unwrap()).sum::<i64>() as usize)
        } else {
            None
        }
    }

    pub fn multiplicity(&mut self, mu: &Weight) -> Result<u64> {
        if let Some(&m) = self.memo.get(mu) {
            return Ok(m);
        }
        let Some(depth) = self.depth(mu) else {
            return Ok(0);
        };
        if depth > self.max_depth {
            return Ok(0);
        }
        if depth == 0 {
            return Ok(1);
        }
        if !self.rs.is_weight_of(&self.lambda, mu) {
            self.memo.insert(mu.clone(), 0);
            return Ok(0);
        }
        let mut sum = Q::zero();
        for k in 0..self.root_weights.len() {
            let alpha = self.root_weights[k].clone();
            let mut step = 1;
            loop {
                let nu = mu.add(&alpha.scale(step));
                match self.depth(&nu) {
                    Some(_) => {}
                    None => break,
                }
                let m = self.multiplicity(&nu)?;
                if m == 0 && !self.rs.is_weight_of(&self.lambda, &nu) {
                    break;
                }
                sum += self.inner(&nu, &alpha) * arith::q(m as i64);
                step += 1;
            }
        }
        let shifted = mu.add(&self.rs.rho());
        let den = &self.norm_top - self.inner(&shifted, &shifted);
        if den.is_zero() {
            return Err(Error::Internal(format!("degenerate Freudenthal denominator at {mu}")));
        }
        let m = sum * arith::q(2) / den;
        if !m.is_integer() || m < Q::zero() {
            return Err(Error::Internal(format!("non-integral multiplicity {m} at {mu}")));
        }
        let m = m.to_integer().to_u64().unwrap();
        self.memo.insert(mu.clone(), m);
        Ok(m)
    }
}

/// Multiplicity of μ in V(λ).
pub fn freudenthal_mult(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<u64> {
    FreudenthalTable::new(rs, lambda)?.multiplicity(mu)
}
