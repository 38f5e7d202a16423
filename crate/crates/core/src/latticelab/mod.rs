//! Lattices in modules and their Lie-, torus- and group-stability.

mod counterexample;
mod lattice;
mod stability;
mod window;

pub use counterexample::{counterexample_from_seed, counterexample_lattice};
pub use lattice::{canonical_basis, LatticeJson, PLattice};
pub use stability::{
    is_group_stable, is_lie_stable, is_torus_homogeneous, stability_report, StabilityReport, Verdict, Witness,
};
pub use window::{
    enumerate_intermediate, verify_theorem2, Strategy, Theorem2Json, Theorem2Report, VerifyOptions, Window,
    WindowClasses, DEFAULT_SUBSPACE_CAP,
};

use crate::error::{Error, Result};
use crate::fp::{FpMatrix, Subspace};
use crate::highestweight::HighestWeightModule;
use crate::rootsystem::Weight;
use crate::zform::ModpModule;

/// Whether every highest weight of `m` is p-restricted. On failure also
/// returns the first offending highest weight.
pub fn is_p_latticed(m: &HighestWeightModule, p: u32) -> Result<(bool, Option<Weight>)> {
    let bad = m.decompose()?.into_iter().find(|w| !is_restricted(w, p));
    Ok((bad.is_none(), bad))
}

pub fn is_restricted(w: &Weight, p: u32) -> bool {
    w.0.iter().all(|&c| (0..p as i64).contains(&c))
}

/// Base-p digits `λ = Σ pᵗ λ_t` of a dominant weight, lowest first.
pub fn steinberg_digits(lambda: &Weight, p: u32) -> Result<Vec<Weight>> {
    if lambda.0.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    if p < 2 {
        return Err(Error::Validation(format!("{p} is not prime")));
    }
    let mut rest = lambda.0.clone();
    let mut out = vec![];
    loop {
        out.push(Weight(rest.iter().map(|&c| c % p as i64).collect()));
        rest.iter_mut().for_each(|c| *c /= p as i64);
        if rest.iter().all(|&c| c == 0) {
            return Ok(out);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSet {
    /// Reduced `e_α`, `f_α`, `h_i`.
    Lie,
    /// The Lie generators together with every reduced divided power.
    DividedPowers,
}

impl GeneratorSet {
    pub fn matrices<'a>(&self, n: &'a ModpModule) -> Vec<&'a FpMatrix> {
        let mut out: Vec<&FpMatrix> = n.generators.iter().collect();
        if *self == GeneratorSet::DividedPowers {
            out.extend(n.divided.iter().map(|(_, m)| m));
        }
        out
    }
}

/// Smallest subspace containing `v` closed under the chosen generators.
pub fn spin(n: &ModpModule, v: &[u32], gens: GeneratorSet) -> Result<Subspace> {
    if v.len() != n.dim {
        return Err(Error::Validation(format!("vector has length {}, module dimension is {}", v.len(), n.dim)));
    }
    let v: Vec<u32> = v.iter().map(|x| x % n.p).collect();
    if v.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    let ops = gens.matrices(n);
    let mut s = Subspace::zero(n.p, n.dim);
    let mut queue = vec![v];
    while let Some(w) = queue.pop() {
        if s.insert(w.clone()) {
            queue.extend(ops.iter().map(|m| m.apply(&w)));
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits() {
        let d = steinberg_digits(&Weight(vec![3]), 3).unwrap();
        assert_eq!(d, vec![Weight(vec![0]), Weight(vec![1])]);
        assert_eq!(steinberg_digits(&Weight(vec![2]), 3).unwrap(), vec![Weight(vec![2])]);
        let d = steinberg_digits(&Weight(vec![4, 1]), 3).unwrap();
        assert_eq!(d, vec![Weight(vec![1, 1]), Weight(vec![1, 0])]);
        assert_eq!(steinberg_digits(&Weight(vec![0, 0]), 5).unwrap(), vec![Weight(vec![0, 0])]);
        assert!(steinberg_digits(&Weight(vec![-1]), 2).is_err());
    }

    #[test]
    fn restricted() {
        assert!(is_restricted(&Weight(vec![1, 2]), 3));
        assert!(!is_restricted(&Weight(vec![3, 0]), 3));
    }
}
