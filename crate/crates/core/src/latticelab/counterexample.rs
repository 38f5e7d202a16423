//! Lie-stable lattices that are not group-stable, built from Lie
//! submodules of the reduction that are not closed under divided powers.

use super::{spin, stability_report, GeneratorSet, PLattice, Window};
use crate::error::{Error, Result};
use crate::fp::Subspace;

/// Searches the window over `reference` for a lattice that is Lie-stable
/// but not group-stable. Seeds are the basis vectors of the reference
/// lattice in order (weight vectors when the reference is homogeneous),
/// then every normalized residue vector. The first Lie-spin that is not
/// divided-power stable wins.
pub fn counterexample_lattice(reference: &PLattice) -> Result<PLattice> {
    let window = Window::new(reference.clone())?;
    let s = search(&window)?;
    let l = window.lattice_of(&s);
    verify(&l)?;
    Ok(l)
}

/// The window lattice whose residue is the Lie-spin of `seed`, if that
/// lattice is Lie-stable and not group-stable.
pub fn counterexample_from_seed(reference: &PLattice, seed: &[u32]) -> Result<Option<PLattice>> {
    let window = Window::new(reference.clone())?;
    let s = spin(window.residue(), seed, GeneratorSet::Lie)?;
    if window.group_closed(&s) {
        return Ok(None);
    }
    let l = window.lattice_of(&s);
    verify(&l)?;
    Ok(Some(l))
}

fn search(window: &Window) -> Result<Subspace> {
    let n = window.dim();
    let p = window.p();
    for i in 0..n {
        let mut v = vec![0u32; n];
        v[i] = 1;
        let s = spin(window.residue(), &v, GeneratorSet::Lie)?;
        if !window.group_closed(&s) {
            return Ok(s);
        }
    }
    let total = (p as u128)
        .checked_pow(n as u32)
        .filter(|&t| t <= super::DEFAULT_SUBSPACE_CAP)
        .ok_or_else(|| Error::Internal("no counterexample among weight-vector seeds".into()))?;
    for mut x in 1..total {
        let v: Vec<u32> = (0..n)
            .map(|_| {
                let d = (x % p as u128) as u32;
                x /= p as u128;
                d
            })
            .collect();
        if v.iter().find(|&&d| d != 0) != Some(&1) {
            continue;
        }
        let s = spin(window.residue(), &v, GeneratorSet::Lie)?;
        if !window.group_closed(&s) {
            return Ok(s);
        }
    }
    Err(Error::Internal("window has no Lie-stable lattice that is not group-stable".into()))
}

fn verify(l: &PLattice) -> Result<()> {
    let r = stability_report(l);
    if r.lie_stable && !r.group_stable {
        Ok(())
    } else {
        Err(Error::Internal(format!("counterexample failed verification: {r:?}")))
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::chevalley::chevalley_basis;
    use crate::highestweight::{simple_module, sym_power};
    use crate::rootsystem::{build_root_system, CartanType, Family, Weight};
    use crate::zform::minimal_admissible_lattice;

    #[test]
    fn witnesses_for_non_restricted_weights() {
        for (f, r, l, p) in [(Family::A, 1, vec![3], 3), (Family::A, 1, vec![4], 3), (Family::A, 2, vec![2, 0], 2)] {
            let cb = chevalley_basis(&build_root_system(CartanType::new(f, r).unwrap()).unwrap());
            let m = Arc::new(simple_module(&cb, &Weight(l)).unwrap());
            let reference = minimal_admissible_lattice(&m, p).unwrap();
            let c = counterexample_lattice(&reference).unwrap();
            let rep = stability_report(&c);
            assert!(rep.lie_stable && !rep.group_stable);
            assert!(reference.is_sublattice_of(&c));
        }
    }

    #[test]
    fn seed_x_p_plus_y_p_gives_the_example_lattice() {
        let p = 3u32;
        let cb = chevalley_basis(&build_root_system(CartanType::new(Family::A, 1).unwrap()).unwrap());
        let v = simple_module(&cb, &Weight(vec![1])).unwrap();
        let s = Arc::new(sym_power(&v, p as usize).unwrap());
        let m = PLattice::standard(s.clone(), p);
        let l = counterexample_from_seed(&m, &[1, 0, 0, 1]).unwrap().unwrap();
        let mut extra = vec![crate::arith::q(0); 4];
        extra[0] = crate::arith::q_frac(1, 3);
        extra[3] = crate::arith::q_frac(1, 3);
        assert_eq!(l, m.with_vectors([extra]).unwrap());
        assert!(counterexample_from_seed(&m, &[0, 1, 0, 0]).unwrap().is_none());
    }
}
