//! Lie-stable lattices that are not group-stable, for highest weights with
//! a coefficient ≥ p, alongside their base-p digits.

use std::sync::Arc;

use plattice::latticelab::counterexample_from_seed;
use plattice::prelude::*;

fn main() -> Result<()> {
    for (f, r, l, p) in [(Family::A, 1, vec![3], 3u32), (Family::A, 1, vec![4], 3), (Family::A, 2, vec![2, 0], 2)] {
        let cb = chevalley_basis(&build_root_system(CartanType::new(f, r)?)?);
        let lambda = Weight(l);
        let m = Arc::new(simple_module(&cb, &lambda)?);
        let digits: Vec<String> =
            steinberg_digits(&lambda, p)?.iter().enumerate().map(|(t, d)| format!("{p}^{t}·{d}")).collect();
        let reference = minimal_admissible_lattice(&m, p)?;
        let c = counterexample_lattice(&reference)?;
        let rep = stability_report(&c);
        println!("{f}{r} λ={lambda} p={p}  = {}", digits.join(" + "));
        println!("  lattice {:?}", c.to_json().basis);
        println!("  lie {} torus {} group {}  ({:?})", rep.lie_stable, rep.torus_homogeneous, rep.group_stable, rep.witnesses.first().map(|w| &w.operator));
    }

    // spinning x^p + y^p recovers the non-homogeneous lattice on Sym^p
    let p = 3u32;
    let a1 = chevalley_basis(&build_root_system(CartanType::new(Family::A, 1)?)?);
    let s = Arc::new(sym_power(&simple_module(&a1, &Weight(vec![1]))?, p as usize)?);
    let m = PLattice::standard(s, p);
    let mut seed = vec![0; p as usize + 1];
    seed[0] = 1;
    seed[p as usize] = 1;
    if let Some(l) = counterexample_from_seed(&m, &seed)? {
        let rep = stability_report(&l);
        println!("\nSym^{p}, seed x^{p}+y^{p}: {:?}", l.to_json().basis);
        println!("  lie {} torus {} group {}", rep.lie_stable, rep.torus_homogeneous, rep.group_stable);
    }
    Ok(())
}
