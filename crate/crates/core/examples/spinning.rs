//! Spinning vectors over 𝔽ₚ with the Lie generators and with all divided
//! powers.

use std::sync::Arc;

use plattice::prelude::*;

fn spins(f: Family, r: usize, l: &[i64], p: u32) -> Result<()> {
    let cb = chevalley_basis(&build_root_system(CartanType::new(f, r)?)?);
    let m = Arc::new(simple_module(&cb, &Weight(l.to_vec()))?);
    let n = reduce_mod_p(&minimal_admissible_lattice(&m, p)?)?;
    let dims: Vec<(usize, usize)> = (0..n.dim)
        .map(|i| {
            let mut v = vec![0; n.dim];
            v[i] = 1;
            let lie = spin(&n, &v, GeneratorSet::Lie).unwrap().dim();
            let dp = spin(&n, &v, GeneratorSet::DividedPowers).unwrap().dim();
            (lie, dp)
        })
        .collect();
    println!("{f}{r} λ={l:?} p={p} (dim {}): (Lie, divided-power) spin dims per basis seed {dims:?}", n.dim);
    Ok(())
}

fn main() -> Result<()> {
    spins(Family::A, 1, &[2], 3)?;
    spins(Family::A, 1, &[3], 3)?;
    spins(Family::A, 2, &[1, 1], 2)?;
    // restricted, yet the reduction has a proper submodule
    spins(Family::G, 2, &[1, 0], 2)?;
    spins(Family::B, 2, &[1, 0], 2)?;
    Ok(())
}
