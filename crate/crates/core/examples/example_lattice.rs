//! On Sym^p of the standard sl2-module, `M + ℤ₍ₚ₎·(x^p + y^p)/p` is stable
//! under the Lie algebra but not under the torus, hence not under the group.

use std::sync::Arc;

use plattice::prelude::*;

fn main() -> Result<()> {
    let a1 = chevalley_basis(&build_root_system(CartanType::new(Family::A, 1)?)?);
    let v = simple_module(&a1, &Weight(vec![1]))?;
    for p in [2u32, 3, 5] {
        let s = Arc::new(sym_power(&v, p as usize)?);
        let m = PLattice::standard(s.clone(), p);
        let mut extra = vec![q(0); s.dim()];
        extra[0] = q_frac(1, p as i64);
        extra[p as usize] = q_frac(1, p as i64);
        let l = m.with_vectors([extra])?;
        let r = stability_report(&l);
        println!(
            "p={p}: lie_stable={} torus_homogeneous={} group_stable={}",
            r.lie_stable, r.torus_homogeneous, r.group_stable
        );
        for w in &r.witnesses {
            println!("    witness {} on {:?}", w.operator, w.vector);
        }
        let (latticed, bad) = is_p_latticed(&s, p)?;
        println!("    Sym^{p} is {p}-latticed: {latticed} (offending weight {bad:?})");
    }
    Ok(())
}
