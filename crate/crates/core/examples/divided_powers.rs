//! Divided powers, the minimal admissible lattice and reduction mod p.

use std::sync::Arc;

use plattice::prelude::*;

fn main() -> Result<()> {
    let p = 3u32;
    let a1 = chevalley_basis(&build_root_system(CartanType::new(Family::A, 1)?)?);
    let s = Arc::new(sym_power(&simple_module(&a1, &Weight(vec![1]))?, p as usize)?);
    let dp = divided_powers(&s);
    let xp = {
        let mut v = vec![q(0); s.dim()];
        v[0] = q(1);
        v
    };
    println!("Sym^{p}: basis x^{p}, x^{}y, …, y^{p}", p - 1);
    for k in 1..=p as usize {
        let img = dp.get(Direction::Lower, 0, k).unwrap().apply(&xp);
        println!("  f^({k}) x^{p} = {:?}", img.iter().map(format_q).collect::<Vec<_>>());
    }

    let v = Arc::new(simple_module(&a1, &Weight(vec![p as i64]))?);
    let min = minimal_admissible_lattice(&v, p)?;
    println!("\nminimal lattice of V({p}ω) at p={p}:\n{}", serde_json::to_string(&min.to_json()).unwrap());
    println!("group-stable: {}", is_group_stable(&min).holds);

    let n = reduce_mod_p(&min)?;
    println!("\nreduction mod {p}:");
    println!("{}", serde_json::to_string_pretty(&n.to_json()).unwrap());

    match reduce_mod_p(&PLattice::standard(v, p)) {
        Ok(_) => println!("the standard lattice of the Verma basis is stable"),
        Err(e) => println!("the standard lattice of the Verma basis: {e}"),
    }
    Ok(())
}
