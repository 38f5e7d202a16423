//! Lie-stable versus group-stable lattices between M and p⁻¹M.
//!
//! ```bash
//! cargo run --release -p plattice --example stable_windows -- A 2 1,1 2
//! ```

use std::sync::Arc;
use std::time::Instant;

use plattice::commands::parse_weight;
use plattice::prelude::*;

fn run(t: CartanType, lambda: Weight, p: u32) -> Result<()> {
    let cb = chevalley_basis(&build_root_system(t)?);
    let m = Arc::new(simple_module(&cb, &lambda)?);
    let reference = minimal_admissible_lattice(&m, p)?;
    let start = Instant::now();
    let opts = VerifyOptions { jobs: 4, ..VerifyOptions::default() };
    let r = verify_theorem2(&reference, &lambda.0, &opts)?;
    println!(
        "{t} λ={lambda} p={p}: p-latticed {:<5} window {:>9}  Lat_𝔤 {:>3}  Lat_G {:>3}  equal {:<5} prediction {} ({:.1?})",
        r.p_latticed,
        r.window_size,
        r.lie_stable_count(),
        r.group_stable_count(),
        r.equal,
        if r.matches_prediction() { "holds" } else { "FAILS" },
        start.elapsed()
    );
    Ok(())
}

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [f, r, l, p] = &args[..] {
        let t = CartanType::new(f.parse()?, r.parse().map_err(|_| Error::Validation(r.clone()))?)?;
        return run(t, parse_weight(l)?, p.parse().map_err(|_| Error::Validation(p.clone()))?);
    }
    let a1 = CartanType::new(Family::A, 1)?;
    let a2 = CartanType::new(Family::A, 2)?;
    for p in [2u32, 3] {
        for m in 0..=p as i64 + 1 {
            run(a1, Weight(vec![m]), p)?;
        }
    }
    run(a2, Weight(vec![1, 0]), 3)?;
    run(a2, Weight(vec![1, 1]), 2)?;
    run(a2, Weight(vec![2, 0]), 2)?;
    run(CartanType::new(Family::G, 2)?, Weight(vec![1, 0]), 2)?;
    Ok(())
}
