//! Simple modules from the Verma quotient, checked against the Weyl and
//! Freudenthal formulas, plus tensor, symmetric and dual constructions.

use plattice::prelude::*;

fn show(ws: &[Weight]) -> String {
    ws.iter().map(Weight::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> Result<()> {
    let b2 = chevalley_basis(&build_root_system(CartanType::new(Family::B, 2)?)?);
    let lambda = Weight(vec![1, 1]);
    let v = simple_module(&b2, &lambda)?;
    println!("B2 V{lambda}: dim {} (Weyl {})", v.dim(), b2.rs.weyl_dim(&lambda)?);
    for (mu, idx) in v.weight_decomposition().iter().rev() {
        let f = freudenthal_mult(&b2.rs, &lambda, mu)?;
        println!("  {mu:>8}: multiplicity {} (Freudenthal {f})", idx.len());
    }

    let a1 = chevalley_basis(&build_root_system(CartanType::new(Family::A, 1)?)?);
    let std = simple_module(&a1, &Weight(vec![1]))?;
    println!("\nA1: V(ω)⊗V(ω) = ⊕ V(λ) for λ in {}", show(&tensor(&std, &std)?.decompose()?));
    let s5 = sym_power(&std, 5)?;
    println!("A1: Sym^5 V(ω) weights {:?}", s5.weights().iter().map(|w| w.0[0]).collect::<Vec<_>>());
    println!("A1: V(3ω)* highest weights {}", show(&dual(&simple_module(&a1, &Weight(vec![3]))?)?.decompose()?));

    let a2 = chevalley_basis(&build_root_system(CartanType::new(Family::A, 2)?)?);
    let m = simple_module(&a2, &Weight(vec![1, 0]))?;
    println!("\nA2 V(ω1) as JSON:\n{}", serde_json::to_string_pretty(&m.to_json()).unwrap());
    Ok(())
}
