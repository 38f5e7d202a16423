//! Chevalley bases: structure constants, the Killing form and the adjoint
//! module.

use plattice::chevalley::killing_determinant;
use plattice::prelude::*;

fn main() -> Result<()> {
    let a1 = chevalley_basis(&build_root_system(CartanType::new(Family::A, 1)?)?);
    let k = a1.killing_form();
    println!("sl2 Killing form in the basis {:?}:", (0..a1.dim()).map(|i| a1.name(i)).collect::<Vec<_>>());
    for row in &k {
        println!("  {row:?}");
    }

    let g2 = chevalley_basis(&build_root_system(CartanType::new(Family::G, 2)?)?);
    let largest = (0..g2.num_positive())
        .flat_map(|a| (0..g2.num_positive()).map(move |b| (a, b)))
        .map(|(a, b)| (g2.structure_constant(a, b).abs(), a, b))
        .max()
        .unwrap();
    println!("\nG2: |N_{{α,β}}| reaches {} at roots {:?}, {:?}", largest.0, g2.rs.positive_roots[largest.1].0, g2.rs.positive_roots[largest.2].0);
    println!("G2: Jacobi violation: {:?}", g2.jacobi_violation());
    println!("G2: det Killing form = {}", killing_determinant(&g2));

    let a2 = chevalley_basis(&build_root_system(CartanType::new(Family::A, 2)?)?);
    let ad = adjoint_rep(&a2)?;
    println!("\nA2 adjoint: dim {}, highest weight {}", ad.dim(), ad.decompose()?[0]);
    let table = a2.structure_table();
    println!("A2 structure table (JSON, first brackets):");
    for b in table.brackets.iter().take(4) {
        println!("  {}", serde_json::to_string(b).unwrap());
    }
    Ok(())
}
