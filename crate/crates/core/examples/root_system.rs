//! Root systems of every supported type: counts, Cartan matrices and a few
//! Weyl dimensions.
//!
//! ```bash
//! cargo run -p plattice --example root_system
//! ```

use plattice::prelude::*;

fn main() -> Result<()> {
    for t in CartanType::all_supported() {
        let rs = build_root_system(t)?;
        println!("{t}: {} roots, {} positive, Cartan {:?}", rs.roots.len(), rs.num_positive(), rs.cartan_matrix);
    }

    let g2 = build_root_system(CartanType::new(Family::G, 2)?)?;
    println!("\nG2 positive roots (simple-root coordinates, canonical order):");
    for r in &g2.positive_roots {
        println!("  {:?}  height {}", r.0, r.height());
    }

    let a2 = build_root_system(CartanType::new(Family::A, 2)?)?;
    let alpha1 = a2.root_to_weight(&[1, 0]);
    println!("\nA2: α1 in ω-coordinates is {alpha1}, ⟨α1, α1∨⟩ = {}", a2.pairing(&alpha1, 1)?);
    for l in [[0, 0], [1, 0], [1, 1], [2, 2], [3, 0]] {
        let w = Weight(l.to_vec());
        println!("  dim V{w} = {}", a2.weyl_dim(&w)?);
    }
    println!("  is (−1,3) dominant? {}", a2.is_dominant(&Weight(vec![-1, 3])));
    Ok(())
}
