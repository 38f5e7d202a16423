use std::sync::Arc;

use num_bigint::BigUint;
use plattice::prelude::*;

fn reference(f: Family, r: usize, l: &[i64], p: u32) -> PLattice {
    let cb = chevalley_basis(&build_root_system(CartanType::new(f, r).unwrap()).unwrap());
    let m = Arc::new(simple_module(&cb, &Weight(l.to_vec())).unwrap());
    minimal_admissible_lattice(&m, p).unwrap()
}

#[test]
fn a1_windows_from_the_examples() {
    let r = verify_theorem2(&reference(Family::A, 1, &[1], 3), &[1], &VerifyOptions::default()).unwrap();
    assert!(r.equal);
    let m = reference(Family::A, 1, &[1], 3);
    let stable: Vec<_> = r.lie_stable.iter().cloned().collect();
    assert_eq!(stable, { let mut v = vec![m.clone(), m.scaled(-1)]; v.sort(); v });
    let r = verify_theorem2(&reference(Family::A, 1, &[2], 3), &[2], &VerifyOptions::default()).unwrap();
    assert!(r.equal && r.p_latticed);
}

#[test]
fn over_cap_windows_use_submodules() {
    let m = reference(Family::A, 2, &[1, 1], 3);
    let opts = VerifyOptions { strategy: Strategy::Exhaustive, ..VerifyOptions::default() };
    assert!(matches!(verify_theorem2(&m, &[1, 1], &opts), Err(Error::CapExceeded { .. })));
    let r = verify_theorem2(&m, &[1, 1], &VerifyOptions::default()).unwrap();
    assert!(r.equal && r.enumerated.is_none());
    assert_eq!(r.window_size, BigUint::from(127_902_864u64));
}

#[test]
fn strategies_agree_within_cap() {
    for (f, r, l, p) in [(Family::A, 2, vec![1, 1], 2), (Family::A, 2, vec![0, 1], 3), (Family::G, 2, vec![1, 0], 2)] {
        let m = reference(f, r, &l, p);
        let ex = verify_theorem2(&m, &l, &VerifyOptions { strategy: Strategy::Exhaustive, jobs: 4, ..Default::default() }).unwrap();
        let sub = verify_theorem2(&m, &l, &VerifyOptions { strategy: Strategy::Submodules, ..Default::default() }).unwrap();
        assert_eq!(ex.lie_stable, sub.lie_stable);
        assert_eq!(ex.group_stable, sub.group_stable);
        assert_eq!(BigUint::from(ex.enumerated.unwrap()), ex.window_size);
    }
}

/// Exhaustive pass over all 127,902,864 subspaces of 𝔽₃⁸; run with
/// `cargo test --release -- --ignored`.
#[test]
#[ignore]
fn a2_adjoint_at_three_exhaustive() {
    let m = reference(Family::A, 2, &[1, 1], 3);
    let opts = VerifyOptions { cap: 200_000_000, strategy: Strategy::Exhaustive, jobs: 8, ..Default::default() };
    let r = verify_theorem2(&m, &[1, 1], &opts).unwrap();
    assert_eq!(BigUint::from(r.enumerated.unwrap()), r.window_size);
    assert!(r.equal);
}
