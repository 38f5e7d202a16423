use super::*;
use crate::chevalley::{adjoint_rep, chevalley_basis};
use crate::rootsystem::{build_root_system, CartanType, Family};

fn cb(f: Family, r: usize) -> Arc<ChevalleyBasis> {
    chevalley_basis(&build_root_system(CartanType::new(f, r).unwrap()).unwrap())
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn weight_multiset(m: &HighestWeightModule) -> Vec<Weight> {
    let mut v = m.weights().to_vec();
    v.sort();
    v
}

#[test]
fn verma_spaces_small() {
    let a1 = cb(Family::A, 1);
    let s = verma_weight_spaces(&a1.rs, &w(&[2]), 2).unwrap();
    assert_eq!(s.len(), 3);
    assert!(s.values().all(|m| m.len() == 1));
    let a2 = cb(Family::A, 2);
    let s = verma_weight_spaces(&a2.rs, &w(&[1, 1]), 4).unwrap();
    assert_eq!(s[&w(&[0, 0])].len(), 2);
    assert_eq!(verma_weight_spaces(&a2.rs, &w(&[1, 0]), 2).unwrap().len(), 3);
    assert!(matches!(
        verma_weight_spaces(&a2.rs, &w(&[1, 1]), 1),
        Err(Error::DepthOverflow { .. })
    ));
}

#[test]
fn simple_modules_have_weyl_dimension() {
    let a1 = cb(Family::A, 1);
    for p in [2, 3, 5] {
        assert_eq!(simple_module(&a1, &w(&[p])).unwrap().dim(), p as usize + 1);
    }
    let triv = simple_module(&a1, &w(&[0])).unwrap();
    assert_eq!(triv.dim(), 1);
    assert!(triv.actions().iter().all(LinearOperator::is_zero));
    let a2 = cb(Family::A, 2);
    let v = simple_module(&a2, &w(&[1, 1])).unwrap();
    assert_eq!(v.dim(), 8);
    assert_eq!(weight_multiset(&v), weight_multiset(&adjoint_rep(&a2).unwrap()));
    assert!(v.homomorphism_violation().is_none());
    assert_eq!(v.weights()[0], w(&[1, 1]));
}

#[test]
fn non_dominant_rejected() {
    let a2 = cb(Family::A, 2);
    assert!(simple_module(&a2, &w(&[-1, 3])).is_err());
    assert!(matches!(
        simple_module_capped(&a2, &w(&[2, 2]), 10),
        Err(Error::DimensionCap { .. })
    ));
}

#[test]
fn weight_decomposition_matches_freudenthal() {
    for (f, r, l) in [
        (Family::A, 2, vec![1, 1]),
        (Family::A, 2, vec![2, 1]),
        (Family::B, 2, vec![1, 1]),
        (Family::C, 2, vec![0, 2]),
        (Family::G, 2, vec![0, 1]),
    ] {
        let c = cb(f, r);
        let lambda = w(&l);
        let m = simple_module(&c, &lambda).unwrap();
        for (mu, idx) in m.weight_decomposition() {
            assert_eq!(idx.len() as u64, freudenthal_mult(&c.rs, &lambda, &mu).unwrap(), "{f}{r} {lambda} {mu}");
        }
    }
    let a2 = cb(Family::A, 2);
    assert_eq!(freudenthal_mult(&a2.rs, &w(&[1, 1]), &w(&[0, 0])).unwrap(), 2);
    assert_eq!(freudenthal_mult(&a2.rs, &w(&[1, 0]), &w(&[1, 0])).unwrap(), 1);
    assert_eq!(freudenthal_mult(&a2.rs, &w(&[1, 0]), &w(&[1, 1])).unwrap(), 0);
}

#[test]
fn decomposition_of_constructions() {
    let a1 = cb(Family::A, 1);
    let v = simple_module(&a1, &w(&[1])).unwrap();
    let vv = tensor(&v, &v).unwrap();
    assert_eq!(vv.decompose().unwrap(), vec![w(&[2]), w(&[0])]);
    let triv = HighestWeightModule::trivial(a1.clone());
    assert_eq!(weight_multiset(&tensor(&v, &triv).unwrap()), weight_multiset(&v));
    let v3 = simple_module(&a1, &w(&[3])).unwrap();
    assert_eq!(dual(&v3).unwrap().decompose().unwrap(), vec![w(&[3])]);
    let s = sym_power(&v, 4).unwrap();
    assert_eq!(s.weights(), &[w(&[4]), w(&[2]), w(&[0]), w(&[-2]), w(&[-4])]);
    assert!(s.is_simple().unwrap());
    let sum = direct_sum(&v3, &v).unwrap();
    assert_eq!(sum.decompose().unwrap(), vec![w(&[3]), w(&[1])]);
    let a2 = cb(Family::A, 2);
    assert_eq!(adjoint_rep(&a2).unwrap().decompose().unwrap(), vec![w(&[1, 1])]);
    let x = simple_module(&a2, &w(&[1, 0])).unwrap();
    let y = simple_module(&a2, &w(&[0, 1])).unwrap();
    let xy = tensor(&x, &y).unwrap();
    assert_eq!(xy.decompose().unwrap(), vec![w(&[1, 1]), w(&[0, 0])]);
    assert!(xy.homomorphism_violation().is_none());
}

#[test]
fn mismatched_algebras_rejected() {
    let a = simple_module(&cb(Family::A, 1), &w(&[1])).unwrap();
    let b = simple_module(&cb(Family::A, 2), &w(&[1, 0])).unwrap();
    assert_eq!(tensor(&a, &b).unwrap_err(), Error::MismatchedAlgebra);
}

#[test]
fn json_round_trip() {
    let a2 = cb(Family::A, 2);
    let m = simple_module(&a2, &w(&[1, 1])).unwrap();
    let j = m.to_json();
    let text = serde_json::to_string(&j).unwrap();
    let back = HighestWeightModule::from_json(a2, &serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back.weights(), m.weights());
    assert_eq!(back.actions(), m.actions());
}

#[test]
fn broken_action_rejected() {
    let a1 = cb(Family::A, 1);
    let m = simple_module(&a1, &w(&[2])).unwrap();
    let mut j = m.to_json();
    // double e on one entry: still weight-compatible, breaks [e, f] = h
    let e = j.action.get_mut("e1").unwrap();
    e[0].2 = arith::format_q(&(arith::parse_q(&e[0].2).unwrap() * arith::q(2)));
    assert!(HighestWeightModule::from_json(a1, &j).is_err());
}
