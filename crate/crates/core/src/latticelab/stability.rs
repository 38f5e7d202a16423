//! Lie-, torus- and group-stability of lattices.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::PLattice;
use crate::arith::{self, Q};
use crate::rootsystem::Weight;

/// A basis vector of the lattice and the operator that moves it outside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub operator: String,
    pub vector: Vec<String>,
}

impl Witness {
    fn new(operator: String, v: &[Q]) -> Self {
        Self { operator, vector: v.iter().map(arith::format_q).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn ok() -> Self {
        Self { holds: true, witness: None }
    }

    fn fail(w: Witness) -> Self {
        Self { holds: false, witness: Some(w) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub lie_stable: bool,
    pub torus_homogeneous: bool,
    pub group_stable: bool,
    pub witnesses: Vec<Witness>,
}

/// `ρ(x) L ⊆ L` for every Chevalley basis element x.
pub fn is_lie_stable(l: &PLattice) -> Verdict {
    let m = l.module();
    let cb = m.algebra();
    for x in 0..cb.dim() {
        if let Some(i) = l.first_escape(m.action(x)) {
            return Verdict::fail(Witness::new(cb.name(x), &l.basis()[i]));
        }
    }
    Verdict::ok()
}

/// `L = ⊕_μ (L ∩ V_μ)`, tested on the weight components of each basis
/// vector.
pub fn is_torus_homogeneous(l: &PLattice) -> Verdict {
    let weights = l.module().weights();
    for b in l.basis() {
        let support: BTreeSet<&Weight> =
            b.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, _)| &weights[j]).collect();
        if support.len() <= 1 {
            continue;
        }
        for mu in support {
            let proj: Vec<Q> =
                b.iter().zip(weights).map(|(x, w)| if w == mu { x.clone() } else { Q::zero() }).collect();
            if !l.contains(&proj) {
                return Verdict::fail(Witness::new(format!("proj{mu}"), b));
            }
        }
    }
    Verdict::ok()
}

/// Torus-homogeneous and stable under every `e_α^{(k)}`, `f_α^{(k)}`.
pub fn is_group_stable(l: &PLattice) -> Verdict {
    let torus = is_torus_homogeneous(l);
    if !torus.holds {
        return torus;
    }
    for (name, op) in l.module().divided_powers().named() {
        if let Some(i) = l.first_escape(op) {
            return Verdict::fail(Witness::new(name, &l.basis()[i]));
        }
    }
    Verdict::ok()
}

pub fn stability_report(l: &PLattice) -> StabilityReport {
    let lie = is_lie_stable(l);
    let torus = is_torus_homogeneous(l);
    let group = if torus.holds { is_group_stable(l) } else { torus.clone() };
    let witnesses = [&lie, &torus, &group]
        .iter()
        .filter_map(|v| v.witness.clone())
        .fold(Vec::new(), |mut acc, w| {
            if !acc.contains(&w) {
                acc.push(w);
            }
            acc
        });
    StabilityReport {
        lie_stable: lie.holds,
        torus_homogeneous: torus.holds,
        group_stable: group.holds,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::arith::q_frac;
    use crate::chevalley::chevalley_basis;
    use crate::highestweight::{simple_module, sym_power};
    use crate::rootsystem::{build_root_system, CartanType, Family};
    use crate::zform::minimal_admissible_lattice;

    fn a1(l: i64) -> Arc<crate::highestweight::HighestWeightModule> {
        let cb = chevalley_basis(&build_root_system(CartanType::new(Family::A, 1).unwrap()).unwrap());
        Arc::new(simple_module(&cb, &Weight(vec![l])).unwrap())
    }

    #[test]
    fn example_lattice_on_sym_p() {
        for p in [2u32, 3, 5] {
            let s = Arc::new(sym_power(&a1(1), p as usize).unwrap());
            let m = PLattice::standard(s.clone(), p);
            let mut v = vec![Q::zero(); s.dim()];
            v[0] = q_frac(1, p as i64);
            v[p as usize] = q_frac(1, p as i64);
            let l = m.with_vectors([v]).unwrap();
            let r = stability_report(&l);
            assert!(r.lie_stable && !r.torus_homogeneous && !r.group_stable);
            assert!(!r.witnesses.is_empty());
            let rm = stability_report(&m);
            assert!(rm.lie_stable && rm.torus_homogeneous && rm.group_stable);
        }
    }

    #[test]
    fn generic_perturbation_is_not_lie_stable() {
        let v = a1(2);
        let m = minimal_admissible_lattice(&v, 3).unwrap();
        let l = m.with_vectors([vec![q_frac(1, 3), q_frac(2, 3), Q::zero()]]).unwrap();
        let r = is_lie_stable(&l);
        assert!(!r.holds);
        assert!(r.witness.is_some());
    }

    #[test]
    fn reports_are_scale_invariant() {
        let v = a1(3);
        let m = minimal_admissible_lattice(&v, 3).unwrap();
        let l = m.with_vectors([vec![q_frac(1, 3), Q::zero(), Q::zero(), Q::zero()]]).unwrap();
        for x in [&m, &l] {
            let r = stability_report(x);
            assert!(!r.group_stable || (r.lie_stable && r.torus_homogeneous));
            for k in [-2, -1, 1, 3] {
                let y = x.scaled(k);
                let s = stability_report(&y);
                assert_eq!(
                    (r.lie_stable, r.torus_homogeneous, r.group_stable),
                    (s.lie_stable, s.torus_homogeneous, s.group_stable)
                );
            }
        }
        assert!(is_group_stable(&m.scaled(-1)).holds);
    }
}
