//! Exact-arithmetic root systems, Chevalley bases and highest-weight
//! modules, with tools for deciding which ℤ₍ₚ₎-lattices in a module are
//! stable under the Lie algebra, the torus and the group.
//!
//! ```
//! use plattice::prelude::*;
//!
//! let rs = build_root_system(CartanType::new(Family::A, 1).unwrap()).unwrap();
//! let cb = chevalley_basis(&rs);
//! let v = simple_module(&cb, &Weight(vec![3])).unwrap();
//! assert_eq!(v.dim(), 4);
//! let (ok, _) = is_p_latticed(&v, 3).unwrap();
//! assert!(!ok);
//! ```

pub mod arith;
pub mod catalog;
pub mod chevalley;
pub mod commands;
pub mod error;
pub mod fp;
pub mod highestweight;
pub mod latticelab;
pub mod operator;
pub mod rootsystem;
pub mod zform;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::arith::{format_q, parse_q, q, q_frac, Q};
    pub use crate::chevalley::{adjoint_rep, chevalley_basis, ChevalleyBasis, Generator, LinearOperator};
    pub use crate::error::{Error, Result};
    pub use crate::fp::{FpMatrix, Subspace};
    pub use crate::highestweight::{
        direct_sum, dual, freudenthal_mult, simple_module, sym_power, tensor, HighestWeightModule,
    };
    pub use crate::latticelab::{
        counterexample_from_seed, counterexample_lattice, enumerate_intermediate, is_group_stable, is_lie_stable,
        is_p_latticed, is_torus_homogeneous, spin, stability_report, steinberg_digits, verify_theorem2,
        GeneratorSet, PLattice, StabilityReport, Strategy, Theorem2Report, VerifyOptions, Window,
    };
    pub use crate::rootsystem::{build_root_system, CartanType, Family, RootSystem, Weight};
    pub use crate::zform::{divided_powers, minimal_admissible_lattice, reduce_mod_p, Direction, ModpModule};
}
