//! The operations behind the `plattice` binary. Each command returns a
//! JSON document and a process exit code.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::arith::{self, Q};
use crate::catalog;
use crate::chevalley::chevalley_basis;
use crate::error::{Error, Result};
use crate::highestweight::{self, simple_module_capped, HighestWeightModule, DEFAULT_DIM_CAP};
use crate::latticelab::{
    counterexample_from_seed, counterexample_lattice, enumerate_intermediate, is_p_latticed, stability_report,
    steinberg_digits, verify_theorem2, LatticeJson, PLattice, Strategy, VerifyOptions, Window,
    DEFAULT_SUBSPACE_CAP,
};
use crate::rootsystem::{build_root_system, CartanType, Family, Weight};
use crate::zform::minimal_admissible_lattice;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

pub const ENV_SUBSPACE_CAP: &str = "PLATTICE_SUBSPACE_CAP";
pub const ENV_DIM_CAP: &str = "PLATTICE_DIM_CAP";

/// How the module is assembled from simple modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Simple,
    /// `Sym^k V(λ)`.
    SymPower(usize),
    /// `V(λ) ⊗ V(μ₁) ⊗ …`.
    Tensor(Vec<Weight>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reference {
    /// The lattice spanned by the module's own basis.
    Monomial,
    /// The divided-power span of a highest-weight vector.
    Minimal,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cartan: CartanType,
    pub lambda: Weight,
    pub p: u32,
    pub recipe: Recipe,
    /// Defaults to minimal for simple modules and monomial otherwise.
    pub reference: Option<Reference>,
    pub dim_cap: usize,
    pub subspace_cap: u128,
    pub jobs: usize,
    pub strategy: Strategy,
    /// Residue vector to spin instead of the default seed order.
    pub seed: Option<Vec<u32>>,
    pub inject_fault: bool,
}

impl RunConfig {
    pub fn new(cartan: CartanType, lambda: Weight, p: u32) -> Self {
        Self {
            cartan,
            lambda,
            p,
            recipe: Recipe::Simple,
            reference: None,
            dim_cap: DEFAULT_DIM_CAP,
            subspace_cap: DEFAULT_SUBSPACE_CAP,
            jobs: 1,
            strategy: Strategy::Auto,
            seed: None,
            inject_fault: false,
        }
    }

    /// Caps from `PLATTICE_SUBSPACE_CAP` / `PLATTICE_DIM_CAP` when set.
    pub fn with_env_caps(mut self) -> Result<Self> {
        if let Ok(s) = std::env::var(ENV_SUBSPACE_CAP) {
            self.subspace_cap = s.trim().parse().map_err(|_| Error::Validation(format!("bad {ENV_SUBSPACE_CAP}: {s}")))?;
        }
        if let Ok(s) = std::env::var(ENV_DIM_CAP) {
            self.dim_cap = s.trim().parse().map_err(|_| Error::Validation(format!("bad {ENV_DIM_CAP}: {s}")))?;
        }
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        CartanType::new(self.cartan.family, self.cartan.rank)?;
        if self.lambda.0.len() != self.cartan.rank {
            return Err(Error::Validation(format!(
                "λ has {} coefficients, rank is {}",
                self.lambda.0.len(),
                self.cartan.rank
            )));
        }
        if !is_prime(self.p) {
            return Err(Error::Validation(format!("p = {} is not prime", self.p)));
        }
        if self.dim_cap == 0 || self.subspace_cap == 0 || self.jobs == 0 {
            return Err(Error::Validation("caps and job count must be positive".into()));
        }
        if let Recipe::Tensor(ws) = &self.recipe {
            if ws.iter().any(|w| w.0.len() != self.cartan.rank) {
                return Err(Error::Validation("tensor factor has the wrong rank".into()));
            }
        }
        Ok(())
    }

    pub fn build_module(&self) -> Result<Arc<HighestWeightModule>> {
        self.validate()?;
        let rs = build_root_system(self.cartan)?;
        let cb = chevalley_basis(&rs);
        let base = simple_module_capped(&cb, &self.lambda, self.dim_cap)?;
        let m = match &self.recipe {
            Recipe::Simple => base,
            Recipe::SymPower(k) => highestweight::sym_power(&base, *k)?,
            Recipe::Tensor(ws) => {
                let mut acc = base;
                for w in ws {
                    acc = highestweight::tensor(&acc, &simple_module_capped(&cb, w, self.dim_cap)?)?;
                }
                acc
            }
        };
        if m.dim() > self.dim_cap {
            return Err(Error::DimensionCap { dim: m.dim(), cap: self.dim_cap });
        }
        Ok(Arc::new(m))
    }

    pub fn reference_kind(&self) -> Reference {
        self.reference.unwrap_or(if self.recipe == Recipe::Simple { Reference::Minimal } else { Reference::Monomial })
    }

    pub fn reference_lattice(&self, m: &Arc<HighestWeightModule>) -> Result<PLattice> {
        match self.reference_kind() {
            Reference::Monomial => Ok(PLattice::standard(m.clone(), self.p)),
            Reference::Minimal => minimal_admissible_lattice(m, self.p),
        }
    }

    fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            cap: self.subspace_cap,
            jobs: self.jobs,
            strategy: self.strategy,
            inject_fault: self.inject_fault,
        }
    }

    /// λ reported for the module: the top of its highest weights.
    fn report_lambda(&self, m: &HighestWeightModule) -> Result<Vec<i64>> {
        Ok(match self.recipe {
            Recipe::Simple => self.lambda.0.clone(),
            _ => m.decompose()?.first().map(|w| w.0.clone()).unwrap_or_default(),
        })
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// A command's JSON result and exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub exit: i32,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Self { json, exit: EXIT_OK }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

pub fn cmd_root(cartan: CartanType, structure: bool) -> Result<Outcome> {
    let rs = build_root_system(cartan)?;
    let mut out = json!({
        "type": rs.cartan_type.to_string(),
        "rank": rs.rank(),
        "cartan_matrix": rs.cartan_matrix,
        "num_roots": rs.roots.len(),
        "num_positive": rs.num_positive(),
        "positive_roots": rs.positive_roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
        "roots": rs.roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
        "rho": rs.rho().0,
    });
    if structure {
        out["structure_constants"] = serde_json::to_value(chevalley_basis(&rs).structure_table()).expect("serializable");
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_module(cfg: &RunConfig, matrices: bool) -> Result<Outcome> {
    let m = cfg.build_module()?;
    let hw = m.decompose()?;
    let mut mult: BTreeMap<String, usize> = BTreeMap::new();
    for w in m.weights() {
        *mult.entry(w.to_string()).or_default() += 1;
    }
    let mut out = json!({
        "type": cfg.cartan.to_string(),
        "rank": cfg.cartan.rank,
        "dim": m.dim(),
        "weights": m.weights().iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
        "weight_multiplicities": mult,
        "highest_weights": hw.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
    });
    if matrices {
        out["module"] = serde_json::to_value(m.to_json()).expect("serializable");
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_latticed(cfg: &RunConfig) -> Result<Outcome> {
    let m = cfg.build_module()?;
    let (ok, bad) = is_p_latticed(&m, cfg.p)?;
    let hw = m.decompose()?;
    let digits: Vec<Vec<Vec<i64>>> = hw
        .iter()
        .map(|w| steinberg_digits(w, cfg.p).map(|d| d.into_iter().map(|x| x.0).collect()))
        .collect::<Result<_>>()?;
    Ok(Outcome::ok(json!({
        "p": cfg.p,
        "p_latticed": ok,
        "highest_weights": hw.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
        "offending_weight": bad.map(|w| w.0),
        "steinberg_digits": digits,
    })))
}

/// Parses `"a/b,c,…"` into a vector of rationals.
pub fn parse_vector(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(|t| arith::parse_q(t.trim())).collect()
}

/// Stability report for a lattice given as a JSON file body, or for the
/// reference lattice enlarged by `extra` vectors.
pub fn cmd_lattice_check(cfg: &RunConfig, lattice: Option<&str>, extra: &[Vec<Q>]) -> Result<Outcome> {
    let m = cfg.build_module()?;
    let base = match lattice {
        Some(text) => {
            let j: LatticeJson =
                serde_json::from_str(text).map_err(|e| Error::Validation(format!("bad lattice JSON: {e}")))?;
            if j.p != cfg.p {
                return Err(Error::Validation(format!("lattice is over p = {}, config has p = {}", j.p, cfg.p)));
            }
            PLattice::from_json(m.clone(), &j)?
        }
        None => cfg.reference_lattice(&m)?,
    };
    if extra.iter().any(|v| v.len() != m.dim()) {
        return Err(Error::Validation(format!("added vectors must have length {}", m.dim())));
    }
    let l = base.with_vectors(extra.iter().cloned())?;
    Ok(Outcome::ok(json!({
        "lattice": l.to_json(),
        "report": stability_report(&l),
    })))
}

pub fn cmd_lattice_enumerate(cfg: &RunConfig, classify: bool) -> Result<Outcome> {
    let m = cfg.build_module()?;
    let reference = cfg.reference_lattice(&m)?;
    let window = Window::new(reference.clone())?;
    let lattices = enumerate_intermediate(&reference, cfg.subspace_cap)?;
    let rows: Vec<Value> = lattices
        .iter()
        .map(|l| {
            let mut v = json!({ "basis": l.to_json().basis });
            if classify {
                let r = stability_report(l);
                v["lie_stable"] = json!(r.lie_stable);
                v["group_stable"] = json!(r.group_stable);
            }
            v
        })
        .collect();
    Ok(Outcome::ok(json!({
        "p": cfg.p,
        "dim": m.dim(),
        "reference": reference.to_json().basis,
        "window_size": window.size().to_string().parse::<u128>().unwrap_or(u128::MAX),
        "count": lattices.len(),
        "lattices": rows,
    })))
}

pub fn cmd_counterexample(cfg: &RunConfig) -> Result<Outcome> {
    let m = cfg.build_module()?;
    let (latticed, _) = is_p_latticed(&m, cfg.p)?;
    let reference = cfg.reference_lattice(&m)?;
    let l = match &cfg.seed {
        Some(seed) => counterexample_from_seed(&reference, seed)?
            .ok_or_else(|| Error::Validation("the Lie-spin of this seed is divided-power stable".into()))?,
        None => {
            if latticed {
                return Err(Error::Validation(format!("module is {}-latticed; no counterexample exists", cfg.p)));
            }
            counterexample_lattice(&reference)?
        }
    };
    let window = Window::new(reference.clone())?;
    let residue = window.residue_of(&l)?;
    Ok(Outcome::ok(json!({
        "p": cfg.p,
        "p_latticed": latticed,
        "reference": reference.to_json().basis,
        "lattice": l.to_json().basis,
        "residue_dim": residue.dim(),
        "residue_weight_dims": residue_weight_dims(&window, &residue),
        "report": stability_report(&l),
    })))
}

/// `dim (S ∩ W_μ)` for each weight μ of the residue.
pub fn residue_weight_dims(window: &Window, s: &crate::fp::Subspace) -> BTreeMap<String, usize> {
    let weights = window.residue().weights.clone().unwrap_or_default();
    let mut out = BTreeMap::new();
    let mut blocks: BTreeMap<&Weight, Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        blocks.entry(w).or_default().push(i);
    }
    for (w, idx) in blocks {
        // S ∩ W_μ via the kernel of projection away from the block.
        let n = s.n;
        let mut inside = 0;
        let p = s.p;
        let mut coords = crate::fp::Subspace::zero(p, n);
        for r in &s.rows {
            let outer: Vec<u32> = (0..n).map(|j| if idx.contains(&j) { 0 } else { r[j] }).collect();
            if coords.insert(outer) {
                inside += 1;
            }
        }
        out.insert(w.to_string(), s.dim() - inside);
    }
    out
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    let m = cfg.build_module()?;
    let reference = cfg.reference_lattice(&m)?;
    let report = verify_theorem2(&reference, &cfg.report_lambda(&m)?, &cfg.verify_options())?;
    let exit = if report.matches_prediction() { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { json: serde_json::to_value(report.to_json()).expect("serializable"), exit })
}

/// Runs `verify` on every catalog case; a row per case and exit 1 on any
/// mismatch.
pub fn cmd_catalog(jobs: usize, subspace_cap: u128, inject_fault: bool) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut all_ok = true;
    for case in catalog::latticed_cases().into_iter().chain(catalog::non_latticed_cases()) {
        let mut cfg = RunConfig::new(case.cartan_type(), Weight(case.lambda.clone()), case.p);
        cfg.jobs = jobs;
        cfg.subspace_cap = subspace_cap;
        cfg.inject_fault = inject_fault;
        let out = cmd_verify(&cfg)?;
        let ok = out.exit == EXIT_OK;
        all_ok &= ok;
        rows.push(json!({
            "case": case.label(),
            "p_latticed": out.json["p_latticed"],
            "lie_stable_count": out.json["lie_stable_count"],
            "group_stable_count": out.json["group_stable_count"],
            "equal": out.json["equal"],
            "matches": ok,
        }));
    }
    Ok(Outcome { json: json!({ "cases": rows, "all_match": all_ok }), exit: if all_ok { EXIT_OK } else { EXIT_MISMATCH } })
}

/// Parses `"1,0,2"` into a weight.
pub fn parse_weight(s: &str) -> Result<Weight> {
    if s.trim().is_empty() {
        return Ok(Weight(vec![]));
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Validation(format!("bad weight coefficient {t:?}"))))
        .collect::<Result<Vec<_>>>()
        .map(Weight)
}

pub fn parse_family(s: &str) -> Result<Family> {
    s.parse()
}
