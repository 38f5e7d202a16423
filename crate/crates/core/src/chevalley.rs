//! Chevalley bases with integer structure constants.
//!
//! Signs come from the extraspecial-pair construction: every non-simple
//! positive root ξ has a distinguished decomposition ξ = α + β with α the
//! first positive root (canonical order) for which ξ − α is a root, and
//! `N_{α,β}` is set to `+(p+1)` there. All other constants follow from the
//! standard relations between the `N`'s.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, Q};
use crate::error::{Error, Result};
pub use crate::operator::LinearOperator;
use crate::rootsystem::{Root, RootSystem, Weight};

/// Sparse integer coordinates over the Chevalley basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieElement(pub BTreeMap<usize, i64>);

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, 1)
    }

    pub fn term(i: usize, c: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(i, c);
        }
        Self(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_scaled(&mut self, other: &LieElement, s: i64) {
        for (&i, &c) in &other.0 {
            let e = self.0.entry(i).or_insert(0);
            *e += c * s;
            if *e == 0 {
                self.0.remove(&i);
            }
        }
    }

    pub fn scaled(&self, s: i64) -> LieElement {
        let mut out = LieElement::zero();
        out.add_scaled(self, s);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Raising operator for positive root `k`.
    E(usize),
    /// Lowering operator for positive root `k`.
    F(usize),
    /// Coroot `h_i` (0-based).
    H(usize),
}

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    pub rs: RootSystem,
    table: Vec<Vec<LieElement>>,
    /// `N_{α,β}` keyed by root indices (positive roots first, then negatives).
    constants: HashMap<(usize, usize), i64>,
}

pub fn chevalley_basis(rs: &RootSystem) -> Arc<ChevalleyBasis> {
    let n_roots = rs.roots.len();
    let mut solver = SignSolver::new(rs);
    let mut constants = HashMap::new();
    for a in 0..n_roots {
        for b in 0..n_roots {
            let c = solver.n(a, b);
            if c != 0 {
                constants.insert((a, b), c);
            }
        }
    }
    let mut cb = ChevalleyBasis { rs: rs.clone(), table: Vec::new(), constants };
    let dim = cb.dim();
    cb.table = (0..dim).map(|i| (0..dim).map(|j| cb.bracket_basis(i, j)).collect()).collect();
    Arc::new(cb)
}

impl ChevalleyBasis {
    pub fn dim(&self) -> usize {
        self.rs.roots.len() + self.rs.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    pub fn index_of(&self, g: Generator) -> usize {
        let n = self.num_positive();
        match g {
            Generator::E(k) => k,
            Generator::F(k) => n + k,
            Generator::H(i) => 2 * n + i,
        }
    }

    pub fn generator(&self, idx: usize) -> Generator {
        let n = self.num_positive();
        if idx < n {
            Generator::E(idx)
        } else if idx < 2 * n {
            Generator::F(idx - n)
        } else {
            Generator::H(idx - 2 * n)
        }
    }

    pub fn name(&self, idx: usize) -> String {
        match self.generator(idx) {
            Generator::E(k) => format!("e{}", k + 1),
            Generator::F(k) => format!("f{}", k + 1),
            Generator::H(i) => format!("h{}", i + 1),
        }
    }

    pub fn index_by_name(&self, name: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.name(i) == name)
    }

    /// Root index (into `rs.roots`) of a root-vector basis element.
    fn root_of(&self, idx: usize) -> Option<usize> {
        (idx < self.rs.roots.len()).then_some(idx)
    }

    /// Weight of a basis element under the adjoint action.
    pub fn basis_weight(&self, idx: usize) -> Weight {
        match self.root_of(idx) {
            Some(r) => self.rs.root_to_weight(&self.rs.roots[r].0),
            None => Weight::zero(self.rs.rank()),
        }
    }

    /// `N_{α,β}` for root indices.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.constants.get(&(a, b)).copied().unwrap_or(0)
    }

    /// `h_α` for a root index, as a combination of the `h_i`.
    pub fn coroot_element(&self, r: usize) -> LieElement {
        let n = self.num_positive();
        let (pos, sign) = if r < n { (r, 1) } else { (r - n, -1) };
        let coords = self.rs.coroot_coords(&self.rs.positive_roots[pos]);
        let mut out = LieElement::zero();
        for (i, c) in coords.into_iter().enumerate() {
            out.add_scaled(&LieElement::term(2 * n + i, c), sign);
        }
        out
    }

    fn bracket_basis(&self, i: usize, j: usize) -> LieElement {
        let rs = &self.rs;
        match (self.root_of(i), self.root_of(j)) {
            (Some(a), Some(b)) => {
                let sum: Vec<i64> = rs.roots[a].0.iter().zip(&rs.roots[b].0).map(|(x, y)| x + y).collect();
                if sum.iter().all(|&c| c == 0) {
                    self.coroot_element(a)
                } else if let Some(k) = rs.root_index(&Root(sum)) {
                    LieElement::term(k, self.structure_constant(a, b))
                } else {
                    LieElement::zero()
                }
            }
            (None, Some(b)) => {
                let h = i - rs.roots.len();
                LieElement::term(j, rs.root_to_weight(&rs.roots[b].0).0[h])
            }
            (Some(a), None) => {
                let h = j - rs.roots.len();
                LieElement::term(i, -rs.root_to_weight(&rs.roots[a].0).0[h])
            }
            (None, None) => LieElement::zero(),
        }
    }

    /// Bracket of two basis elements (table lookup).
    pub fn bracket_of(&self, i: usize, j: usize) -> &LieElement {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (&i, &a) in &x.0 {
            for (&j, &b) in &y.0 {
                out.add_scaled(&self.table[i][j], a * b);
            }
        }
        out
    }

    /// Matrix of `ad x` on the basis (columns are images of basis vectors).
    pub fn ad(&self, i: usize) -> LinearOperator {
        let dim = self.dim();
        LinearOperator::from_entries(
            dim,
            (0..dim).flat_map(|j| {
                self.table[i][j].0.iter().map(move |(&k, &c)| ((k, j), arith::q(c))).collect::<Vec<_>>()
            }),
        )
    }

    /// `K(x_i, x_j) = tr(ad x_i ∘ ad x_j)`.
    pub fn killing_form(&self) -> Vec<Vec<i64>> {
        let dim = self.dim();
        let ads: Vec<LinearOperator> = (0..dim).map(|i| self.ad(i)).collect();
        (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| ads[i].compose(&ads[j]).trace().to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect()
    }

    /// First ordered basis triple violating the Jacobi identity, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let x = LieElement::basis(i);
                    let y = LieElement::basis(j);
                    let z = LieElement::basis(k);
                    let mut s = self.bracket(&x, &self.bracket(&y, &z));
                    s.add_scaled(&self.bracket(&y, &self.bracket(&z, &x)), 1);
                    s.add_scaled(&self.bracket(&z, &self.bracket(&x, &y)), 1);
                    if !s.is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis triple with `K([x,y],z) ≠ K(x,[y,z])` for the given form.
    pub fn invariance_violation(&self, k: &[Vec<i64>]) -> Option<(usize, usize, usize)> {
        let pair = |a: &LieElement, j: usize| -> i64 { a.0.iter().map(|(&i, &c)| c * k[i][j]).sum() };
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    let lhs = pair(self.bracket_of(i, j), l);
                    let rhs: i64 = self.bracket_of(j, l).0.iter().map(|(&m, &c)| c * k[i][m]).sum();
                    if lhs != rhs {
                        return Some((i, j, l));
                    }
                }
            }
        }
        None
    }

    pub fn structure_table(&self) -> StructureTable {
        let dim = self.dim();
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let r = &self.table[i][j];
                if !r.is_zero() {
                    brackets.push(BracketEntry {
                        x: self.name(i),
                        y: self.name(j),
                        result: r.0.iter().map(|(&k, &c)| (self.name(k), c)).collect(),
                    });
                }
            }
        }
        StructureTable {
            cartan_type: self.rs.cartan_type.to_string(),
            rank: self.rs.rank(),
            basis: (0..dim).map(|i| self.name(i)).collect(),
            positive_roots: self.rs.positive_roots.iter().map(|r| r.0.clone()).collect(),
            brackets,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BracketEntry {
    pub x: String,
    pub y: String,
    pub result: Vec<(String, i64)>,
}

/// JSON export of the bracket table (pairs `x < y` with nonzero bracket).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureTable {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub basis: Vec<String>,
    pub positive_roots: Vec<Vec<i64>>,
    pub brackets: Vec<BracketEntry>,
}

struct SignSolver<'a> {
    rs: &'a RootSystem,
    memo: HashMap<(usize, usize), i64>,
}

impl<'a> SignSolver<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        Self { rs, memo: HashMap::new() }
    }

    fn npos(&self) -> usize {
        self.rs.num_positive()
    }

    fn neg(&self, a: usize) -> usize {
        let n = self.npos();
        (a + n) % (2 * n)
    }

    fn coords(&self, a: usize) -> &[i64] {
        &self.rs.roots[a].0
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.coords(a).iter().zip(self.coords(b)).map(|(x, y)| x + y).collect();
        self.rs.root_index(&Root(s))
    }

    fn diff(&self, a: usize, b: usize) -> Option<usize> {
        self.sum(a, self.neg(b))
    }

    fn len2(&self, a: usize) -> i64 {
        self.rs.root_inner(self.coords(a), self.coords(a))
    }

    /// Largest p with β − pα a root.
    fn string_p(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut cur = b;
        while let Some(next) = self.diff(cur, a) {
            cur = next;
            p += 1;
        }
        p
    }

    fn extraspecial(&self, xi: usize) -> Option<(usize, usize)> {
        (0..self.npos()).find_map(|a| {
            let b = self.diff(xi, a)?;
            (b < self.npos()).then_some((a, b))
        })
    }

    fn n(&mut self, a: usize, b: usize) -> i64 {
        if let Some(&v) = self.memo.get(&(a, b)) {
            return v;
        }
        let v = self.compute(a, b);
        self.memo.insert((a, b), v);
        v
    }

    fn compute(&mut self, a: usize, b: usize) -> i64 {
        let npos = self.npos();
        let Some(xi) = self.sum(a, b) else {
            return 0;
        };
        let pos_a = a < npos;
        let pos_b = b < npos;
        match (pos_a, pos_b) {
            (true, true) => {
                let (g, d) = self.extraspecial(xi).expect("non-simple root has a decomposition");
                let ngd = self.string_p(g, d) + 1;
                if (a, b) == (g, d) {
                    return ngd;
                }
                if (a, b) == (d, g) {
                    return -ngd;
                }
                let mut total = Q::zero();
                if let Some(bg) = self.diff(b, g) {
                    let t = self.n(b, self.neg(g)) * self.n(a, self.neg(d));
                    total += arith::q_frac(t, self.len2(bg));
                }
                if let Some(ag) = self.diff(a, g) {
                    let t = self.n(self.neg(g), a) * self.n(b, self.neg(d));
                    total += arith::q_frac(t, self.len2(ag));
                }
                let v = total * arith::q(self.len2(xi)) / arith::q(ngd);
                assert!(v.is_integer(), "non-integral structure constant");
                v.to_integer().to_i64().unwrap()
            }
            (false, false) => -self.n(self.neg(a), self.neg(b)),
            _ => {
                // a + b + c = 0 with c = −ξ
                let c = self.neg(xi);
                let pos_c = c < npos;
                if pos_c == pos_b {
                    // N_{a,b}/(c,c) = N_{b,c}/(a,a)
                    let v = self.n(b, c) * self.len2(c);
                    debug_assert_eq!(v % self.len2(a), 0);
                    v / self.len2(a)
                } else {
                    // N_{a,b}/(c,c) = N_{c,a}/(b,b)
                    let v = self.n(c, a) * self.len2(c);
                    debug_assert_eq!(v % self.len2(b), 0);
                    v / self.len2(b)
                }
            }
        }
    }
}

/// Adjoint representation of the Chevalley ℤ-form.
pub fn adjoint_rep(cb: &Arc<ChevalleyBasis>) -> Result<crate::highestweight::HighestWeightModule> {
    let action = (0..cb.dim()).map(|i| cb.ad(i)).collect();
    crate::highestweight::HighestWeightModule::from_action(cb.clone(), action)
}

pub fn killing_determinant(cb: &ChevalleyBasis) -> Q {
    let k: Vec<Vec<Q>> = cb.killing_form().iter().map(|r| r.iter().map(|&x| arith::q(x)).collect()).collect();
    arith::determinant(&k)
}

pub(crate) fn ensure_same(a: &Arc<ChevalleyBasis>, b: &Arc<ChevalleyBasis>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a.rs.cartan_type == b.rs.cartan_type {
        Ok(())
    } else {
        Err(Error::MismatchedAlgebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{build_root_system, CartanType, Family};

    fn cb(f: Family, n: usize) -> Arc<ChevalleyBasis> {
        chevalley_basis(&build_root_system(CartanType { family: f, rank: n }).unwrap())
    }

    #[test]
    fn sl2_relations() {
        let c = cb(Family::A, 1);
        // basis e, f, h
        assert_eq!(c.bracket_of(2, 0), &LieElement::term(0, 2));
        assert_eq!(c.bracket_of(2, 1), &LieElement::term(1, -2));
        assert_eq!(c.bracket_of(0, 1), &LieElement::term(2, 1));
        assert!(c.bracket_of(0, 0).is_zero());
    }

    #[test]
    fn a2_constants() {
        let c = cb(Family::A, 2);
        assert_eq!(c.structure_constant(0, 1).abs(), 1);
        let r = c.bracket(&LieElement::basis(0), &LieElement::basis(1));
        assert!(r == LieElement::term(2, 1) || r == LieElement::term(2, -1));
    }

    #[test]
    fn g2_has_triple_constant() {
        let c = cb(Family::G, 2);
        let n = c.rs.roots.len();
        let max = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| c.structure_constant(a, b).abs()).max();
        assert_eq!(max, Some(3));
    }

    #[test]
    fn constants_match_root_strings() {
        for t in CartanType::all_supported() {
            let c = chevalley_basis(&build_root_system(t).unwrap());
            let s = SignSolver::new(&c.rs);
            let n = c.rs.roots.len();
            for a in 0..n {
                for b in 0..n {
                    let v = c.structure_constant(a, b);
                    assert_eq!(v, -c.structure_constant(b, a));
                    assert!(v.abs() <= 4);
                    if s.sum(a, b).is_some() {
                        assert_eq!(v.abs(), s.string_p(a, b) + 1, "{t} {a} {b}");
                    } else {
                        assert_eq!(v, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_small_types() {
        for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::G, 2)] {
            assert_eq!(cb(f, n).jacobi_violation(), None, "{f}{n}");
        }
    }

    #[test]
    fn killing_form_sl2() {
        let k = cb(Family::A, 1).killing_form();
        assert_eq!(k[2][2], 8);
        assert_eq!(k[0][0], 0);
        assert_eq!(k[0][1], 4);
        for t in CartanType::all_supported() {
            let c = chevalley_basis(&build_root_system(t).unwrap());
            let k = c.killing_form();
            for i in 0..c.dim() {
                for j in 0..c.dim() {
                    assert_eq!(k[i][j], k[j][i]);
                }
            }
        }
    }

    #[test]
    fn structure_table_json() {
        let t = cb(Family::A, 1).structure_table();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["type"], "A1");
        assert_eq!(v["basis"], serde_json::json!(["e1", "f1", "h1"]));
        let back: StructureTable = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
        assert!(t.brackets.iter().any(|b| b.x == "e1" && b.y == "f1" && b.result == vec![("h1".to_string(), 1)]));
    }
}
