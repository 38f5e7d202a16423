//! The fixed list of modules and primes exercised by the acceptance suite
//! and the `catalog` command.

use serde::Serialize;

use crate::error::Result;
use crate::rootsystem::{build_root_system, CartanType, Family, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub p: u32,
}

impl Case {
    pub fn new(family: Family, rank: usize, lambda: &[i64], p: u32) -> Self {
        Self { family, rank, lambda: lambda.to_vec(), p }
    }

    pub fn cartan_type(&self) -> CartanType {
        CartanType { family: self.family, rank: self.rank }
    }

    pub fn label(&self) -> String {
        let l: Vec<String> = self.lambda.iter().map(i64::to_string).collect();
        format!("{}{} λ=({}) p={}", self.family, self.rank, l.join(","), self.p)
    }
}

/// p-latticed simple modules whose windows must show equal stable sets.
pub fn latticed_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for p in [2u32, 3, 5] {
        for m in 0..p as i64 {
            out.push(Case::new(Family::A, 1, &[m], p));
        }
    }
    for p in [2u32, 3] {
        for l in [[1, 0], [0, 1], [1, 1]] {
            out.push(Case::new(Family::A, 2, &l, p));
        }
    }
    out
}

/// Simple modules that are not p-latticed.
pub fn non_latticed_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for p in [2u32, 3] {
        let p_ = p as i64;
        out.push(Case::new(Family::A, 1, &[p_], p));
        out.push(Case::new(Family::A, 1, &[p_ + 1], p));
    }
    out.push(Case::new(Family::A, 2, &[2, 0], 2));
    out
}

/// Every dominant weight with Weyl dimension at most `max_dim` on A1, A2,
/// B2 and C2, together with 0 and the fundamental weights of G2.
pub fn construction_catalog(max_dim: u64) -> Result<Vec<(CartanType, Weight)>> {
    let mut out = Vec::new();
    for (family, rank) in [(Family::A, 1), (Family::A, 2), (Family::B, 2), (Family::C, 2)] {
        let t = CartanType::new(family, rank)?;
        let rs = build_root_system(t)?;
        // Weyl dimension grows in every coordinate, so a box search with
        // early exit along each axis is complete.
        let bound = max_dim as i64;
        let mut stack = vec![vec![0i64; rank]];
        let mut seen = std::collections::BTreeSet::new();
        while let Some(l) = stack.pop() {
            if !seen.insert(l.clone()) {
                continue;
            }
            let w = Weight(l.clone());
            if rs.weyl_dim(&w)? > max_dim {
                continue;
            }
            out.push((t, w));
            for i in 0..rank {
                let mut next = l.clone();
                next[i] += 1;
                if next[i] <= bound {
                    stack.push(next);
                }
            }
        }
    }
    out.sort_by(|a, b| (a.0.to_string(), &a.1 .0).cmp(&(b.0.to_string(), &b.1 .0)));
    let g2 = CartanType::new(Family::G, 2)?;
    for l in [[0, 0], [1, 0], [0, 1]] {
        out.push((g2, Weight(l.to_vec())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        assert_eq!(latticed_cases().len(), 10 + 6);
        assert_eq!(non_latticed_cases().len(), 5);
        let c = construction_catalog(30).unwrap();
        let a1 = c.iter().filter(|(t, _)| t.to_string() == "A1").count();
        assert_eq!(a1, 30);
        assert!(c.iter().any(|(t, w)| t.to_string() == "A2" && w.0 == vec![2, 2]));
    }
}
