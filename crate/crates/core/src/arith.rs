//! Exact rational helpers and dense linear algebra over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `a/b` with an explicit denominator, always.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Validation(format!("cannot parse rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn int_valuation(n: &BigInt, p: u32) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while n.is_multiple_of(&p) {
        n /= &p;
        v += 1;
    }
    v
}

/// p-adic valuation; `None` for zero.
pub fn valuation(x: &Q, p: u32) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(int_valuation(x.numer(), p) - int_valuation(x.denom(), p))
}

pub fn is_p_integral(x: &Q, p: u32) -> bool {
    valuation(x, p).is_none_or(|v| v >= 0)
}

/// Image of a p-integral rational in 𝔽ₚ.
pub fn reduce_mod_p(x: &Q, p: u32) -> Option<u32> {
    if !is_p_integral(x, p) {
        return None;
    }
    let pb = BigInt::from(p);
    let n = x.numer().mod_floor(&pb).to_u64().unwrap();
    let d = x.denom().mod_floor(&pb).to_u64().unwrap();
    Some(((n * inv_mod(d, p as u64)) % p as u64) as u32)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    r
}

pub fn p_power(p: u32, e: i64) -> Q {
    let base = Q::from_integer(BigInt::from(p));
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

/// Canonical representative of `x` modulo `p^k ℤ₍ₚ₎`: the unique element of
/// `ℤ[1/p] ∩ [0, p^k)` congruent to `x`.
pub fn residue_mod_power(x: &Q, p: u32, k: i64) -> Q {
    if x.is_zero() {
        return Q::zero();
    }
    let pb = BigInt::from(p);
    // x = a / (b p^m) with p ∤ b
    let mut den = x.denom().clone();
    let mut m = 0i64;
    while den.is_multiple_of(&pb) {
        den /= &pb;
        m += 1;
    }
    let shift = m.max(0);
    let modulus_exp = shift + k;
    if modulus_exp <= 0 {
        return Q::zero();
    }
    let modulus = num_traits::pow(pb.clone(), modulus_exp as usize);
    let b_inv = den
        .mod_floor(&modulus)
        .modpow(&(phi_power(p, modulus_exp) - BigInt::one()), &modulus);
    let c = (x.numer() * b_inv).mod_floor(&modulus);
    Q::new(c, num_traits::pow(pb, shift as usize))
}

fn phi_power(p: u32, e: i64) -> BigInt {
    // Euler phi of p^e
    let pb = BigInt::from(p);
    num_traits::pow(pb.clone(), (e - 1) as usize) * (pb - BigInt::one())
}

/// Row-reduced echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    if !m[r][j].is_zero() {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn inverse(m: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Internal("singular matrix".into()));
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if piv != c {
            a.swap(piv, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let t = &a[c][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
    }
    det
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(Q::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

pub fn abs_ceil(x: &Q) -> i64 {
    x.abs().ceil().to_integer().to_i64().unwrap_or(i64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format_q(&q_frac(6, -4)), "-3/2");
        assert_eq!(format_q(&q(5)), "5/1");
        assert_eq!(parse_q("-3/2").unwrap(), q_frac(-3, 2));
        assert_eq!(parse_q("7").unwrap(), q(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn valuations_and_reduction() {
        assert_eq!(valuation(&q_frac(9, 2), 3), Some(2));
        assert_eq!(valuation(&q_frac(2, 27), 3), Some(-3));
        assert_eq!(valuation(&q(0), 3), None);
        assert_eq!(reduce_mod_p(&q_frac(1, 2), 3), Some(2));
        assert_eq!(reduce_mod_p(&q_frac(1, 3), 3), None);
        assert_eq!(reduce_mod_p(&q(-1), 5), Some(4));
    }

    #[test]
    fn residues_mod_powers() {
        // 1/2 mod 3 is 2
        assert_eq!(residue_mod_power(&q_frac(1, 2), 3, 1), q(2));
        // 1/6 = 1/(2*3): representative c/3 with c ≡ 1/2 mod 9, c = 5
        assert_eq!(residue_mod_power(&q_frac(1, 6), 3, 1), q_frac(5, 3));
        assert_eq!(residue_mod_power(&q(7), 3, 0), q(0));
        assert_eq!(residue_mod_power(&q(-1), 2, 2), q(3));
        let x = q_frac(11, 12);
        let r = residue_mod_power(&x, 2, 3);
        assert!(valuation(&(x - &r), 2).map_or(true, |v| v >= 3));
    }

    #[test]
    fn kernel_and_inverse() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&m, v).iter().all(|x| x.is_zero()));
        }
        let a = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert_eq!(determinant(&a), q(1));
    }
}
