//! Class representatives and closed-form counts for the two families.
//!
//! Axial classes on `n = 3m` vertices are the tuples `(a, b, a, a, b, a, …)`
//! and circular classes the tuples `(a, b, c, a, b, c, …)`, where every
//! generator is `≡ 1 (mod 3)` and the winding number `u` is prime to `m`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygon::SideTuple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AxialRep {
    pub m: u32,
    pub a: u32,
    pub b: u32,
    pub u: u32,
}

impl AxialRep {
    pub fn n(&self) -> usize {
        3 * self.m as usize
    }

    /// The length-`3m` tuple repeating `(a, b, a)`.
    pub fn expand(&self) -> SideTuple {
        SideTuple::periodic(self.n(), &[self.a, self.b, self.a])
            .expect("axial generators lie in [1, n-2]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CircularRep {
    pub m: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub u: u32,
}

impl CircularRep {
    pub fn n(&self) -> usize {
        3 * self.m as usize
    }

    /// The length-`3m` tuple repeating `(a, b, c)`.
    pub fn expand(&self) -> SideTuple {
        SideTuple::periodic(self.n(), &[self.a, self.b, self.c])
            .expect("circular generators lie in [1, n-2]")
    }
}

pub fn expand_axial(r: &AxialRep) -> SideTuple {
    r.expand()
}

pub fn expand_circular(r: &CircularRep) -> SideTuple {
    r.expand()
}

/// Recovers the residue-1 pair `(a, b)` of a tuple with side pattern
/// `(a, b, a)` up to cyclic shift. Tuples written with residue-2 sides are
/// mapped through the reversed complement, which walks the same polygon.
pub fn axial_generators(t: &SideTuple) -> Option<(u32, u32)> {
    let s = t.sides();
    let n = s.len() as u32;
    if !n.is_multiple_of(3) || !(3..s.len()).all(|i| s[i] == s[i - 3]) {
        return None;
    }
    let k = (0..3).find(|&k| s[k] == s[(k + 2) % 3] && s[k] != s[(k + 1) % 3])?;
    let (a, b) = (s[k], s[(k + 1) % 3]);
    match a % 3 {
        1 => Some((a, b)),
        2 => Some((n - a, n - b)),
        _ => None,
    }
}

/// Recovers the residue-1 triple of a tuple with three distinct repeating
/// sides, as its least cyclic shift.
pub fn circular_generators(t: &SideTuple) -> Option<(u32, u32, u32)> {
    let s = t.sides();
    let n = s.len() as u32;
    if !n.is_multiple_of(3) || !(3..s.len()).all(|i| s[i] == s[i - 3]) {
        return None;
    }
    let (a, b, c) = (s[0], s[1], s[2]);
    if a == b || b == c || a == c {
        return None;
    }
    let g = match a % 3 {
        1 => [a, b, c],
        2 => [n - c, n - b, n - a],
        _ => return None,
    };
    let k = crate::polygon::least_rotation(&g);
    Some((g[k], g[(k + 1) % 3], g[(k + 2) % 3]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsRow {
    pub n: u32,
    pub m: u32,
    #[serde(rename = "p")]
    pub p_count: u64,
    #[serde(rename = "q")]
    pub q_count: u64,
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut rest = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_m(m: u32) -> Result<()> {
    if m <= 2 {
        Err(Error::MTooSmall(m))
    } else {
        Ok(())
    }
}

/// Generators `1, 4, 7, …, 3m-2`.
fn residue_one(m: u32) -> impl Iterator<Item = u32> + Clone {
    (0..m).map(|i| 3 * i + 1)
}

/// All axial classes for `n = 3m`, ordered by `(a, b)`.
pub fn enumerate_axial(m: u32) -> Result<Vec<AxialRep>> {
    check_m(m)?;
    let mut reps = Vec::new();
    for a in residue_one(m) {
        for b in residue_one(m).filter(|&b| b != a) {
            let u = (2 * a + b) / 3;
            if gcd(u as u64, m as u64) == 1 {
                reps.push(AxialRep { m, a, b, u });
            }
        }
    }
    Ok(reps)
}

/// All circular classes for `n = 3m`, each as its least cyclic shift, ordered
/// by `(a, b, c)`.
pub fn enumerate_circular(m: u32) -> Result<Vec<CircularRep>> {
    check_m(m)?;
    let mut reps = Vec::new();
    // the least cyclic shift of pairwise distinct values starts at the minimum
    for a in residue_one(m) {
        for b in residue_one(m).filter(|&b| b > a) {
            for c in residue_one(m).filter(|&c| c > a && c != b) {
                let u = (a + b + c) / 3;
                if gcd(u as u64, m as u64) == 1 {
                    reps.push(CircularRep { m, a, b, c, u });
                }
            }
        }
    }
    Ok(reps)
}

/// `m·φ(m) − φ(3m)/2`.
pub fn count_axial(m: u32) -> Result<u64> {
    check_m(m)?;
    let m = m as u64;
    Ok(m * euler_phi(m)? - euler_phi(3 * m)? / 2)
}

/// `(φ(m)·m·(m−3) + φ(3m)) / 3`.
pub fn count_circular(m: u32) -> Result<u64> {
    check_m(m)?;
    let m = m as u64;
    let numerator = euler_phi(m)? * m * (m - 3) + euler_phi(3 * m)?;
    assert_eq!(numerator % 3, 0, "circular count numerator not divisible by 3");
    Ok(numerator / 3)
}

fn check_prime(p: u32) -> Result<()> {
    if p > 3 && is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `(p−1)²` for a prime `p > 3`.
pub fn count_axial_prime(p: u32) -> Result<u64> {
    check_prime(p)?;
    let p = p as u64;
    Ok((p - 1) * (p - 1))
}

/// `(p·(p−1)·(p−3) + 2·(p−1)) / 3 = (p−1)²·(p−2) / 3` for a prime `p > 3`.
pub fn count_circular_prime(p: u32) -> Result<u64> {
    check_prime(p)?;
    let p = p as u64;
    Ok((p - 1) * (p - 1) * (p - 2) / 3)
}

pub fn counts_table(m_from: u32, m_to: u32) -> Result<Vec<CountsRow>> {
    check_m(m_from)?;
    if m_from > m_to {
        return Err(Error::EmptyRange {
            from: m_from,
            to: m_to,
        });
    }
    (m_from..=m_to)
        .map(|m| {
            Ok(CountsRow {
                n: 3 * m,
                m,
                p_count: count_axial(m)?,
                q_count: count_circular(m)?,
            })
        })
        .collect()
}
