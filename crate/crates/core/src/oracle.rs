//! Brute-force ground truth that never consults the counting theorems.
//!
//! Two exhaustive scans are provided. The period-3 sweep expands every
//! triple `(a, b, c) ∈ [1, n-1]³` without residue or gcd filtering; the full
//! census walks every Hamiltonian cycle on up to 12 vertices. Both classify
//! geometrically via [`EdgeSet::symmetry_profile`] and bucket rotation
//! classes by canonical form.
//!
//! [`EdgeSet::symmetry_profile`]: crate::polygon::EdgeSet::symmetry_profile

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, Family};
use crate::enumerate::{enumerate_axial, enumerate_circular, euler_phi, gcd};
use crate::error::{Error, Result};
use crate::polygon::{is_canonical, SideTuple};

pub const CENSUS_MAX_N: usize = 12;

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: usize,
    pub axial_classes: BTreeSet<SideTuple>,
    pub circular_classes: BTreeSet<SideTuple>,
    pub regular_classes: BTreeSet<SideTuple>,
    /// Valid classes falling in none of the three families.
    pub other_classes: u64,
    /// Raw objects examined: triples for the sweep, undirected Hamiltonian
    /// cycles for the census.
    pub census_size: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Equality ignores `elapsed`.
impl PartialEq for OracleReport {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.axial_classes == other.axial_classes
            && self.circular_classes == other.circular_classes
            && self.regular_classes == other.regular_classes
            && self.other_classes == other.other_classes
            && self.census_size == other.census_size
    }
}

impl Eq for OracleReport {}

impl OracleReport {
    fn empty(n: usize) -> Self {
        OracleReport {
            n,
            ..Default::default()
        }
    }

    fn record(&mut self, canonical: SideTuple, family: Family) {
        match family {
            Family::Axial(_) => self.axial_classes.insert(canonical),
            Family::Circular(_) => self.circular_classes.insert(canonical),
            Family::Regular => self.regular_classes.insert(canonical),
            Family::Other => {
                self.other_classes += 1;
                true
            }
        };
    }

    fn merge(mut self, other: OracleReport) -> OracleReport {
        self.axial_classes.extend(other.axial_classes);
        self.circular_classes.extend(other.circular_classes);
        self.regular_classes.extend(other.regular_classes);
        self.other_classes += other.other_classes;
        self.census_size += other.census_size;
        self
    }
}

/// Runs `f` on a pool with `jobs` workers; `0` selects the rayon default.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn check_m(m: u32) -> Result<()> {
    if m <= 2 {
        Err(Error::MTooSmall(m))
    } else {
        Ok(())
    }
}

/// Expands every triple in `[1, n-1]³` into a period-3 tuple on `n = 3m`
/// vertices and buckets the valid ones by geometric family.
pub fn sweep_period3(m: u32) -> Result<OracleReport> {
    check_m(m)?;
    let start = Instant::now();
    let n = 3 * m as usize;
    let top = n as u32 - 1;
    // shard on the first generator; within a shard the class set of
    // "other" polygons is deduplicated before counting
    let mut report = (1..=top)
        .into_par_iter()
        .map(|a| {
            let mut part = OracleReport::empty(n);
            let mut others = BTreeSet::new();
            for b in 1..=top {
                for c in 1..=top {
                    part.census_size += 1;
                    let t = SideTuple::periodic(n, &[a, b, c]).expect("sides in range");
                    let Ok(canonical) = t.canonical_form() else {
                        continue;
                    };
                    match classify(&canonical).expect("canonical tuple walks") {
                        Family::Other => {
                            others.insert(canonical);
                        }
                        family => part.record(canonical, family),
                    }
                }
            }
            (part, others)
        })
        .reduce(
            || (OracleReport::empty(n), BTreeSet::new()),
            |(ra, mut oa), (rb, ob)| {
                oa.extend(ob);
                (ra.merge(rb), oa)
            },
        );
    report.0.other_classes = report.1.len() as u64;
    report.0.elapsed = start.elapsed();
    Ok(report.0)
}

/// Walks every Hamiltonian cycle on `n` circle vertices and buckets the
/// rotation classes by geometric family.
///
/// Cycles are generated from vertex 0 with `σ_2 < σ_n` so each undirected
/// cycle is seen once. Of the two side tuples read from vertex 0, a cycle
/// represents its class when either one is canonical, which picks exactly
/// one cycle per class without a global set.
pub fn census_full(n: usize) -> Result<OracleReport> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    if n > CENSUS_MAX_N {
        return Err(Error::NTooLarge(n));
    }
    let start = Instant::now();
    let mut report = (1..n as u32)
        .into_par_iter()
        .map(|second| census_shard(n, second))
        .reduce(|| OracleReport::empty(n), OracleReport::merge);
    report.elapsed = start.elapsed();
    Ok(report)
}

struct CensusWalk {
    n: usize,
    path: Vec<u32>,
    sides: Vec<u32>,
    reversed: Vec<u32>,
    report: OracleReport,
}

fn census_shard(n: usize, second: u32) -> OracleReport {
    let mut walk = CensusWalk {
        n,
        path: vec![0, second],
        sides: vec![0; n],
        reversed: vec![0; n],
        report: OracleReport::empty(n),
    };
    walk.extend(1 | (1 << second));
    walk.report
}

impl CensusWalk {
    fn extend(&mut self, visited: u32) {
        let n = self.n as u32;
        if self.path.len() == self.n {
            if self.path[self.n - 1] > self.path[1] {
                self.leaf();
            }
            return;
        }
        for v in 1..n {
            if visited & (1 << v) == 0 {
                self.path.push(v);
                self.extend(visited | (1 << v));
                self.path.pop();
            }
        }
    }

    fn leaf(&mut self) {
        let n = self.n;
        let nv = n as u32;
        self.report.census_size += 1;
        for i in 0..n {
            let (p, q) = (self.path[i], self.path[(i + 1) % n]);
            self.sides[i] = (q + nv - p) % nv;
        }
        for i in 0..n {
            self.reversed[i] = nv - self.sides[n - 1 - i];
        }
        let rep = if is_canonical(&self.sides) {
            &self.sides
        } else if is_canonical(&self.reversed) {
            &self.reversed
        } else {
            return;
        };
        let t = SideTuple::new(n, rep.clone()).expect("sides in range");
        let family = classify(&t).expect("census cycles are valid walks");
        self.report.record(t, family);
    }
}

/// Both sides of `m²·φ(m) = 3·|Q| + 3·|P| + φ(3m)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub m: u32,
    pub lhs: u64,
    pub rhs: u64,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates the identity using enumerated class counts.
pub fn verify_identity(m: u32) -> Result<IdentityCheck> {
    check_m(m)?;
    let p = enumerate_axial(m)?.len() as u64;
    let q = enumerate_circular(m)?.len() as u64;
    let mm = m as u64;
    let lhs = mm * mm * euler_phi(mm)?;
    let rhs = 3 * q + 3 * p + euler_phi(3 * mm)? / 2;
    Ok(IdentityCheck { m, lhs, rhs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremFamily {
    Axial,
    Circular,
}

/// A generator tuple on which walk validity and the gcd test disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdCounterexample {
    pub m: u32,
    pub generators: Vec<u32>,
    pub gcd: u64,
    pub walks: bool,
}

/// First residue-1 generator tuple for which "the expanded tuple walks" and
/// "gcd(sum, 3m) = 3" disagree, if any.
pub fn gcd_counterexample(m: u32, family: TheoremFamily) -> Result<Option<GcdCounterexample>> {
    check_m(m)?;
    let n = 3 * m as usize;
    let values: Vec<u32> = (0..m).map(|i| 3 * i + 1).collect();
    let candidates: Vec<(Vec<u32>, Vec<u32>, u64)> = match family {
        TheoremFamily::Axial => values
            .iter()
            .flat_map(|&a| values.iter().map(move |&b| (a, b)))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (vec![a, b], vec![a, b, a], (2 * a + b) as u64))
            .collect(),
        TheoremFamily::Circular => {
            let mut out = Vec::new();
            for &a in &values {
                for &b in values.iter().filter(|&&b| b != a) {
                    for &c in values.iter().filter(|&&c| c != a && c != b) {
                        out.push((vec![a, b, c], vec![a, b, c], (a + b + c) as u64));
                    }
                }
            }
            out
        }
    };
    for (generators, pattern, sum) in candidates {
        let t = SideTuple::periodic(n, &pattern)?;
        let walks = t.walk().is_ok();
        let d = gcd(sum, n as u64);
        if walks != (d == 3) {
            return Ok(Some(GcdCounterexample {
                m,
                generators,
                gcd: d,
                walks,
            }));
        }
    }
    Ok(None)
}

/// True when the walk/gcd biconditional holds on the whole generator range.
pub fn verify_theorem_gcd(m: u32, family: TheoremFamily) -> Result<bool> {
    Ok(gcd_counterexample(m, family)?.is_none())
}

/// Canonical forms of the theorem enumerators' expanded representatives.
pub fn theorem_class_sets(m: u32) -> Result<(BTreeSet<SideTuple>, BTreeSet<SideTuple>)> {
    let axial = enumerate_axial(m)?
        .iter()
        .map(|r| r.expand().canonical_unchecked())
        .collect();
    let circular = enumerate_circular(m)?
        .iter()
        .map(|r| r.expand().canonical_unchecked())
        .collect();
    Ok((axial, circular))
}
