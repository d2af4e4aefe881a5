//! Side-tuple arithmetic and the dihedral action on polygon edge sets.
//!
//! A polygon on `n` regularly spaced circle vertices is encoded by its cycle
//! of sides `(e_1, …, e_n)`: starting at vertex 0, the `i`-th edge advances
//! `e_i` vertex steps counterclockwise. The tuple describes a Hamiltonian
//! cycle exactly when no proper prefix sum is divisible by `n` and the full
//! sum is.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cyclic sequence of edge lengths, each in `[1, n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct SideTuple {
    sides: Vec<u32>,
}

impl SideTuple {
    /// Builds a tuple for `n` vertices, checking length and side bounds.
    pub fn new(n: usize, sides: Vec<u32>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        if sides.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: sides.len(),
            });
        }
        let max = (n - 1) as u32;
        if let Some((i, &value)) = sides
            .iter()
            .enumerate()
            .find(|(_, &e)| e == 0 || e > max)
        {
            return Err(Error::SideOutOfRange {
                index: i + 1,
                value,
                max,
            });
        }
        Ok(SideTuple { sides })
    }

    /// Repeats `pattern` until the tuple has `n` sides.
    pub fn periodic(n: usize, pattern: &[u32]) -> Result<Self> {
        let sides = pattern.iter().copied().cycle().take(n).collect();
        Self::new(n, sides)
    }

    pub fn n(&self) -> usize {
        self.sides.len()
    }

    pub fn sides(&self) -> &[u32] {
        &self.sides
    }

    /// The same tuple read from position `k` onwards.
    pub fn shifted(&self, k: usize) -> SideTuple {
        let n = self.n();
        let k = k % n;
        let mut sides = Vec::with_capacity(n);
        sides.extend_from_slice(&self.sides[k..]);
        sides.extend_from_slice(&self.sides[..k]);
        SideTuple { sides }
    }

    /// The tuple of the same polygon walked clockwise: `(n-e_n, …, n-e_1)`.
    pub fn reversed_complement(&self) -> SideTuple {
        let n = self.n() as u32;
        SideTuple {
            sides: self.sides.iter().rev().map(|&e| n - e).collect(),
        }
    }

    /// Plain (unreduced) prefix sums `s_1, …, s_n`.
    pub fn prefix_sums(&self) -> Vec<u64> {
        self.sides
            .iter()
            .scan(0u64, |acc, &e| {
                *acc += u64::from(e);
                Some(*acc)
            })
            .collect()
    }

    /// Walks the tuple from vertex 0 and returns the visiting order.
    ///
    /// Fails with `PrematureClosure(i)` at the first step `i < n` that lands
    /// on an already visited vertex, i.e. when some run of consecutive sides
    /// ending at `e_i` sums to a multiple of `n`.
    pub fn walk(&self) -> Result<VertexCycle> {
        let n = self.n();
        let mut visited = vec![false; n];
        visited[0] = true;
        let mut vertices = Vec::with_capacity(n);
        vertices.push(0u32);
        let mut sum = 0u64;
        for (i, &e) in self.sides.iter().enumerate() {
            sum += u64::from(e);
            let v = (sum % n as u64) as usize;
            if i + 1 == n {
                if v != 0 {
                    return Err(Error::NotClosed);
                }
            } else if visited[v] {
                return Err(Error::PrematureClosure(i + 1));
            } else {
                visited[v] = true;
                vertices.push(v as u32);
            }
        }
        Ok(VertexCycle { vertices })
    }

    /// Winding number `s_n / n` of the closed walk.
    pub fn revolutions(&self) -> Result<Revolutions> {
        self.walk()?;
        let total: u64 = self.sides.iter().map(|&e| u64::from(e)).sum();
        Ok(Revolutions(total / self.n() as u64))
    }

    /// Representative of the rotation class: the lexicographically least
    /// cyclic shift of either this tuple or its reversed complement.
    pub fn canonical_form(&self) -> Result<SideTuple> {
        self.walk()?;
        Ok(self.canonical_unchecked())
    }

    pub(crate) fn canonical_unchecked(&self) -> SideTuple {
        let forward = self.shifted(least_rotation(&self.sides));
        let rc = self.reversed_complement();
        let backward = rc.shifted(least_rotation(&rc.sides));
        forward.min(backward)
    }
}

impl TryFrom<Vec<u32>> for SideTuple {
    type Error = Error;

    fn try_from(sides: Vec<u32>) -> Result<Self> {
        let n = sides.len();
        SideTuple::new(n, sides)
    }
}

impl From<SideTuple> for Vec<u32> {
    fn from(t: SideTuple) -> Self {
        t.sides
    }
}

impl fmt::Display for SideTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.sides.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Number of full turns around the circle made by a closed walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Revolutions(pub u64);

/// Start index of the lexicographically least rotation, found by Duval's
/// Lyndon factorization of the doubled sequence. Ties resolve to the
/// smallest index.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let mut i = 0;
    let mut best = 0;
    while i < n {
        best = i;
        let mut j = i + 1;
        let mut k = i;
        while j < 2 * n && s[k % n] <= s[j % n] {
            if s[k % n] < s[j % n] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            i += j - k;
        }
    }
    best
}

/// True when `sides` already equals its canonical form. Allocation-free,
/// used on hot enumeration paths.
pub(crate) fn is_canonical(sides: &[u32]) -> bool {
    let n = sides.len();
    let nv = n as u32;
    // rotations of the tuple itself
    for k in 1..n {
        if compare_rotation(n, |i| sides[(k + i) % n], sides) == Ordering::Less {
            return false;
        }
    }
    // rotations of the reversed complement
    for k in 0..n {
        let rc = |i: usize| nv - sides[n - 1 - (k + i) % n];
        if compare_rotation(n, rc, sides) == Ordering::Less {
            return false;
        }
    }
    true
}

fn compare_rotation(n: usize, candidate: impl Fn(usize) -> u32, base: &[u32]) -> Ordering {
    for (i, &b) in base.iter().enumerate().take(n) {
        match candidate(i).cmp(&b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Visiting order of the vertices, normalized to start at vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexCycle {
    vertices: Vec<u32>,
}

impl VertexCycle {
    /// Accepts any permutation of `0..n` that starts at 0.
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut seen = vec![false; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v as usize >= n || seen[v as usize] || (i == 0 && v != 0) {
                return Err(Error::NotClosed);
            }
            seen[v as usize] = true;
        }
        Ok(VertexCycle { vertices })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Side tuple read along the cycle.
    pub fn sides(&self) -> SideTuple {
        let n = self.n() as u32;
        let sides = self
            .vertices
            .iter()
            .zip(self.vertices.iter().cycle().skip(1))
            .map(|(&p, &q)| (q + n - p) % n)
            .collect();
        SideTuple { sides }
    }

    pub fn edge_set(&self) -> EdgeSet {
        let pairs = self
            .vertices
            .iter()
            .zip(self.vertices.iter().cycle().skip(1))
            .map(|(&p, &q)| (p, q));
        EdgeSet::from_pairs(self.n(), pairs)
    }
}

/// Undirected chords of a polygon, with constant-time membership.
#[derive(Debug, Clone)]
pub struct EdgeSet {
    n: usize,
    edges: Vec<(u32, u32)>,
    bits: Vec<u64>,
}

impl PartialEq for EdgeSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for EdgeSet {}

impl EdgeSet {
    /// Normalizes every pair to `(min, max)`; duplicates collapse.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (u32, u32)>) -> EdgeSet {
        let mut edges: Vec<(u32, u32)> = pairs
            .into_iter()
            .map(|(p, q)| if p < q { (p, q) } else { (q, p) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut bits = vec![0u64; (n * n).div_ceil(64)];
        for &(p, q) in &edges {
            let idx = p as usize * n + q as usize;
            bits[idx / 64] |= 1 << (idx % 64);
        }
        EdgeSet { n, edges, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted `(p, q)` pairs with `p < q`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, p: u32, q: u32) -> bool {
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        let idx = p as usize * self.n + q as usize;
        self.bits[idx / 64] & (1 << (idx % 64)) != 0
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(p, q) in &self.edges {
            deg[p as usize] += 1;
            deg[q as usize] += 1;
        }
        deg
    }

    /// Image under `v ↦ (v + k) mod n`.
    pub fn rotated(&self, k: u32) -> EdgeSet {
        let n = self.n as u32;
        self.mapped(|v| (v + k % n) % n)
    }

    /// Image under the mirror `v ↦ (axis - v) mod n`. Axis indices are taken
    /// mod `2n`; even indices pass through vertex `axis/2`, odd ones through
    /// an edge midpoint.
    pub fn reflected(&self, axis: u32) -> EdgeSet {
        let n = self.n as u32;
        self.mapped(|v| (axis % n + n - v) % n)
    }

    fn mapped(&self, f: impl Fn(u32) -> u32) -> EdgeSet {
        EdgeSet::from_pairs(self.n, self.edges.iter().map(|&(p, q)| (f(p), f(q))))
    }

    fn is_fixed_by(&self, f: impl Fn(u32) -> u32) -> bool {
        self.edges.iter().all(|&(p, q)| self.contains(f(p), f(q)))
    }

    /// Rotations and mirrors of the regular n-gon that fix this edge set.
    pub fn symmetry_profile(&self) -> SymmetryProfile {
        let n = self.n as u32;
        let rotation_order = (0..n)
            .filter(|&k| self.is_fixed_by(|v| (v + k) % n))
            .count();
        let axes: Vec<u32> = (0..n)
            .filter(|&a| self.is_fixed_by(|v| (a + n - v) % n))
            .collect();
        SymmetryProfile {
            rotation_order,
            axis_count: axes.len(),
            axes,
        }
    }
}

/// Stabilizer of an edge set inside the dihedral group of the n-gon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryProfile {
    pub rotation_order: usize,
    pub axis_count: usize,
    /// Axis indices in `[0, n)` of the fixing mirrors; index `a` is the
    /// line through angle `π·a/n`.
    pub axes: Vec<u32>,
}
