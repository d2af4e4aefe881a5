//! Family assignment from the geometric symmetry of a polygon.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polygon::{SideTuple, SymmetryProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", content = "m", rename_all = "lowercase")]
pub enum Family {
    /// Full dihedral symmetry: all `n` mirrors fix the polygon.
    Regular,
    /// `n = 3m`, `m > 2`, exactly `m` mirror axes.
    Axial(u32),
    /// `n = 3m`, `m > 2`, no axes, rotation stabilizer of order `m`.
    Circular(u32),
    Other,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Regular => "regular",
            Family::Axial(_) => "axial",
            Family::Circular(_) => "circular",
            Family::Other => "other",
        }
    }

    pub fn m(&self) -> Option<u32> {
        match *self {
            Family::Axial(m) | Family::Circular(m) => Some(m),
            _ => None,
        }
    }

    /// Family implied by a symmetry profile on `n` vertices.
    pub fn from_profile(n: usize, profile: &SymmetryProfile) -> Family {
        if profile.axis_count == n {
            return Family::Regular;
        }
        if !n.is_multiple_of(3) || n / 3 <= 2 {
            return Family::Other;
        }
        let m = n / 3;
        if profile.axis_count == m {
            Family::Axial(m as u32)
        } else if profile.axis_count == 0 && profile.rotation_order == m {
            Family::Circular(m as u32)
        } else {
            Family::Other
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m() {
            Some(m) => write!(f, "{}({m})", self.tag()),
            None => f.write_str(self.tag()),
        }
    }
}

/// Walks the tuple, measures its stabilizer and names the family.
pub fn classify(t: &SideTuple) -> Result<Family> {
    Ok(classify_with_profile(t)?.0)
}

pub fn classify_with_profile(t: &SideTuple) -> Result<(Family, SymmetryProfile)> {
    let profile = t.walk()?.edge_set().symmetry_profile();
    Ok((Family::from_profile(t.n(), &profile), profile))
}

/// Smallest divisor `p` of `n` such that the sides repeat with period `p`.
pub fn side_period(t: &SideTuple) -> usize {
    let s = t.sides();
    let n = s.len();
    (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (p..n).all(|i| s[i] == s[i - p]))
        .unwrap_or(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(sides: &[u32]) -> SideTuple {
        SideTuple::new(sides.len(), sides.to_vec()).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&tuple(&[1; 9])), Ok(Family::Regular));
        assert_eq!(
            classify(&SideTuple::periodic(9, &[4, 7, 4]).unwrap()),
            Ok(Family::Axial(3))
        );
        assert_eq!(
            classify(&SideTuple::periodic(12, &[4, 7, 10]).unwrap()),
            Ok(Family::Circular(4))
        );
        assert_eq!(classify(&tuple(&[1, 2, 1, 4, 3, 1])), Ok(Family::Other));
    }

    #[test]
    fn classify_propagates_walk_errors() {
        assert!(classify(&tuple(&[2; 6])).is_err());
    }

    #[test]
    fn n_not_divisible_by_three_is_never_axial_or_circular() {
        // star pentagon
        assert_eq!(classify(&tuple(&[2; 5])), Ok(Family::Regular));
        assert_eq!(classify(&tuple(&[1, 2, 3, 2])), Ok(Family::Other));
    }

    #[test]
    fn six_vertices_never_reports_m_two() {
        // period-3 hexagon with two axes; m = 2 is excluded
        let t = SideTuple::periodic(6, &[2, 5, 2]).unwrap();
        let (family, profile) = classify_with_profile(&t).unwrap();
        assert_eq!(family, Family::Other);
        assert_eq!((profile.rotation_order, profile.axis_count), (2, 2));
    }

    #[test]
    fn side_period_examples() {
        assert_eq!(side_period(&tuple(&[1; 7])), 1);
        assert_eq!(side_period(&tuple(&[1, 4, 1, 1, 4, 1, 1, 4, 1])), 3);
        assert_eq!(side_period(&tuple(&[1, 2, 1, 4, 3, 1])), 6);
        assert_eq!(side_period(&tuple(&[1, 3, 1, 3, 1, 3, 1, 3])), 2);
    }

    #[test]
    fn family_serializes_with_tag() {
        let json = serde_json::to_string(&Family::Axial(3)).unwrap();
        assert_eq!(json, r#"{"family":"axial","m":3}"#);
        let back: Family = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Family::Axial(3));
    }
}
