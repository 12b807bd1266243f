//! Target-space descriptors: total spaces of splitting bundles over
//! projective space, X = Tot(O(-c_1) + ... + O(-c_m) -> P^l).
//!
//! The Calabi-Yau condition sum c_i = l + 1 is validated on construction and
//! twists are kept sorted, so two descriptors are equal exactly when they
//! describe the same space.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactmath::rational::int_pow;
use crate::exactmath::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("twist list must be non-empty")]
    EmptyTwists,
    #[error("base dimension must be at least 1")]
    ZeroBaseDim,
    #[error("twists must be positive integers")]
    ZeroTwist,
    #[error(
        "Calabi-Yau condition violated: sum of twists is {sum}, base P^{base_dim} needs {expected}"
    )]
    NotCalabiYau {
        sum: u32,
        base_dim: u32,
        expected: u32,
    },
    #[error("cannot parse geometry {input:?}: expected P<l>/O(-c1,...,-cm) or a preset name")]
    Parse { input: String },
}

/// X = Tot(O(-c_1) + ... + O(-c_m) -> P^{base_dim}), with sum c_i = base_dim + 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitGeometry {
    base_dim: u32,
    twists: Vec<u32>, // sorted ascending
}

impl SplitGeometry {
    pub fn new(base_dim: u32, twists: impl Into<Vec<u32>>) -> Result<Self, GeometryError> {
        let mut twists = twists.into();
        if twists.is_empty() {
            return Err(GeometryError::EmptyTwists);
        }
        if base_dim == 0 {
            return Err(GeometryError::ZeroBaseDim);
        }
        if twists.contains(&0) {
            return Err(GeometryError::ZeroTwist);
        }
        let sum: u32 = twists.iter().sum();
        if sum != base_dim + 1 {
            return Err(GeometryError::NotCalabiYau {
                sum,
                base_dim,
                expected: base_dim + 1,
            });
        }
        twists.sort_unstable();
        Ok(SplitGeometry { base_dim, twists })
    }

    /// Dimension l of the base projective space.
    pub fn base_dim(&self) -> u32 {
        self.base_dim
    }

    /// Rank m of the bundle.
    pub fn bundle_rank(&self) -> u32 {
        self.twists.len() as u32
    }

    /// Total dimension n = l + m of the local Calabi-Yau.
    pub fn total_dim(&self) -> u32 {
        self.base_dim + self.bundle_rank()
    }

    /// The twists (c_1, ..., c_m), sorted ascending.
    pub fn twists(&self) -> &[u32] {
        &self.twists
    }

    /// True for the canonical-bundle case m = 1 (then c_1 = l + 1 = n).
    pub fn is_canonical_bundle(&self) -> bool {
        self.twists.len() == 1
    }

    /// K = prod_i (-c_i)^{c_i}, so the discriminant is Delta = 1 - K q.
    pub fn discriminant_constant(&self) -> Rational {
        let mut acc = Rational::one();
        for &c in &self.twists {
            acc = acc * Rational::from(int_pow(-(c as i64), c));
        }
        acc
    }
}

impl fmt::Display for SplitGeometry {
    /// Canonical grammar form, e.g. `P3/O(-1,-3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}/O(", self.base_dim)?;
        for (i, c) in self.twists.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "-{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for SplitGeometry {
    type Err = GeometryError;

    /// Accepts the grammar `P<l>/O(-c1,-c2,...,-cm)` (case-insensitive) and
    /// the preset names.
    fn from_str(input: &str) -> Result<Self, GeometryError> {
        let trimmed = input.trim();
        if let Some(g) = preset(trimmed) {
            return Ok(g);
        }
        let parse_err = || GeometryError::Parse {
            input: input.to_string(),
        };
        let lower = trimmed.to_ascii_lowercase();
        let rest = lower.strip_prefix('p').ok_or_else(parse_err)?;
        let (l_str, bundle) = rest.split_once('/').ok_or_else(parse_err)?;
        let base_dim: u32 = l_str.parse().map_err(|_| parse_err())?;
        let bundle = bundle
            .strip_prefix("o(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(parse_err)?;
        let mut twists = Vec::new();
        for part in bundle.split(',') {
            let c: i64 = part.trim().parse().map_err(|_| parse_err())?;
            if c >= 0 {
                return Err(parse_err());
            }
            twists.push((-c) as u32);
        }
        SplitGeometry::new(base_dim, twists)
    }
}

/// Named presets, case-insensitive. `o1_rep_p<l>` expands to the
/// O(-1)^{l+1} -> P^l family.
fn preset(name: &str) -> Option<SplitGeometry> {
    let lower = name.to_ascii_lowercase();
    let mk = |l: u32, cs: &[u32]| SplitGeometry::new(l, cs.to_vec()).ok();
    match lower.as_str() {
        "kp2" => mk(2, &[3]),
        "kp3" => mk(3, &[4]),
        "kp4" => mk(4, &[5]),
        "o1x3_p3" => mk(3, &[1, 3]),
        "o2x2_p3" => mk(3, &[2, 2]),
        "o1cubed_p2" => mk(2, &[1, 1, 1]),
        "conifold" => mk(1, &[1, 1]),
        _ => {
            let l: u32 = lower.strip_prefix("o1_rep_p")?.parse().ok()?;
            mk(l, &vec![1; l as usize + 1])
        }
    }
}

/// All Calabi-Yau splitting geometries with total dimension n, canonically
/// ordered: every partition of l + 1 into m positive parts for l + m = n.
pub fn enumerate_calabi_yau(n: u32) -> Vec<SplitGeometry> {
    let mut out = Vec::new();
    for l in 1..n {
        let m = n - l;
        let mut parts = Vec::new();
        partitions_into(l + 1, m, 1, &mut parts, &mut out, l);
    }
    out.sort();
    out
}

fn partitions_into(
    total: u32,
    parts: u32,
    min: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<SplitGeometry>,
    base_dim: u32,
) {
    if parts == 1 {
        if total >= min {
            current.push(total);
            out.push(
                SplitGeometry::new(base_dim, current.clone())
                    .expect("partition satisfies the Calabi-Yau condition"),
            );
            current.pop();
        }
        return;
    }
    let mut first = min;
    while first * parts <= total {
        current.push(first);
        partitions_into(total - first, parts - 1, first, current, out, base_dim);
        current.pop();
        first += 1;
    }
}

/// The invariant families the toolkit computes or extracts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvariantKind {
    Genus1Gw,
    Genus0OnepointH3,
    Genus0TwopointH2H2,
    Bps0Onepoint,
    Bps0Twopoint,
}

impl InvariantKind {
    /// Stable serialized name.
    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Genus1Gw => "genus1_gw",
            InvariantKind::Genus0OnepointH3 => "genus0_onepoint_H3",
            InvariantKind::Genus0TwopointH2H2 => "genus0_twopoint_H2H2",
            InvariantKind::Bps0Onepoint => "bps0_onepoint",
            InvariantKind::Bps0Twopoint => "bps0_twopoint",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "genus1_gw" => Some(InvariantKind::Genus1Gw),
            "genus0_onepoint_H3" => Some(InvariantKind::Genus0OnepointH3),
            "genus0_twopoint_H2H2" => Some(InvariantKind::Genus0TwopointH2H2),
            "bps0_onepoint" => Some(InvariantKind::Bps0Onepoint),
            "bps0_twopoint" => Some(InvariantKind::Bps0Twopoint),
            _ => None,
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_bundle_descriptors() {
        let kp4 = SplitGeometry::new(4, vec![5]).unwrap();
        assert_eq!(kp4.total_dim(), 5);
        assert_eq!(kp4.bundle_rank(), 1);
        assert!(kp4.is_canonical_bundle());

        let g = SplitGeometry::new(3, vec![1, 3]).unwrap();
        assert_eq!(g.total_dim(), 5);
        assert_eq!(g.bundle_rank(), 2);
    }

    #[test]
    fn calabi_yau_condition_enforced() {
        assert!(matches!(
            SplitGeometry::new(3, vec![1, 2]),
            Err(GeometryError::NotCalabiYau {
                sum: 3,
                expected: 4,
                ..
            })
        ));
        assert!(matches!(
            SplitGeometry::new(3, vec![]),
            Err(GeometryError::EmptyTwists)
        ));
    }

    #[test]
    fn twists_canonicalized() {
        let a = SplitGeometry::new(3, vec![3, 1]).unwrap();
        let b = SplitGeometry::new(3, vec![1, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.twists(), &[1, 3]);
    }

    #[test]
    fn discriminant_constants() {
        let k = |l, cs: &[u32]| {
            SplitGeometry::new(l, cs.to_vec())
                .unwrap()
                .discriminant_constant()
        };
        assert_eq!(k(3, &[1, 3]), Rational::from(27));
        assert_eq!(k(3, &[2, 2]), Rational::from(16));
        assert_eq!(k(4, &[5]), Rational::from(-3125));
        assert_eq!(k(2, &[1, 1, 1]), Rational::from(-1));
    }

    #[test]
    fn canonical_bundle_discriminant_is_minus_n_to_the_n() {
        for n in 2..=8u32 {
            let g = SplitGeometry::new(n - 1, vec![n]).unwrap();
            let expect = Rational::from(int_pow(-(n as i64), n));
            assert_eq!(g.discriminant_constant(), expect);
        }
    }

    #[test]
    fn grammar_and_presets() {
        let g: SplitGeometry = "P3/O(-1,-3)".parse().unwrap();
        assert_eq!(g, SplitGeometry::new(3, vec![1, 3]).unwrap());
        assert_eq!(g.to_string(), "P3/O(-1,-3)");
        let via_preset: SplitGeometry = "KP4".parse().unwrap();
        assert_eq!(via_preset, SplitGeometry::new(4, vec![5]).unwrap());
        let family: SplitGeometry = "o1_rep_p3".parse().unwrap();
        assert_eq!(family, SplitGeometry::new(3, vec![1, 1, 1, 1]).unwrap());
        assert!("P3/O(-1,-2)".parse::<SplitGeometry>().is_err());
        assert!("garbage".parse::<SplitGeometry>().is_err());
    }

    #[test]
    fn enumeration_covers_all_partitions() {
        // n = 5: the four 5-fold splitting geometries
        let all = enumerate_calabi_yau(5);
        assert_eq!(
            all,
            vec![
                SplitGeometry::new(2, vec![1, 1, 1]).unwrap(),
                SplitGeometry::new(3, vec![1, 3]).unwrap(),
                SplitGeometry::new(3, vec![2, 2]).unwrap(),
                SplitGeometry::new(4, vec![5]).unwrap(),
            ]
        );
        for g in &all {
            assert_eq!(g.total_dim(), 5);
        }
        // n = 3: the two local threefold geometries
        let all3 = enumerate_calabi_yau(3);
        assert_eq!(
            all3,
            vec![
                SplitGeometry::new(1, vec![1, 1]).unwrap(),
                SplitGeometry::new(2, vec![3]).unwrap(),
            ]
        );
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in [
            InvariantKind::Genus1Gw,
            InvariantKind::Genus0OnepointH3,
            InvariantKind::Genus0TwopointH2H2,
            InvariantKind::Bps0Onepoint,
            InvariantKind::Bps0Twopoint,
        ] {
            assert_eq!(InvariantKind::parse(kind.name()), Some(kind));
        }
    }
}
