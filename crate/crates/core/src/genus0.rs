//! Genus-zero one-point and two-point Gromov-Witten series for the three
//! supported 5-fold geometries, and the multiple-cover (BPS) extraction.
//!
//! Supported targets:
//!   - P4/O(-5): bivariate extraction at x^2 through the flat coordinate,
//!     scaled by the pairing -1/5;
//!   - P3/O(-1,-3) and P3/O(-2,-2): factorial closed forms (the pairing is
//!     already baked in), with flat = algebraic coordinate.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactmath::biseries::BiSeries;
use crate::exactmath::qseries::QSeries;
use crate::exactmath::rational::{factorial, Rational};
use crate::exactmath::SeriesError;
use crate::geometry::{InvariantKind, SplitGeometry};
use crate::ifunctions::{local_summand, mirror_map};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Genus0Error {
    #[error("no genus-zero recipe for {0}; supported: P4/O(-5), P3/O(-1,-3), P3/O(-2,-2)")]
    UnsupportedGeometry(String),
    #[error("insertion count must be 1 or 2, got {0}")]
    BadInsertionCount(u8),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A genus-zero Gromov-Witten table in the flat coordinate.
#[derive(Debug, Clone)]
pub struct GwSeries {
    geometry: SplitGeometry,
    kind: InvariantKind,
    values: BTreeMap<usize, Rational>,
}

impl GwSeries {
    pub fn geometry(&self) -> &SplitGeometry {
        &self.geometry
    }

    pub fn kind(&self) -> InvariantKind {
        self.kind
    }

    pub fn values(&self) -> &BTreeMap<usize, Rational> {
        &self.values
    }

    pub fn value(&self, d: usize) -> &Rational {
        &self.values[&d]
    }

    pub fn degree_max(&self) -> usize {
        self.values.keys().next_back().copied().unwrap_or(0)
    }

    /// Number of insertions behind this series kind.
    pub fn insertion_count(&self) -> u8 {
        match self.kind {
            InvariantKind::Genus0OnepointH3 => 1,
            InvariantKind::Genus0TwopointH2H2 => 2,
            _ => unreachable!("GwSeries only carries genus-zero kinds"),
        }
    }
}

/// A BPS table obtained from a GW table by stripping multiple covers.
#[derive(Debug, Clone)]
pub struct BpsTable {
    geometry: SplitGeometry,
    kind: InvariantKind,
    values: BTreeMap<usize, Rational>,
}

impl BpsTable {
    pub fn new(
        geometry: SplitGeometry,
        kind: InvariantKind,
        values: BTreeMap<usize, Rational>,
    ) -> Self {
        BpsTable {
            geometry,
            kind,
            values,
        }
    }

    pub fn geometry(&self) -> &SplitGeometry {
        &self.geometry
    }

    pub fn kind(&self) -> InvariantKind {
        self.kind
    }

    pub fn values(&self) -> &BTreeMap<usize, Rational> {
        &self.values
    }

    pub fn value(&self, d: usize) -> &Rational {
        &self.values[&d]
    }
}

fn supported(geom: &SplitGeometry) -> Result<(), Genus0Error> {
    let ok = (geom.base_dim() == 4 && geom.twists() == [5])
        || (geom.base_dim() == 3 && geom.twists() == [1, 3])
        || (geom.base_dim() == 3 && geom.twists() == [2, 2]);
    if ok {
        Ok(())
    } else {
        Err(Genus0Error::UnsupportedGeometry(geom.to_string()))
    }
}

/// Whether the genus-zero recipes cover this geometry.
pub fn is_supported(geom: &SplitGeometry) -> bool {
    supported(geom).is_ok()
}

/// The flat-coordinate change shared by every canonical-bundle extraction:
/// the mirror shift f and the reversion of Q = q e^{f(q)}. Building it is the
/// dominant cost at high degree, so callers computing several tables reuse
/// one frame (see `gw_pair`).
struct FlatFrame {
    f: QSeries,
    q_of_flat: QSeries,
}

impl FlatFrame {
    fn build(geom: &SplitGeometry, degree_max: usize) -> Result<Self, Genus0Error> {
        let f = mirror_map(geom, degree_max);
        let flat = QSeries::identity(degree_max).mul(&f.exp()?);
        let q_of_flat = flat.reversion()?;
        Ok(FlatFrame { f, q_of_flat })
    }

    /// Re-expand an algebraic-coordinate series in the flat coordinate.
    fn to_flat(&self, series: &QSeries) -> Result<QSeries, SeriesError> {
        series.compose(&self.q_of_flat)
    }
}

/// One-point genus-zero series ⟨H^3⟩ for d = 1..degree_max.
pub fn onepoint_gw(geom: &SplitGeometry, degree_max: usize) -> Result<GwSeries, Genus0Error> {
    supported(geom)?;
    assert!(degree_max >= 1);
    let values = if geom.is_canonical_bundle() {
        kp4_onepoint(&FlatFrame::build(geom, degree_max)?, degree_max)?
    } else if geom.twists() == [1, 3] {
        // (d-1)! (3d-1)! / (d!)^4
        (1..=degree_max)
            .map(|d| {
                let d64 = d as u64;
                let v = Rational::from(factorial(d64 - 1) * factorial(3 * d64 - 1))
                    * Rational::new(1, factorial(d64).pow(4));
                (d, v)
            })
            .collect()
    } else {
        // (2d-1)! (2d-1)! / (d!)^4
        (1..=degree_max)
            .map(|d| {
                let d64 = d as u64;
                let v = Rational::from(factorial(2 * d64 - 1).pow(2))
                    * Rational::new(1, factorial(d64).pow(4));
                (d, v)
            })
            .collect()
    };
    Ok(GwSeries {
        geometry: geom.clone(),
        kind: InvariantKind::Genus0OnepointH3,
        values,
    })
}

/// Two-point genus-zero series ⟨H^2, H^2⟩ for d = 1..degree_max.
pub fn twopoint_gw(geom: &SplitGeometry, degree_max: usize) -> Result<GwSeries, Genus0Error> {
    supported(geom)?;
    assert!(degree_max >= 1);
    let values = if geom.is_canonical_bundle() {
        kp4_twopoint(&FlatFrame::build(geom, degree_max)?, degree_max)?
    } else if geom.twists() == [1, 3] {
        ratio_twopoint(degree_max, 3)
    } else {
        ratio_twopoint(degree_max, 2)
    };
    Ok(GwSeries {
        geometry: geom.clone(),
        kind: InvariantKind::Genus0TwopointH2H2,
        values,
    })
}

/// Both genus-zero tables with the flat-coordinate reversion computed once.
pub fn gw_pair(
    geom: &SplitGeometry,
    degree_max: usize,
) -> Result<(GwSeries, GwSeries), Genus0Error> {
    supported(geom)?;
    assert!(degree_max >= 1);
    if !geom.is_canonical_bundle() {
        return Ok((
            onepoint_gw(geom, degree_max)?,
            twopoint_gw(geom, degree_max)?,
        ));
    }
    let frame = FlatFrame::build(geom, degree_max)?;
    let one = GwSeries {
        geometry: geom.clone(),
        kind: InvariantKind::Genus0OnepointH3,
        values: kp4_onepoint(&frame, degree_max)?,
    };
    let two = GwSeries {
        geometry: geom.clone(),
        kind: InvariantKind::Genus0TwopointH2H2,
        values: kp4_twopoint(&frame, degree_max)?,
    };
    Ok((one, two))
}

/// The P^3-base two-point ratio: [q^d] of
///   (sum_d B_d (H_{kd} - H_d) q^d) / (1 + sum_d B_d q^d)
/// with B_d = (3d)!/(d!)^3 for k = 3 and ((2d)!)^2/(d!)^4 for k = 2.
fn ratio_twopoint(degree_max: usize, k: u64) -> BTreeMap<usize, Rational> {
    let mut numer = QSeries::zero(degree_max);
    let mut denom = QSeries::one(degree_max);
    for d in 1..=degree_max {
        let d64 = d as u64;
        let base = match k {
            3 => Rational::from(factorial(3 * d64)) * Rational::new(1, factorial(d64).pow(3)),
            _ => {
                Rational::from(factorial(2 * d64).pow(2)) * Rational::new(1, factorial(d64).pow(4))
            }
        };
        let harmonic: Rational = (d64 + 1..=k * d64)
            .map(|r| Rational::new(1, r as i64))
            .fold(Rational::zero(), |acc, x| acc + x);
        numer = numer.add(&QSeries::monomial(&base * &harmonic, d, degree_max));
        denom = denom.add(&QSeries::monomial(base, d, degree_max));
    }
    let ratio = numer.div(&denom).expect("denominator is a unit series");
    (1..=degree_max)
        .map(|d| (d, ratio.coeff(d).clone()))
        .collect()
}

/// P4/O(-5) one-point: -(1/5) [x^2 Q^d] e^{-x f(q)} H(x, q), where H sums the
/// degree summands and Q = q e^{f(q)} is the flat coordinate.
fn kp4_onepoint(
    frame: &FlatFrame,
    degree_max: usize,
) -> Result<BTreeMap<usize, Rational>, Genus0Error> {
    let geom = SplitGeometry::new(4, vec![5]).expect("valid");
    let mut h_coeffs = vec![QSeries::zero(degree_max); 3];
    h_coeffs[0] = QSeries::one(degree_max);
    for d in 1..=degree_max {
        let s = local_summand(&geom, d, 2);
        for (k, h) in h_coeffs.iter_mut().enumerate() {
            *h = h.add(&QSeries::monomial(s.coeff(k).clone(), d, degree_max));
        }
    }
    let h = BiSeries::from_x_coeffs(h_coeffs);
    let damping = BiSeries::exp_x_times(&frame.f.neg(), 2)?;
    let product = damping.mul(&h);
    let x2 = product.x_coeff(2);
    let in_flat = frame.to_flat(x2)?;
    Ok((1..=degree_max)
        .map(|d| (d, in_flat.coeff(d) * &Rational::new(-1, 5)))
        .collect())
}

/// P4/O(-5) two-point: -(1/5) [Q^d] of
///   -f + (F_1/F_0 + E(F_2/F_0)) / (1 + E(F_1/F_0)),  E = q d/dq,
/// with F(w,q) summing prod_{r=1}^{5d} (-5w-r) / prod_{r=1}^{d} (w+r)^5.
fn kp4_twopoint(
    frame: &FlatFrame,
    degree_max: usize,
) -> Result<BTreeMap<usize, Rational>, Genus0Error> {
    let mut f_comp = vec![QSeries::zero(degree_max); 3];
    f_comp[0] = QSeries::one(degree_max);
    for d in 1..=degree_max {
        let s = kp4_pair_summand(d);
        for (k, fc) in f_comp.iter_mut().enumerate() {
            *fc = fc.add(&QSeries::monomial(s.coeff(k).clone(), d, degree_max));
        }
    }
    let r1 = f_comp[1].div(&f_comp[0])?;
    let r2 = f_comp[2].div(&f_comp[0])?;
    let i1 = QSeries::one(degree_max).add(&r1.q_d_dq());
    let inner = frame.f.neg().add(&r1.add(&r2.q_d_dq()).div(&i1)?);
    let in_flat = frame.to_flat(&inner)?;
    Ok((1..=degree_max)
        .map(|d| (d, in_flat.coeff(d) * &Rational::new(-1, 5)))
        .collect())
}

/// Degree-d w-expansion of prod_{r=1}^{5d}(-5w-r) / prod_{r=1}^{d}(w+r)^5 up
/// to w^2. The product starts at r = 1, so unlike the I-row summand it has a
/// nonzero w^0 part.
fn kp4_pair_summand(d: usize) -> QSeries {
    let w_order = 2;
    let mut numer = QSeries::one(w_order);
    for r in 1..=5 * d {
        let linear = QSeries::from_coeffs(vec![
            Rational::from(-(r as i64)),
            Rational::from(-5),
            Rational::zero(),
        ]);
        numer = numer.mul(&linear);
    }
    let mut denom = QSeries::one(w_order);
    for r in 1..=d {
        let linear = QSeries::from_coeffs(vec![
            Rational::from(r as i64),
            Rational::one(),
            Rational::zero(),
        ]);
        for _ in 0..5 {
            denom = denom.mul(&linear);
        }
    }
    numer.div(&denom).expect("unit denominator")
}

/// Strip multiple covers: n_{0,d} = GW_d - sum_{e | d, e > 1} e^{k-3} n_{0,d/e}
/// for insertion count k. The recursion is the exact inverse of the forward
/// multiple-cover sum, see `gv_forward`.
pub fn gv_genus0(gw: &GwSeries, insertion_count: u8) -> Result<BpsTable, Genus0Error> {
    if !matches!(insertion_count, 1 | 2) {
        return Err(Genus0Error::BadInsertionCount(insertion_count));
    }
    let mut values: BTreeMap<usize, Rational> = BTreeMap::new();
    for (&d, gw_d) in gw.values() {
        let mut acc = gw_d.clone();
        for e in 2..=d {
            if d % e == 0 {
                let cover = Rational::new(1, (e as i64).pow(3 - insertion_count as u32));
                acc -= &(&cover * &values[&(d / e)]);
            }
        }
        values.insert(d, acc);
    }
    let kind = match gw.kind() {
        InvariantKind::Genus0OnepointH3 => InvariantKind::Bps0Onepoint,
        _ => InvariantKind::Bps0Twopoint,
    };
    Ok(BpsTable {
        geometry: gw.geometry().clone(),
        kind,
        values,
    })
}

/// Forward multiple-cover sum: GW_d = sum_{e | d} e^{k-3} n_{0,d/e}.
pub fn gv_forward(bps: &BpsTable, insertion_count: u8) -> Result<GwSeries, Genus0Error> {
    if !matches!(insertion_count, 1 | 2) {
        return Err(Genus0Error::BadInsertionCount(insertion_count));
    }
    let mut values: BTreeMap<usize, Rational> = BTreeMap::new();
    for &d in bps.values().keys() {
        let mut acc = Rational::zero();
        for e in 1..=d {
            if d % e == 0 {
                let cover = Rational::new(1, (e as i64).pow(3 - insertion_count as u32));
                acc += &(&cover * &bps.values[&(d / e)]);
            }
        }
        values.insert(d, acc);
    }
    let kind = match bps.kind() {
        InvariantKind::Bps0Onepoint => InvariantKind::Genus0OnepointH3,
        _ => InvariantKind::Genus0TwopointH2H2,
    };
    Ok(GwSeries {
        geometry: bps.geometry().clone(),
        kind,
        values,
    })
}

/// Per-degree integrality and divisibility flags for a BPS table.
#[derive(Debug, Clone)]
pub struct IntegralityRow {
    pub degree: usize,
    pub value: Rational,
    pub is_integer: bool,
    /// One flag per requested modulus, in input order.
    pub divisible: Vec<bool>,
}

#[derive(Debug, Clone)]
pub struct IntegralityReport {
    pub moduli: Vec<u64>,
    pub rows: Vec<IntegralityRow>,
    pub integer_count: usize,
    pub all_integral: bool,
}

pub fn integrality_report(table: &BpsTable, moduli: &[u64]) -> IntegralityReport {
    let mut rows = Vec::with_capacity(table.values().len());
    let mut integer_count = 0;
    for (&degree, value) in table.values() {
        let is_integer = value.is_integer();
        if is_integer {
            integer_count += 1;
        }
        let divisible = moduli.iter().map(|&m| value.is_divisible_by(m)).collect();
        rows.push(IntegralityRow {
            degree,
            value: value.clone(),
            is_integer,
            divisible,
        });
    }
    IntegralityReport {
        moduli: moduli.to_vec(),
        all_integral: integer_count == rows.len(),
        integer_count,
        rows,
    }
}
