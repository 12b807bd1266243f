//! Hypergeometric I-function rows, the inductive normalization ladder, the
//! mirror map, and the first-order expansion coefficients a_k.
//!
//! The row entries I_{0,q}(t) come from expanding
//!
//!   sum_q I_{0,q}(t) w^q = e^{wt} sum_d q^d
//!       prod_i prod_{s=0}^{c_i d - 1} (-c_i w - s) / prod_{s=1}^{d} (w+s)^{n-m+1}
//!
//! as a w-series with exact coefficients: for each degree d the summand is a
//! polynomial in w over a unit series, and the e^{wt} prefactor supplies the
//! t-polynomials. The ladder I_{p,q} = d/dt(I_{p-1,q} / I_{p-1,p-1}) then
//! purifies the diagonal down to plain q-series with constant term 1.

use thiserror::Error;

use crate::exactmath::qseries::QSeries;
use crate::exactmath::rational::Rational;
use crate::exactmath::tqseries::TQSeries;
use crate::exactmath::SeriesError;
use crate::geometry::SplitGeometry;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LadderError {
    /// A diagonal entry kept a genuine t term; the theory says it must not.
    #[error("ladder diagonal I_{{{p},{p}}} is not t-free at q^{q_power}")]
    DiagonalNotTFree { p: usize, q_power: usize },
    #[error("ladder diagonal I_{{{p},{p}}} has constant term {found}, expected 1")]
    DiagonalConstantNotOne { p: usize, found: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The row I_{0,0}, ..., I_{0,w_order} for a local geometry, each entry a
/// q-series with t-polynomial coefficients.
#[derive(Debug, Clone)]
pub struct IFunctionRow {
    geometry: SplitGeometry,
    w_order: usize,
    entries: Vec<TQSeries>,
}

impl IFunctionRow {
    pub fn geometry(&self) -> &SplitGeometry {
        &self.geometry
    }

    pub fn w_order(&self) -> usize {
        self.w_order
    }

    /// I_{0,q}(t). Panics for q beyond the computed w-order.
    pub fn entry(&self, q: usize) -> &TQSeries {
        assert!(
            q <= self.w_order,
            "row entry {q} beyond w-order {}",
            self.w_order
        );
        &self.entries[q]
    }

    pub fn entries(&self) -> &[TQSeries] {
        &self.entries
    }
}

/// The triangular ladder over a geometry's row, with the purified diagonal.
#[derive(Debug, Clone)]
pub struct IppLadder {
    geometry: SplitGeometry,
    p_max: usize,
    diagonal: Vec<QSeries>,
    intermediates: Vec<Vec<TQSeries>>,
}

impl IppLadder {
    pub fn geometry(&self) -> &SplitGeometry {
        &self.geometry
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    /// I_{p,p} as a pure q-series with constant term 1.
    pub fn diagonal(&self, p: usize) -> &QSeries {
        assert!(
            p <= self.p_max,
            "diagonal entry {p} beyond p_max {}",
            self.p_max
        );
        &self.diagonal[p]
    }

    pub fn diagonal_entries(&self) -> &[QSeries] {
        &self.diagonal
    }

    /// I_{p,q} for q >= p, before purification.
    pub fn entry(&self, p: usize, q: usize) -> &TQSeries {
        assert!(
            p <= self.p_max && q >= p,
            "ladder entry ({p},{q}) out of range"
        );
        &self.intermediates[p][q - p]
    }

    /// The underlying row I_{0,0}, ..., I_{0,w_order}.
    pub fn entry_row_zero(&self) -> &[TQSeries] {
        &self.intermediates[0]
    }
}

/// Compute the I-function row of a local geometry.
pub fn i_function_row(geom: &SplitGeometry, w_order: usize, q_order: usize) -> IFunctionRow {
    let entries = row_from_summands(|d| local_summand(geom, d, w_order), w_order, q_order);
    IFunctionRow {
        geometry: geom.clone(),
        w_order,
        entries,
    }
}

/// Run the normalization ladder down to p_max, with one column of headroom.
pub fn ipp_ladder(
    geom: &SplitGeometry,
    p_max: usize,
    q_order: usize,
) -> Result<IppLadder, LadderError> {
    let row = i_function_row(geom, p_max + 1, q_order);
    let (diagonal, intermediates) = ladder_from_row(&row.entries, p_max)?;
    Ok(IppLadder {
        geometry: geom.clone(),
        p_max,
        diagonal,
        intermediates,
    })
}

/// The mirror-map shift f(q) = T - t. Identically zero when the bundle rank
/// is at least two.
pub fn mirror_map(geom: &SplitGeometry, q_order: usize) -> QSeries {
    let row = i_function_row(geom, 1, q_order);
    mirror_shift_from_row(&row.entries)
        .expect("local rows always purify: I_{0,0} = 1 and I_{0,1} - t is t-free")
}

/// Expansion coefficients a_1, ..., a_k_max of the degree-one summand
/// (returned with a_1 at index 0). The first-order ladder identity
/// [q^1] I_{p,p} = sum_k a_k C(p-1, k-1) is checked against these in tests.
pub fn a_coefficients(geom: &SplitGeometry, k_max: usize) -> Vec<Rational> {
    assert!(k_max >= 1);
    let s = local_summand(geom, 1, k_max);
    debug_assert!(
        s.coeff(0).is_zero(),
        "degree-one summand must vanish at w^0"
    );
    (1..=k_max).map(|k| s.coeff(k).clone()).collect()
}

// ---------------------------------------------------------------------------
// shared machinery (also used for the hypersurface pipeline)
// ---------------------------------------------------------------------------

/// Truncated product of linear factors (a + b w), as a w-series.
fn product_of_linear(
    factors: impl Iterator<Item = (Rational, Rational)>,
    w_order: usize,
) -> QSeries {
    let mut acc = QSeries::one(w_order);
    for (a, b) in factors {
        let linear = {
            let mut coeffs = vec![Rational::zero(); w_order + 1];
            coeffs[0] = a;
            if w_order >= 1 {
                coeffs[1] = b;
            }
            QSeries::from_coeffs(coeffs)
        };
        acc = acc.mul(&linear);
    }
    acc
}

/// Degree-d summand of the local row, as an exact w-series:
/// (-1)^{(n-m+1)d} prod_i [ c_i w prod_{s=1}^{c_i d - 1}(c_i w + s) ]
/// / prod_{s=1}^{d} (w+s)^{n-m+1}.
pub(crate) fn local_summand(geom: &SplitGeometry, d: usize, w_order: usize) -> QSeries {
    if d == 0 {
        return QSeries::one(w_order);
    }
    let nm1 = (geom.base_dim() + 1) as usize; // n - m + 1
    let numer_factors = geom.twists().iter().flat_map(move |&c| {
        (0..c as usize * d).map(move |s| (Rational::from(s as i64), Rational::from(c as i64)))
    });
    let mut numer = product_of_linear(numer_factors, w_order);
    if (nm1 * d) % 2 == 1 {
        numer = numer.neg();
    }
    let denom_factors = (1..=d)
        .flat_map(move |s| std::iter::repeat_n((Rational::from(s as i64), Rational::one()), nm1));
    let denom = product_of_linear(denom_factors, w_order);
    numer
        .div(&denom)
        .expect("denominator has constant term (d!)^{n-m+1} != 0")
}

/// Degree-d summand of the hypersurface row:
/// prod_{r=1}^{nd} (n w + r) / prod_{r=1}^{d} (w+r)^n.
pub(crate) fn hypersurface_summand(n: usize, d: usize, w_order: usize) -> QSeries {
    if d == 0 {
        return QSeries::one(w_order);
    }
    let numer = product_of_linear(
        (1..=n * d).map(|r| (Rational::from(r as i64), Rational::from(n as i64))),
        w_order,
    );
    let denom = product_of_linear(
        (1..=d).flat_map(|r| std::iter::repeat_n((Rational::from(r as i64), Rational::one()), n)),
        w_order,
    );
    numer
        .div(&denom)
        .expect("denominator has constant term (d!)^n != 0")
}

/// Assemble row entries I_{0,q}(t) = sum_{j<=q} t^j/j! A_{q-j}(q) from the
/// per-degree summands, where A_k(q) = sum_d [w^k](summand_d) q^d.
pub(crate) fn row_from_summands(
    summand: impl Fn(usize) -> QSeries,
    w_order: usize,
    q_order: usize,
) -> Vec<TQSeries> {
    // a_coeffs[k][d] = [w^k] summand_d
    let mut a_coeffs = vec![vec![Rational::zero(); q_order + 1]; w_order + 1];
    for d in 0..=q_order {
        let s = summand(d);
        for (k, column) in a_coeffs.iter_mut().enumerate() {
            column[d] = s.coeff(k).clone();
        }
    }
    let t_cap = w_order + 2;
    let mut entries = Vec::with_capacity(w_order + 1);
    let mut j_factorial_inv = Vec::with_capacity(w_order + 1);
    let mut fact = Rational::one();
    for j in 0..=w_order {
        if j > 0 {
            fact = fact * Rational::from(j as i64);
        }
        j_factorial_inv.push(fact.recip());
    }
    for q in 0..=w_order {
        let mut entry = TQSeries::zero_with_cap(q_order, t_cap);
        for j in 0..=q {
            for (d, c) in a_coeffs[q - j].iter().enumerate() {
                if !c.is_zero() {
                    entry.set_term(d, j, c * &j_factorial_inv[j]);
                }
            }
        }
        entries.push(entry);
    }
    entries
}

/// Run the ladder: peel diagonals, dividing each remaining column by the
/// previous diagonal and differentiating. Errors if a diagonal entry fails to
/// purify or does not start at 1.
pub(crate) fn ladder_from_row(
    entries: &[TQSeries],
    p_max: usize,
) -> Result<(Vec<QSeries>, Vec<Vec<TQSeries>>), LadderError> {
    assert!(p_max < entries.len(), "row too short for p_max {p_max}");
    let mut current: Vec<TQSeries> = entries.to_vec();
    let mut diagonal = Vec::with_capacity(p_max + 1);
    let mut intermediates = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        let diag = current[0].to_qseries().map_err(|e| match e {
            SeriesError::NotTFree { q_power } => LadderError::DiagonalNotTFree { p, q_power },
            other => LadderError::Series(other),
        })?;
        if !diag.constant_term().is_one() {
            return Err(LadderError::DiagonalConstantNotOne {
                p,
                found: diag.constant_term().to_string(),
            });
        }
        diagonal.push(diag);
        intermediates.push(current.clone());
        if p == p_max {
            break;
        }
        let inv = diagonal[p].inverse().map_err(LadderError::Series)?;
        current = current[1..]
            .iter()
            .map(|e| e.mul_qseries(&inv).d_dt())
            .collect();
    }
    Ok((diagonal, intermediates))
}

/// T - t extracted from a row: I_{0,1}/I_{0,0} - t, purified to a q-series.
/// (For local geometries I_{0,0} = 1; the hypersurface row normalizes.)
pub(crate) fn mirror_shift_from_row(entries: &[TQSeries]) -> Result<QSeries, LadderError> {
    let i00 = entries[0].to_qseries().map_err(|e| match e {
        SeriesError::NotTFree { q_power } => LadderError::DiagonalNotTFree { p: 0, q_power },
        other => LadderError::Series(other),
    })?;
    let ratio = entries[1].div_qseries(&i00).map_err(LadderError::Series)?;
    let t = TQSeries::t_variable(ratio.order(), ratio.t_cap());
    let shifted = ratio.sub(&t);
    shifted.to_qseries().map_err(LadderError::from)
}
