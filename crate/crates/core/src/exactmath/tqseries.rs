//! Truncated q-series whose coefficients are polynomials in t.
//!
//! These carry the rows I_{0,q}(t) of the hypergeometric ladder before the
//! diagonal entries purify to plain q-series. Because q = e^t, the derivative
//! d/dt acts as t^a q^d -> a t^{a-1} q^d + d t^a q^d.

use std::fmt;

use super::qseries::QSeries;
use super::rational::Rational;
use super::SeriesError;

/// A polynomial in t with rational coefficients (coeffs[a] multiplies t^a).
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TPoly {
    coeffs: Vec<Rational>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = TPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// c * t^power.
    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        TPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of the polynomial; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_assign(&mut self, other: &TPoly) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, c) in other.coeffs.iter().enumerate() {
            self.coeffs[a] += c;
        }
        self.trim();
    }

    pub fn scale(&self, c: &Rational) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

/// A q-series with t-polynomial coefficients, known through q^order.
///
/// The t-degree of every coefficient is bounded by `t_cap`; exceeding the cap
/// aborts, since nothing in the ladder should ever grow past it.
#[derive(Clone, PartialEq, Eq)]
pub struct TQSeries {
    coeffs: Vec<TPoly>,
    t_cap: usize,
}

impl TQSeries {
    /// Zero series of the given q-order with an explicit t-degree cap.
    pub fn zero_with_cap(q_order: usize, t_cap: usize) -> Self {
        TQSeries {
            coeffs: vec![TPoly::zero(); q_order + 1],
            t_cap,
        }
    }

    /// Zero series with the default cap q_order + 2.
    pub fn zero(q_order: usize) -> Self {
        Self::zero_with_cap(q_order, q_order + 2)
    }

    /// Embed a t-free series.
    pub fn from_qseries(s: &QSeries, t_cap: usize) -> Self {
        TQSeries {
            coeffs: s
                .coeffs()
                .iter()
                .map(|c| TPoly::constant(c.clone()))
                .collect(),
            t_cap,
        }
    }

    /// The series "t" (t * q^0).
    pub fn t_variable(q_order: usize, t_cap: usize) -> Self {
        let mut s = Self::zero_with_cap(q_order, t_cap);
        s.set_term(0, 1, Rational::one());
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn t_cap(&self) -> usize {
        self.t_cap
    }

    /// The t-polynomial multiplying q^d. Panics past the truncation order.
    pub fn coeff(&self, d: usize) -> &TPoly {
        assert!(
            d <= self.order(),
            "coefficient of q^{d} requested from a series truncated at q^{}",
            self.order()
        );
        &self.coeffs[d]
    }

    /// Add c * t^t_pow * q^d in place.
    pub fn set_term(&mut self, d: usize, t_pow: usize, c: Rational) {
        assert!(d <= self.order(), "q-power {d} beyond truncation");
        assert!(
            t_pow <= self.t_cap,
            "t-degree {t_pow} exceeds the cap {} (ladder invariant violated)",
            self.t_cap
        );
        self.coeffs[d].add_assign(&TPoly::monomial(c, t_pow));
    }

    /// True when every coefficient polynomial is constant.
    pub fn is_t_free(&self) -> bool {
        self.coeffs.iter().all(TPoly::is_constant)
    }

    /// Collapse to a plain q-series; errors on any residual t term.
    pub fn to_qseries(&self) -> Result<QSeries, SeriesError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (d, p) in self.coeffs.iter().enumerate() {
            if !p.is_constant() {
                return Err(SeriesError::NotTFree { q_power: d });
            }
            out.push(p.coeff(0));
        }
        Ok(QSeries::from_coeffs(out))
    }

    pub fn add(&self, other: &TQSeries) -> TQSeries {
        let n = self.order().min(other.order());
        let mut out = TQSeries::zero_with_cap(n, self.t_cap.max(other.t_cap));
        for d in 0..=n {
            let mut p = self.coeffs[d].clone();
            p.add_assign(&other.coeffs[d]);
            out.coeffs[d] = p;
        }
        out
    }

    pub fn sub(&self, other: &TQSeries) -> TQSeries {
        let n = self.order().min(other.order());
        let mut out = TQSeries::zero_with_cap(n, self.t_cap.max(other.t_cap));
        for d in 0..=n {
            let mut p = self.coeffs[d].clone();
            p.add_assign(&other.coeffs[d].neg());
            out.coeffs[d] = p;
        }
        out
    }

    /// Multiply by a t-free series.
    pub fn mul_qseries(&self, s: &QSeries) -> TQSeries {
        let n = self.order().min(s.order());
        let mut out = TQSeries::zero_with_cap(n, self.t_cap);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let c = s.coeff(j);
                if !c.is_zero() {
                    out.coeffs[i + j].add_assign(&self.coeffs[i].scale(c));
                }
            }
        }
        out
    }

    /// Divide by a t-free unit series.
    pub fn div_qseries(&self, s: &QSeries) -> Result<TQSeries, SeriesError> {
        Ok(self.mul_qseries(&s.inverse()?))
    }

    /// d/dt with q = e^t: t^a q^d -> a t^{a-1} q^d + d t^a q^d.
    pub fn d_dt(&self) -> TQSeries {
        let n = self.order();
        let mut out = TQSeries::zero_with_cap(n, self.t_cap);
        for (d, p) in self.coeffs.iter().enumerate() {
            for a in 0..=p.degree() {
                let c = p.coeff(a);
                if c.is_zero() {
                    continue;
                }
                if a >= 1 {
                    out.coeffs[d]
                        .add_assign(&TPoly::monomial(&c * &Rational::from(a as i64), a - 1));
                }
                if d >= 1 {
                    out.coeffs[d].add_assign(&TPoly::monomial(&c * &Rational::from(d as i64), a));
                }
            }
        }
        out
    }
}

impl fmt::Debug for TQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (d, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            write!(f, "[q^{d}:")?;
            for a in 0..=p.degree() {
                let c = p.coeff(a);
                if !c.is_zero() {
                    write!(f, " ({c})t^{a}")?;
                }
            }
            write!(f, "] ")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, "+ O(q^{})", self.order() + 1)
    }
}
