//! Truncated formal power series with exact rational coefficients.
//!
//! A `QSeries` of order `D` knows the coefficients of q^0 .. q^D exactly and
//! nothing beyond. Binary operations truncate to the minimum order of the two
//! operands; asking for a coefficient past the truncation order is a hard
//! error, never a silent zero.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use rayon::prelude::*;

use super::rational::Rational;
use super::SeriesError;

/// Convolutions at or above this order fan out across threads; every output
/// coefficient is still a single sequential sum, so results do not depend on
/// scheduling.
const PARALLEL_MUL_MIN_ORDER: usize = 48;

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    /// coeffs[d] is the coefficient of q^d; len = truncation_order + 1.
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// The zero series known through q^order.
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1 known through q^order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// c * q^power + O(q^{order+1}). Panics if power > order.
    pub fn monomial(c: Rational, power: usize, order: usize) -> Self {
        assert!(
            power <= order,
            "monomial power {power} beyond order {order}"
        );
        let mut s = Self::zero(order);
        s.coeffs[power] = c;
        s
    }

    /// The identity series q, known through q^order (order >= 1).
    pub fn identity(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the q^0 coefficient"
        );
        QSeries { coeffs }
    }

    /// Truncation order D: coefficients of q^0..q^D are known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^d. Panics when d exceeds the truncation order.
    pub fn coeff(&self, d: usize) -> &Rational {
        assert!(
            d <= self.order(),
            "coefficient of q^{d} requested from a series truncated at q^{}",
            self.order()
        );
        &self.coeffs[d]
    }

    /// Checked coefficient access.
    pub fn get(&self, d: usize) -> Option<&Rational> {
        self.coeffs.get(d)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Restrict to a lower truncation order.
    pub fn truncated(&self, order: usize) -> QSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        QSeries {
            coeffs: (0..=n)
                .map(|d| &self.coeffs[d] + &other.coeffs[d])
                .collect(),
        }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        QSeries {
            coeffs: (0..=n)
                .map(|d| &self.coeffs[d] - &other.coeffs[d])
                .collect(),
        }
    }

    /// Schoolbook product; quadratic is plenty at the orders this crate uses.
    /// Large orders compute output coefficients in parallel.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        if n >= PARALLEL_MUL_MIN_ORDER {
            let coeffs: Vec<Rational> = (0..=n)
                .into_par_iter()
                .map(|k| {
                    let mut acc = Rational::zero();
                    for i in 0..=k {
                        let a = &self.coeffs[i];
                        if a.is_zero() {
                            continue;
                        }
                        let b = &other.coeffs[k - i];
                        if !b.is_zero() {
                            acc += &(a * b);
                        }
                    }
                    acc
                })
                .collect();
            return QSeries { coeffs };
        }
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        QSeries { coeffs: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<QSeries, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::DivisorNotUnit);
        }
        let n = self.order();
        let c0_inv = self.coeffs[0].recip();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out[k] = -(acc * &c0_inv);
        }
        Ok(QSeries { coeffs: out })
    }

    pub fn div(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Formal logarithm; requires constant term exactly 1.
    ///
    /// Computed through (log s)' = s'/s and exact termwise integration.
    pub fn log(&self) -> Result<QSeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstantNotOne);
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        if n > 0 {
            let deriv = QSeries {
                coeffs: (1..=n)
                    .map(|k| &self.coeffs[k] * &Rational::from(k as i64))
                    .collect(),
            };
            let ratio = deriv.div(&self.truncated(n - 1))?;
            for (k, slot) in out.iter_mut().enumerate().skip(1) {
                *slot = &ratio.coeffs[k - 1] / &Rational::from(k as i64);
            }
        }
        Ok(QSeries { coeffs: out })
    }

    /// Formal exponential; requires constant term exactly 0.
    pub fn exp(&self) -> Result<QSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpConstantNotZero);
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = Rational::one();
        // e' = s' e  =>  k e_k = sum_{j=1}^k j s_j e_{k-j}
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &(&(&self.coeffs[j] * &Rational::from(j as i64)) * &out[k - j]);
                }
            }
            out[k] = acc / Rational::from(k as i64);
        }
        Ok(QSeries { coeffs: out })
    }

    /// The Euler operator q d/dq: c_d q^d -> d c_d q^d.
    pub fn q_d_dq(&self) -> QSeries {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| c * &Rational::from(d as i64))
                .collect(),
        }
    }

    /// Substitute `inner` for the variable; `inner` must have zero constant term.
    ///
    /// Writing inner = q * u, the term c_k inner^k = c_k q^k u^k only needs
    /// u^k through order n-k, so the incremental powers shrink as k grows.
    pub fn compose(&self, inner: &QSeries) -> Result<QSeries, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ComposeConstantNotZero);
        }
        let n = self.order().min(inner.order());
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = self.coeffs[0].clone();
        if n == 0 {
            return Ok(QSeries { coeffs: out });
        }
        let unit = QSeries {
            coeffs: inner.coeffs[1..=n].to_vec(),
        };
        let mut power = QSeries::one(n - 1);
        for k in 1..=n {
            let needed = n - k;
            power = power
                .truncated(needed.min(power.order()))
                .mul(&unit.truncated(needed));
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            for j in 0..=needed {
                let p = power.coeff(j);
                if !p.is_zero() {
                    out[k + j] += &(c * p);
                }
            }
        }
        Ok(QSeries { coeffs: out })
    }

    /// Compositional inverse r with self(r(Q)) = Q up to truncation.
    ///
    /// Requires zero constant term and a nonzero linear coefficient. Uses the
    /// Lagrange inversion formula r_k = (1/k) [q^{k-1}] (q/s)^k with the powers
    /// of q/s built incrementally. Debug builds re-verify the round trip.
    pub fn reversion(&self) -> Result<QSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ReversionConstantNotZero);
        }
        if self.order() == 0 || self.coeffs[1].is_zero() {
            return Err(SeriesError::ReversionZeroLinearTerm);
        }
        let n = self.order();
        // u = s/q as a unit series of order n-1, then g = 1/u = q/s.
        let shifted = QSeries {
            coeffs: self.coeffs[1..].to_vec(),
        };
        let g = shifted.inverse()?;
        let mut out = vec![Rational::zero(); n + 1];
        let mut power = QSeries::one(n - 1);
        for (k, slot) in out.iter_mut().enumerate().skip(1) {
            power = power.mul(&g);
            *slot = power.coeff(k - 1) / &Rational::from(k as i64);
        }
        let result = QSeries { coeffs: out };
        #[cfg(debug_assertions)]
        {
            let round = self.compose(&result).expect("reversion round trip");
            debug_assert_eq!(
                round,
                QSeries::identity(n),
                "reversion failed the round-trip identity"
            );
        }
        Ok(result)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{d}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}
