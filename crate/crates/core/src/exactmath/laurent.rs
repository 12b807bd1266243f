//! Truncated Laurent series and exact residue extraction.
//!
//! Carries the residue computations behind the parity lemma: rational
//! functions of the shape P(w) / ((w+1)^k w^k) expanded at w = 0, w = -1 and
//! w = infinity.

use super::qseries::QSeries;
use super::rational::Rational;
use super::SeriesError;

/// Coefficients for exponents min_exp .. min_exp + coeffs.len() - 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl LaurentSeries {
    pub fn new(min_exp: i64, coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "laurent series needs at least one coefficient"
        );
        LaurentSeries { min_exp, coeffs }
    }

    /// A polynomial in w (exponents 0..).
    pub fn from_polynomial(coeffs: &[Rational]) -> Self {
        Self::new(0, coeffs.to_vec())
    }

    /// A polynomial in 1/w: p[j] becomes the coefficient of w^{-j}.
    pub fn from_polynomial_in_inverse(coeffs: &[Rational]) -> Self {
        let mut rev: Vec<Rational> = coeffs.to_vec();
        rev.reverse();
        Self::new(-(coeffs.len() as i64 - 1), rev)
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent whose coefficient is known.
    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of w^e: exactly zero below min_exp, an error above max_exp.
    pub fn coeff(&self, e: i64) -> Result<Rational, SeriesError> {
        if e > self.max_exp() {
            return Err(SeriesError::LaurentTruncated {
                wanted: e,
                max_exp: self.max_exp(),
            });
        }
        if e < self.min_exp {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(e - self.min_exp) as usize].clone())
    }

    /// The residue: coefficient of w^{-1}.
    pub fn residue(&self) -> Result<Rational, SeriesError> {
        self.coeff(-1)
    }

    /// Multiply by w^k (k may be negative).
    pub fn shift(&self, k: i64) -> LaurentSeries {
        LaurentSeries {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> LaurentSeries {
        LaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Product; the known window shrinks to what both factors determine.
    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let min = self.min_exp + other.min_exp;
        let max = (self.max_exp() + other.min_exp).min(other.max_exp() + self.min_exp);
        assert!(
            max >= min,
            "product of laurent windows determines no coefficient"
        );
        let len = (max - min + 1) as usize;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = self.min_exp + i as i64 + other.min_exp + j as i64;
                if e > max {
                    break;
                }
                if !b.is_zero() {
                    out[(e - min) as usize] += &(a * b);
                }
            }
        }
        LaurentSeries {
            min_exp: min,
            coeffs: out,
        }
    }

    /// Multiply by a power series in w (known to its truncation order).
    pub fn mul_series(&self, s: &QSeries) -> LaurentSeries {
        self.mul(&LaurentSeries::from_polynomial(s.coeffs()))
    }
}

/// Power-series expansion of 1/(w + a)^k around w = 0, for a != 0.
pub fn inverse_linear_power(a: &Rational, k: usize, order: usize) -> QSeries {
    assert!(!a.is_zero(), "pole at the expansion point");
    // (w+a)^{-k} = a^{-k} (1 + w/a)^{-k} = sum_j C(k+j-1, j) (-1)^j a^{-k-j} w^j
    let mut coeffs = Vec::with_capacity(order + 1);
    let a_inv = a.recip();
    let mut c = a_inv.pow(k as i32);
    for j in 0..=order {
        if j > 0 {
            // multiply by -(k+j-1)/j * 1/a
            let factor = Rational::new(-((k + j - 1) as i64), j as i64);
            c = &(&c * &factor) * &a_inv;
        }
        coeffs.push(c.clone());
    }
    QSeries::from_coeffs(coeffs)
}

/// p(w + delta) for a polynomial p.
pub fn shift_polynomial(coeffs: &[Rational], delta: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); coeffs.len()];
    // Horner: p(w+delta) built from the top coefficient down.
    for c in coeffs.iter().rev() {
        // out = out * (w + delta) + c
        let mut next = vec![Rational::zero(); coeffs.len()];
        for (i, o) in out.iter().enumerate() {
            if o.is_zero() {
                continue;
            }
            next[i] += &(o * delta);
            if i + 1 < next.len() {
                next[i + 1] += o;
            }
        }
        next[0] += c;
        out = next;
    }
    out
}

/// A rational function N(w) / prod_i (w + a_i)^{k_i} expanded at w = w0.
///
/// Every pole location must either coincide with w0 or stay away from it;
/// the expansion keeps exponents up to `order`.
pub fn expand_rational_at(
    numer: &[Rational],
    denom_factors: &[(Rational, usize)],
    w0: &Rational,
    order: i64,
) -> LaurentSeries {
    // substitute w = w0 + v and expand in v
    let shifted_numer = shift_polynomial(numer, w0);
    let mut pole_order = 0usize;
    let mut unit_factors: Vec<(Rational, usize)> = Vec::new();
    for (a, k) in denom_factors {
        let at_w0 = a + w0; // (w + a) at w = w0 + v is (v + (a + w0))
        if at_w0.is_zero() {
            pole_order += k;
        } else {
            unit_factors.push((at_w0, *k));
        }
    }
    let series_order = (order + pole_order as i64).max(0) as usize;
    let mut expansion = QSeries::from_coeffs(
        shifted_numer
            .into_iter()
            .chain(std::iter::repeat(Rational::zero()))
            .take(series_order + 1)
            .collect(),
    );
    for (a, k) in &unit_factors {
        expansion = expansion.mul(&inverse_linear_power(a, *k, series_order));
    }
    LaurentSeries::from_polynomial(expansion.coeffs()).shift(-(pole_order as i64))
}

/// Residue at infinity of N(w) / prod_i (w + a_i)^{k_i}.
///
/// Substituting w = 1/u, the residue at infinity is minus the coefficient of
/// u^{-1} in (1/u^2) f(1/u).
pub fn residue_at_infinity(
    numer: &[Rational],
    denom_factors: &[(Rational, usize)],
) -> Result<Rational, SeriesError> {
    let total_pole: usize = denom_factors.iter().map(|(_, k)| *k).sum();
    // f(1/u) = N(1/u) * prod (1/u + a)^{-k}; each factor is u^k (1 + a u)^{-k}.
    // N(1/u) is an exact Laurent polynomial, so its window extends upward
    // with literal zeros.
    let mut inverse_coeffs: Vec<Rational> = numer.to_vec();
    inverse_coeffs.reverse();
    inverse_coeffs.extend(std::iter::repeat_n(Rational::zero(), 3));
    let mut lau =
        LaurentSeries::new(-(numer.len() as i64 - 1), inverse_coeffs).shift(total_pole as i64 - 2);
    // needed order: coefficient of u^{-1}
    let order = 1 + numer.len();
    for (a, k) in denom_factors {
        if a.is_zero() {
            continue; // (1/u)^{-k} = u^k, already absorbed in the shift
        }
        lau = lau
            .mul_series(&inverse_linear_power(&a.recip(), *k, order).scale(&a.pow(-(*k as i32))));
    }
    Ok(-lau.coeff(-1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn residue_of_inverse_w() {
        let s = LaurentSeries::new(-1, vec![Rational::one()]);
        assert_eq!(s.residue().unwrap(), Rational::one());
    }

    #[test]
    fn residue_of_inverse_w_squared_is_zero() {
        let s = LaurentSeries::new(-2, vec![Rational::one(), Rational::zero()]);
        assert_eq!(s.residue().unwrap(), Rational::zero());
    }

    #[test]
    fn lemma_shape_residue_at_zero() {
        // Res_{w=0} (2w+1)(3w+1)(3w+2)/((w+1)w) = 2
        let numer = poly_product(&[&[r(1), r(2)], &[r(1), r(3)], &[r(2), r(3)]]);
        let denom = vec![(r(1), 1), (r(0), 1)];
        let lau = expand_rational_at(&numer, &denom, &Rational::zero(), 0);
        assert_eq!(lau.residue().unwrap(), r(2));
    }

    #[test]
    fn insufficient_truncation_is_an_error() {
        let s = LaurentSeries::new(-5, vec![Rational::one()]);
        assert!(matches!(
            s.residue(),
            Err(SeriesError::LaurentTruncated { .. })
        ));
    }

    #[test]
    fn global_residue_sums_to_zero() {
        // f = (2w+1)(3w+1)(3w+2)/((w+1)w): residues at 0, -1, infinity cancel
        let numer = poly_product(&[&[r(1), r(2)], &[r(1), r(3)], &[r(2), r(3)]]);
        let denom = vec![(r(1), 1), (r(0), 1)];
        let r0 = expand_rational_at(&numer, &denom, &Rational::zero(), 0)
            .residue()
            .unwrap();
        let rm1 = expand_rational_at(&numer, &denom, &-Rational::one(), 0)
            .residue()
            .unwrap();
        let rinf = residue_at_infinity(&numer, &denom).unwrap();
        assert_eq!(&(&r0 + &rm1) + &rinf, Rational::zero());
    }

    #[test]
    fn shift_polynomial_evaluates_substitution() {
        // p(w) = w^2 + 1 at w -> w - 1 gives w^2 - 2w + 2
        let p = vec![r(1), r(0), r(1)];
        let s = shift_polynomial(&p, &-Rational::one());
        assert_eq!(s, vec![r(2), r(-2), r(1)]);
    }

    fn poly_product(factors: &[&[Rational]]) -> Vec<Rational> {
        let mut acc = vec![Rational::one()];
        for f in factors {
            let mut next = vec![Rational::zero(); acc.len() + f.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    next[i + j] += &(a * b);
                }
            }
            acc = next;
        }
        acc
    }
}
