//! Bivariate truncated series in an auxiliary variable x over q-series.
//!
//! Only tiny x-orders are ever needed (x^2 suffices for the two-point
//! extraction), so coefficients are stored densely per power of x.

use super::qseries::QSeries;
use super::rational::Rational;
use super::SeriesError;

/// sum_{k=0}^{x_order} coeffs[k](q) x^k, each coefficient a QSeries of a
/// common q-order. Products truncate both variables independently.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries {
    coeffs: Vec<QSeries>,
}

impl BiSeries {
    pub fn zero(x_order: usize, q_order: usize) -> Self {
        BiSeries {
            coeffs: vec![QSeries::zero(q_order); x_order + 1],
        }
    }

    pub fn from_x_coeffs(coeffs: Vec<QSeries>) -> Self {
        assert!(!coeffs.is_empty());
        let q_order = coeffs.iter().map(QSeries::order).min().unwrap();
        BiSeries {
            coeffs: coeffs.into_iter().map(|s| s.truncated(q_order)).collect(),
        }
    }

    pub fn x_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn q_order(&self) -> usize {
        self.coeffs[0].order()
    }

    /// Coefficient of x^k as a q-series. Panics past the x truncation.
    pub fn x_coeff(&self, k: usize) -> &QSeries {
        assert!(
            k <= self.x_order(),
            "coefficient of x^{k} requested from a series truncated at x^{}",
            self.x_order()
        );
        &self.coeffs[k]
    }

    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let xo = self.x_order().min(other.x_order());
        BiSeries::from_x_coeffs(
            (0..=xo)
                .map(|k| self.coeffs[k].add(&other.coeffs[k]))
                .collect(),
        )
    }

    pub fn mul(&self, other: &BiSeries) -> BiSeries {
        let xo = self.x_order().min(other.x_order());
        let qo = self.q_order().min(other.q_order());
        let mut out = vec![QSeries::zero(qo); xo + 1];
        for i in 0..=xo {
            for j in 0..=(xo - i) {
                let prod = self.coeffs[i]
                    .truncated(qo)
                    .mul(&other.coeffs[j].truncated(qo));
                out[i + j] = out[i + j].add(&prod);
            }
        }
        BiSeries { coeffs: out }
    }

    /// e^{x f(q)} truncated at the requested x-order: sum_k f^k/k! x^k.
    pub fn exp_x_times(f: &QSeries, x_order: usize) -> Result<BiSeries, SeriesError> {
        let mut coeffs = Vec::with_capacity(x_order + 1);
        let mut power = QSeries::one(f.order());
        let mut kfact = Rational::one();
        for k in 0..=x_order {
            if k > 0 {
                power = power.mul(f);
                kfact = kfact * Rational::from(k as i64);
            }
            coeffs.push(power.scale(&kfact.recip()));
        }
        Ok(BiSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_truncates_both_variables() {
        // (1 + x q) * (1 + x q) at x-order 1 keeps only 1 + 2 x q
        let a = BiSeries::from_x_coeffs(vec![QSeries::one(3), QSeries::identity(3)]);
        let p = a.mul(&a);
        assert_eq!(p.x_order(), 1);
        assert_eq!(p.x_coeff(0), &QSeries::one(3));
        assert_eq!(
            p.x_coeff(1),
            &QSeries::identity(3).scale(&Rational::from(2))
        );
    }

    #[test]
    fn exp_expansion() {
        // e^{x f} with f = q: x-coefficients 1, q, q^2/2
        let f = QSeries::identity(4);
        let e = BiSeries::exp_x_times(&f, 2).unwrap();
        assert_eq!(e.x_coeff(0), &QSeries::one(4));
        assert_eq!(e.x_coeff(1), &f);
        assert_eq!(e.x_coeff(2), &QSeries::monomial(Rational::new(1, 2), 2, 4));
    }
}
