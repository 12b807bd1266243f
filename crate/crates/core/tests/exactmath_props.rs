//! Property tests for the series kernel: ring axioms, the transcendental
//! inverse pairs, derivative/embedding compatibility, and the global residue
//! identity on lemma-shaped rational functions.

use gwlocal::exactmath::laurent::{expand_rational_at, residue_at_infinity};
use gwlocal::exactmath::tqseries::TQSeries;
use gwlocal::exactmath::{QSeries, Rational};
use proptest::prelude::*;

const ORDER: usize = 8;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn series() -> impl Strategy<Value = QSeries> {
    proptest::collection::vec(rational(), ORDER + 1).prop_map(QSeries::from_coeffs)
}

/// Series with constant term 0 (valid exp/compose input).
fn series_no_constant() -> impl Strategy<Value = QSeries> {
    series().prop_map(|s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = Rational::zero();
        QSeries::from_coeffs(coeffs)
    })
}

/// Series with constant 0 and nonzero linear term (valid reversion input).
fn series_invertible() -> impl Strategy<Value = QSeries> {
    (series_no_constant(), -5i64..=5, 1i64..=4).prop_map(|(s, n, d)| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[1] = Rational::new(2 * n + 1, d); // odd numerator, never zero
        QSeries::from_coeffs(coeffs)
    })
}

proptest! {
    #[test]
    fn multiplication_is_associative_and_commutative(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_distributes_over_addition(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn division_inverts_multiplication(a in series(), b in series()) {
        prop_assume!(!b.constant_term().is_zero());
        let q = a.mul(&b).div(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn exp_log_round_trip(s in series_no_constant()) {
        let e = s.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), s.clone());
        // and the other direction, starting from a unit series
        let mut unit_coeffs = s.coeffs().to_vec();
        unit_coeffs[0] = Rational::one();
        let u = QSeries::from_coeffs(unit_coeffs);
        prop_assert_eq!(u.log().unwrap().exp().unwrap(), u);
    }

    #[test]
    fn log_turns_products_into_sums(a in series_no_constant(), b in series_no_constant()) {
        let ua = a.exp().unwrap();
        let ub = b.exp().unwrap();
        let lhs = ua.mul(&ub).log().unwrap();
        prop_assert_eq!(lhs, a.add(&b));
    }

    #[test]
    fn reversion_round_trip(s in series_invertible()) {
        let r = s.reversion().unwrap();
        prop_assert_eq!(s.compose(&r).unwrap(), QSeries::identity(ORDER));
        prop_assert_eq!(r.compose(&s).unwrap(), QSeries::identity(ORDER));
    }

    #[test]
    fn composition_is_associative(a in series(), b in series_no_constant(), c in series_no_constant()) {
        let lhs = a.compose(&b).unwrap().compose(&c).unwrap();
        let rhs = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_dt_commutes_with_embedding(s in series()) {
        // embedding a t-free series and differentiating equals the Euler
        // operator on the plain series
        let embedded = TQSeries::from_qseries(&s, 4);
        prop_assert_eq!(embedded.d_dt().to_qseries().unwrap(), s.q_d_dq());
    }

    #[test]
    fn global_residues_sum_to_zero(
        odd in any::<bool>(),
        k in 0usize..=4,
        twists in proptest::collection::vec(1u32..=4, 1..=3),
    ) {
        // lemma-shaped integrand: [(2w+1)] prod_i prod_{s=1}^{c_i-1}(c_i w + s)
        //   / ((w+1)^k w^k)
        let mut numer = if odd {
            vec![Rational::one(), Rational::from(2)]
        } else {
            vec![Rational::one()]
        };
        for &c in &twists {
            for s in 1..c {
                let factor = [Rational::from(s as i64), Rational::from(c as i64)];
                let mut next = vec![Rational::zero(); numer.len() + 1];
                for (i, x) in numer.iter().enumerate() {
                    next[i] += &(x * &factor[0]);
                    next[i + 1] += &(x * &factor[1]);
                }
                numer = next;
            }
        }
        let denom = vec![(Rational::one(), k), (Rational::zero(), k)];
        let r0 = expand_rational_at(&numer, &denom, &Rational::zero(), 0)
            .residue()
            .unwrap();
        let rm1 = expand_rational_at(&numer, &denom, &(-Rational::one()), 0)
            .residue()
            .unwrap();
        let rinf = residue_at_infinity(&numer, &denom).unwrap();
        prop_assert_eq!(&(&r0 + &rm1) + &rinf, Rational::zero());
    }
}
