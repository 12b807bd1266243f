//! Mechanical verification of the identities behind the closed forms: the
//! parity residue lemma, the first-order ladder proposition, the binomial
//! summation identities, the degree-splitting factorial identity, the
//! randomized-weight fixed-point oracle for degree one, and the degree-one
//! consistency of the conjecture against its closed form.
//!
//! Every check is exact: a result passes only when the two sides are equal
//! as rational numbers. Randomness appears solely in the choice of torus
//! weights, where exactness makes any valid draw conclusive.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exactmath::laurent::{expand_rational_at, residue_at_infinity};
use crate::exactmath::rational::{binomial, factorial, int_pow, Rational};
use crate::genus1::{conjecture_invariants, degree_one_closed};
use crate::geometry::{enumerate_calabi_yau, SplitGeometry};
use crate::ifunctions::ipp_ladder;

/// Outcome of one exact check; `passed` holds exactly when lhs == rhs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub parameters: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

impl CheckResult {
    fn compare(
        name: &str,
        parameters: String,
        lhs: &Rational,
        rhs: &Rational,
        detail: String,
    ) -> Self {
        CheckResult {
            name: name.to_string(),
            parameters,
            passed: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(
                f,
                "PASS {} [{}] ({} = {})",
                self.name, self.parameters, self.lhs, self.rhs
            )
        } else {
            write!(
                f,
                "FAIL {} [{}]: lhs = {}, rhs = {} ({})",
                self.name, self.parameters, self.lhs, self.rhs, self.detail
            )
        }
    }
}

/// Distinct positive torus weights, drawn deterministically from a seed.
#[derive(Debug, Clone)]
pub struct WeightVector {
    alphas: Vec<Rational>,
}

impl WeightVector {
    /// Draw `count` pairwise-distinct integers from 1..=997. Distinct positive
    /// values keep every denominator in the fixed-point sums nonzero; the
    /// retry loop is bounded and cannot stall for the sizes used here.
    pub fn draw(count: usize, seed: u64) -> Self {
        assert!(
            count <= 900,
            "weight draw needs count well below the pool size"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picked: Vec<i64> = Vec::with_capacity(count);
        let mut attempts = 0;
        while picked.len() < count {
            attempts += 1;
            assert!(attempts < 100_000, "bounded retry exceeded drawing weights");
            let candidate = rng.gen_range(1..=997i64);
            if !picked.contains(&candidate) {
                picked.push(candidate);
            }
        }
        WeightVector {
            alphas: picked.into_iter().map(Rational::from).collect(),
        }
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }
}

/// Parity residue lemma. For n = 2r+1:
///   Res_{w=0} (2w+1) prod_i prod_{s=1}^{c_i-1}(c_i w+s) / ((w+1)^{r-m+1} w^{r-m+1})
///     = -(1/12)(sum 1/c_i - sum c_i) prod c_i^{c_i-1},
/// and for n = 2r the variant without the (2w+1) factor, exponent r-m, and
/// right side -(1/24)(sum 1/c_i - sum c_i + 3/2) prod c_i^{c_i-1}.
///
/// The detail also records the two proof facts: the residues at 0 and -1
/// agree (the integrand is symmetric under w -> -1-w up to sign), and the
/// three residues (0, -1, infinity) sum to zero.
pub fn check_residue_lemma(geom: &SplitGeometry) -> CheckResult {
    let n = geom.total_dim() as i64;
    let m = geom.bundle_rank() as i64;
    let odd = n % 2 == 1;
    let r = if odd { (n - 1) / 2 } else { n / 2 };
    let k = if odd { r - m + 1 } else { r - m };
    debug_assert!(
        k >= 0,
        "pole order is nonnegative for Calabi-Yau geometries"
    );
    let k = k as usize;

    let mut numer = if odd {
        vec![Rational::one(), Rational::from(2)]
    } else {
        vec![Rational::one()]
    };
    for &c in geom.twists() {
        for s in 1..c {
            numer = poly_mul(
                &numer,
                &[Rational::from(s as i64), Rational::from(c as i64)],
            );
        }
    }
    let denom = vec![(Rational::one(), k), (Rational::zero(), k)];

    let res_zero = expand_rational_at(&numer, &denom, &Rational::zero(), 0)
        .residue()
        .expect("expansion reaches w^-1");
    let res_minus_one = expand_rational_at(&numer, &denom, &(-Rational::one()), 0)
        .residue()
        .expect("expansion reaches w^-1");
    let res_infinity = residue_at_infinity(&numer, &denom).expect("polynomial part is finite");
    let symmetric = res_zero == res_minus_one;
    let global_sum = &(&res_zero + &res_minus_one) + &res_infinity;

    let mut bracket = Rational::zero();
    let mut product = Rational::one();
    for &c in geom.twists() {
        bracket += &Rational::new(1, c as i64);
        bracket -= &Rational::from(c as i64);
        product = product * Rational::from(int_pow(c as i64, c - 1));
    }
    if !odd {
        bracket += &Rational::new(3, 2);
    }
    let scale = if odd {
        Rational::new(-1, 12)
    } else {
        Rational::new(-1, 24)
    };
    let rhs = scale * bracket * product;

    let mut result = CheckResult::compare(
        "residue_lemma",
        format!("{geom}"),
        &res_zero,
        &rhs,
        format!("res(0)=res(-1): {symmetric}; res(0)+res(-1)+res(inf) = {global_sum}"),
    );
    result.passed = result.passed && symmetric && global_sum.is_zero();
    result
}

/// First-order ladder proposition: the weighted first coefficients of the
/// diagonal logarithms collapse to a closed product,
///   sum_p c_p [q^1] ln I_{p,p} = -((-1)^{sum c_i}/24)(sum 1/c_i - sum c_i
///                                [+ 3/2 for even n]) prod c_i^{c_i}.
pub fn check_prop66(geom: &SplitGeometry) -> CheckResult {
    let n = geom.total_dim() as i64;
    let odd = n % 2 == 1;
    let p_max = if odd { (n - 1) / 2 } else { (n - 2) / 2 } as usize;

    let mut lhs = Rational::zero();
    if p_max > 0 {
        let ladder = ipp_ladder(geom, p_max, 1).expect("ladder purifies for valid geometries");
        for p in 1..=p_max {
            let coeff = if odd {
                Rational::new((n + 1 - 2 * p as i64).pow(2), 8)
            } else {
                Rational::new((n + 2 - 2 * p as i64) * (n - 2 * p as i64), 8)
            };
            // [q^1] ln I = [q^1] I for unit-constant series
            lhs += &(&coeff * ladder.diagonal(p).coeff(1));
        }
    }

    let twist_sum: u32 = geom.twists().iter().sum();
    let sign = if twist_sum.is_multiple_of(2) { 1 } else { -1 };
    let mut bracket = Rational::zero();
    let mut product = Rational::one();
    for &c in geom.twists() {
        bracket += &Rational::new(1, c as i64);
        bracket -= &Rational::from(c as i64);
        product = product * Rational::from(int_pow(c as i64, c));
    }
    if !odd {
        bracket += &Rational::new(3, 2);
    }
    let rhs = Rational::new(-sign, 24) * bracket * product;

    CheckResult::compare(
        "prop_first_order",
        format!("{geom}"),
        &lhs,
        &rhs,
        format!("p = 1..{p_max}"),
    )
}

/// Binomial summation identities, one result per (identity, r), verifying all
/// 1 <= k <= r:
///   sum_{p=1}^{r} (r+1-p)^2 C(p-1,k-1) = 2 C(r+2,k+2) - C(r+1,k+1)
///   sum_{p=1}^{r-1} (r+1-p)(r-p) C(p-1,k-1) = 2 C(r+1,k+2)
pub fn check_binomial_identities(r_max: usize) -> Vec<CheckResult> {
    let mut results = Vec::with_capacity(2 * r_max);
    for r in 1..=r_max as u64 {
        let mut square_ok = true;
        let mut product_ok = true;
        let mut first_mismatch = String::new();
        for k in 1..=r {
            let mut lhs_sq = num::BigInt::from(0);
            for p in 1..=r {
                lhs_sq += num::BigInt::from((r + 1 - p).pow(2)) * binomial(p - 1, k - 1);
            }
            let rhs_sq = 2 * binomial(r + 2, k + 2) - binomial(r + 1, k + 1);
            if lhs_sq != rhs_sq {
                square_ok = false;
                first_mismatch = format!("square identity at k={k}: {lhs_sq} vs {rhs_sq}");
            }
            let mut lhs_pr = num::BigInt::from(0);
            for p in 1..r {
                lhs_pr += num::BigInt::from((r + 1 - p) * (r - p)) * binomial(p - 1, k - 1);
            }
            let rhs_pr = 2 * binomial(r + 1, k + 2);
            if lhs_pr != rhs_pr {
                product_ok = false;
                first_mismatch = format!("product identity at k={k}: {lhs_pr} vs {rhs_pr}");
            }
        }
        let digest = |ok: bool| {
            if ok {
                format!("equal for k = 1..{r}")
            } else {
                first_mismatch.clone()
            }
        };
        results.push(CheckResult {
            name: "binomial_square_sum".to_string(),
            parameters: format!("r={r}"),
            passed: square_ok,
            lhs: digest(square_ok),
            rhs: format!("equal for k = 1..{r}"),
            detail: String::new(),
        });
        results.push(CheckResult {
            name: "binomial_product_sum".to_string(),
            parameters: format!("r={r}"),
            passed: product_ok,
            lhs: digest(product_ok),
            rhs: format!("equal for k = 1..{r}"),
            detail: String::new(),
        });
    }
    results
}

/// Degree-splitting factorial identity, one result per degree:
///   (2d)!/(d!)^2 (2d sum_{a=1}^{d} 1/(d+a) + 1)
///     - sum_{d0+d1=d} d0 (2d0)! (2d1)! / ((d0!)^2 (d1!)^2 d1) = 4^d.
pub fn check_lemma72(d_max: usize) -> Vec<CheckResult> {
    (1..=d_max)
        .map(|d| {
            let d64 = d as u64;
            let harmonic: Rational = (1..=d64)
                .map(|a| Rational::new(1, (d64 + a) as i64))
                .fold(Rational::zero(), |acc, x| acc + x);
            let central =
                Rational::from(factorial(2 * d64)) * Rational::new(1, factorial(d64).pow(2));
            let mut lhs = central * (Rational::from(2 * d as i64) * harmonic + Rational::one());
            for d0 in 1..d64 {
                let d1 = d64 - d0;
                let term =
                    Rational::from(num::BigInt::from(d0) * factorial(2 * d0) * factorial(2 * d1))
                        * Rational::new(
                            1,
                            factorial(d0).pow(2) * factorial(d1).pow(2) * num::BigInt::from(d1),
                        );
                lhs -= &term;
            }
            let rhs = Rational::from(int_pow(4, d as u32));
            CheckResult::compare("lemma72", format!("d={d}"), &lhs, &rhs, String::new())
        })
        .collect()
}

/// Degree-one fixed-point oracle: the sum of per-graph contributions over
/// ordered pairs (i, j) of fixed points equals the closed form, for any
/// valid weight draw.
pub fn check_degree_one_localization(geom: &SplitGeometry, seed: u64) -> CheckResult {
    let weight_count = (geom.base_dim() + 1) as usize; // n - m + 1
    let weights = WeightVector::draw(weight_count, seed);
    let lhs = localization_sum(geom, &weights);
    let rhs = degree_one_closed(geom);
    CheckResult::compare(
        "degree_one_localization",
        format!("{geom} seed={seed}"),
        &lhs,
        &rhs,
        format!("{} fixed-point weights", weight_count),
    )
}

/// The fixed-point graph sum for degree one.
pub fn localization_sum(geom: &SplitGeometry, weights: &WeightVector) -> Rational {
    let alphas = weights.alphas();
    let count = alphas.len();
    let n = geom.total_dim() as i64;
    let m = geom.bundle_rank() as i64;
    let mut total = Rational::zero();
    for i in 0..count {
        for j in 0..count {
            if i == j {
                continue;
            }
            total += &graph_contribution(geom, alphas, i, j, n, m);
        }
    }
    total
}

fn graph_contribution(
    geom: &SplitGeometry,
    alphas: &[Rational],
    i: usize,
    j: usize,
    n: i64,
    m: i64,
) -> Rational {
    let ai = &alphas[i];
    let aj = &alphas[j];
    if geom.is_canonical_bundle() {
        // ((-1)^n n / 24) a_i prod_{a=1}^{n-1}((n-a) a_j + a a_i)
        //   / prod_{k != j}(a_j - a_k)
        //   * (sum_{k != i,j} 1/(a_i - a_k) - 1/(n a_i))
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let mut numer = ai.clone();
        for a in 1..n {
            numer = numer * (Rational::from(n - a) * aj + Rational::from(a) * ai);
        }
        let mut denom = Rational::one();
        for (k, ak) in alphas.iter().enumerate() {
            if k != j {
                denom = denom * (aj - ak);
            }
        }
        let mut bracket = -(Rational::from(n) * ai).recip();
        for (k, ak) in alphas.iter().enumerate() {
            if k != i && k != j {
                bracket += &(ai - ak).recip();
            }
        }
        Rational::new(sign * n, 24) * numer / denom * bracket
    } else {
        // ((-1)^{n-m+1} / 24) a_i^m prod_l (c_l prod_{a=1}^{c_l-1}((c_l-a) a_j + a a_i))
        //   / ((a_j - a_i) prod_{k != i,j}(a_j - a_k))
        //   * (sum_{k != i,j} 1/(a_i - a_k) - sum_l 1/(c_l a_i))
        let sign = if (n - m + 1) % 2 == 0 { 1 } else { -1 };
        let mut numer = ai.pow(m as i32);
        for &c in geom.twists() {
            numer = numer * Rational::from(c as i64);
            for a in 1..c as i64 {
                numer = numer * (Rational::from(c as i64 - a) * aj + Rational::from(a) * ai);
            }
        }
        let mut denom = aj - ai;
        for (k, ak) in alphas.iter().enumerate() {
            if k != i && k != j {
                denom = denom * (aj - ak);
            }
        }
        let mut bracket = Rational::zero();
        for &c in geom.twists() {
            bracket -= &(Rational::from(c as i64) * ai).recip();
        }
        for (k, ak) in alphas.iter().enumerate() {
            if k != i && k != j {
                bracket += &(ai - ak).recip();
            }
        }
        Rational::new(sign, 24) * numer / denom * bracket
    }
}

/// Degree-one consistency: [Q^1] of the conjecture series equals the closed
/// form, exactly.
pub fn check_degree_one_consistency(geom: &SplitGeometry) -> CheckResult {
    let lhs = conjecture_invariants(geom, 1)
        .expect("conjecture series exists for valid geometries")
        .value(1)
        .clone();
    let rhs = degree_one_closed(geom);
    CheckResult::compare(
        "degree_one_consistency",
        format!("{geom}"),
        &lhs,
        &rhs,
        String::new(),
    )
}

/// Which checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckFilter {
    All,
    ResidueLemma,
    Prop66,
    Binomial,
    Lemma72,
    Localization,
    DegreeOne,
}

impl CheckFilter {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "all" => Some(CheckFilter::All),
            "residue_lemma" => Some(CheckFilter::ResidueLemma),
            "prop66" | "prop_first_order" => Some(CheckFilter::Prop66),
            "binomial" => Some(CheckFilter::Binomial),
            "lemma72" => Some(CheckFilter::Lemma72),
            "localization" => Some(CheckFilter::Localization),
            "degree_one" | "degree_one_consistency" => Some(CheckFilter::DegreeOne),
            _ => None,
        }
    }
}

/// Sweep bounds for the full suite. Defaults follow the documented gate:
/// geometry sweeps to n <= 10, localization to n <= 8 with 3 seeds,
/// binomial identities to r <= 30, the factorial identity to d <= 60.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_n: u32,
    pub localization_max_n: u32,
    pub seeds: u64,
    pub binomial_r_max: usize,
    pub lemma72_d_max: usize,
    pub filter: CheckFilter,
    pub base_seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 10,
            localization_max_n: 8,
            seeds: 3,
            binomial_r_max: 30,
            lemma72_d_max: 60,
            filter: CheckFilter::All,
            base_seed: 1,
        }
    }
}

/// Run the configured checks in parallel and return the results in canonical
/// order (sorted by name, then parameters).
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckResult> {
    let want = |f: CheckFilter| config.filter == CheckFilter::All || config.filter == f;
    let mut jobs: Vec<Box<dyn Fn() -> Vec<CheckResult> + Send + Sync>> = Vec::new();

    if want(CheckFilter::ResidueLemma) {
        for n in 2..=config.max_n {
            for g in enumerate_calabi_yau(n) {
                jobs.push(Box::new(move || vec![check_residue_lemma(&g)]));
            }
        }
    }
    if want(CheckFilter::Prop66) {
        for n in 2..=config.max_n {
            for g in enumerate_calabi_yau(n) {
                jobs.push(Box::new(move || vec![check_prop66(&g)]));
            }
        }
    }
    if want(CheckFilter::Binomial) {
        let r_max = config.binomial_r_max;
        jobs.push(Box::new(move || check_binomial_identities(r_max)));
    }
    if want(CheckFilter::Lemma72) {
        let d_max = config.lemma72_d_max;
        jobs.push(Box::new(move || check_lemma72(d_max)));
    }
    if want(CheckFilter::Localization) {
        for n in 2..=config.localization_max_n {
            for g in enumerate_calabi_yau(n) {
                for s in 0..config.seeds {
                    let g = g.clone();
                    let seed = config.base_seed + s;
                    jobs.push(Box::new(move || {
                        vec![check_degree_one_localization(&g, seed)]
                    }));
                }
            }
        }
    }
    if want(CheckFilter::DegreeOne) {
        for n in 2..=config.max_n {
            for g in enumerate_calabi_yau(n) {
                jobs.push(Box::new(move || vec![check_degree_one_consistency(&g)]));
            }
        }
    }

    let mut results: Vec<CheckResult> = jobs.par_iter().flat_map(|job| job()).collect();
    results.sort_by(|a, b| (&a.name, &a.parameters).cmp(&(&b.name, &b.parameters)));
    results
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom(l: u32, cs: &[u32]) -> SplitGeometry {
        SplitGeometry::new(l, cs.to_vec()).unwrap()
    }

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn residue_lemma_o1_o3_both_sides_two() {
        let r = check_residue_lemma(&geom(3, &[1, 3]));
        assert!(r.passed, "{r}");
        assert_eq!(r.lhs, "2");
        assert_eq!(r.rhs, "2");
    }

    #[test]
    fn residue_lemma_examples() {
        for g in [
            geom(3, &[2, 2]),
            geom(5, &[2, 4]),
            geom(2, &[1, 1, 1]),
            geom(3, &[4]),
        ] {
            let r = check_residue_lemma(&g);
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn prop66_o1_o3_is_three() {
        let r = check_prop66(&geom(3, &[1, 3]));
        assert!(r.passed, "{r}");
        assert_eq!(r.lhs, "3");
    }

    #[test]
    fn prop66_examples() {
        for g in [
            geom(3, &[2, 2]),
            geom(2, &[1, 1, 1]),
            geom(3, &[4]),
            geom(2, &[1, 2]),
        ] {
            let r = check_prop66(&g);
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn binomial_identities_hand_values() {
        // r=3, k=2: sum (4-p)^2 C(p-1,1) = 4 + 2 = 6 = 2 C(5,4) - C(4,3)
        let lhs: u64 = (1..=3u64)
            .map(|p| {
                (4 - p).pow(2) * num::traits::ToPrimitive::to_u64(&binomial(p - 1, 1)).unwrap()
            })
            .sum();
        assert_eq!(lhs, 6);
        // r=4, k=1 product identity: 12 + 6 + 2 = 20 = 2 C(5,3)
        let lhs2: u64 = (1..=3u64)
            .map(|p| {
                (5 - p) * (4 - p) * num::traits::ToPrimitive::to_u64(&binomial(p - 1, 0)).unwrap()
            })
            .sum();
        assert_eq!(lhs2, 20);
        assert!(check_binomial_identities(12).iter().all(|r| r.passed));
    }

    #[test]
    fn lemma72_first_values() {
        let results = check_lemma72(3);
        assert!(results.iter().all(|r| r.passed));
        assert_eq!(results[0].lhs, "4");
        assert_eq!(results[1].lhs, "16");
        assert_eq!(results[2].lhs, "64");
    }

    #[test]
    fn localization_matches_closed_forms() {
        let r = check_degree_one_localization(&geom(2, &[3]), 7);
        assert!(r.passed, "{r}");
        assert_eq!(r.rhs, "1/4");
        // weight independence: several seeds, same result
        for seed in [1, 2, 3] {
            let r = check_degree_one_localization(&geom(3, &[1, 3]), seed);
            assert!(r.passed, "{r}");
            assert_eq!(r.lhs, "3/8");
        }
        let r = check_degree_one_localization(&geom(3, &[2, 2]), 11);
        assert!(r.passed, "{r}");
        assert_eq!(r.lhs, "0");
        let r = check_degree_one_localization(&geom(4, &[5]), 5);
        assert!(r.passed, "{r}");
        assert_eq!(r.lhs, "1515/8");
    }

    #[test]
    fn degree_one_consistency_examples() {
        for (g, expect) in [
            (geom(4, &[5]), "1515/8"),
            (geom(2, &[3]), "1/4"),
            (geom(2, &[1, 1, 1]), "-1/8"),
        ] {
            let r = check_degree_one_consistency(&g);
            assert!(r.passed, "{r}");
            assert_eq!(r.lhs, expect);
            assert_eq!(r.lhs, rat(expect).to_string());
        }
    }

    #[test]
    fn weight_draws_are_distinct_and_deterministic() {
        let a = WeightVector::draw(8, 42);
        let b = WeightVector::draw(8, 42);
        assert_eq!(a.alphas(), b.alphas());
        for (i, x) in a.alphas().iter().enumerate() {
            assert!(!x.is_zero());
            for y in &a.alphas()[i + 1..] {
                assert_ne!(x, y);
            }
        }
    }

    #[test]
    fn small_suite_passes_and_sorts() {
        let config = SuiteConfig {
            max_n: 5,
            localization_max_n: 4,
            seeds: 2,
            binomial_r_max: 5,
            lemma72_d_max: 5,
            filter: CheckFilter::All,
            base_seed: 1,
        };
        let results = run_suite(&config);
        assert!(!results.is_empty());
        assert!(results.iter().all(|r| r.passed), "suite has failures");
        let mut sorted = results.clone();
        sorted.sort_by(|a, b| (&a.name, &a.parameters).cmp(&(&b.name, &b.parameters)));
        assert_eq!(results, sorted);
    }

    #[test]
    fn filter_restricts_suite() {
        let config = SuiteConfig {
            lemma72_d_max: 2,
            filter: CheckFilter::Lemma72,
            ..SuiteConfig::default()
        };
        let results = run_suite(&config);
        assert_eq!(results.len(), 2);
        assert!(results.iter().all(|r| r.name == "lemma72" && r.passed));
        assert_eq!(results[0].lhs, "4");
        assert_eq!(results[1].lhs, "16");
    }
}
