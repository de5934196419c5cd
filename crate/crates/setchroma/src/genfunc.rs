//! Generating-function engine: expands the product of linear factors
//! `prod_j (1 + a_j t)`, scales coefficients into counts, and analyzes the
//! coefficient sequence (log-concavity, Darroch's mode bracket).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binomial, factorial, BigCount};
use crate::{Error, Result};

/// Finite ordered weight sequence `(a_0, ..., a_k)` of exact integers.
///
/// Weights may be zero (a zero weight contributes an identity factor to
/// the product) and, for the plain counting operations, negative.
/// Operations whose meaning needs nonnegativity check it explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSequence {
    weights: Vec<BigCount>,
}

impl WeightSequence {
    pub fn new(weights: Vec<BigCount>) -> Self {
        Self { weights }
    }

    pub fn from_i64(weights: &[i64]) -> Self {
        Self::new(weights.iter().map(|&w| BigCount::from(w)).collect())
    }

    /// The binomial row `(C(k,0), ..., C(k,k))` that specializes weighted
    /// counts to urn counts.
    pub fn binomial_row(k: u64) -> Self {
        Self::new((0..=k).map(|j| binomial(k, j as i64)).collect())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[BigCount] {
        &self.weights
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigCount> {
        self.weights.iter()
    }

    /// Power sum `beta_r = sum_j a_j^r`; `beta_0` counts the entries.
    pub fn power_sum(&self, r: u64) -> BigCount {
        self.weights
            .iter()
            .fold(BigCount::zero(), |acc, w| acc + num_traits::Pow::pow(w, r))
    }

    /// Index of the first negative weight, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.weights.iter().position(|w| w.is_negative())
    }
}

impl FromIterator<BigCount> for WeightSequence {
    fn from_iter<I: IntoIterator<Item = BigCount>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Dense polynomial in the formal variable `t` with exact integer
/// coefficients. Trailing zero coefficients are trimmed; the zero
/// polynomial keeps a single zero entry so that degree = length - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientPolynomial {
    coeffs: Vec<BigCount>,
}

impl CoefficientPolynomial {
    pub fn one() -> Self {
        Self {
            coeffs: vec![BigCount::one()],
        }
    }

    pub fn from_coefficients(coeffs: Vec<BigCount>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`, zero beyond the degree.
    pub fn coefficient(&self, n: usize) -> BigCount {
        self.coeffs.get(n).cloned().unwrap_or_else(BigCount::zero)
    }

    pub fn coefficients(&self) -> &[BigCount] {
        &self.coeffs
    }

    /// Multiply in place by `(1 + a t)`.
    fn mul_linear(&mut self, a: &BigCount) {
        if a.is_zero() {
            return;
        }
        self.coeffs.push(BigCount::zero());
        for i in (1..self.coeffs.len()).rev() {
            let carry = &self.coeffs[i - 1] * a;
            self.coeffs[i] += carry;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(BigCount::zero());
        }
    }
}

/// Expand `prod_{j} (1 + a_j t)`. The coefficient of `t^n` is the
/// elementary symmetric polynomial `e_n` of the weights.
pub fn product_linear_factors(alpha: &WeightSequence) -> CoefficientPolynomial {
    let mut poly = CoefficientPolynomial::one();
    for a in alpha.iter() {
        poly.mul_linear(a);
    }
    poly
}

/// Urn counts `(x_0(k), ..., x_{n_max}(k))` where `x_n(k)` is `n!` times
/// the coefficient of `t^n` in `prod_{j=0}^{k} (1 + C(k,j) t)`: the number
/// of ways to fill `n` labelled urns with subsets of `k` colors so that
/// all urns hold distinct numbers of colors. Entries with `n > k + 1`
/// are 0.
pub fn urn_counts(k: u64, n_max: u64) -> Vec<BigCount> {
    weighted_injective_counts(&WeightSequence::binomial_row(k), n_max)
}

/// Counts `x_n(alpha) = n! * [t^n] prod (1 + a_j t)` for `n` up to
/// `n_max`: the sum of `prod_i a_{f(i)}` over injections `f` from an
/// n-element set into the weight indices.
pub fn weighted_injective_counts(alpha: &WeightSequence, n_max: u64) -> Vec<BigCount> {
    let poly = product_linear_factors(alpha);
    let mut scale = BigCount::one();
    (0..=n_max)
        .map(|n| {
            if n > 1 {
                scale *= BigCount::from(n);
            }
            poly.coefficient(n as usize) * &scale
        })
        .collect()
}

/// Exact log-concavity test: `seq[i]^2 >= seq[i-1] * seq[i+1]` for every
/// interior index, ignoring positions beyond the last nonzero entry.
///
/// Entries must be nonnegative.
pub fn is_log_concave(seq: &[BigCount]) -> Result<bool> {
    if let Some(i) = seq.iter().position(|v| v.is_negative()) {
        return Err(Error::NegativeEntry(i));
    }
    let Some(last) = seq.iter().rposition(|v| !v.is_zero()) else {
        return Ok(true);
    };
    for i in 1..last {
        if &seq[i] * &seq[i] < &seq[i - 1] * &seq[i + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All indices attaining the maximum of the sequence.
pub fn argmax_indices(seq: &[BigCount]) -> Vec<usize> {
    let Some(max) = seq.iter().max() else {
        return Vec::new();
    };
    seq.iter()
        .enumerate()
        .filter(|(_, v)| *v == max)
        .map(|(i, _)| i)
        .collect()
}

/// Darroch's bracket for the mode of the coefficient sequence of
/// `prod (1 + a_j t)` with nonnegative weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeEstimate {
    /// `M = (k+1) - sum_j 1/(1 + a_j)`, exact.
    pub value: BigRational,
    /// `{M}` when `M` is an integer, otherwise `{floor M, ceil M}`.
    pub candidates: Vec<u64>,
}

/// Computes Darroch's mode estimate for a nonnegative weight sequence.
///
/// The mode here is the argmax over `n` of the coefficient
/// `e_n = [t^n] prod (1 + a_j t)`; it lies in the returned candidate set.
/// Exact rational arithmetic avoids any tie ambiguity: when `M` is an
/// exact half-integer both neighbors are returned.
pub fn darroch_mode_estimate(alpha: &WeightSequence) -> Result<ModeEstimate> {
    if let Some(i) = alpha.first_negative() {
        return Err(Error::NegativeEntry(i));
    }
    let terms = BigRational::from_integer(BigInt::from(alpha.len()));
    let correction = alpha
        .iter()
        .fold(BigRational::zero(), |acc, a| {
            acc + BigRational::new(BigInt::one(), a + 1)
        });
    let value = terms - correction;
    let candidates = if value.is_integer() {
        vec![as_u64(&value.to_integer())]
    } else {
        vec![
            as_u64(&value.floor().to_integer()),
            as_u64(&value.ceil().to_integer()),
        ]
    };
    Ok(ModeEstimate { value, candidates })
}

fn as_u64(v: &BigInt) -> u64 {
    u64::try_from(v).expect("mode estimate lies in 0..=k+1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(vals: &[i64]) -> Vec<BigCount> {
        vals.iter().map(|&v| BigCount::from(v)).collect()
    }

    #[test]
    fn empty_product_is_one() {
        let poly = product_linear_factors(&WeightSequence::from_i64(&[]));
        assert_eq!(poly.coefficients(), &counts(&[1])[..]);
        assert_eq!(poly.degree(), 0);
    }

    #[test]
    fn square_of_one_plus_t() {
        let poly = product_linear_factors(&WeightSequence::from_i64(&[1, 1]));
        assert_eq!(poly.coefficients(), &counts(&[1, 2, 1])[..]);
    }

    #[test]
    fn binomial_row_k2_product() {
        let poly = product_linear_factors(&WeightSequence::binomial_row(2));
        assert_eq!(poly.coefficients(), &counts(&[1, 4, 5, 2])[..]);
    }

    #[test]
    fn zero_weights_contribute_identity_factors() {
        let with_zeros = product_linear_factors(&WeightSequence::from_i64(&[0, 1, 0, 1, 0]));
        let without = product_linear_factors(&WeightSequence::from_i64(&[1, 1]));
        assert_eq!(with_zeros, without);
    }

    #[test]
    fn urn_counts_k2_column() {
        assert_eq!(urn_counts(2, 4), counts(&[1, 4, 10, 12, 0]));
    }

    #[test]
    fn urn_counts_k0_column() {
        assert_eq!(urn_counts(0, 2), counts(&[1, 1, 0]));
    }

    #[test]
    fn urn_counts_table_spot_values() {
        assert_eq!(urn_counts(4, 5)[5], BigCount::from(11_520));
        assert_eq!(urn_counts(7, 8)[8], BigCount::from(1_067_311_728_000u64));
    }

    #[test]
    fn urn_counts_vanish_beyond_k_plus_one() {
        for k in 0..=6u64 {
            let xs = urn_counts(k, k + 4);
            assert_eq!(xs[(k + 2) as usize], BigCount::zero());
            assert_eq!(xs[(k + 3) as usize], BigCount::zero());
        }
    }

    #[test]
    fn weighted_counts_injections() {
        let xs = weighted_injective_counts(&WeightSequence::from_i64(&[1, 1, 1]), 2);
        assert_eq!(xs[2], BigCount::from(6));

        let xs = weighted_injective_counts(&WeightSequence::from_i64(&[1, 2, 1]), 3);
        assert_eq!(xs[3], BigCount::from(12));

        let xs = weighted_injective_counts(&WeightSequence::from_i64(&[7]), 2);
        assert_eq!(xs, counts(&[1, 7, 0]));
    }

    #[test]
    fn power_sums() {
        let alpha = WeightSequence::from_i64(&[1, 2]);
        assert_eq!(alpha.power_sum(0), BigCount::from(2));
        assert_eq!(alpha.power_sum(1), BigCount::from(3));
        assert_eq!(alpha.power_sum(2), BigCount::from(5));
    }

    #[test]
    fn log_concavity_examples() {
        let e4 = counts(&[1, 16, 93, 238, 256, 96]);
        assert!(is_log_concave(&e4).unwrap());
        assert!(!is_log_concave(&counts(&[1, 1, 2])).unwrap());
        let chi4 = counts(&[1, 16, 186, 1428, 6144, 11520]);
        assert!(is_log_concave(&chi4).unwrap());
    }

    #[test]
    fn log_concavity_ignores_trailing_zeros() {
        assert!(is_log_concave(&counts(&[1, 4, 10, 12, 0, 0])).unwrap());
        assert!(is_log_concave(&counts(&[0, 0, 0])).unwrap());
        assert!(is_log_concave(&counts(&[])).unwrap());
    }

    #[test]
    fn log_concavity_rejects_negative_entries() {
        assert_eq!(
            is_log_concave(&counts(&[1, -1, 1])),
            Err(Error::NegativeEntry(1))
        );
    }

    #[test]
    fn darroch_symmetric_pair() {
        let est = darroch_mode_estimate(&WeightSequence::from_i64(&[1, 1])).unwrap();
        assert!(est.value.is_integer());
        assert_eq!(est.value, BigRational::from_integer(BigInt::from(1)));
        assert_eq!(est.candidates, vec![1]);
        let poly = product_linear_factors(&WeightSequence::from_i64(&[1, 1]));
        assert_eq!(argmax_indices(poly.coefficients()), vec![1]);
    }

    #[test]
    fn darroch_binomial_row_k4() {
        let alpha = WeightSequence::binomial_row(4);
        let est = darroch_mode_estimate(&alpha).unwrap();
        assert_eq!(
            est.value,
            BigRational::new(BigInt::from(121), BigInt::from(35))
        );
        assert_eq!(est.candidates, vec![3, 4]);
        let poly = product_linear_factors(&alpha);
        assert_eq!(
            poly.coefficients(),
            &counts(&[1, 16, 93, 238, 256, 96])[..]
        );
        assert_eq!(argmax_indices(poly.coefficients()), vec![4]);
    }

    #[test]
    fn darroch_binomial_row_k2() {
        let alpha = WeightSequence::binomial_row(2);
        let est = darroch_mode_estimate(&alpha).unwrap();
        assert_eq!(
            est.value,
            BigRational::new(BigInt::from(5), BigInt::from(3))
        );
        assert_eq!(est.candidates, vec![1, 2]);
        let poly = product_linear_factors(&alpha);
        assert_eq!(argmax_indices(poly.coefficients()), vec![2]);
    }

    #[test]
    fn darroch_rejects_negative_weights() {
        assert_eq!(
            darroch_mode_estimate(&WeightSequence::from_i64(&[1, -2])),
            Err(Error::NegativeEntry(1))
        );
    }

    #[test]
    fn darroch_empty_sequence() {
        let est = darroch_mode_estimate(&WeightSequence::from_i64(&[])).unwrap();
        assert_eq!(est.candidates, vec![0]);
    }

    #[test]
    fn top_count_is_factorial_times_product_of_binomials() {
        for k in 0..=8u64 {
            let xs = urn_counts(k, k + 1);
            let mut expected = factorial(k + 1);
            for j in 0..=k {
                expected *= binomial(k, j as i64);
            }
            assert_eq!(xs[(k + 1) as usize], expected, "k = {k}");
        }
    }

    #[test]
    fn urn_counts_weakly_increase_up_to_k_plus_one() {
        for k in 0..=12u64 {
            let xs = urn_counts(k, k + 1);
            for n in 0..=(k as usize) {
                assert!(xs[n] <= xs[n + 1], "k={k} n={n}");
            }
        }
    }
}
