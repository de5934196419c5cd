//! Exact big-integer combinatorial primitives shared by every counting
//! path: binomials, factorials, Gaussian binomials, and the extended
//! Franel sums.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::{Error, Result};

/// An exact integer count. Every counting path in this crate stays in
/// arbitrary precision; nothing ever rounds.
pub type BigCount = BigInt;

/// Binomial coefficient `C(n, j)`.
///
/// Out-of-range `j` (negative or above `n`) gives 0, so summation loops
/// may run over uniform index ranges.
pub fn binomial(n: u64, j: i64) -> BigCount {
    if j < 0 || j as u64 > n {
        return BigCount::zero();
    }
    let j = (j as u64).min(n - j as u64);
    let mut acc = BigCount::one();
    for i in 1..=j {
        // Exact at every step: the partial product is C(n-j+i, i).
        acc = acc * BigCount::from(n - j + i) / BigCount::from(i);
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigCount {
    let mut acc = BigCount::one();
    for i in 2..=n {
        acc *= BigCount::from(i);
    }
    acc
}

/// Gaussian binomial `[k choose j]_q`: the number of `j`-dimensional
/// subspaces of a `k`-dimensional vector space over the field with `q`
/// elements.
///
/// Out-of-range `j` gives 0. Only integer `q >= 2` is supported; formal
/// `q` is out of scope.
pub fn gaussian_binomial(k: u64, j: i64, q: u64) -> Result<BigCount> {
    if q < 2 {
        return Err(Error::FieldOrder(q));
    }
    if j < 0 || j as u64 > k {
        return Ok(BigCount::zero());
    }
    let j = (j as u64).min(k - j as u64);
    let q = BigCount::from(q);
    // [k choose j]_q = prod_{i=1..j} (q^{k-j+i} - 1) / (q^i - 1), an
    // integer, so a single division of the full products is exact.
    let mut numerator = BigCount::one();
    let mut denominator = BigCount::one();
    for i in 1..=j {
        numerator *= (&q).pow(k - j + i) - 1;
        denominator *= (&q).pow(i) - 1;
    }
    debug_assert!((&numerator % &denominator).is_zero());
    Ok(numerator / denominator)
}

/// Extended Franel number `Fr(k, r) = sum_{j=0}^{k} C(k,j)^r`.
///
/// `r = 0` counts the terms, `r = 1` gives `2^k`, `r = 2` gives
/// `C(2k, k)`, and `r = 3` gives the classical Franel numbers.
pub fn franel(k: u64, r: u64) -> BigCount {
    let mut total = BigCount::zero();
    for j in 0..=k {
        total += binomial(k, j as i64).pow(r);
    }
    total
}
