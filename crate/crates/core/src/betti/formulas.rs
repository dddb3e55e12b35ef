use crate::combinatorics::{binomial, delta, exact_sqrt};
use crate::error::{Error, Result};

use super::sweep::BettiVector;

/// `b_k(B_n) = (n-2)(k-1)/(n-2-k) · C(n-4, k) + δ_{k,2}` for `0 <= k <= n-3`.
pub fn bipyramid_b(n: usize, k: usize) -> Result<i64> {
    if n < 5 || k > n - 3 {
        return Err(Error::OutOfRange(format!("bipyramid_b needs n >= 5 and k <= n - 3, got n = {n}, k = {k}")));
    }
    let (n, k) = (n as i64, k as i64);
    let numerator = (n - 2) as i128 * (k - 1) as i128 * binomial(n - 4, k);
    let denominator = (n - 2 - k) as i128;
    assert_eq!(numerator % denominator, 0, "bipyramid formula is not integral at n = {n}, k = {k}");
    Ok((numerator / denominator) as i64 + delta(k, 2))
}

/// `b_k(P_1 # P_2)` from the Betti numbers of the summands glued along a
/// `(d-1)`-simplex.
pub fn connected_sum_b(b1: &BettiVector, n1: usize, b2: &BettiVector, n2: usize, d: usize, k: usize) -> i64 {
    let (n1, n2, d, k) = (n1 as i64, n2 as i64, d as i64, k as i64);
    let mut total: i128 = 0;
    for i in 0..=k {
        total += b1.get(i) as i128 * binomial(n2 - d, k - i);
        total += b2.get(i) as i128 * binomial(n1 - d, k - i);
    }
    total += binomial(n1 + n2 - 2 * d, k);
    total as i64
}

/// The whole vector `b_0..b_{n_1+n_2-d}` of a connected sum.
pub fn connected_sum_vector(b1: &BettiVector, n1: usize, b2: &BettiVector, n2: usize, d: usize) -> BettiVector {
    let n = n1 + n2 - d;
    BettiVector::new((0..=n).map(|k| connected_sum_b(b1, n1, b2, n2, d, k)).collect())
}

/// `b_{n-4}` of an `ℓ`-fold connected sum on `n` vertices, given the summands'
/// own `b_{n_i-4}`.
pub fn multiway_bn4(summand_values: &[i64], n: usize) -> i64 {
    let l = summand_values.len() as i64;
    summand_values.iter().sum::<i64>() + (n as i64 - 3) * (l - 1)
}

/// `f(n) = C(n-3, 2) - 1 + δ_{n,6}`: the maximum of `b_{n-4}` over
/// irreducible spheres.
pub fn bound_f(n: usize) -> Result<i64> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("bound_f needs n >= 4, got {n}")));
    }
    let n = n as i64;
    Ok(binomial(n - 3, 2) as i64 - 1 + delta(n, 6))
}

/// `C(n-5, 2) + 2`: the bound on `b_{n-4}` for irreducible non-bipyramids.
pub fn bound_second(n: usize) -> Result<i64> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("bound_second needs n >= 4, got {n}")));
    }
    Ok(binomial(n as i64 - 5, 2) as i64 + 2)
}

/// `C(n-3, 2) + ℓ(ℓ-3)/2 + δ_{ℓ,n-5}`: the bound on `b_{n-4}` for a sum of
/// `ℓ` irreducible spheres. The bound is a theorem for `ℓ <= n - 4`; at
/// `ℓ = n - 3` (stacked spheres) the expression still equals `b_{n-4}`.
pub fn bound_multi(n: usize, l: usize) -> Result<i64> {
    if n < 4 || l == 0 || l > n - 3 {
        return Err(Error::OutOfRange(format!("bound_multi needs n >= 4 and 1 <= l <= n - 3, got n = {n}, l = {l}")));
    }
    let (n, l) = (n as i64, l as i64);
    Ok(binomial(n - 3, 2) as i64 + l * (l - 3) / 2 + delta(l, n - 5))
}

/// Inverts `b_2 = C(n, 2) - 3n + 6`, i.e. `n = (7 + sqrt(8 b_2 + 1)) / 2`.
pub fn vertices_from_b2(b2: i64) -> Result<usize> {
    let root = exact_sqrt(8 * b2 as i128 + 1).ok_or(Error::NotRealizable(b2))?;
    if (7 + root) % 2 != 0 || (7 + root) / 2 < 4 {
        return Err(Error::NotRealizable(b2));
    }
    Ok(((7 + root) / 2) as usize)
}
