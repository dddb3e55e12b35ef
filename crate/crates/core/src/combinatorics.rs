//! Exact integer helpers shared by the closed-form Betti formulas.

/// Binomial coefficient `C(n, k)` with the convention `C(n, k) = 0` whenever
/// `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Kronecker delta.
pub fn delta(a: i64, b: i64) -> i64 {
    i64::from(a == b)
}

/// Exact integer square root when `x` is a perfect square.
pub fn exact_sqrt(x: i128) -> Option<i128> {
    if x < 0 {
        return None;
    }
    let r = (x as u128).isqrt() as i128;
    (r * r == x).then_some(r)
}
