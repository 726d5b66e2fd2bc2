//! Integer and rational combinatorial coefficients.

use num_bigint::BigInt;
use num_traits::One;

use crate::scalar::Rat;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn factorial_rat(n: usize) -> Rat {
    Rat::from_int(factorial(n))
}

/// `C(n, k)` for integer arguments.
///
/// Zero when `k < 0`, or when `0 ≤ n < k`. For `n < 0` the usual extension
/// `C(n, k) = (−1)^k C(k−n−1, k)` applies. The `(−1, −1)` corner returns 1 so
/// that `C(n−1, k−1)` at `n = k = 0` is 1.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n == -1 && k == -1 {
        return BigInt::one();
    }
    if k < 0 {
        return BigInt::from(0);
    }
    if n < 0 {
        let v = binomial(k - n - 1, k);
        return if k % 2 == 0 { v } else { -v };
    }
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_rat(n: i64, k: i64) -> Rat {
    Rat::from_int(binomial(n, k))
}

/// Falling factorial `(a)_k = a(a−1)…(a−k+1)` with a rational base.
pub fn falling(a: &Rat, k: usize) -> Rat {
    (0..k).fold(Rat::one(), |acc, i| acc * (a - &Rat::from(i as i64)))
}

/// Generalized binomial `C(a, k) = (a)_k / k!` with a rational upper
/// argument, built from the falling-factorial product.
pub fn gen_binomial(a: &Rat, k: usize) -> Rat {
    falling(a, k).checked_div(&factorial_rat(k)).expect("factorial is nonzero")
}

/// Multinomial coefficient `m! / (j_1! j_2! …)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let m: usize = parts.iter().sum();
    parts.iter().fold(factorial(m), |acc, &j| acc / factorial(j))
}
