use super::{power_triangle, Result, StirlingError};
use crate::comb::factorial_rat;
use crate::fps::Series;
use crate::scalar::Scalar;

/// `Σ_{m=1}^{len} xs[m−1] t^m/m!` at the given order.
fn egf_of(xs: &[Scalar], order: usize) -> Series {
    let values = std::iter::once(Scalar::zero()).chain(xs.iter().take(order).cloned()).collect();
    Series::from_egf(values, order)
}

/// Partial Bell polynomial `B_{n,k}(x₁, …, x_{n−k+1})`, read off the
/// truncated `k`-th power of `Σ x_m t^m/m!`. `xs[0]` is `x₁`.
pub fn partial_bell(n: usize, k: usize, xs: &[Scalar]) -> Result<Scalar> {
    if k > n {
        return Err(StirlingError::BadIndices { n, k });
    }
    if k == 0 {
        return Ok(if n == 0 { Scalar::one() } else { Scalar::zero() });
    }
    let needed = n - k + 1;
    if xs.len() < needed {
        return Err(StirlingError::ArityTooSmall { needed, got: xs.len() });
    }
    let u = egf_of(&xs[..needed], n);
    let c = u.pow_int(k as i64)?.coeff(n).clone();
    Ok(c.mul_rat(&(factorial_rat(n).checked_div(&factorial_rat(k))?)))
}

/// `B_{n,k}` for all `0 ≤ k ≤ n ≤ max_n` at once; needs `max_n` arguments.
pub fn partial_bell_table(xs: &[Scalar], max_n: usize) -> Result<Vec<Vec<Scalar>>> {
    if xs.len() < max_n {
        return Err(StirlingError::ArityTooSmall { needed: max_n, got: xs.len() });
    }
    power_triangle(&egf_of(xs, max_n), max_n)
}
