//! Coefficient extraction through Lagrange inversion. These routes never
//! build the inverse series, so they serve as independent checks on
//! [`DeltaSeries::invert_newton`].

use super::{DeltaSeries, FpsError, Series};
use crate::scalar::{Rat, Scalar};

/// `(t/f(t))^n`, at order `N − 1`.
fn t_over_f_pow(f: &DeltaSeries, n: usize) -> Result<Series, FpsError> {
    let f_over_t = f.series().shift_down(1)?;
    f_over_t.recip()?.pow_int(n as i64)
}

fn check_range(n: usize, order: usize) -> Result<(), FpsError> {
    if n < 1 || n > order {
        return Err(FpsError::IndexOutOfOrder { index: n, order });
    }
    Ok(())
}

/// `[t^n] f̄(t) = (1/n)·[t^{n−1}] (t/f(t))^n`.
pub fn lagrange_coeff_inverse(f: &DeltaSeries, n: usize) -> Result<Scalar, FpsError> {
    check_range(n, f.order())?;
    let p = t_over_f_pow(f, n)?;
    Ok(p.coeff(n - 1).mul_rat(&Rat::new(1, n as i64).unwrap()))
}

/// `[t^n] f̄(t)^k = (k/n)·[t^{n−k}] (t/f(t))^n`.
pub fn lagrange_coeff_power(f: &DeltaSeries, k: usize, n: usize) -> Result<Scalar, FpsError> {
    check_range(n, f.order())?;
    if k < 1 || k > n {
        return Err(FpsError::IndexOutOfOrder { index: k, order: n });
    }
    let p = t_over_f_pow(f, n)?;
    Ok(p.coeff(n - k).mul_rat(&Rat::new(k as i64, n as i64).unwrap()))
}

/// `[t^n] g(f̄(t)) = (1/n)·[t^{n−1}] g′(t)·(t/f(t))^n`.
pub fn lagrange_coeff_general(g: &Series, f: &DeltaSeries, n: usize) -> Result<Scalar, FpsError> {
    check_range(n, f.order())?;
    if g.order() != f.order() {
        return Err(FpsError::OrderMismatch(g.order(), f.order()));
    }
    let p = t_over_f_pow(f, n)?;
    let dg = g.derivative();
    let c: Scalar = (0..n).map(|i| dg.coeff(i) * p.coeff(n - 1 - i)).sum();
    Ok(c.mul_rat(&Rat::new(1, n as i64).unwrap()))
}
