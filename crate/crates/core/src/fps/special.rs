//! Closed-form expansions of the classical and degenerate elementary
//! functions. `lam` may be the symbol λ or any concrete scalar, including 0;
//! none of these builders divide by λ.

use super::{FpsError, Series};
use crate::comb::factorial_rat;
use crate::scalar::{Rat, Scalar};

/// `log(1 + λt)/λ = Σ_{n≥1} (−1)^{n−1} λ^{n−1} t^n / n`.
pub fn log1p_scaled(lam: &Scalar, order: usize) -> Series {
    let mut coeffs = vec![Scalar::zero()];
    let mut pow = Scalar::one();
    for n in 1..=order {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        coeffs.push(pow.mul_rat(&Rat::new(sign, n as i64).unwrap()));
        pow = &pow * lam;
    }
    Series::new(coeffs, order)
}

/// `(e^{λt} − 1)/λ = Σ_{n≥1} λ^{n−1} t^n / n!`.
pub fn expm1_scaled(lam: &Scalar, order: usize) -> Series {
    let mut coeffs = vec![Scalar::zero()];
    let mut pow = Scalar::one();
    for n in 1..=order {
        coeffs.push(pow.mul_rat(&factorial_rat(n).recip().unwrap()));
        pow = &pow * lam;
    }
    Series::new(coeffs, order)
}

/// Degenerate exponential `e_λ^x(t) = (1 + λt)^{x/λ}`.
pub fn deg_exp(x: &Scalar, lam: &Scalar, order: usize) -> Series {
    log1p_scaled(lam, order).scale(x).exp().expect("zero constant term")
}

/// Degenerate logarithm `log_λ(1 + t) = Σ_{n≥1} (λ − 1)_{n−1} t^n / n!`.
pub fn deg_log1p(lam: &Scalar, order: usize) -> Series {
    let mut coeffs = vec![Scalar::zero()];
    let lm1 = lam - &Scalar::one();
    let mut falling = Scalar::one();
    for n in 1..=order {
        coeffs.push(falling.mul_rat(&factorial_rat(n).recip().unwrap()));
        // (λ−1)_n = (λ−1)_{n−1} · (λ − n)
        falling = &falling * &(&lm1 - &Scalar::int(n as i64 - 1));
    }
    Series::new(coeffs, order)
}

/// `(e^{λ y} − 1)/λ = Σ_{m≥1} λ^{m−1} y^m / m!` for `y` with zero constant
/// term.
pub fn expm1_scaled_of(y: &Series, lam: &Scalar) -> Result<Series, FpsError> {
    if !y.constant_term().is_zero() {
        return Err(FpsError::BadConstantTerm("argument needs constant term 0"));
    }
    let order = y.order();
    let mut acc = Series::zero(order).with_ring(y.ring());
    let mut power = y.clone();
    let mut lam_pow = Scalar::one();
    for m in 1..=order {
        if power.is_zero() {
            break;
        }
        let c = lam_pow.mul_rat(&factorial_rat(m).recip().unwrap());
        acc = acc.add(&power.scale(&c))?;
        power = power.mul(y)?;
        lam_pow = &lam_pow * lam;
    }
    Ok(acc)
}

/// `log_λ(1 + s) = ((1 + s)^λ − 1)/λ` for `s` with zero constant term.
pub fn deg_log_of(s: &Series, lam: &Scalar) -> Result<Series, FpsError> {
    let log = s.add_constant(&Scalar::one()).log()?;
    expm1_scaled_of(&log, lam)
}
