//! Closed expressions for the associated Stirling numbers, Bernoulli numbers
//! and logarithm. Each function evaluates one side of an identity by its own
//! code path so that callers can compare against the direct computation.

use super::{bernoulli_assoc, partial_bell, Associated, Result, StirlingError};
use crate::comb::{binomial_rat, factorial_rat, falling, gen_binomial};
use crate::fps::Series;
use crate::scalar::{Rat, Scalar};

fn delta(n: usize) -> Scalar {
    if n == 0 {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

fn indices(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(StirlingError::BadIndices { n, k });
    }
    Ok(())
}

fn sign(j: usize) -> Rat {
    if j.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// `p₁^e` for a rational exponent. Non-integer exponents are only
/// representable when `p₁ = 1`.
fn p1_pow(ctx: &Associated, e: &Rat) -> Result<Scalar> {
    match e.to_i64() {
        Some(i) => Ok(ctx.p1().pow(i)?),
        None if ctx.p1().is_one() => Ok(Scalar::one()),
        None => Err(StirlingError::NonRepresentablePower),
    }
}

/// `[p₂/2, p₃/3, …, p_{count+1}/(count+1)]`.
fn shifted_moments(ctx: &Associated, count: usize) -> Result<Vec<Scalar>> {
    ctx.check(count + 1)?;
    Ok((1..=count).map(|m| ctx.moment(m + 1).mul_rat(&Rat::new(1, m as i64 + 1).unwrap())).collect())
}

/// `C(n−1, k−1)·B^{(n)}_{n−k, f̄}`.
pub fn s1_via_bernoulli(ctx: &Associated, n: usize, k: usize) -> Result<Scalar> {
    indices(n, k)?;
    if k == 0 {
        return Ok(delta(n));
    }
    ctx.check(n)?;
    let fam = bernoulli_assoc(ctx.fbar(), &Rat::from(n as i64), n - k, false)?;
    Ok(fam.values[n - k].mul_rat(&binomial_rat(n as i64 - 1, k as i64 - 1)))
}

/// `B_{n,k}(S₁(1,1;f), …, S₁(n−k+1,1;f))`, the arguments read off
/// `f(log(1+t))`.
pub fn s1_via_partial_bell(ctx: &Associated, n: usize, k: usize) -> Result<Scalar> {
    indices(n, k)?;
    ctx.check(n)?;
    let log = ctx.log();
    let xs: Vec<Scalar> = (1..=n - k + 1).map(|m| log.egf().coeff(m)).collect();
    partial_bell(n, k, &xs)
}

/// `B_{n,k}(B^{(1)}_{0,f̄}, B^{(2)}_{1,f̄}, …, B^{(n−k+1)}_{n−k,f̄})`.
pub fn s1_via_bell_of_bernoulli(ctx: &Associated, n: usize, k: usize) -> Result<Scalar> {
    indices(n, k)?;
    if k == 0 {
        return Ok(delta(n));
    }
    ctx.check(n)?;
    let xs = (1..=n - k + 1)
        .map(|m| {
            let fam = bernoulli_assoc(ctx.fbar(), &Rat::from(m as i64), m - 1, false)?;
            Ok(fam.values[m - 1].clone())
        })
        .collect::<Result<Vec<_>>>()?;
    partial_bell(n, k, &xs)
}

/// Left side of the moment lemma: `B_{n,k}(p₂/2, p₃/3, …, p_{n−k+2}/(n−k+2))`
/// with `e^{f̄} = Σ p_n t^n/n!`.
pub fn lemma_bell_moments(ctx: &Associated, n: usize, k: usize) -> Result<Scalar> {
    indices(n, k)?;
    if k == 0 {
        return Ok(delta(n));
    }
    let xs = shifted_moments(ctx, n - k + 1)?;
    partial_bell(n, k, &xs)
}

/// Right side of the moment lemma:
/// `Σ_{j=0}^{k} C(n+k, k−j)·n!/(n+k)!·(−p₁)^{k−j}·S₂(n+j, j; f)`.
pub fn lemma_bell_moments_rhs(ctx: &Associated, n: usize, k: usize) -> Result<Scalar> {
    indices(n, k)?;
    ctx.check(n + k)?;
    let s2 = ctx.s2();
    let ratio = factorial_rat(n).checked_div(&factorial_rat(n + k))?;
    let neg_p1 = -ctx.p1();
    (0..=k).try_fold(Scalar::zero(), |acc, j| {
        let w = binomial_rat((n + k) as i64, (k - j) as i64) * &ratio;
        let term = (&neg_p1.pow((k - j) as i64)? * &s2.get(n + j, j)).mul_rat(&w);
        Ok(&acc + &term)
    })
}

/// `Σ_{k=0}^{n} (−α)_k·p₁^{−α−k}·B_{n,k}(p₂/2, p₃/3, …)`, which equals
/// `B^{(α)}_{n,f̄}`.
pub fn lemma_bernoulli_bell(ctx: &Associated, alpha: &Rat, n: usize) -> Result<Scalar> {
    let xs = shifted_moments(ctx, n.max(1))?;
    let neg = -alpha;
    (0..=n).try_fold(Scalar::zero(), |acc, k| {
        let e = &neg - &Rat::from(k as i64);
        let bell = partial_bell(n, k, &xs)?;
        let term = (&p1_pow(ctx, &e)? * &bell).mul_rat(&falling(&neg, k));
        Ok(&acc + &term)
    })
}

/// Double sum for `B^{(α)}_{n,f̄}`:
/// `Σ_{k=0}^{n} Σ_{j=0}^{k} C(α+k−1, k)·C(k, j)·C(n+j, j)^{−1}·(−1)^j·p₁^{−α−j}·S₂(n+j, j; f)`.
pub fn bernoulli_via_s2(ctx: &Associated, alpha: &Rat, n: usize) -> Result<Scalar> {
    ctx.check(2 * n)?;
    let s2 = ctx.s2();
    let neg = -alpha;
    // inner sums do not depend on k except through C(k, j); precompute the
    // j-dependent factor once
    let per_j = (0..=n)
        .map(|j| {
            let e = &neg - &Rat::from(j as i64);
            let w = sign(j) * binomial_rat((n + j) as i64, j as i64).recip()?;
            Ok((&p1_pow(ctx, &e)? * &s2.get(n + j, j)).mul_rat(&w))
        })
        .collect::<Result<Vec<Scalar>>>()?;
    let mut acc = Scalar::zero();
    for k in 0..=n {
        let outer = gen_binomial(&(alpha + &Rat::from(k as i64 - 1)), k);
        if outer.is_zero() {
            continue;
        }
        for (j, pj) in per_j.iter().enumerate().take(k + 1) {
            let w = &outer * &binomial_rat(k as i64, j as i64);
            acc = &acc + &pj.mul_rat(&w);
        }
    }
    Ok(acc)
}

/// Single sum for `B_{n,f̄}` (order 1):
/// `Σ_{j=0}^{n} C(n+1, j+1)·C(n+j, j)^{−1}·(−1)^j·p₁^{−1−j}·S₂(n+j, j; f)`.
pub fn bernoulli_via_s2_single(ctx: &Associated, n: usize) -> Result<Scalar> {
    ctx.check(2 * n)?;
    let s2 = ctx.s2();
    (0..=n).try_fold(Scalar::zero(), |acc, j| {
        let w = sign(j) * binomial_rat(n as i64 + 1, j as i64 + 1) * binomial_rat((n + j) as i64, j as i64).recip()?;
        let term = (&ctx.p1().pow(-1 - j as i64)? * &s2.get(n + j, j)).mul_rat(&w);
        Ok(&acc + &term)
    })
}

/// Schlömilch-type formula:
/// `S₁(n,k; f) = Σ_{j=0}^{n−k} C(n+j−1, n+j−k)·C(2n−k, n−k−j)·(−1)^j·p₁^{−n−j}·S₂(n−k+j, j; f)`.
pub fn schloemilch_s1(ctx: &Associated, n: usize, k: usize) -> Result<Scalar> {
    indices(n, k)?;
    let m = n - k;
    ctx.check(2 * m)?;
    let s2 = ctx.s2();
    let (n_, k_) = (n as i64, k as i64);
    (0..=m).try_fold(Scalar::zero(), |acc, j| {
        let j_ = j as i64;
        let w = sign(j) * binomial_rat(n_ + j_ - 1, n_ + j_ - k_) * binomial_rat(2 * n_ - k_, n_ - k_ - j_);
        if w.is_zero() {
            return Ok(acc);
        }
        let term = (&ctx.p1().pow(-n_ - j_)? * &s2.get(m + j, j)).mul_rat(&w);
        Ok(&acc + &term)
    })
}

/// The associated logarithm to the given order from second-kind numbers
/// alone: EGF coefficient `n ≥ 1` is
/// `Σ_{j=0}^{n−1} C(2n−1, n−1−j)·(−1)^j·p₁^{−n−j}·S₂(n−1+j, j; f)`.
pub fn assoc_log_expansion(ctx: &Associated, order: usize) -> Result<Series> {
    ctx.check((2 * order).saturating_sub(2))?;
    let s2 = ctx.s2();
    let mut values = vec![Scalar::zero()];
    for n in 1..=order as i64 {
        let v = (0..n).try_fold(Scalar::zero(), |acc, j| -> Result<Scalar> {
            let w = sign(j as usize) * binomial_rat(2 * n - 1, n - 1 - j);
            let term = (&ctx.p1().pow(-n - j)? * &s2.get((n - 1 + j) as usize, j as usize)).mul_rat(&w);
            Ok(&acc + &term)
        })?;
        values.push(v);
    }
    Ok(Series::from_egf(values, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::DeltaSeries;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rat(n, d)
    }

    fn ctx_t(n: usize) -> Associated {
        Associated::new(&DeltaSeries::identity(n), n).unwrap()
    }

    /// `1 − e^{−t}`, whose S₂ are the Lah numbers.
    fn ctx_rising(n: usize) -> Associated {
        let e = Series::exp_linear(&Scalar::int(-1), n).neg().add_constant(&Scalar::one());
        Associated::new(&DeltaSeries::new(e).unwrap(), n).unwrap()
    }

    #[test]
    fn first_kind_from_bernoulli() {
        let c = ctx_t(6);
        assert_eq!(s1_via_bernoulli(&c, 3, 2).unwrap(), q(-3, 1));
        assert_eq!(s1_via_bernoulli(&c, 4, 1).unwrap(), q(-6, 1));
        assert_eq!(s1_via_bernoulli(&c, 0, 0).unwrap(), q(1, 1));
        assert_eq!(s1_via_bell_of_bernoulli(&c, 4, 2).unwrap(), q(11, 1));
        assert_eq!(s1_via_partial_bell(&c, 4, 2).unwrap(), q(11, 1));
    }

    #[test]
    fn schloemilch_examples() {
        assert_eq!(schloemilch_s1(&ctx_t(8), 4, 2).unwrap(), q(11, 1));
        assert_eq!(schloemilch_s1(&ctx_rising(8), 3, 1).unwrap(), q(6, 1));
        assert_eq!(schloemilch_s1(&ctx_t(8), 5, 5).unwrap(), q(1, 1));
        assert_eq!(schloemilch_s1(&ctx_t(8), 0, 0).unwrap(), q(1, 1));
        assert_eq!(schloemilch_s1(&ctx_t(8), 3, 0).unwrap(), q(0, 1));
    }

    #[test]
    fn moment_lemma_examples() {
        // f = t: p_n = 1, so B_{1,1}(p₂/2) = 1/2.
        let c = ctx_t(6);
        assert_eq!(lemma_bell_moments(&c, 1, 1).unwrap(), q(1, 2));
        assert_eq!(lemma_bell_moments_rhs(&c, 1, 1).unwrap(), q(1, 2));
        // f = 1 − e^{−t}: p_n = n!, B_{2,1}(p₂/2, p₃/3) = p₃/3 = 2.
        let r = ctx_rising(6);
        assert_eq!(lemma_bell_moments(&r, 2, 1).unwrap(), q(2, 1));
        assert_eq!(lemma_bell_moments_rhs(&r, 2, 1).unwrap(), q(2, 1));
        assert_eq!(lemma_bell_moments(&c, 3, 0).unwrap(), q(0, 1));
    }

    #[test]
    fn bernoulli_sums() {
        let c = ctx_t(8);
        assert_eq!(bernoulli_via_s2(&c, &Rat::one(), 2).unwrap(), q(1, 6));
        assert_eq!(bernoulli_via_s2_single(&c, 2).unwrap(), q(1, 6));
        assert_eq!(bernoulli_via_s2(&c, &Rat::from(2), 1).unwrap(), q(-1, 1));
        assert_eq!(lemma_bernoulli_bell(&c, &Rat::from(2), 1).unwrap(), q(-1, 1));
        assert_eq!(bernoulli_via_s2(&c, &Rat::from(3), 0).unwrap(), q(1, 1));
    }

    #[test]
    fn non_representable_power() {
        // f = 2t: f̄′(0) = 1/2
        let f = DeltaSeries::new(Series::linear(Scalar::int(2), 6)).unwrap();
        let c = Associated::new(&f, 6).unwrap();
        let half = Rat::new(1, 2).unwrap();
        assert_eq!(bernoulli_via_s2(&c, &half, 1), Err(StirlingError::NonRepresentablePower));
        assert_eq!(bernoulli_via_s2(&c, &Rat::one(), 0).unwrap(), q(2, 1));
    }

    #[test]
    fn log_expansion_for_identity() {
        let c = ctx_t(12);
        assert_eq!(assoc_log_expansion(&c, 7).unwrap(), Series::log1p(7));
        assert!(assoc_log_expansion(&c, 8).is_err());
    }
}
