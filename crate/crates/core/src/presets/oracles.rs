//! Closed forms for the Stirling triangles and logarithms of each preset.
//! They use classical and degenerate triangles from their recurrences, Lah
//! numbers from their product formula, and direct powers of generating
//! functions. None of them go through the associated-Stirling code.

use super::build::{central_log, over_shift};
use super::{make_preset, Family, LambdaMode, MomentKind, Preset, PresetError, Result};
use crate::comb::factorial_rat;
use crate::fps::special::{deg_exp, deg_log1p, deg_log_of, expm1_scaled_of};
use crate::fps::Series;
use crate::scalar::{Rat, Scalar};
use crate::stirling::classical::{lah, lah_lambda, s1, s1_lambda, s2, s2_lambda};
use crate::stirling::{Triangle, TriangleKind};

use super::moments::uniform_log_coeff;

/// `n!/k!·[tⁿ] u^k` by repeated multiplication.
fn egf_powers(u: &Series, max_n: usize, kind: TriangleKind) -> Result<Triangle> {
    let u = u.truncate(max_n);
    let mut power = Series::one(max_n);
    let mut cols = Vec::with_capacity(max_n + 1);
    for k in 0..=max_n {
        if k > 0 {
            power = power.mul(&u)?;
        }
        cols.push(power.egf().to_vec());
    }
    let inv_fact: Vec<Rat> = (0..=max_n).map(|k| factorial_rat(k).recip().unwrap()).collect();
    Ok(Triangle::from_fn(kind, "oracle", max_n, |n, k| cols[k][n].mul_rat(&inv_fact[k])))
}

/// `Σ_{l=k}^{n} a(n,l)·b(l,k)`.
fn product(max_n: usize, a: impl Fn(usize, usize) -> Scalar, b: impl Fn(usize, usize) -> Scalar) -> Triangle {
    Triangle::from_fn(TriangleKind::Other("oracle".into()), "oracle", max_n, |n, k| {
        (k..=n).map(|l| &a(n, l) * &b(l, k)).sum()
    })
}

fn sign(e: usize) -> Scalar {
    if e.is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::int(-1)
    }
}

fn ell(order: usize) -> Series {
    Series::log1p(order)
}

/// Central factorial numbers of the first kind, `(2 log X)^k/k!` with
/// `X = (t + √(t² + 4))/2`.
pub fn central_t1(max_n: usize) -> Result<Triangle> {
    egf_powers(&central_log(&Series::t(max_n))?, max_n, TriangleKind::T1)
}

/// Central factorial numbers of the second kind, `(e^{t/2} − e^{−t/2})^k/k!`.
pub fn central_t2(max_n: usize) -> Result<Triangle> {
    let h = Scalar::rat(1, 2);
    let u = Series::exp_linear(&h, max_n).sub(&Series::exp_linear(&-&h, max_n))?;
    egf_powers(&u, max_n, TriangleKind::T2)
}

/// `T₁,λ` from `log_λ(X²)`, `X = (t + √(t² + 4))/2`.
pub fn central_t1_lambda(lam: &Scalar, max_n: usize) -> Result<Triangle> {
    egf_powers(&expm1_scaled_of(&central_log(&Series::t(max_n))?, lam)?, max_n, TriangleKind::T1)
}

/// `T₂,λ` from `e_λ^{1/2}(t) − e_λ^{−1/2}(t)`.
pub fn central_t2_lambda(lam: &Scalar, max_n: usize) -> Result<Triangle> {
    let h = Scalar::rat(1, 2);
    let u = deg_exp(&h, lam, max_n).sub(&deg_exp(&-&h, lam, max_n))?;
    egf_powers(&u, max_n, TriangleKind::T2)
}

fn no_oracle(p: &Preset, what: &'static str) -> PresetError {
    PresetError::NoOracle { id: p.id(), what }
}

impl Preset {
    /// `S₂(n, k; f)` for `n ≤ max_n` from the family's closed form.
    pub fn oracle_s2(&self, max_n: usize) -> Result<Triangle> {
        let lam = self.lam();
        let tri = match self.family() {
            Family::Identity => s2(max_n),
            Family::DegFalling => s2_lambda(&lam, max_n),
            Family::Rising => lah(max_n),
            // L_λ
            Family::DegRising => lah_lambda(&lam, max_n),
            Family::Central => {
                let (t1, st) = (central_t1(max_n)?, s2(max_n));
                product(max_n, |n, l| t1.get(n, l), |l, k| st.get(l, k))
            }
            Family::CentralBell => {
                let (t2, st) = (central_t2(max_n)?, s2(max_n));
                product(max_n, |n, l| t2.get(n, l), |l, k| st.get(l, k))
            }
            Family::DegCentralBell => {
                let (t2, st) = (central_t2_lambda(&lam, max_n)?, s2(max_n));
                product(max_n, |n, l| t2.get(n, l), |l, k| st.get(l, k))
            }
            Family::LahBell => {
                let (l_, st) = (lah(max_n), s2(max_n));
                product(max_n, |n, l| l_.get(n, l), |l, k| st.get(l, k))
            }
            Family::DegLahBell => {
                let (l_, lm) = (lah(max_n), lah_lambda(&-&lam, max_n));
                product(max_n, |n, l| l_.get(n, l), |l, k| lm.get(l, k))
            }
            Family::Bell => {
                let st = s2(max_n);
                product(max_n, |n, l| st.get(n, l), |l, k| st.get(l, k))
            }
            Family::PartialDegBell => {
                let (sl, st) = (s2_lambda(&lam, max_n), s2(max_n));
                product(max_n, |n, l| sl.get(n, l), |l, k| st.get(l, k))
            }
            Family::FullDegBell => {
                let (sl, lm) = (s2_lambda(&lam, max_n), lah_lambda(&-&lam, max_n));
                product(max_n, |n, m| sl.get(n, m), |m, k| lm.get(m, k))
            }
            Family::MittagLeffler => {
                let l_ = lah(max_n);
                Triangle::from_fn(TriangleKind::Other("oracle".into()), "oracle", max_n, |n, k| {
                    l_.get(n, k).mul_rat(&Rat::from(2).pow(k as i64).unwrap())
                })
            }
            Family::LaguerreM1 => {
                let (l_, st) = (lah(max_n), s2(max_n));
                product(max_n, |n, l| &sign(l) * &l_.get(n, l), |l, k| st.get(l, k))
            }
            // (E[e_λ^Y(t)] − 1)^k/k!
            Family::Probabilistic(_) => {
                let m = self.moments().expect("probabilistic presets carry moments");
                egf_powers(&m.egf_minus_one(max_n), max_n, TriangleKind::S2Assoc)?
            }
        };
        Ok(relabel(tri, TriangleKind::S2Assoc, self))
    }

    /// `S₁(n, k; f)` for `n ≤ max_n` from the family's closed form.
    pub fn oracle_s1(&self, max_n: usize) -> Result<Triangle> {
        let lam = self.lam();
        let tri = match self.family() {
            Family::Identity => s1(max_n),
            Family::DegFalling => s1_lambda(&lam, max_n),
            Family::Rising => {
                let l_ = lah(max_n);
                Triangle::from_fn(TriangleKind::Other("oracle".into()), "oracle", max_n, |n, k| {
                    &sign(n - k) * &l_.get(n, k)
                })
            }
            // (−λ)^{n−k} L_{1/λ}(n, k); at λ = 0 only S₁,−λ makes sense
            Family::DegRising if lam.is_zero() => s1_lambda(&lam, max_n),
            Family::DegRising => {
                let inv = lam.recip()?;
                let l_inv = lah_lambda(&inv, max_n);
                let neg = -&lam;
                Triangle::from_fn(TriangleKind::Other("oracle".into()), "oracle", max_n, |n, k| {
                    &neg.pow((n - k) as i64).unwrap() * &l_inv.get(n, k)
                })
            }
            Family::Central => {
                let (s, t2) = (s1(max_n), central_t2(max_n)?);
                product(max_n, |n, l| s.get(n, l), |l, k| t2.get(l, k))
            }
            Family::CentralBell => {
                let (s, t1) = (s1(max_n), central_t1(max_n)?);
                product(max_n, |n, l| s.get(n, l), |l, k| t1.get(l, k))
            }
            Family::DegCentralBell => {
                let (s, t1) = (s1(max_n), central_t1_lambda(&lam, max_n)?);
                product(max_n, |n, l| s.get(n, l), |l, k| t1.get(l, k))
            }
            Family::LahBell => {
                let (s, l_) = (s1(max_n), lah(max_n));
                product(max_n, |n, l| s.get(n, l), |l, k| &sign(l - k) * &l_.get(l, k))
            }
            Family::DegLahBell => {
                let (s, l_) = (s1_lambda(&lam, max_n), lah(max_n));
                product(max_n, |n, l| s.get(n, l), |l, k| &sign(l - k) * &l_.get(l, k))
            }
            Family::Bell => {
                let s = s1(max_n);
                product(max_n, |n, l| s.get(n, l), |l, k| s.get(l, k))
            }
            Family::PartialDegBell => {
                let (s, sl) = (s1(max_n), s1_lambda(&lam, max_n));
                product(max_n, |n, l| s.get(n, l), |l, k| sl.get(l, k))
            }
            Family::FullDegBell => {
                let sl = s1_lambda(&lam, max_n);
                product(max_n, |n, l| sl.get(n, l), |l, k| sl.get(l, k))
            }
            Family::MittagLeffler => {
                let l_ = lah(max_n);
                Triangle::from_fn(TriangleKind::Other("oracle".into()), "oracle", max_n, |n, k| {
                    (&sign(n - k) * &l_.get(n, k)).mul_rat(&Rat::from(2).pow(-(n as i64)).unwrap())
                })
            }
            Family::LaguerreM1 => {
                let (s, l_) = (s1(max_n), lah(max_n));
                let sum = product(max_n, |n, l| s.get(n, l), |l, k| l_.get(l, k));
                Triangle::from_fn(TriangleKind::Other("oracle".into()), "oracle", max_n, |n, k| {
                    &sign(k) * &sum.get(n, k)
                })
            }
            // powers of the closed-form logarithm
            Family::Probabilistic(_) => egf_powers(&self.oracle_log(max_n)?, max_n, TriangleKind::S1Assoc)?,
        };
        Ok(relabel(tri, TriangleKind::S1Assoc, self))
    }

    /// The associated logarithm `log_f(1 + t)` in closed form.
    pub fn oracle_log(&self, order: usize) -> Result<Series> {
        let lam = self.lam();
        let l = ell(order);
        let t = Series::t(order);
        Ok(match self.family() {
            Family::Identity => l,
            Family::DegFalling => deg_log1p(&lam, order),
            Family::Rising => over_shift(&t, 1)?,
            Family::DegRising => deg_log1p(&-&lam, order),
            // (1 + t)^{1/2} − (1 + t)^{−1/2}
            Family::Central => {
                let one_t = t.add_constant(&Scalar::one());
                one_t.pow_ratio(&Rat::new(1, 2)?)?.sub(&one_t.pow_ratio(&Rat::new(-1, 2)?)?)?
            }
            Family::CentralBell => central_log(&l)?,
            Family::DegCentralBell => expm1_scaled_of(&central_log(&l)?, &lam)?,
            Family::LahBell => over_shift(&l, 1)?,
            Family::DegLahBell => over_shift(&deg_log1p(&lam, order), 1)?,
            Family::Bell => l.add_constant(&Scalar::one()).log()?,
            Family::PartialDegBell => deg_log_of(&l, &lam)?,
            Family::FullDegBell => deg_log_of(&deg_log1p(&lam, order), &lam)?,
            Family::MittagLeffler => over_shift(&t, 2)?,
            // −ℓ/(1 − ℓ)
            Family::LaguerreM1 => over_shift(&l, -1)?,
            Family::Probabilistic(kind) => match kind {
                MomentKind::Uniform => {
                    let values = (0..=order).map(|n| uniform_log_coeff(n, &lam)).collect();
                    Series::from_egf(values, order)
                }
                // s = e_λ^c(t) − 1 inverts to ((1 + s)^{λ/c} − 1)/λ
                MomentKind::Const(c) => expm1_scaled_of(&l.scale_rat(&c.recip()?), &lam)?,
                // s = p(e_λ(t) − 1) inverts to log_λ(1 + s/p)
                MomentKind::Bernoulli(p) => deg_log_of(&t.scale_rat(&p.recip()?), &lam)?,
                MomentKind::Discrete(_) => return Err(no_oracle(self, "logarithm")),
            },
        })
    }
}

fn relabel(tri: Triangle, kind: TriangleKind, p: &Preset) -> Triangle {
    Triangle::from_rows(kind, p.id(), tri.rows().to_vec()).expect("well-formed")
}

/// `S₂(n, k; f)` of preset `id` from its closed form.
pub fn oracle_s2(id: &str, n: usize, k: usize, lambda: LambdaMode) -> Result<Scalar> {
    Ok(make_preset(id, n.max(1), lambda)?.oracle_s2(n)?.get(n, k))
}

/// `S₁(n, k; f)` of preset `id` from its closed form.
pub fn oracle_s1(id: &str, n: usize, k: usize, lambda: LambdaMode) -> Result<Scalar> {
    Ok(make_preset(id, n.max(1), lambda)?.oracle_s1(n)?.get(n, k))
}

/// The associated logarithm of preset `id` from its closed form.
pub fn oracle_log(id: &str, order: usize, lambda: LambdaMode) -> Result<Series> {
    make_preset(id, order, lambda)?.oracle_log(order)
}
