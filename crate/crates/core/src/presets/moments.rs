use std::fmt;
use std::str::FromStr;

use super::{PresetError, Result};
use crate::comb::{binomial_rat, multinomial};
use crate::fps::{DeltaSeries, Series};
use crate::scalar::{Rat, Scalar};
use crate::stirling::XPoly;

/// Distributions whose degenerate moments are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MomentKind {
    /// `Y ~ U[0, 1]`
    Uniform,
    /// `Y ≡ c`
    Const(Rat),
    /// `P(Y = 1) = p`, `P(Y = 0) = 1 − p`
    Bernoulli(Rat),
    /// Finitely many `(value, probability)` atoms.
    Discrete(Vec<(Rat, Rat)>),
}

impl fmt::Display for MomentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentKind::Uniform => f.write_str("uniform"),
            MomentKind::Const(c) => write!(f, "const:{c}"),
            MomentKind::Bernoulli(p) => write!(f, "bernoulli:{p}"),
            MomentKind::Discrete(atoms) => {
                f.write_str("discrete:")?;
                for (i, (y, p)) in atoms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{y}@{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for MomentKind {
    type Err = PresetError;

    /// `uniform`, `const:<c>`, `bernoulli:<p>` or `discrete:<y>@<p>;…`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || PresetError::UnknownPreset(format!("probabilistic:{s}"));
        let rat = |v: &str| v.trim().parse::<Rat>().map_err(|_| bad());
        let (head, arg) = s.split_once(':').unwrap_or((s, ""));
        match head {
            "uniform" if arg.is_empty() => Ok(MomentKind::Uniform),
            "const" => Ok(MomentKind::Const(rat(arg)?)),
            "bernoulli" => Ok(MomentKind::Bernoulli(rat(arg)?)),
            "discrete" => arg
                .split(';')
                .map(|atom| {
                    let (y, p) = atom.split_once('@').ok_or_else(bad)?;
                    Ok((rat(y)?, rat(p)?))
                })
                .collect::<Result<Vec<_>>>()
                .map(MomentKind::Discrete),
            _ => Err(bad()),
        }
    }
}

/// `n ↦ E[(Y)_{n,λ}]` for a fixed distribution and λ (with λ = 0 these are
/// the ordinary moments `E[Yⁿ]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSeq {
    kind: MomentKind,
    lam: Scalar,
}

impl MomentSeq {
    /// Rejects invalid probabilities and a vanishing first moment.
    pub fn new(kind: MomentKind, lam: Scalar) -> Result<Self> {
        let in_unit = |p: &Rat| !p.is_negative() && !(&Rat::one() - p).is_negative();
        match &kind {
            MomentKind::Bernoulli(p) if !in_unit(p) => {
                return Err(PresetError::BadDistribution(format!("p = {p} is not in [0, 1]")))
            }
            MomentKind::Discrete(atoms) => {
                if atoms.iter().any(|(_, p)| p.is_negative()) {
                    return Err(PresetError::BadDistribution("negative probability".into()));
                }
                let total = atoms.iter().fold(Rat::zero(), |acc, (_, p)| &acc + p);
                if !total.is_one() {
                    return Err(PresetError::BadDistribution(format!("probabilities sum to {total}")));
                }
            }
            _ => {}
        }
        let m = MomentSeq { kind, lam };
        if m.moment(1).is_zero() {
            return Err(PresetError::ZeroFirstMoment);
        }
        Ok(m)
    }

    pub fn kind(&self) -> &MomentKind {
        &self.kind
    }

    pub fn lam(&self) -> &Scalar {
        &self.lam
    }

    /// `E[(Y)_{n,λ}]`.
    pub fn moment(&self, n: usize) -> Scalar {
        if n == 0 {
            return Scalar::one();
        }
        let falling = XPoly::falling_with_step(n, &self.lam);
        let at = |y: &Rat| falling.eval(&Scalar::Q(y.clone())).expect("monomial basis");
        match &self.kind {
            // ∫₀¹ Σ c_j y^j dy = Σ c_j/(j+1)
            MomentKind::Uniform => {
                falling.coeffs().iter().enumerate().map(|(j, c)| c.mul_rat(&Rat::new(1, j as i64 + 1).unwrap())).sum()
            }
            MomentKind::Const(c) => at(c),
            MomentKind::Bernoulli(p) => at(&Rat::one()).mul_rat(p),
            MomentKind::Discrete(atoms) => atoms.iter().map(|(y, p)| at(y).mul_rat(p)).sum(),
        }
    }

    /// `E[e_λ^Y(t)] − 1 = Σ_{n≥1} E[(Y)_{n,λ}] tⁿ/n!`.
    pub fn egf_minus_one(&self, order: usize) -> Series {
        let values = (0..=order).map(|n| if n == 0 { Scalar::zero() } else { self.moment(n) }).collect();
        Series::from_egf(values, order)
    }
}

/// Moments of `U[0, 1]` in the given λ-mode.
pub fn uniform_moments(lambda: &super::LambdaMode) -> MomentSeq {
    let lam = lambda.scalar().unwrap_or_else(Scalar::zero);
    MomentSeq::new(MomentKind::Uniform, lam).expect("E[Y] = 1/2")
}

/// The delta series `f` with `f̄(t) = log E[e_λ^Y(t)]`.
pub fn moment_delta(m: &MomentSeq, order: usize) -> Result<DeltaSeries> {
    if m.moment(1).is_zero() {
        return Err(PresetError::ZeroFirstMoment);
    }
    let fbar = m.egf_minus_one(order).add_constant(&Scalar::one()).log()?;
    Ok(DeltaSeries::new(fbar)?.invert_newton())
}

/// `(t²/2)/(e^t − 1 − t)` to the given order; `A₂,ₙ` is `n!` times the
/// `tⁿ` coefficient.
pub fn a2_series(order: usize) -> Series {
    let wide = order + 2;
    let den = Series::exp_linear(&Scalar::one(), wide)
        .sub(&Series::t(wide).add_constant(&Scalar::one()))
        .expect("equal orders")
        .shift_down(2)
        .expect("valuation 2")
        .truncate(order);
    Series::constant(Scalar::rat(1, 2), order).div(&den).expect("constant term 1/2")
}

/// `S₁,λ^Y(n, 1)` for `Y ~ U[0, 1]` from the multinomial sum over
/// compositions `j₁ + … + jₙ = m` of products of `A₂,ⱼ`.
pub fn uniform_log_coeff(n: usize, lam: &Scalar) -> Scalar {
    if n == 0 {
        return Scalar::zero();
    }
    let a2 = a2_series(n).egf().to_vec();
    let mut total = Scalar::zero();
    for m in 0..n {
        let mut inner = Rat::zero();
        for_each_composition(m, n, &mut |parts| {
            let prod = parts
                .iter()
                .fold(Rat::from_int(multinomial(parts)), |acc, &j| &acc * a2[j].as_rat().expect("rational"));
            inner = &inner + &prod;
        });
        let weight = &binomial_rat(n as i64 - 1, m as i64) * &inner;
        total = &total + &lam.pow((n - m - 1) as i64).expect("nonnegative exponent").mul_rat(&weight);
    }
    total.mul_rat(&Rat::from(2).pow(n as i64).unwrap())
}

/// Calls `visit` with every sequence of `parts` nonnegative integers summing
/// to `total`.
fn for_each_composition(total: usize, parts: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(left: usize, slot: usize, buf: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if slot == 1 {
            buf.push(left);
            visit(buf);
            buf.pop();
            return;
        }
        for j in 0..=left {
            buf.push(j);
            go(left - j, slot - 1, buf, visit);
            buf.pop();
        }
    }
    go(total, parts, &mut Vec::with_capacity(parts), visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_are_counted() {
        let mut count = 0;
        for_each_composition(3, 3, &mut |p| {
            assert_eq!(p.iter().sum::<usize>(), 3);
            count += 1;
        });
        // C(5, 2)
        assert_eq!(count, 10);
    }
}
