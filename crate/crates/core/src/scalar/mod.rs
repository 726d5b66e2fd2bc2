//! Exact coefficient arithmetic over ℚ, ℚ[λ] and ℚ(λ).
//!
//! A [`Scalar`] is always stored in the smallest ring that holds its value:
//! constants are [`Scalar::Q`], polynomials of positive degree are
//! [`Scalar::QL`], and genuine rational functions are [`Scalar::QLrat`].
//! Because every variant is canonical, structural equality is value equality.
//! Mixed-ring arithmetic promotes upward and the result is normalized back
//! down.

mod lpoly;
mod lrat;
mod rat;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use lpoly::LPoly;
pub use lrat::{lrat_reduce, LRat};
pub use rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("pole at lambda = {0}")]
    PoleAtValue(Rat),
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

/// Coefficient ring tag, ordered by inclusion ℚ ⊂ ℚ[λ] ⊂ ℚ(λ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ring {
    Q,
    QL,
    QLrat,
}

impl Ring {
    pub fn as_str(self) -> &'static str {
        match self {
            Ring::Q => "Q",
            Ring::QL => "QL",
            Ring::QLrat => "QLrat",
        }
    }

    pub fn parse(s: &str) -> Option<Ring> {
        match s {
            "Q" => Some(Ring::Q),
            "QL" => Some(Ring::QL),
            "QLrat" => Some(Ring::QLrat),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rat),
    /// Polynomial of degree ≥ 1.
    QL(LPoly),
    /// Reduced quotient with monic denominator of degree ≥ 1.
    QLrat(LRat),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Q(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Q(Rat::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Q(Rat::from(n))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        Scalar::Q(Rat::new(n, d).expect("nonzero denominator"))
    }

    pub fn lambda() -> Self {
        Scalar::QL(LPoly::lambda())
    }

    pub fn from_lpoly(p: LPoly) -> Self {
        if p.is_constant() {
            Scalar::Q(p.constant_term())
        } else {
            Scalar::QL(p)
        }
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Q(_) => Ring::Q,
            Scalar::QL(_) => Ring::QL,
            Scalar::QLrat(_) => Ring::QLrat,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Q(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Q(r) if r.is_one())
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Q(r) => Some(r),
            _ => None,
        }
    }

    /// Numerator and denominator as polynomials.
    fn parts(&self) -> (LPoly, LPoly) {
        match self {
            Scalar::Q(r) => (LPoly::constant(r.clone()), LPoly::constant(Rat::one())),
            Scalar::QL(p) => (p.clone(), LPoly::constant(Rat::one())),
            Scalar::QLrat(q) => (q.num().clone(), q.den().clone()),
        }
    }

    fn to_lpoly(&self) -> Option<LPoly> {
        match self {
            Scalar::Q(r) => Some(LPoly::constant(r.clone())),
            Scalar::QL(p) => Some(p.clone()),
            Scalar::QLrat(_) => None,
        }
    }

    pub fn mul_rat(&self, c: &Rat) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(r * c),
            Scalar::QL(p) => Scalar::from_lpoly(p.scale(c)),
            Scalar::QLrat(q) => {
                if c.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::QLrat(LRat::from_parts_unchecked(q.num().scale(c), q.den().clone()))
                }
            }
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Scalar::Q(c) = rhs {
            return Ok(self.mul_rat(&c.recip()?));
        }
        let (a, b) = self.parts();
        let (c, d) = rhs.parts();
        lrat_reduce(&(&a * &d), &(&b * &c))
    }

    pub fn recip(&self) -> Result<Scalar, ScalarError> {
        Scalar::one().checked_div(self)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Scalar, ScalarError> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        if let Scalar::Q(r) = self {
            return Ok(Scalar::Q(r.pow(exp)?));
        }
        let mut result = Scalar::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(result)
    }

    /// Substitutes a rational value for λ.
    pub fn eval_lambda(&self, value: &Rat) -> Result<Rat, ScalarError> {
        match self {
            Scalar::Q(r) => Ok(r.clone()),
            Scalar::QL(p) => Ok(p.eval(value)),
            Scalar::QLrat(q) => lrat::eval_at(q, value),
        }
    }

    /// Substitutes an arbitrary scalar for λ (e.g. λ ↦ 1/λ).
    pub fn substitute_lambda(&self, value: &Scalar) -> Result<Scalar, ScalarError> {
        let horner =
            |p: &LPoly| p.coeffs().iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * value) + &Scalar::Q(c.clone()));
        match self {
            Scalar::Q(_) => Ok(self.clone()),
            Scalar::QL(p) => Ok(horner(p)),
            Scalar::QLrat(q) => horner(q.num()).checked_div(&horner(q.den())),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => match (self.to_lpoly(), rhs.to_lpoly()) {
                (Some(a), Some(b)) => Scalar::from_lpoly(&a + &b),
                _ => {
                    let (a, b) = self.parts();
                    let (c, d) = rhs.parts();
                    let num = if b == d { &a + &c } else { &(&a * &d) + &(&c * &b) };
                    let den = if b == d { b } else { &b * &d };
                    lrat_reduce(&num, &den).expect("nonzero denominators")
                }
            },
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            _ => self + &(-rhs),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Q(c), other) | (other, Scalar::Q(c)) => other.mul_rat(c),
            (Scalar::QL(a), Scalar::QL(b)) => Scalar::from_lpoly(a * b),
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                lrat_reduce(&(&a * &c), &(&b * &d)).expect("nonzero denominators")
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(-r),
            Scalar::QL(p) => Scalar::QL(-p),
            Scalar::QLrat(q) => Scalar::QLrat(LRat::from_parts_unchecked(-q.num(), q.den().clone())),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::Q(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<LPoly> for Scalar {
    fn from(p: LPoly) -> Self {
        Scalar::from_lpoly(p)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}
