use std::ops::{Add, Mul, Neg, Sub};

use super::{Rat, ScalarError};

/// Dense univariate polynomial in the parameter λ over ℚ.
///
/// `coeffs[i]` is the coefficient of λ^i. The highest stored coefficient is
/// nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LPoly {
    coeffs: Vec<Rat>,
}

impl LPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        LPoly { coeffs }
    }

    pub fn zero() -> Self {
        LPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        LPoly::new(vec![c])
    }

    /// The polynomial λ.
    pub fn lambda() -> Self {
        LPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        LPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rat {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> LPoly {
        match self.leading() {
            None => LPoly::zero(),
            Some(lc) => {
                let inv = lc.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &LPoly) -> Result<(LPoly, LPoly), ScalarError> {
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        if self.coeffs.len() < dlen {
            return Ok((LPoly::zero(), self.clone()));
        }
        let lead_inv = divisor.coeffs[dlen - 1].recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dlen - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * d);
            }
            quot[i] = c;
        }
        rem.truncate(dlen - 1);
        Ok((LPoly::new(quot), LPoly::new(rem)))
    }

    /// Monic greatest common divisor over ℚ.
    pub fn gcd(a: &LPoly, b: &LPoly) -> Result<LPoly, ScalarError> {
        if a.is_zero() && b.is_zero() {
            return Err(ScalarError::BothZero);
        }
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y)?;
            x = y;
            y = r.monic();
        }
        Ok(x)
    }

    pub fn pow(&self, mut e: u32) -> LPoly {
        let mut result = LPoly::constant(Rat::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }
}

impl Add<&LPoly> for &LPoly {
    type Output = LPoly;
    fn add(self, rhs: &LPoly) -> LPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = &*c + s;
        }
        LPoly::new(coeffs)
    }
}

impl Sub<&LPoly> for &LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &LPoly) -> LPoly {
        self + &(-rhs)
    }
}

impl Mul<&LPoly> for &LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &LPoly) -> LPoly {
        if self.is_zero() || rhs.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        LPoly::new(coeffs)
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}
