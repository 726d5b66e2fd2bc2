use std::fmt;

use super::{classical, Associated, Result, StirlingError, Triangle};
use crate::scalar::{Rat, Ring, Scalar};

/// Which polynomial family the coefficients of an [`XPoly`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `x^k`
    Monomial,
    /// `(x)_k = x(x−1)…(x−k+1)`
    Falling,
    /// `(x)_{k,λ} = x(x−λ)…(x−(k−1)λ)` with symbolic λ
    FallingLambda,
    /// `p_k(x)`, the sequence associated with a delta series
    Associated,
}

/// Polynomial in `x`: `Σ coeffs[k]·b_k(x)` for the basis `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPoly {
    coeffs: Vec<Scalar>,
    basis: Basis,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<Scalar>, basis: Basis) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs, basis }
    }

    pub fn zero(basis: Basis) -> Self {
        XPoly::new(Vec::new(), basis)
    }

    pub fn one() -> Self {
        XPoly::new(vec![Scalar::one()], Basis::Monomial)
    }

    /// `c·x^n`.
    pub fn monomial(c: Scalar, n: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = c;
        XPoly::new(coeffs, Basis::Monomial)
    }

    /// `(x)_{n,μ} = Π_{i<n} (x − iμ)` expanded in monomials; `μ = 1` is the
    /// ordinary falling factorial.
    pub fn falling_with_step(n: usize, mu: &Scalar) -> Self {
        let mut p = XPoly::one();
        for i in 0..n {
            let root = mu.mul_rat(&Rat::from(i as i64));
            p = p.mul(&XPoly::new(vec![-&root, Scalar::one()], Basis::Monomial));
        }
        p
    }

    pub fn falling(n: usize) -> Self {
        XPoly::falling_with_step(n, &Scalar::one())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn ring(&self) -> Ring {
        self.coeffs.iter().map(Scalar::ring).max().unwrap_or(Ring::Q)
    }

    /// Coefficient-wise sum; both operands must share a basis.
    pub fn add(&self, other: &XPoly) -> XPoly {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        XPoly::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect(), self.basis)
    }

    pub fn scale(&self, c: &Scalar) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|a| a * c).collect(), self.basis)
    }

    /// Product of two monomial-basis polynomials.
    pub fn mul(&self, other: &XPoly) -> XPoly {
        assert!(
            self.basis == Basis::Monomial && other.basis == Basis::Monomial,
            "products are only defined in the monomial basis"
        );
        if self.is_zero() || other.is_zero() {
            return XPoly::zero(Basis::Monomial);
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XPoly::new(out, Basis::Monomial)
    }

    /// Value at `x`. The associated basis has no intrinsic meaning without
    /// its delta series; convert it first.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        let step = match self.basis {
            Basis::Monomial => None,
            Basis::Falling => Some(Scalar::one()),
            Basis::FallingLambda => Some(Scalar::lambda()),
            Basis::Associated => return Err(StirlingError::MissingDeltaSeries),
        };
        let mut acc = Scalar::zero();
        let mut b = Scalar::one();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &(c * &b);
            b = match &step {
                None => &b * x,
                Some(mu) => &b * &(x - &mu.mul_rat(&Rat::from(k as i64))),
            };
        }
        Ok(acc)
    }

    /// Substitutes `λ = value` in every coefficient.
    pub fn eval_lambda(&self, value: &Rat) -> Result<XPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval_lambda(value).map(Scalar::Q))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(XPoly::new(coeffs, self.basis))
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |k: usize| -> String {
            match (self.basis, k) {
                (_, 0) => String::new(),
                (Basis::Monomial, 1) => "x".into(),
                (Basis::Monomial, _) => format!("x^{k}"),
                (Basis::Falling, _) => format!("(x)_{k}"),
                (Basis::FallingLambda, _) => format!("(x)_{{{k},l}}"),
                (Basis::Associated, _) => format!("p_{k}(x)"),
            }
        };
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            wrote = true;
            let v = var(k);
            match (k, c.ring()) {
                (0, _) => write!(f, "{c}")?,
                (_, Ring::Q) if c.is_one() => f.write_str(&v)?,
                (_, Ring::Q) if (-c).is_one() => write!(f, "-{v}")?,
                (_, Ring::Q) => write!(f, "{c}*{v}")?,
                _ => write!(f, "({c})*{v}")?,
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `c'_j = Σ_m c_m·T(m, j)`: re-expands `Σ c_m a_m` when `a_m = Σ_j T(m,j) b_j`.
fn apply(t: &Triangle, c: &[Scalar]) -> Vec<Scalar> {
    (0..c.len()).map(|j| (j..c.len()).map(|m| &c[m] * &t.get(m, j)).sum()).collect()
}

fn need(assoc: Option<&Associated>, deg: usize) -> Result<&Associated> {
    let a = assoc.ok_or(StirlingError::MissingDeltaSeries)?;
    if a.max_n() < deg {
        return Err(StirlingError::InsufficientOrder { needed: deg, available: a.max_n() });
    }
    Ok(a)
}

/// Exact change of basis. Monomial and falling-λ conversions use the
/// classical and degenerate Stirling triangles; the associated basis uses the
/// triangles of `assoc`. Every route passes through the falling basis.
pub fn basis_convert(p: &XPoly, target: Basis, assoc: Option<&Associated>) -> Result<XPoly> {
    if p.basis == target || p.is_zero() {
        return Ok(XPoly::new(p.coeffs.clone(), target));
    }
    let deg = p.coeffs.len() - 1;
    let lam = Scalar::lambda();
    let falling = match p.basis {
        Basis::Falling => p.coeffs.clone(),
        Basis::Monomial => apply(&classical::s2(deg), &p.coeffs),
        Basis::FallingLambda => apply(&classical::s2_lambda(&lam, deg), &p.coeffs),
        Basis::Associated => apply(need(assoc, deg)?.s2(), &p.coeffs),
    };
    let out = match target {
        Basis::Falling => falling,
        Basis::Monomial => apply(&classical::s1(deg), &falling),
        Basis::FallingLambda => apply(&classical::s1_lambda(&lam, deg), &falling),
        Basis::Associated => apply(need(assoc, deg)?.s1(), &falling),
    };
    Ok(XPoly::new(out, target))
}
