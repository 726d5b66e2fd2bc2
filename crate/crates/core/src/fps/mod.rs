//! Truncated formal power series with exact coefficients.
//!
//! A [`Series`] of order `N` stores the ordinary coefficients of
//! `t^0, …, t^N`. Everything above `t^N` is unknown, so every operation
//! returns a series of the same (or, for derivative/shift, a smaller) order.
//! Generating functions written in `t^n/n!` form are read through
//! [`EgfView`].

mod json;
mod lagrange;
mod ops;
pub mod special;

use std::fmt;

use thiserror::Error;

use crate::comb::factorial_rat;
use crate::scalar::{Rat, Ring, Scalar, ScalarError};

pub use json::SeriesJson;
pub use lagrange::{lagrange_coeff_general, lagrange_coeff_inverse, lagrange_coeff_power};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpsError {
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("constant term outside the domain: {0}")]
    BadConstantTerm(&'static str),
    #[error("no exact rational root of the constant term")]
    NoExactRoot,
    #[error("index {index} outside the valid range for order {order}")]
    IndexOutOfOrder { index: usize, order: usize },
    #[error("not a delta series: {0}")]
    NotDelta(NotDeltaReason),
    #[error("malformed series: {0}")]
    Malformed(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotDeltaReason {
    NonzeroConstant,
    ZeroLinear,
    TooShort,
}

impl fmt::Display for NotDeltaReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotDeltaReason::NonzeroConstant => "nonzero constant term",
            NotDeltaReason::ZeroLinear => "zero linear term",
            NotDeltaReason::TooShort => "order below 1",
        })
    }
}

/// Equality compares order and coefficients; the ring tag is metadata.
#[derive(Clone)]
pub struct Series {
    order: usize,
    coeffs: Vec<Scalar>,
    ring: Ring,
}

impl Series {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients above `t^order`.
    pub fn new(mut coeffs: Vec<Scalar>, order: usize) -> Self {
        coeffs.resize(order + 1, Scalar::zero());
        let ring = coeffs.iter().map(Scalar::ring).max().unwrap_or(Ring::Q);
        Series { order, coeffs, ring }
    }

    pub fn from_rats(coeffs: impl IntoIterator<Item = Rat>, order: usize) -> Self {
        Series::new(coeffs.into_iter().map(Scalar::Q).collect(), order)
    }

    /// Builds from EGF values `a_n`, storing `a_n / n!`.
    pub fn from_egf(values: Vec<Scalar>, order: usize) -> Self {
        let coeffs =
            values.into_iter().enumerate().map(|(n, a)| a.mul_rat(&factorial_rat(n).recip().unwrap())).collect();
        Series::new(coeffs, order)
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Scalar::one(), order)
    }

    pub fn constant(c: Scalar, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    /// The identity series `t`.
    pub fn t(order: usize) -> Self {
        Series::new(vec![Scalar::zero(), Scalar::one()], order)
    }

    /// `c·t`.
    pub fn linear(c: Scalar, order: usize) -> Self {
        Series::new(vec![Scalar::zero(), c], order)
    }

    /// `e^{c t}`.
    pub fn exp_linear(c: &Scalar, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Scalar::one();
        for n in 0..=order {
            if n > 0 {
                term = (&term * c).mul_rat(&Rat::new(1, n as i64).unwrap());
            }
            coeffs.push(term.clone());
        }
        Series::new(coeffs, order)
    }

    /// `log(1 + t)`.
    pub fn log1p(order: usize) -> Self {
        let coeffs = (0..=order).map(|n| match n {
            0 => Rat::zero(),
            _ => Rat::new(if n % 2 == 1 { 1 } else { -1 }, n as i64).unwrap(),
        });
        Series::from_rats(coeffs, order)
    }

    /// `1/(1 − c t)`.
    pub fn geometric(c: &Scalar, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Scalar::one();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term = &term * c;
        }
        Series::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Raises the ring tag; the tag never drops below what the coefficients
    /// need.
    pub fn with_ring(mut self, ring: Ring) -> Self {
        self.ring = self.ring.max(ring);
        self
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Scalar {
        &self.coeffs[n]
    }

    pub fn constant_term(&self) -> &Scalar {
        &self.coeffs[0]
    }

    pub fn egf(&self) -> EgfView<'_> {
        EgfView { series: self }
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Same coefficients at a smaller order.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order, "truncate cannot raise the order");
        self.retag(self.coeffs[..=order].to_vec(), order)
    }

    /// Pads with zero coefficients up to `order`. Only sound when the caller
    /// knows the higher coefficients are zero or irrelevant.
    pub fn extend_zero(&self, order: usize) -> Series {
        assert!(order >= self.order, "extend cannot lower the order");
        self.retag(self.coeffs.clone(), order)
    }

    /// Substitutes a rational value for λ coefficient-wise.
    pub fn eval_lambda(&self, value: &Rat) -> Result<Series, FpsError> {
        let coeffs = self.coeffs.iter().map(|c| c.eval_lambda(value).map(Scalar::Q)).collect::<Result<Vec<_>, _>>()?;
        Ok(Series::new(coeffs, self.order))
    }

    pub(crate) fn retag(&self, coeffs: Vec<Scalar>, order: usize) -> Series {
        Series::new(coeffs, order).with_ring(self.ring)
    }
}

impl PartialEq for Series {
    fn eq(&self, other: &Series) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl Eq for Series {}

impl std::hash::Hash for Series {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}; {}](", self.ring, self.order)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            wrote = true;
            match (n, c.ring()) {
                (0, _) => write!(f, "{c}")?,
                (_, Ring::Q) => write!(f, "{c}*t^{n}")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

/// Reads a series as an exponential generating function:
/// `coeff(n) = n! · [t^n]`.
#[derive(Clone, Copy)]
pub struct EgfView<'a> {
    series: &'a Series,
}

impl EgfView<'_> {
    pub fn coeff(&self, n: usize) -> Scalar {
        self.series.coeffs[n].mul_rat(&factorial_rat(n))
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        (0..=self.series.order).map(|n| self.coeff(n)).collect()
    }
}

/// A series with zero constant term and nonzero linear term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DeltaSeries {
    series: Series,
}

impl DeltaSeries {
    pub fn new(series: Series) -> Result<Self, FpsError> {
        if series.order < 1 {
            return Err(FpsError::NotDelta(NotDeltaReason::TooShort));
        }
        if !series.coeffs[0].is_zero() {
            return Err(FpsError::NotDelta(NotDeltaReason::NonzeroConstant));
        }
        if series.coeffs[1].is_zero() {
            return Err(FpsError::NotDelta(NotDeltaReason::ZeroLinear));
        }
        Ok(DeltaSeries { series })
    }

    /// The identity delta series `t`.
    pub fn identity(order: usize) -> Self {
        DeltaSeries::new(Series::t(order.max(1))).unwrap()
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    pub fn into_series(self) -> Series {
        self.series
    }

    pub fn order(&self) -> usize {
        self.series.order
    }

    /// `f′(0)`.
    pub fn linear_coeff(&self) -> &Scalar {
        &self.series.coeffs[1]
    }

    pub fn truncate(&self, order: usize) -> DeltaSeries {
        DeltaSeries::new(self.series.truncate(order.max(1))).unwrap()
    }

    pub fn eval_lambda(&self, value: &Rat) -> Result<DeltaSeries, FpsError> {
        DeltaSeries::new(self.series.eval_lambda(value)?)
    }
}

impl AsRef<Series> for DeltaSeries {
    fn as_ref(&self) -> &Series {
        &self.series
    }
}

#[cfg(test)]
mod tests;
