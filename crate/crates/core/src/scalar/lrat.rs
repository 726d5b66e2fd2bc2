use super::{LPoly, Rat, Scalar, ScalarError};

/// Reduced rational function `num/den` in λ over ℚ.
///
/// `den` is monic of positive degree and coprime to `num`. Quotients whose
/// reduced denominator is constant are never represented here; they live in
/// ℚ[λ] (see [`lrat_reduce`]).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LRat {
    num: LPoly,
    den: LPoly,
}

impl LRat {
    pub fn num(&self) -> &LPoly {
        &self.num
    }

    pub fn den(&self) -> &LPoly {
        &self.den
    }

    pub(crate) fn from_parts_unchecked(num: LPoly, den: LPoly) -> Self {
        LRat { num, den }
    }
}

/// Brings `num/den` to canonical form: cancel the polynomial gcd, make the
/// denominator monic (its content goes into the numerator), and demote to
/// ℚ[λ] or ℚ when the denominator becomes constant.
pub fn lrat_reduce(num: &LPoly, den: &LPoly) -> Result<Scalar, ScalarError> {
    if den.is_zero() {
        return Err(ScalarError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(Scalar::zero());
    }
    if den.is_constant() {
        let inv = den.constant_term().recip()?;
        return Ok(Scalar::from_lpoly(num.scale(&inv)));
    }
    let g = LPoly::gcd(num, den)?;
    let (num, den) =
        if g.is_constant() { (num.clone(), den.clone()) } else { (num.div_rem(&g)?.0, den.div_rem(&g)?.0) };
    let lc = den.leading().cloned().expect("nonzero denominator");
    let inv = lc.recip()?;
    let num = num.scale(&inv);
    let den = den.scale(&inv);
    if den.is_constant() {
        return Ok(Scalar::from_lpoly(num));
    }
    Ok(Scalar::QLrat(LRat { num, den }))
}

pub(crate) fn eval_at(q: &LRat, value: &Rat) -> Result<Rat, ScalarError> {
    let d = q.den.eval(value);
    if d.is_zero() {
        return Err(ScalarError::PoleAtValue(value.clone()));
    }
    q.num.eval(value).checked_div(&d)
}
