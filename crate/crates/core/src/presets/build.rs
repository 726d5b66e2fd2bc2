use super::{Family, Result};
use crate::fps::special::{deg_log1p, deg_log_of, expm1_scaled, expm1_scaled_of};
use crate::fps::{DeltaSeries, Series};
use crate::scalar::{Rat, Scalar};

fn half() -> Rat {
    Rat::new(1, 2).unwrap()
}

/// `(s + √(s² + 4))/2` for `s` with zero constant term. The square root is
/// taken as `2·(1 + s²/4)^{1/2}`.
pub(super) fn central_root(s: &Series) -> Result<Series> {
    let radicand = s.mul(s)?.add_constant(&Scalar::int(4));
    let root = radicand.pow_ratio_factored(&half())?;
    Ok(s.add(&root)?.scale_rat(&half()))
}

/// `2·log((s + √(s² + 4))/2)`, the inverse of `e^{t/2} − e^{−t/2}`.
pub(super) fn central_log(s: &Series) -> Result<Series> {
    Ok(central_root(s)?.log()?.scale_rat(&Rat::from(2)))
}

/// `u/(c + u)`.
pub(super) fn over_shift(u: &Series, c: i64) -> Result<Series> {
    Ok(u.div(&u.add_constant(&Scalar::int(c)))?)
}

pub(super) fn fixed_f(family: &Family, lam: &Scalar, order: usize) -> Result<DeltaSeries> {
    let t = Series::t(order);
    let s = match family {
        Family::Identity => t,
        Family::DegFalling => expm1_scaled(lam, order),
        // (e^{−t} − 1)/(−1)
        Family::Rising => expm1_scaled(&Scalar::int(-1), order),
        Family::DegRising => expm1_scaled(&-lam, order),
        Family::Central => {
            let h = Scalar::Q(half());
            Series::exp_linear(&h, order).sub(&Series::exp_linear(&-&h, order))?
        }
        Family::CentralBell => central_log(&t)?,
        // log_λ(X²) = (e^{2λ log X} − 1)/λ
        Family::DegCentralBell => expm1_scaled_of(&central_log(&t)?, lam)?,
        Family::LahBell => over_shift(&t, 1)?,
        // E/(1 + E) with E = (e^{λt} − 1)/λ avoids dividing by λ
        Family::DegLahBell => over_shift(&expm1_scaled(lam, order), 1)?,
        Family::Bell => Series::log1p(order),
        Family::PartialDegBell => deg_log1p(lam, order),
        Family::FullDegBell => deg_log_of(&expm1_scaled(lam, order), lam)?,
        Family::MittagLeffler => {
            let e = Series::exp_linear(&Scalar::one(), order);
            e.add_constant(&Scalar::int(-1)).div(&e.add_constant(&Scalar::one()))?
        }
        Family::LaguerreM1 => t.div(&t.add_constant(&Scalar::int(-1)))?,
        Family::Probabilistic(_) => unreachable!("built from moments"),
    };
    Ok(DeltaSeries::new(s)?)
}
