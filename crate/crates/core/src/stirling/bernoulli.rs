use super::{power_triangle, Basis, Result, StirlingError, XPoly};
use crate::comb::binomial_rat;
use crate::fps::DeltaSeries;
use crate::scalar::{Rat, Scalar};

/// Bernoulli numbers (and optionally polynomials) of order α associated with
/// a delta series `g`: EGF coefficients of `(t/(e^{g(t)} − 1))^α e^{x g(t)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliFamily {
    pub base: DeltaSeries,
    pub alpha: Rat,
    /// `B^{(α)}_{n,g}` for `n = 0..=max_n`.
    pub values: Vec<Scalar>,
    /// `B^{(α)}_{n,g}(x)` in the monomial basis, when requested.
    pub polys: Option<Vec<XPoly>>,
}

/// Needs `g` known to order `max_n + 1`, because cancelling `t` from
/// `e^{g} − 1` costs one order.
pub fn bernoulli_assoc(g: &DeltaSeries, alpha: &Rat, max_n: usize, with_x: bool) -> Result<BernoulliFamily> {
    if g.order() < max_n + 1 {
        return Err(StirlingError::InsufficientOrder { needed: max_n + 1, available: g.order() });
    }
    let g = g.truncate(max_n + 1);
    // (e^{g} − 1)/t, constant term g′(0)
    let q = g.series().exp()?.add_constant(&Scalar::int(-1)).shift_down(1)?;
    let neg = -alpha;
    let b = match neg.to_i64() {
        Some(k) => q.pow_int(k)?,
        None if q.constant_term().is_one() => q.pow_ratio(&neg)?,
        None => return Err(StirlingError::NonUnitBaseForRationalPower),
    };
    let values = b.egf().to_vec();
    let polys = if with_x {
        // e^{x g}: [t^m] = Σ_j rows[m][j]/m! x^j
        let rows = power_triangle(g.series(), max_n)?;
        let exp_polys: Vec<XPoly> = rows.into_iter().map(|r| XPoly::new(r, Basis::Monomial)).collect();
        let polys = (0..=max_n)
            .map(|n| {
                (0..=n).fold(XPoly::zero(Basis::Monomial), |acc, m| {
                    let c = values[n - m].mul_rat(&binomial_rat(n as i64, m as i64));
                    acc.add(&exp_polys[m].scale(&c))
                })
            })
            .collect();
        Some(polys)
    } else {
        None
    };
    Ok(BernoulliFamily { base: g, alpha: alpha.clone(), values, polys })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::Series;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rat(n, d)
    }

    #[test]
    fn classical_bernoulli_numbers() {
        let fam = bernoulli_assoc(&DeltaSeries::identity(7), &Rat::one(), 6, false).unwrap();
        assert_eq!(fam.values, vec![q(1, 1), q(-1, 2), q(1, 6), q(0, 1), q(-1, 30), q(0, 1), q(1, 42)]);
    }

    #[test]
    fn higher_order_values() {
        let id = DeltaSeries::identity(4);
        // (t/(e^t−1))^3 = 1 − 3t/2 + …
        let b3 = bernoulli_assoc(&id, &Rat::from(3), 1, false).unwrap();
        assert_eq!(b3.values[1], q(-3, 2));
        let b2 = bernoulli_assoc(&id, &Rat::from(2), 1, false).unwrap();
        assert_eq!(b2.values[1], q(-1, 1));
    }

    #[test]
    fn order_zero_gives_monomials() {
        let fam = bernoulli_assoc(&DeltaSeries::identity(6), &Rat::zero(), 5, true).unwrap();
        for (n, p) in fam.polys.unwrap().iter().enumerate() {
            assert_eq!(p, &XPoly::monomial(Scalar::one(), n));
        }
    }

    #[test]
    fn classical_bernoulli_polynomial() {
        // B_2(x) = x² − x + 1/6
        let fam = bernoulli_assoc(&DeltaSeries::identity(3), &Rat::one(), 2, true).unwrap();
        let want = XPoly::new(vec![q(1, 6), q(-1, 1), q(1, 1)], Basis::Monomial);
        assert_eq!(fam.polys.unwrap()[2], want);
    }

    #[test]
    fn rational_order_needs_unit_base() {
        let g = DeltaSeries::new(Series::linear(Scalar::int(2), 4)).unwrap();
        let half = Rat::new(1, 2).unwrap();
        assert_eq!(bernoulli_assoc(&g, &half, 3, false), Err(StirlingError::NonUnitBaseForRationalPower));
        assert!(bernoulli_assoc(&g, &Rat::from(2), 3, false).is_ok());
        // B_0 = g′(0)^{−α}
        let fam = bernoulli_assoc(&g, &Rat::from(2), 3, false).unwrap();
        assert_eq!(fam.values[0], q(1, 4));
        assert!(bernoulli_assoc(&DeltaSeries::identity(5), &half, 4, false).is_ok());
    }

    #[test]
    fn insufficient_order() {
        assert!(matches!(
            bernoulli_assoc(&DeltaSeries::identity(4), &Rat::one(), 4, false),
            Err(StirlingError::InsufficientOrder { .. })
        ));
    }
}
