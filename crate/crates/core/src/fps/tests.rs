use super::*;
use crate::comb::gen_binomial;
use crate::scalar::LPoly;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::rat(n, d)
}

fn ints(cs: &[i64], order: usize) -> Series {
    Series::new(cs.iter().map(|&c| Scalar::int(c)).collect(), order)
}

fn exp_minus_one(order: usize) -> DeltaSeries {
    let e = Series::exp_linear(&Scalar::one(), order);
    DeltaSeries::new(e.add_constant(&Scalar::int(-1))).unwrap()
}

/// `t/(t−1)`, expanded by hand: −t − t² − t³ − …
fn laguerre_f(order: usize) -> DeltaSeries {
    let coeffs = (0..=order).map(|n| if n == 0 { Scalar::zero() } else { Scalar::int(-1) });
    DeltaSeries::new(Series::new(coeffs.collect(), order)).unwrap()
}

/// `log(1+λt)/λ = Σ (−1)^{n−1} λ^{n−1} t^n / n`.
fn deg_log_lambda_t(order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|n| match n {
            0 => Scalar::zero(),
            _ => {
                let sign = if n % 2 == 1 { 1 } else { -1 };
                Scalar::from_lpoly(LPoly::monomial(Rat::new(sign, n as i64).unwrap(), n - 1))
            }
        })
        .collect();
    Series::new(coeffs, order)
}

/// `e_λ(t) − 1`.
fn deg_exp_minus_one(order: usize) -> DeltaSeries {
    let e = deg_log_lambda_t(order).exp().unwrap();
    DeltaSeries::new(e.add_constant(&Scalar::int(-1))).unwrap()
}

#[test]
fn product_examples() {
    let a = ints(&[1, 1], 4);
    let b = ints(&[1, -1], 4);
    assert_eq!(&a * &b, ints(&[1, 0, -1], 4));

    let e = Series::exp_linear(&Scalar::one(), 10);
    let en = Series::exp_linear(&Scalar::int(-1), 10);
    assert_eq!(&e * &en, Series::one(10));

    let t_over = Series::t(6).div(&ints(&[1, -1], 6)).unwrap();
    assert_eq!(&t_over * &ints(&[1, -1], 6), Series::t(6));
}

#[test]
fn order_mismatch_is_an_error() {
    let a = Series::t(3);
    let b = Series::t(4);
    assert_eq!(a.add(&b), Err(FpsError::OrderMismatch(3, 4)));
    assert_eq!(a.mul(&b), Err(FpsError::OrderMismatch(3, 4)));
}

#[test]
fn division_examples() {
    // t/(e^t − 1) after cancelling t: 1/(1 + t/2 + t²/6 + t³/24).
    // Long division by hand: 1 − t/2 + t²/12 + 0·t³.
    let e = exp_minus_one(4).into_series().shift_down(1).unwrap();
    let b = Series::one(3).div(&e).unwrap();
    assert_eq!(b.coeffs(), &[q(1, 1), q(-1, 2), q(1, 12), q(0, 1)]);

    let geo = Series::one(5).div(&ints(&[1, -1], 5)).unwrap();
    assert_eq!(geo, ints(&[1, 1, 1, 1, 1, 1], 5));

    assert_eq!(Series::one(3).div(&Series::t(3)), Err(FpsError::NonUnitConstantTerm));
}

#[test]
fn composition_examples() {
    let log1p = DeltaSeries::new(Series::log1p(10)).unwrap();
    let em1 = exp_minus_one(10);
    assert_eq!(em1.series().compose(&log1p).unwrap(), Series::t(10));

    let g = Series::exp_linear(&Scalar::int(3), 7);
    assert_eq!(g.compose(&DeltaSeries::identity(7)).unwrap(), g);

    // (t/(1−t))² = Σ_{k≥0} (k+1) t^{k+2}
    let inner = DeltaSeries::new(ints(&[0, 1, 1, 1, 1, 1, 1], 6)).unwrap();
    let t2 = ints(&[0, 0, 1], 6);
    assert_eq!(t2.compose(&inner).unwrap(), ints(&[0, 0, 1, 2, 3, 4, 5], 6));
}

#[test]
fn newton_inversion_examples() {
    assert_eq!(DeltaSeries::identity(8).invert_newton(), DeltaSeries::identity(8));
    assert_eq!(exp_minus_one(12).invert_newton().series(), &Series::log1p(12));
    let lag = laguerre_f(11);
    assert_eq!(lag.invert_newton(), lag);
}

#[test]
fn newton_round_trip_with_lambda() {
    let f = deg_exp_minus_one(9);
    let g = f.invert_newton();
    assert_eq!(f.series().compose(&g).unwrap(), Series::t(9));
    assert_eq!(g.series().compose(&f).unwrap(), Series::t(9));
}

#[test]
fn lagrange_inverse_examples() {
    assert_eq!(lagrange_coeff_inverse(&exp_minus_one(5), 3).unwrap(), q(1, 3));

    let lm1_over_2 = Scalar::from_lpoly(LPoly::new(vec![Rat::new(-1, 2).unwrap(), Rat::new(1, 2).unwrap()]));
    assert_eq!(lagrange_coeff_inverse(&deg_exp_minus_one(5), 2).unwrap(), lm1_over_2);

    for n in 2..=6 {
        assert!(lagrange_coeff_inverse(&DeltaSeries::identity(6), n).unwrap().is_zero());
    }
    assert!(matches!(lagrange_coeff_inverse(&DeltaSeries::identity(6), 7), Err(FpsError::IndexOutOfOrder { .. })));
    assert!(lagrange_coeff_inverse(&DeltaSeries::identity(6), 0).is_err());
}

#[test]
fn lagrange_power_examples() {
    for n in 1..=6 {
        assert_eq!(lagrange_coeff_power(&exp_minus_one(6), n, n).unwrap(), Scalar::one());
    }
    let lm1_over_2 = Scalar::from_lpoly(LPoly::new(vec![Rat::new(-1, 2).unwrap(), Rat::new(1, 2).unwrap()]));
    assert_eq!(lagrange_coeff_power(&deg_exp_minus_one(4), 1, 2).unwrap(), lm1_over_2);

    // f = t/(1−t), f̄ = t/(1+t); (t/(1+t))² = t² − 2t³ + …
    let f = DeltaSeries::new(ints(&[0, 1, 1, 1, 1], 4)).unwrap();
    assert_eq!(lagrange_coeff_power(&f, 2, 3).unwrap(), Scalar::int(-2));
}

#[test]
fn lagrange_general_examples() {
    let f = laguerre_f(6);
    assert_eq!(lagrange_coeff_general(&Series::t(6), &f, 4).unwrap(), lagrange_coeff_inverse(&f, 4).unwrap());
    let e = Series::exp_linear(&Scalar::one(), 6);
    // e^{log(1+t)} = 1 + t has no t² term.
    assert!(lagrange_coeff_general(&e, &exp_minus_one(6), 2).unwrap().is_zero());
    // e^{t/(t−1)} = 1 − t + (1/2 − 1)t² + …
    assert_eq!(lagrange_coeff_general(&e, &f, 2).unwrap(), q(-1, 2));
}

#[test]
fn exp_log_examples() {
    let one_plus_t = ints(&[1, 1], 8);
    assert_eq!(Series::log1p(8).exp().unwrap(), one_plus_t);
    assert_eq!(Series::exp_linear(&Scalar::one(), 8).log().unwrap(), Series::t(8));

    // log(1 + log(1+t)): with L = t − t²/2, L − L²/2 has t² coefficient −1.
    let inner = Series::log1p(6).add_constant(&Scalar::one());
    assert_eq!(inner.log().unwrap().coeff(2), &Scalar::int(-1));

    assert!(matches!(ints(&[2, 1], 3).log(), Err(FpsError::BadConstantTerm(_))));
    assert!(matches!(ints(&[1, 1], 3).exp(), Err(FpsError::BadConstantTerm(_))));
}

#[test]
fn power_examples() {
    let sq = ints(&[1, 2, 1], 6);
    assert_eq!(sq.pow_ratio(&Rat::new(1, 2).unwrap()).unwrap(), ints(&[1, 1], 6));

    // Binomial series oracle: (1 + t²/4)^{1/2} = Σ C(1/2, k) (t²/4)^k.
    let base = Series::new(vec![q(1, 1), q(0, 1), q(1, 4)], 8);
    let got = base.pow_ratio(&Rat::new(1, 2).unwrap()).unwrap();
    let half = Rat::new(1, 2).unwrap();
    for n in 0..=8 {
        let want = if n % 2 == 1 {
            Rat::zero()
        } else {
            let k = n / 2;
            gen_binomial(&half, k) * Rat::new(1, 4).unwrap().pow(k as i64).unwrap()
        };
        assert_eq!(got.coeff(n), &Scalar::Q(want), "n={n}");
    }
    assert_eq!(got.coeff(2), &q(1, 8));
    assert_eq!(got.coeff(4), &q(-1, 128));

    let geo = ints(&[1, -1], 7).pow_int(-1).unwrap();
    assert_eq!(geo, ints(&[1; 8], 7));

    assert_eq!(Series::t(3).pow_int(-1), Err(FpsError::NonUnitConstantTerm));
    assert_eq!(ints(&[2, 1], 3).pow_ratio(&half), Err(FpsError::NonUnitConstantTerm));
}

#[test]
fn factored_roots() {
    // sqrt(4 + t²) = 2 + t²/4 − t⁴/64
    let s = Series::new(vec![q(4, 1), q(0, 1), q(1, 1)], 4);
    let r = s.pow_ratio_factored(&Rat::new(1, 2).unwrap()).unwrap();
    assert_eq!(r.coeffs(), &[q(2, 1), q(0, 1), q(1, 4), q(0, 1), q(-1, 64)]);
    let bad = Series::new(vec![q(2, 1), q(1, 1)], 3);
    assert_eq!(bad.pow_ratio_factored(&Rat::new(1, 2).unwrap()), Err(FpsError::NoExactRoot));
}

#[test]
fn egf_view_scales_by_factorial() {
    let e = Series::exp_linear(&Scalar::one(), 6);
    assert!(e.egf().to_vec().iter().all(Scalar::is_one));
    let back = Series::from_egf(e.egf().to_vec(), 6);
    assert_eq!(back, e);
}

#[test]
fn delta_validation() {
    assert_eq!(DeltaSeries::new(ints(&[0, 0, 1], 3)), Err(FpsError::NotDelta(NotDeltaReason::ZeroLinear)));
    assert_eq!(DeltaSeries::new(ints(&[1, 1], 3)), Err(FpsError::NotDelta(NotDeltaReason::NonzeroConstant)));
}

#[test]
fn json_round_trip() {
    let f = deg_exp_minus_one(5).into_series();
    for egf in [false, true] {
        let s = f.to_json(egf);
        assert_eq!(Series::from_json(&s).unwrap(), f);
    }
    assert!(Series::from_json(r#"{"order":1,"ring":"Q","coeffs":["0"],"egf":false}"#).is_err());
    assert!(Series::from_json(r#"{"order":0,"ring":"Q","coeffs":["l"],"egf":false}"#).is_err());
}
