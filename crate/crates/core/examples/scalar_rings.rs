//! Exact scalars over ℚ, ℚ[λ] and ℚ(λ), with automatic promotion and
//! demotion to the smallest ring.

use deltastirling::scalar::{lrat_reduce, LPoly, Rat, Scalar};

fn main() {
    let half = Scalar::rat(1, 2);
    let lam = Scalar::lambda();
    let poly = &(&lam * &lam) - &half;
    println!("λ² − 1/2          = {poly}   [{}]", poly.ring());

    // (2λ + 2)/(3λ + 3) cancels to a rational
    let num = LPoly::new(vec![Rat::from(2), Rat::from(2)]);
    let den = LPoly::new(vec![Rat::from(3), Rat::from(3)]);
    let q = lrat_reduce(&num, &den).unwrap();
    println!("(2λ+2)/(3λ+3)     = {q}   [{}]", q.ring());

    let frac = Scalar::one().checked_div(&(&lam + &Scalar::one())).unwrap();
    println!("1/(1 + λ)         = {frac}   [{}]", frac.ring());
    let back = &frac * &(&lam + &Scalar::one());
    println!("back times (1+λ)  = {back}   [{}]", back.ring());

    let at = frac.eval_lambda(&Rat::new(1, 3).unwrap()).unwrap();
    println!("1/(1 + λ) at λ=1/3 = {at}");

    let text = frac.to_string();
    assert_eq!(text.parse::<Scalar>().unwrap(), frac);
    println!("textual form {text:?} parses back exactly");
}
