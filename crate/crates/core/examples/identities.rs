//! Closed expressions for first-kind numbers checked against the triangle
//! computed by inversion.

use deltastirling::presets::{make_preset, LambdaMode};
use deltastirling::scalar::Rat;
use deltastirling::stirling::{
    bernoulli_assoc, bernoulli_via_s2, check_binomial_identities, lemma_bell_moments, lemma_bell_moments_rhs,
    s1_via_bernoulli, s1_via_partial_bell, schloemilch_s1, Associated,
};

fn main() {
    let n = 6;
    let p = make_preset("central_bell", 2 * n, LambdaMode::Absent).unwrap();
    let ctx = Associated::new(p.f(), 2 * n).unwrap();
    let s1 = ctx.s1();
    for k in 1..=n {
        let direct = s1.get(n, k);
        let a = schloemilch_s1(&ctx, n, k).unwrap();
        let b = s1_via_bernoulli(&ctx, n, k).unwrap();
        let c = s1_via_partial_bell(&ctx, n, k).unwrap();
        println!("S1({n},{k}) = {direct}: Schlömilch {a}, Bernoulli {b}, partial Bell {c}");
        assert!(a == direct && b == direct && c == direct);
    }

    let lhs = lemma_bell_moments(&ctx, 4, 2).unwrap();
    let rhs = lemma_bell_moments_rhs(&ctx, 4, 2).unwrap();
    println!("moment lemma at (4,2): {lhs} = {rhs}");

    let alpha = Rat::from(2);
    let direct = bernoulli_assoc(ctx.fbar(), &alpha, 4, false).unwrap().values[4].clone();
    println!("B^(2)_4 directly {direct}, via S2 {}", bernoulli_via_s2(&ctx, &alpha, 4).unwrap());

    println!("binomial identities up to n = 12: {} checked", check_binomial_identities(12).unwrap());
}
