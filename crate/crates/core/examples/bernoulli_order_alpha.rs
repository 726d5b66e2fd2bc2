//! Bernoulli numbers and polynomials of order α associated with a delta
//! series, with the classical case as a sanity check.

use deltastirling::fps::DeltaSeries;
use deltastirling::presets::{make_preset, LambdaMode};
use deltastirling::scalar::Rat;
use deltastirling::stirling::bernoulli_assoc;

fn main() {
    let n = 6;
    let classical = bernoulli_assoc(&DeltaSeries::identity(n + 1), &Rat::one(), n, true).unwrap();
    for (k, (b, p)) in classical.values.iter().zip(classical.polys.as_ref().unwrap()).enumerate() {
        println!("B_{k} = {b:<6}  B_{k}(x) = {p}");
    }

    let alpha = Rat::new(-3, 2).unwrap();
    let p = make_preset("deg_falling", n + 1, LambdaMode::Symbolic).unwrap();
    let fam = bernoulli_assoc(p.f(), &alpha, 3, false).unwrap();
    for (k, b) in fam.values.iter().enumerate() {
        println!("order {alpha}, f = (e^(λt) − 1)/λ: B_{k} = {b}");
    }
}
