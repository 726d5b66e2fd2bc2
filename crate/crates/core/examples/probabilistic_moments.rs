//! Delta series built from exact moment sequences of a random variable.

use deltastirling::presets::{a2_series, make_preset, uniform_log_coeff, LambdaMode};
use deltastirling::scalar::Scalar;
use deltastirling::stirling::Associated;

fn main() {
    let n = 5;
    let p = make_preset("probabilistic:uniform", n, LambdaMode::Symbolic).unwrap();
    let m = p.moments().unwrap();
    for k in 0..=3 {
        println!("E[(Y)_{{{k},λ}}] for Y ~ U[0,1] = {}", m.moment(k));
    }
    println!("A2 generating series: {}", a2_series(4));

    let ctx = Associated::new(p.f(), n).unwrap();
    for k in 1..=3 {
        let formula = uniform_log_coeff(k, &Scalar::lambda());
        println!("S1(n={k},1): multinomial formula {formula}, triangle {}", ctx.s1().get(k, 1));
    }

    let coin = make_preset("probabilistic:bernoulli:1/3", n, LambdaMode::Absent).unwrap();
    let ctx = Associated::new(coin.f(), n).unwrap();
    println!("Y ~ Bernoulli(1/3), ordinary moments:\n{}", ctx.s2().to_plain());
}
