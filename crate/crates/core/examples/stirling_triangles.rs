//! Both Stirling triangles associated with a delta series, and the
//! orthogonality of the pair.

use deltastirling::exprparse::delta_from_str;
use deltastirling::presets::LambdaMode;
use deltastirling::stirling::{orthogonality_check, Associated};

fn main() {
    let n = 6;
    // f(t) = 1 − e^{−t}: the second-kind numbers are the Lah numbers
    let f = delta_from_str("1-exp(-t)", n, &LambdaMode::Absent).unwrap();
    let ctx = Associated::new(&f, n).unwrap();
    let (s2, s1) = ctx.triangles();
    println!("S2(n,k; 1−e^(−t)):\n{}", s2.to_plain());
    println!("S1(n,k; 1−e^(−t)):\n{}", s1.to_plain());

    let report = orthogonality_check(s2, s1);
    println!("orthogonality: {} equalities, passed = {}", report.checked, report.passed());

    // a degenerate family keeps λ symbolic
    let deg = delta_from_str("(exp(lambda*t)-1)/lambda", 4, &LambdaMode::Symbolic).unwrap();
    let ctx = Associated::new(&deg, 4).unwrap();
    println!("S2 for (e^(λt) − 1)/λ:\n{}", ctx.s2().to_plain());
}
