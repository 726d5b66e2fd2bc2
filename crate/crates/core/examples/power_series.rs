//! Truncated power series: arithmetic, exp/log, composition, Newton
//! inversion and Lagrange coefficient extraction.

use deltastirling::fps::{lagrange_coeff_inverse, DeltaSeries, Series};
use deltastirling::scalar::Scalar;

fn main() {
    let order = 8;
    let expm1 = Series::exp_linear(&Scalar::one(), order).add_constant(&Scalar::int(-1));
    println!("e^t − 1        = {expm1}");
    println!("EGF values     = {:?}", expm1.egf().to_vec().iter().map(ToString::to_string).collect::<Vec<_>>());

    let f = DeltaSeries::new(expm1).unwrap();
    let inv = f.invert_newton();
    println!("inverse        = {}", inv.series());
    assert_eq!(inv.series(), &Series::log1p(order));

    let roundtrip = f.series().compose(&inv).unwrap();
    println!("f(f̄(t))        = {roundtrip}");

    for n in 1..=4 {
        let c = lagrange_coeff_inverse(&f, n).unwrap();
        println!("[t^{n}] f̄ by Lagrange = {c}  (Newton: {})", inv.series().coeff(n));
    }

    let g = Series::t(order).add_constant(&Scalar::one());
    println!("log(1 + t)     = {}", g.log().unwrap());
    println!("(1 + t)^(1/2)  = {}", g.pow_ratio(&deltastirling::scalar::Rat::new(1, 2).unwrap()).unwrap());
}
