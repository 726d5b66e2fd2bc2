//! The associated logarithm f(log(1 + t)) computed three ways.

use deltastirling::presets::{make_preset, LambdaMode};
use deltastirling::stirling::{assoc_log_expansion, Associated};

fn main() {
    let order = 6;
    let p = make_preset("mittag_leffler", 2 * order, LambdaMode::Absent).unwrap();
    let ctx = Associated::new(p.f(), 2 * order).unwrap();

    let composed = ctx.log().truncate(order);
    let inverted = ctx.log_via_inverse().truncate(order);
    let expanded = assoc_log_expansion(&ctx, order).unwrap();

    println!("f(log(1+t))             = {composed}");
    println!("inverse of e^(f̄) − 1    = {inverted}");
    println!("sum over S2(n−1+j, j)   = {expanded}");
    assert!(composed == inverted && inverted == expanded);
    println!("all three agree; for the Mittag-Leffler preset this is t/(2 + t)");
}
