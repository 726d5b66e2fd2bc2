//! The expression language behind `--f`: parse, print, evaluate.

use deltastirling::exprparse::{delta_from_str, eval_expr, parse};
use deltastirling::presets::LambdaMode;
use deltastirling::scalar::Rat;

fn main() {
    for src in ["t/(1+t)", "2*log((t+sqrt(t^2+4))/2)", "t/(exp(t)-1)", "(1-exp(-lambda*t))/lambda"] {
        let e = parse(src).unwrap();
        let mode = if e.mentions_lambda() { LambdaMode::Symbolic } else { LambdaMode::Absent };
        println!("{src:<30} prints as {e}");
        println!("{:<30} = {}", "", eval_expr(&e, 5, &mode).unwrap());
    }

    let at = delta_from_str("(1-exp(-lambda*t))/lambda", 4, &LambdaMode::Value(Rat::new(1, 2).unwrap())).unwrap();
    println!("at λ = 1/2: {}", at.series());

    for bad in ["t^2", "2t", "sin(t)", "t/(t-t)"] {
        println!("{bad:<8} -> {}", delta_from_str(bad, 4, &LambdaMode::Absent).unwrap_err());
    }
}
