use super::*;
use crate::fps::NotDeltaReason;
use crate::presets::{make_family, FIXED_FAMILIES};
use crate::scalar::Scalar;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::rat(n, d)
}

fn ev(src: &str, order: usize) -> Series {
    eval_expr(&parse(src).unwrap(), order, &LambdaMode::Symbolic).unwrap()
}

#[test]
fn precedence_and_associativity() {
    assert_eq!(parse("-t^2").unwrap(), Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::T), Rat::from(2)))));
    assert_eq!(ev("t-t-t", 3), Series::t(3).neg());
    assert_eq!(ev("8/t^0/2", 2), Series::constant(Scalar::int(4), 2));
    assert_eq!(ev("2*t + t^2", 3), Series::new(vec![q(0, 1), q(2, 1), q(1, 1)], 3));
    assert_eq!(parse(" 1 / 2 ").unwrap(), Expr::Number(Rat::new(1, 2).unwrap()));
}

#[test]
fn syntax_errors() {
    assert!(matches!(parse("t/("), Err(ExprError::Syntax { offset: 3, .. })));
    assert!(matches!(parse("2t"), Err(ExprError::Syntax { offset: 1, .. })));
    assert!(matches!(parse(""), Err(ExprError::Syntax { offset: 0, .. })));
    assert!(matches!(parse("t^x"), Err(ExprError::Syntax { offset: 2, .. })));
    assert!(matches!(parse("t + x"), Err(ExprError::Syntax { offset: 4, .. })));
    assert!(matches!(parse("1/0"), Err(ExprError::Syntax { .. })));
    assert!(matches!(parse("t $ 2"), Err(ExprError::Syntax { offset: 2, .. })));
    assert_eq!(parse("sin(t)").unwrap_err(), ExprError::UnknownFunction { name: "sin".into(), offset: 0 });
    let deep = format!("{}t{}", "(".repeat(500), ")".repeat(500));
    assert!(matches!(parse(&deep), Err(ExprError::TooDeep { .. })));
}

#[test]
fn print_parse_round_trip() {
    let sources = [
        "t/(1+t)",
        "(exp(t)-1)/(exp(t)+1)",
        "2*log((t+sqrt(t^2+4))/2)",
        "(t*1)/2",
        "1/(2)",
        "-(1/2)*t",
        "t^(-1/3) - -t",
        "(1)/2^3 + 3/4/t",
        "t - (t - t)",
        "(-t)^2",
        "lambda*t/(1/2)",
    ];
    for src in sources {
        let once = parse(src).unwrap();
        let printed = once.to_string();
        let again = parse(&printed).unwrap_or_else(|e| panic!("{src} -> {printed}: {e}"));
        assert_eq!(again, once, "{src} printed as {printed}");
        assert_eq!(again.to_string(), printed);
    }
}

#[test]
fn shift_cancellation() {
    // t/(e^t − 1) = Σ B_n tⁿ/n!
    let s = ev("t/(exp(t)-1)", 4);
    assert_eq!(s.egf().to_vec(), vec![q(1, 1), q(-1, 2), q(1, 6), q(0, 1), q(-1, 30)]);
    assert_eq!(ev("t^3/t^3", 2), Series::one(2));
    assert!(matches!(
        eval_expr(&parse("t/t^2").unwrap(), 3, &LambdaMode::Absent),
        Err(ExprError::Fps(FpsError::NonUnitConstantTerm))
    ));
    assert_eq!(eval_expr(&parse("1/(t-t)").unwrap(), 3, &LambdaMode::Absent), Err(ExprError::DivisionByZero));
}

#[test]
fn sqrt_factoring() {
    // 2·(1 + t²/4)^{1/2}
    assert_eq!(ev("sqrt(t^2+4)", 4), Series::new(vec![q(2, 1), q(0, 1), q(1, 4), q(0, 1), q(-1, 64)], 4));
    assert_eq!(
        eval_expr(&parse("sqrt(2+t)").unwrap(), 3, &LambdaMode::Absent),
        Err(ExprError::Fps(FpsError::NoExactRoot))
    );
    assert_eq!(
        eval_expr(&parse("log(2+t)").unwrap(), 3, &LambdaMode::Absent),
        Err(ExprError::Fps(FpsError::BadConstantTerm("log needs constant term 1")))
    );
}

#[test]
fn lambda_mode_handling() {
    assert_eq!(eval_expr(&parse("lambda*t").unwrap(), 3, &LambdaMode::Absent), Err(ExprError::LambdaModeRequired));
    let e = parse("(exp(lambda*t)-1)/(lambda+exp(lambda*t)-1)").unwrap();
    let sym = eval_expr(&e, 6, &LambdaMode::Symbolic).unwrap();
    let r = Rat::new(-3, 7).unwrap();
    assert_eq!(sym.eval_lambda(&r).unwrap(), eval_expr(&e, 6, &LambdaMode::Value(r)).unwrap());
}

#[test]
fn delta_checks() {
    assert_eq!(
        delta_from_str("t^2", 4, &LambdaMode::Absent).unwrap_err(),
        ExprError::Fps(FpsError::NotDelta(NotDeltaReason::ZeroLinear))
    );
    assert_eq!(
        delta_from_str("1+t", 4, &LambdaMode::Absent).unwrap_err(),
        ExprError::Fps(FpsError::NotDelta(NotDeltaReason::NonzeroConstant))
    );
    let lag = delta_from_str("t/(t-1)", 4, &LambdaMode::Absent).unwrap();
    assert_eq!(lag.series(), &Series::new(vec![q(0, 1), q(-1, 1), q(-1, 1), q(-1, 1), q(-1, 1)], 4));
}

#[test]
fn preset_formulas_evaluate_to_presets() {
    for fam in FIXED_FAMILIES.iter() {
        let mode = if fam.is_degenerate() { LambdaMode::Symbolic } else { LambdaMode::Absent };
        let preset = make_family(fam, 9, mode.clone()).unwrap();
        let parsed = delta_from_str(fam.expr().unwrap(), 9, &mode).unwrap();
        assert_eq!(&parsed, preset.f(), "{fam}");
    }
}
