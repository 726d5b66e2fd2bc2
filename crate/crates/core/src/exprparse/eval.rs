use super::{Expr, ExprError, Func, Result};
use crate::fps::{FpsError, Series};
use crate::presets::LambdaMode;
use crate::scalar::{Rat, Scalar};

/// Extra working order tried before a vanishing denominator is reported.
const MAX_EXTRA: usize = 64;

struct Ctx {
    lam: Option<Scalar>,
}

/// Result at a working order, or a request for more order because a
/// denominator vanished identically.
enum Step {
    Done(Series),
    NeedMore,
}

fn min_order(a: &Series, b: &Series) -> (Series, Series) {
    let n = a.order().min(b.order());
    (a.truncate(n), b.truncate(n))
}

impl Ctx {
    fn eval(&self, e: &Expr, work: usize) -> Result<Step> {
        macro_rules! sub {
            ($x:expr) => {
                match self.eval($x, work)? {
                    Step::Done(s) => s,
                    Step::NeedMore => return Ok(Step::NeedMore),
                }
            };
        }
        let s = match e {
            Expr::Number(r) => Series::constant(Scalar::Q(r.clone()), work),
            Expr::T => Series::t(work),
            Expr::Lambda => Series::constant(self.lam.clone().ok_or(ExprError::LambdaModeRequired)?, work),
            Expr::Neg(a) => sub!(a).neg(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                let (x, y) = min_order(&sub!(a), &sub!(b));
                match e {
                    Expr::Add(..) => x.add(&y)?,
                    Expr::Sub(..) => x.sub(&y)?,
                    _ => x.mul(&y)?,
                }
            }
            Expr::Div(a, b) => {
                let (x, y) = min_order(&sub!(a), &sub!(b));
                let Some(v) = y.valuation() else {
                    return Ok(Step::NeedMore);
                };
                if v > 0 {
                    // cancel the common power of t
                    match x.valuation() {
                        Some(u) if u < v => return Err(FpsError::NonUnitConstantTerm.into()),
                        None if x.order() < v => return Ok(Step::NeedMore),
                        _ => {}
                    }
                    x.shift_down(v)?.div(&y.shift_down(v)?)?
                } else {
                    x.div(&y)?
                }
            }
            Expr::Pow(a, r) => pow(&sub!(a), r)?,
            Expr::Call(func, a) => {
                let x = sub!(a);
                match func {
                    Func::Exp => x.exp()?,
                    Func::Log => x.log()?,
                    Func::Sqrt => pow(&x, &Rat::new(1, 2).unwrap())?,
                }
            }
        };
        Ok(Step::Done(s))
    }
}

fn pow(x: &Series, r: &Rat) -> Result<Series> {
    if let Some(k) = r.to_i64() {
        return Ok(x.pow_int(k)?);
    }
    if x.constant_term().is_zero() {
        return Err(ExprError::BadExponent(r.clone()));
    }
    Ok(x.pow_ratio_factored(r)?)
}

/// Evaluates `e` as a power series to `order`. Divisions first cancel the
/// largest common power of `t`; when that loses precision the whole tree is
/// evaluated again at a higher working order.
pub fn eval_expr(e: &Expr, order: usize, lambda: &LambdaMode) -> Result<Series> {
    let ctx = Ctx { lam: lambda.scalar() };
    if ctx.lam.is_none() && e.mentions_lambda() {
        return Err(ExprError::LambdaModeRequired);
    }
    let mut work = order;
    while work <= order + MAX_EXTRA {
        match ctx.eval(e, work)? {
            Step::Done(s) if s.order() >= order => return Ok(s.truncate(order)),
            Step::Done(s) => work += order - s.order(),
            Step::NeedMore => work += 1.max(work / 2),
        }
    }
    Err(ExprError::DivisionByZero)
}
