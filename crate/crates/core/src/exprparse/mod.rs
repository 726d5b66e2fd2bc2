//! A small expression language for power series in `t` (and λ).
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := unary (("*" | "/") unary)*
//! unary    := "-" unary | power
//! power    := atom ("^" exponent)?
//! atom     := number | "t" | "lambda" | "(" expr ")" | ident "(" expr ")"
//! ident    := exp | log | sqrt
//! number   := integer | integer "/" integer
//! exponent := integer | "(" rational ")"
//! ```
//!
//! Whitespace is ignored and implicit multiplication is not supported.

mod eval;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::fps::{DeltaSeries, FpsError, Series};
use crate::presets::LambdaMode;
use crate::scalar::Rat;

pub use eval::eval_expr;
pub use parser::parse;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Log,
    Sqrt,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
        }
    }
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number(Rat),
    T,
    Lambda,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rat),
    Call(Func, Box<Expr>),
}

impl Expr {
    /// Whether λ occurs anywhere in the tree.
    pub fn mentions_lambda(&self) -> bool {
        match self {
            Expr::Lambda => true,
            Expr::Number(_) | Expr::T => false,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => a.mentions_lambda(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.mentions_lambda() || b.mentions_lambda()
            }
        }
    }

    fn starts_with_digit(&self) -> bool {
        match self {
            Expr::Number(r) => !r.is_negative(),
            Expr::Pow(a, _) => a.precedence() == 5 && a.starts_with_digit(),
            Expr::Add(a, _) | Expr::Sub(a, _) | Expr::Mul(a, _) | Expr::Div(a, _) => a.starts_with_digit(),
            _ => false,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Number(r) if r.is_negative() => 1,
            // a fraction literal reads as a division
            Expr::Number(r) if !r.is_integer() => 2,
            _ => 5,
        }
    }
}

fn wrap(e: &Expr, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(r) => write!(f, "{r}"),
            Expr::T => f.write_str("t"),
            Expr::Lambda => f.write_str("lambda"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                wrap(a, 3, f)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                wrap(a, 1, f)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                wrap(b, 2, f)
            }
            Expr::Mul(a, b) => {
                wrap(a, 2, f)?;
                f.write_str("*")?;
                wrap(b, 3, f)
            }
            // `a/2` must not print as the tail of a fraction literal
            Expr::Div(a, b) => {
                wrap(a, 2, f)?;
                f.write_str("/")?;
                if b.starts_with_digit() {
                    write!(f, "({b})")
                } else {
                    wrap(b, 3, f)
                }
            }
            Expr::Pow(a, r) => {
                wrap(a, 5, f)?;
                if r.is_integer() && !r.is_negative() {
                    write!(f, "^{r}")
                } else {
                    write!(f, "^({r})")
                }
            }
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: expected {}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<&'static str> },
    #[error("unknown function '{name}' at byte {offset}")]
    UnknownFunction { name: String, offset: usize },
    #[error("nesting deeper than {limit} at byte {offset}")]
    TooDeep { offset: usize, limit: usize },
    #[error("the expression uses lambda; pass --lambda symbolic or a rational value")]
    LambdaModeRequired,
    #[error("exponent {0} is not an integer and the base has zero constant term")]
    BadExponent(Rat),
    #[error("denominator vanishes to every working order tried")]
    DivisionByZero,
    #[error(transparent)]
    Fps(#[from] FpsError),
}

pub type Result<T> = std::result::Result<T, ExprError>;

/// Checks the delta-series conditions `s(0) = 0`, `s′(0)` invertible.
pub fn require_delta(s: Series) -> Result<DeltaSeries> {
    Ok(DeltaSeries::new(s)?)
}

/// Parses, evaluates and validates in one step.
pub fn delta_from_str(src: &str, order: usize, lambda: &LambdaMode) -> Result<DeltaSeries> {
    require_delta(eval_expr(&parse(src)?, order, lambda)?)
}

#[cfg(test)]
mod tests;
