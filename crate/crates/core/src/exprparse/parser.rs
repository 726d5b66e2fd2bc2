use num_bigint::BigInt;

use super::{Expr, ExprError, Func, Result};
use crate::scalar::Rat;

const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Next token and its byte offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start));
        };
        let take = |pred: fn(char) -> bool| rest.find(|ch: char| !pred(ch)).unwrap_or(rest.len());
        let (tok, len) = match c {
            '0'..='9' => {
                let len = take(|ch| ch.is_ascii_digit());
                (Tok::Int(rest[..len].parse().expect("digits")), len)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = take(|ch| ch.is_ascii_alphanumeric() || ch == '_');
                (Tok::Ident(rest[..len].to_string()), len)
            }
            '+' => (Tok::Plus, 1),
            '-' => (Tok::Minus, 1),
            '*' => (Tok::Star, 1),
            '/' => (Tok::Slash, 1),
            '^' => (Tok::Caret, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            _ => {
                return Err(ExprError::Syntax {
                    offset: start,
                    expected: vec!["number", "t", "lambda", "function", "operator", "parenthesis"],
                })
            }
        };
        self.pos += len;
        Ok((tok, start))
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
    at: usize,
    depth: usize,
}

const OPERAND: [&str; 5] = ["number", "t", "lambda", "(", "function"];

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut lex = Lexer { src, pos: 0 };
        let (tok, at) = lex.next()?;
        Ok(Parser { lex, tok, at, depth: 0 })
    }

    fn bump(&mut self) -> Result<(Tok, usize)> {
        let (next, at) = self.lex.next()?;
        let prev = std::mem::replace(&mut self.tok, next);
        let prev_at = std::mem::replace(&mut self.at, at);
        Ok((prev, prev_at))
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T> {
        Err(ExprError::Syntax { offset: self.at, expected: expected.to_vec() })
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<()> {
        if self.tok != tok {
            return self.fail(&[name]);
        }
        self.bump()?;
        Ok(())
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ExprError::TooDeep { offset: self.at, limit: MAX_DEPTH });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            let ctor = match self.tok {
                Tok::Plus => Expr::Add,
                Tok::Minus => Expr::Sub,
                _ => break,
            };
            self.bump()?;
            lhs = ctor(Box::new(lhs), Box::new(self.term()?));
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let ctor = match self.tok {
                Tok::Star => Expr::Mul,
                Tok::Slash => Expr::Div,
                _ => break,
            };
            self.bump()?;
            lhs = ctor(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.tok == Tok::Minus {
            self.enter()?;
            self.bump()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.tok != Tok::Caret {
            return Ok(base);
        }
        self.bump()?;
        let exp = match self.bump()? {
            (Tok::Int(n), _) => Rat::from(n),
            (Tok::LParen, _) => {
                let r = self.rational()?;
                self.expect(Tok::RParen, ")")?;
                r
            }
            (_, at) => return Err(ExprError::Syntax { offset: at, expected: vec!["integer", "("] }),
        };
        Ok(Expr::Pow(Box::new(base), exp))
    }

    /// `"-"? integer ("/" integer)?` inside an exponent.
    fn rational(&mut self) -> Result<Rat> {
        let negative = self.tok == Tok::Minus;
        if negative {
            self.bump()?;
        }
        let Tok::Int(num) = self.tok.clone() else {
            return self.fail(&["integer"]);
        };
        self.bump()?;
        let mut r = Rat::from(num);
        if self.tok == Tok::Slash {
            self.bump()?;
            r = self.denominator(&r)?;
        }
        Ok(if negative { -r } else { r })
    }

    fn denominator(&mut self, num: &Rat) -> Result<Rat> {
        let Tok::Int(den) = self.tok.clone() else {
            return self.fail(&["integer"]);
        };
        if den == BigInt::from(0) {
            return self.fail(&["nonzero integer"]);
        }
        self.bump()?;
        Ok(num.checked_div(&Rat::from(den)).expect("nonzero"))
    }

    fn atom(&mut self) -> Result<Expr> {
        let (tok, at) = self.bump()?;
        match tok {
            Tok::Int(n) => {
                let r = Rat::from(n);
                // `p/q` is a single literal when an integer follows the slash
                if self.tok == Tok::Slash && self.peek_is_int() {
                    self.bump()?;
                    return Ok(Expr::Number(self.denominator(&r)?));
                }
                Ok(Expr::Number(r))
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, ")")?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "t" => Ok(Expr::T),
                "lambda" => Ok(Expr::Lambda),
                _ => {
                    let func = match name.as_str() {
                        "exp" => Some(Func::Exp),
                        "log" => Some(Func::Log),
                        "sqrt" => Some(Func::Sqrt),
                        _ => None,
                    };
                    match (func, &self.tok) {
                        (Some(func), Tok::LParen) => {
                            self.bump()?;
                            let arg = self.expr()?;
                            self.expect(Tok::RParen, ")")?;
                            Ok(Expr::Call(func, Box::new(arg)))
                        }
                        (Some(_), _) => self.fail(&["("]),
                        (None, Tok::LParen) => Err(ExprError::UnknownFunction { name, offset: at }),
                        (None, _) => Err(ExprError::Syntax { offset: at, expected: OPERAND.to_vec() }),
                    }
                }
            },
            _ => Err(ExprError::Syntax { offset: at, expected: OPERAND.to_vec() }),
        }
    }

    fn peek_is_int(&self) -> bool {
        let mut look = Lexer { src: self.lex.src, pos: self.lex.pos };
        matches!(look.next(), Ok((Tok::Int(_), _)))
    }
}

/// Parses `src` into an expression tree.
pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return p.fail(&["operator", "end of input"]);
    }
    Ok(e)
}
