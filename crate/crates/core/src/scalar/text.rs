//! Canonical textual forms: `p/q` (or `p`), `c0 + c1*l + c2*l^2`, and
//! `(num)/(den)`.

use std::fmt;
use std::str::FromStr;

use super::{lrat_reduce, LPoly, LRat, Rat, Scalar, ScalarError};

fn write_lpoly(p: &LPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = if first {
            c.clone()
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
            c.abs()
        };
        first = false;
        match i {
            0 => write!(f, "{mag}")?,
            _ => {
                if mag.is_one() {
                } else if (-&mag).is_one() {
                    f.write_str("-")?;
                } else {
                    write!(f, "{mag}*")?;
                }
                f.write_str("l")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_lpoly(self, f)
    }
}

impl fmt::Display for LRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num(), self.den())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::QL(p) => write!(f, "{p}"),
            Scalar::QLrat(q) => write!(f, "{q}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

fn parse_lpoly(src: &str) -> Result<LPoly, ScalarError> {
    let bad = || ScalarError::Parse(src.to_string());
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cur = Cursor { src: compact.as_bytes(), pos: 0 };
    let mut acc = LPoly::zero();
    let mut first = true;
    while cur.peek().is_some() || first {
        let negative = if cur.eat(b'-') {
            true
        } else {
            if !cur.eat(b'+') && !first {
                return Err(bad());
            }
            false
        };
        first = false;
        let (coeff, had_number) = match cur.digits() {
            Some(n) => {
                let n = n.to_string();
                let c = if cur.eat(b'/') {
                    let d = cur.digits().ok_or_else(bad)?.to_string();
                    format!("{n}/{d}").parse::<Rat>()?
                } else {
                    n.parse::<Rat>()?
                };
                (c, true)
            }
            None => (Rat::one(), false),
        };
        let has_var = if had_number {
            if cur.eat(b'*') {
                if !cur.eat(b'l') {
                    return Err(bad());
                }
                true
            } else {
                false
            }
        } else if cur.eat(b'l') {
            true
        } else {
            return Err(bad());
        };
        let degree = if !has_var {
            0
        } else if cur.eat(b'^') {
            cur.digits().ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?
        } else {
            1
        };
        let coeff = if negative { -coeff } else { coeff };
        acc = &acc + &LPoly::monomial(coeff, degree);
    }
    Ok(acc)
}

impl FromStr for LPoly {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_lpoly(s)
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (num, den) = rest.split_once(")/(").ok_or_else(|| ScalarError::Parse(s.to_string()))?;
            let den = den.strip_suffix(')').ok_or_else(|| ScalarError::Parse(s.to_string()))?;
            return lrat_reduce(&parse_lpoly(num)?, &parse_lpoly(den)?);
        }
        if t.contains('l') {
            return Ok(Scalar::from_lpoly(parse_lpoly(t)?));
        }
        Ok(Scalar::Q(t.parse()?))
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(s: &str) {
        let v: Scalar = s.parse().unwrap();
        assert_eq!(v.to_string(), s, "canonical print of {s}");
        assert_eq!(v.to_string().parse::<Scalar>().unwrap(), v);
    }

    #[test]
    fn canonical_forms_round_trip() {
        for s in [
            "0",
            "-7",
            "5/6",
            "-1 + l",
            "l",
            "-l^2",
            "1/2 - 3/4*l + l^3",
            "(1)/(l)",
            "(-1/2)/(1 + l)",
            "(l)/(-1 + l^2)",
        ] {
            round_trip(s);
        }
    }

    #[test]
    fn accepts_non_canonical_input() {
        let v: Scalar = "2*l - l + 3/6".parse().unwrap();
        assert_eq!(v, "1/2 + l".parse().unwrap());
        let w: Scalar = "(2*l - 2)/(l^2 - 1)".parse().unwrap();
        assert_eq!(w.to_string(), "(2)/(1 + l)");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "l^", "1*", "(1)/", "2x", "1 +", "(1)/(0)"] {
            assert!(s.parse::<Scalar>().is_err(), "{s}");
        }
    }
}
