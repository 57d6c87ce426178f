//! Text syntax for polynomials: `3X^2 - 5/2X + 1`.
//!
//! A term is an optional coefficient (`7` or `a/b`), optionally followed by
//! `X` (or `x`) and `^k`; `*` between coefficient and `X` is accepted.
//! Terms are joined by `+` / `-`. Printing emits the same form, highest
//! degree first, so parse and print round-trip.

use std::fmt::{self, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Coeff, IntPoly, Poly, QZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial syntax error at byte {pos}: {message}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub message: String,
}

pub(crate) fn write_poly<C: Coeff + Display>(f: &mut fmt::Formatter<'_>, coeffs: &[C]) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let a = c.abs();
        if deg == 0 || !a.is_one() {
            write!(f, "{a}")?;
        }
        match deg {
            0 => {}
            1 => f.write_str("X")?,
            _ => write!(f, "X^{deg}")?,
        }
    }
    Ok(())
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> ParsePolyError {
        ParsePolyError { pos: self.pos, message: message.into() }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }
}

/// Parses into ℚ[X]; callers narrow the coefficient ring.
pub(crate) fn parse_rational_poly(src: &str) -> Result<Poly<BigRational>, ParsePolyError> {
    let mut cur = Cursor { src, pos: 0 };
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut first = true;
    loop {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            break;
        };
        if !first && cur.peek().is_none() {
            return Err(cur.err("dangling sign"));
        }
        first = false;

        let coeff = match cur.digits() {
            Some(num) => {
                let num: BigInt = num.parse().expect("digits");
                if cur.eat('/') {
                    let den: BigInt = cur
                        .digits()
                        .ok_or_else(|| cur.err("expected denominator"))?
                        .parse()
                        .expect("digits");
                    if den.is_zero() {
                        return Err(cur.err("zero denominator"));
                    }
                    Some(BigRational::new(num, den))
                } else {
                    Some(BigRational::from_integer(num))
                }
            }
            None => None,
        };
        if coeff.is_some() {
            cur.eat('*');
        }
        let degree = if cur.eat('X') || cur.eat('x') {
            if cur.eat('^') {
                let d = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
                d.parse::<usize>().map_err(|_| cur.err("exponent too large"))?
            } else {
                1
            }
        } else {
            if coeff.is_none() {
                return Err(cur.err("expected a coefficient or X"));
            }
            0
        };
        let mut c = coeff.unwrap_or_else(BigRational::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigRational::zero());
        }
        coeffs[degree] += c;
    }
    if cur.peek().is_some() {
        return Err(cur.err("unexpected input"));
    }
    Ok(Poly::new(coeffs))
}

impl FromStr for IntPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let q = parse_rational_poly(s)?;
        if let Some(i) = q.coeffs().iter().position(|c| !c.is_integer()) {
            return Err(ParsePolyError {
                pos: 0,
                message: format!("coefficient of X^{i} is not an integer"),
            });
        }
        Ok(q.map(|c| c.to_integer()))
    }
}

impl FromStr for QZPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let q = parse_rational_poly(s)?;
        QZPoly::new(q).map_err(|_| ParsePolyError {
            pos: 0,
            message: "constant term must be an integer".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let f: QZPoly = "3X^2 - 5/2X + 1".parse().unwrap();
        assert_eq!(f.to_string(), "3X^2 - 5/2X + 1");
        let g: IntPoly = "x^2+4".parse().unwrap();
        assert_eq!(g, IntPoly::from_i64s(&[4, 0, 1]));
        let h: IntPoly = "-X + 2*X^3 - 7".parse().unwrap();
        assert_eq!(h, IntPoly::from_i64s(&[-7, -1, 0, 2]));
        assert_eq!(h.to_string(), "2X^3 - X - 7");
        assert_eq!("0".parse::<IntPoly>().unwrap().to_string(), "0");
        assert_eq!("X + 1 - X".parse::<IntPoly>().unwrap().to_string(), "1");
    }

    #[test]
    fn parse_errors() {
        assert!("X +".parse::<IntPoly>().is_err());
        assert!("1/2X".parse::<IntPoly>().is_err());
        assert!("X + 1/2".parse::<QZPoly>().is_err());
        assert!("3/0".parse::<QZPoly>().is_err());
        let e = "X ? 2".parse::<IntPoly>().unwrap_err();
        assert_eq!(e.pos, 2);
        assert!("".parse::<IntPoly>().is_err());
    }
}
