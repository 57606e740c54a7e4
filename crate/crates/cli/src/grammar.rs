//! Polynomial expressions such as `q3*q3 - 2*q1*q5` or `(p1 + h2)^2/3`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*      division by constants only
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := number ('/' number)? | name index | '(' expr ')'
//! ```
//!
//! A variable is a letter followed by a non-negative index (`q12`, `x0`);
//! which letters are allowed, and what they mean, is up to the caller.

use std::fmt;

use num_traits::Zero;
use schurq_core::exactring::{int, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

pub fn parse_poly<F>(input: &str, variable: F) -> Result<Poly, ParseError>
where
    F: Fn(char, u32) -> Result<Poly, String>,
{
    let mut p = Parser { chars: input.chars().collect(), pos: 0, variable };
    p.skip_space();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let out = p.expr()?;
    p.skip_space();
    if !p.at_end() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(out)
}

/// A comma separated list of non-negative integers, e.g. `3,2,1`.
pub fn parse_index_list(input: &str) -> Result<Vec<u32>, ParseError> {
    parse_list(input, "a non-negative integer")
}

/// A comma separated list of integers, e.g. `1,-2,0`.
pub fn parse_int_list(input: &str) -> Result<Vec<i64>, ParseError> {
    parse_list(input, "an integer")
}

fn parse_list<T: std::str::FromStr>(input: &str, what: &str) -> Result<Vec<T>, ParseError> {
    let mut out = Vec::new();
    let mut column = 1;
    for piece in input.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        if trimmed.is_empty() && input.trim().is_empty() {
            return Ok(out);
        }
        let value = trimmed.parse::<T>().map_err(|_| ParseError {
            column: column + lead,
            message: format!("expected {what}, found '{trimmed}'"),
        })?;
        out.push(value);
        column += piece.chars().count() + 1;
    }
    Ok(out)
}

/// A rational literal `n` or `n/d`.
pub fn parse_rational(input: &str) -> Result<Rational, ParseError> {
    let p = parse_poly(input, |c, _| Err(format!("unexpected variable '{c}'")))?;
    if p.is_constant() {
        Ok(p.constant_term())
    } else {
        Err(ParseError { column: 1, message: "expected a rational number".into() })
    }
}

struct Parser<F> {
    chars: Vec<char>,
    pos: usize,
    variable: F,
}

impl<F: Fn(char, u32) -> Result<Poly, String>> Parser<F> {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_space(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { column: self.pos + 1, message: message.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_space();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let start = self.pos;
                let d = self.unary()?;
                if !d.is_constant() || d.constant_term().is_zero() {
                    return Err(ParseError {
                        column: start + 1,
                        message: "can only divide by a non-zero number".into(),
                    });
                }
                acc = acc.scale_by(&(int(1) / d.constant_term()));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_space();
        let start = self.pos;
        let e = self.integer().ok_or_else(|| self.error("expected an exponent"))?;
        match u32::try_from(e) {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => Err(ParseError { column: start + 1, message: format!("exponent must be at most {MAX_EXPONENT}") }),
        }
    }

    fn integer(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse() {
            Ok(v) => Some(v),
            Err(_) => {
                self.pos = start;
                None
            }
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_space();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().ok_or_else(|| self.error("number too large"))?;
                Ok(Poly::constant(Rational::from_integer(n.into())))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                let index = self.integer().ok_or_else(|| self.error(format!("expected an index after '{c}'")))?;
                let index = u32::try_from(index).map_err(|_| self.error("index too large"))?;
                (self.variable)(c, index).map_err(|message| ParseError { column: start + 1, message })
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use schurq_core::exactring::rat;

    fn q(c: char, k: u32) -> Result<Poly, String> {
        if c == 'q' {
            Ok(Poly::var(k))
        } else {
            Err(format!("unknown variable '{c}{k}'"))
        }
    }

    #[test]
    fn arithmetic() {
        let p = parse_poly("q3*q3 - 2*q1*q5", q).unwrap();
        assert_eq!(p, &Poly::var(3) * &Poly::var(3) - (&Poly::var(1) * &Poly::var(5)).scale_by(&int(2)));
        assert_eq!(parse_poly("q1^2", q).unwrap(), Poly::var(1).pow(2));
        assert_eq!(
            parse_poly("-(q1 + 1)/2", q).unwrap(),
            (Poly::var(1) + Poly::constant(int(1))).scale_by(&rat(-1, 2))
        );
        assert_eq!(parse_poly("3/4", q).unwrap(), Poly::constant(rat(3, 4)));
        assert_eq!(parse_poly("2 - 1 - 1", q).unwrap(), Poly::default());
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_poly("q1 + ", q).unwrap_err().column, 6);
        assert_eq!(
            parse_poly("q1 * y2", q).unwrap_err(),
            ParseError { column: 6, message: "unknown variable 'y2'".into() }
        );
        assert_eq!(parse_poly("q1 )", q).unwrap_err().column, 4);
        assert_eq!(parse_poly("q", q).unwrap_err().column, 2);
        assert_eq!(parse_poly("q1/q2", q).unwrap_err().column, 4);
        assert_eq!(parse_poly("q1^99", q).unwrap_err().column, 4);
        assert_eq!(parse_poly("", q).unwrap_err().message, "empty expression");
    }

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("3,2,1").unwrap(), vec![3, 2, 1]);
        assert_eq!(parse_index_list(" 4 ").unwrap(), vec![4]);
        assert_eq!(parse_index_list("").unwrap(), Vec::<u32>::new());
        assert_eq!(parse_index_list("3,x").unwrap_err().column, 3);
        assert_eq!(parse_int_list("1, -2").unwrap(), vec![1, -2]);
        assert_eq!(parse_int_list("1,,2").unwrap_err().column, 3);
        assert_eq!(parse_rational("-5/10").unwrap(), rat(-1, 2));
    }
}
