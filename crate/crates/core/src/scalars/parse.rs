//! Text parsers for the scalar serializations.
//!
//! Exact grammar (whitespace ignored):
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := '(' expr ')' | number | "sqrt2" | 'i'
//! number := digits ('.' digits)? ('/' digits)?
//! ```
//!
//! which covers the canonical `(re)+(im)i` form as well as hand-typed input
//! such as `-1/2+1/2i`. Quaternions are sums of signed terms `coef`,
//! `coef*u` or `coef u` with `u` one of `i`, `j`, `k`.

use num_bigint::BigInt;
use num_traits::{Num, Zero};

use super::{ExactComplex, ExactScalar, ParseError, Quaternion, Rational};

struct Cursor<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    kind: &'static str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, kind: &'static str) -> Self {
        Self {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            kind,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        let n = w.chars().count();
        if self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n]
                .iter()
                .copied()
                .eq(w.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn err(&self, reason: impl Into<String>) -> ParseError {
        ParseError::new(
            self.kind,
            self.src,
            format!("{} at offset {}", reason.into(), self.pos),
        )
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            out.push(c);
            self.pos += 1;
        }
        out
    }

    /// digits ('.' digits)? ('/' digits)? as an exact rational.
    fn exact_number(&mut self) -> Result<Rational, ParseError> {
        let int = self.digits();
        let mut value = if self.eat('.') {
            let frac = self.digits();
            if int.is_empty() && frac.is_empty() {
                return Err(self.err("expected digits"));
            }
            let num = BigInt::from_str_radix(&format!("{int}{frac}"), 10)
                .map_err(|e| self.err(e.to_string()))?;
            Rational::new(num, BigInt::from(10).pow(frac.len() as u32))
        } else {
            if int.is_empty() {
                return Err(self.err("expected digits"));
            }
            Rational::from_integer(
                BigInt::from_str_radix(&int, 10).map_err(|e| self.err(e.to_string()))?,
            )
        };
        if self.eat('/') {
            let den = self.digits();
            if den.is_empty() {
                return Err(self.err("expected denominator digits"));
            }
            let den = BigInt::from_str_radix(&den, 10).map_err(|e| self.err(e.to_string()))?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            value /= Rational::from_integer(den);
        }
        Ok(value)
    }

    fn exact_expr(&mut self) -> Result<ExactComplex, ParseError> {
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let mut acc = self.exact_term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = acc + self.exact_term()?;
            } else if self.eat('-') {
                acc = acc - self.exact_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(c) if c == '(' || c == 'i' || c == 's' || c == '.' || c.is_ascii_digit())
    }

    fn exact_term(&mut self) -> Result<ExactComplex, ParseError> {
        let mut acc = self.exact_factor()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                acc = acc * self.exact_factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn exact_factor(&mut self) -> Result<ExactComplex, ParseError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.exact_expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some('i') => {
                self.bump();
                Ok(ExactComplex::i())
            }
            Some('s') => {
                if self.eat_word("sqrt2") {
                    Ok(ExactComplex::real(ExactScalar::sqrt2()))
                } else {
                    Err(self.err("unknown symbol"))
                }
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                Ok(ExactComplex::real(self.exact_number()?.into()))
            }
            Some(c) => Err(self.err(format!("unexpected {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    /// A float coefficient: decimal with optional exponent, or `p/q`.
    fn float_number(&mut self) -> Result<f64, ParseError> {
        let start = self.pos;
        self.digits();
        if self.eat('.') {
            self.digits();
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            self.bump();
            if !self.eat('-') {
                self.eat('+');
            }
            self.digits();
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let mut value: f64 = text
            .parse()
            .map_err(|_| self.err(format!("bad number {text:?}")))?;
        if self.eat('/') {
            let den = self.digits();
            let den: f64 = den
                .parse()
                .map_err(|_| self.err("expected denominator digits"))?;
            if den == 0.0 {
                return Err(self.err("zero denominator"));
            }
            value /= den;
        }
        Ok(value)
    }

    fn quat_term(&mut self) -> Result<Quaternion, ParseError> {
        let coef = if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            let v = self.float_number()?;
            self.eat('*');
            Some(v)
        } else {
            None
        };
        let unit = match self.peek() {
            Some('i') => Some(Quaternion::I),
            Some('j') => Some(Quaternion::J),
            Some('k') => Some(Quaternion::K),
            _ => None,
        };
        if unit.is_some() {
            self.bump();
        }
        match (coef, unit) {
            (None, None) => Err(self.err("expected a quaternion term")),
            (Some(c), None) => Ok(Quaternion::real(c)),
            (c, Some(u)) => Ok(u.scale(c.unwrap_or(1.0))),
        }
    }
}

pub(super) fn parse_exact_complex(s: &str) -> Result<ExactComplex, ParseError> {
    let mut cur = Cursor::new(s, "ExactComplex");
    let z = cur.exact_expr()?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    Ok(z)
}

pub(super) fn parse_quaternion(s: &str) -> Result<Quaternion, ParseError> {
    let mut cur = Cursor::new(s, "Quaternion");
    let mut acc = Quaternion::ZERO;
    let mut first = true;
    loop {
        let negate = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else if cur.at_end() {
            return Ok(acc);
        } else {
            return Err(cur.err("expected '+' or '-'"));
        };
        let t = cur.quat_term()?;
        acc = acc + if negate { -t } else { t };
        first = false;
    }
}
