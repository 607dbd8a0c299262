//! Text syntax for cyclotomic values: `E(n)^k` for ζ_n^k, integer and
//! rational literals, `+`, `-`, `*`. Whitespace is insignificant. Printing
//! emits the canonical reduced form at minimal conductor, e.g.
//! `2*E(5)^2-E(5)+1/2`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse::<BigInt>().unwrap())
    }

    fn parse_sint(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat(b'-');
        let v = self.parse_uint()?;
        Ok(if neg { -v } else { v })
    }

    // number := uint ('/' uint)?
    fn parse_number(&mut self) -> Result<Cyclotomic, ParseError> {
        let numer = self.parse_uint()?;
        if self.eat(b'/') {
            let denom = self.parse_uint()?;
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Cyclotomic::from_rational(BigRational::new(numer, denom)))
        } else {
            Ok(Cyclotomic::from_rational(BigRational::from_integer(numer)))
        }
    }

    // primary := number | 'E' '(' uint ')' | '(' expr ')'
    fn parse_primary(&mut self) -> Result<Cyclotomic, ParseError> {
        match self.peek() {
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(')?;
                let n = self.parse_uint()?;
                self.expect(b')')?;
                let n = u64::try_from(&n).map_err(|_| self.error("root order too large"))?;
                if n == 0 {
                    return Err(self.error("root order must be positive"));
                }
                if self.eat(b'^') {
                    let e = self.parse_sint()?;
                    let e = i64::try_from(&e).map_err(|_| self.error("exponent too large"))?;
                    Ok(Cyclotomic::zeta(n, e))
                } else {
                    Ok(Cyclotomic::zeta(n, 1))
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.parse_expr()?;
                self.expect(b')')?;
                if self.eat(b'^') {
                    let e = self.parse_sint()?;
                    let e = i64::try_from(&e).map_err(|_| self.error("exponent too large"))?;
                    pow_value(&v, e).ok_or_else(|| {
                        self.error("negative exponent of a value that is not a root of unity")
                    })
                } else {
                    Ok(v)
                }
            }
            Some(c) if c.is_ascii_digit() => self.parse_number(),
            _ => Err(self.error("expected a number, E(n), or a parenthesized expression")),
        }
    }

    // factor := ('-'|'+')* primary
    fn parse_factor(&mut self) -> Result<Cyclotomic, ParseError> {
        let mut negate = false;
        loop {
            match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    negate = !negate;
                }
                Some(b'+') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let v = self.parse_primary()?;
        Ok(if negate { -&v } else { v })
    }

    // term := factor ('*' factor)*
    fn parse_term(&mut self) -> Result<Cyclotomic, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.eat(b'*') {
            let rhs = self.parse_factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    // expr := term (('+'|'-') term)*
    fn parse_expr(&mut self) -> Result<Cyclotomic, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = &acc + &rhs;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

fn pow_value(base: &Cyclotomic, e: i64) -> Option<Cyclotomic> {
    if e >= 0 {
        let mut acc = Cyclotomic::one();
        for _ in 0..e {
            acc = &acc * base;
        }
        Some(acc)
    } else {
        // negative powers only for roots of unity
        let root = base.as_root_of_unity()?;
        Some(root.pow(e).to_cyclotomic())
    }
}

pub fn parse_cyclotomic(s: &str) -> Result<Cyclotomic, ParseError> {
    let mut p = Parser::new(s);
    let v = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

/// Parses a comma-separated list of cyclotomic expressions.
pub fn parse_cyclotomic_list(s: &str) -> Result<Vec<Cyclotomic>, ParseError> {
    s.split(',').map(|part| parse_cyclotomic(part)).collect()
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(super) fn format_cyclotomic(v: &Cyclotomic, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let red = v.reduced();
    if red.is_zero() {
        return write!(f, "0");
    }
    let n = red.order();
    let mut first = true;
    for (i, c) in red.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let neg = c.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        if i == 0 {
            write!(f, "{}", format_rational(&mag))?;
        } else {
            if !mag.is_one() {
                write!(f, "{}*", format_rational(&mag))?;
            }
            if i == 1 {
                write!(f, "E({n})")?;
            } else {
                write!(f, "E({n})^{i}")?;
            }
        }
    }
    Ok(())
}
