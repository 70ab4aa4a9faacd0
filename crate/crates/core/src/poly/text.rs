//! Text form of polynomials.
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := [coeff '*'] 't' ['^' int] | coeff
//! coeff := int                      prime fields: residue mod p
//!                                   extension fields: serialized element
//!        | '{' int (',' int)* '}'   base-p digits, constant first
//! ```
//!
//! Whitespace between tokens is ignored. `−` (U+2212) is accepted as minus.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use thiserror::Error;

use super::Poly;
use crate::field::{Fe, Field};

/// Largest exponent accepted by the parser.
const MAX_POWER: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    Unexpected(char),
    UnexpectedEnd,
    BadInteger,
    CoefficientOutOfRange(u64),
    TooManyDigits,
    PowerTooLarge,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => f.write_str("empty input"),
            ParseErrorKind::Unexpected(c) => write!(f, "unexpected character '{c}'"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::BadInteger => f.write_str("malformed integer"),
            ParseErrorKind::CoefficientOutOfRange(v) => {
                write!(f, "coefficient {v} out of range")
            }
            ParseErrorKind::TooManyDigits => f.write_str("too many digits in braced coefficient"),
            ParseErrorKind::PowerTooLarge => f.write_str("exponent too large"),
        }
    }
}

/// A syntax error at a character offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    field: &'a Field,
}

impl Parser<'_> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(ParseErrorKind::Unexpected(c))),
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or(ParseError {
                    position: start,
                    kind: ParseErrorKind::BadInteger,
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(match self.chars.get(self.pos) {
                Some(&c) => self.err(ParseErrorKind::Unexpected(c)),
                None => self.err(ParseErrorKind::UnexpectedEnd),
            });
        }
        Ok(v)
    }

    fn coefficient(&mut self) -> Result<Fe, ParseError> {
        let start = self.pos;
        if self.peek() == Some('{') {
            self.pos += 1;
            let mut digits = vec![self.digit()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                digits.push(self.digit()?);
            }
            self.expect('}')?;
            if digits.len() > self.field.m() as usize {
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::TooManyDigits,
                });
            }
            Ok(self.field.from_digits(&digits).expect("digits checked"))
        } else {
            let v = self.integer()?;
            self.field.element(v).map_err(|_| ParseError {
                position: start,
                kind: ParseErrorKind::CoefficientOutOfRange(v),
            })
        }
    }

    fn digit(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let v = self.integer()?;
        if v >= u64::from(self.field.p()) {
            return Err(ParseError {
                position: start,
                kind: ParseErrorKind::CoefficientOutOfRange(v),
            });
        }
        Ok(v as u32)
    }

    /// Returns `(coefficient, power)`.
    fn term(&mut self) -> Result<(Fe, usize), ParseError> {
        let coeff = match self.peek() {
            Some('t') => Fe::ONE,
            Some(_) => {
                let c = self.coefficient()?;
                if self.peek() != Some('*') {
                    return Ok((c, 0));
                }
                self.pos += 1;
                c
            }
            None => return Err(self.err(ParseErrorKind::UnexpectedEnd)),
        };
        self.expect('t')?;
        let mut power = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            let v = self.integer()?;
            if v > MAX_POWER as u64 {
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::PowerTooLarge,
                });
            }
            power = v as usize;
        }
        Ok((coeff, power))
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn poly(&mut self) -> Result<Vec<Fe>, ParseError> {
        if self.peek().is_none() {
            return Err(self.err(ParseErrorKind::Empty));
        }
        let f = self.field;
        let mut coeffs: Vec<Fe> = Vec::new();
        let mut negate = self.sign().unwrap_or(false);
        loop {
            let (mut c, power) = self.term()?;
            if negate {
                c = f.neg(c);
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Fe::ZERO);
            }
            coeffs[power] = f.add(coeffs[power], c);
            match self.sign() {
                Some(n) => negate = n,
                None => match self.peek() {
                    None => break,
                    Some(c) => return Err(self.err(ParseErrorKind::Unexpected(c))),
                },
            }
        }
        Ok(coeffs)
    }
}

/// Parses the text form of a polynomial over `field`.
pub fn parse_poly(text: &str, field: &Arc<Field>) -> Result<Poly, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        field,
    };
    let coeffs = parser.poly()?;
    Ok(Poly::from_coeffs(field, coeffs))
}

fn write_coeff(out: &mut String, field: &Field, c: Fe) {
    if field.m() == 1 {
        let _ = write!(out, "{}", c.value());
    } else {
        out.push('{');
        for (i, d) in field.digits(c).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{d}");
        }
        out.push('}');
    }
}

/// Canonical text: descending powers, zero terms dropped, unit coefficients
/// on positive powers omitted, terms joined by `+`.
pub fn format_poly(poly: &Poly) -> String {
    let field = &**poly.field();
    let coeffs = poly.coeffs();
    if coeffs.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (power, &c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        if power == 0 {
            write_coeff(&mut out, field, c);
            continue;
        }
        if c != Fe::ONE {
            write_coeff(&mut out, field, c);
            out.push('*');
        }
        out.push('t');
        if power > 1 {
            let _ = write!(out, "^{power}");
        }
    }
    out
}
