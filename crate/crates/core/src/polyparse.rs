//! Text format for polynomials.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant, multiplication is always explicit, and the
//! only variable names are the registry names (`x1 x2 x3 eta xi psi x y`).
//! [`print`] emits the canonical graded-lex form and `parse(print(p)) == p`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::polyring::{Monomial, Polynomial, Rational, VarId};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected {
        expected: &'static str,
        found: String,
    },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("exponent exceeds {MAX_EXPONENT}")]
    ExponentOverflow,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// A parse failure at a 1-based byte offset into the source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

/// A parse failure inside a multi-line corpus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct LineError {
    pub line: usize,
    pub source: ParseError,
}

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

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse::<BigInt>().expect("digits");
                out.push((Tok::Int(n), start + 1));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start + 1));
                continue;
            }
            _ => {
                let c = src[i..].chars().next().unwrap();
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(c),
                    offset: start + 1,
                });
            }
        };
        i += 1;
        out.push((tok, start + 1));
    }
    out.push((Tok::End, src.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            kind: ParseErrorKind::Unexpected {
                expected,
                found: self.peek().to_string(),
            },
            offset: self.offset(),
        }
    }

    /// Precedence climbing over `+ -` (1) and `*` (2). A leading unary minus
    /// is accepted only at the head of an expression.
    fn binary(&mut self, min_prec: u8) -> Result<Polynomial, ParseError> {
        let mut lhs = if min_prec <= 1 && *self.peek() == Tok::Minus {
            self.bump();
            -self.binary(2)?
        } else {
            self.factor()?
        };
        loop {
            let prec = match self.peek() {
                Tok::Plus | Tok::Minus => 1,
                Tok::Star => 2,
                _ => break,
            };
            if prec < min_prec {
                break;
            }
            let op = self.bump();
            let rhs = self.binary(prec + 1)?;
            lhs = match op {
                Tok::Plus => lhs + rhs,
                Tok::Minus => lhs - rhs,
                _ => lhs * rhs,
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => {
                if n > BigInt::from(MAX_EXPONENT) {
                    return Err(ParseError {
                        kind: ParseErrorKind::ExponentOverflow,
                        offset: at,
                    });
                }
                let e: u32 = n.try_into().expect("bounded exponent");
                Ok(base.pow(e))
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected("unsigned exponent"))
            }
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Polynomial::constant(Rational::from_integer(num)));
                }
                self.bump();
                let den_at = self.offset();
                match self.peek().clone() {
                    Tok::Int(den) => {
                        self.bump();
                        if den.is_zero() {
                            return Err(ParseError {
                                kind: ParseErrorKind::ZeroDenominator,
                                offset: den_at,
                            });
                        }
                        Ok(Polynomial::constant(Rational::new(num, den)))
                    }
                    _ => Err(self.unexpected("denominator")),
                }
            }
            Tok::Ident(name) => {
                self.bump();
                VarId::from_name(&name)
                    .map(Polynomial::var)
                    .ok_or(ParseError {
                        kind: ParseErrorKind::UnknownVariable(name),
                        offset: at,
                    })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.binary(1)?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("number, variable or '('")),
        }
    }
}

pub fn parse(src: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let poly = p.binary(1)?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("operator or end of input"));
    }
    Ok(poly)
}

/// Parses a corpus: one polynomial per line, blank lines and lines starting
/// with `#` skipped.
pub fn parse_lines(text: &str) -> Result<Vec<Polynomial>, LineError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| {
            parse(l).map_err(|source| LineError {
                line: i + 1,
                source,
            })
        })
        .collect()
}

fn write_rational(out: &mut String, r: &Rational) {
    out.push_str(&r.numer().to_string());
    if !r.denom().is_one() {
        out.push('/');
        out.push_str(&r.denom().to_string());
    }
}

fn write_monomial(out: &mut String, m: &Monomial) {
    for (i, (v, e)) in m.iter().enumerate() {
        if i > 0 {
            out.push('*');
        }
        out.push_str(v.name());
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Canonical text: graded-lex order, explicit `*` and `^`.
pub fn print(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            write_rational(&mut out, &a);
        } else {
            if !a.is_one() {
                write_rational(&mut out, &a);
                out.push('*');
            }
            write_monomial(&mut out, m);
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

impl std::str::FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
