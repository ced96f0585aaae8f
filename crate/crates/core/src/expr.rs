//! A small recursive-descent parser shared by the text formats of field
//! elements and algebra elements.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := unary (('*'|'/')? unary)*        juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := atom ('^' ['-'] integer)?
//! atom    := integer | symbol | '(' expr ')'
//! ```

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError { pos, msg: msg.into() }
    }
}

/// Values the parser can build. `symbol` receives single-letter identifiers.
pub trait ExprValue: Sized {
    type Ctx;
    fn integer(ctx: &Self::Ctx, n: BigInt) -> Self;
    fn symbol(ctx: &Self::Ctx, name: char) -> Result<Self, String>;
    fn add(self, rhs: Self) -> Result<Self, String>;
    fn sub(self, rhs: Self) -> Result<Self, String>;
    fn mul(self, rhs: Self) -> Result<Self, String>;
    fn div(self, rhs: Self) -> Result<Self, String>;
    fn neg(self) -> Self;
    fn pow(self, exp: i64) -> Result<Self, String>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
            }
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                out.push((i, Tok::Sym(c)));
                i += 1;
            }
            _ => return Err(ParseError::new(i, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'c, C> {
    ctx: &'c C,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<C> Parser<'_, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.offset(), msg)
    }

    fn lift<T>(&self, at: usize, r: Result<T, String>) -> Result<T, ParseError> {
        r.map_err(|m| ParseError::new(at, m))
    }

    fn expr<V: ExprValue<Ctx = C>>(&mut self) -> Result<V, ParseError> {
        let mut acc: V = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term::<V>()?.neg()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            let at = self.offset();
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.lift(at, acc.add(rhs))?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.lift(at, acc.sub(rhs))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<V: ExprValue<Ctx = C>>(&mut self) -> Result<V, ParseError> {
        let mut acc: V = self.unary()?;
        loop {
            let at = self.offset();
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.lift(at, acc.mul(rhs))?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.lift(at, acc.div(rhs))?;
                }
                Some(Tok::Int(_)) | Some(Tok::Sym(_)) | Some(Tok::LParen) => {
                    let rhs = self.unary()?;
                    acc = self.lift(at, acc.mul(rhs))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary<V: ExprValue<Ctx = C>>(&mut self) -> Result<V, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.unary::<V>()?.neg());
        }
        self.power()
    }

    fn power<V: ExprValue<Ctx = C>>(&mut self) -> Result<V, ParseError> {
        let base: V = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            let at = self.offset();
            self.pos += 1;
            let negative = if let Some(Tok::Minus) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let n = match self.peek() {
                Some(Tok::Int(n)) => {
                    let n: i64 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    n
                }
                _ => return Err(self.err("expected integer exponent")),
            };
            let n = if negative { -n } else { n };
            return self.lift(at, base.pow(n));
        }
        Ok(base)
    }

    fn atom<V: ExprValue<Ctx = C>>(&mut self) -> Result<V, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(V::integer(self.ctx, n))
            }
            Some(Tok::Sym(c)) => {
                self.pos += 1;
                self.lift(at, V::symbol(self.ctx, c))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            Some(_) => Err(self.err("unexpected token")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a complete expression.
pub fn parse<V: ExprValue>(ctx: &V::Ctx, src: &str) -> Result<V, ParseError> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let mut p = Parser { ctx, toks, pos: 0, end: src.len() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}
