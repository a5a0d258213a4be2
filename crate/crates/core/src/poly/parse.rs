//! A small infix parser for polynomials with rational coefficients.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := number | identifier | '(' expr ')'
//! ```
//!
//! Identifiers resolve first to context variables, then to named rational
//! symbols. Division is only allowed by a nonzero constant.

use std::collections::HashMap;

use num_traits::Zero;
use thiserror::Error;

use super::{Ctx, Poly};
use crate::scalar::parse_rational;
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push((pos, Tok::Plus));
                i += 1;
            }
            // U+2212 shows up when displays are pasted from typeset text.
            '-' | '\u{2212}' => {
                out.push((pos, Tok::Minus));
                i += 1;
            }
            '*' | '\u{00b7}' => {
                out.push((pos, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((pos, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((pos, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1;
            }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                let value = parse_rational(&text).ok_or_else(|| ParseError {
                    offset: pos,
                    message: format!("malformed number `{text}`"),
                })?;
                out.push((pos, Tok::Num(value)));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((pos, Tok::Ident(text)));
            }
            other => {
                return Err(ParseError {
                    offset: pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ctx: &'a Ctx,
    symbols: &'a HashMap<String, Rational>,
}

type QPoly = Poly<Rational>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let at = self.offset();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(ParseError {
                            offset: at,
                            message: "division by a non-constant or zero".into(),
                        });
                    }
                    let inv = Rational::from_integer(1.into()) / d.constant_term();
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QPoly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) if n.is_integer() && n >= Rational::zero() => {
                    self.at += 1;
                    let e: u32 = n.to_integer().try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<QPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(QPoly::constant(self.ctx, n))
            }
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.ctx.index_of(&name) {
                    self.at += 1;
                    Ok(QPoly::var_at(self.ctx, i))
                } else if let Some(v) = self.symbols.get(&name) {
                    self.at += 1;
                    Ok(QPoly::constant(self.ctx, v.clone()))
                } else {
                    Err(self.err(format!("unknown identifier `{name}`")))
                }
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(_) => Err(self.err("unexpected token")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses `src` in `ctx`, resolving non-context identifiers from `symbols`.
pub fn parse_poly_with(ctx: &Ctx, src: &str, symbols: &HashMap<String, Rational>) -> Result<QPoly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
        ctx,
        symbols,
    };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_poly(ctx: &Ctx, src: &str) -> Result<QPoly, ParseError> {
    parse_poly_with(ctx, src, &HashMap::new())
}

/// Parses `"<poly> ; name=value, name=value"`, e.g.
/// `"w + a*u^2 + b*u^3 ; a=1, b=-1/3"`.
///
/// Returns the polynomial and the assignments in input order.
pub fn parse_with_assignments(ctx: &Ctx, src: &str) -> Result<(QPoly, Vec<(String, Rational)>), ParseError> {
    let (body, assigns) = match src.split_once(';') {
        Some((b, a)) => (b, a),
        None => (src, ""),
    };
    let base = body.len() + 1;
    let mut symbols = HashMap::new();
    let mut order = Vec::new();
    let mut offset = base;
    for part in assigns.split(',') {
        let here = offset;
        offset += part.len() + 1;
        if part.trim().is_empty() {
            continue;
        }
        let Some((name, value)) = part.split_once('=') else {
            return Err(ParseError {
                offset: here,
                message: format!("expected `name=value`, got `{}`", part.trim()),
            });
        };
        let name = name.trim().to_string();
        let value = parse_rational(value).ok_or_else(|| ParseError {
            offset: here,
            message: format!("malformed rational `{}`", value.trim()),
        })?;
        symbols.insert(name.clone(), value.clone());
        order.push((name, value));
    }
    let poly = parse_poly_with(ctx, body, &symbols)?;
    Ok((poly, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarContext;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn germ_with_assignments() {
        let ctx = VarContext::new(["u", "v", "w"]).unwrap();
        let (g, assigns) = parse_with_assignments(&ctx, "w+a*u^2+b*u^3 ; a=1/4, b=1").unwrap();
        assert_eq!(g, parse_poly(&ctx, "w + 1/4*u^2 + u^3").unwrap());
        assert_eq!(assigns[0], ("a".to_string(), q(1, 4)));
    }

    #[test]
    fn juxtaposition_and_unicode_minus() {
        let ctx = VarContext::new(["t", "a2"]).unwrap();
        let s: HashMap<_, _> = [("a".to_string(), q(2, 1))].into_iter().collect();
        let p = parse_poly_with(&ctx, "\u{2212}12 a t^4 + 4a2 t^2", &s).unwrap();
        assert_eq!(p, parse_poly(&ctx, "-24*t^4 + 4*a2*t^2").unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        let ctx = VarContext::new(["u"]).unwrap();
        let e = parse_poly(&ctx, "u + z").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(parse_poly(&ctx, "u/u").is_err());
        assert!(parse_poly(&ctx, "u^-1").is_err());
        assert!(parse_poly(&ctx, "(u").is_err());
        assert!(parse_with_assignments(&ctx, "u ; a=1/0").is_err());
    }
}
