//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := '-'? base ('^' nat)?
//! base   := coeff | var | '(' expr ')'
//! coeff  := nat ('/' posnat)?
//! ```
//!
//! Whitespace is ignored. A leading `-` negates the whole power, so `-x^2`
//! is `-(x^2)`. Over `Z/n` and `F_p`, `a/b` is `a` times the inverse of `b`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{PolyRing, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
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

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Num(digits.parse().expect("ascii digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax { pos: start, message: format!("unexpected character `{other}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        Error::Syntax { pos: self.pos(), message: format!("expected {wanted}, found {}", describe(self.peek())) }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut base = self.base()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            let exp = match self.bump().0 {
                Tok::Num(n) => u32::try_from(&n)
                    .map_err(|_| Error::Syntax { pos, message: format!("exponent {n} is too large") })?,
                other => {
                    return Err(Error::Syntax {
                        pos,
                        message: format!("expected exponent, found {}", describe(&other)),
                    })
                }
            };
            base = base.pow(exp)?;
        }
        Ok(if negate { base.negated() } else { base })
    }

    fn base(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Num(num) => {
                self.bump();
                let den = if *self.peek() == Tok::Slash {
                    self.bump();
                    let den_pos = self.pos();
                    match self.bump().0 {
                        Tok::Num(d) => {
                            if d.is_zero() {
                                return Err(Error::BadCoefficient { pos: den_pos, message: "zero denominator".into() });
                            }
                            d
                        }
                        other => {
                            return Err(Error::Syntax {
                                pos: den_pos,
                                message: format!("expected denominator, found {}", describe(&other)),
                            })
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                let domain = self.ring.domain();
                let c = domain.fraction(num.clone(), den.clone()).map_err(|e| Error::BadCoefficient {
                    pos,
                    message: format!("{num}/{den} is not an element of {domain}: {e}"),
                })?;
                Ok(self.ring.constant(&c))
            }
            Tok::Ident(name) => {
                self.bump();
                self.ring.variable(&name).map_err(|_| Error::UnknownVariable { name, pos })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or `(`")),
        }
    }
}

pub(super) fn parse(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    let mut p = Parser { ring, toks: lex(text)?, at: 0 };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}

/// Identifiers appearing in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for (t, _) in lex(text)? {
        if let Tok::Ident(s) = t {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}
