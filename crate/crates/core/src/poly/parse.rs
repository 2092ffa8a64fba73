//! Text syntax for polynomials: identifiers are variables (or coefficient
//! parameters), `^` raises to a non-negative integer power, `*` may be
//! omitted between a number and what follows it, and `p/q` is a rational.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{PolyRing, Polynomial};
use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), start));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(parse_err(i, format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

fn parse_err(offset: usize, msg: String) -> Error {
    Error::Parse {
        line: 1,
        col: offset + 1,
        msg,
    }
}

struct Parser<'a, F: Field> {
    lx: Lexer,
    ring: &'a Arc<PolyRing>,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> &Tok {
        &self.lx.toks[self.lx.pos].0
    }

    fn offset(&self) -> usize {
        self.lx.toks[self.lx.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.lx.toks[self.lx.pos].0.clone();
        if t != Tok::End {
            self.lx.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Sym('/') => {
                    let at = self.offset();
                    self.bump();
                    let d = self.unary()?;
                    let c = d.constant_value().filter(|c| !c.is_zero()).ok_or_else(|| {
                        parse_err(at, "division by a non-constant or zero".into())
                    })?;
                    acc = acc.scale(&c.inv());
                }
                Tok::Ident(_) | Tok::Sym('(') | Tok::Num(_) => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>> {
        if self.peek() == &Tok::Sym('-') {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == &Tok::Sym('^') {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Tok::Num(n) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| parse_err(at, "exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(parse_err(
                    at,
                    "expected a non-negative integer exponent after '^'".into(),
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => Ok(Polynomial::constant(
                self.ring,
                F::from_rational(&Rational::from_integer(n)),
            )),
            Tok::Ident(name) => {
                if let Ok(i) = self.ring.var_index(&name) {
                    return Ok(Polynomial::var(self.ring, i));
                }
                let params = self.ring.domain().params();
                match params
                    .iter()
                    .position(|p| *p == name)
                    .and_then(F::parameter)
                {
                    Some(c) => Ok(Polynomial::constant(self.ring, c)),
                    None => Err(parse_err(at, format!("unknown identifier '{name}'"))),
                }
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                let at = self.offset();
                if self.bump() != Tok::Sym(')') {
                    return Err(parse_err(at, "expected ')'".into()));
                }
                Ok(e)
            }
            Tok::End => Err(parse_err(at, "unexpected end of input".into())),
            Tok::Sym(c) => Err(parse_err(at, format!("unexpected '{c}'"))),
        }
    }
}

pub(super) fn parse_polynomial<F: Field>(
    ring: &Arc<PolyRing>,
    text: &str,
) -> Result<Polynomial<F>> {
    let mut p = Parser {
        lx: Lexer {
            toks: lex(text)?,
            pos: 0,
        },
        ring,
        _f: std::marker::PhantomData,
    };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(parse_err(p.offset(), "trailing input".into()));
    }
    Ok(e)
}
