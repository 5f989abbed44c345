//! Text grammars for ring elements and polynomials.
//!
//! Ring elements: `F_q` scalars in `w`-notation (`w` is the class of `y`),
//! ring generators `u`, `u1..ui`, `v`, combined with `+ - * ^` and
//! parentheses, e.g. `(w+1)*u*v`, `1-u^2`.
//!
//! Polynomials: the same expressions extended by `x`; the canonical form
//! wraps each coefficient in braces and lists descending powers:
//! `{1+u}*x^3 + {u}*x + {1}`.

use crate::error::{Error, Result};
use crate::poly::{poly_add, poly_mul, poly_neg, poly_sub, RingPoly};
use crate::ring::{RingElem, RingSpec};

/// Largest exponent accepted in parsed text.
const MAX_EXPONENT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as u64))
                        .ok_or_else(|| Error::Parse(format!("number too large in {text:?}")))?;
                    chars.next();
                }
                tokens.push(Token::Num(n));
            }
            'a'..='z' | 'A'..='Z' => {
                let mut name = String::new();
                name.push(c);
                chars.next();
                // identifiers are one letter plus optional digits (u12)
                while let Some(&d) = chars.peek().filter(|c| c.is_ascii_digit()) {
                    name.push(d);
                    chars.next();
                }
                tokens.push(Token::Ident(name));
            }
            _ => {
                let tok = match c {
                    '+' => Token::Plus,
                    '-' | '−' => Token::Minus,
                    '*' | '·' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    '{' => Token::LBrace,
                    '}' => Token::RBrace,
                    other => {
                        return Err(Error::Parse(format!(
                            "unexpected character {other:?} in {text:?}"
                        )))
                    }
                };
                tokens.push(tok);
                chars.next();
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    spec: &'a RingSpec,
    tokens: Vec<Token>,
    pos: usize,
    allow_x: bool,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in {:?}", self.text))
    }

    fn expect(&mut self, tok: Token) -> Result<()> {
        match self.next() {
            Some(t) if t == tok => Ok(()),
            _ => Err(self.err(&format!("expected {tok:?}"))),
        }
    }

    fn expr(&mut self) -> Result<RingPoly> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                poly_neg(self.spec, &self.term()?)
            }
            Some(Token::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = poly_add(self.spec, &acc, &t);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = poly_sub(self.spec, &acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RingPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.next();
            let f = self.factor()?;
            acc = poly_mul(self.spec, &acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RingPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.next();
        let e = match self.next() {
            Some(Token::Num(e)) if e <= MAX_EXPONENT => e,
            Some(Token::Num(_)) => return Err(self.err("exponent too large")),
            _ => return Err(self.err("expected exponent")),
        };
        let mut acc = RingPoly::constant(self.spec.one());
        for _ in 0..e {
            acc = poly_mul(self.spec, &acc, &base);
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RingPoly> {
        let spec = self.spec;
        match self.next() {
            Some(Token::Num(n)) => {
                let c = spec.field().from_int((n % spec.field().characteristic()) as i64);
                Ok(RingPoly::constant(spec.scalar(c)))
            }
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::LBrace) => {
                let saved = self.allow_x;
                self.allow_x = false;
                let e = self.expr()?;
                self.allow_x = saved;
                self.expect(Token::RBrace)?;
                Ok(e)
            }
            Some(Token::Ident(name)) => self.identifier(&name),
            _ => Err(self.err("expected a term")),
        }
    }

    fn identifier(&self, name: &str) -> Result<RingPoly> {
        let spec = self.spec;
        if name == "x" {
            if !self.allow_x {
                return Err(self.err("x is not allowed inside a ring coefficient"));
            }
            return Ok(RingPoly::x_pow(spec, 1));
        }
        if name == "w" {
            if spec.field().degree() < 2 {
                return Err(self.err("w is only defined for extension fields (r ≥ 2)"));
            }
            return Ok(RingPoly::constant(spec.scalar(spec.field().generator())));
        }
        spec.variables()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, value)| RingPoly::constant(value))
            .ok_or_else(|| {
                self.err(&format!(
                    "unknown variable {name:?} for {}",
                    spec.descriptor()
                ))
            })
    }
}

fn parse(spec: &RingSpec, text: &str, allow_x: bool) -> Result<RingPoly> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser {
        spec,
        tokens,
        pos: 0,
        allow_x,
        text,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.err("trailing input"));
    }
    Ok(value)
}

/// Parses a ring element such as `(w+1)*u*v` or `1+u1*u2`.
pub fn parse_ring_elem(spec: &RingSpec, text: &str) -> Result<RingElem> {
    let p = parse(spec, text, false)?;
    Ok(p.coeff(0).cloned().unwrap_or_else(|| spec.zero()))
}

/// Parses a polynomial over `spec`, e.g. `{1+u}*x^3 + {u}*x + {1}` or `x^2-1`.
/// The result lives in `R[x]` and is not reduced modulo `x^n - 1`.
pub fn parse_poly(spec: &RingSpec, text: &str) -> Result<RingPoly> {
    parse(spec, text, true)
}

/// Canonical polynomial text: `{c}*x^k` terms in descending powers joined by
/// ` + `, `0` for the zero polynomial.
pub fn format_poly(spec: &RingSpec, f: &RingPoly) -> String {
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let c = spec.format(c);
            match k {
                0 => format!("{{{c}}}"),
                1 => format!("{{{c}}}*x"),
                k => format!("{{{c}}}*x^{k}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
