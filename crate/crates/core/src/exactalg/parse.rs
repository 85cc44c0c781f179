//! Text grammar for polynomials and series.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" ["-"] integer)?
//! atom   := integer | name | "(" expr ")"
//! ```
//!
//! Division is allowed only by a single nonzero term, so `1/2*f`, `3/f^2`
//! and `f^-1` are accepted while `1/(1+f)` is not.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
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
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [&'a str],
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in {:?}", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = &acc * &self.invert_term(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn invert_term(&self, d: &MultiPoly) -> Result<MultiPoly> {
        match d.as_monomial() {
            Some((m, c)) => Ok(MultiPoly::term(m.inverse(), Rational::one() / c)),
            None => Err(self.err("division by a non-monomial")),
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let negative = self.eat('-');
        let e = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                u32::try_from(n).map_err(|_| self.err("exponent too large"))?
            }
            _ => return Err(self.err("expected an integer exponent")),
        };
        if paren && !self.eat(')') {
            return Err(self.err("unclosed exponent"));
        }
        let p = base.pow(e);
        if negative {
            if base.is_zero() {
                return Err(self.err("zero to a negative power"));
            }
            self.invert_term(&p)
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.nvars(), Rational::from_integer(n)))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MultiPoly::var(self.nvars(), i)),
                    None => Err(self.err(&format!("unknown variable {name:?}"))),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("unbalanced parenthesis"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

/// Parse an expression in the named variables.
pub fn parse_poly(src: &str, vars: &[&str]) -> Result<MultiPoly> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        vars,
        src,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Same as [`parse_poly`] but with owned variable names.
pub fn parse_poly_in(src: &str, vars: &[String]) -> Result<MultiPoly> {
    let v: Vec<&str> = vars.iter().map(String::as_str).collect();
    parse_poly(src, &v)
}

/// Parse and reject negative exponents.
pub fn parse_polynomial(src: &str, vars: &[&str]) -> Result<MultiPoly> {
    let p = parse_poly(src, vars)?;
    if !p.is_polynomial() {
        return Err(Error::Parse(format!("{src:?} is not a polynomial")));
    }
    Ok(p)
}
