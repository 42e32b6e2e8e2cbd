//! Reading polynomials written with `+ - * ^`, parentheses, integer
//! coefficients and the ring's variable names.

use super::poly::Polynomial;
use super::ring::RingRef;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Var(usize),
    Op(char),
}

fn lex(ring: &RingRef, src: &str, base: usize) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: u64 = src[start..i]
                .parse()
                .map_err(|_| Error::Parse { pos: base + start, msg: "integer too large".into() })?;
            out.push((base + start, Tok::Num(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &src[start..i];
            let v = ring
                .var_index(name)
                .ok_or_else(|| Error::Parse { pos: base + start, msg: format!("unknown variable `{name}`") })?;
            out.push((base + start, Tok::Var(v)));
        } else if "+-*^()".contains(c) {
            out.push((base + i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: base + i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.at += 1;
                -&self.term()?
            }
            Some(Tok::Op('+')) => {
                self.at += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.at += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while let Some(Tok::Op('*')) = self.peek() {
            self.at += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.at += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) if e <= u16::MAX as u64 => {
                    self.at += 1;
                    return Ok(base.pow(e as u32));
                }
                _ => return self.err("expected a small nonnegative exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.at += 1;
                let f = self.ring.field();
                Ok(Polynomial::constant(self.ring, f.elem((v % f.characteristic() as u64) as i64)))
            }
            Some(Tok::Var(i)) => {
                self.at += 1;
                Ok(Polynomial::var(self.ring, i))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.at += 1;
                Ok(-&self.power()?)
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

impl Polynomial {
    /// Parses `src`; error offsets are relative to `src` plus `base`.
    pub fn parse_at(ring: &RingRef, src: &str, base: usize) -> Result<Polynomial> {
        let toks = lex(ring, src, base)?;
        let mut p = Parser { ring, toks, at: 0, end: base + src.len() };
        let out = p.expr()?;
        if p.at != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(out)
    }

    pub fn parse(ring: &RingRef, src: &str) -> Result<Polynomial> {
        Self::parse_at(ring, src, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{PrimeField, Ring};

    #[test]
    fn round_trips_display() {
        let ring = Ring::with_names(PrimeField::new(32003).unwrap(), &["x", "y", "z"]);
        for s in ["x^2 - y^2", "3*x*y*z + 1", "-x + y", "(x+y)^2 - 2*x*y"] {
            let p = Polynomial::parse(&ring, s).unwrap();
            let q = Polynomial::parse(&ring, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
        assert_eq!(Polynomial::parse(&ring, "(x+y)^2 - 2*x*y").unwrap().to_string(), "x^2 + y^2");
    }

    #[test]
    fn reports_positions() {
        let ring = Ring::with_names(PrimeField::new(7).unwrap(), &["x", "y"]);
        match Polynomial::parse(&ring, "x + w") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Polynomial::parse(&ring, "x +"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(Polynomial::parse(&ring, "x y"), Err(Error::Parse { .. })));
        assert_eq!(Polynomial::parse(&ring, "8*x").unwrap().to_string(), "x");
    }
}
