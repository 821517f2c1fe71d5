//! Text grammar for polynomials (whitespace insignificant):
//!
//! ```text
//! poly     := '0' | monomial ('+' monomial)*
//! monomial := factor ('*' factor)*
//! factor   := '[' bit{k} ']' ('^' uint)?   |   '[]'
//! ```

use std::fmt;

use super::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::gf2lin::{bit_string, validate_rank, Functional};

pub(super) fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    if m.is_unit() {
        return f.write_str("[]");
    }
    for (i, &(bits, e)) in m.raw_factors().iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        write!(f, "[{}]", bit_string(m.rank(), bits))?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

pub(super) fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (i, m) in p.terms().enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        write_monomial(f, m)?;
    }
    Ok(())
}

/// Canonical text form.
pub fn format(p: &Poly) -> String {
    p.to_string()
}

/// Parses a rank-`rank` polynomial. Errors carry the byte offset.
pub fn parse(text: &str, rank: u32) -> Result<Poly> {
    validate_rank(rank)?;
    Parser {
        src: text.as_bytes(),
        pos: 0,
        rank,
    }
    .poly()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: u32,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, want: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("expected '{}', found '{}'", want as char, c as char),
            )),
            None => Err(Error::parse(
                self.pos,
                format!("expected '{}', found end of input", want as char),
            )),
        }
    }

    fn poly(mut self) -> Result<Poly> {
        let mut p = Poly::zero(self.rank)?;
        match self.peek() {
            None => return Err(Error::parse(self.pos, "empty input")),
            Some(b'0') => {
                self.pos += 1;
            }
            Some(_) => loop {
                let m = self.monomial()?;
                p.toggle(m)?;
                if self.peek() == Some(b'+') {
                    self.pos += 1;
                } else {
                    break;
                }
            },
        }
        if let Some(c) = self.peek() {
            return Err(Error::parse(
                self.pos,
                format!("unexpected '{}'", c as char),
            ));
        }
        Ok(p)
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut m = Monomial::unit(self.rank)?;
        loop {
            if let Some((f, e)) = self.factor()? {
                m = m.mul(&Monomial::new(self.rank, [(f, e)])?)?;
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(m);
            }
        }
    }

    /// `None` for the unit factor `[]`.
    fn factor(&mut self) -> Result<Option<(Functional, u32)>> {
        self.expect(b'[')?;
        let start = self.pos;
        let mut bits = 0u32;
        let mut len = 0u32;
        while let Some(&c) = self.src.get(self.pos) {
            match c {
                b'0' | b'1' => {
                    if len == self.rank {
                        return Err(Error::parse(
                            self.pos,
                            format!("functional longer than rank {}", self.rank),
                        ));
                    }
                    bits = bits << 1 | u32::from(c - b'0');
                    len += 1;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        self.expect(b']')?;
        if len == 0 {
            return Ok(None);
        }
        if len != self.rank {
            return Err(Error::parse(
                start,
                format!("expected {} bits, found {len}", self.rank),
            ));
        }
        if bits == 0 {
            return Err(Error::parse(start, "the zero functional is not a variable"));
        }
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits_start = self.pos;
            while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            if digits_start == self.pos {
                return Err(Error::parse(self.pos, "expected exponent"));
            }
            let digits =
                std::str::from_utf8(&self.src[digits_start..self.pos]).expect("ascii digits");
            exp = digits
                .parse()
                .map_err(|_| Error::parse(digits_start, "exponent out of range"))?;
        }
        Ok(Some((Functional::new(self.rank, bits)?, exp)))
    }
}
