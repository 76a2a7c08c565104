use num_bigint::BigInt;
use num_traits::Zero;

use super::GradedPoly;
use crate::error::{Error, Result};
use crate::exact::Rat;

type P = GradedPoly<Rat>;

/// Parses a polynomial in `t1, t2, ...`; see the module docs for the grammar.
pub fn parse_poly(src: &str) -> Result<P> {
    parse_poly_in(src, "t")
}

/// Parses with generator prefix `var` (for example `"a"` for `a1, a2, ...`).
///
/// ```text
/// expr   := term (('+' | '-') term)*
/// term   := unary (('*' | '/') unary)*      divisor must be a nonzero constant
/// unary  := '-' unary | '+' unary | power
/// power  := atom ('^' integer)?
/// atom   := integer | var integer | '(' expr ')'
/// ```
pub fn parse_poly_in(src: &str, var: &str) -> Result<P> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, var: var.as_bytes() };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: &'a [u8],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let rhs = self.unary()?;
                    let c = match rhs.as_constant_rat() {
                        Some(c) if !c.is_zero() => c,
                        _ => {
                            return Err(Error::Parse {
                                pos: at,
                                msg: "can only divide by a nonzero constant".into(),
                            })
                        }
                    };
                    acc = acc.scale(&(Rat::from_integer(1.into()) / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<P> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<P> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<P> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer_big()?;
                Ok(P::constant(Rat::from_integer(n)))
            }
            Some(_) if self.src[self.pos..].starts_with(self.var) => {
                self.pos += self.var.len();
                if !matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
                    return Err(self.err("expected generator index"));
                }
                let k = self.integer()?;
                let k: u32 = k.try_into().map_err(|_| self.err("generator index too large"))?;
                Ok(P::generator(k))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer_big(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits parse"))
    }

    fn integer(&mut self) -> Result<u64> {
        let n = self.integer_big()?;
        u64::try_from(n).map_err(|_| self.err("integer too large"))
    }
}

impl GradedPoly<Rat> {
    fn as_constant_rat(&self) -> Option<Rat> {
        crate::scalar::CoeffRing::as_constant(self)
    }
}
