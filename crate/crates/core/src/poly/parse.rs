//! Polynomial text grammar:
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coef ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! coef   := int ('/' uint)?
//! ```
//!
//! Whitespace is ignored. Positions in errors are byte offsets.

use num_bigint::BigInt;

use super::{MPoly, Monomial, VarContext};
use crate::arith::Rat;
use crate::error::ParseError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a VarContext,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn ident(&mut self) -> Result<(String, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let lead_ok = |b: u8| b.is_ascii_alphabetic() || b == b'_';
        if !self.src.get(self.pos).copied().is_some_and(lead_ok) {
            return Err(self.err("expected a variable"));
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        Ok((s.to_string(), start))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        let (name, at) = self.ident()?;
        let idx = self.ctx.index_of(&name).ok_or(ParseError::UnknownVariable { name, pos: at })?;
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return Err(ParseError::NegativeExponent { pos: self.pos });
            }
            let d = self.digits()?;
            e = u32::try_from(d).map_err(|_| self.err("exponent too large"))?;
        }
        exps[idx] += e;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Rat), ParseError> {
        let mut exps = vec![0u32; self.ctx.arity()];
        let coef = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.digits()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                Rat::new(num, den)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                self.factor(&mut exps)?;
                Rat::one()
            }
            _ => return Err(self.err("expected a term")),
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::new(exps), coef))
    }

    fn poly(&mut self) -> Result<MPoly<Rat>, ParseError> {
        let mut terms = Vec::new();
        let mut sign = Rat::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = Rat::from(-1);
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m.exps().to_vec(), c * &sign));
            match self.peek() {
                None => break,
                Some(b'+') => sign = Rat::one(),
                Some(b'-') => sign = Rat::from(-1),
                Some(_) => return Err(self.err("expected '+', '-' or end of input")),
            }
            self.pos += 1;
        }
        Ok(MPoly::from_terms(self.ctx, terms))
    }
}

impl MPoly<Rat> {
    /// Parses a polynomial in the text grammar over `ctx`.
    pub fn parse(text: &str, ctx: &VarContext) -> Result<MPoly<Rat>, ParseError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, ctx };
        p.poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VarContext {
        VarContext::of(&["x", "y"])
    }

    #[test]
    fn round_trip() {
        let p = MPoly::parse("1/2*x^2 - y", &ctx()).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "1/2*x^2 - y");
        let q = MPoly::parse("  -3*x*y^2 +x -  7 ", &ctx()).unwrap();
        assert_eq!(q.to_string(), "-3*x*y^2 + x - 7");
        assert_eq!(MPoly::parse(&q.to_string(), &ctx()).unwrap(), q);
    }

    #[test]
    fn cancellation_to_zero() {
        let p = MPoly::parse("0*x + 3 - 3", &ctx()).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn repeated_factors_merge() {
        let p = MPoly::parse("2*x*x^2*y", &ctx()).unwrap();
        assert_eq!(p.to_string(), "2*x^3*y");
    }

    #[test]
    fn errors() {
        assert!(matches!(MPoly::parse("x^-1", &ctx()), Err(ParseError::NegativeExponent { pos: 2 })));
        assert!(matches!(MPoly::parse("x + w", &ctx()), Err(ParseError::UnknownVariable { pos: 4, .. })));
        assert!(matches!(MPoly::parse("x + ", &ctx()), Err(ParseError::Syntax { .. })));
        assert!(matches!(MPoly::parse("x y", &ctx()), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(MPoly::parse("1/0*x", &ctx()), Err(ParseError::Syntax { .. })));
        assert!(matches!(MPoly::parse("x*2", &ctx()), Err(ParseError::Syntax { .. })));
    }
}
