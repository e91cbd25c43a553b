//! Parser for factored polynomial expressions such as `25*(t^2+10*t+5)^3`.
//!
//! Grammar: sums and differences of products of powers of integers, `t`, or
//! parenthesised subexpressions. Exponents are non-negative integers.

use num_bigint::BigInt;

use super::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad polynomial expression at byte {pos}: {msg}")]
pub struct ExprError {
    pub pos: usize,
    pub msg: &'static str,
}

pub fn parse_poly(src: &str) -> Result<IntPoly, ExprError> {
    let mut p = Parser {
        s: src.as_bytes(),
        pos: 0,
    };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &'static str) -> ExprError {
        ExprError { pos: self.pos, msg }
    }

    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<IntPoly, ExprError> {
        let mut acc = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<IntPoly, ExprError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<IntPoly, ExprError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<IntPoly, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let e = self.digits()?;
        let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<IntPoly, ExprError> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(IntPoly::var())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::constant(self.digits()?)),
            _ => Err(self.err("expected integer, 't' or '('")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ExprError> {
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }
}
