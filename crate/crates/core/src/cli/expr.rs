//! Arithmetic expressions over the parameters and the field generator,
//! e.g. `"(a + 1/2)*b^2 - i"`.

use thiserror::Error;

use crate::field::{parse_rational, FunctionField, RatFunc, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("in expression {expr:?} at offset {pos}: {msg}")]
pub struct ExprError {
    pub expr: String,
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    field: &'a FunctionField,
}

pub fn parse_expr(src: &str, field: &FunctionField) -> Result<RatFunc, ExprError> {
    let mut p = Parser {
        src,
        bytes: src.as_bytes(),
        pos: 0,
        field,
    };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> ExprError {
        ExprError {
            expr: self.src.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<RatFunc, ExprError> {
        let mut acc = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if op == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<RatFunc, ExprError> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == b'*' {
                acc = acc.mul(&rhs);
            } else {
                if rhs.is_zero() {
                    return Err(self.error("division by zero"));
                }
                acc = acc.div(&rhs);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc, ExprError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let negative = self.bytes.get(self.pos) == Some(&b'-');
        if negative {
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let e: u32 = self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("exponent must be an integer literal"))?;
        let mut acc = RatFunc::one_in(self.field);
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        if negative {
            if acc.is_zero() {
                return Err(self.error("division by zero"));
            }
            acc = acc.inv();
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RatFunc, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.bytes.len() && (self.bytes[self.pos].is_ascii_digit() || self.bytes[self.pos] == b'.') {
                    self.pos += 1;
                }
                let q = parse_rational(&self.src[start..self.pos]).ok_or_else(|| self.error("malformed number"))?;
                Ok(self.field.rational(q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len() && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                if let Some(i) = self.field.params().iter().position(|p| p == name) {
                    return Ok(self.field.param(i));
                }
                let base = self.field.base();
                if !base.is_rational() && base.generator_name() == name {
                    return Ok(self.field.constant(base.generator()));
                }
                self.pos = start;
                Err(self.error(&format!("unknown identifier {name:?}")))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
