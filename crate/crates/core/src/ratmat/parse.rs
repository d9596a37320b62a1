use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::Scalar;
use crate::{Error, Result};

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, bytes: src.as_bytes(), pos: 0 }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        let d = self.digits()?;
        let k: i64 = d.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -k } else { k })
    }

    /// One term without its sign: returns (coefficient, power of z).
    fn term(&mut self) -> Result<(BigRational, i64)> {
        if self.eat(b'z') {
            return Ok((BigRational::from_integer(1.into()), self.exponent()?));
        }
        let num = self.digits()?;
        let den = if self.eat(b'/') { self.digits()? } else { BigInt::from(1) };
        if den.is_zero() {
            return Err(self.err("zero denominator"));
        }
        let q = BigRational::new(num, den);
        if self.eat(b'*') {
            if !self.eat(b'z') {
                return Err(self.err("expected 'z' after '*'"));
            }
            return Ok((q, self.exponent()?));
        }
        Ok((q, 0))
    }
}

pub(crate) fn parse_scalar(s: &str, m: u32) -> Result<Scalar> {
    if m == 0 {
        return Err(Error::Parse("cyclotomic order must be positive".into()));
    }
    let mut cur = Cursor::new(s);
    let mut acc = Scalar::zero();
    let mut negative = cur.eat(b'-');
    if !negative {
        cur.eat(b'+');
    }
    loop {
        let (c, k) = cur.term()?;
        let mut t = Scalar::rational(c);
        if k != 0 {
            t = t * Scalar::zeta(m, k);
        }
        if negative {
            acc -= t;
        } else {
            acc += t;
        }
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(cur.err("unexpected character")),
        }
        cur.pos += 1;
    }
    Ok(acc)
}
