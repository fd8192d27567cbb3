//! Parser for the cyclotomic literal grammar:
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := rational | rational "*" root | root
//! root     := "E(" int ")" ("^" int)?
//! rational := int ("/" posint)?
//! ```
//!
//! Whitespace is allowed between tokens. `E(3)^2` denotes zeta_3 squared.

use num::{BigInt, Signed, Zero};

use super::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};

pub fn parse_cyclotomic(input: &str) -> Result<Cyclotomic> {
    let mut p = Parser { bytes: input.as_bytes(), pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.expected("end of input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn expected(&self, what: &str) -> Error {
        Error::Parse { pos: self.pos, expected: what.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.peek().map(|b| b.is_ascii_whitespace()).unwrap_or(false) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        self.skip_ws();
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            let negate = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
            self.skip_ws();
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        if self.peek() == Some(b'E') {
            return self.root();
        }
        let coeff = self.rational()?;
        self.skip_ws();
        if self.eat(b'*') {
            self.skip_ws();
            let root = self.root()?;
            Ok(root.scale_rational(&coeff))
        } else {
            Ok(Cyclotomic::from_rational(coeff))
        }
    }

    fn root(&mut self) -> Result<Cyclotomic> {
        if !self.eat(b'E') {
            return Err(self.expected("`E`"));
        }
        if !self.eat(b'(') {
            return Err(self.expected("`(`"));
        }
        self.skip_ws();
        let n = self.int()?;
        self.skip_ws();
        if !self.eat(b')') {
            return Err(self.expected("`)`"));
        }
        if n.is_zero() || n.is_negative() {
            return Err(self.expected("positive conductor"));
        }
        let n: u32 = n
            .try_into()
            .map_err(|_| self.expected("conductor within u32 range"))?;
        let k = if self.eat(b'^') {
            self.skip_ws();
            let e = self.int()?;
            i64::try_from(e).map_err(|_| self.expected("exponent within i64 range"))?
        } else {
            1
        };
        Ok(Cyclotomic::root_of_unity(k, n))
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.int()?;
        self.skip_ws();
        let save = self.pos;
        if self.eat(b'/') {
            self.skip_ws();
            let denom = self.int()?;
            if denom.is_zero() || denom.is_negative() {
                self.pos = save + 1;
                return Err(self.expected("positive denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.expected("integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse::<BigInt>().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) {
        let v = parse_cyclotomic(s).unwrap();
        let printed = v.to_string();
        assert_eq!(parse_cyclotomic(&printed).unwrap(), v, "reparse of {printed}");
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse_cyclotomic("0").unwrap(), Cyclotomic::zero());
        assert_eq!(parse_cyclotomic("-3").unwrap(), Cyclotomic::from_integer(-3));
        assert_eq!(
            parse_cyclotomic("E(3)^2").unwrap(),
            Cyclotomic::root_of_unity(2, 3)
        );
        assert_eq!(
            parse_cyclotomic("1/2 * E(4)").unwrap(),
            Cyclotomic::root_of_unity(1, 4)
                .scale_rational(&Rational::new(BigInt::from(1), BigInt::from(2)))
        );
        assert_eq!(
            parse_cyclotomic("1 + E(3) + E(3)^2").unwrap(),
            Cyclotomic::zero()
        );
        assert_eq!(
            parse_cyclotomic("2 - E(4)").unwrap(),
            Cyclotomic::from_integer(2).sub(&Cyclotomic::root_of_unity(1, 4))
        );
    }

    #[test]
    fn negative_exponents_wrap() {
        assert_eq!(
            parse_cyclotomic("E(3)^-1").unwrap(),
            Cyclotomic::root_of_unity(2, 3)
        );
    }

    #[test]
    fn error_positions() {
        let err = parse_cyclotomic("E(3").unwrap_err();
        match err {
            Error::Parse { pos, expected } => {
                assert_eq!(pos, 3);
                assert!(expected.contains(")"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_cyclotomic("1 +").is_err());
        assert!(parse_cyclotomic("1/0").is_err());
        assert!(parse_cyclotomic("E(3) junk").is_err());
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["1 + E(4)", "-1 - E(3)", "1/2*E(8)^3 - 2/3", "E(12)^11", "7"] {
            roundtrip(s);
        }
    }
}
