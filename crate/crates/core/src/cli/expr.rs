//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr      := term (('+' | '-') term)*
//! term      := '-'? factor ('*' factor)*
//! factor    := base ('^' uint)?
//! base      := rational | var | shorthand | '(' expr ')'
//! rational  := uint ('/' uint)?
//! var       := ('x' | 'u') '[' uint ',' uint ']'
//! shorthand := ('c' | 's' | 'w') '(' uint ',' uint ')'
//! ```
//!
//! Whitespace is ignored between tokens. `x[i,a]` is coordinate `a` of
//! vector copy `i` and `u[i,a]` the same for covector copies, both 1-based.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fft::{contraction, ContractionFamily};
use crate::grp::GroupFamily;
use crate::poly::{Polynomial, SpaceSignature, VariableId};

/// Parses `text` into a polynomial over `sig`. Contraction shorthands are
/// only accepted when they belong to `family`.
pub fn parse_expression(
    text: &str,
    sig: SpaceSignature,
    family: GroupFamily,
) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        sig,
        family,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    sig: SpaceSignature,
    family: GroupFamily,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            offset,
            message: message.into(),
        }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let message = match self.peek() {
                Some(got) => format!("expected '{}', found '{}'", c as char, got as char),
                None => format!("expected '{}', found end of input", c as char),
            };
            Err(self.error(message))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let negate = self.eat(b'-');
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        if self.peek() == Some(b'-') {
            return Err(self.error("negative exponent"));
        }
        let start = self.pos;
        let e = self.uint()?;
        let e: u32 = e
            .try_into()
            .map_err(|_| self.error_at(start, "exponent too large"))?;
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(b'x') => self.variable(false),
            Some(b'u') => self.variable(true),
            Some(c @ (b'c' | b's' | b'w')) => self.shorthand(c),
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| self.error_at(start, "integer too large"))
    }

    fn index(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let v = self.uint()?;
        if v == 0 {
            return Err(self.error_at(start, "indices are 1-based"));
        }
        usize::try_from(v).map_err(|_| self.error_at(start, "index too large"))
    }

    fn rational(&mut self) -> Result<Polynomial> {
        let num: BigInt = self.digits()?.parse().expect("decimal digits");
        let den: BigInt = if self.eat(b'/') {
            self.skip_ws();
            let start = self.pos;
            let d: BigInt = self.digits()?.parse().expect("decimal digits");
            if d.is_zero() {
                return Err(self.error_at(start, "zero denominator"));
            }
            d
        } else {
            BigInt::from(1)
        };
        Ok(Polynomial::constant(self.sig, Rational::new(num, den)))
    }

    fn pair(&mut self, open: u8, close: u8) -> Result<(usize, usize)> {
        self.expect(open)?;
        let i = self.index()?;
        self.expect(b',')?;
        let j = self.index()?;
        self.expect(close)?;
        Ok((i, j))
    }

    fn variable(&mut self, covector: bool) -> Result<Polynomial> {
        let start = self.pos;
        self.pos += 1;
        let (copy, coord) = self.pair(b'[', b']')?;
        let id = if covector {
            VariableId::covector(copy, coord)
        } else {
            VariableId::vector(copy, coord)
        };
        Polynomial::var(self.sig, id).map_err(|e| self.error_at(start, e.to_string()))
    }

    fn shorthand(&mut self, symbol: u8) -> Result<Polynomial> {
        let start = self.pos;
        self.pos += 1;
        let family = match symbol {
            b'c' => ContractionFamily::Dual,
            b's' => ContractionFamily::Orthogonal,
            _ => ContractionFamily::Symplectic,
        };
        let expected = match self.family {
            GroupFamily::General => Some(ContractionFamily::Dual),
            GroupFamily::Orthogonal => Some(ContractionFamily::Orthogonal),
            GroupFamily::Symplectic => Some(ContractionFamily::Symplectic),
            GroupFamily::Finite => None,
        };
        if expected != Some(family) {
            return Err(self.error_at(
                start,
                format!(
                    "shorthand {}(..) does not belong to group family {}",
                    symbol as char,
                    self.family.name()
                ),
            ));
        }
        let (i, j) = self.pair(b'(', b')')?;
        contraction(family, i, j, self.sig).map_err(|e| self.error_at(start, e.to_string()))
    }
}
