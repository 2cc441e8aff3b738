//! Canonical text form of polynomials: terms in graded-lexicographic order,
//! coefficients written `p/q`, factors joined by `*`, e.g.
//! `3/2*t1^2*z1 - z2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Monomial, MultiPoly, Rational, VarId};

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    for (i, &(v, e)) in m.factors().iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms().collect();
        terms.sort_by(|a, b| a.0.grlex_cmp(b.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> ExactError {
        ExactError::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<&'a str, ExactError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected digits"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn rational(&mut self) -> Result<Rational, ExactError> {
        let num: BigInt = self.digits()?.parse().expect("digits");
        if self.eat('/') {
            let start = self.pos;
            let den: BigInt = self.digits()?.parse().expect("digits");
            if den.is_zero() {
                return Err(ExactError::Parse {
                    offset: start,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn variable(&mut self) -> Result<(VarId, u32), ExactError> {
        self.skip_ws();
        let start = self.pos;
        let head = self.src[self.pos..].chars().next();
        if !matches!(head, Some('t') | Some('z')) {
            return Err(self.error("expected a variable t<k> or z<k>"));
        }
        self.pos += 1;
        let len = self.src[self.pos..].bytes().take_while(u8::is_ascii_digit).count();
        self.pos += len;
        let name = &self.src[start..self.pos];
        let v: VarId = name.parse().map_err(|_| ExactError::Parse {
            offset: start,
            message: format!("bad variable {name:?}"),
        })?;
        let exp = if self.eat('^') {
            self.digits()?
                .parse::<u32>()
                .map_err(|_| self.error("exponent too large"))?
        } else {
            1
        };
        Ok((v, exp))
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ExactError> {
        let mut coeff = Rational::one();
        let mut pairs = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.rational()?,
                Some('t') | Some('z') => pairs.push(self.variable()?),
                _ => return Err(self.error("expected a coefficient or variable")),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok((Monomial::from_pairs(pairs), coeff))
    }
}

impl FromStr for MultiPoly {
    type Err = ExactError;

    /// Parses the canonical form (and any sum of signed products of
    /// rationals and variable powers).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s, pos: 0 };
        let mut out = MultiPoly::zero();
        let mut negative = cur.eat('-');
        loop {
            let (m, c) = cur.term()?;
            out.add_term(m, if negative { -c } else { c });
            if cur.eat('+') {
                negative = false;
            } else if cur.eat('-') {
                negative = true;
            } else if cur.peek().is_none() {
                return Ok(out);
            } else {
                return Err(cur.error("expected '+', '-' or end of input"));
            }
        }
    }
}
