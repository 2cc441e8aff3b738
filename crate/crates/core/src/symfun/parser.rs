//! Recursive-descent parser for class expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' uint)?
//! atom   := rational | 'c' uint | 'e' uint | 'h' uint | 'p' uint
//!         | 's' '[' uint (',' uint)* ']' | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! A minus sign applied directly to a rational literal folds into the
//! literal.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ClassExpr, Partition, SymfunError};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    /// One of `c e h p` followed by an index.
    Indexed(char, u32),
    Schur,
    LBracket,
    RBracket,
    Comma,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Indexed(c, k) => format!("{c}{k}"),
            Tok::Schur => "s".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>, expected: &[&str]) -> SymfunError {
    SymfunError::Syntax {
        offset,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

const ATOM_START: &[&str] = &["rational", "c<k>", "e<k>", "h<k>", "p<k>", "s[...]", "'('", "'-'"];

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, SymfunError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_at = |i: usize| bytes[i..].iter().take_while(|b| b.is_ascii_digit()).count();
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match b {
            b'0'..=b'9' => {
                let n = digits_at(i);
                i += n;
                Tok::Int(src[start..i].parse().expect("digits"))
            }
            b'c' | b'e' | b'h' | b'p' => {
                let n = digits_at(i + 1);
                if n == 0 {
                    return Err(syntax(i + 1, format!("'{}' needs an index", b as char), &["uint"]));
                }
                let k: u32 = src[i + 1..i + 1 + n]
                    .parse()
                    .map_err(|_| syntax(i + 1, "index too large", &["uint"]))?;
                if k == 0 {
                    return Err(syntax(i + 1, "indices start at 1", &["uint >= 1"]));
                }
                i += 1 + n;
                Tok::Indexed(b as char, k)
            }
            b's' => {
                i += 1;
                Tok::Schur
            }
            _ => {
                i += 1;
                match b {
                    b'[' => Tok::LBracket,
                    b']' => Tok::RBracket,
                    b',' => Tok::Comma,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'^' => Tok::Caret,
                    b'/' => Tok::Slash,
                    _ => {
                        let ch = src[start..].chars().next().unwrap();
                        return Err(syntax(start, format!("unexpected character {ch:?}"), ATOM_START));
                    }
                }
            }
        };
        out.push((tok, start));
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> SymfunError {
        syntax(
            self.offset(),
            format!("unexpected {}", self.peek().describe()),
            expected,
        )
    }

    fn uint(&mut self) -> Result<u32, SymfunError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let off = self.offset();
                self.bump();
                u32::try_from(n).map_err(|_| syntax(off, "integer too large", &["uint"]))
            }
            _ => Err(self.unexpected(&["uint"])),
        }
    }

    fn expr(&mut self) -> Result<ClassExpr, SymfunError> {
        let mut items = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    items.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    items.push(ClassExpr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            ClassExpr::Sum(items)
        })
    }

    fn term(&mut self) -> Result<ClassExpr, SymfunError> {
        let mut items = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            ClassExpr::Product(items)
        })
    }

    fn factor(&mut self) -> Result<ClassExpr, SymfunError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(match self.factor()? {
                ClassExpr::Literal(q) => ClassExpr::Literal(-q),
                other => ClassExpr::Neg(Box::new(other)),
            });
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let k = self.uint()?;
            return Ok(ClassExpr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ClassExpr, SymfunError> {
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                let q = if *self.peek() == Tok::Slash {
                    self.bump();
                    let off = self.offset();
                    let den = match self.bump() {
                        (Tok::Int(d), _) => d,
                        _ => return Err(syntax(off, "expected a denominator", &["uint"])),
                    };
                    if den.is_zero() {
                        return Err(syntax(off, "zero denominator", &["uint >= 1"]));
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from_integer(num)
                };
                Ok(ClassExpr::Literal(q))
            }
            Tok::Indexed(c, k) => {
                self.bump();
                Ok(match c {
                    'c' => ClassExpr::Chern(k),
                    'e' => ClassExpr::Elementary(k),
                    'h' => ClassExpr::Complete(k),
                    _ => ClassExpr::PowerSum(k),
                })
            }
            Tok::Schur => {
                self.bump();
                if *self.peek() != Tok::LBracket {
                    return Err(self.unexpected(&["'['"]));
                }
                let open = self.offset();
                self.bump();
                let mut parts = vec![self.uint()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    parts.push(self.uint()?);
                }
                if *self.peek() != Tok::RBracket {
                    return Err(self.unexpected(&["','", "']'"]));
                }
                self.bump();
                let lambda = Partition::new(parts).map_err(|e| syntax(open, e.to_string(), &["partition"]))?;
                Ok(ClassExpr::Schur(lambda))
            }
            Tok::LParen => {
                let open = self.offset();
                self.bump();
                let end = self.toks.last().map(|t| t.1).unwrap_or(0);
                let inner = match self.expr() {
                    Ok(e) => e,
                    Err(SymfunError::Syntax { offset, expected, .. }) if offset == end => {
                        return Err(SymfunError::Syntax {
                            offset: open,
                            message: "unclosed '('".into(),
                            expected,
                        })
                    }
                    Err(e) => return Err(e),
                };
                match self.peek() {
                    Tok::RParen => {
                        self.bump();
                        Ok(inner)
                    }
                    Tok::End => Err(syntax(open, "unclosed '('", &["')'"])),
                    _ => Err(self.unexpected(&["')'", "'+'", "'-'", "'*'", "'^'"])),
                }
            }
            _ => Err(self.unexpected(ATOM_START)),
        }
    }
}

/// Parses a class expression.
pub fn parse_class(text: &str) -> Result<ClassExpr, SymfunError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(e)
}
