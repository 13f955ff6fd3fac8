//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' uint]
//! atom   := uint | 'g' | varname | '(' expr ')'
//! ```
//!
//! Integers embed through the prime subfield; `g` is the field generator
//! of a proper extension; juxtaposition is not a product (`x1 x2` is a
//! parse error, `x1*x2` is required).

use super::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::poly::MAX_DEGREE;

/// Parses a polynomial in `ring`. `line` is the 1-based line number used
/// in error positions (pass 1 for standalone text).
pub fn parse_polynomial(ring: &Ring, text: &str, line: usize) -> Result<Polynomial> {
    let mut p = PolyParser {
        ring,
        chars: text.char_indices().collect(),
        pos: 0,
        line,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("trailing input after polynomial"));
    }
    Ok(v)
}

struct PolyParser<'a> {
    ring: &'a Ring,
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
}

impl PolyParser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        self.err_at(self.pos, msg)
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        let col = self
            .chars
            .get(pos)
            .map(|&(i, _)| i + 1)
            .unwrap_or_else(|| self.chars.last().map(|&(i, _)| i + 2).unwrap_or(1));
        Error::parse(self.line, col, msg)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut acc = if self.peek() == Some('-') {
            self.pos += 1;
            self.term()?.negate()
        } else {
            self.term()?
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                acc = acc.try_mul(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let e = self.integer()?;
        if e > MAX_DEGREE as u64 {
            return Err(Error::DegreeLimit(e));
        }
        if let Some(d) = base.total_degree() {
            if d as u64 * e > MAX_DEGREE as u64 {
                return Err(Error::DegreeLimit(d as u64 * e));
            }
        }
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Polynomial::constant(self.ring, &self.ring.field().from_int(n as i64))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let name = self.ident();
                if let Some(i) = self.ring.var_names().iter().position(|v| v == &name) {
                    return Ok(Polynomial::variable(self.ring, i));
                }
                if name == "g" {
                    let g = self.ring.field().generator().ok_or_else(|| {
                        self.err_at(start, "`g` is only defined in proper extension fields")
                    })?;
                    return Polynomial::constant(self.ring, &g);
                }
                Err(self.err_at(start, format!("unknown variable `{name}`")))
            }
            _ => Err(self.err("expected an integer, a variable, `g`, or `(`")),
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut n: u64 = 0;
        while let Some(c) = self.peek() {
            if let Some(d) = c.to_digit(10) {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(d as u64))
                    .ok_or_else(|| self.err("integer literal too large"))?;
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        Ok(n)
    }
}
