//! Expression grammar and canonical printing.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' integer)?
//! base   := integer | variable | '(' expr ')'
//! ```
//!
//! Printing lists terms in descending graded-lex order with least non-negative
//! coefficients; a non-polynomial prints as `(num)/(den)`.

use inseparable::funcfield::{Poly, PolyRing, RatFunc};

use crate::error::{CliError, CliResult};

/// Guards against accidental huge powers.
pub const MAX_POWER: u64 = 1 << 16;

pub struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: PolyRing,
    names: &'a [String],
}

pub fn parse_expression(text: &str, ring: PolyRing, names: &[String]) -> CliResult<RatFunc> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring, names };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> CliError {
        CliError::Parse { pos: self.pos, msg: msg.into() }
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

    fn expr(&mut self) -> CliResult<RatFunc> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> CliResult<RatFunc> {
        let mut acc = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.factor()?;
            if op == b'*' {
                acc = acc.mul(&rhs);
            } else {
                acc = acc.div(&rhs).map_err(|_| CliError::DivisionByZero { pos: at })?;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> CliResult<RatFunc> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer_value()?;
            if e > MAX_POWER {
                return Err(self.error("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> CliResult<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.ring.p() as u64;
                let mut r = 0u64;
                while let Some(&d) = self.src.get(self.pos).filter(|d| d.is_ascii_digit()) {
                    r = (r * 10 + (d - b'0') as u64) % p;
                    self.pos += 1;
                }
                Ok(RatFunc::constant(self.ring, r as i64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|d| d.is_ascii_alphanumeric() || *d == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(RatFunc::var(self.ring, i)),
                    None => Err(CliError::UnknownVariable { pos: start, name: name.into() }),
                }
            }
            Some(_) => Err(self.error("expected a number, variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer_value(&mut self) -> CliResult<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(&d) = self.src.get(self.pos).filter(|d| d.is_ascii_digit()) {
            v = v.saturating_mul(10).saturating_add((d - b'0') as u64);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a non-negative integer exponent"));
        }
        Ok(v)
    }
}

pub fn print_poly(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if *c != 1 || m.is_one() {
            factors.push(c.to_string());
        }
        for (name, &e) in names.iter().zip(m.0.iter()) {
            match e {
                0 => {}
                1 => factors.push(name.clone()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn print_ratfunc(f: &RatFunc, names: &[String]) -> String {
    if f.den().is_one() {
        print_poly(f.num(), names)
    } else {
        format!("({})/({})", print_poly(f.num(), names), print_poly(f.den(), names))
    }
}
