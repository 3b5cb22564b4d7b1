//! Parser for hand-written expressions such as `2q2q4(2q3-1)/(q3-1)`.
//!
//! Grammar (implicit multiplication binds like `*`):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*'|'/')? power)*
//! power  := atom ('^' integer)?
//! atom   := number | variable | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{MultiPoly, RatFunc};
use crate::error::{Error, Result};
use crate::rational::Q;

pub fn parse_ratfunc(s: &str, nvars: usize) -> Result<RatFunc> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser {
        s: &chars,
        pos: 0,
        nvars,
    };
    let r = p.expr()?;
    if p.pos != chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(r)
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        let src: String = self.s.iter().collect();
        Error::Parse(format!("{what} at offset {} in `{src}`", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                acc = (&acc / &d).map_err(|_| self.err("division by zero"))?;
            } else if matches!(self.peek(), Some(c) if c == '(' || c == 'q' || c.is_ascii_digit()) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let k = self.integer()?;
        let k: u32 = k.try_into().map_err(|_| self.err("exponent too large"))?;
        let mut acc = RatFunc::constant(self.nvars, Q::from_integer(1.into()));
        for _ in 0..k {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits: String = self.s[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some('q') => {
                self.pos += 1;
                self.eat('_');
                let braced = self.eat('{');
                let idx = self.integer()?;
                if braced && !self.eat('}') {
                    return Err(self.err("expected `}`"));
                }
                let idx: usize = idx.try_into().map_err(|_| self.err("bad variable index"))?;
                if idx == 0 || idx > self.nvars {
                    return Err(Error::VariableOutOfRange {
                        index: idx,
                        nvars: self.nvars,
                    });
                }
                Ok(RatFunc::from_poly(MultiPoly::var(self.nvars, idx - 1)?))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::constant(self.nvars, Q::from_integer(n)))
            }
            _ => Err(self.err("expected number, variable or `(`")),
        }
    }
}
