//! Tiny exact evaluator for the symbolic table entries.
//!
//! Grammar: integers, the variables `r` and `q`, `+ - * / ^`, parentheses and
//! implicit multiplication (`2qr`, `r(r+1)/2`). Exponents are natural numbers.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("cannot parse `{src}` at byte {at}")]
    Parse { src: String, at: usize },
    #[error("`{src}` uses `{var}`, which is not bound")]
    Unbound { src: String, var: char },
    #[error("`{src}` divides by zero")]
    DivisionByZero { src: String },
}

/// Variable bindings.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Env {
    pub r: Option<i64>,
    pub q: Option<i64>,
}

impl Env {
    pub fn r(r: i64) -> Self {
        Env {
            r: Some(r),
            q: None,
        }
    }

    pub fn rq(r: i64, q: i64) -> Self {
        Env {
            r: Some(r),
            q: Some(q),
        }
    }
}

struct Parser<'s> {
    src: &'s str,
    bytes: &'s [u8],
    pos: usize,
    env: Env,
}

impl<'s> Parser<'s> {
    fn err(&self) -> FormulaError {
        FormulaError::Parse {
            src: self.src.to_string(),
            at: self.pos,
        }
    }

    fn peek(&mut self) -> Option<u8> {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.pos += 1;
        }
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

    fn expr(&mut self) -> Result<Rational, FormulaError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += self.term()?;
            } else if self.eat(b'-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Rational, FormulaError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc *= self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(FormulaError::DivisionByZero {
                        src: self.src.to_string(),
                    });
                }
                acc /= d;
            } else if matches!(self.peek(), Some(c) if c == b'(' || c.is_ascii_alphanumeric()) {
                acc *= self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Rational, FormulaError> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Rational, FormulaError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.number()?;
            let mut out = Rational::one();
            for _ in 0..e {
                out *= &base;
            }
            Ok(out)
        } else {
            Ok(base)
        }
    }

    fn number(&mut self) -> Result<i64, FormulaError> {
        self.peek();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err())
    }

    fn atom(&mut self) -> Result<Rational, FormulaError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err());
                }
                Ok(v)
            }
            Some(c @ (b'r' | b'q')) => {
                self.pos += 1;
                let v = if c == b'r' { self.env.r } else { self.env.q };
                v.map(int).ok_or(FormulaError::Unbound {
                    src: self.src.to_string(),
                    var: c as char,
                })
            }
            Some(c) if c.is_ascii_digit() => Ok(int(self.number()?)),
            _ => Err(self.err()),
        }
    }
}

/// Evaluates `src` exactly under `env`.
pub fn eval(src: &str, env: Env) -> Result<Rational, FormulaError> {
    let mut p = Parser {
        src,
        bytes: src.as_bytes(),
        pos: 0,
        env,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err());
    }
    Ok(v)
}

/// Evaluates `src` and requires a natural number.
pub fn eval_natural(src: &str, env: Env) -> Result<Option<u64>, FormulaError> {
    let v = eval(src, env)?;
    if v.is_integer() && v >= Rational::zero() {
        Ok(num_traits::ToPrimitive::to_u64(&v.to_integer()))
    } else {
        Ok(None)
    }
}

/// Unicode rendering: superscript squares, proper minus, `½` for a leading `1/2`.
pub fn pretty(src: &str) -> String {
    let mut s = src.replace("^2", "²").replace("^3", "³");
    if let Some(rest) = s.strip_suffix("/2") {
        if rest.starts_with('(') && rest.ends_with(')') && balanced(&rest[1..rest.len() - 1]) {
            s = format!("½{rest}");
        } else if rest.chars().all(|c| c.is_alphanumeric() || c == '²') {
            s = format!("½{rest}");
        }
    }
    s.replace('-', "−")
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn table_shapes() {
        let e = Env::rq(3, 2);
        assert_eq!(eval("2r^2+4r-3", e).unwrap(), int(27));
        assert_eq!(eval("(r^2+2r-1)/2", e).unwrap(), int(7));
        assert_eq!(eval("r(r+1)/2", e).unwrap(), int(6));
        assert_eq!(eval("2qr", e).unwrap(), int(12));
        assert_eq!(eval("r^2/2", e).unwrap(), frac(9, 2));
        assert_eq!(eval("(2r-1)(2r+2)/2", e).unwrap(), int(20));
        assert_eq!(eval("-r+1", e).unwrap(), int(-2));
        assert_eq!(eval("3(r+1)/4", Env::r(7)).unwrap(), int(6));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            eval("q", Env::r(1)),
            Err(FormulaError::Unbound { var: 'q', .. })
        ));
        assert!(matches!(
            eval("r+", Env::r(1)),
            Err(FormulaError::Parse { .. })
        ));
        assert!(matches!(
            eval("1/(r-1)", Env::r(1)),
            Err(FormulaError::DivisionByZero { .. })
        ));
        assert!(matches!(
            eval("r)", Env::r(1)),
            Err(FormulaError::Parse { .. })
        ));
    }

    #[test]
    fn naturals() {
        assert_eq!(eval_natural("r^2/2", Env::r(4)).unwrap(), Some(8));
        assert_eq!(eval_natural("r^2/2", Env::r(3)).unwrap(), None);
    }

    #[test]
    fn unicode_rendering() {
        assert_eq!(pretty("2r^2+4r-3"), "2r²+4r−3");
        assert_eq!(pretty("(r^2+2r-1)/2"), "½(r²+2r−1)");
        assert_eq!(pretty("r^2/2"), "½r²");
        assert_eq!(pretty("r(r+1)/2"), "r(r+1)/2");
    }
}
