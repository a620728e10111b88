//! Parser for polynomial and rational-function expressions.
//!
//! Accepts the canonical text form and, more generally, expressions built
//! from integers, identifiers, `+ - * / ^` and parentheses. Exponents are
//! (possibly negative, possibly parenthesised) integers.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{ArithError, Result};
use crate::laurent::LaurentPolynomial;
use crate::rational_function::RationalFunction;
use crate::vars::VariableSet;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VariableSet,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(ArithError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn expr(&mut self) -> Result<RationalFunction> {
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

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return self.err("division by zero");
                }
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            if e < 0 && base.is_zero() {
                return self.err("negative power of zero");
            }
            return base.pow(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat(b'(') {
            let e = self.exponent()?;
            if !self.eat(b')') {
                return self.err("expected `)`");
            }
            return Ok(e);
        }
        let neg = self.eat(b'-');
        let digits = self.digits();
        if digits.is_empty() {
            return self.err("expected integer exponent");
        }
        let v: i64 = match digits.parse() {
            Ok(v) => v,
            Err(_) => return self.err("exponent out of range"),
        };
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().map_err(|_| ArithError::Parse {
                    pos: self.pos,
                    msg: "bad integer".into(),
                })?;
                Ok(RationalFunction::from_laurent(LaurentPolynomial::constant(
                    self.vars,
                    BigRational::from_integer(n),
                )))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.position(name) {
                    Some(_) => RationalFunction::var(self.vars, name),
                    None => {
                        self.pos = start;
                        Err(ArithError::UnknownVariable(name.to_string()))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression over `vars` into a rational function.
pub fn parse_rational_function(text: &str, vars: &VariableSet) -> Result<RationalFunction> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let r = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(r)
}

/// Parses an expression that must evaluate to a Laurent polynomial.
pub fn parse_laurent(text: &str, vars: &VariableSet) -> Result<LaurentPolynomial> {
    parse_rational_function(text, vars)?
        .to_laurent()
        .ok_or(ArithError::NotLaurent)
}

/// Identifiers in order of first appearance.
pub fn identifiers(text: &str) -> Vec<String> {
    let b = text.as_bytes();
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_alphabetic() || b[i] == b'_' {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let id = &text[s..i];
            if !out.iter().any(|x| x == id) {
                out.push(id.to_string());
            }
        } else {
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let v = VariableSet::new(["a_1_1", "a_1_2", "a_2_1"]).unwrap();
        let f = parse_laurent("a_1_2/a_1_1 + 1/a_2_1 + a_2_1/a_1_1 + 1/a_1_2 + a_1_1", &v).unwrap();
        let text = f.to_text();
        assert_eq!(parse_laurent(&text, &v).unwrap().to_text(), text);
    }

    #[test]
    fn nested_expression() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let f = parse_laurent("(x + y)^2 - 2*x*y - x^2", &v).unwrap();
        assert_eq!(f.to_text(), "y^2");
        let g = parse_laurent("x^(-2) * x^2 + -3/4", &v).unwrap();
        assert_eq!(g.to_text(), "1/4");
    }

    #[test]
    fn non_laurent_rejected() {
        let v = VariableSet::new(["x"]).unwrap();
        assert_eq!(parse_laurent("1/(x+1)", &v), Err(ArithError::NotLaurent));
    }

    #[test]
    fn unknown_variable() {
        let v = VariableSet::new(["x"]).unwrap();
        assert!(matches!(parse_laurent("x + z", &v), Err(ArithError::UnknownVariable(_))));
    }

    #[test]
    fn identifiers_in_order() {
        assert_eq!(identifiers("y_2 + x*y_2^-1 + 3"), vec!["y_2", "x"]);
    }
}
