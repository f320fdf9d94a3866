//! Parser for polynomial expressions such as `4*(x^3 + x^2) - 3/2 x y^4`.
//!
//! Supports `+ - * / ^`, parentheses, rational constants and implicit
//! multiplication. Division is only by constants. An identifier that is not
//! a declared name is split into single-letter names when possible, so
//! `xy^4` reads as `x*y^4` in the variables `x, y`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::MultiPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Op(char),
}

fn tokenize(text: &str, names: &[&str]) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().unwrap()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if let Some(k) = names.iter().position(|n| *n == word) {
                out.push(Tok::Var(k));
            } else {
                for ch in word.chars() {
                    let k = names
                        .iter()
                        .position(|n| n.len() == 1 && n.starts_with(ch))
                        .ok_or_else(|| Error::Parse(format!("unknown variable {word:?} in {text:?}")))?;
                    out.push(Tok::Var(k));
                }
            }
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected {c:?} in {text:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    arity: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in {:?}", self.text))
    }

    fn sum(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                -&self.product()?
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let rhs = self.product()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.power()?;
                    if !d.is_unit() {
                        return Err(self.err("division by a nonconstant"));
                    }
                    let c = d.terms().values().next().unwrap().clone();
                    acc = acc.scale(&c.recip());
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Op('(')) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected an exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.arity, BigRational::from_integer(n)))
            }
            Some(Tok::Var(k)) => {
                self.pos += 1;
                Ok(MultiPoly::var(self.arity, k))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            _ => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parses `text` as a polynomial in the variables `names`.
pub fn parse_expression(text: &str, names: &[&str]) -> Result<MultiPoly> {
    let toks = tokenize(text, names)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        arity: names.len(),
        text,
    };
    let out = p.sum()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Rational constant from text such as `-3/2`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let p = parse_expression(text, &[])?;
    if p.is_zero() {
        return Ok(BigRational::zero());
    }
    if !p.is_unit() {
        return Err(Error::Parse(format!("not a constant: {text:?}")));
    }
    Ok(p.terms().values().next().cloned().unwrap_or_else(BigRational::one))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_implicit_products() {
        let names = ["x", "y"];
        let a = parse_expression("4(x^3+x^2+x+1) - x^2y^4 - 2xy^4 - 3y^4", &names).unwrap();
        let b = parse_expression("4*x^3 + 4*x^2 + 4*x + 4 - x^2*y^4 - 2*x*y^4 - 3*y^4", &names).unwrap();
        assert_eq!(a, b);
        let c = parse_expression("-3/2 x + (x - y)^2", &names).unwrap();
        let d = parse_expression("x^2 - 2*x*y + y^2 - 3*x/2", &names).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn rejects_bad_input() {
        let names = ["x", "y"];
        assert!(parse_expression("x/y", &names).is_err());
        assert!(parse_expression("(x+1", &names).is_err());
        assert!(parse_expression("z", &names).is_err());
        assert!(parse_expression("", &names).is_err());
        assert_eq!(parse_rational("-3/2").unwrap(), BigRational::new((-3).into(), 2.into()));
    }
}
