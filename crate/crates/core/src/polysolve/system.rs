//! Named polynomial systems and their text format.
//!
//! ```text
//! # comment or metadata
//! var a1
//! var x_P1
//! poly: +1*a1^2 -3/2*x_P1 +1
//! ```
//!
//! Terms are separated by single spaces and sorted by graded-lex on the
//! declared variable order, largest first. A zero polynomial is `poly: 0`.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{MonomialOrder, MultiPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialSystem {
    pub variables: Vec<String>,
    pub equations: Vec<MultiPoly>,
    /// `(key, value)` pairs written as `# key: value` header lines.
    pub metadata: Vec<(String, String)>,
}

impl PolynomialSystem {
    pub fn new(variables: Vec<String>, equations: Vec<MultiPoly>) -> Result<Self> {
        let n = variables.len();
        for e in &equations {
            if e.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    got: e.arity(),
                });
            }
        }
        let mut seen = HashMap::new();
        for v in &variables {
            if !valid_name(v) {
                return Err(Error::InvalidArgument(format!("bad variable name {v:?}")));
            }
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(Error::InvalidArgument(format!("variable {v} declared twice")));
            }
        }
        Ok(PolynomialSystem {
            variables,
            equations,
            metadata: Vec::new(),
        })
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn num_equations(&self) -> usize {
        self.equations.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// Evaluates every equation at a full assignment of the variables.
    pub fn residuals(&self, point: &[BigRational]) -> Result<Vec<BigRational>> {
        self.equations.iter().map(|e| e.eval(point)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "# {k}: {v}");
        }
        for v in &self.variables {
            let _ = writeln!(out, "var {v}");
        }
        for e in &self.equations {
            let _ = writeln!(out, "poly: {}", format_terms(e, &self.variables));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut variables = Vec::new();
        let mut metadata = Vec::new();
        let mut raw = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some((k, v)) = rest.split_once(':') {
                    metadata.push((k.trim().to_string(), v.trim().to_string()));
                }
            } else if let Some(name) = line.strip_prefix("var ") {
                if !raw.is_empty() {
                    return Err(Error::Parse(format!("line {}: var after poly", no + 1)));
                }
                variables.push(name.trim().to_string());
            } else if let Some(body) = line.strip_prefix("poly:") {
                raw.push((no + 1, body.trim().to_string()));
            } else {
                return Err(Error::Parse(format!("line {}: unrecognised {line:?}", no + 1)));
            }
        }
        let index: HashMap<&str, usize> = variables.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let n = variables.len();
        let mut equations = Vec::with_capacity(raw.len());
        for (no, body) in &raw {
            equations.push(
                parse_terms(body, &index, n).map_err(|e| Error::Parse(format!("line {no}: {e}")))?,
            );
        }
        let mut sys = PolynomialSystem::new(variables, equations)?;
        sys.metadata = metadata;
        Ok(sys)
    }
}

fn valid_name(v: &str) -> bool {
    let mut chars = v.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Single-space separated `±p/q*v^e` terms, graded-lex descending.
pub fn format_terms(p: &MultiPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::with_capacity(p.len());
    for (e, c) in p.sorted_terms(MonomialOrder::GrLex) {
        let mut t = String::new();
        t.push(if c.is_negative() { '-' } else { '+' });
        let a = c.abs();
        t.push_str(&a.numer().to_string());
        if !a.denom().is_one() {
            t.push('/');
            t.push_str(&a.denom().to_string());
        }
        for (i, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => {
                    t.push('*');
                    t.push_str(&names[i]);
                }
                _ => {
                    let _ = write!(t, "*{}^{k}", names[i]);
                }
            }
        }
        parts.push(t);
    }
    parts.join(" ")
}

fn parse_terms(body: &str, index: &HashMap<&str, usize>, n: usize) -> std::result::Result<MultiPoly, String> {
    let mut p = MultiPoly::zero(n);
    if body == "0" {
        return Ok(p);
    }
    for tok in body.split_whitespace() {
        let (sign, rest) = match tok.as_bytes().first() {
            Some(b'+') => (1, &tok[1..]),
            Some(b'-') => (-1, &tok[1..]),
            _ => return Err(format!("term {tok:?} lacks a sign")),
        };
        let mut factors = rest.split('*');
        let coef = factors.next().unwrap_or("");
        let c = match coef.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.parse().map_err(|_| format!("bad coefficient in {tok:?}"))?;
                let b: BigInt = b.parse().map_err(|_| format!("bad coefficient in {tok:?}"))?;
                if b.is_zero() {
                    return Err(format!("zero denominator in {tok:?}"));
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(coef.parse().map_err(|_| format!("bad coefficient in {tok:?}"))?),
        };
        let mut e = vec![0u32; n];
        for f in factors {
            let (name, k) = match f.split_once('^') {
                Some((v, k)) => (v, k.parse::<u32>().map_err(|_| format!("bad exponent in {tok:?}"))?),
                None => (f, 1),
            };
            let i = *index.get(name).ok_or_else(|| format!("undeclared variable {name:?}"))?;
            e[i] += k;
        }
        p.add_term(e, c * BigInt::from(sign));
    }
    Ok(p)
}
