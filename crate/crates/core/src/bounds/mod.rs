//! Heights of branch sets and the effective upper bound on the Belyi degree
//! obtained from them.
//!
//! The exponential height of an algebraic number with primitive minimal
//! polynomial `f` of degree `n` is computed as `M(f)^{1/n}`, where
//! `M(f) = |aₙ| ∏ max(1, |αᵢ|)` is the Mahler measure. This agrees with the
//! product over places of `max(1, ‖α‖_v)`: the non-archimedean places
//! contribute exactly `|aₙ|` once `f` is primitive.

mod real;
mod roots;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

pub use real::{decimal, ln, ln10, ln2, Interval};

use crate::error::{Error, Result};
use crate::perm::factorial;

/// Bits of precision the height computation must reach.
pub const HEIGHT_BITS: u32 = 64;
/// Largest working precision tried before giving up.
pub const MAX_WORKING_BITS: u32 = 4096;
/// Exact bounds are produced only up to this many decimal digits.
pub const EXACT_DIGIT_LIMIT: f64 = 1e6;
/// Precision of the logarithmic representation.
pub const LOG_BITS: u32 = 160;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraicPoint {
    Rational(BigRational),
    /// Root of a primitive integer polynomial, coefficients from the constant term up.
    Algebraic(Vec<BigInt>),
    Infinity,
}

impl AlgebraicPoint {
    pub fn rational(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(AlgebraicPoint::Rational(BigRational::new(p.into(), q.into())))
    }

    /// Checks that `coeffs` is primitive with positive leading coefficient.
    /// A linear polynomial becomes the rational point it defines.
    pub fn algebraic(coeffs: Vec<BigInt>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument("minimal polynomial must have degree at least 1".into()));
        }
        if coeffs.last().unwrap().is_negative() {
            return Err(Error::InvalidArgument("leading coefficient must be positive".into()));
        }
        let content = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !content.is_one() {
            return Err(Error::InvalidArgument(format!(
                "minimal polynomial is not primitive (content {content})"
            )));
        }
        if coeffs.len() == 2 {
            return Ok(AlgebraicPoint::Rational(BigRational::new(-coeffs[0].clone(), coeffs[1].clone())));
        }
        if coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("polynomial divisible by x is not irreducible".into()));
        }
        Ok(AlgebraicPoint::Algebraic(coeffs))
    }

    pub fn parse_minpoly(text: &str) -> Result<Self> {
        Self::algebraic(parse_univariate(text)?)
    }

    /// Number of Galois conjugates the point contributes to the orbit count.
    pub fn orbit_size(&self) -> usize {
        match self {
            AlgebraicPoint::Algebraic(c) => c.len() - 1,
            _ => 1,
        }
    }
}

impl FromStr for AlgebraicPoint {
    type Err = Error;

    /// `oo`, `inf`, `∞`, an integer or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "oo" | "inf" | "infinity" | "∞" => return Ok(AlgebraicPoint::Infinity),
            _ => {}
        }
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
        };
        let value = match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                BigRational::new(parse(p)?, q)
            }
            None => BigRational::from_integer(parse(s)?),
        };
        Ok(AlgebraicPoint::Rational(value))
    }
}

impl fmt::Display for AlgebraicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicPoint::Rational(q) => write!(f, "{q}"),
            AlgebraicPoint::Infinity => write!(f, "oo"),
            AlgebraicPoint::Algebraic(c) => write!(f, "root of {}", format_univariate(c)),
        }
    }
}

/// Parses `3x^2 - 2*x + 1` style input in the variable `x`.
pub fn parse_univariate(text: &str) -> Result<Vec<BigInt>> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in cleaned.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !cleaned[..i].ends_with('^') {
            terms.push(&cleaned[start..i]);
            start = i;
        }
    }
    terms.push(&cleaned[start..]);
    for term in terms {
        let bad = || Error::Parse(format!("bad term {term:?} in {text:?}"));
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term.strip_prefix('+').unwrap_or(term)),
        };
        let (coef, exp) = match body.find('x') {
            None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() {
                    BigInt::one()
                } else {
                    c.parse::<BigInt>().map_err(|_| bad())?
                };
                let rest = &body[pos + 1..];
                let e = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(bad)?
                };
                (c, e)
            }
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += coef * sign;
    }
    Ok(coeffs)
}

fn format_univariate(c: &[BigInt]) -> String {
    let mut out = String::new();
    for (e, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let m = a.abs();
        let mono = match e {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{e}"),
        };
        if e == 0 || !m.is_one() {
            out.push_str(&m.to_string());
        }
        out.push_str(&mono);
    }
    out
}

/// Exponential height of a point, exact or enclosed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Height {
    Exact(BigInt),
    /// Enclosure of `ln H`.
    LogEnclosure(Interval),
}

impl Height {
    pub fn ln(&self, bits: u32) -> Interval {
        match self {
            Height::Exact(h) => ln(&BigRational::from_integer(h.clone()), bits),
            Height::LogEnclosure(iv) => iv.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Height::Exact(h) => h.to_f64().unwrap_or(f64::INFINITY),
            Height::LogEnclosure(iv) => iv.to_f64().exp(),
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Exact(h) => write!(f, "{h}"),
            Height::LogEnclosure(iv) => write!(f, "exp({iv}) ~ {:.6}", iv.to_f64().exp()),
        }
    }
}

/// Height of one point; algebraic points are certified to [`HEIGHT_BITS`].
pub fn height(pt: &AlgebraicPoint) -> Result<Height> {
    height_with_precision(pt, HEIGHT_BITS)
}

pub fn height_with_precision(pt: &AlgebraicPoint, bits: u32) -> Result<Height> {
    match pt {
        AlgebraicPoint::Infinity => Ok(Height::Exact(BigInt::one())),
        AlgebraicPoint::Rational(q) => Ok(Height::Exact(q.numer().abs().max(q.denom().abs()))),
        AlgebraicPoint::Algebraic(coeffs) => {
            let iv = log_mahler_measure(coeffs, bits)?;
            let n = BigRational::from_integer(BigInt::from(coeffs.len() - 1));
            Ok(Height::LogEnclosure(iv.scale(&n.recip())))
        }
    }
}

/// Enclosure of `ln M(f)` of width at most `2^-bits`.
pub fn log_mahler_measure(coeffs: &[BigInt], bits: u32) -> Result<Interval> {
    let lead = coeffs.last().expect("nonempty polynomial").abs();
    let mut work = bits + 32;
    while work <= MAX_WORKING_BITS {
        if let Some(discs) = roots::certified_roots(coeffs, work) {
            let mut acc = ln(&BigRational::from_integer(lead.clone()), work);
            for d in &discs {
                let s = d.center.norm_sqr();
                let (sl, su) = real::sqrt_bounds(&s, work);
                let lo_abs = (&sl - &d.radius).max(BigRational::zero());
                let hi_abs = &su + &d.radius;
                let one = BigRational::one();
                let half = BigRational::new(1.into(), 2.into());
                // max(0, ln |z|) over |z| in [lo_abs, hi_abs]
                let lo = if lo_abs > one {
                    ln(&(&lo_abs * &lo_abs), work).lo * &half
                } else {
                    BigRational::zero()
                };
                let hi = if hi_abs > one {
                    ln(&(&hi_abs * &hi_abs), work).hi * &half
                } else {
                    BigRational::zero()
                };
                acc = acc.add(&Interval::new(lo, hi));
            }
            if acc.is_tight(bits) {
                return Ok(acc);
            }
        }
        work *= 2;
    }
    Err(Error::PrecisionFailure(format!(
        "could not enclose the Mahler measure of {} to {bits} bits within {MAX_WORKING_BITS} bits of working precision",
        format_univariate(coeffs)
    )))
}

/// A finite branch set together with its orbit count `N` and height `H`.
#[derive(Clone, Debug)]
pub struct BranchSet {
    pub points: Vec<AlgebraicPoint>,
    pub n: usize,
    pub height: Height,
    /// Set when ∞ was counted as a single orbit point.
    pub infinity_counted: bool,
}

impl BranchSet {
    /// `N` sums the Galois orbit sizes, counting ∞ as one point; `H` is the
    /// largest height.
    pub fn new(points: Vec<AlgebraicPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("empty branch set".into()));
        }
        let mut dedup: Vec<AlgebraicPoint> = Vec::new();
        for p in points {
            if !dedup.contains(&p) {
                dedup.push(p);
            }
        }
        let n = dedup.iter().map(AlgebraicPoint::orbit_size).sum();
        let heights = dedup.iter().map(height).collect::<Result<Vec<_>>>()?;
        let height = if heights.iter().all(|h| matches!(h, Height::Exact(_))) {
            Height::Exact(
                heights
                    .iter()
                    .map(|h| match h {
                        Height::Exact(v) => v.clone(),
                        _ => unreachable!(),
                    })
                    .max()
                    .unwrap(),
            )
        } else {
            let mut iter = heights.iter().map(|h| h.ln(LOG_BITS));
            let first = iter.next().unwrap();
            Height::LogEnclosure(iter.fold(first, |a, b| a.max(&b)))
        };
        let infinity_counted = dedup.contains(&AlgebraicPoint::Infinity);
        Ok(BranchSet {
            points: dedup,
            n,
            height,
            infinity_counted,
        })
    }
}

/// An upper bound, exact when feasible, otherwise as an enclosure of its
/// base-10 logarithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundValue {
    Exact(BigInt),
    Log10(Interval),
}

impl BoundValue {
    pub fn log10(&self, bits: u32) -> Interval {
        match self {
            BoundValue::Exact(v) => {
                ln(&BigRational::from_integer(v.clone()), bits + 8).div_positive(&ln10(bits + 8))
            }
            BoundValue::Log10(iv) => iv.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&BigInt> {
        match self {
            BoundValue::Exact(v) => Some(v),
            BoundValue::Log10(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            BoundValue::Exact(v) => json!({
                "exact": v.to_string(),
                "log10": self.log10(64).to_decimal(12),
            }),
            BoundValue::Log10(iv) => json!({ "log10": iv.to_decimal(12) }),
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(v) => {
                let s = v.to_string();
                if s.len() > 60 {
                    write!(f, "{}...({} digits), log10 = {}", &s[..20], s.len(), self.log10(64).to_decimal(12))
                } else {
                    write!(f, "{s}")
                }
            }
            BoundValue::Log10(iv) => write!(f, "10^{}", iv.to_decimal(12)),
        }
    }
}

/// The exponent `9N³·2^{N−2}·N!`, a half-integer when `N = 1`.
pub fn khadjavi_exponent(n: usize) -> BigRational {
    assert!(n >= 1);
    let base = BigInt::from(9) * BigInt::from(n).pow(3) * BigInt::from_biguint(Sign::Plus, factorial(n));
    if n >= 2 {
        BigRational::from_integer(base << (n - 2))
    } else {
        BigRational::new(base, BigInt::from(2))
    }
}

/// `(4NH)^{9N³·2^{N−2}·N!}`.
pub fn khadjavi_bound(n: usize, h: &Height) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let e = khadjavi_exponent(n);
    if let Height::Exact(hv) = h {
        if hv < &BigInt::one() {
            return Err(Error::InvalidArgument("height must be at least 1".into()));
        }
        let base = BigInt::from(4 * n) * hv;
        let digits = e.to_f64().unwrap_or(f64::INFINITY) * base.to_f64().unwrap_or(f64::INFINITY).log10();
        if digits <= EXACT_DIGIT_LIMIT {
            if e.is_integer() {
                let k = e.to_integer().to_u32().expect("exponent fits");
                return Ok(BoundValue::Exact(base.pow(k)));
            }
            // half-integer exponent: exact only for a square base
            if let Some(r) = real::exact_sqrt(&base) {
                let k = e.numer().to_u32().expect("exponent fits");
                return Ok(BoundValue::Exact(r.pow(k)));
            }
        }
    }
    Ok(BoundValue::Log10(khadjavi_log10(n, h)))
}

/// `log₁₀` of the bound, always by the logarithmic route.
pub fn khadjavi_log10(n: usize, h: &Height) -> Interval {
    let e = khadjavi_exponent(n);
    let bits = LOG_BITS + e.numer().bits() as u32;
    let ln_base = ln(&BigRational::from_integer(BigInt::from(4 * n)), bits).add(&h.ln(bits));
    ln_base.scale(&e).div_positive(&ln10(bits))
}

/// The Khadjavi bound times the degree of the projection.
pub fn belyi_upper_bound(deg_pi: usize, b: &BranchSet) -> Result<BoundValue> {
    if deg_pi == 0 {
        return Err(Error::InvalidArgument("degree of π must be at least 1".into()));
    }
    Ok(match khadjavi_bound(b.n, &b.height)? {
        BoundValue::Exact(v) => BoundValue::Exact(v * BigInt::from(deg_pi)),
        BoundValue::Log10(iv) => {
            let shift = ln(&BigRational::from_integer(deg_pi.into()), LOG_BITS).div_positive(&ln10(LOG_BITS));
            let shift = if deg_pi == 1 { Interval::point(BigRational::zero()) } else { shift };
            BoundValue::Log10(iv.add(&shift))
        }
    })
}
