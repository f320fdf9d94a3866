//! Rigorous real intervals with rational endpoints, and logarithms to a
//! requested number of bits.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Closed interval `[lo, hi]` known to contain a real number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if c.is_negative() {
            Interval::new(b, a)
        } else {
            Interval::new(a, b)
        }
    }

    /// Quotient of two intervals of positive numbers.
    pub fn div_positive(&self, other: &Interval) -> Interval {
        assert!(other.lo.is_positive() && !self.lo.is_negative());
        Interval::new(&self.lo / &other.hi, &self.hi / &other.lo)
    }

    /// Encloses `max(x, y)` for `x ∈ self`, `y ∈ other`.
    pub fn max(&self, other: &Interval) -> Interval {
        Interval::new(
            self.lo.clone().max(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
        )
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    /// Width at most `2^-bits`.
    pub fn is_tight(&self, bits: u32) -> bool {
        self.width() * pow2(bits as i64) <= BigRational::one()
    }

    /// Decimal rendering of the midpoint with `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal(&self.mid(), digits)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(12))
    }
}

pub fn decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (x * &scale).round().to_integer();
    let neg = scaled.is_negative();
    let s = scaled.abs().to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

pub fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// `floor(log2 x)` for positive `x`, up to an error of one.
fn rough_log2(x: &BigRational) -> i64 {
    x.numer().bits() as i64 - x.denom().bits() as i64
}

/// `2·atanh(u)` in fixed point with `w` fractional bits, `|u| ≤ 1/2`.
/// Returns the value and an error bound in units of `2^-w`.
fn two_atanh_fixed(u: &BigRational, w: usize) -> (BigInt, BigInt) {
    let u2 = u * u;
    let (n2, d2) = (u2.numer().clone(), u2.denom().clone());
    let mut pw: BigInt = (u * BigRational::from_integer(BigInt::one() << w)).to_integer();
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut j = 0u64;
    while !pw.is_zero() {
        sum += &pw / BigInt::from(2 * j + 1);
        pw = &pw * &n2 / &d2;
        j += 1;
        terms += 1;
    }
    // truncation errors stay below 3 ulps per term; the tail below 6
    let err = BigInt::from(6 * terms + 12);
    (sum * 2, err * 2)
}

/// `ln 2` within `2^-bits`.
pub fn ln2(bits: u32) -> Interval {
    let w = bits as usize + 16;
    let (v, e) = two_atanh_fixed(&BigRational::new(1.into(), 3.into()), w);
    fixed_interval(v, e, w)
}

fn fixed_interval(v: BigInt, e: BigInt, w: usize) -> Interval {
    let den = BigInt::one() << w;
    Interval::new(
        BigRational::new(&v - &e, den.clone()),
        BigRational::new(v + e, den),
    )
}

/// Natural logarithm of a positive rational, enclosed in an interval of
/// width about `2^-bits`.
pub fn ln(x: &BigRational, bits: u32) -> Interval {
    assert!(x.is_positive(), "ln of a nonpositive number");
    if x.is_one() {
        return Interval::point(BigRational::zero());
    }
    let k = rough_log2(x);
    let y = x * pow2(-k);
    // y lies in (1/2, 2), so |u| < 1/3
    let u = (&y - BigRational::one()) / (&y + BigRational::one());
    let extra = 64 - (k.unsigned_abs().max(1)).leading_zeros();
    let w = bits as usize + 16 + extra as usize;
    let (vy, ey) = two_atanh_fixed(&u, w);
    let (v2, e2) = two_atanh_fixed(&BigRational::new(1.into(), 3.into()), w);
    let kk = BigInt::from(k);
    let v = vy + &kk * v2;
    let e = ey + kk.abs() * e2;
    fixed_interval(v, e, w)
}

/// `ln 10` within `2^-bits`.
pub fn ln10(bits: u32) -> Interval {
    ln(&BigRational::from_integer(10.into()), bits)
}

/// Lower and upper rational bounds on `√x` for `x ≥ 0`, `2^-bits` apart.
pub fn sqrt_bounds(x: &BigRational, bits: u32) -> (BigRational, BigRational) {
    assert!(!x.is_negative());
    if x.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (x * BigRational::from_integer(scale)).floor().to_integer();
    let r = scaled.sqrt();
    let den = BigInt::one() << bits as usize;
    (
        BigRational::new(r.clone(), den.clone()),
        BigRational::new(r + 1, den),
    )
}

/// Rounds to the nearest multiple of `2^-bits`.
pub fn round_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let s = BigInt::one() << bits as usize;
    let n = (x * BigRational::from_integer(s.clone())).round().to_integer();
    BigRational::new(n, s)
}

/// Exact rational from a finite `f64`.
pub fn from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

/// Is `n` a perfect square? Returns its root if so.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}
