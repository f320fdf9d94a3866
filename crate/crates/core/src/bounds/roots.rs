//! Certified root enclosures for integer polynomials.
//!
//! Approximations come from Aberth iteration in `f64`, are polished by Newton
//! steps in dyadic rational arithmetic, and are then certified with the
//! Weierstrass-correction discs `D(zᵢ, n·|f(zᵢ)| / |aₙ ∏_{j≠i}(zᵢ − zⱼ)|)`:
//! their union holds every root, and a disc disjoint from the others holds
//! exactly one.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::real::{from_f64, round_dyadic, sqrt_bounds};

#[derive(Clone, Debug)]
pub(crate) struct QComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl QComplex {
    fn zero() -> Self {
        QComplex {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn add(&self, o: &QComplex) -> QComplex {
        QComplex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &QComplex) -> QComplex {
        QComplex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &QComplex) -> QComplex {
        QComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
    fn div(&self, o: &QComplex) -> QComplex {
        let n = o.norm_sqr();
        QComplex {
            re: (&self.re * &o.re + &self.im * &o.im) / &n,
            im: (&self.im * &o.re - &self.re * &o.im) / &n,
        }
    }
    fn round(&self, bits: u32) -> QComplex {
        QComplex {
            re: round_dyadic(&self.re, bits),
            im: round_dyadic(&self.im, bits),
        }
    }
}

/// A disc `|z − center| ≤ radius` holding exactly one root.
#[derive(Clone, Debug)]
pub(crate) struct RootDisc {
    pub center: QComplex,
    pub radius: BigRational,
}

fn horner_f64(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Aberth–Ehrlich iteration; `coeffs` low degree first.
pub(crate) fn aberth(coeffs: &[BigInt]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let c: Vec<f64> = coeffs.iter().map(|a| a.to_f64().unwrap_or(f64::MAX)).collect();
    let lead = c[n].abs();
    let cauchy = 1.0 + c[..n].iter().map(|a| a.abs() / lead).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(0.5 * cauchy, theta)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner_f64(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm() / z[i].norm().max(1.0));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn eval(coeffs: &[BigRational], z: &QComplex) -> (QComplex, QComplex) {
    let mut p = QComplex::zero();
    let mut dp = QComplex::zero();
    for c in coeffs.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z);
        p.re += c;
    }
    (p, dp)
}

/// Certified discs, one per root, at `bits` of working precision. `None`
/// when the discs fail to separate.
pub(crate) fn certified_roots(coeffs: &[BigInt], bits: u32) -> Option<Vec<RootDisc>> {
    let n = coeffs.len() - 1;
    let q: Vec<BigRational> = coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let mut zs: Vec<QComplex> = aberth(coeffs)
        .into_iter()
        .map(|z| QComplex {
            re: from_f64(z.re),
            im: from_f64(z.im),
        })
        .collect();
    if zs.iter().any(|z| z.re.is_zero() && z.im.is_zero() && !coeffs[0].is_zero()) {
        return None;
    }

    // Newton doubles the correct bits from about 45
    let mut steps = 2;
    let mut b = 45;
    while b < bits {
        b *= 2;
        steps += 1;
    }
    for z in zs.iter_mut() {
        for _ in 0..steps {
            let (p, dp) = eval(&q, z);
            if dp.norm_sqr().is_zero() {
                break;
            }
            *z = z.sub(&p.div(&dp)).round(bits + 8);
        }
    }

    let lead = &q[n];
    let nn = BigRational::from_integer(BigInt::from(n));
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let (p, _) = eval(&q, &zs[i]);
        let mut den = lead * lead;
        for j in 0..n {
            if j != i {
                den *= zs[i].sub(&zs[j]).norm_sqr();
            }
        }
        if den.is_zero() {
            return None;
        }
        let r2 = &nn * &nn * p.norm_sqr() / den;
        radii.push(sqrt_bounds(&r2, bits + 8).1);
    }
    for i in 0..n {
        for j in i + 1..n {
            let gap = zs[i].sub(&zs[j]).norm_sqr();
            let reach = &radii[i] + &radii[j];
            if gap <= &reach * &reach {
                return None;
            }
        }
    }
    Some(
        zs.into_iter()
            .zip(radii)
            .map(|(center, radius)| RootDisc { center, radius })
            .collect(),
    )
}
