use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polysolve::{parse_expression, MonomialOrder, MultiPoly};

pub(crate) const XY: [&str; 2] = ["x", "y"];

pub(crate) fn xy_names() -> Vec<String> {
    XY.iter().map(|s| s.to_string()).collect()
}

/// Quotient of two polynomials in `x, y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num.arity() != 2 || den.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                got: num.arity().max(den.arity()),
            });
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(num: MultiPoly) -> Self {
        RationalFunction {
            den: MultiPoly::one(num.arity()),
            num,
        }
    }

    /// Parses `num` and `den` as polynomials in `x, y`.
    pub fn parse(num: &str, den: &str) -> Result<Self> {
        Self::new(parse_expression(num, &XY)?, parse_expression(den, &XY)?)
    }

    /// Cancels common monomial and rational factors and makes the
    /// denominator's leading coefficient positive.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return RationalFunction::polynomial(MultiPoly::zero(2));
        }
        let mn = self.num.monomial_content();
        let md = self.den.monomial_content();
        let m: Vec<u32> = mn.iter().zip(&md).map(|(a, b)| *a.min(b)).collect();
        let num = self.num.div_monomial(&m);
        let den = self.den.div_monomial(&m);
        let order = MonomialOrder::GrLex;
        let dp = den.primitive(order);
        let c = den.leading(order).unwrap().1 / dp.leading(order).unwrap().1;
        RationalFunction {
            num: num.scale(&c.recip()),
            den: dp,
        }
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Result<BigRational> {
        let p = [x.clone(), y.clone()];
        let d = self.den.eval(&p)?;
        if d.is_zero() {
            return Err(Error::ChartFailure("denominator vanishes at the point".into()));
        }
        Ok(self.num.eval(&p)? / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = xy_names();
        let order = MonomialOrder::GrLex;
        let wrap = |p: &MultiPoly| {
            let s = p.to_string_with(&names, order);
            if p.len() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_unit() && self.den.coeff(&[0, 0]).is_one() {
            return f.write_str(&self.num.to_string_with(&names, order));
        }
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// Affine plane model `f(x, y) = 0` of a curve, with its asserted genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveModel {
    pub name: String,
    f: MultiPoly,
    genus: usize,
}

impl CurveModel {
    pub fn new(name: impl Into<String>, f: MultiPoly, genus: usize) -> Result<Self> {
        if f.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                got: f.arity(),
            });
        }
        if f.total_degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidArgument("defining polynomial must be nonconstant".into()));
        }
        Ok(CurveModel {
            name: name.into(),
            f,
            genus,
        })
    }

    pub fn parse(name: impl Into<String>, f: &str, genus: usize) -> Result<Self> {
        Self::new(name, parse_expression(f, &XY)?, genus)
    }

    /// `x^4 + y^4 - 1`.
    pub fn fermat4() -> Self {
        Self::parse("fermat4", "x^4 + y^4 - 1", 3).expect("fixture")
    }

    /// The line `y = 0`, a chart of the projective line with coordinate `x`.
    pub fn projective_line() -> Self {
        Self::parse("p1", "y", 0).expect("fixture")
    }

    pub fn defining_polynomial(&self) -> &MultiPoly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `(-∂f/∂x, ∂f/∂y)`.
    pub fn slope_pair(&self) -> (MultiPoly, MultiPoly) {
        (-&self.f.derivative(0), self.f.derivative(1))
    }

    /// `dy/dx` on the curve as a reduced ratio.
    pub fn implicit_slope(&self) -> Result<RationalFunction> {
        let (num, den) = self.slope_pair();
        if den.is_zero() {
            return Err(Error::ChartFailure(format!(
                "{}: df/dy vanishes identically, x is nowhere a uniformizer",
                self.name
            )));
        }
        Ok(RationalFunction { num, den }.reduced())
    }

    /// `δ(T) = f_y·T_x − f_x·T_y`, which is `f_y` times the derivative of `T`
    /// along the curve with respect to `x`.
    pub fn derivation(&self, t: &MultiPoly) -> MultiPoly {
        let fx = self.f.derivative(0);
        let fy = self.f.derivative(1);
        &(&fy * &t.derivative(0)) - &(&fx * &t.derivative(1))
    }

    /// `dg/dx` along the curve, as a reduced ratio.
    pub fn differentiate(&self, g: &RationalFunction) -> Result<RationalFunction> {
        let fy = self.f.derivative(1);
        if fy.is_zero() {
            return Err(Error::ChartFailure(format!("{}: df/dy vanishes identically", self.name)));
        }
        // (δN·D − N·δD) / (D²·f_y)
        let num = &(&self.derivation(&g.num) * &g.den) - &(&g.num * &self.derivation(&g.den));
        let den = &(&g.den * &g.den) * &fy;
        Ok(RationalFunction { num, den }.reduced())
    }

    /// Numerators `T_0, T_1, …, T_{order-1}` with `(d/dx)^j H = T_j / f_y^{e_j}`
    /// on the curve, where `e_j = 2j − 1` for `j ≥ 1`.
    pub fn derivative_numerators(&self, h: &MultiPoly, order: usize) -> Vec<MultiPoly> {
        let mut out = Vec::with_capacity(order);
        if order == 0 {
            return out;
        }
        out.push(h.clone());
        if order == 1 {
            return out;
        }
        let fy = self.f.derivative(1);
        let dfy = self.derivation(&fy);
        let mut t = self.derivation(h);
        let mut e = 1i64;
        out.push(t.clone());
        while out.len() < order {
            let next = &(&self.derivation(&t) * &fy) - &(&t * &dfy).scale(&BigRational::from_integer(e.into()));
            t = next;
            e += 2;
            out.push(t.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::parse(n, d).unwrap()
    }

    #[test]
    fn slopes() {
        assert_eq!(CurveModel::fermat4().implicit_slope().unwrap(), rf("-x^3", "y^3"));
        let circle = CurveModel::parse("circle", "x^2 + y^2 - 1", 0).unwrap();
        assert_eq!(circle.implicit_slope().unwrap(), rf("-x", "y"));
        assert_eq!(CurveModel::projective_line().implicit_slope().unwrap(), rf("0", "1"));
        let vertical = CurveModel::parse("v", "x - 1", 0).unwrap();
        assert!(matches!(vertical.implicit_slope(), Err(Error::ChartFailure(_))));
        assert_eq!(CurveModel::fermat4().implicit_slope().unwrap().to_string(), "-x^3/y^3");
    }

    #[test]
    fn slope_pair_is_the_partials() {
        let c = CurveModel::fermat4();
        let (n, d) = c.slope_pair();
        assert_eq!(n, parse_expression("-4x^3", &XY).unwrap());
        assert_eq!(d, parse_expression("4y^3", &XY).unwrap());
    }

    #[test]
    fn differentiation_along_the_circle() {
        let c = CurveModel::parse("circle", "x^2 + y^2 - 1", 0).unwrap();
        // d/dx (x/y) = (y^2 + x^2)/y^3
        let d = c.differentiate(&rf("x", "y")).unwrap();
        assert_eq!(d, rf("x^2 + y^2", "y^3"));
        let line = CurveModel::projective_line();
        assert_eq!(line.differentiate(&rf("x^3", "1")).unwrap(), rf("3x^2", "1"));
    }

    #[test]
    fn constant_curve_rejected() {
        assert!(CurveModel::parse("c", "3", 0).is_err());
    }

    #[test]
    fn derivative_numerators_on_the_circle() {
        // on x^2+y^2=1 with h = y: dy/dx = -x/y, d2y/dx2 = -1/y^3
        let c = CurveModel::parse("circle", "x^2 + y^2 - 1", 0).unwrap();
        let t = c.derivative_numerators(&parse_expression("y", &XY).unwrap(), 3);
        // T1 / f_y = -x/y with f_y = 2y
        assert_eq!(t[1], parse_expression("-2x", &XY).unwrap());
        // T2 / f_y^3 should equal -1/y^3 modulo the curve
        let lhs = &t[2];
        let rhs = parse_expression("-8", &XY).unwrap();
        let diff = lhs - &rhs;
        let r = crate::polysolve::reduce(&diff, &[c.defining_polynomial().clone()], MonomialOrder::Lex).unwrap();
        assert!(r.is_zero(), "{}", r.to_string_with(&xy_names(), MonomialOrder::Lex));
    }
}
