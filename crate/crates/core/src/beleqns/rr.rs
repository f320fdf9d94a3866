use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Deserialize;

use super::curve::{CurveModel, RationalFunction};
use super::compute_t;
use crate::error::{Error, Result};
use crate::polysolve::{parse_rational, MonomialOrder, MultiPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportPoint {
    Affine(BigRational, BigRational),
    Infinity,
}

impl fmt::Display for SupportPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportPoint::Affine(x, y) => write!(f, "({x}, {y})"),
            SupportPoint::Infinity => f.write_str("infinity"),
        }
    }
}

/// A point in the support of `D0`, its multiplicity, and the pole order of
/// each basis function there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportEntry {
    pub point: SupportPoint,
    pub multiplicity: usize,
    pub pole_orders: Vec<u32>,
}

impl SupportEntry {
    /// Pole orders pairwise distinct, so the order of a combination is
    /// read off from its support.
    pub fn separates_basis(&self) -> bool {
        let mut v = self.pole_orders.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }
}

/// A basis of `H^0(X, O(t·D0))` as rational functions in `x, y`, with the
/// least multiple of `D0` each one belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRData {
    t: usize,
    support: Vec<SupportEntry>,
    basis: Vec<RationalFunction>,
    tiers: Vec<u32>,
}

impl RRData {
    pub fn new(t: usize, support: Vec<SupportEntry>, basis: Vec<RationalFunction>, tiers: Vec<u32>) -> Result<Self> {
        let n = basis.len();
        if support.is_empty() || support.iter().any(|s| s.multiplicity == 0) {
            return Err(Error::InvalidArgument("D0 must be effective of positive degree".into()));
        }
        if n == 0 || tiers.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{n} basis functions but {} tiers",
                tiers.len()
            )));
        }
        let first = &basis[0];
        if tiers[0] != 0 || first.num != first.den {
            return Err(Error::InvalidArgument("first basis function must be 1 with tier 0".into()));
        }
        if tiers.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument("tiers must be weakly increasing".into()));
        }
        if tiers[n - 1] as usize > t {
            return Err(Error::InvalidArgument(format!("tier {} exceeds t = {t}", tiers[n - 1])));
        }
        for s in &support {
            if s.pole_orders.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "support point {} lists {} pole orders for {n} basis functions",
                    s.point,
                    s.pole_orders.len()
                )));
            }
        }
        Ok(RRData {
            t,
            support,
            basis,
            tiers,
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn support(&self) -> &[SupportEntry] {
        &self.support
    }

    pub fn basis(&self) -> &[RationalFunction] {
        &self.basis
    }

    pub fn tiers(&self) -> &[u32] {
        &self.tiers
    }

    pub fn n(&self) -> usize {
        self.basis.len()
    }

    /// `deg D0`.
    pub fn d0(&self) -> usize {
        self.support.iter().map(|s| s.multiplicity).sum()
    }

    /// Keeps the basis functions of tier at most `t`.
    pub fn truncated(&self, t: usize) -> Result<Self> {
        if t > self.t {
            return Err(Error::Precondition(format!(
                "basis covers t <= {}, but t = {t} is needed",
                self.t
            )));
        }
        let keep = self.tiers.iter().take_while(|&&m| m as usize <= t).count();
        let support = self
            .support
            .iter()
            .map(|s| SupportEntry {
                pole_orders: s.pole_orders[..keep].to_vec(),
                ..s.clone()
            })
            .collect();
        RRData::new(t, support, self.basis[..keep].to_vec(), self.tiers[..keep].to_vec())
    }

    /// The data needed for maps of degree `d` on a curve of genus `g`.
    pub fn for_degree(&self, d: usize, g: usize) -> Result<Self> {
        self.truncated(compute_t(d, g, self.d0()))
    }

    /// Checks that affine support points lie on the curve.
    pub fn check_curve(&self, curve: &CurveModel) -> Result<()> {
        for s in &self.support {
            if let SupportPoint::Affine(x, y) = &s.point {
                if !curve.defining_polynomial().eval(&[x.clone(), y.clone()])?.is_zero() {
                    return Err(Error::InvalidArgument(format!(
                        "support point {} is not on {}",
                        s.point, curve.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// A common denominator `D` of the basis and the numerators `D·g_i`.
    pub fn cleared_numerators(&self) -> (MultiPoly, Vec<MultiPoly>) {
        let order = MonomialOrder::GrLex;
        // den_i = c_i · m_i · q_i with m_i a monomial and q_i primitive
        let mut parts = Vec::with_capacity(self.n());
        let mut lcm_mono = vec![0u32; 2];
        let mut factors: Vec<MultiPoly> = Vec::new();
        for g in &self.basis {
            let m = g.den.monomial_content();
            let rest = g.den.div_monomial(&m);
            let q = rest.primitive(order);
            let c = rest.leading(order).unwrap().1 / q.leading(order).unwrap().1;
            for (l, e) in lcm_mono.iter_mut().zip(&m) {
                *l = (*l).max(*e);
            }
            let q = if q.is_unit() { None } else { Some(q) };
            if let Some(q) = &q {
                if !factors.contains(q) {
                    factors.push(q.clone());
                }
            }
            parts.push((c, m, q));
        }
        let mut d = MultiPoly::monomial(2, lcm_mono.clone(), BigRational::one());
        for q in &factors {
            d = &d * q;
        }
        let nums = self
            .basis
            .iter()
            .zip(parts)
            .map(|(g, (c, m, q))| {
                let shift: Vec<u32> = lcm_mono.iter().zip(&m).map(|(a, b)| a - b).collect();
                let mut h = g.num.mul_monomial(&shift, &c.recip());
                for f in &factors {
                    if Some(f) != q.as_ref() {
                        h = &h * f;
                    }
                }
                h
            })
            .collect();
        (d, nums)
    }

    /// The quartic's basis for `t = 10`, `D0 = (1 : 0 : 1)`.
    pub fn fermat4() -> Self {
        let u = "(x^3 + x^2 + x + 1)";
        let g4 = format!("4{u} - x^2y^4 - 2xy^4 - 3y^4");
        let g7 = format!("16{u} - 6x^3y^4 - 10x^2y^4 + xy^8 - 14xy^4 + 3y^8 - 18y^4");
        let g8 = format!("32{u} - 3x^2y^8 - 8x^2y^4 - 4xy^8 - 16xy^4 - 3y^8 - 24y^4");
        let table: [(&str, &str); 8] = [
            ("1", "1"),
            (u, "y^3"),
            (u, "y^4"),
            (&g4, "4y^6"),
            (&g4, "4y^7"),
            (&g4, "4y^8"),
            (&g7, "6y^9"),
            (&g8, "32y^10"),
        ];
        let basis = table
            .iter()
            .map(|(n, d)| RationalFunction::parse(n, d).expect("fixture"))
            .collect();
        let poles = vec![0, 3, 4, 6, 7, 8, 9, 10];
        let support = vec![SupportEntry {
            point: SupportPoint::Affine(BigRational::one(), BigRational::zero()),
            multiplicity: 1,
            pole_orders: poles.clone(),
        }];
        RRData::new(10, support, basis, poles).expect("fixture")
    }

    /// `1, x, …, x^t` on the projective line with `D0` the point at infinity.
    pub fn projective_line(t: usize) -> Self {
        let basis = (0..=t)
            .map(|i| RationalFunction::polynomial(MultiPoly::monomial(2, vec![i as u32, 0], BigRational::one())))
            .collect();
        let orders: Vec<u32> = (0..=t as u32).collect();
        let support = vec![SupportEntry {
            point: SupportPoint::Infinity,
            multiplicity: 1,
            pole_orders: orders.clone(),
        }];
        RRData::new(t, support, basis, orders).expect("fixture")
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveFile {
    name: String,
    f: String,
    genus: usize,
    t: usize,
    support: Vec<SupportFile>,
    basis: Vec<BasisFile>,
    tiers: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SupportFile {
    /// `["x", "y"]` as rationals, or the string `"infinity"`.
    point: serde_json::Value,
    multiplicity: usize,
    pole_orders: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisFile {
    num: String,
    #[serde(default = "one")]
    den: String,
}

fn one() -> String {
    "1".into()
}

/// Reads a curve and its basis from JSON:
///
/// ```json
/// {"name": "circle", "f": "x^2 + y^2 - 1", "genus": 0, "t": 2,
///  "support": [{"point": ["1", "0"], "multiplicity": 1, "pole_orders": [0, 1, 2]}],
///  "basis": [{"num": "1"}, {"num": "x + 1", "den": "y"}, ...],
///  "tiers": [0, 1, 2]}
/// ```
pub fn load_curve(text: &str) -> Result<(CurveModel, RRData)> {
    let file: CurveFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("curve file: {e}")))?;
    let curve = CurveModel::parse(file.name, &file.f, file.genus)?;
    let support = file
        .support
        .into_iter()
        .map(|s| {
            let point = match &s.point {
                serde_json::Value::String(w) if w == "infinity" => SupportPoint::Infinity,
                serde_json::Value::Array(xy) if xy.len() == 2 => {
                    let coord = |v: &serde_json::Value| match v {
                        serde_json::Value::String(t) => parse_rational(t),
                        serde_json::Value::Number(n) => parse_rational(&n.to_string()),
                        _ => Err(Error::Parse("coordinates must be strings or integers".into())),
                    };
                    SupportPoint::Affine(coord(&xy[0])?, coord(&xy[1])?)
                }
                other => return Err(Error::Parse(format!("bad support point {other}"))),
            };
            Ok(SupportEntry {
                point,
                multiplicity: s.multiplicity,
                pole_orders: s.pole_orders,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let basis = file
        .basis
        .iter()
        .map(|b| RationalFunction::parse(&b.num, &b.den))
        .collect::<Result<Vec<_>>>()?;
    let rr = RRData::new(file.t, support, basis, file.tiers)?;
    rr.check_curve(&curve)?;
    Ok((curve, rr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polysolve::parse_expression;

    #[test]
    fn fermat_fixture_shape() {
        let rr = RRData::fermat4();
        assert_eq!(rr.n(), 8);
        assert_eq!(rr.d0(), 1);
        assert!(rr.support()[0].separates_basis());
        rr.check_curve(&CurveModel::fermat4()).unwrap();
        // g5 = g4 / y and g6 = g4 / y^2
        let b = rr.basis();
        assert_eq!(&b[4].den, &(&b[3].den * &parse_expression("y", &["x", "y"]).unwrap()));
        assert_eq!(b[5].num, b[3].num);
    }

    #[test]
    fn cleared_numerators_recover_the_basis() {
        let rr = RRData::fermat4();
        let (d, nums) = rr.cleared_numerators();
        assert_eq!(d, parse_expression("y^10", &["x", "y"]).unwrap());
        for (g, h) in rr.basis().iter().zip(&nums) {
            assert_eq!(&(&g.num * &d), &(h * &g.den));
        }
        let mixed = RRData::new(
            1,
            vec![SupportEntry {
                point: SupportPoint::Infinity,
                multiplicity: 1,
                pole_orders: vec![0, 1, 1],
            }],
            vec![
                RationalFunction::parse("1", "1").unwrap(),
                RationalFunction::parse("x", "2y(x+1)").unwrap(),
                RationalFunction::parse("1", "x - 1").unwrap(),
            ],
            vec![0, 1, 1],
        )
        .unwrap();
        let (d, nums) = mixed.cleared_numerators();
        for (g, h) in mixed.basis().iter().zip(&nums) {
            assert_eq!(&(&g.num * &d), &(h * &g.den));
        }
        assert!(!mixed.support()[0].separates_basis());
    }

    #[test]
    fn truncation() {
        let rr = RRData::projective_line(5).for_degree(2, 0).unwrap();
        assert_eq!(rr.t(), 2);
        assert_eq!(rr.n(), 3);
        assert!(RRData::projective_line(1).for_degree(3, 0).is_err());
        let f = RRData::fermat4().truncated(6).unwrap();
        assert_eq!(f.tiers(), &[0, 3, 4, 6]);
    }

    #[test]
    fn validation() {
        let one = RationalFunction::parse("1", "1").unwrap();
        let x = RationalFunction::parse("x", "1").unwrap();
        let inf = |p: Vec<u32>| SupportEntry {
            point: SupportPoint::Infinity,
            multiplicity: 1,
            pole_orders: p,
        };
        assert!(RRData::new(1, vec![inf(vec![1, 0])], vec![x.clone(), one.clone()], vec![1, 0]).is_err());
        assert!(RRData::new(1, vec![inf(vec![0])], vec![one.clone(), x.clone()], vec![0, 1]).is_err());
        assert!(RRData::new(1, vec![], vec![one.clone()], vec![0]).is_err());
        assert!(RRData::new(0, vec![inf(vec![0, 1])], vec![one, x], vec![0, 1]).is_err());
    }

    #[test]
    fn curve_file_round_trip() {
        let text = r#"{"name": "line", "f": "y", "genus": 0, "t": 2,
            "support": [{"point": "infinity", "multiplicity": 1, "pole_orders": [0, 1, 2]}],
            "basis": [{"num": "1"}, {"num": "x"}, {"num": "x^2"}],
            "tiers": [0, 1, 2]}"#;
        let (curve, rr) = load_curve(text).unwrap();
        assert_eq!(curve.defining_polynomial(), CurveModel::projective_line().defining_polynomial());
        assert_eq!(rr, RRData::projective_line(2));
        let off = text.replace("\"infinity\"", "[\"0\", \"1\"]");
        assert!(load_curve(&off).is_err());
    }
}
