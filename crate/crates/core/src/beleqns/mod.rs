//! Polynomial systems whose solutions are the Belyi maps of a given type on
//! a given curve.
//!
//! A map is written `φ = a/b` with `a = Σ a_i g_i` and `b = Σ b_i g_i` in a
//! Riemann–Roch basis `g_1, …, g_n` of `H^0(X, O(t·D0))`. Its zeros `P_i`,
//! ones `Q_i` and poles `R_i` carry the orders of the ramification type, and
//! the points `Y_j` absorb the common zeros of `a` and `b` forced by the
//! pole of order `m·D0`. Vanishing to a given order is expressed through
//! derivatives along the curve with respect to `x`, with every denominator
//! cleared.
//!
//! Riemann–Roch bases are inputs. Two ship as fixtures: the Fermat quartic
//! with `D0 = (1 : 0 : 1)` and the projective line with `D0 = ∞`.

mod build;
mod cases;
mod curve;
mod rr;

pub use build::{
    build_system, distinctness_constraints, membership_equation, vanishing_equations, AuxKind, AuxPoint,
    BuildOptions, BuiltSystem, EquationKind, Form,
};
pub use cases::{enumerate_cases, general_case, labels, support_name, Chart, Identification, Label, SystemCase, MAX_CASES};
pub use curve::{CurveModel, RationalFunction};
pub use rr::{load_curve, RRData, SupportEntry, SupportPoint};

use crate::error::{Error, Result};

/// Least `t` with `t·d0 ≥ d + g`.
pub fn compute_t(d: usize, g: usize, d0: usize) -> usize {
    (d + g).div_ceil(d0.max(1))
}

/// `dim H^0(X, O(t·D0)) = t·d0 + 1 − g`, valid once `t·d0 > 2g − 2`.
pub fn expected_rr_dimension(t: usize, d0: usize, g: usize) -> Result<usize> {
    let deg = t * d0;
    if deg + 2 <= 2 * g {
        return Err(Error::Precondition(format!(
            "t·d0 = {deg} is not above 2g - 2 = {}",
            2 * g as i64 - 2
        )));
    }
    Ok(deg + 1 - g)
}

/// A named curve with its basis, ready for maps of degree `d`.
pub fn fixture(name: &str, d: usize) -> Result<(CurveModel, RRData)> {
    match name {
        "fermat4" => {
            let curve = CurveModel::fermat4();
            let rr = RRData::fermat4().for_degree(d, curve.genus())?;
            Ok((curve, rr))
        }
        "p1" | "line" => Ok((CurveModel::projective_line(), RRData::projective_line(compute_t(d, 0, 1)))),
        other => Err(Error::InvalidArgument(format!("unknown curve {other:?}; expected fermat4, p1 or a JSON file"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_values() {
        assert_eq!(compute_t(7, 3, 1), 10);
        assert_eq!(compute_t(1, 0, 1), 1);
        assert_eq!(compute_t(7, 3, 2), 5);
        for d in 1..20 {
            for g in 0..5 {
                for d0 in 1..4 {
                    let t = compute_t(d, g, d0);
                    assert!(t * d0 + 1 > d + g);
                    assert!((t - 1) * d0 < d + g);
                }
            }
        }
    }

    #[test]
    fn rr_dimensions() {
        assert_eq!(expected_rr_dimension(10, 1, 3).unwrap(), 8);
        assert_eq!(expected_rr_dimension(1, 1, 0).unwrap(), 2);
        assert_eq!(expected_rr_dimension(4, 1, 1).unwrap(), 4);
        assert!(matches!(expected_rr_dimension(4, 1, 3), Err(Error::Precondition(_))));
        assert_eq!(expected_rr_dimension(5, 1, 3).unwrap(), 3);
    }

    #[test]
    fn fixtures_match_riemann_roch() {
        let (curve, rr) = fixture("fermat4", 7).unwrap();
        assert_eq!(rr.n(), expected_rr_dimension(rr.t(), rr.d0(), curve.genus()).unwrap());
        let (curve, rr) = fixture("p1", 3).unwrap();
        assert_eq!(rr.n(), expected_rr_dimension(rr.t(), rr.d0(), curve.genus()).unwrap());
        assert!(fixture("fermat4", 9).is_err());
        assert!(fixture("nope", 2).is_err());
    }
}
