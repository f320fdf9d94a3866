//! Exact sparse polynomials over the rationals and a Buchberger engine for
//! deciding whether small systems have a common zero.
//!
//! Systems with rational coefficients have no common zero over the algebraic
//! closure exactly when `1` lies in the ideal they generate over the
//! rationals, so the whole computation stays in `Q`.

mod expr;
mod groebner;
mod poly;
mod system;

pub use expr::{parse_expression, parse_rational};
pub use groebner::{
    buchberger, is_empty_variety, is_reduced, reduce, verify_groebner, GroebnerBasis, Interrupted, Limits, Stats,
    Verdict,
};
pub use poly::{Exponents, MonomialOrder, MultiPoly};
pub use system::{format_terms, PolynomialSystem};
