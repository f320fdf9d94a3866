//! Belyi-degree certificates for algebraic curves.
//!
//! Ramification types are filtered by Riemann–Hurwitz ([`passports`]), Belyi
//! maps of a given type are counted as permutation triples up to simultaneous
//! conjugation ([`census`]), effective upper bounds come from heights of
//! branch sets ([`bounds`]), and [`beleqns`] writes the polynomial systems
//! whose solutions are the maps themselves, small ones of which
//! [`polysolve`] decides.

pub mod beleqns;
pub mod bounds;
pub mod census;
pub mod cli;
pub mod error;
pub mod passports;
pub mod perm;
pub mod polysolve;

pub use error::{Error, Result};
