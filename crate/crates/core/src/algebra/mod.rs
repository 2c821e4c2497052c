//! Exact rationals, Laurent polynomials with fractional exponents, and dense
//! matrices over either ring.

mod laurent;
mod matrix;
mod rational;

pub use laurent::LaurentPoly;
pub use matrix::{Echelon, Matrix, Ring};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
