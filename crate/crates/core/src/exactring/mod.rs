//! Exact coefficient arithmetic and the truncated series kernel.
//!
//! Everything here is exact: coefficients are arbitrary precision rationals
//! and every series carries the highest exponent it knows.

mod cyclotomic;
mod matrix;
mod multiseries;
mod poly;
mod ring;
mod series;
mod sqrt2;
mod upoly;

pub use cyclotomic::CyclotomicField;
pub use matrix::determinant;
pub use multiseries::MultiSeries;
pub use poly::{Monomial, Poly, PolyDisplay};
pub use ring::{double_factorial, factorial, int, is_integer, rat, Rational, Ring};
pub use series::{LaurentSeries, Series};
pub use sqrt2::Sqrt2Poly;
pub use upoly::UPoly;
