use core::ops::{Add, Neg, Sub};

use super::poly::Poly;
use super::ring::{rat, Rational};

/// `rational + surd * sqrt(2)` with polynomial parts.
///
/// Individual oscillator modes carry a factor `2^{-1/2}`; products of two
/// modes land back in the rational part.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sqrt2Poly {
    pub rational: Poly,
    pub surd: Poly,
}

impl Sqrt2Poly {
    pub fn from_rational(p: Poly) -> Self {
        Sqrt2Poly { rational: p, surd: Poly::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_empty() && self.surd.is_empty()
    }

    /// Multiplies by `2^{-1/2} = sqrt(2)/2`.
    pub fn times_inv_sqrt2(&self) -> Self {
        // (a + b sqrt2) sqrt2 / 2 = b + (a/2) sqrt2
        Sqrt2Poly { rational: self.surd.clone(), surd: self.rational.scale_by(&rat(1, 2)) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Sqrt2Poly { rational: self.rational.scale_by(c), surd: self.surd.scale_by(c) }
    }

    /// Applies a rational linear map to both parts.
    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        Sqrt2Poly { rational: f(&self.rational), surd: f(&self.surd) }
    }
}

impl Add for Sqrt2Poly {
    type Output = Sqrt2Poly;
    fn add(self, rhs: Self) -> Self {
        Sqrt2Poly { rational: self.rational + rhs.rational, surd: self.surd + rhs.surd }
    }
}

impl Sub for Sqrt2Poly {
    type Output = Sqrt2Poly;
    fn sub(self, rhs: Self) -> Self {
        Sqrt2Poly { rational: self.rational - rhs.rational, surd: self.surd - rhs.surd }
    }
}

impl Neg for Sqrt2Poly {
    type Output = Sqrt2Poly;
    fn neg(self) -> Self {
        Sqrt2Poly { rational: -self.rational, surd: -self.surd }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::ring::int;

    #[test]
    fn two_inverse_roots_make_a_half() {
        let one = Sqrt2Poly::from_rational(Poly::constant(int(1)));
        let twice = one.times_inv_sqrt2().times_inv_sqrt2();
        assert_eq!(twice, Sqrt2Poly::from_rational(Poly::constant(rat(1, 2))));
        assert_eq!(one.times_inv_sqrt2().surd, Poly::constant(rat(1, 2)));
        assert!(one.times_inv_sqrt2().rational.is_empty());
        assert_eq!(one.scale(&int(0)), Sqrt2Poly::default());
    }
}
