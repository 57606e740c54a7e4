use super::ring::{int, Rational};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// The field `Q(w)` for `w` a primitive root of unity of the given order,
/// with elements as polynomials in `w` reduced modulo the cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    modulus: UPoly,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::usage("root of unity of order 0"));
        }
        Ok(CyclotomicField { order, modulus: UPoly::cyclotomic(order) })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn reduce(&self, p: &UPoly) -> UPoly {
        p.rem(&self.modulus)
    }

    /// `w^k` for any integer `k`.
    pub fn root_power(&self, k: i64) -> UPoly {
        let e = k.rem_euclid(self.order as i64) as usize;
        self.reduce(&UPoly::monomial(int(1), e))
    }

    /// `1 - w^k`
    pub fn one_minus_power(&self, k: i64) -> UPoly {
        self.reduce(&(&UPoly::constant(int(1)) - &self.root_power(k)))
    }

    pub fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.reduce(&(a * b))
    }

    pub fn inverse(&self, a: &UPoly) -> Result<UPoly> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Err(Error::domain("division by zero in a cyclotomic field"));
        }
        let (g, s) = a.gcd_inverse(&self.modulus);
        debug_assert_eq!(g, UPoly::constant(int(1)));
        Ok(s)
    }

    pub fn div(&self, a: &UPoly, b: &UPoly) -> Result<UPoly> {
        Ok(self.mul(a, &self.inverse(b)?))
    }

    /// The element as a rational number, when it lies in `Q`.
    pub fn as_rational(&self, a: &UPoly) -> Option<Rational> {
        let a = self.reduce(a);
        match a.degree() {
            None => Some(int(0)),
            Some(0) => Some(a.coeff(0)),
            _ => None,
        }
    }
}
