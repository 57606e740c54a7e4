use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ring::{int, Rational};

/// Dense univariate polynomial over the rationals, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(alloc::vec![c])
    }

    /// `c * X^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = alloc::vec![Rational::zero(); k + 1];
        v[k] = c;
        UPoly::new(v)
    }

    pub fn x() -> Self {
        UPoly::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quo = alloc::vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] / &lead;
            if !c.is_zero() {
                for (i, b) in d.coeffs.iter().enumerate() {
                    rem[k - dd + i] -= &c * b;
                }
                quo[k - dd] = c;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UPoly::new(quo), UPoly::new(rem))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    /// `(g, s)` with `g = gcd(self, m)` monic and `s * self = g (mod m)`.
    pub fn gcd_inverse(&self, m: &UPoly) -> (UPoly, UPoly) {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (UPoly::default(), UPoly::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
        }
        let lead = r0.coeffs.last().cloned().unwrap_or_else(Rational::one);
        let inv = lead.recip();
        (r0.scale(&inv), s0.scale(&inv).rem(m))
    }

    /// The cyclotomic polynomial `Phi_n`.
    pub fn cyclotomic(n: u32) -> UPoly {
        assert!(n >= 1);
        // X^n - 1 divided by Phi_d for every proper divisor d
        let mut p = &UPoly::monomial(Rational::one(), n as usize) - &UPoly::constant(Rational::one());
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = p.div_rem(&UPoly::cyclotomic(d)).0;
            }
        }
        p
    }

    /// `1 - c X^k`
    pub fn one_minus(c: Rational, k: usize) -> UPoly {
        &UPoly::constant(Rational::one()) - &UPoly::monomial(c, k)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::constant(int(1)), |acc, _| &acc * self)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::default();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        self.scale(&int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(UPoly::cyclotomic(1), UPoly::new(alloc::vec![int(-1), int(1)]));
        assert_eq!(UPoly::cyclotomic(2), UPoly::new(alloc::vec![int(1), int(1)]));
        assert_eq!(UPoly::cyclotomic(3), UPoly::new(alloc::vec![int(1), int(1), int(1)]));
        assert_eq!(UPoly::cyclotomic(4), UPoly::new(alloc::vec![int(1), int(0), int(1)]));
        assert_eq!(UPoly::cyclotomic(6), UPoly::new(alloc::vec![int(1), int(-1), int(1)]));
    }

    #[test]
    fn division_and_inverse() {
        let m = UPoly::cyclotomic(5);
        let a = UPoly::one_minus(int(1), 2);
        let (g, s) = a.gcd_inverse(&m);
        assert_eq!(g, UPoly::constant(int(1)));
        assert_eq!((&a * &s).rem(&m), UPoly::constant(int(1)));
        let (q, r) = UPoly::monomial(int(1), 5).div_rem(&UPoly::cyclotomic(5));
        assert_eq!(&(&q * &UPoly::cyclotomic(5)) + &r, UPoly::monomial(int(1), 5));
    }
}
