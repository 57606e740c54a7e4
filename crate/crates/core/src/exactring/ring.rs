use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational numbers, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// The odd factorial `(2k-1)!!`, with `(-1)!! = 1`.
///
/// The argument is `2k - 1` itself, so `double_factorial(5) = 15`.
pub fn double_factorial(n: i64) -> Rational {
    let mut acc = BigInt::one();
    let mut m = n;
    while m > 1 {
        acc *= BigInt::from(m);
        m -= 2;
    }
    Rational::from_integer(acc)
}

/// A commutative ring with a ring map from the rationals.
///
/// Implementors only need enough structure for truncated series arithmetic:
/// division by integers goes through [`Ring::from_rational`], and units are
/// recognised by [`Ring::try_inverse`].
pub trait Ring:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    /// The multiplicative inverse, when this element is a unit that the
    /// representation can express.
    fn try_inverse(&self) -> Option<Self>;
    /// Whether every rational coefficient of the representation is an integer.
    fn is_integral(&self) -> bool;

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * Self::from_rational(r.clone())
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_integral(&self) -> bool {
        is_integer(self)
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorial_convention() {
        assert_eq!(double_factorial(-1), int(1));
        assert_eq!(double_factorial(1), int(1));
        assert_eq!(double_factorial(3), int(3));
        assert_eq!(double_factorial(5), int(15));
        assert_eq!(double_factorial(9), int(945));
    }

    #[test]
    fn rationals_are_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(!is_integer(&r));
        assert_eq!(factorial(5), int(120));
    }
}
