use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactring::{Monomial, Poly, Rational};

/// `Q[s_0, s_1, ...] / (s_i^N)`: a test ring whose generators are nilpotent
/// of order `N`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Nilpotent<const N: u32>(Poly);

impl<const N: u32> Nilpotent<N> {
    pub fn from_poly(p: Poly) -> Self {
        Nilpotent(p.filter(|m| m.iter().all(|(_, e)| e >= 0 && (e as u32) < N)))
    }

    /// The generator `s_v`.
    pub fn var(v: u32) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn constant(c: Rational) -> Self {
        Nilpotent(Poly::constant(c))
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn constant_term(&self) -> Rational {
        self.0.constant_term()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.0.coeff(m)
    }

    /// Whether the element lies in the maximal ideal `(s_0, s_1, ...)`.
    pub fn is_nilpotent(&self) -> bool {
        self.0.constant_term().is_zero()
    }
}

fn name(v: u32) -> String {
    match v {
        0 => "s".into(),
        1 => "u".into(),
        _ => alloc::format!("s{v}"),
    }
}

impl<const N: u32> fmt::Display for Nilpotent<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.display_with(name))
    }
}

impl<const N: u32> Add for Nilpotent<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Nilpotent(self.0 + rhs.0)
    }
}

impl<const N: u32> Sub for Nilpotent<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Nilpotent(self.0 - rhs.0)
    }
}

impl<const N: u32> Mul for Nilpotent<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_poly(&self.0 * &rhs.0)
    }
}

impl<const N: u32> Neg for Nilpotent<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Nilpotent(-&self.0)
    }
}

impl<const N: u32> crate::exactring::Ring for Nilpotent<N> {
    fn zero() -> Self {
        Nilpotent(Poly::default())
    }

    fn one() -> Self {
        Self::constant(<Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }

    /// `c (1 - u)` with `u` nilpotent inverts as `c^{-1} sum u^k`.
    fn try_inverse(&self) -> Option<Self> {
        let c = self.constant_term();
        if Zero::is_zero(&c) {
            return None;
        }
        let c_inv = c.recip();
        let u = Self::one() - self.clone() * Self::constant(c_inv.clone());
        let mut sum = Self::one();
        let mut power = u.clone();
        while !power.0.is_empty() {
            sum = sum + power.clone();
            power = power * u.clone();
        }
        Some(sum * Self::constant(c_inv))
    }

    fn is_integral(&self) -> bool {
        crate::exactring::Ring::is_integral(&self.0)
    }
}
