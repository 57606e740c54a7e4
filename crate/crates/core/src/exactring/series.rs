use alloc::vec::Vec;

use super::ring::{int, Rational, Ring};
use crate::error::{Error, Result};

/// A power series `sum_{n <= N} a_n T^n + O(T^{N+1})` over a ring `R`.
///
/// `order()` is the largest exponent whose coefficient is known. Binary
/// operations truncate to the smaller of the two orders.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<R> {
    var: &'static str,
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// From the coefficients of `T^0 .. T^order`; missing ones are zero.
    pub fn new(var: &'static str, coeffs: Vec<R>, order: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, R::zero());
        coeffs.truncate(order + 1);
        Series { var, coeffs }
    }

    pub fn from_fn(var: &'static str, order: usize, f: impl FnMut(usize) -> R) -> Self {
        Series { var, coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(var: &'static str, order: usize) -> Self {
        Series::new(var, Vec::new(), order)
    }

    pub fn one(var: &'static str, order: usize) -> Self {
        Series::constant(var, R::one(), order)
    }

    pub fn constant(var: &'static str, c: R, order: usize) -> Self {
        Series::new(var, alloc::vec![c], order)
    }

    /// The series `T` itself.
    pub fn variable(var: &'static str, order: usize) -> Self {
        Series::new(var, alloc::vec![R::zero(), R::one()], order)
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `T^n`; panics if `n` lies beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &R {
        assert!(
            n <= self.order(),
            "coefficient of {}^{n} is unknown: series is known to order {}",
            self.var,
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.var, self.coeffs.clone(), order.min(self.order()))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { var: self.var, coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn check_compatible(&self, other: &Self) -> Result<usize> {
        if self.var != other.var {
            return Err(Error::usage(alloc::format!("series in {} and {} cannot be combined", self.var, other.var)));
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.check_compatible(other)?;
        Ok(Series::from_fn(self.var, n, |i| self.coeffs[i].clone() + other.coeffs[i].clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let n = self.check_compatible(other)?;
        Ok(Series::from_fn(self.var, n, |i| self.coeffs[i].clone() - other.coeffs[i].clone()))
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// Product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.check_compatible(other)?;
        let mut out: Vec<R> = (0..=n).map(|_| R::zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(Series { var: self.var, coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Series::one(self.var, self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same variable");
        }
        acc
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn mul_inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or_else(|| Error::domain("constant term is not invertible"))?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * out[k - j].clone();
                }
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(Series { var: self.var, coeffs: out })
    }

    /// `outer(inner(T))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let n = self.check_compatible(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::domain("inner series of a composition must vanish at 0"));
        }
        let inner = inner.truncate(n);
        // Horner from the top
        let mut acc = Series::constant(self.var, self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// Compositional inverse of `u T + O(T^2)` with `u` a unit.
    pub fn comp_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("series to invert must vanish at 0"));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(self.var, 0));
        }
        let u_inv =
            self.coeffs[1].try_inverse().ok_or_else(|| Error::domain("linear coefficient is not invertible"))?;
        let mut b = Series::new(self.var, alloc::vec![R::zero(), u_inv.clone()], n);
        for k in 2..=n {
            let ab = self.compose(&b)?;
            let c = ab.coeffs[k].clone();
            b.coeffs[k] = -(c * u_inv.clone());
        }
        Ok(b)
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        Series::from_fn(self.var, n.saturating_sub(1), |i| {
            if i < n {
                self.coeffs[i + 1].scale(&int(i as i64 + 1))
            } else {
                R::zero()
            }
        })
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let n = self.order() + 1;
        Series::from_fn(self.var, n, |i| {
            if i == 0 {
                R::zero()
            } else {
                self.coeffs[i - 1].scale(&Rational::new(1.into(), (i as i64).into()))
            }
        })
    }

    /// `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("exp needs a zero constant term"));
        }
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(R::one());
        // n e_n = sum_k k a_k e_{n-k}
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc + self.coeffs[k].scale(&int(k as i64)) * out[m - k].clone();
                }
            }
            out.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
        }
        Ok(Series { var: self.var, coeffs: out })
    }

    /// `log` of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != R::one() {
            return Err(Error::domain("log needs constant term 1"));
        }
        let n = self.order();
        // (log a)' = a'/a, computed to order n-1 then integrated
        let quotient = self.derivative().mul(&self.truncate(n.saturating_sub(1)).mul_inverse()?)?;
        Ok(quotient.integral().truncate(n))
    }

    /// `T^k * self`, keeping the truncation order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        Series::from_fn(self.var, n, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// `a(-T)`.
    pub fn negate_variable(&self) -> Self {
        Series {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// `a(cT)`.
    pub fn rescale_variable(&self, c: &R) -> Self {
        let mut pow = R::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.clone() * pow.clone());
            pow = pow * c.clone();
        }
        Series { var: self.var, coeffs }
    }

    /// The sum of all known coefficients, i.e. the value at `T = 1` of the truncation.
    pub fn sum_coefficients(&self) -> R {
        self.coeffs.iter().fold(R::zero(), |acc, c| acc + c.clone())
    }

    /// Whether `self == 1` to the truncation order.
    pub fn is_one(&self) -> bool {
        self.coeffs[0] == R::one() && self.coeffs[1..].iter().all(R::is_zero)
    }
}

/// `T^valuation * series`, for the few places that need negative exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<R> {
    pub valuation: i64,
    pub series: Series<R>,
}

impl<R: Ring> LaurentSeries<R> {
    /// Coefficient of `T^e`, zero below the valuation.
    pub fn coeff(&self, e: i64) -> R {
        if e < self.valuation {
            R::zero()
        } else {
            self.series.coeff((e - self.valuation) as usize).clone()
        }
    }

    /// Largest exponent with a known coefficient.
    pub fn max_exponent(&self) -> i64 {
        self.valuation + self.series.order() as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::ring::rat;

    fn s(coeffs: &[Rational], order: usize) -> Series<Rational> {
        Series::new("T", coeffs.to_vec(), order)
    }

    #[test]
    fn mul_examples() {
        let a = s(&[int(1), int(1)], 4);
        let b = s(&[int(1), int(-1)], 4);
        assert_eq!(a.mul(&b).unwrap(), s(&[int(1), int(0), int(-1)], 4));
        assert_eq!(a.mul(&Series::one("T", 4)).unwrap(), a);
        let c = s(&[int(1), int(1), int(1)], 3);
        let d = s(&[int(1), int(-1)], 3);
        assert_eq!(c.mul(&d).unwrap(), s(&[int(1), int(0), int(0), int(-1)], 3));
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = s(&[int(1)], 2);
        let b = Series::new("U", alloc::vec![int(1)], 2);
        assert!(matches!(a.mul(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn order_is_the_minimum() {
        let a = s(&[int(1), int(2)], 5);
        let b = s(&[int(1), int(3)], 2);
        assert_eq!(a.mul(&b).unwrap().order(), 2);
    }

    #[test]
    fn inverse_examples() {
        let a = s(&[int(1), int(1)], 4);
        assert_eq!(a.mul_inverse().unwrap(), s(&[int(1), int(-1), int(1), int(-1), int(1)], 4));
        assert_eq!(Series::<Rational>::one("T", 3).mul_inverse().unwrap(), Series::one("T", 3));
        let b = s(&[int(1), int(1), rat(1, 2)], 3);
        assert_eq!(b.mul_inverse().unwrap(), s(&[int(1), int(-1), rat(1, 2), int(0)], 3));
        assert!(matches!(s(&[int(0), int(1)], 3).mul_inverse(), Err(Error::Domain(_))));
    }

    #[test]
    fn compose_examples() {
        let t = Series::<Rational>::variable("T", 4);
        let f = s(&[int(0), int(2), int(5), int(-1)], 4);
        assert_eq!(t.compose(&f).unwrap(), f);
        let sq = s(&[int(0), int(0), int(1)], 4);
        let inner = s(&[int(0), int(1), int(1)], 4);
        assert_eq!(sq.compose(&inner).unwrap(), s(&[int(0), int(0), int(1), int(2), int(1)], 4));
        // sum (-T)^n/(2n+1)!! evaluated at T
        let eps = s(&[int(1), rat(-1, 3), rat(1, 15)], 2);
        assert_eq!(eps.compose(&Series::variable("T", 2)).unwrap(), eps);
        assert!(matches!(sq.compose(&s(&[int(1), int(1)], 4)), Err(Error::Domain(_))));
    }

    #[test]
    fn comp_inverse_examples() {
        let t = Series::<Rational>::variable("T", 5);
        assert_eq!(t.comp_inverse().unwrap(), t);
        let a = s(&[int(0), int(1), int(1)], 4);
        assert_eq!(a.comp_inverse().unwrap(), s(&[int(0), int(1), int(-1), int(2), int(-5)], 4));
        // T - T^2/2: degree-by-degree solve gives T + T^2/2 + T^3/2
        let b = s(&[int(0), int(1), rat(-1, 2)], 3);
        assert_eq!(b.comp_inverse().unwrap(), s(&[int(0), int(1), rat(1, 2), rat(1, 2)], 3));
        assert!(matches!(s(&[int(0), int(0), int(1)], 3).comp_inverse(), Err(Error::Domain(_))));
    }

    #[test]
    fn log_exp_examples() {
        assert_eq!(Series::<Rational>::zero("T", 5).exp().unwrap(), Series::one("T", 5));
        let mercator = s(&[int(1), int(1)], 4).log().unwrap();
        assert_eq!(mercator, s(&[int(0), int(1), rat(-1, 2), rat(1, 3), rat(-1, 4)], 4));
        let a = s(&[int(1), int(1), int(1)], 6);
        assert_eq!(a.log().unwrap().exp().unwrap(), a);
        assert!(matches!(s(&[int(2)], 3).log(), Err(Error::Domain(_))));
        assert!(matches!(s(&[int(1)], 3).exp(), Err(Error::Domain(_))));
    }
}
