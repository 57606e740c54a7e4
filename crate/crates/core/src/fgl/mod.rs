//! Formal group laws of additive type, `F(X, Y) = e(l(X) + l(Y))`, and the
//! genera they classify.

mod epsilon;
mod kw;

pub use epsilon::{epsilon_exponential, epsilon_law, hirzebruch_series, kw_matches_epsilon, HirzebruchSeries};
pub use kw::{
    integrality_check, kw_exponential, kw_exponential_q, kw_genus, kw_logarithm, mod_p_polynomial_check,
    universal_additive_law, universal_matches_kw, IntegralityWitness, ModPWitness,
};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactring::{int, MultiSeries, Ring, Series};

/// A one-dimensional formal group law with its exponential, logarithm and
/// negation series, all truncated at total degree `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupLaw<R> {
    pub exponential: Series<R>,
    pub logarithm: Series<R>,
    /// `F(X, Y)`; variable 0 is `X`, variable 1 is `Y`.
    pub law: MultiSeries<R>,
    /// `[-1](T) = e(-l(T))`.
    pub negation: Series<R>,
}

/// Builds `F = e(l(X) + l(Y))` from `e = u T + O(T^2)` with `u` invertible.
pub fn law_from_exponential<R: Ring>(exponential: &Series<R>) -> Result<GroupLaw<R>> {
    if !exponential.coeff(0).is_zero() {
        return Err(Error::domain("an exponential must vanish at 0"));
    }
    if exponential.order() < 1 {
        return Err(Error::usage("an exponential needs order at least 1"));
    }
    let logarithm = exponential.comp_inverse()?;
    let n = exponential.order() as u32;
    let lx = MultiSeries::from_univariate(2, 0, &logarithm);
    let ly = MultiSeries::from_univariate(2, 1, &logarithm);
    let law = lx.add(&ly)?.compose_into(exponential)?;
    let negation = exponential.compose(&logarithm.neg())?;
    debug_assert_eq!(law.order(), n);
    Ok(GroupLaw { exponential: exponential.clone(), logarithm, law, negation })
}

fn agree<R: Ring>(a: &MultiSeries<R>, b: &MultiSeries<R>) -> bool {
    let n = a.order().min(b.order());
    a.truncate(n) == b.truncate(n)
}

/// Which group law axioms hold to the truncation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub unit: bool,
    pub commutative: bool,
    pub associative: bool,
    pub negation: bool,
    pub exp_log_inverse: bool,
    /// `l'(F(X,Y)) dF/dX = l'(X)`: `l'(T) dT` is translation invariant.
    pub invariant_differential: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.unit
            && self.commutative
            && self.associative
            && self.negation
            && self.exp_log_inverse
            && self.invariant_differential
    }
}

impl<R: Ring> GroupLaw<R> {
    pub fn order(&self) -> u32 {
        self.law.order()
    }

    /// Coefficient of `X^i Y^j` in the law.
    pub fn coeff(&self, i: u32, j: u32) -> R {
        self.law.coeff(&[i, j])
    }

    /// Evaluates the axioms with exact coefficient comparisons.
    pub fn check_axioms(&self) -> Result<AxiomReport> {
        let n = self.order();
        let x = MultiSeries::<R>::variable(2, n, 0);
        let y = MultiSeries::<R>::variable(2, n, 1);
        let unit = agree(&self.law.restrict_zero(&[1]), &x) && agree(&self.law.restrict_zero(&[0]), &y);
        let commutative = agree(&self.law.swap(0, 1), &self.law);

        let v = |i| MultiSeries::<R>::variable(3, n, i);
        let f_xy = self.law.substitute(&[v(0), v(1)])?;
        let f_yz = self.law.substitute(&[v(1), v(2)])?;
        let left = self.law.substitute(&[f_xy, v(2)])?;
        let right = self.law.substitute(&[v(0), f_yz])?;
        let associative = agree(&left, &right);

        let t = MultiSeries::<R>::variable(1, n, 0);
        let inv = MultiSeries::from_univariate(1, 0, &self.negation);
        let negation = self.law.substitute(&[t, inv])?.is_zero();

        let id = Series::<R>::variable(self.exponential.var(), n as usize);
        let exp_log_inverse =
            self.exponential.compose(&self.logarithm)? == id && self.logarithm.compose(&self.exponential)? == id;

        let dl = self.logarithm.derivative();
        let lhs = self.law.compose_into(&dl)?.mul(&self.law.partial(0))?;
        let rhs = MultiSeries::from_univariate(2, 0, &dl);
        let invariant_differential = agree(&lhs, &rhs);

        Ok(AxiomReport { unit, commutative, associative, negation, exp_log_inverse, invariant_differential })
    }

    /// `phi(CP^n) = (n+1) [T^{n+1}] l(T)` for `n = 0 .. order-1`.
    pub fn genus_values(&self) -> GenusValues<R> {
        GenusValues::from_logarithm(&self.logarithm)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> GroupLaw<S> {
        GroupLaw {
            exponential: self.exponential.map(f),
            logarithm: self.logarithm.map(f),
            law: self.law.map(f),
            negation: self.negation.map(f),
        }
    }
}

/// The values of a genus on `CP^0, CP^1, ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusValues<R> {
    pub values: Vec<R>,
}

impl<R: Ring> GenusValues<R> {
    /// `phi(CP^n) = (n+1) [T^{n+1}] l(T)` for `n = 0 .. order-1`.
    pub fn from_logarithm(logarithm: &Series<R>) -> Self {
        let values = (0..logarithm.order()).map(|n| logarithm.coeff(n + 1).scale(&int(n as i64 + 1))).collect();
        GenusValues { values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{rat, Rational};

    fn exp_like(a: &Rational, n: usize) -> Series<Rational> {
        // (exp(aT) - 1)/a
        let mut c = Vec::new();
        let mut term = int(1);
        c.push(int(0));
        for k in 1..=n {
            term /= int(k as i64);
            let mut v = term.clone();
            for _ in 1..k {
                v *= a;
            }
            c.push(v);
        }
        Series::new("T", c, n)
    }

    #[test]
    fn additive_and_multiplicative() {
        let add = law_from_exponential(&Series::<Rational>::variable("T", 6)).unwrap();
        assert_eq!(add.law.terms().count(), 2);
        assert!(add.check_axioms().unwrap().all());
        let a = rat(3, 2);
        let mult = law_from_exponential(&exp_like(&a, 8)).unwrap();
        assert!(mult.check_axioms().unwrap().all());
        assert_eq!(mult.coeff(1, 1), a);
        assert_eq!(mult.coeff(2, 1), int(0));
        assert_eq!(mult.coeff(1, 0), int(1));
        assert_eq!(mult.law.terms().count(), 3);
    }

    #[test]
    fn bad_exponentials() {
        let shifted = Series::new("T", alloc::vec![int(1), int(1)], 3);
        assert!(law_from_exponential(&shifted).is_err());
        let flat = Series::new("T", alloc::vec![int(0), int(0), int(1)], 3);
        assert!(matches!(law_from_exponential(&flat), Err(Error::Domain(_))));
    }
}
