use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::ring::Ring;
use super::series::Series;
use crate::error::{Error, Result};

/// A power series in several variables truncated at total degree `order`.
///
/// Used for group laws `F(X, Y)` and, inside the associativity check, for
/// series in three variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiSeries<R> {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: Ring> MultiSeries<R> {
    pub fn zero(nvars: usize, order: u32) -> Self {
        MultiSeries { nvars, order, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, order: u32, c: R) -> Self {
        let mut s = MultiSeries::zero(nvars, order);
        s.add_term(alloc::vec![0; nvars], c);
        s
    }

    /// The `i`-th coordinate function.
    pub fn variable(nvars: usize, order: u32, i: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[i] = 1;
        let mut s = MultiSeries::zero(nvars, order);
        s.add_term(e, R::one());
        s
    }

    /// Embeds a univariate series as a function of coordinate `i`.
    pub fn from_univariate(nvars: usize, i: usize, f: &Series<R>) -> Self {
        let mut s = MultiSeries::zero(nvars, f.order() as u32);
        for (k, c) in f.coeffs().iter().enumerate() {
            let mut e = alloc::vec![0; nvars];
            e[i] = k as u32;
            s.add_term(e, c.clone());
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: R) {
        assert_eq!(exps.len(), self.nvars);
        if exps.iter().sum::<u32>() > self.order || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(R::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms.get(exps).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        MultiSeries {
            nvars: self.nvars,
            order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= order)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<u32> {
        if self.nvars != other.nvars {
            return Err(Error::usage("series in different numbers of variables"));
        }
        Ok(self.order.min(other.order))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        let mut out = self.truncate(n);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiSeries {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        let mut out = MultiSeries::zero(self.nvars, n);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            if da > n {
                continue;
            }
            for (eb, cb) in &other.terms {
                if da + eb.iter().sum::<u32>() > n {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    fn has_constant_term(&self) -> bool {
        !self.coeff(&alloc::vec![0; self.nvars]).is_zero()
    }

    /// `outer(self)` for a univariate `outer`; `self` must vanish at the origin.
    pub fn compose_into(&self, outer: &Series<R>) -> Result<Self> {
        if self.has_constant_term() {
            return Err(Error::domain("inner series of a composition must vanish at 0"));
        }
        let n = self.order.min(outer.order() as u32);
        let inner = self.truncate(n);
        let mut acc = MultiSeries::constant(self.nvars, n, outer.coeff(n as usize).clone());
        for k in (0..n as usize).rev() {
            acc = acc.mul(&inner)?;
            acc.add_term(alloc::vec![0; self.nvars], outer.coeff(k).clone());
        }
        Ok(acc)
    }

    /// Substitutes a series for each variable: `self(args[0], args[1], ...)`.
    ///
    /// All arguments must vanish at the origin and share a variable count.
    pub fn substitute(&self, args: &[MultiSeries<R>]) -> Result<MultiSeries<R>> {
        if args.len() != self.nvars {
            return Err(Error::usage("wrong number of arguments in substitution"));
        }
        let target = args.first().map(|a| a.nvars).unwrap_or(0);
        let mut n = self.order;
        for a in args {
            if a.nvars != target {
                return Err(Error::usage("arguments in different numbers of variables"));
            }
            if a.has_constant_term() {
                return Err(Error::domain("substituted series must vanish at 0"));
            }
            n = n.min(a.order);
        }
        // powers[i][k] = args[i]^k
        let mut powers: Vec<Vec<MultiSeries<R>>> = Vec::new();
        for a in args {
            let a = a.truncate(n);
            let mut ps = alloc::vec![MultiSeries::constant(target, n, R::one())];
            for k in 1..=n as usize {
                let next = ps[k - 1].mul(&a)?;
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut out = MultiSeries::zero(target, n);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() > n {
                continue;
            }
            let mut term = MultiSeries::constant(target, n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&powers[i][k as usize])?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Partial derivative in variable `i` (the order drops by one).
    pub fn partial(&self, i: usize) -> Self {
        let mut out = MultiSeries::zero(self.nvars, self.order.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c.scale(&super::ring::int(e[i] as i64)));
            }
        }
        out
    }

    /// Sets the listed variables to zero.
    pub fn restrict_zero(&self, vars: &[usize]) -> Self {
        MultiSeries {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| vars.iter().all(|&v| e[v] == 0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Swaps two variables.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        MultiSeries {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f.swap(i, j);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiSeries<S> {
        let mut out = MultiSeries::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::ring::{int, Rational};

    #[test]
    fn substitution_composes() {
        // F(X, Y) = X + Y + XY, F(F(X,Y), Z) = F(X, F(Y,Z))
        let n = 5;
        let x = MultiSeries::<Rational>::variable(2, n, 0);
        let y = MultiSeries::<Rational>::variable(2, n, 1);
        let f = x.add(&y).unwrap().add(&x.mul(&y).unwrap()).unwrap();
        let v = |i| MultiSeries::<Rational>::variable(3, n, i);
        let left = f.substitute(&[f.substitute(&[v(0), v(1)]).unwrap(), v(2)]).unwrap();
        let right = f.substitute(&[v(0), f.substitute(&[v(1), v(2)]).unwrap()]).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.coeff(&[1, 1, 1]), int(1));
    }

    #[test]
    fn compose_into_univariate() {
        let n = 4;
        let x = MultiSeries::<Rational>::variable(2, n, 0);
        let y = MultiSeries::<Rational>::variable(2, n, 1);
        let s = x.add(&y).unwrap();
        let square = Series::new("T", alloc::vec![int(0), int(0), int(1)], n as usize);
        let out = s.compose_into(&square).unwrap();
        assert_eq!(out.coeff(&[1, 1]), int(2));
        assert_eq!(out.coeff(&[2, 0]), int(1));
    }
}
