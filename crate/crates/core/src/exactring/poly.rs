use alloc::collections::{btree_map, BTreeMap};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ring::{int, Rational};
use crate::error::{Error, Result};

/// A Laurent monomial: sorted `(variable, exponent)` pairs with nonzero exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(u32, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn power(v: u32, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(alloc::vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, i32)>) -> Self {
        let mut map: BTreeMap<u32, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: u32) -> i32 {
        self.0.iter().find(|&&(w, _)| w == v).map(|&(_, e)| e).unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.0.iter().copied()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.0.iter().any(|&(_, e)| e < 0)
    }

    /// Total degree under a per-variable integer weight.
    pub fn weight(&self, w: impl Fn(u32) -> i64) -> i64 {
        self.0.iter().map(|&(v, e)| w(v) * e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            if a < b {
                out.push((a, ea));
                i += 1;
            } else if b < a {
                out.push((b, eb));
                j += 1;
            } else {
                if ea + eb != 0 {
                    out.push((a, ea + eb));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// The monomial with variable `v` removed entirely.
    pub fn without(&self, v: u32) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }

    /// Adds `delta` to the exponent of `v`.
    pub fn shift(&self, v: u32, delta: i32) -> Monomial {
        self.mul(&Monomial::power(v, delta))
    }
}

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Variables are plain indices; what they stand for (`x_k`, `t_k`, `q_k`,
/// power sums, nilpotent test variables) is up to the caller. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: u32) -> Self {
        Poly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Variables that occur with a nonzero exponent somewhere.
    pub fn variables(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn scale_by(&self, r: &Rational) -> Poly {
        if r.is_zero() {
            return Poly::default();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Maximum weight of a term, `None` for the zero polynomial.
    pub fn max_weight(&self, w: impl Fn(u32) -> i64 + Copy) -> Option<i64> {
        self.terms.keys().map(|m| m.weight(w)).max()
    }

    pub fn min_weight(&self, w: impl Fn(u32) -> i64 + Copy) -> Option<i64> {
        self.terms.keys().map(|m| m.weight(w)).min()
    }

    /// The homogeneous component of the given weight.
    pub fn homogeneous_part(&self, w: impl Fn(u32) -> i64 + Copy, weight: i64) -> Poly {
        self.filter(|m| m.weight(w) == weight)
    }

    /// `d/dv` (also valid for negative exponents).
    pub fn derivative(&self, v: u32) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e != 0 {
                out.add_term(m.shift(v, -1), c * int(e as i64));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism substituting each variable by a polynomial.
    ///
    /// Variables that appear with negative exponents must be sent to
    /// invertible images (single-term polynomials).
    pub fn substitute(&self, image: impl Fn(u32) -> Poly) -> Result<Poly> {
        let mut cache: BTreeMap<(u32, i32), Poly> = BTreeMap::new();
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (v, e) in m.iter() {
                if let btree_map::Entry::Vacant(slot) = cache.entry((v, e)) {
                    let base = image(v);
                    let p = if e >= 0 {
                        base.pow(e as u32)
                    } else {
                        super::ring::Ring::try_inverse(&base)
                            .ok_or_else(|| {
                                Error::domain(alloc::format!(
                                    "variable {v} appears inverted but its image is not a unit"
                                ))
                            })?
                            .pow((-e) as u32)
                    };
                    slot.insert(p);
                }
                term = &term * &cache[&(v, e)];
            }
            out = out + term;
        }
        Ok(out)
    }

    /// Evaluates every variable at a rational value.
    pub fn evaluate(&self, value: impl Fn(u32) -> Rational) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = value(v);
                if e < 0 && x.is_zero() {
                    return Err(Error::domain("evaluating an inverted variable at zero"));
                }
                let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
                t = if e < 0 { t / p } else { t * p };
            }
            total += t;
        }
        Ok(total)
    }

    /// Rendering with caller-supplied variable names.
    pub fn display_with<'a, F: Fn(u32) -> String>(&'a self, names: F) -> PolyDisplay<'a, F> {
        PolyDisplay { poly: self, names }
    }
}

impl super::ring::Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn one() -> Self {
        Poly::constant(<Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_rational(r: Rational) -> Self {
        Poly::constant(r)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        Some(Poly::monomial(m.inverse(), c.recip()))
    }

    fn is_integral(&self) -> bool {
        self.terms.values().all(super::ring::is_integer)
    }

    fn scale(&self, r: &Rational) -> Self {
        self.scale_by(r)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// See [`Poly::display_with`].
pub struct PolyDisplay<'a, F> {
    poly: &'a Poly,
    names: F,
}

impl<F: Fn(u32) -> String> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, then the BTreeMap order reversed
        let mut terms: Vec<(&Monomial, &Rational)> = self.poly.terms().collect();
        terms.sort_by(|a, b| {
            let da: i32 = a.0.iter().map(|(_, e)| e).sum();
            let db: i32 = b.0.iter().map(|(_, e)| e).sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(alloc::format!("{abs}"));
            }
            for (v, e) in m.iter() {
                let name = (self.names)(v);
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(alloc::format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::ring::rat;
    use alloc::format;
    use alloc::string::ToString;

    fn x(k: u32) -> Poly {
        Poly::var(k)
    }

    #[test]
    fn laurent_monomials_cancel() {
        let p = &x(0) * &Poly::monomial(Monomial::power(0, -1), int(3));
        assert_eq!(p, Poly::constant(int(3)));
    }

    #[test]
    fn derivative_of_inverse_power() {
        let p = Poly::monomial(Monomial::power(0, -2), int(1));
        assert_eq!(p.derivative(0), Poly::monomial(Monomial::power(0, -3), int(-2)));
    }

    #[test]
    fn substitution_with_inverted_variable() {
        // x0^-1 * x1 with x0 -> -2*y, x1 -> y^2 gives -y/2
        let p = Poly::monomial(Monomial::from_pairs([(0, -1), (1, 1)]), int(1));
        let out = p
            .substitute(|v| match v {
                0 => Poly::monomial(Monomial::var(5), int(-2)),
                _ => Poly::monomial(Monomial::power(5, 2), int(1)),
            })
            .unwrap();
        assert_eq!(out, Poly::monomial(Monomial::var(5), rat(-1, 2)));
        let bad = p.substitute(|_| &x(1) + &x(2));
        assert!(matches!(bad, Err(Error::Domain(_))));
    }

    #[test]
    fn display_is_readable() {
        let p = Poly::monomial(Monomial::from_pairs([(0, -1), (1, 1)]), int(-2));
        assert_eq!(p.display_with(|v| format!("x{v}")).to_string(), "-2*x0^-1*x1");
        let q = &(&x(1) * &x(1)) - &Poly::constant(rat(1, 2));
        assert_eq!(q.display_with(|v| format!("x{v}")).to_string(), "x1^2 - 1/2");
        assert_eq!(Poly::default().display_with(|v| format!("x{v}")).to_string(), "0");
    }
}
