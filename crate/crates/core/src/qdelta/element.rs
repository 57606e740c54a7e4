use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::partition::StrictPartition;
use crate::error::{Error, Result};
use crate::exactring::{int, is_integer, Poly, Rational};

/// An element of `Delta (x) Q` in the square-free basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QElement {
    terms: BTreeMap<StrictPartition, Rational>,
}

impl QElement {
    /// The generator `q_k`; `q_0 = 1`.
    pub fn q(k: u32) -> Self {
        if k == 0 {
            QElement::unit()
        } else {
            QElement::basis(StrictPartition::single(k))
        }
    }

    pub fn unit() -> Self {
        QElement::basis(StrictPartition::empty())
    }

    pub fn basis(lambda: StrictPartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, int(1));
        QElement { terms }
    }

    pub fn constant(c: Rational) -> Self {
        let mut out = QElement::default();
        out.add_term(StrictPartition::empty(), c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (StrictPartition, Rational)>) -> Self {
        let mut out = QElement::default();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: StrictPartition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StrictPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &StrictPartition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale_by(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return QElement::default();
        }
        QElement { terms: self.terms.iter().map(|(l, c)| (l.clone(), c * r)).collect() }
    }

    /// `Some(w)` when every term has weight `w` (the zero element has every weight).
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(StrictPartition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(StrictPartition::weight).max()
    }

    pub fn homogeneous_part(&self, weight: u32) -> Self {
        QElement {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == weight)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Components of even (`0`) or odd (`1`) length.
    pub fn parity_part(&self, parity: u32) -> Self {
        QElement {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.parity() == parity)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when all coefficients are integers, i.e. the element lies in `Delta`.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(is_integer)
    }

    /// Terms sorted for display: more factors first, then lexicographically larger.
    fn display_order(&self) -> Vec<(&StrictPartition, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| b.0.cmp(a.0)));
        v
    }
}

/// Reduces `q_{m_1} ... q_{m_r}` (any order, repeats allowed) to the square-free basis.
///
/// A repeated factor `q_i^2` is rewritten with the coefficient of `U^{2i}` in
/// `q(U) q(-U) = 1`, namely
/// `q_i^2 = (-1)^{i+1} (2 q_{2i} + 2 sum_{k<i} (-1)^k q_k q_{2i-k})`.
/// Each step makes the descending part sequence lexicographically larger at
/// fixed weight, so the rewriting terminates.
pub fn reduce_monomial(factors: &[u32]) -> QElement {
    let mut work: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    let mut start: Vec<u32> = factors.iter().copied().filter(|&k| k > 0).collect();
    start.sort_unstable_by(|a, b| b.cmp(a));
    work.insert(start, int(1));
    let mut out = QElement::default();
    while let Some((parts, c)) = work.pop_first() {
        if c.is_zero() {
            continue;
        }
        let repeated = parts.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]);
        let Some(i) = repeated else {
            out.add_term(StrictPartition::new(parts).expect("strict by construction"), c);
            continue;
        };
        let pos = parts.iter().position(|&p| p == i).unwrap();
        let mut rest = parts.clone();
        rest.drain(pos..pos + 2);
        let overall = if i % 2 == 1 { int(2) } else { int(-2) };
        let mut push = |extra: &[u32], coeff: Rational| {
            let mut next = rest.clone();
            next.extend_from_slice(extra);
            next.sort_unstable_by(|a, b| b.cmp(a));
            let entry = work.entry(next).or_insert_with(Rational::zero);
            *entry += coeff;
        };
        push(&[2 * i], &c * &overall);
        for k in 1..i {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            push(&[2 * i - k, k], &c * &overall * sign);
        }
    }
    out
}

/// Reduces a polynomial in the generators `q_k` (variable index `k >= 1`).
pub fn q_reduce(raw: &Poly) -> Result<QElement> {
    let mut out = QElement::default();
    for (m, c) in raw.terms() {
        let mut factors = Vec::new();
        for (v, e) in m.iter() {
            if e < 0 {
                return Err(Error::usage(alloc::format!("q{v} carries a negative exponent; use a localized element")));
            }
            if v == 0 {
                continue;
            }
            factors.extend(core::iter::repeat_n(v, e as usize));
        }
        out = out + reduce_monomial(&factors).scale_by(c);
    }
    Ok(out)
}

impl<'a> Add<&'a QElement> for &'a QElement {
    type Output = QElement;
    fn add(self, rhs: &QElement) -> QElement {
        let mut out = self.clone();
        for (l, c) in rhs.terms.iter() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a QElement> for &'a QElement {
    type Output = QElement;
    fn sub(self, rhs: &QElement) -> QElement {
        let mut out = self.clone();
        for (l, c) in rhs.terms.iter() {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a QElement> for &'a QElement {
    type Output = QElement;
    fn mul(self, rhs: &QElement) -> QElement {
        let mut out = QElement::default();
        let mut factors = Vec::new();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in rhs.terms.iter() {
                factors.clear();
                factors.extend_from_slice(a.parts());
                factors.extend_from_slice(b.parts());
                let coeff = ca * cb;
                for (l, c) in reduce_monomial(&factors).terms {
                    out.add_term(l, c * &coeff);
                }
            }
        }
        out
    }
}

impl Neg for &QElement {
    type Output = QElement;
    fn neg(self) -> QElement {
        QElement { terms: self.terms.iter().map(|(l, c)| (l.clone(), -c.clone())).collect() }
    }
}

impl Add for QElement {
    type Output = QElement;
    fn add(self, rhs: QElement) -> QElement {
        &self + &rhs
    }
}

impl Sub for QElement {
    type Output = QElement;
    fn sub(self, rhs: QElement) -> QElement {
        &self - &rhs
    }
}

impl Mul for QElement {
    type Output = QElement;
    fn mul(self, rhs: QElement) -> QElement {
        &self * &rhs
    }
}

impl Neg for QElement {
    type Output = QElement;
    fn neg(self) -> QElement {
        -&self
    }
}

impl crate::exactring::Ring for QElement {
    fn zero() -> Self {
        QElement::default()
    }
    fn one() -> Self {
        QElement::unit()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: Rational) -> Self {
        QElement::constant(r)
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let (l, c) = self.terms.iter().next().unwrap();
            if l.is_empty() {
                return Some(QElement::constant(c.recip()));
            }
        }
        None
    }
    fn is_integral(&self) -> bool {
        QElement::is_integral(self)
    }
    fn scale(&self, r: &Rational) -> Self {
        self.scale_by(r)
    }
}

impl fmt::Display for QElement {
    /// E.g. `q2*q1 - 2*q3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = l.parts().iter().map(|k| alloc::format!("q{k}")).collect();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn squares() {
        assert_eq!(reduce_monomial(&[1, 1]), QElement::q(2).scale_by(&int(2)));
        let expected = QElement::from_terms([(sp(&[3, 1]), int(2)), (sp(&[4]), int(-2))]);
        assert_eq!(reduce_monomial(&[2, 2]), expected);
        assert_eq!(reduce_monomial(&[3]), QElement::q(3));
        assert_eq!(reduce_monomial(&[]), QElement::unit());
    }

    #[test]
    fn raw_polynomials() {
        let raw = Poly::var(1).pow(2) + Poly::var(3);
        let r = q_reduce(&raw).unwrap();
        assert_eq!(r.to_string(), "q3 + 2*q2");
        assert!(q_reduce(&Poly::monomial(crate::exactring::Monomial::power(1, -1), int(1))).is_err());
    }

    #[test]
    fn defining_relation_to_order_14() {
        for n in 1..=14u32 {
            let mut sum = QElement::default();
            for k in 0..=n {
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                sum = sum + (QElement::q(k) * QElement::q(n - k)).scale_by(&sign);
            }
            assert!(sum.is_empty(), "U^{n}: {sum}");
        }
    }

    #[test]
    fn display() {
        let e = QElement::from_terms([(sp(&[2, 1]), int(1)), (sp(&[3]), int(-2))]);
        assert_eq!(e.to_string(), "q2*q1 - 2*q3");
        assert_eq!(QElement::constant(Rational::new((-1).into(), 2.into())).to_string(), "-1/2");
        assert_eq!(e.homogeneous_weight(), Some(3));
        assert_eq!(e.parity_part(0).to_string(), "q2*q1");
    }
}
