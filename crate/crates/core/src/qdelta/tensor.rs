use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::element::{reduce_monomial, QElement};
use super::partition::StrictPartition;
use crate::exactring::{int, Rational};

/// An element of `Delta^{(x) legs}`, with every leg in the square-free basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    legs: usize,
    terms: BTreeMap<Vec<StrictPartition>, Rational>,
}

impl Tensor {
    pub fn zero(legs: usize) -> Self {
        Tensor { legs, terms: BTreeMap::new() }
    }

    /// `1 (x) ... (x) 1`.
    pub fn unit(legs: usize) -> Self {
        let mut t = Tensor::zero(legs);
        t.add_term(alloc::vec![StrictPartition::empty(); legs], int(1));
        t
    }

    /// A one-leg tensor.
    pub fn from_element(a: &QElement) -> Self {
        let mut t = Tensor::zero(1);
        for (l, c) in a.terms() {
            t.add_term(alloc::vec![l.clone()], c.clone());
        }
        t
    }

    /// `a (x) b`.
    pub fn pure(a: &QElement, b: &QElement) -> Self {
        let mut t = Tensor::zero(2);
        for (l, c) in a.terms() {
            for (m, d) in b.terms() {
                t.add_term(alloc::vec![l.clone(), m.clone()], c * d);
            }
        }
        t
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn add_term(&mut self, key: Vec<StrictPartition>, c: Rational) {
        assert_eq!(key.len(), self.legs);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<StrictPartition>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.legs, other.legs);
        let mut out = self.clone();
        for (k, c) in other.terms.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale_by(&self, r: &Rational) -> Tensor {
        let mut out = Tensor::zero(self.legs);
        for (k, c) in self.terms.iter() {
            out.add_term(k.clone(), c * r);
        }
        out
    }

    /// Leg-wise product, reducing each leg.
    pub fn mul(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.legs, other.legs);
        let mut out = Tensor::zero(self.legs);
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                let mut partial: Vec<(Vec<StrictPartition>, Rational)> = alloc::vec![(Vec::new(), ca * cb)];
                for (la, lb) in a.iter().zip(b.iter()) {
                    let mut factors = la.parts().to_vec();
                    factors.extend_from_slice(lb.parts());
                    let leg = reduce_monomial(&factors);
                    let mut next = Vec::new();
                    for (key, c) in partial.iter() {
                        for (l, d) in leg.terms() {
                            let mut k = key.clone();
                            k.push(l.clone());
                            next.push((k, c * d));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, c);
                }
            }
        }
        out
    }

    /// Applies the coproduct to leg `leg`, producing a tensor with one more leg.
    pub fn coproduct_on_leg(&self, leg: usize) -> Tensor {
        assert!(leg < self.legs);
        let mut out = Tensor::zero(self.legs + 1);
        for (key, c) in self.terms.iter() {
            let split = coproduct(&QElement::basis(key[leg].clone()));
            for (pair, d) in split.terms.iter() {
                let mut k = key[..leg].to_vec();
                k.push(pair[0].clone());
                k.push(pair[1].clone());
                k.extend_from_slice(&key[leg + 1..]);
                out.add_term(k, c * d);
            }
        }
        out
    }

    /// Applies the counit (projection to the constant term) on leg `leg`.
    pub fn counit_on_leg(&self, leg: usize) -> Tensor {
        assert!(leg < self.legs);
        let mut out = Tensor::zero(self.legs - 1);
        for (key, c) in self.terms.iter() {
            if key[leg].is_empty() {
                let mut k = key.clone();
                k.remove(leg);
                out.add_term(k, c.clone());
            }
        }
        out
    }

    /// Collapses a one-leg tensor back to an element.
    pub fn into_element(self) -> QElement {
        assert_eq!(self.legs, 1);
        QElement::from_terms(self.terms.into_iter().map(|(mut k, c)| (k.pop().unwrap(), c)))
    }
}

/// The coproduct `q_i -> sum_{j+k=i} q_j (x) q_k`, extended multiplicatively.
pub fn coproduct(a: &QElement) -> Tensor {
    let mut out = Tensor::zero(2);
    for (lambda, c) in a.terms() {
        // distribute each factor q_p over its splittings j + (p - j)
        let parts = lambda.parts();
        let mut split = alloc::vec![0u32; parts.len()];
        loop {
            let left: Vec<u32> = split.clone();
            let right: Vec<u32> = parts.iter().zip(split.iter()).map(|(p, j)| p - j).collect();
            let t = Tensor::pure(&reduce_monomial(&left), &reduce_monomial(&right));
            out = out.add(&t.scale_by(c));
            // odometer over 0..=parts[i]
            let mut i = 0;
            loop {
                if i == parts.len() {
                    break;
                }
                if split[i] < parts[i] {
                    split[i] += 1;
                    break;
                }
                split[i] = 0;
                i += 1;
            }
            if i == parts.len() {
                break;
            }
        }
    }
    out
}
