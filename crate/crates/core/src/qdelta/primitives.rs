use alloc::vec::Vec;
use core::fmt;

use super::element::QElement;
use crate::error::{Error, Result};
use crate::exactring::{int, Monomial, Poly, Rational, Ring, Series};

/// `q_0 .. q_n` as polynomials in the primitives (variable `k` is `x_k`).
pub fn q_in_x(n: u32) -> Vec<Poly> {
    let order = n as usize;
    let log_q = Series::from_fn("U", order, |i| {
        if i % 2 == 1 {
            Poly::var((i / 2) as u32).scale_by(&Rational::new(2.into(), (i as i64).into()))
        } else {
            <Poly as Ring>::zero()
        }
    });
    let q = log_q.exp().expect("zero constant term");
    q.coeffs().to_vec()
}

/// `x_0 .. x_k` in the square-free basis.
pub fn x_in_q(k: u32) -> Vec<QElement> {
    let order = (2 * k + 1) as usize;
    let q = Series::from_fn("U", order, |i| QElement::q(i as u32));
    let log_q = q.log().expect("constant term 1");
    (0..=k)
        .map(|j| {
            let n = 2 * j + 1;
            log_q.coeff(n as usize).scale_by(&Rational::new((n as i64).into(), 2.into()))
        })
        .collect()
}

/// The ring map `Delta (x) Q -> Q[x_0, x_1, ...]`.
pub fn q_to_x(a: &QElement) -> Poly {
    let top = a.terms().flat_map(|(l, _)| l.parts().first().copied()).max().unwrap_or(0);
    let table = q_in_x(top);
    let mut out = <Poly as Ring>::zero();
    for (l, c) in a.terms() {
        let mut term = Poly::constant(c.clone());
        for &p in l.parts() {
            term = &term * &table[p as usize];
        }
        out = out + term;
    }
    out
}

/// An element of `Delta (x) Q [q_1^{-1}]`, written `q_1^{-e} * numerator`.
#[derive(Clone, Debug)]
pub struct LocalQElement {
    q1_inverse_power: u32,
    numerator: QElement,
}

impl LocalQElement {
    pub fn new(q1_inverse_power: u32, numerator: QElement) -> Self {
        LocalQElement { q1_inverse_power, numerator }
    }

    pub fn from_element(a: QElement) -> Self {
        LocalQElement::new(0, a)
    }

    pub fn q1_inverse_power(&self) -> u32 {
        self.q1_inverse_power
    }

    pub fn numerator(&self) -> &QElement {
        &self.numerator
    }

    /// The element itself when no inverse of `q_1` is involved.
    pub fn as_element(&self) -> Option<&QElement> {
        (self.q1_inverse_power == 0).then_some(&self.numerator)
    }

    pub fn mul(&self, other: &LocalQElement) -> LocalQElement {
        LocalQElement::new(self.q1_inverse_power + other.q1_inverse_power, &self.numerator * &other.numerator)
    }

    /// Image in `Q[x_0^{+-1}, x_1, ...]` using `q_1 = 2 x_0`.
    pub fn to_x(&self) -> Poly {
        let e = self.q1_inverse_power as i32;
        let factor = Rational::new(1.into(), num_bigint::BigInt::from(2).pow(e as u32));
        q_to_x(&self.numerator).mul_monomial(&Monomial::power(0, -e)).scale_by(&factor)
    }

    fn lifted(&self, power: u32) -> QElement {
        let mut n = self.numerator.clone();
        for _ in self.q1_inverse_power..power {
            n = &n * &QElement::q(1);
        }
        n
    }
}

impl PartialEq for LocalQElement {
    fn eq(&self, other: &Self) -> bool {
        let p = self.q1_inverse_power.max(other.q1_inverse_power);
        self.lifted(p) == other.lifted(p)
    }
}

impl fmt::Display for LocalQElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q1_inverse_power {
            0 => write!(f, "{}", self.numerator),
            e => write!(f, "q1^-{e}*({})", self.numerator),
        }
    }
}

/// The inverse of [`q_to_x`]; `x_0^{-1}` maps to `2 q_1^{-1}`.
pub fn x_to_q(p: &Poly) -> Result<LocalQElement> {
    let mut shift = 0i32;
    let mut top = 0u32;
    for (m, _) in p.terms() {
        for (v, e) in m.iter() {
            if e < 0 && v != 0 {
                return Err(Error::usage(alloc::format!("x{v} is not invertible")));
            }
            top = top.max(v);
        }
        shift = shift.max(-m.exponent(0));
    }
    let table = x_in_q(top);
    let mut numerator = QElement::default();
    for (m, c) in p.terms() {
        let mut term = QElement::constant(c.clone());
        for (v, e) in m.iter() {
            let e = if v == 0 { e + shift } else { e };
            for _ in 0..e {
                term = &term * &table[v as usize];
            }
        }
        if m.exponent(0) == 0 && shift > 0 {
            for _ in 0..shift {
                term = &term * &table[0];
            }
        }
        numerator = numerator + term;
    }
    let scale = Rational::from_integer(num_bigint::BigInt::from(2).pow(shift as u32));
    Ok(LocalQElement::new(shift as u32, numerator.scale_by(&scale)))
}

/// [`x_to_q`] for polynomials without `x_0^{-1}`.
pub fn x_to_q_polynomial(p: &Poly) -> Result<QElement> {
    let local = x_to_q(p)?;
    local.as_element().cloned().ok_or_else(|| Error::domain("polynomial involves x0^-1"))
}

/// Both sides of `(2k+1) q_{2k+1} = 2 (x_0 q_{2k} + x_1 q_{2k-2} + ... + x_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonWitness {
    pub k: u32,
    pub lhs: QElement,
    pub rhs: QElement,
    pub holds: bool,
}

pub fn newton_identity_check(k: u32) -> NewtonWitness {
    let lhs = QElement::q(2 * k + 1).scale_by(&int(2 * k as i64 + 1));
    let xs = x_in_q(k);
    let mut rhs = QElement::default();
    for (j, x) in xs.iter().enumerate() {
        rhs = rhs + x * &QElement::q(2 * (k - j as u32));
    }
    let rhs = rhs.scale_by(&int(2));
    let holds = lhs == rhs;
    NewtonWitness { k, lhs, rhs, holds }
}
