use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::symfn::{complete_in_p, power_sum_in_h, Bounds, ZSeries};
use super::vertex::{binomial, vertex_y_powersum, TParameter};
use crate::error::{Error, Result};
use crate::exactring::{int, Poly};

fn power_sum_vars(b: &Poly) -> Result<Vec<u32>> {
    let vars = b.variables();
    if vars.iter().any(|&v| v == 0 || super::symfn::is_check(v)) {
        return Err(Error::usage("expected a polynomial in p_1, p_2, ..."));
    }
    if b.terms().any(|(m, _)| m.has_negative_exponent()) {
        return Err(Error::usage("expected a polynomial, not a Laurent polynomial"));
    }
    Ok(vars)
}

/// `Y(b)` from the power-sum formula at `t = 0`: `b` is evaluated at
/// `p_n -> n Y(p~_n)` in the commutative ring `(S (x) S^)((z))`.
pub fn y_by_power_sums(b: &Poly, bounds: Bounds) -> Result<ZSeries> {
    let mut images = BTreeMap::new();
    for n in power_sum_vars(b)? {
        let y = vertex_y_powersum(n, TParameter::Rational(int(0)))?.as_series(bounds)?;
        images.insert(n, y.scale_by(&int(n as i64)));
    }
    Ok(ZSeries::evaluate(b, &images, bounds))
}

/// The generating functions entering `Y(h(w))`, truncated to `bounds`.
struct Baker {
    h: Vec<Poly>,
    h_check: Vec<Poly>,
    /// `h(z)^{-1}` and `h^(-z^{-1})^{-1}`.
    normalization: ZSeries,
}

impl Baker {
    fn new(bounds: Bounds) -> Result<Self> {
        let h = complete_in_p(bounds.degree as usize, false)?;
        let h_check = complete_in_p(bounds.check_degree as usize, true)?;
        let negate = |f: &Poly| f.substitute(|v| -&Poly::var(v));
        let mut left = ZSeries::default();
        for (a, ha) in h.iter().enumerate() {
            left.add_term(a as i64, negate(ha)?);
        }
        let mut right = ZSeries::default();
        for (c, hc) in h_check.iter().enumerate() {
            let sign = if c % 2 == 0 { int(1) } else { int(-1) };
            right.add_term(-(c as i64), negate(hc)?.scale_by(&sign));
        }
        Ok(Baker { h, h_check, normalization: left.mul(&right, bounds) })
    }

    /// `Y(h_i)`: the coefficient of `w^i` in
    /// `h(z + w) h^(-(z + w)^{-1}) / (h(z) h^(-z^{-1}))`, expanding
    /// `(z + w)^{-c} = sum_l binom(-c, l) z^{-c-l} w^l`.
    fn y_complete(&self, i: u32, bounds: Bounds) -> ZSeries {
        let mut out = ZSeries::default();
        for k in 0..=i {
            let l = i - k;
            // [w^k] h(z + w) = sum_a h_a binom(a, k) z^{a-k}
            let mut left = ZSeries::default();
            for (a, ha) in self.h.iter().enumerate().skip(k as usize) {
                left.add_term(a as i64 - k as i64, ha.scale_by(&binomial(a as i64, k)));
            }
            // [w^l] h^(-(z + w)^{-1}) = sum_c (-1)^c h^_c binom(-c, l) z^{-c-l}
            let mut right = ZSeries::default();
            for (c, hc) in self.h_check.iter().enumerate() {
                let sign = if c % 2 == 0 { int(1) } else { int(-1) };
                right.add_term(-(c as i64) - l as i64, hc.scale_by(&(sign * binomial(-(c as i64), l))));
            }
            out = out.add(&left.mul(&right, bounds));
        }
        out.mul(&self.normalization, bounds)
    }
}

/// `Y(b)` from the generating function `Y(h(w))` above: `b` is rewritten in
/// the `h_i` and evaluated at `h_i -> Y(h_i)`.
pub fn y_by_generating_function(b: &Poly, bounds: Bounds) -> Result<ZSeries> {
    let vars = power_sum_vars(b)?;
    let top = vars.iter().copied().max().unwrap_or(0);
    let baker = Baker::new(bounds)?;
    let p_in_h = power_sum_in_h(top);
    let b_in_h = b.substitute(|n| p_in_h[n as usize].clone())?;
    let mut images = BTreeMap::new();
    for i in b_in_h.variables() {
        images.insert(i, baker.y_complete(i, bounds));
    }
    Ok(ZSeries::evaluate(&b_in_h, &images, bounds))
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicativityWitness {
    pub window: (i64, i64),
    pub bounds: Bounds,
    /// Nonzero coefficients of `Y(b b')` compared inside the window.
    pub compared: usize,
    /// Powers of `z` where `Y(b) Y(b')` and `Y(b b')` differ.
    pub mismatches: Vec<i64>,
    /// Nothing nonzero was inside the window and bounds.
    pub inconclusive: bool,
    pub passed: bool,
}

/// Compares `Y(b) Y(b')`, each factor from the power-sum formula, with
/// `Y(b b')` from the generating function, coefficient by coefficient for
/// `z^k`, `k` in `window`, on monomials of `S (x) S^` within `bounds`.
pub fn y_multiplicativity_check(
    b: &Poly,
    b_prime: &Poly,
    window: (i64, i64),
    bounds: Bounds,
) -> Result<MultiplicativityWitness> {
    if window.0 > window.1 {
        return Err(Error::usage("empty z-window"));
    }
    let product = y_by_power_sums(b, bounds)?.mul(&y_by_power_sums(b_prime, bounds)?, bounds);
    let direct = y_by_generating_function(&(b * b_prime), bounds)?;
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for k in window.0..=window.1 {
        let (lhs, rhs) = (product.coeff(k), direct.coeff(k));
        compared += rhs.len();
        if lhs != rhs {
            mismatches.push(k);
        }
    }
    let inconclusive = compared == 0 && mismatches.is_empty();
    Ok(MultiplicativityWitness {
        window,
        bounds,
        compared,
        passed: mismatches.is_empty() && !inconclusive,
        mismatches,
        inconclusive,
    })
}
