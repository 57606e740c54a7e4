use alloc::vec::Vec;

use super::witt::{ghost, WittVector};
use crate::error::{Error, Result};
use crate::exactring::{Poly, Rational, Ring, Series};

#[derive(Clone, Debug, PartialEq)]
pub struct SubfunctorWitness {
    pub p: u32,
    /// For `p = 2`, whether `h(-T) h(T) = 1` to the truncation order.
    pub product_is_one: Option<bool>,
    /// Indices `n` with `p | n` whose power sum (ghost) `g_n` is nonzero.
    pub nonvanishing: Vec<usize>,
    pub passed: bool,
}

/// Membership in `{h | prod_{k<p} h(w^k T) = 1}`, `w` a primitive `p`-th root
/// of unity, via the equivalent condition that the power sums `g_n` vanish
/// for `p | n`. For `p = 2` the product `h(-T) h(T)` is also formed directly.
pub fn root_of_unity_check<R: Ring>(h: &WittVector<R>, p: u32) -> Result<SubfunctorWitness> {
    if p < 2 {
        return Err(Error::usage("p must be at least 2"));
    }
    let g = ghost(h)?;
    let nonvanishing: Vec<usize> =
        (1..=g.len()).filter(|n| n % p as usize == 0 && !g.components()[n - 1].is_zero()).collect();
    let product_is_one = if p == 2 { Some(h.series().mul(&h.series().negate_variable())?.is_one()) } else { None };
    let passed = nonvanishing.is_empty() && product_is_one.unwrap_or(true);
    Ok(SubfunctorWitness { p, product_is_one, nonvanishing, passed })
}

/// The `Q`-function subfunctor `h(-T) = h(T)^{-1}`.
pub fn q_subfunctor_check<R: Ring>(h: &WittVector<R>) -> Result<SubfunctorWitness> {
    root_of_unity_check(h, 2)
}

/// `q(T) = exp(sum_{n>=1} (1 - t^n) p_n T^n / n)`, with `p_n` variable `n`.
pub fn hl_q_gen(t: &Rational, order: usize) -> Result<WittVector<Poly>> {
    let log = Series::from_fn("T", order, |n| {
        if n == 0 {
            return Poly::default();
        }
        let factor = (Rational::from_integer(1.into()) - num_traits::pow(t.clone(), n))
            / Rational::from_integer((n as i64).into());
        Poly::var(n as u32).scale_by(&factor)
    });
    WittVector::new(log.exp()?)
}
