use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactring::{int, Rational, Ring, Series};

/// `h(T) = 1 + h_1 T + ... + h_N T^N`, an element of the big Witt group
/// truncated at `T^N`. Addition is multiplication of series.
#[derive(Clone, Debug, PartialEq)]
pub struct WittVector<R> {
    series: Series<R>,
}

/// Ghost coordinates `g_1 .. g_N`, defined by
/// `T h'(T) / h(T) = sum (-1)^{n-1} g_n T^n`, so `1 + aT` has ghosts `a^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GhostVector<R>(pub Vec<R>);

impl<R: Ring> GhostVector<R> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn components(&self) -> &[R] {
        &self.0
    }

    fn zip(&self, other: &Self, f: impl Fn(R, R) -> R) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::usage("ghost vectors of different lengths"));
        }
        Ok(GhostVector(self.0.iter().zip(&other.0).map(|(a, b)| f(a.clone(), b.clone())).collect()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }
}

impl<R: Ring> WittVector<R> {
    pub fn new(series: Series<R>) -> Result<Self> {
        if series.coeff(0) != &R::one() {
            return Err(Error::domain("a Witt vector has constant term 1"));
        }
        Ok(WittVector { series })
    }

    /// From `h_1, ..., h_N`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let order = coeffs.len();
        let mut all = Vec::with_capacity(order + 1);
        all.push(R::one());
        all.extend(coeffs);
        WittVector { series: Series::new("T", all, order) }
    }

    /// The additive identity `1`.
    pub fn zero(order: usize) -> Self {
        WittVector { series: Series::one("T", order) }
    }

    /// `1 + aT`.
    pub fn linear(a: R, order: usize) -> Self {
        let mut coeffs = alloc::vec![R::zero(); order];
        if order > 0 {
            coeffs[0] = a;
        }
        Self::from_coeffs(coeffs)
    }

    /// The multiplicative identity `1 + T`, whose ghosts are all `1`.
    pub fn unit(order: usize) -> Self {
        Self::linear(R::one(), order)
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeff(&self, i: usize) -> &R {
        self.series.coeff(i)
    }

    pub fn series(&self) -> &Series<R> {
        &self.series
    }

    /// `h(1)`, the sum of the truncation.
    pub fn at_one(&self) -> R {
        self.series.sum_coefficients()
    }

    pub fn is_integral(&self) -> bool {
        self.series.coeffs().iter().all(R::is_integral)
    }
}

fn same_order<R: Ring>(h: &WittVector<R>, g: &WittVector<R>) -> Result<()> {
    if h.order() != g.order() {
        return Err(Error::usage("Witt vectors truncated at different orders"));
    }
    Ok(())
}

pub fn witt_add<R: Ring>(h: &WittVector<R>, g: &WittVector<R>) -> Result<WittVector<R>> {
    same_order(h, g)?;
    Ok(WittVector { series: h.series.mul(&g.series)? })
}

pub fn witt_neg<R: Ring>(h: &WittVector<R>) -> Result<WittVector<R>> {
    Ok(WittVector { series: h.series.mul_inverse()? })
}

pub fn ghost<R: Ring>(h: &WittVector<R>) -> Result<GhostVector<R>> {
    let n = h.order();
    if n == 0 {
        return Ok(GhostVector(Vec::new()));
    }
    // h'/h to order n-1 holds the coefficients of T h'/h shifted down by one
    let log_derivative = h.series.derivative().mul(&h.series.truncate(n - 1).mul_inverse()?)?;
    Ok(GhostVector(
        (1..=n)
            .map(|k| {
                let c = log_derivative.coeff(k - 1).clone();
                if k % 2 == 0 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    ))
}

/// `exp(sum (-1)^{n-1} g_n T^n / n)`; the division by `n` needs a
/// `Q`-algebra, which every ring here is.
pub fn ghost_inverse<R: Ring>(g: &GhostVector<R>) -> Result<WittVector<R>> {
    let n = g.len();
    let log = Series::from_fn("T", n, |k| {
        if k == 0 {
            return R::zero();
        }
        let c = g.0[k - 1].scale(&Rational::new(1.into(), (k as i64).into()));
        if k % 2 == 0 {
            -c
        } else {
            c
        }
    });
    Ok(WittVector { series: log.exp()? })
}

/// The ring product `*`, ghost-componentwise and characterised by
/// `(1 + aT) * (1 + bT) = 1 + abT`.
pub fn witt_mul<R: Ring>(h: &WittVector<R>, g: &WittVector<R>) -> Result<WittVector<R>> {
    same_order(h, g)?;
    let product = ghost_inverse(&ghost(h)?.mul(&ghost(g)?)?)?;
    debug_assert!(!(h.is_integral() && g.is_integral()) || product.is_integral());
    Ok(product)
}

/// `1 + sum c_i T^i` from integer coefficients.
pub fn witt_from_ints<R: Ring>(coeffs: &[i64]) -> WittVector<R> {
    WittVector::from_coeffs(coeffs.iter().map(|&c| R::from_rational(int(c))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::Poly;
    use proptest::prelude::*;

    fn a() -> Poly {
        Poly::var(0)
    }
    fn b() -> Poly {
        Poly::var(1)
    }

    #[test]
    fn group_law() {
        let h = WittVector::linear(a(), 4);
        let g = WittVector::linear(b(), 4);
        let sum = witt_add(&h, &g).unwrap();
        assert_eq!(sum.coeff(1), &(a() + b()));
        assert_eq!(sum.coeff(2), &(&a() * &b()));
        assert!(sum.coeff(3).is_zero());
        let one_plus_t: WittVector<Rational> = witt_from_ints(&[1, 0, 0, 0, 0]);
        let inv = witt_neg(&one_plus_t).unwrap();
        let expect: WittVector<Rational> = witt_from_ints(&[-1, 1, -1, 1, -1]);
        assert_eq!(inv, expect);
    }

    #[test]
    fn ghosts_and_product() {
        let h = WittVector::linear(a(), 5);
        let g = ghost(&h).unwrap();
        for (k, c) in g.components().iter().enumerate() {
            assert_eq!(c, &a().pow(k as u32 + 1));
        }
        let prod = witt_mul(&h, &WittVector::linear(b(), 5)).unwrap();
        assert_eq!(prod, WittVector::linear(&a() * &b(), 5));
        assert_eq!(witt_mul(&h, &WittVector::unit(5)).unwrap(), h);
    }

    fn witt_strategy(order: usize) -> impl Strategy<Value = WittVector<Rational>> {
        proptest::collection::vec(-4i64..=4, order).prop_map(|c| witt_from_ints(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn ghost_round_trip(h in witt_strategy(10)) {
            prop_assert_eq!(ghost_inverse(&ghost(&h).unwrap()).unwrap(), h);
        }

        #[test]
        fn ghost_is_additive(h in witt_strategy(8), g in witt_strategy(8)) {
            let lhs = ghost(&witt_add(&h, &g).unwrap()).unwrap();
            prop_assert_eq!(lhs, ghost(&h).unwrap().add(&ghost(&g).unwrap()).unwrap());
        }

        #[test]
        fn ring_axioms(h in witt_strategy(8), g in witt_strategy(8), f in witt_strategy(8)) {
            let hg = witt_mul(&h, &g).unwrap();
            prop_assert!(hg.is_integral());
            prop_assert_eq!(&hg, &witt_mul(&g, &h).unwrap());
            prop_assert_eq!(witt_mul(&hg, &f).unwrap(), witt_mul(&h, &witt_mul(&g, &f).unwrap()).unwrap());
            let lhs = witt_mul(&h, &witt_add(&g, &f).unwrap()).unwrap();
            let rhs = witt_add(&hg, &witt_mul(&h, &f).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(witt_mul(&h, &WittVector::unit(8)).unwrap(), h);
        }
    }
}
