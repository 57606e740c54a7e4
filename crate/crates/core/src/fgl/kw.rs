use alloc::vec::Vec;

use super::{law_from_exponential, GenusValues, GroupLaw};
use crate::error::{Error, Result};
use crate::exactring::{double_factorial, int, Monomial, Poly, Series};
use crate::fockvir::jozefiak_map;
use crate::qdelta::{x_to_q, LocalQElement};

/// `sum_{k>=0} (2k-1)!! x_0^{-1} x_k T^{k+1}` to `T^order`, in the `x_k`.
pub fn kw_exponential(order: usize) -> Series<Poly> {
    Series::from_fn("T", order, |i| {
        if i == 0 {
            return Poly::default();
        }
        let k = i as u32 - 1;
        let m = Monomial::power(0, -1).mul(&Monomial::var(k));
        Poly::monomial(m, double_factorial(2 * k as i64 - 1))
    })
}

/// The coefficients of [`kw_exponential`] in the square-free basis with `q_1` inverted.
pub fn kw_exponential_q(order: usize) -> Result<Vec<LocalQElement>> {
    kw_exponential(order).coeffs().iter().map(x_to_q).collect()
}

/// The compositional inverse of [`kw_exponential`], without building the law.
pub fn kw_logarithm(order: usize) -> Result<Series<Poly>> {
    kw_exponential(order).comp_inverse()
}

/// The law with exponential [`kw_exponential`] and its genus.
pub fn kw_genus(order: usize) -> Result<(GroupLaw<Poly>, GenusValues<Poly>)> {
    let law = law_from_exponential(&kw_exponential(order))?;
    let genus = law.genus_values();
    Ok((law, genus))
}

/// Integrality of the exponential in the square-free basis.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityWitness {
    pub coefficients: Vec<LocalQElement>,
    /// Exponents of `T` whose numerators have a non-integral coefficient.
    pub failures: Vec<usize>,
    pub integral: bool,
}

pub fn integrality_check(order: usize) -> Result<IntegralityWitness> {
    let coefficients = kw_exponential_q(order)?;
    let failures: Vec<usize> =
        coefficients.iter().enumerate().filter(|(_, c)| !c.numerator().is_integral()).map(|(i, _)| i).collect();
    let integral = failures.is_empty();
    Ok(IntegralityWitness { coefficients, failures, integral })
}

/// Vanishing of the exponential mod `p` from `T^{k+1}`, `k >= (p+1)/2`, on.
#[derive(Clone, Debug, PartialEq)]
pub struct ModPWitness {
    pub p: u32,
    /// First `k` with `p | (2k-1)!!`.
    pub cutoff: u32,
    /// `k` at and beyond the cutoff whose coefficient is not divisible by `p`.
    pub failures: Vec<u32>,
    /// `k` below the cutoff whose coefficient is (unexpectedly) divisible by `p`.
    pub early_vanishing: Vec<u32>,
    pub passed: bool,
}

fn divisible_by(c: &LocalQElement, p: u32) -> bool {
    let p = num_bigint::BigInt::from(p);
    c.numerator().terms().all(|(_, r)| r.is_integer() && (r.numer() % &p) == 0.into())
}

pub fn mod_p_polynomial_check(p: u32, order: usize) -> Result<ModPWitness> {
    let is_odd_prime = p > 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if !is_odd_prime {
        return Err(Error::usage(alloc::format!("{p} is not an odd prime")));
    }
    let cutoff = p.div_ceil(2);
    let coefficients = kw_exponential_q(order)?;
    let mut failures = Vec::new();
    let mut early_vanishing = Vec::new();
    for (i, c) in coefficients.iter().enumerate().skip(1) {
        let k = i as u32 - 1;
        let vanishes = divisible_by(c, p);
        if k >= cutoff && !vanishes {
            failures.push(k);
        }
        if k < cutoff && vanishes {
            early_vanishing.push(k);
        }
    }
    let passed = failures.is_empty() && early_vanishing.is_empty();
    Ok(ModPWitness { p, cutoff, failures, early_vanishing, passed })
}

/// The law with exponential `t(T) = sum t_k T^{k+1}` over `Q[t_0^{+-1}, t_1, ...]`.
pub fn universal_additive_law(order: usize) -> Result<GroupLaw<Poly>> {
    let e = Series::from_fn("T", order, |i| if i == 0 { Poly::default() } else { Poly::var(i as u32 - 1) });
    law_from_exponential(&e)
}

/// Checks that `t_k -> -(2k-1)!! x_k` carries the universal law to
/// `c F_kw(X/c, Y/c)` with `c = -x_0`, coefficient by coefficient.
pub fn universal_matches_kw(order: usize) -> Result<bool> {
    let universal = universal_additive_law(order)?;
    let (kw, _) = kw_genus(order)?;
    let c_inverse = Poly::monomial(Monomial::power(0, -1), int(-1));
    for i in 0..=order as u32 {
        for j in 0..=(order as u32 - i) {
            if i + j == 0 {
                continue;
            }
            let image = jozefiak_map(&universal.coeff(i, j));
            let factor = c_inverse.pow(i + j - 1);
            if image != &kw.coeff(i, j) * &factor {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdelta::{QElement, StrictPartition};
    use alloc::string::ToString;

    #[test]
    fn exponential_coefficients() {
        let e = kw_exponential(4);
        assert_eq!(e.coeff(1), &Poly::constant(int(1)));
        let x0inv = Monomial::power(0, -1);
        assert_eq!(e.coeff(3), &Poly::monomial(x0inv.mul(&Monomial::var(2)), int(3)));
        let q = kw_exponential_q(2).unwrap();
        let expected =
            QElement::q(3).scale_by(&int(3)) - QElement::basis(StrictPartition::new(alloc::vec![2, 1]).unwrap());
        assert_eq!(q[2], LocalQElement::new(1, expected));
    }

    #[test]
    fn genus() {
        let (law, genus) = kw_genus(6).unwrap();
        assert!(law.check_axioms().unwrap().all());
        assert_eq!(genus.values[0], Poly::constant(int(1)));
        let names = |k: u32| alloc::format!("x{k}");
        assert_eq!(genus.values[1].display_with(names).to_string(), "-2*x0^-1*x1");
        let direct = GenusValues::from_logarithm(&kw_logarithm(6).unwrap());
        assert_eq!(direct, genus);
    }

    #[test]
    fn integrality_and_mod_p() {
        assert!(integrality_check(6).unwrap().integral);
        let w = mod_p_polynomial_check(3, 6).unwrap();
        assert!(w.passed, "{w:?}");
        assert_eq!(w.cutoff, 2);
        assert!(mod_p_polynomial_check(5, 6).unwrap().passed);
        assert!(mod_p_polynomial_check(9, 6).is_err());
    }

    #[test]
    fn universal() {
        let u = universal_additive_law(5).unwrap();
        assert!(u.check_axioms().unwrap().all());
        // t_0 = 1, t_k = 0 otherwise: additive
        let additive = u.map(|c| c.evaluate(|k| if k == 0 { int(1) } else { int(0) }).unwrap());
        assert_eq!(additive.law.terms().count(), 2);
        assert!(universal_matches_kw(5).unwrap());
    }
}
