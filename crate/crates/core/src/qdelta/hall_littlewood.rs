use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactring::{Poly, Rational, Series, UPoly};

/// A positive diagonal operator `Lambda` (by its spectrum) and a parameter `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct HLSpecialization {
    eigenvalues: Vec<Rational>,
    t: Rational,
}

impl HLSpecialization {
    pub fn new(eigenvalues: Vec<Rational>, t: Rational) -> Result<Self> {
        if eigenvalues.iter().any(Zero::is_zero) {
            return Err(Error::domain("zero eigenvalue"));
        }
        if eigenvalues.iter().any(Signed::is_negative) {
            return Err(Error::usage("eigenvalues must be positive"));
        }
        Ok(HLSpecialization { eigenvalues, t })
    }

    pub fn eigenvalues(&self) -> &[Rational] {
        &self.eigenvalues
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    /// `tr Lambda^{-(2k+1)}`, the value taken by `x_k`.
    pub fn power_sum(&self, k: u32) -> Rational {
        self.eigenvalues.iter().map(|l| num_traits::pow(l.recip(), 2 * k as usize + 1)).sum()
    }

    /// Evaluates a polynomial in the primitives at `x_k = tr Lambda^{-(2k+1)}`.
    pub fn specialize_x(&self, p: &Poly) -> Result<Rational> {
        p.evaluate(|k| self.power_sum(k))
    }
}

/// `det (1 - t Lambda^{-1} U) / det (1 - Lambda^{-1} U)` expanded to `U^order`.
pub fn hl_generating(spec: &HLSpecialization, order: usize) -> Series<Rational> {
    let mut out = Series::one("U", order);
    for l in spec.eigenvalues.iter() {
        let inv = l.recip();
        let numerator = Series::new("U", alloc::vec![Rational::one(), -(&spec.t * &inv)], order);
        let geometric = Series::from_fn("U", order, |i| num_traits::pow(inv.clone(), i));
        out = out.mul(&numerator).and_then(|s| s.mul(&geometric)).expect("same variable");
    }
    out
}

/// The cross-multiplied sides of
/// `q_{Lambda,t}(U) = q_{Lambda^{-1},t^{-1}}(U^{-1})` as polynomials in `U`.
///
/// The left side is `prod (l - t U) / prod (l - U)` and the right side is
/// `prod (U - l/t) / prod (U - l)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityWitness {
    pub lhs_numerator: UPoly,
    pub lhs_denominator: UPoly,
    pub rhs_numerator: UPoly,
    pub rhs_denominator: UPoly,
    pub holds: bool,
}

/// Checks the duality for a rational `t` with `t^p = 1` (so `t = 1`, or `t = -1` with `p` even).
pub fn lambda_duality_check(eigenvalues: &[Rational], t: &Rational, p: u32) -> Result<DualityWitness> {
    if p == 0 || !eigenvalues.len().is_multiple_of(p as usize) {
        return Err(Error::usage(alloc::format!("matrix size {} is not divisible by {p}", eigenvalues.len())));
    }
    if num_traits::pow(t.clone(), p as usize) != Rational::one() {
        return Err(Error::usage(alloc::format!("{t} is not a root of unity of order {p}")));
    }
    HLSpecialization::new(eigenvalues.to_vec(), t.clone())?;
    let t_inv = t.recip();
    let mut lhs_numerator = UPoly::constant(Rational::one());
    let mut lhs_denominator = lhs_numerator.clone();
    let mut rhs_numerator = lhs_numerator.clone();
    let mut rhs_denominator = lhs_numerator.clone();
    for l in eigenvalues {
        lhs_numerator = &lhs_numerator * &UPoly::new(alloc::vec![l.clone(), -t.clone()]);
        lhs_denominator = &lhs_denominator * &UPoly::new(alloc::vec![l.clone(), -Rational::one()]);
        rhs_numerator = &rhs_numerator * &UPoly::new(alloc::vec![-(l * &t_inv), Rational::one()]);
        rhs_denominator = &rhs_denominator * &UPoly::new(alloc::vec![-l.clone(), Rational::one()]);
    }
    let holds = &lhs_numerator * &rhs_denominator == &rhs_numerator * &lhs_denominator;
    Ok(DualityWitness { lhs_numerator, lhs_denominator, rhs_numerator, rhs_denominator, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, rat};
    use crate::qdelta::q_in_x;

    #[test]
    fn generating_examples() {
        let s = HLSpecialization::new(alloc::vec![int(1)], int(-1)).unwrap();
        let g = hl_generating(&s, 5);
        assert_eq!(g.coeffs(), &[int(1), int(2), int(2), int(2), int(2), int(2)]);
        let s = HLSpecialization::new(alloc::vec![int(3), rat(1, 2)], int(1)).unwrap();
        assert!(hl_generating(&s, 6).is_one());
        let s = HLSpecialization::new(alloc::vec![int(2)], int(-1)).unwrap();
        assert_eq!(s.power_sum(1), rat(1, 8));
        assert!(HLSpecialization::new(alloc::vec![int(0)], int(-1)).is_err());
    }

    #[test]
    fn specialization_matches_primitives() {
        let s = HLSpecialization::new(alloc::vec![int(2), rat(1, 3), int(5)], int(-1)).unwrap();
        let g = hl_generating(&s, 8);
        for (n, q) in q_in_x(8).iter().enumerate() {
            assert_eq!(&s.specialize_x(q).unwrap(), g.coeff(n));
        }
        // q(U) q(-U) = 1
        assert!(g.mul(&g.negate_variable()).unwrap().is_one());
    }

    #[test]
    fn duality() {
        let w = lambda_duality_check(&[int(2), rat(1, 5)], &int(-1), 2).unwrap();
        assert!(w.holds);
        assert!(lambda_duality_check(&[int(1), int(1)], &int(-1), 2).unwrap().holds);
        assert!(lambda_duality_check(&[int(7)], &int(1), 1).unwrap().holds);
        assert!(lambda_duality_check(&[int(2), int(3), int(4)], &int(-1), 2).is_err());
        assert!(lambda_duality_check(&[int(2), int(3)], &int(2), 2).is_err());
    }
}
