use alloc::vec::Vec;

use super::nilpotent::Nilpotent;
use super::witt::{witt_mul, WittVector};
use crate::error::{Error, Result};
use crate::exactring::{determinant, Monomial, Rational, Ring};

/// `h(1)`, a unit when every `h_i` lies in the maximal ideal.
///
/// The truncation is taken to be all of `h`; coefficients beyond it are
/// treated as zero.
pub fn trace<const N: u32>(h: &WittVector<Nilpotent<N>>) -> Result<Nilpotent<N>> {
    for i in 1..=h.order() {
        if !h.coeff(i).is_nilpotent() {
            return Err(Error::domain(alloc::format!("h_{i} is not nilpotent, so h(1) is not a finite unit")));
        }
    }
    Ok(h.at_one())
}

/// `(h * g)(1)`.
pub fn pairing<const N: u32>(h: &WittVector<Nilpotent<N>>, g: &WittVector<Nilpotent<N>>) -> Result<Nilpotent<N>> {
    trace(&witt_mul(h, g)?)
}

/// Bilinear part of the pairing on the truncation at `T^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct NondegeneracyWitness {
    /// Entry `(i, j)` is the coefficient of `s u` in
    /// `pairing(1 + s T^i, 1 + u T^j)`.
    pub gram: Vec<Vec<Rational>>,
    pub determinant: Rational,
    pub nondegenerate: bool,
}

/// Pairs the family `1 + s T^i` against `1 + u T^j` over `Q[s, u]/(s^N, u^N)`.
pub fn pairing_nondegeneracy<const N: u32>(order: usize) -> Result<NondegeneracyWitness> {
    if N < 2 {
        return Err(Error::usage("the test ring needs nilpotency order at least 2"));
    }
    let su = Monomial::from_pairs([(0, 1), (1, 1)]);
    let family = |v: u32, i: usize| {
        let mut c = alloc::vec![Nilpotent::<N>::zero(); order];
        c[i - 1] = Nilpotent::var(v);
        WittVector::from_coeffs(c)
    };
    let mut gram = Vec::with_capacity(order);
    for i in 1..=order {
        let mut row = Vec::with_capacity(order);
        for j in 1..=order {
            row.push(pairing(&family(0, i), &family(1, j))?.coeff(&su));
        }
        gram.push(row);
    }
    let det = determinant(gram.clone());
    let nondegenerate = !num_traits::Zero::is_zero(&det);
    Ok(NondegeneracyWitness { gram, determinant: det, nondegenerate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, Poly};

    #[test]
    fn examples() {
        type R = Nilpotent<3>;
        let s = R::var(0);
        let h = WittVector::linear(s.clone(), 3);
        assert_eq!(trace(&h).unwrap(), R::one() + s);

        type R2 = Nilpotent<2>;
        let h = WittVector::linear(R2::var(0), 4);
        let g = WittVector::linear(R2::var(1), 4);
        let expect = R2::from_poly(Poly::constant(int(1)) + Poly::var(0) * Poly::var(1));
        assert_eq!(pairing(&h, &g).unwrap(), expect);
        assert_eq!(pairing(&h, &WittVector::zero(4)).unwrap(), R2::one());

        let bad = WittVector::linear(R::one(), 2);
        assert!(trace(&bad).is_err());
    }

    #[test]
    fn nondegenerate() {
        let w = pairing_nondegeneracy::<7>(6).unwrap();
        assert!(w.nondegenerate);
        for (i, row) in w.gram.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(row[i], int(sign * (i as i64 + 1)));
        }
    }
}
