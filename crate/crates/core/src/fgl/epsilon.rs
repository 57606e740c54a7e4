use super::kw::kw_genus;
use super::{law_from_exponential, GroupLaw};
use crate::error::Result;
use crate::exactring::{double_factorial, int, LaurentSeries, Rational, Series};

/// `sum_{n>=0} (2n-1)!! u^{n+1} = u + u^2 + 3u^3 + 15u^4 + ...`, the
/// asymptotic expansion of `epsilon(1/u)`.
pub fn epsilon_exponential(order: usize) -> Series<Rational> {
    Series::from_fn("T", order, |i| if i == 0 { int(0) } else { double_factorial(2 * i as i64 - 3) })
}

/// The law with exponential [`epsilon_exponential`].
pub fn epsilon_law(order: usize) -> Result<GroupLaw<Rational>> {
    law_from_exponential(&epsilon_exponential(order))
}

/// Whether the KW law at `x_k = 1` coincides with the epsilon law,
/// including the genus values.
pub fn kw_matches_epsilon(order: usize) -> Result<bool> {
    let (kw, genus) = kw_genus(order)?;
    let at_one = kw.map(|c| c.evaluate(|_| int(1)).expect("x_0 = 1 is a unit"));
    let eps = epsilon_law(order)?;
    let genus_at_one: alloc::vec::Vec<Rational> =
        genus.values.iter().map(|c| c.evaluate(|_| int(1)).unwrap()).collect();
    Ok(at_one == eps && genus_at_one == eps.genus_values().values)
}

/// `epsilon(w) = sum (-w)^n/(2n+1)!!` with `w = 1/x`, and the genus
/// `x / epsilon(1/x) = w^{-1} / epsilon(w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HirzebruchSeries {
    pub epsilon: Series<Rational>,
    pub genus: LaurentSeries<Rational>,
}

pub fn hirzebruch_series(order: usize) -> Result<HirzebruchSeries> {
    let epsilon = Series::from_fn("w", order, |n| {
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        sign / double_factorial(2 * n as i64 + 1)
    });
    let genus = LaurentSeries { valuation: -1, series: epsilon.mul_inverse()? };
    Ok(HirzebruchSeries { epsilon, genus })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    #[test]
    fn law_coefficients() {
        let law = epsilon_law(8).unwrap();
        assert!(law.check_axioms().unwrap().all());
        assert_eq!(law.coeff(1, 1), int(2));
        assert_eq!(law.negation.coeff(1), &int(-1));
        assert_eq!(law.negation.coeff(2), &int(2));
        assert!(kw_matches_epsilon(6).unwrap());
    }

    #[test]
    fn hirzebruch() {
        let h = hirzebruch_series(4).unwrap();
        assert_eq!(h.epsilon.coeffs()[..4], [int(1), rat(-1, 3), rat(1, 15), rat(-1, 105)]);
        assert_eq!(h.genus.coeff(-1), int(1));
        assert_eq!(h.genus.coeff(0), rat(1, 3));
        assert!(h.epsilon.mul(&h.genus.series).unwrap().is_one());
    }
}
