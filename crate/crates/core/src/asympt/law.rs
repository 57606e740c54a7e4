use num_traits::ToPrimitive;

use super::epsilon::{epsilon_inverse, epsilon_num};
use crate::error::{Error, Result};
use crate::fgl::epsilon_law;

/// `x +_inf y = xy/(x+y)`; the point at infinity is the identity and `-x`
/// is the inverse of `x`, so `x + y = 0` is a pole.
pub fn infinity_law(x: f64, y: f64) -> Result<f64> {
    let sum = x + y;
    if sum == 0.0 {
        return Err(Error::domain("x +_inf (-x) is the identity at infinity"));
    }
    Ok(x * y / sum)
}

/// `Psi(x) = exp(-1/epsilon^{-1}(x))`.
pub fn psi(x: f64) -> Result<f64> {
    let u = epsilon_inverse(x)?.value;
    Ok(libm::exp(-1.0 / u))
}

/// `x +_eps y = epsilon(epsilon^{-1}(x) +_inf epsilon^{-1}(y))`.
pub fn epsilon_sum(x: f64, y: f64) -> Result<f64> {
    let s = infinity_law(epsilon_inverse(x)?.value, epsilon_inverse(y)?.value)?;
    Ok(epsilon_num(s)?.value)
}

const MIN_ARGUMENT: f64 = 0.05;
const MIN_SUM_RATIO: f64 = 1e-3;

/// Whether the pair avoids the places where double precision cannot resolve
/// `Psi` to `1e-9`: arguments of `exp(-1/u)` close to `0` (inputs near `1`,
/// where `epsilon^{-1}` loses relative precision) and near-poles of `+_inf`.
pub fn psi_pair_is_well_conditioned(x: f64, y: f64) -> bool {
    let (Ok(a), Ok(b)) = (epsilon_inverse(x), epsilon_inverse(y)) else {
        return false;
    };
    let (a, b) = (a.value, b.value);
    if libm::fabs(a) < MIN_ARGUMENT || libm::fabs(b) < MIN_ARGUMENT {
        return false;
    }
    if libm::fabs(a + b) < MIN_SUM_RATIO * (libm::fabs(a) + libm::fabs(b)) {
        return false;
    }
    let s = a * b / (a + b);
    libm::fabs(s) >= MIN_ARGUMENT / 2.0 && epsilon_num(s).is_ok()
}

#[derive(Clone, Debug, PartialEq)]
pub struct PsiWitness {
    pub x: f64,
    pub y: f64,
    /// `x +_eps y`.
    pub sum: f64,
    /// `Psi(x +_eps y)`.
    pub lhs: f64,
    /// `Psi(x) Psi(y)`.
    pub rhs: f64,
    pub relative_error: f64,
    pub passed: bool,
}

pub const PSI_TOLERANCE: f64 = 1e-9;

/// Checks `Psi(x +_eps y) = Psi(x) Psi(y)`, recovering the argument of the
/// left side from `x +_eps y` by a second root-finding pass.
pub fn psi_hom_check(x: f64, y: f64) -> Result<PsiWitness> {
    let sum = epsilon_sum(x, y)?;
    let lhs = psi(sum)?;
    let rhs = psi(x)? * psi(y)?;
    let relative_error = libm::fabs(lhs - rhs) / libm::fabs(rhs).max(f64::MIN_POSITIVE);
    Ok(PsiWitness { x, y, sum, lhs, rhs, relative_error, passed: relative_error <= PSI_TOLERANCE })
}

/// The truncated formal epsilon law against `x +_eps y`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalAgreement {
    pub order: usize,
    pub formal: f64,
    pub numeric: f64,
    pub difference: f64,
    /// Size of the top-degree part of the truncated series, the scale of
    /// the error expected from truncation.
    pub expected: f64,
}

/// Evaluates the formal law with exponential `sum (2n-1)!! u^{n+1}` at small
/// `x, y > 0`. Its coordinate is `u = 1/epsilon^{-1}`, in which `+_inf` is
/// addition, so it should approximate `x +_eps y`.
pub fn formal_law_agreement(x: f64, y: f64, order: usize) -> Result<FormalAgreement> {
    if !(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0) {
        return Err(Error::domain("the formal law is compared at small positive arguments"));
    }
    let law = epsilon_law(order)?;
    let mut formal = 0.0;
    let mut expected = 0.0;
    for (exps, c) in law.law.terms() {
        let c = c.to_f64().ok_or_else(|| Error::range("coefficient out of range"))?;
        let term = c * libm::pow(x, exps[0] as f64) * libm::pow(y, exps[1] as f64);
        formal += term;
        if (exps[0] + exps[1]) as usize == order {
            expected += libm::fabs(term);
        }
    }
    let numeric = epsilon_sum(x, y)?;
    let difference = libm::fabs(formal - numeric);
    Ok(FormalAgreement { order, formal, numeric, difference, expected })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn law_examples() {
        assert_eq!(infinity_law(2.0, 2.0).unwrap(), 1.0);
        assert!(infinity_law(3.0, -3.0).is_err());
        let (a, b, c) = (0.7, -2.3, 5.1);
        let left = infinity_law(infinity_law(a, b).unwrap(), c).unwrap();
        let right = infinity_law(a, infinity_law(b, c).unwrap()).unwrap();
        assert!(libm::fabs(left - right) <= 1e-12 * libm::fabs(left));
    }

    #[test]
    fn psi_homomorphism() {
        let (x, y) = (epsilon_num(1.0).unwrap().value, epsilon_num(2.0).unwrap().value);
        let w = psi_hom_check(x, y).unwrap();
        assert!(w.passed, "{w:?}");
        assert!(libm::fabs(w.rhs - libm::exp(-1.5)) < 1e-12);
        let w = psi_hom_check(0.3, 2.4).unwrap();
        assert!(w.passed, "{w:?}");
    }

    #[test]
    fn formal_law_is_asymptotic() {
        let a = formal_law_agreement(0.01, 0.02, 6).unwrap();
        assert!(a.difference <= 10.0 * a.expected, "{a:?}");
        let finer = formal_law_agreement(0.005, 0.01, 6).unwrap();
        assert!(finer.difference < a.difference);
    }
}
