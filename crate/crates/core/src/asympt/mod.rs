//! Double-precision evaluation of the Mittag-Leffler function `exp_alpha`,
//! its asymptotic expansion, the functions `sin_1/2` and `epsilon` built from
//! it, and the group law `x +_inf y = xy/(x+y)` transported by `epsilon`.
//!
//! Every value comes with an error estimate: the size of the first omitted
//! term plus accumulated rounding (a heuristic, not an interval bound).

mod epsilon;
mod law;
mod mittag_leffler;
mod special;

pub use epsilon::{epsilon_asymptotic, epsilon_inverse, epsilon_num, sin_half};
pub use law::{
    epsilon_sum, formal_law_agreement, infinity_law, psi, psi_hom_check, psi_pair_is_well_conditioned, FormalAgreement,
    PsiWitness, PSI_TOLERANCE,
};
pub use mittag_leffler::{
    asymptotic_comparison, asymptotic_tail, ml_exp, ml_exp_series, series_cutoff, AsymptoticComparison,
};
pub use special::{dawson, erfcx};

/// How a [`FloatEval`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Series,
    Asymptotic,
    Identity,
    RootFinding,
}

/// A floating point value with an estimated absolute error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatEval<T = f64> {
    pub value: T,
    pub error: f64,
    pub method: Method,
}

/// Compensated (Neumaier) summation.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

pub(crate) const EPS: f64 = f64::EPSILON;
pub(crate) const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum() {
        let mut s = Neumaier::default();
        for x in [1.0, 1e100, 1.0, -1e100] {
            s.add(x);
        }
        assert_eq!(s.value(), 2.0);
    }
}
