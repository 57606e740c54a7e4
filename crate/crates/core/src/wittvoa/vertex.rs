use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::symfn::{p, p_check, Bounds, ZSeries};
use crate::error::{Error, Result};
use crate::exactring::{int, CyclotomicField, Poly, Rational, UPoly};

/// The Hall-Littlewood parameter: a rational number, or a primitive root of
/// unity of the given order handled inside its cyclotomic field.
#[derive(Clone, Debug, PartialEq)]
pub enum TParameter {
    Rational(Rational),
    PrimitiveRoot(u32),
}

/// `binom(m, n) = m (m-1) ... (m-n+1) / n!`, for any integer `m`.
pub fn binomial(m: i64, n: u32) -> Rational {
    let mut out = Rational::one();
    for i in 0..n as i64 {
        out = out * int(m - i) / int(i + 1);
    }
    out
}

/// `Y(p~_n) = sum_{m != 0} (1 - t^|m|)/(1 - t^n) binom(m, n) p~_m z^{m-n}`,
/// where `p~_m = p_m / m` and, for `m > 0`, `p~_{-m} = (-1)^m p^_m / m`.
#[derive(Clone, Debug)]
pub struct PowerSumVertex {
    n: u32,
    t: TParameter,
    field: Option<CyclotomicField>,
    denominator: UPoly,
}

pub fn vertex_y_powersum(n: u32, t: TParameter) -> Result<PowerSumVertex> {
    if n == 0 {
        return Err(Error::usage("Y(p~_n) needs n >= 1"));
    }
    let field = match &t {
        TParameter::PrimitiveRoot(order) => Some(CyclotomicField::new(*order)?),
        TParameter::Rational(_) => None,
    };
    let mut v = PowerSumVertex { n, t, field, denominator: UPoly::default() };
    v.denominator = v.one_minus_t_power(n);
    if v.denominator.is_zero() {
        return Err(Error::domain(alloc::format!("1 - t^{n} vanishes, so Y(p~_{n}) is undefined")));
    }
    Ok(v)
}

impl PowerSumVertex {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> &TParameter {
        &self.t
    }

    fn one_minus_t_power(&self, k: u32) -> UPoly {
        match (&self.t, &self.field) {
            (_, Some(f)) => f.one_minus_power(k as i64),
            (TParameter::Rational(t), None) => {
                UPoly::constant(Rational::one() - num_traits::pow(t.clone(), k as usize))
            }
            (TParameter::PrimitiveRoot(_), None) => unreachable!(),
        }
    }

    /// The scalar in front of `p~_m z^{m-n}`, in `Q` or `Q(t)`.
    pub fn coefficient(&self, m: i64) -> UPoly {
        if m == 0 {
            return UPoly::default();
        }
        let ratio = self.one_minus_t_power(m.unsigned_abs() as u32);
        let ratio = match &self.field {
            Some(f) => f.div(&ratio, &self.denominator).expect("denominator checked"),
            None => ratio.scale(&self.denominator.coeff(0).recip()),
        };
        ratio.scale(&binomial(m, self.n))
    }

    /// The coefficient when it is rational.
    pub fn rational_coefficient(&self, m: i64) -> Option<Rational> {
        let c = self.coefficient(m);
        match c.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(c.coeff(0)),
            _ => None,
        }
    }

    /// Nonzero summands with `|m| <= bound`, as `(m, coefficient)`; the
    /// summand's power of `z` is `m - n`.
    pub fn terms(&self, bound: u32) -> Vec<(i64, UPoly)> {
        let b = bound as i64;
        (-b..=b).map(|m| (m, self.coefficient(m))).filter(|(_, c)| !c.is_zero()).collect()
    }

    /// For `t` a primitive `p`-th root of unity: whether no `p~_m` with `p | m`
    /// appears among the summands with `|m| <= bound`, so that the operator
    /// preserves the quotient where those power sums vanish.
    pub fn closes_on_quotient(&self, bound: u32) -> Option<bool> {
        let TParameter::PrimitiveRoot(order) = self.t else {
            return None;
        };
        Some(self.terms(bound).iter().all(|(m, _)| m % order as i64 != 0))
    }

    /// `Y(p~_n)` as an element of `(S (x) S^)((z))`, truncated to `bounds`.
    pub fn as_series(&self, bounds: Bounds) -> Result<ZSeries> {
        let mut out = ZSeries::default();
        let n = self.n as i64;
        for m in 1..=bounds.degree as i64 {
            let c = self.rational(m)?;
            out.add_term(m - n, p(m as u32).scale_by(&(c / int(m))));
        }
        for m in 1..=bounds.check_degree as i64 {
            let c = self.rational(-m)?;
            let sign = if m % 2 == 0 { int(1) } else { int(-1) };
            out.add_term(-m - n, p_check(m as u32).scale_by(&(c * sign / int(m))));
        }
        Ok(out)
    }

    fn rational(&self, m: i64) -> Result<Rational> {
        self.rational_coefficient(m).ok_or_else(|| Error::usage("the coefficient is not rational; use the field form"))
    }

    /// The action on `f` in `Q[p_1, p_2, ...]`: `p~_m` (`m > 0`) multiplies and
    /// `p~_{-m}` acts as `-d/dp_m`, the Hall adjoint of `p_{-m} = m d/dp_m`.
    /// Terms of degree above `degree_bound` are dropped.
    pub fn apply(&self, f: &Poly, degree_bound: u32) -> Result<ZSeries> {
        let n = self.n as i64;
        let bounds = Bounds { degree: degree_bound, check_degree: 0 };
        let mut out = ZSeries::default();
        for m in 1..=degree_bound as i64 {
            let c = self.rational(m)? / int(m);
            out.add_term(m - n, bounds.truncate(&(&p(m as u32) * f)).scale_by(&c));
        }
        let max_var = f.variables().into_iter().max().unwrap_or(0) as i64;
        for m in 1..=max_var {
            let c = -self.rational(-m)?;
            out.add_term(-m - n, f.derivative(m as u32).scale_by(&c));
        }
        Ok(out)
    }
}

/// `<dual, Y f>` coefficientwise in `z`, under the Hall inner product.
pub fn matrix_element(dual: &Poly, image: &ZSeries) -> BTreeMap<i64, Rational> {
    image.terms().map(|(k, c)| (*k, super::symfn::hall_pairing(dual, c))).filter(|(_, v)| !v.is_zero()).collect()
}
