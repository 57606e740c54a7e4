use super::virasoro::VirasoroOp;
use crate::error::{Error, Result};
use crate::exactring::{double_factorial, int, Poly, Rational};

/// `t_k -> -(2k-1)!! x_k`, with `(-1)!! = 1`. Variables other than the `t_k`
/// (such as [`super::V_VARIABLE`]) pass through unchanged.
pub fn jozefiak_map(p: &Poly) -> Poly {
    p.substitute(|k| {
        if k == super::V_VARIABLE {
            Poly::var(k)
        } else {
            Poly::var(k).scale_by(&-double_factorial(2 * k as i64 - 1))
        }
    })
    .expect("no inverted variables")
}

/// One entry of the sign and normalization conventions in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Convention {
    pub item: &'static str,
    pub common_form: &'static str,
    pub used: &'static str,
    pub note: &'static str,
}

pub const CONVENTIONS: &[Convention] = &[
    Convention {
        item: "change of variables",
        common_form: "t_k -> -(2k-1)!! x_k",
        used: "t_k -> -(2k-1)!! x_k",
        note: "(-1)!! = 1",
    },
    Convention {
        item: "dilaton shift",
        common_form: "x_1 -> x_1 - 1",
        used: "x_1 -> x_1 + 1",
        note: "equivalent to t_1 -> t_1 - 1; with x_1 -> x_1 - 1 the shifted L_{-1} and L_0 \
               do not annihilate tau",
    },
    Convention {
        item: "normalization",
        common_form: "L_n in the t_k",
        used: "L_n in the x_k",
        note: "the x-form of L_n is 2^n times the t-form; annihilation is unaffected",
    },
    Convention {
        item: "genus bookkeeping",
        common_form: "v^n / n! per marked point, v^{3(g-1)} per genus",
        used: "v^{3g-3+n}",
        note: "the exponent is the dimension sum(d_j); v = 1 unless retained",
    },
];

/// Signed amount added to `x_1` inside the coefficients of `L_n`.
pub const DILATON_SHIFT: i64 = 1;

/// `L~_n`: `L_n` with `x_1 -> x_1 + 1` in its coefficients.
pub fn shifted_l(n: i32) -> Result<VirasoroOp> {
    shifted_l_with(n, &int(DILATON_SHIFT))
}

/// `L_n` with `x_1 -> x_1 + c` in its coefficients.
pub fn shifted_l_with(n: i32, c: &Rational) -> Result<VirasoroOp> {
    if n < -1 {
        return Err(Error::usage(alloc::format!("shifted constraints need n >= -1, got {n}")));
    }
    Ok(VirasoroOp::generator(n).shifted(1, c))
}

/// `p(x_1 + c)`.
pub fn shift_argument(p: &Poly, c: &Rational) -> Poly {
    p.substitute(|k| if k == 1 { Poly::var(1) + Poly::constant(c.clone()) } else { Poly::var(k) })
        .expect("no inverted variables")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::Monomial;

    #[test]
    fn substitution() {
        assert_eq!(jozefiak_map(&Poly::var(0)), Poly::var(0).scale_by(&int(-1)));
        assert_eq!(jozefiak_map(&Poly::var(2)), Poly::var(2).scale_by(&int(-3)));
        assert_eq!(jozefiak_map(&Poly::var(3).pow(2)), Poly::var(3).pow(2).scale_by(&int(225)));
    }

    #[test]
    fn conjugation() {
        let c = int(DILATON_SHIFT);
        let p = &Poly::var(1).pow(2) * &Poly::var(0) + Poly::monomial(Monomial::var(2), int(3));
        for n in -1..=2 {
            let tilde = shifted_l(n).unwrap();
            let direct = tilde.apply(&p);
            let via = shift_argument(&VirasoroOp::generator(n).apply(&shift_argument(&p, &-&c)), &c);
            assert_eq!(direct, via, "n = {n}");
        }
        assert!(shifted_l(-2).is_err());
        let l0 = VirasoroOp::generator(0);
        assert_ne!(shifted_l(0).unwrap(), l0);
        assert_eq!(shifted_l(0).unwrap().shifted(1, &-c), l0);
    }
}
