use core::fmt;

use crate::error::{Error, Result};
use crate::exactring::{int, Poly, Sqrt2Poly};

/// A half-odd integer `r`, stored as `2r`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub fn from_twice(twice: i32) -> Result<Self> {
        if twice % 2 == 0 {
            return Err(Error::usage(alloc::format!("{twice}/2 is not a half-odd integer")));
        }
        Ok(HalfInt { twice })
    }

    /// `k + 1/2` (with `k` possibly negative).
    pub fn plus_half(k: i32) -> Self {
        HalfInt { twice: 2 * k + 1 }
    }

    pub fn twice(self) -> i32 {
        self.twice
    }

    /// The variable index `k` with `|r| = k + 1/2`.
    pub fn index(self) -> u32 {
        (self.twice.unsigned_abs() - 1) / 2
    }

    pub fn is_positive(self) -> bool {
        self.twice > 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.twice)
    }
}

/// Rational part of `sqrt(2) * alpha_r`: `-x_k` for `r < 0`, `-(2k+1) d/dx_k` for `r > 0`.
fn scaled_mode(r: HalfInt, p: &Poly) -> Poly {
    let k = r.index();
    if r.is_positive() {
        p.derivative(k).scale_by(&int(-(2 * k as i64 + 1)))
    } else {
        -(&Poly::var(k) * p)
    }
}

/// `alpha_r` on a vector with coefficients in `Q(sqrt 2)`.
pub fn apply_alpha_sqrt2(r: HalfInt, v: &Sqrt2Poly) -> Sqrt2Poly {
    v.map(|p| scaled_mode(r, p)).times_inv_sqrt2()
}

/// `alpha_r p` for a rational polynomial; `[alpha_r, alpha_s] = r delta_{r+s,0}`.
pub fn apply_alpha(r: HalfInt, p: &Poly) -> Sqrt2Poly {
    apply_alpha_sqrt2(r, &Sqrt2Poly::from_rational(p.clone()))
}

/// Whether `[alpha_r, alpha_s] p = r delta_{r+s,0} p`.
pub fn heisenberg_check(r: HalfInt, s: HalfInt, p: &Poly) -> bool {
    let v = Sqrt2Poly::from_rational(p.clone());
    let rs = apply_alpha_sqrt2(r, &apply_alpha_sqrt2(s, &v));
    let sr = apply_alpha_sqrt2(s, &apply_alpha_sqrt2(r, &v));
    let expected = if r.twice() + s.twice() == 0 {
        p.scale_by(&crate::exactring::rat(r.twice() as i64, 2))
    } else {
        Poly::default()
    };
    (rs - sr) == Sqrt2Poly::from_rational(expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    #[test]
    fn lowest_modes() {
        let minus_half = HalfInt::from_twice(-1).unwrap();
        let a = apply_alpha(minus_half, &Poly::constant(int(1)));
        assert!(a.rational.is_empty());
        assert_eq!(a.surd, Poly::var(0).scale_by(&rat(-1, 2)));
        let a = apply_alpha(HalfInt::from_twice(1).unwrap(), &Poly::var(0));
        assert_eq!(a.surd, Poly::constant(rat(-1, 2)));
        assert!(apply_alpha(HalfInt::from_twice(3).unwrap(), &Poly::var(0)).is_zero());
        assert!(HalfInt::from_twice(2).is_err());
    }

    #[test]
    fn commutators() {
        let p = &Poly::var(0).pow(2) * &Poly::var(2) + Poly::var(1);
        for r in [-5, -3, -1, 1, 3, 5] {
            for s in [-5, -3, -1, 1, 3, 5] {
                let (r, s) = (HalfInt::from_twice(r).unwrap(), HalfInt::from_twice(s).unwrap());
                assert!(heisenberg_check(r, s, &p), "{r} {s}");
            }
        }
    }
}
