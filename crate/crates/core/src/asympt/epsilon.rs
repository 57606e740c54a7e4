use super::special::dawson;
use super::{FloatEval, Method, Neumaier, EPS, FRAC_1_SQRT_PI};
use crate::error::{Error, Result};

const SIN_HALF_SERIES_LIMIT: f64 = 3.0;
const EPSILON_SERIES_LIMIT: f64 = 8.0;

/// `sin_1/2(x) = sum (-1)^m x^{2m+1} / Gamma(m + 3/2) = (2/sqrt(pi)) D(x)`.
pub fn sin_half(x: f64) -> FloatEval {
    if libm::fabs(x) > SIN_HALF_SERIES_LIMIT {
        let value = 2.0 * FRAC_1_SQRT_PI * dawson(x);
        return FloatEval { value, error: 16.0 * EPS * libm::fabs(value), method: Method::Identity };
    }
    let x2 = x * x;
    let mut term = 2.0 * FRAC_1_SQRT_PI * x;
    let mut sum = Neumaier::default();
    let mut magnitude = 0.0;
    let mut m = 0.0;
    while libm::fabs(term) > 1e-18 * libm::fabs(x) {
        sum.add(term);
        magnitude += libm::fabs(term);
        term *= -x2 / (m + 1.5);
        m += 1.0;
    }
    let value = sum.value();
    FloatEval { value, error: libm::fabs(term) + (4.0 + m) * EPS * magnitude, method: Method::Series }
}

/// `epsilon(z) = sum (-z)^n / (2n+1)!! = (pi/2z)^{1/2} sin_1/2((z/2)^{1/2})`.
///
/// The series is used for `z <= 8` (it has no cancellation for `z < 0`);
/// larger `z` go through `sqrt(2/z) D(sqrt(z/2))`.
pub fn epsilon_num(z: f64) -> Result<FloatEval> {
    if z.is_nan() {
        return Err(Error::domain("epsilon of NaN"));
    }
    if z > EPSILON_SERIES_LIMIT {
        if z.is_infinite() {
            return Ok(FloatEval { value: 0.0, error: 0.0, method: Method::Identity });
        }
        let value = libm::sqrt(2.0 / z) * dawson(libm::sqrt(z / 2.0));
        return Ok(FloatEval { value, error: 16.0 * EPS * value, method: Method::Identity });
    }
    let mut term = 1.0;
    let mut sum = Neumaier::default();
    let mut magnitude = 0.0;
    let mut n = 0.0;
    loop {
        sum.add(term);
        magnitude += libm::fabs(term);
        term *= -z / (2.0 * n + 3.0);
        n += 1.0;
        if !magnitude.is_finite() {
            return Err(Error::range("epsilon overflows"));
        }
        if libm::fabs(term) <= 1e-18 * libm::fabs(sum.value()) {
            break;
        }
    }
    let value = sum.value();
    Ok(FloatEval { value, error: libm::fabs(term) + (4.0 + n) * EPS * magnitude, method: Method::Series })
}

/// `sum_{n<=N} (2n-1)!! x^{-n-1}`, the expansion of `epsilon` at `+inf`,
/// optimally truncated when `terms` is `None`. The terms are positive, so the
/// error sums the omitted terms rather than taking only the first.
pub fn epsilon_asymptotic(x: f64, terms: Option<usize>) -> Result<FloatEval> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::domain("the expansion is taken at +infinity"));
    }
    let mut term = 1.0 / x;
    let mut sum = 0.0;
    let mut n = 0usize;
    loop {
        sum += term;
        let next = term * (2.0 * n as f64 + 1.0) / x;
        n += 1;
        let stop = match terms {
            Some(limit) => n > limit,
            None => next >= term || next < 1e-18 * sum,
        };
        if stop {
            // terms are positive: sum the omitted ones down to the smallest,
            // which also bounds the exponentially small remainder
            let mut tail = 0.0;
            let (mut omitted, mut k) = (next, n);
            loop {
                tail += omitted;
                let following = omitted * (2.0 * k as f64 + 1.0) / x;
                k += 1;
                if following >= omitted || following < 1e-18 * sum {
                    tail += omitted;
                    break;
                }
                omitted = following;
            }
            return Ok(FloatEval { value: sum, error: tail + 4.0 * EPS * sum, method: Method::Asymptotic });
        }
        term = next;
    }
}

/// The unique `x` with `epsilon(x) = y`.
///
/// `epsilon` decreases from `+inf` to `0`, so `y < 1` has a positive root
/// (bracketed starting from the asymptotic guess `1/y`) and `y > 1` a negative
/// one. The bracket is refined by the Illinois variant of regula falsi on
/// `log epsilon`.
pub fn epsilon_inverse(y: f64) -> Result<FloatEval> {
    if y.is_nan() || y <= 0.0 || !y.is_finite() {
        return Err(Error::domain("epsilon takes values in (0, inf)"));
    }
    if y == 1.0 {
        return Ok(FloatEval { value: 0.0, error: 0.0, method: Method::RootFinding });
    }
    let target = libm::log(y);
    let f = |x: f64| -> Result<f64> { Ok(libm::log(epsilon_num(x)?.value) - target) };
    let (mut lo, mut hi) = if y < 1.0 {
        let mut hi = (2.0 / y).max(1.0);
        while f(hi)? > 0.0 {
            hi *= 2.0;
        }
        (0.0, hi)
    } else {
        let mut lo = -1.0;
        while f(lo)? < 0.0 {
            lo *= 2.0;
        }
        (lo, 0.0)
    };
    // f(lo) > 0 > f(hi)
    let (mut f_lo, mut f_hi) = (f(lo)?, f(hi)?);
    let mut side = 0i8;
    for _ in 0..200 {
        if hi - lo <= 4.0 * EPS * libm::fabs(lo).max(libm::fabs(hi)) {
            break;
        }
        let mut mid = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if !(mid > lo && mid < hi) {
            mid = 0.5 * (lo + hi);
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if f_mid > 0.0 {
            lo = mid;
            f_lo = f_mid;
            if side == 1 {
                f_hi *= 0.5;
            }
            side = 1;
        } else {
            hi = mid;
            f_hi = f_mid;
            if side == -1 {
                f_lo *= 0.5;
            }
            side = -1;
        }
    }
    let value = 0.5 * (lo + hi);
    Ok(FloatEval { value, error: 0.5 * (hi - lo) + 4.0 * EPS * libm::fabs(value), method: Method::RootFinding })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_half_pieces_agree() {
        for x in [0.3, 1.7, 2.99, -2.5] {
            let series = sin_half(x);
            let identity = 2.0 * FRAC_1_SQRT_PI * dawson(x);
            assert!(libm::fabs(series.value - identity) < 1e-13, "{x}");
        }
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon_num(0.0).unwrap().value, 1.0);
        let (a, b, c) =
            (epsilon_num(-1.0).unwrap().value, epsilon_num(0.0).unwrap().value, epsilon_num(1.0).unwrap().value);
        assert!(a > b && b > c);
        // both branches agree at the switch
        let series = {
            let mut term = 1.0;
            let mut sum = 0.0;
            for n in 0..80 {
                sum += term;
                term *= -8.0 / (2.0 * n as f64 + 3.0);
            }
            sum
        };
        let identity = libm::sqrt(2.0 / 8.0) * dawson(2.0);
        assert!(libm::fabs(series - identity) < 1e-13);
        let x = 50.0;
        let e = epsilon_num(x).unwrap();
        let asym = epsilon_asymptotic(x, Some(6)).unwrap();
        assert!(libm::fabs(e.value - asym.value) <= asym.error + e.error, "{e:?} {asym:?}");
    }

    #[test]
    fn inverse() {
        assert_eq!(epsilon_inverse(1.0).unwrap().value, 0.0);
        for x in [2.0, -3.0, 0.01, 40.0, 1e-3] {
            let y = epsilon_num(x).unwrap().value;
            let back = epsilon_inverse(y).unwrap().value;
            assert!(libm::fabs(back - x) <= 1e-10 * libm::fabs(x).max(1.0), "{x} {back}");
        }
        let big = epsilon_inverse(1e-6).unwrap().value;
        assert!(libm::fabs(big * 1e-6 - 1.0) < 1e-4);
        assert!(epsilon_inverse(0.0).is_err());
        assert!(epsilon_inverse(-1.0).is_err());
    }
}
