use core::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use super::special::{dawson, erfcx};
use super::{FloatEval, Method, Neumaier, EPS, FRAC_1_SQRT_PI};
use crate::error::{Error, Result};

/// Largest `|z|` at which [`ml_exp`] sums the power series: `9^alpha`.
///
/// The largest term is roughly `exp(|z|^{1/alpha})`, so the cutoff bounds
/// cancellation at about `e^9` times the rounding unit.
pub fn series_cutoff(alpha: f64) -> f64 {
    libm::pow(9.0, alpha)
}

/// `sum_{n>=0} z^n / Gamma(1 + alpha n)` by direct summation, with no cutoff.
pub fn ml_exp_series(alpha: f64, z: Complex64) -> Result<FloatEval<Complex64>> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::usage("alpha must lie in (0, 2)"));
    }
    let r = z.norm();
    if r == 0.0 {
        return Ok(FloatEval { value: Complex64::new(1.0, 0.0), error: 0.0, method: Method::Series });
    }
    let (log_r, theta) = (libm::log(r), z.arg());
    // alpha = 1/2 and 1 use exact term ratios; other alpha go through lgamma
    let mut history = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    let mut term_at = |n: u32| -> Result<Complex64> {
        let t = if n == 0 {
            Complex64::new(1.0, 0.0)
        } else if alpha == 1.0 {
            history[0] * z / n as f64
        } else if alpha == 0.5 && n == 1 {
            z * (2.0 * FRAC_1_SQRT_PI)
        } else if alpha == 0.5 {
            history[1] * z * z * (2.0 / n as f64)
        } else {
            let nf = n as f64;
            let log_mag = nf * log_r - libm::lgamma(1.0 + alpha * nf);
            if log_mag > 700.0 {
                return Err(Error::range("series terms overflow"));
            }
            let (s, c) = libm::sincos(nf * theta);
            Complex64::new(c, s) * libm::exp(log_mag)
        };
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(Error::range("series terms overflow"));
        }
        history = [t, history[0]];
        Ok(t)
    };
    let (mut re, mut im) = (Neumaier::default(), Neumaier::default());
    let mut magnitude_sum = 0.0;
    let mut peak_passed = false;
    let mut last = f64::INFINITY;
    let mut n = 0u32;
    loop {
        let t = term_at(n)?;
        let mag = t.norm();
        re.add(t.re);
        im.add(t.im);
        magnitude_sum += mag;
        if mag < last {
            peak_passed = true;
        }
        last = mag;
        let value = Complex64::new(re.value(), im.value());
        if peak_passed && n > 2 && mag < 1e-17 * value.norm().max(1e-300) {
            let rounding =
                if alpha == 1.0 || alpha == 0.5 { 4.0 + n as f64 } else { 4.0 + 40.0 * (1.0 + libm::fabs(log_r)) };
            let error = 2.0 * mag + rounding * EPS * magnitude_sum;
            return Ok(FloatEval { value, error, method: Method::Series });
        }
        n += 1;
        if n > 100_000 {
            return Err(Error::range("series did not converge"));
        }
    }
}

/// The Mittag-Leffler function `exp_alpha(z)`.
///
/// Within [`series_cutoff`] the power series is summed. Beyond it, `alpha = 1`
/// uses `e^z`, and `alpha = 1/2` uses `e^{x^2} erfc(-x)` on the real axis and
/// `e^{-y^2} + (2i/sqrt(pi)) D(y)` on the imaginary axis (`D` is Dawson's
/// integral). Other arguments are a range error.
pub fn ml_exp(alpha: f64, z: Complex64) -> Result<FloatEval<Complex64>> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::usage("alpha must lie in (0, 2)"));
    }
    if z.norm() <= series_cutoff(alpha) {
        return ml_exp_series(alpha, z);
    }
    if alpha == 1.0 {
        let value = z.exp();
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::range("exp overflows"));
        }
        return Ok(FloatEval { value, error: 4.0 * EPS * value.norm(), method: Method::Identity });
    }
    if alpha == 0.5 && z.im == 0.0 {
        let x = z.re;
        let value = if x < 0.0 {
            erfcx(-x).value
        } else {
            // e^{x^2} (2 - erfc(x))
            let e2 = libm::exp(x * x);
            if !e2.is_finite() {
                return Err(Error::range("exp_1/2 overflows"));
            }
            e2 * (2.0 - libm::erfc(x))
        };
        return Ok(FloatEval {
            value: Complex64::new(value, 0.0),
            error: 8.0 * EPS * libm::fabs(value),
            method: Method::Identity,
        });
    }
    if alpha == 0.5 && z.re == 0.0 {
        let y = z.im;
        let value = Complex64::new(libm::exp(-y * y), 2.0 * FRAC_1_SQRT_PI * dawson(y));
        return Ok(FloatEval { value, error: 8.0 * EPS * value.norm(), method: Method::Identity });
    }
    Err(Error::range("argument outside the series range and the supported identities"))
}

/// `exp_1/2(z) ~ -pi^{-1/2} z^{-1} sum_{n=0}^{N} (2n-1)!! (-2 z^2)^{-n}`.
///
/// Requires `|arg z| >= pi/4 + 0.1`. With `terms = None` the sum stops just
/// before its smallest term (optimal truncation); the error is the size of
/// the first omitted term plus rounding.
pub fn asymptotic_tail(z: Complex64, terms: Option<usize>) -> Result<FloatEval<Complex64>> {
    if z.norm() == 0.0 || libm::fabs(z.arg()) < FRAC_PI_4 + 0.1 {
        return Err(Error::domain("argument inside the sector where exp_1/2 grows"));
    }
    let ratio = (Complex64::new(-2.0, 0.0) * z * z).inv();
    let lead = -FRAC_1_SQRT_PI / z;
    let mut term = lead;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut magnitude_sum = 0.0;
    let mut n = 0usize;
    loop {
        sum += term;
        magnitude_sum += term.norm();
        let next = term * ratio * (2.0 * n as f64 + 1.0);
        n += 1;
        let stop = match terms {
            Some(limit) => n > limit,
            None => next.norm() >= term.norm() || next.norm() < 1e-18 * sum.norm(),
        };
        if stop {
            let error = next.norm() + 4.0 * EPS * magnitude_sum;
            return Ok(FloatEval { value: sum, error, method: Method::Asymptotic });
        }
        term = next;
    }
}

/// `exp_1/2(z)` against its optimally truncated expansion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticComparison {
    pub z: Complex64,
    pub function: FloatEval<Complex64>,
    pub asymptotic: FloatEval<Complex64>,
    pub difference: f64,
    /// First omitted term plus both error estimates.
    pub bound: f64,
    pub within: bool,
}

pub fn asymptotic_comparison(z: Complex64) -> Result<AsymptoticComparison> {
    let function = ml_exp(0.5, z)?;
    let asymptotic = asymptotic_tail(z, None)?;
    let difference = (function.value - asymptotic.value).norm();
    let bound = asymptotic.error + function.error;
    Ok(AsymptoticComparison { z, function, asymptotic, difference, bound, within: difference <= bound })
}
