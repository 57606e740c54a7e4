use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactring::{factorial, int, Monomial, Poly, Rational, Series};

/// Symmetric functions are polynomials in the power sums, `p_m` being
/// variable `m`. In `S (x) S^` the dual power sum `p^_m` is variable
/// `CHECK_OFFSET + m`.
pub const CHECK_OFFSET: u32 = 1 << 16;

pub fn p(m: u32) -> Poly {
    Poly::var(m)
}

pub fn p_check(m: u32) -> Poly {
    Poly::var(CHECK_OFFSET + m)
}

pub fn is_check(v: u32) -> bool {
    v >= CHECK_OFFSET
}

/// `(S-degree, S^-degree)` of a monomial; `p_m` and `p^_m` both count `m`.
pub fn bidegree(m: &Monomial) -> (u32, u32) {
    let (mut s, mut c) = (0, 0);
    for (v, e) in m.iter() {
        let e = e.max(0) as u32;
        if is_check(v) {
            c += (v - CHECK_OFFSET) * e;
        } else {
            s += v * e;
        }
    }
    (s, c)
}

pub fn symmetric_name(v: u32) -> String {
    if is_check(v) {
        alloc::format!("pc{}", v - CHECK_OFFSET)
    } else {
        alloc::format!("p{v}")
    }
}

/// `h_0, ..., h_order` in power sums, from `h(T) = exp(sum p_n T^n / n)`.
/// With `check` set, the same series in the dual power sums.
pub fn complete_in_p(order: usize, check: bool) -> Result<Vec<Poly>> {
    let offset = if check { CHECK_OFFSET } else { 0 };
    let log = Series::from_fn("T", order, |n| {
        if n == 0 {
            Poly::default()
        } else {
            Poly::var(offset + n as u32).scale_by(&Rational::new(1.into(), (n as i64).into()))
        }
    });
    Ok(log.exp()?.coeffs().to_vec())
}

/// `p_n` as a polynomial in the `h_i` (variable `i`), by Newton's identity
/// `p_n = n h_n - sum_{i<n} p_i h_{n-i}`.
pub fn power_sum_in_h(n: u32) -> Vec<Poly> {
    let mut out: Vec<Poly> = alloc::vec![Poly::default()];
    for k in 1..=n {
        let mut pk = Poly::var(k).scale_by(&int(k as i64));
        for i in 1..k {
            pk = pk - &out[i as usize] * &Poly::var(k - i);
        }
        out.push(pk);
    }
    out
}

/// `z_lambda = prod_m m^{k_m} k_m!` for the partition with `k_m` parts `m`.
fn z_lambda(m: &Monomial) -> Rational {
    let mut z = Rational::one();
    for (v, e) in m.iter() {
        z *= num_traits::pow(int(v as i64), e as usize) * factorial(e as u64);
    }
    z
}

/// The Hall inner product, `<p_lambda, p_mu> = z_lambda delta_{lambda mu}`.
pub fn hall_pairing(a: &Poly, b: &Poly) -> Rational {
    let mut total = Rational::zero();
    for (m, c) in a.terms() {
        let d = b.coeff(m);
        if !d.is_zero() {
            total += c * d * z_lambda(m);
        }
    }
    total
}

/// A Laurent series in `z` with polynomial coefficients, kept only on
/// monomials of bidegree at most `bounds`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ZSeries {
    terms: BTreeMap<i64, Poly>,
}

/// Truncation bounds for `S (x) S^`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub degree: u32,
    pub check_degree: u32,
}

impl Bounds {
    pub fn symmetric(d: u32) -> Self {
        Bounds { degree: d, check_degree: d }
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        let (s, c) = bidegree(m);
        s <= self.degree && c <= self.check_degree
    }

    pub fn truncate(&self, p: &Poly) -> Poly {
        p.filter(|m| self.admits(m))
    }
}

impl ZSeries {
    pub fn constant(p: Poly) -> Self {
        let mut s = ZSeries::default();
        s.add_term(0, p);
        s
    }

    pub fn add_term(&mut self, k: i64, p: Poly) {
        if p.is_empty() {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry = &*entry + &p;
        if entry.is_empty() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> Poly {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Poly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ZSeries) -> ZSeries {
        let mut out = self.clone();
        for (k, p) in &other.terms {
            out.add_term(*k, p.clone());
        }
        out
    }

    pub fn scale_by(&self, r: &Rational) -> ZSeries {
        let mut out = ZSeries::default();
        for (k, p) in &self.terms {
            out.add_term(*k, p.scale_by(r));
        }
        out
    }

    /// Product, dropping monomials outside `bounds`. Exact on the kept part
    /// because bidegrees only grow under multiplication.
    pub fn mul(&self, other: &ZSeries, bounds: Bounds) -> ZSeries {
        let mut out = ZSeries::default();
        for (a, pa) in &self.terms {
            for (b, pb) in &other.terms {
                let mut prod = Poly::default();
                for (ma, ca) in pa.terms() {
                    for (mb, cb) in pb.terms() {
                        let m = ma.mul(mb);
                        if bounds.admits(&m) {
                            prod.add_term(m, ca * cb);
                        }
                    }
                }
                out.add_term(a + b, prod);
            }
        }
        out
    }

    pub fn truncate(&self, bounds: Bounds) -> ZSeries {
        let mut out = ZSeries::default();
        for (k, p) in &self.terms {
            out.add_term(*k, bounds.truncate(p));
        }
        out
    }

    /// Evaluates a polynomial whose variable `v` stands for `images[v]`.
    pub fn evaluate(poly: &Poly, images: &BTreeMap<u32, ZSeries>, bounds: Bounds) -> ZSeries {
        let mut powers: BTreeMap<(u32, i32), ZSeries> = BTreeMap::new();
        let mut out = ZSeries::default();
        for (m, c) in poly.terms() {
            let mut term = ZSeries::constant(Poly::constant(c.clone()));
            for (v, e) in m.iter() {
                let power = powers
                    .entry((v, e))
                    .or_insert_with(|| {
                        let base = &images[&v];
                        let mut acc = ZSeries::constant(Poly::constant(int(1)));
                        for _ in 0..e {
                            acc = acc.mul(base, bounds);
                        }
                        acc
                    })
                    .clone();
                term = term.mul(&power, bounds);
            }
            out = out.add(&term);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    #[test]
    fn complete_and_newton() {
        let h = complete_in_p(3, false).unwrap();
        assert_eq!(h[1], p(1));
        assert_eq!(h[2], (&p(1) * &p(1) + p(2)).scale_by(&rat(1, 2)));
        // p_n in h, then h in p, returns p_n
        let p_in_h = power_sum_in_h(3);
        let back = p_in_h[3].substitute(|i| h[i as usize].clone()).unwrap();
        assert_eq!(back, p(3));
        assert_eq!(p_in_h[2], Poly::var(2).scale_by(&int(2)) - &Poly::var(1) * &Poly::var(1));
    }

    #[test]
    fn hall() {
        let p11 = &p(1) * &p(1);
        assert_eq!(hall_pairing(&p11, &p11), int(2));
        assert_eq!(hall_pairing(&p(2), &p(2)), int(2));
        assert_eq!(hall_pairing(&p(2), &p11), int(0));
        // h_2 is the Schur function s_2, of norm 1
        let h = complete_in_p(2, false).unwrap();
        assert_eq!(hall_pairing(&h[2], &h[2]), int(1));
    }
}
