use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::x_weight;
use crate::error::{Error, Result};
use crate::exactring::{int, rat, Monomial, Poly, Rational};

/// A second-order differential operator on `Q[x_0, x_1, ...]` of the shape
/// taken by the Virasoro generators and their shifts.
///
/// `L_n` in normal order is
/// `sum_{j >= max(0,n)} (2j+1)/2 x_{j-n} d_j`
/// `+ [n > 0] sum_{r+s=n} r s d_{r-1/2} d_{s-1/2}`
/// `+ [n < 0] 1/4 sum_{i+j=-n-1} x_i x_j + [n = 0] 1/16`,
/// with `r, s` positive half-integers. The first (infinite) sum is kept as a
/// rule; everything else is stored as finite coefficient tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirasoroOp {
    index: i32,
    constant: Rational,
    multiply: BTreeMap<u32, Rational>,
    differentiate: BTreeMap<u32, Rational>,
    /// keys `(i, j)` with `i <= j`
    multiply2: BTreeMap<(u32, u32), Rational>,
    differentiate2: BTreeMap<(u32, u32), Rational>,
}

fn bump<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        map.retain(|_, v| !v.is_zero());
    }
}

impl VirasoroOp {
    /// The generator `L_n`.
    pub fn generator(n: i32) -> Self {
        let mut op = VirasoroOp {
            index: n,
            constant: Rational::zero(),
            multiply: BTreeMap::new(),
            differentiate: BTreeMap::new(),
            multiply2: BTreeMap::new(),
            differentiate2: BTreeMap::new(),
        };
        if n == 0 {
            op.constant = rat(1, 16);
        }
        if n > 0 {
            // r = i + 1/2, s = j + 1/2 with i + j = n - 1
            for i in 0..n {
                let j = n - 1 - i;
                if i > j {
                    continue;
                }
                let rs = rat((2 * i as i64 + 1) * (2 * j as i64 + 1), 4);
                let c = if i == j { rs } else { rs * int(2) };
                bump(&mut op.differentiate2, (i as u32, j as u32), c);
            }
        }
        if n < 0 {
            let total = -n - 1;
            for i in 0..=total {
                let j = total - i;
                if i > j {
                    continue;
                }
                let c = if i == j { rat(1, 4) } else { rat(1, 2) };
                bump(&mut op.multiply2, (i as u32, j as u32), c);
            }
        }
        op
    }

    pub fn index(&self) -> i32 {
        self.index
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// Coefficients of the first-order terms `c d_j` (nonzero only after a shift).
    pub fn first_order(&self) -> &BTreeMap<u32, Rational> {
        &self.differentiate
    }

    /// Substitutes `x_var -> x_var + c` in the coefficients of the operator.
    pub fn shifted(&self, var: u32, c: &Rational) -> Self {
        let mut op = self.clone();
        // hopping term with x_var: j = var + n
        let j = var as i32 + self.index;
        if j >= 0 {
            bump(&mut op.differentiate, j as u32, c * rat(2 * j as i64 + 1, 2));
        }
        for (&(i, k), e) in self.multiply2.iter() {
            // e (x_i + c[i=var]) (x_k + c[k=var])
            if i == var {
                bump(&mut op.multiply, k, e * c);
            }
            if k == var {
                bump(&mut op.multiply, i, e * c);
            }
            if i == var && k == var {
                op.constant += e * c * c;
            }
        }
        for (&i, e) in self.multiply.iter() {
            if i == var {
                op.constant += e * c;
            }
        }
        op
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, p: &Poly) -> Poly {
        let mut out = p.scale_by(&self.constant);
        let n = self.index;
        for j in p.variables() {
            if (j as i32) < n {
                continue;
            }
            let target = (j as i32 - n) as u32;
            let d = p.derivative(j);
            let c = rat(2 * j as i64 + 1, 2);
            out = out + d.mul_monomial(&Monomial::var(target)).scale_by(&c);
        }
        for (&i, c) in self.multiply.iter() {
            out = out + p.mul_monomial(&Monomial::var(i)).scale_by(c);
        }
        for (&j, c) in self.differentiate.iter() {
            out = out + p.derivative(j).scale_by(c);
        }
        for (&(i, k), c) in self.multiply2.iter() {
            let m = Monomial::var(i).mul(&Monomial::var(k));
            out = out + p.mul_monomial(&m).scale_by(c);
        }
        for (&(i, k), c) in self.differentiate2.iter() {
            out = out + p.derivative(i).derivative(k).scale_by(c);
        }
        out
    }

    /// Like [`apply`](Self::apply), failing if the result has terms above `bound`.
    pub fn apply_bounded(&self, p: &Poly, bound: i64) -> Result<Poly> {
        let out = self.apply(p);
        match out.max_weight(x_weight) {
            Some(w) if w > bound => Err(Error::Truncation { weight: w, bound }),
            _ => Ok(out),
        }
    }
}

/// `L_n p`.
pub fn apply_l(n: i32, p: &Poly) -> Poly {
    VirasoroOp::generator(n).apply(p)
}

/// All monomials in the `x_k` of weight exactly `w`.
pub fn x_monomials(w: u32) -> Vec<Monomial> {
    fn go(rest: u32, max_k: i64, acc: &mut Vec<(u32, i32)>, out: &mut Vec<Monomial>) {
        if rest == 0 {
            out.push(Monomial::from_pairs(acc.iter().copied()));
            return;
        }
        for k in (0..=max_k).rev() {
            let wk = 2 * k as u32 + 1;
            let mut e = 1;
            while e * wk <= rest {
                acc.push((k as u32, e as i32));
                go(rest - e * wk, k - 1, acc, out);
                acc.pop();
                e += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(w, (w as i64 - 1) / 2, &mut Vec::new(), &mut out);
    out
}

/// Result of comparing `[L_m, L_n]` with `(m-n) L_{m+n} + (m^3-m)/12 delta_{m+n,0}`.
///
/// The operators act on exact polynomials, so no coefficient is ever
/// contaminated by truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorWitness {
    pub m: i32,
    pub n: i32,
    pub central: Rational,
    pub monomials_checked: usize,
    pub failures: Vec<Monomial>,
    pub passed: bool,
}

pub fn virasoro_commutator_check(m: i32, n: i32, max_weight: u32) -> CommutatorWitness {
    let central = if m + n == 0 { rat((m as i64).pow(3) - m as i64, 12) } else { Rational::zero() };
    let (lm, ln, lmn) = (VirasoroOp::generator(m), VirasoroOp::generator(n), VirasoroOp::generator(m + n));
    let mut failures = Vec::new();
    let mut monomials_checked = 0;
    for w in 0..=max_weight {
        for mono in x_monomials(w) {
            monomials_checked += 1;
            let p = Poly::monomial(mono.clone(), int(1));
            let lhs = lm.apply(&ln.apply(&p)) - ln.apply(&lm.apply(&p));
            let rhs = lmn.apply(&p).scale_by(&int((m - n) as i64)) + p.scale_by(&central);
            if lhs != rhs {
                failures.push(mono);
            }
        }
    }
    let passed = failures.is_empty();
    CommutatorWitness { m, n, central, monomials_checked, failures, passed }
}
