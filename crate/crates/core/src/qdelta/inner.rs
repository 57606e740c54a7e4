use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::element::QElement;
use super::partition::StrictPartition;
use super::primitives::q_to_x;
use super::tensor::coproduct;
use crate::error::{Error, Result};
use crate::exactring::{determinant, factorial, int, Monomial, Poly, Rational};

/// `<x^m, x^m> = prod_k ((2k+1)/2)^{m_k} m_k!`.
fn monomial_norm(m: &Monomial) -> Result<Rational> {
    let mut out = Rational::one();
    for (k, e) in m.iter() {
        if e < 0 {
            return Err(Error::usage("inner product needs non-negative exponents"));
        }
        let base = Rational::new((2 * k as i64 + 1).into(), 2.into());
        for _ in 0..e {
            out *= &base;
        }
        out *= factorial(e as u64);
    }
    Ok(out)
}

/// The form in primitive coordinates: distinct monomials are orthogonal.
pub fn inner_product_x(a: &Poly, b: &Poly) -> Result<Rational> {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut out = Rational::zero();
    for (m, c) in small.terms() {
        let d = large.coeff(m);
        if !d.is_zero() {
            out += c * d * monomial_norm(m)?;
        }
    }
    Ok(out)
}

pub fn inner_product(a: &QElement, b: &QElement) -> Rational {
    inner_product_x(&q_to_x(a), &q_to_x(b)).expect("images of Delta are polynomial")
}

/// Gram matrix of the square-free basis of weight `n`, rows in the order of
/// [`StrictPartition::all_of_weight`].
pub fn gram_matrix(n: u32) -> (Vec<StrictPartition>, Vec<Vec<Rational>>) {
    let basis = StrictPartition::all_of_weight(n);
    let images: Vec<Poly> = basis.iter().map(|l| q_to_x(&QElement::basis(l.clone()))).collect();
    let matrix = images.iter().map(|a| images.iter().map(|b| inner_product_x(a, b).unwrap()).collect()).collect();
    (basis, matrix)
}

/// Leading principal minors, in exact arithmetic.
pub fn leading_minors(matrix: &[Vec<Rational>]) -> Vec<Rational> {
    (1..=matrix.len()).map(|k| determinant(matrix[..k].iter().map(|row| row[..k].to_vec()).collect())).collect()
}

fn two_row(r: u32, s: u32) -> QElement {
    let mut out = &QElement::q(r) * &QElement::q(s);
    for i in 1..=s {
        let sign = if i % 2 == 0 { int(2) } else { int(-2) };
        out = out + (&QElement::q(r + i) * &QElement::q(s - i)).scale_by(&sign);
    }
    out
}

fn pfaffian(rows: &[u32]) -> QElement {
    if rows.is_empty() {
        return QElement::unit();
    }
    let mut out = QElement::default();
    for j in 1..rows.len() {
        let mut rest = rows[1..].to_vec();
        rest.remove(j - 1);
        let term = &two_row(rows[0], rows[j]) * &pfaffian(&rest);
        out = if j % 2 == 1 { out + term } else { out - term };
    }
    out
}

/// The classical Q-function `Q_lambda`.
///
/// Two rows use `Q_(r,s) = q_r q_s + 2 sum_{i=1}^{s} (-1)^i q_{r+i} q_{s-i}`;
/// longer partitions are assembled as the Pfaffian of the two-row functions,
/// padding odd lengths with a zero part.
pub fn classical_q(parts: &[u32]) -> Result<QElement> {
    let lambda = StrictPartition::new(parts.to_vec())?;
    let mut rows = lambda.parts().to_vec();
    if rows.len() % 2 == 1 {
        rows.push(0);
    }
    Ok(pfaffian(&rows))
}

/// Orthogonalizes the square-free basis of weight `n`, starting from `q_n`
/// and proceeding in lexicographically decreasing order.
pub fn gram_schmidt_q(n: u32) -> Vec<(StrictPartition, QElement)> {
    let mut done: Vec<(StrictPartition, QElement, Poly, Rational)> = Vec::new();
    for lambda in StrictPartition::all_of_weight(n) {
        let start = QElement::basis(lambda.clone());
        let start_x = q_to_x(&start);
        let mut q = start;
        for (_, prev, prev_x, norm) in done.iter() {
            let c = inner_product_x(&start_x, prev_x).unwrap() / norm;
            q = q - prev.scale_by(&c);
        }
        let qx = q_to_x(&q);
        let norm = inner_product_x(&qx, &qx).unwrap();
        done.push((lambda, q, qx, norm));
    }
    done.into_iter().map(|(l, q, _, _)| (l, q)).collect()
}

/// Both sides of `<a b, c> = <a (x) b, Delta c>`.
#[derive(Clone, Debug, PartialEq)]
pub struct SelfDualityWitness {
    pub product_side: Rational,
    pub coproduct_side: Rational,
    pub holds: bool,
}

pub fn self_duality_check(a: &QElement, b: &QElement, c: &QElement) -> SelfDualityWitness {
    let product_side = inner_product(&(a * b), c);
    let ax = q_to_x(a);
    let bx = q_to_x(b);
    let mut coproduct_side = Rational::zero();
    for (key, coeff) in coproduct(c).terms() {
        let left = inner_product_x(&ax, &q_to_x(&QElement::basis(key[0].clone()))).unwrap();
        if left.is_zero() {
            continue;
        }
        let right = inner_product_x(&bx, &q_to_x(&QElement::basis(key[1].clone()))).unwrap();
        coproduct_side += coeff * left * right;
    }
    let holds = product_side == coproduct_side;
    SelfDualityWitness { product_side, coproduct_side, holds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_traits::Signed;

    #[test]
    fn small_products() {
        assert_eq!(inner_product(&QElement::q(1), &QElement::q(1)), int(2));
        assert_eq!(inner_product(&QElement::q(2), &QElement::q(2)), int(2));
        assert_eq!(inner_product(&QElement::q(1), &QElement::q(2)), int(0));
    }

    #[test]
    fn gram_positive() {
        for n in 0..=7 {
            let (_, g) = gram_matrix(n);
            assert!(leading_minors(&g).iter().all(|m| m.is_positive()), "weight {n}");
        }
    }

    #[test]
    fn q_functions() {
        assert_eq!(classical_q(&[4]).unwrap(), QElement::q(4));
        let q21 = classical_q(&[2, 1]).unwrap();
        assert_eq!(q21.to_string(), "q2*q1 - 2*q3");
        assert_eq!(inner_product(&q21, &q21), int(4));
        assert!(classical_q(&[1, 2]).is_err());
        for n in 0..=6 {
            for (lambda, q) in gram_schmidt_q(n) {
                assert_eq!(classical_q(lambda.parts()).unwrap(), q, "{lambda}");
                let norm = int(1i64 << lambda.len());
                assert_eq!(inner_product(&q, &q), norm);
            }
        }
    }

    #[test]
    fn duality() {
        let w = self_duality_check(&QElement::q(1), &QElement::q(1), &QElement::q(2));
        assert!(w.holds);
        assert_eq!(w.product_side, int(4));
        let q3 = QElement::q(3);
        let w = self_duality_check(&QElement::unit(), &q3, &q3);
        assert!(w.holds);
    }
}
