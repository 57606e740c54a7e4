use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactring::{int, Monomial, Poly, Rational, Series};

/// A lattice of rank `l` given by its Gram matrix in a basis `e_1 .. e_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeData {
    gram: Vec<Vec<i64>>,
}

impl LatticeData {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let l = gram.len();
        if gram.iter().any(|row| row.len() != l) {
            return Err(Error::usage("the Gram matrix must be square"));
        }
        if (0..l).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(Error::usage("the Gram matrix must be symmetric"));
        }
        Ok(LatticeData { gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i] % 2 == 0)
    }

    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                s += x * self.gram[i][j] * y;
            }
        }
        s
    }

    fn check(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::usage("lattice vector of the wrong rank"));
        }
        Ok(())
    }

    /// `G lambda`, the coordinates of `<lambda, ->` in the dual basis.
    fn dual(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|i| (0..self.rank()).map(|j| self.gram[i][j] * v[j]).sum()).collect()
    }
}

/// Power sums of the `a`-th copy of `S` are variables `a * STRIDE + n`.
pub const STRIDE: u32 = 1 << 12;

pub fn lattice_p(direction: usize, n: u32) -> Poly {
    Poly::var(direction as u32 * STRIDE + n)
}

/// Weight of a monomial in the `p^{(a)}_n`, each counting `n`.
pub fn symmetric_weight(m: &Monomial) -> i64 {
    m.iter().map(|(v, e)| (v % STRIDE) as i64 * e as i64).sum()
}

/// `sum c (lambda (x) f)` in `Z[L] (x) S(L)`, with `f` a power-sum monomial.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LatticeFockElement {
    terms: BTreeMap<(Vec<i64>, Monomial), Rational>,
}

impl LatticeFockElement {
    pub fn basis(lambda: Vec<i64>, m: Monomial) -> Self {
        let mut e = LatticeFockElement::default();
        e.add_term(lambda, m, int(1));
        e
    }

    pub fn from_poly(lambda: Vec<i64>, f: &Poly) -> Self {
        let mut e = LatticeFockElement::default();
        for (m, c) in f.terms() {
            e.add_term(lambda.clone(), m.clone(), c.clone());
        }
        e
    }

    pub fn add_term(&mut self, lambda: Vec<i64>, m: Monomial, c: Rational) {
        let key = (lambda, m);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<i64>, Monomial), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &[i64], m: &Monomial) -> Rational {
        self.terms.get(&(lambda.to_vec(), m.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `<lambda, lambda> + 2 (symmetric weight)`: `S` carries its topological
    /// grading, `p_n` in degree `2n`.
    pub fn grade_of(lattice: &LatticeData, lambda: &[i64], m: &Monomial) -> i64 {
        lattice.pair(lambda, lambda) + 2 * symmetric_weight(m)
    }
}

/// `Y(lambda) v` as a Laurent polynomial in `z` with values in the Fock space.
pub type VertexImage = BTreeMap<i64, LatticeFockElement>;

/// One coefficient of `Y(lambda)` between basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexMatrixElement {
    pub source: (Vec<i64>, Monomial),
    pub target: (Vec<i64>, Monomial),
    pub source_grade: i64,
    pub target_grade: i64,
    /// Coefficient of each power of `z`.
    pub laurent: BTreeMap<i64, Rational>,
}

/// `Y(lambda) = lambda h^lambda(z) (x) h^lambda(-z^{-1}) z^lambda` acting on
/// `mu (x) f`.
///
/// `h^lambda(z) = exp(sum_n p^lambda_n z^n / n)` with `p^lambda_n = sum_a lambda_a p^{(a)}_n`
/// multiplies. Under the pairing, the dual factor acts as
/// `exp(-sum_n z^{-n} D_n)` with `D_n = sum_a (G lambda)_a d/dp^{(a)}_n`, i.e.
/// `p^_n -> (-1)^{n+1} n D_n`. Then `mu -> lambda + mu` and `z^{<lambda, mu>}`.
/// Output terms of symmetric weight above `weight_bound` are dropped.
pub fn vertex_y_lattice(
    lattice: &LatticeData,
    lambda: &[i64],
    v: &LatticeFockElement,
    weight_bound: u32,
) -> Result<VertexImage> {
    lattice.check(lambda)?;
    let dual = lattice.dual(lambda);
    let creation = creation_series(lambda, weight_bound)?;
    let mut out: VertexImage = BTreeMap::new();
    for ((mu, m), c) in v.terms() {
        lattice.check(mu)?;
        let shift = lattice.pair(lambda, mu);
        let target: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a + b).collect();
        let f = Poly::monomial(m.clone(), c.clone());
        for (down, g) in annihilate(&dual, &f) {
            for (up, e) in creation.coeffs().iter().enumerate() {
                if e.is_empty() {
                    continue;
                }
                let k = shift + up as i64 + down;
                let product = (&g * e).filter(|mm| symmetric_weight(mm) <= weight_bound as i64);
                for (mm, cc) in product.terms() {
                    out.entry(k).or_default().add_term(target.clone(), mm.clone(), cc.clone());
                }
            }
        }
    }
    out.retain(|_, e| !e.is_zero());
    Ok(out)
}

/// `h^lambda(z)` up to `z^bound`.
fn creation_series(lambda: &[i64], bound: u32) -> Result<Series<Poly>> {
    let log = Series::from_fn("z", bound as usize, |n| {
        let mut s = Poly::default();
        if n > 0 {
            for (a, &la) in lambda.iter().enumerate() {
                s = s + lattice_p(a, n as u32).scale_by(&Rational::new(la.into(), (n as i64).into()));
            }
        }
        s
    });
    log.exp()
}

/// `exp(-sum_n z^{-n} D_n) f`, as `(power of z, polynomial)` pairs. Finite
/// because every `D_n` lowers the weight of `f`.
fn annihilate(dual: &[i64], f: &Poly) -> Vec<(i64, Poly)> {
    let mut total: BTreeMap<i64, Poly> = BTreeMap::new();
    total.insert(0, f.clone());
    let mut layer: BTreeMap<i64, Poly> = total.clone();
    let mut k = 1i64;
    while !layer.is_empty() {
        let mut next: BTreeMap<i64, Poly> = BTreeMap::new();
        for (pow, g) in &layer {
            for v in g.variables() {
                let (a, n) = ((v / STRIDE) as usize, v % STRIDE);
                if dual[a] == 0 {
                    continue;
                }
                let d = g.derivative(v).scale_by(&Rational::new((-dual[a]).into(), k.into()));
                let entry = next.entry(pow - n as i64).or_default();
                *entry = &*entry + &d;
            }
        }
        next.retain(|_, g| !g.is_empty());
        for (pow, g) in &next {
            let entry = total.entry(*pow).or_default();
            *entry = &*entry + g;
        }
        layer = next;
        k += 1;
    }
    total.into_iter().filter(|(_, g)| !g.is_empty()).collect()
}

/// The coefficients of `target` in `Y(lambda) source`.
pub fn lattice_matrix_element(
    lattice: &LatticeData,
    lambda: &[i64],
    source: (Vec<i64>, Monomial),
    target: (Vec<i64>, Monomial),
) -> Result<VertexMatrixElement> {
    let bound = symmetric_weight(&target.1).max(0) as u32;
    let image =
        vertex_y_lattice(lattice, lambda, &LatticeFockElement::basis(source.0.clone(), source.1.clone()), bound)?;
    let laurent =
        image.iter().map(|(k, e)| (*k, e.coeff(&target.0, &target.1))).filter(|(_, c)| !c.is_zero()).collect();
    Ok(VertexMatrixElement {
        source_grade: LatticeFockElement::grade_of(lattice, &source.0, &source.1),
        target_grade: LatticeFockElement::grade_of(lattice, &target.0, &target.1),
        source,
        target,
        laurent,
    })
}

/// Whether every term of `Y(lambda) v` at `z^k` changes the grade by
/// `<lambda, lambda> + 2k`; returns the offending `(k, term)` count.
pub fn grading_audit(
    lattice: &LatticeData,
    lambda: &[i64],
    v: &LatticeFockElement,
    weight_bound: u32,
) -> Result<usize> {
    let mut bad = 0;
    let norm = lattice.pair(lambda, lambda);
    for ((mu, m), _) in v.terms() {
        let source = LatticeFockElement::grade_of(lattice, mu, m);
        let image = vertex_y_lattice(lattice, lambda, &LatticeFockElement::basis(mu.clone(), m.clone()), weight_bound)?;
        for (k, e) in &image {
            for ((nu, mm), _) in e.terms() {
                if LatticeFockElement::grade_of(lattice, nu, mm) - source != norm + 2 * k {
                    bad += 1;
                }
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> LatticeData {
        LatticeData::new(alloc::vec![alloc::vec![2]]).unwrap()
    }

    #[test]
    fn zero_vector_is_identity() {
        let l = a1();
        let v = LatticeFockElement::from_poly(alloc::vec![3], &(&lattice_p(0, 1) * &lattice_p(0, 2)));
        let image = vertex_y_lattice(&l, &[0], &v, 6).unwrap();
        assert_eq!(image.len(), 1);
        assert_eq!(image[&0], v);
    }

    #[test]
    fn z_to_the_lambda() {
        let l = a1();
        let me = lattice_matrix_element(&l, &[1], (alloc::vec![1], Monomial::one()), (alloc::vec![2], Monomial::one()))
            .unwrap();
        assert_eq!(me.laurent.len(), 1);
        assert_eq!(me.laurent[&2], int(1));
        assert_eq!(me.target_grade - me.source_grade, 2 + 2 * 2);
    }

    #[test]
    fn creation_and_annihilation() {
        let l = a1();
        // <p_1, e^lambda> at z^1: h^lambda_1 = p_1 for lambda = 1
        let me =
            lattice_matrix_element(&l, &[1], (alloc::vec![0], Monomial::one()), (alloc::vec![1], Monomial::var(1)))
                .unwrap();
        assert_eq!(me.laurent[&1], int(1));
        // on p_1: D_1 = 2 d/dp_1, so the z^{-1} part of Y(e^1) p_1 at 1 (x) e^1 is -2
        let me =
            lattice_matrix_element(&l, &[1], (alloc::vec![0], Monomial::var(1)), (alloc::vec![1], Monomial::one()))
                .unwrap();
        assert_eq!(me.laurent[&-1], int(-2));
    }

    #[test]
    fn grading() {
        let l = LatticeData::new(alloc::vec![alloc::vec![2, -1], alloc::vec![-1, 2]]).unwrap();
        assert!(l.is_even());
        let f = &lattice_p(0, 1) * &lattice_p(1, 2) + lattice_p(1, 3);
        let v = LatticeFockElement::from_poly(alloc::vec![1, -2], &f);
        assert_eq!(grading_audit(&l, &[2, 1], &v, 6).unwrap(), 0);
        assert!(LatticeData::new(alloc::vec![alloc::vec![2, 1], alloc::vec![0, 2]]).is_err());
    }
}
