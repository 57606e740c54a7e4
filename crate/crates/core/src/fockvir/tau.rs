use alloc::vec::Vec;

use super::intersection::IntersectionTable;
use super::jozefiak::{jozefiak_map, shifted_l_with, DILATON_SHIFT};
use super::x_weight;
use crate::error::{Error, Result};
use crate::exactring::{factorial, int, Monomial, Poly, Rational};

/// Index of the bookkeeping variable `v` in [`TauSeries`] polynomials.
pub const V_VARIABLE: u32 = u32::MAX;

fn weight(k: u32) -> i64 {
    if k == V_VARIABLE {
        0
    } else {
        x_weight(k)
    }
}

/// `tau = exp(F)` with `F = sum <tau^I> t^I / I!`, truncated at `t`-weight
/// `weight_bound` (`t_k` has weight `2k+1`).
#[derive(Clone, Debug, PartialEq)]
pub struct TauSeries {
    pub weight_bound: u32,
    pub v_retained: bool,
    pub free_energy: Poly,
    pub tau: Poly,
}

impl TauSeries {
    /// `tau` in the `x_k`, through `t_k -> -(2k-1)!! x_k`.
    pub fn tau_in_x(&self) -> Poly {
        jozefiak_map(&self.tau)
    }
}

/// Assembles the free energy and its exponential from a table.
///
/// Terms of weight `w` involve `sum d_j = (w - n)/2 <= (w-1)/2`, so the
/// table must reach degree `(weight_bound - 1)/2`. With `retain_v` each
/// term carries `v^{sum d_j}`.
pub fn tau_assemble(table: &IntersectionTable, weight_bound: u32, retain_v: bool) -> Result<TauSeries> {
    let needed = weight_bound.saturating_sub(1) / 2;
    if table.max_degree() < needed {
        return Err(Error::usage(alloc::format!(
            "table reaches degree {} but weight {weight_bound} needs {needed}",
            table.max_degree()
        )));
    }
    let mut free_energy = Poly::default();
    for (key, entry) in table.entries() {
        let mut pairs: Vec<(u32, i32)> = Vec::new();
        let mut denominator = int(1);
        for &d in key {
            match pairs.last_mut() {
                Some((k, e)) if *k == d => *e += 1,
                _ => pairs.push((d, 1)),
            }
        }
        for &(_, e) in &pairs {
            denominator *= factorial(e as u64);
        }
        let total_degree: u32 = key.iter().sum();
        if retain_v && total_degree > 0 {
            pairs.push((V_VARIABLE, total_degree as i32));
        }
        let m = Monomial::from_pairs(pairs);
        if m.weight(weight) <= weight_bound as i64 {
            free_energy.add_term(m, &entry.value / denominator);
        }
    }
    let bound = weight_bound as i64;
    let keep = |p: Poly| p.filter(|m| m.weight(weight) <= bound);
    // every term of F has weight >= 3
    let mut tau = Poly::constant(int(1));
    let mut power = Poly::constant(int(1));
    for j in 1..=(weight_bound / 3 + 1) {
        power = keep(&power * &free_energy);
        if power.is_empty() {
            break;
        }
        tau = tau + power.scale_by(&Rational::new(1.into(), factorial(j as u64).to_integer()));
    }
    Ok(TauSeries { weight_bound, v_retained: retain_v, free_energy, tau })
}

/// Outcome of applying `L~_n` to the truncated `tau`.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnihilationWitness {
    pub n: i32,
    /// Weights `0 ..= checked_weight` are free of truncation effects.
    pub checked_weight: i64,
    /// Surviving terms at those weights (empty on success).
    pub residual: Poly,
    pub passed: bool,
}

/// Checks `L~_n tau = 0` at every weight unaffected by the truncation.
///
/// `L~_n` lowers weight by `2n` and, through the shift, by `2n + 3`, so a
/// truncation at weight `W` is exact for outputs of weight `<= W - 2n - 3`.
pub fn annihilation_check(n: i32, tau: &TauSeries) -> Result<AnnihilationWitness> {
    annihilation_check_with(n, tau, &int(DILATON_SHIFT))
}

/// [`annihilation_check`] with an explicit shift `x_1 -> x_1 + shift`.
pub fn annihilation_check_with(n: i32, tau: &TauSeries, shift: &Rational) -> Result<AnnihilationWitness> {
    if tau.v_retained {
        return Err(Error::usage("annihilation is checked at v = 1"));
    }
    let op = shifted_l_with(n, shift)?;
    let checked_weight = tau.weight_bound as i64 - 2 * n as i64 - 3;
    let image = op.apply(&tau.tau_in_x());
    let residual = image.filter(|m| m.weight(x_weight) <= checked_weight);
    let passed = residual.is_empty();
    Ok(AnnihilationWitness { n, checked_weight, residual, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;
    use crate::fockvir::intersection_numbers;

    #[test]
    fn leading_terms() {
        let table = intersection_numbers(2).unwrap();
        let tau = tau_assemble(&table, 3, false).unwrap();
        let t0_cubed = Poly::monomial(Monomial::power(0, 3), rat(1, 6));
        let t1 = Poly::monomial(Monomial::var(1), rat(1, 24));
        assert_eq!(tau.tau, Poly::constant(int(1)) + t0_cubed + t1);
        assert!(tau_assemble(&table, 9, false).is_err());
        let with_v = tau_assemble(&table, 3, true).unwrap();
        let v_term = Monomial::from_pairs([(1, 1), (V_VARIABLE, 1)]);
        assert_eq!(with_v.free_energy.coeff(&v_term), rat(1, 24));
    }

    #[test]
    fn annihilation_small() {
        let table = intersection_numbers(4).unwrap();
        let tau = tau_assemble(&table, 9, false).unwrap();
        for n in -1..=1 {
            let w = annihilation_check(n, &tau).unwrap();
            assert!(w.passed, "n = {n}: {:?}", w.residual);
        }
        let literal = annihilation_check_with(0, &tau, &int(-1)).unwrap();
        assert!(!literal.passed);
    }
}
