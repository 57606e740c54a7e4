use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactring::{double_factorial, factorial, int, rat, Rational};

/// How a table entry was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `<tau_0^3> = 1` or `<tau_1> = 1/24`.
    Seed,
    /// From the constraint recursion, with every alternative constraint agreeing.
    Recursion,
    /// As [`Provenance::Recursion`], and also equal to the genus-zero closed form.
    RecursionAndClosedForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub value: Rational,
    pub genus: u32,
    pub provenance: Provenance,
}

/// The numbers `<tau_{d_1} ... tau_{d_n}>` with `sum d_j <= max_degree`,
/// keyed by the sorted list of `d_j`. Only multi-indices satisfying the
/// dimension constraint `sum (d_j - 1) = 3(g - 1)` for some stable genus
/// `g >= 0` are present.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionTable {
    max_degree: u32,
    entries: BTreeMap<Vec<u32>, Entry>,
}

impl IntersectionTable {
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Looks up an entry; the indices may be in any order.
    pub fn get(&self, degrees: &[u32]) -> Option<&Entry> {
        let mut key = degrees.to_vec();
        key.sort_unstable();
        self.entries.get(&key)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u32>, &Entry)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rebuilds a table from stored entries, e.g. a cache file.
    pub fn from_entries(max_degree: u32, entries: BTreeMap<Vec<u32>, Entry>) -> Self {
        IntersectionTable { max_degree, entries }
    }
}

/// The genus fixed by the dimension constraint, if it is a stable one.
pub fn genus_of(degrees: &[u32]) -> Option<u32> {
    let n = degrees.len() as i64;
    let s: i64 = degrees.iter().map(|&d| d as i64).sum();
    let three_g = s - n + 3;
    if n == 0 || three_g < 0 || three_g % 3 != 0 {
        return None;
    }
    let g = three_g / 3;
    (2 * g - 2 + n > 0).then_some(g as u32)
}

/// `(n-3)! / prod d_j!` for genus-zero multi-indices.
pub fn genus_zero_closed_form(degrees: &[u32]) -> Option<Rational> {
    if genus_of(degrees) != Some(0) {
        return None;
    }
    let mut v = factorial(degrees.len() as u64 - 3);
    for &d in degrees {
        v /= factorial(d as u64);
    }
    Some(v)
}

fn is_seed(key: &[u32]) -> bool {
    key == [0, 0, 0] || key == [1]
}

#[derive(Default)]
struct Recursion {
    memo: BTreeMap<Vec<u32>, Rational>,
}

impl Recursion {
    fn value(&mut self, degrees: &[u32]) -> Rational {
        let mut key = degrees.to_vec();
        key.sort_unstable();
        if genus_of(&key).is_none() {
            return Rational::zero();
        }
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = if key == [0, 0, 0] {
            int(1)
        } else if key == [1] {
            rat(1, 24)
        } else {
            let top = key.len() - 1;
            let mut rest = key.clone();
            let d = rest.remove(top);
            self.constraint(d as i64 - 1, &rest)
        };
        self.memo.insert(key, v.clone());
        v
    }

    /// `<tau_{k+1} tau_S>` from the coefficient of `t^S` in `L~_k tau = 0`.
    fn constraint(&mut self, k: i64, rest: &[u32]) -> Rational {
        let mut total = Rational::zero();
        for j in 0..rest.len() {
            let dj = rest[j] as i64;
            if dj + k < 0 {
                continue;
            }
            let mut smaller = rest.to_vec();
            smaller[j] = (dj + k) as u32;
            let c = double_factorial(2 * k + 2 * dj + 1) / double_factorial(2 * dj - 1);
            total += c * self.value(&smaller);
        }
        let mut quadratic = Rational::zero();
        for r in 0..k.max(0) {
            let s = k - 1 - r;
            let c = double_factorial(2 * r + 1) * double_factorial(2 * s + 1);
            let mut both = rest.to_vec();
            both.push(r as u32);
            both.push(s as u32);
            let mut inner = self.value(&both);
            for mask in 0u64..(1u64 << rest.len()) {
                let mut left = alloc::vec![r as u32];
                let mut right = alloc::vec![s as u32];
                for (i, &d) in rest.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        left.push(d);
                    } else {
                        right.push(d);
                    }
                }
                let a = self.value(&left);
                if !a.is_zero() {
                    inner += a * self.value(&right);
                }
            }
            quadratic += c * inner;
        }
        total += quadratic * rat(1, 2);
        total / double_factorial(2 * k + 3)
    }
}

fn multi_indices(max_degree: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, min: u32, left: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for d in min..=rest {
            acc.push(d);
            go(rest - d, d, left - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=(max_degree as usize + 3) {
        let mut all = Vec::new();
        go(max_degree, 0, n, &mut Vec::new(), &mut all);
        out.extend(all.into_iter().filter(|d| genus_of(d).is_some()));
    }
    out
}

/// All intersection numbers with `sum d_j <= max_degree`.
///
/// Each entry is computed from the constraint attached to its largest index
/// and then recomputed from every other index as a consistency check; genus
/// zero entries are also compared with `(n-3)!/prod d_j!`.
pub fn intersection_numbers(max_degree: u32) -> Result<IntersectionTable> {
    let mut rec = Recursion::default();
    let mut entries = BTreeMap::new();
    for key in multi_indices(max_degree) {
        let value = rec.value(&key);
        let genus = genus_of(&key).expect("admissible");
        let mut provenance = if is_seed(&key) { Provenance::Seed } else { Provenance::Recursion };
        if provenance == Provenance::Recursion {
            let mut seen = Vec::new();
            for i in 0..key.len() {
                if seen.contains(&key[i]) {
                    continue;
                }
                seen.push(key[i]);
                let mut rest = key.clone();
                let d = rest.remove(i);
                let k = d as i64 - 1;
                let other = rec.constraint(k, &rest);
                if other != value {
                    return Err(Error::Inconsistent {
                        constraint: k,
                        detail: alloc::format!("{key:?}: {value} vs {other}"),
                    });
                }
            }
            if let Some(closed) = genus_zero_closed_form(&key) {
                if closed != value {
                    return Err(Error::Inconsistent {
                        constraint: -1,
                        detail: alloc::format!("{key:?}: {value} vs closed form {closed}"),
                    });
                }
                provenance = Provenance::RecursionAndClosedForm;
            }
        }
        entries.insert(key, Entry { value, genus, provenance });
    }
    Ok(IntersectionTable { max_degree, entries })
}
