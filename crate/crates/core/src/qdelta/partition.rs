use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A strictly decreasing list of positive integers.
///
/// Indexes the square-free monomial `q_{l_1} ... q_{l_r}` and the classical
/// Q-function `Q_l`. The empty partition is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::usage("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::usage(alloc::format!("partition {parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    /// Sorts and validates; rejects repeated parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        StrictPartition::new(parts)
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn single(k: u32) -> Self {
        assert!(k > 0);
        StrictPartition(alloc::vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length mod 2: the extra `Z/2` grading.
    pub fn parity(&self) -> u32 {
        (self.0.len() % 2) as u32
    }

    /// Every strict partition of `n`, lexicographically decreasing
    /// (so `(n)` comes first).
    pub fn all_of_weight(n: u32) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn go(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition(current.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                current.push(p);
                go(rest - p, p - 1, current, out);
                current.pop();
            }
        }
        go(n, n, &mut current, &mut out);
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(StrictPartition::new(alloc::vec![3, 2, 1]).is_ok());
        assert!(StrictPartition::new(alloc::vec![2, 2]).is_err());
        assert!(StrictPartition::new(alloc::vec![1, 2]).is_err());
        assert!(StrictPartition::new(alloc::vec![2, 0]).is_err());
        assert_eq!(StrictPartition::from_unsorted(alloc::vec![1, 3]).unwrap().parts(), &[3, 1]);
    }

    #[test]
    fn enumeration_counts() {
        // number of partitions into distinct parts
        let counts: Vec<usize> = (0..=10).map(|n| StrictPartition::all_of_weight(n).len()).collect();
        assert_eq!(counts, alloc::vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
        let six = StrictPartition::all_of_weight(6);
        assert_eq!(six[0].parts(), &[6]);
        assert_eq!(six.last().unwrap().parts(), &[3, 2, 1]);
    }
}
