//! Permutations of the generator set `{1..n}`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{1..n}`, stored as the list of images `π(1), …, π(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on 1..{n}")));
            }
            seen[i - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    /// The transposition `(i j)` on `{1..n}`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::cycle(n, &[i, j])
    }

    /// A single cycle `(c_1 c_2 … c_k)`: `c_1 → c_2 → … → c_k → c_1`.
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if cycle.iter().any(|&c| c == 0 || c > n) || cycle.iter().duplicates().next().is_some() {
            return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?} on 1..{n}")));
        }
        for (k, &c) in cycle.iter().enumerate() {
            images[c - 1] = cycle[(k + 1) % cycle.len()];
        }
        Ok(Self { images })
    }

    /// Adjacent transpositions `(i i+1)`, `i = 1..n-1`; they generate `S_n`.
    pub fn adjacent_transpositions(n: usize) -> Vec<Self> {
        (1..n)
            .map(|i| Self::transposition(n, i, i + 1).expect("adjacent indices are in range"))
            .collect()
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        (1..=n).permutations(n).map(|images| Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `π(i)` for a 1-based index.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::RankMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(Self { images: other.images.iter().map(|&i| self.apply(i)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j - 1] = i + 1;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i + 1 == j)
    }

    pub(crate) fn check_degree(&self, rank: usize) -> Result<()> {
        if self.degree() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: rank, right: self.degree() })
        }
    }
}

/// Cycle notation, e.g. `(1 2)(3 4)`; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut wrote = false;
        for start in 1..=n {
            if done[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            done[start - 1] = true;
            let mut next = self.apply(start);
            while next != start {
                done[next - 1] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            write!(f, "({})", cycle.iter().join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_display() {
        let p = Permutation::cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(p.images(), &[2, 3, 1]);
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn compose_inverse() {
        let p = Permutation::cycle(4, &[1, 3, 4]).unwrap();
        let q = Permutation::transposition(4, 2, 3).unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        let pq = p.compose(&q).unwrap();
        for i in 1..=4 {
            assert_eq!(pq.apply(i), p.apply(q.apply(i)));
        }
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::cycle(2, &[1, 3]).is_err());
    }

    #[test]
    fn all_has_factorial_size() {
        assert_eq!(Permutation::all(4).count(), 24);
    }
}
