//! Sparse commutative polynomials in `x_1, …, x_n` over the rationals.
//!
//! These are the coefficients of the module action of `K[X_n]` on the commutator
//! ideal of a metabelian Lie algebra.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::{write_coefficient, Rational};

/// Exponents of a commutative monomial `x_1^{e_1} ⋯ x_n^{e_n}`.
///
/// Ordered graded-lexicographically: first by total degree, then lexicographically
/// with `x_1 > x_2 > ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// The exponent vector of the single variable `x_index` (1-based).
    pub fn variable(rank: usize, index: usize) -> Self {
        let mut e = vec![0; rank];
        e[index - 1] = 1;
        Self(e)
    }

    /// Exponent vector of the multiset of (1-based) indices.
    pub fn from_indices(rank: usize, indices: &[usize]) -> Self {
        let mut e = vec![0; rank];
        for &i in indices {
            e[i - 1] += 1;
        }
        Self(e)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// The multiset of indices, sorted ascending, with multiplicity.
    pub fn indices(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize))
            .collect()
    }

    /// Smallest index with a nonzero exponent.
    pub fn min_index(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0).map(|i| i + 1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Relabels variables: the exponent of `x_i` moves to `x_{π(i)}`.
    pub fn permute(&self, perm: &Permutation) -> Self {
        let mut e = vec![0; self.rank()];
        for (i, &k) in self.0.iter().enumerate() {
            e[perm.apply(i + 1) - 1] = k;
        }
        Self(e)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial in `K[x_1, …, x_n]`. No stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CommPoly {
    rank: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl CommPoly {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(ExponentVector::zero(rank), c);
        p
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, Rational::one())
    }

    pub fn variable(rank: usize, index: usize) -> Result<Self> {
        if index == 0 || index > rank {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        let mut p = Self::zero(rank);
        p.add_term(ExponentVector::variable(rank, index), Rational::one());
        Ok(p)
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            if e.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: e.rank() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(ExponentVector::total_degree)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: self.rank, right: other.rank })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.rank);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }

    /// Substitutes `x_i ↦ x_{π(i)}`.
    pub fn permute(&self, perm: &Permutation) -> Result<Self> {
        perm.check_degree(self.rank)?;
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            out.add_term(e.permute(perm), c.clone());
        }
        Ok(out)
    }

    /// Drops every term of total degree above `max`.
    pub fn truncate(&self, max: usize) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() <= max)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Neg for &CommPoly {
    type Output = CommPoly;
    fn neg(self) -> CommPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for &CommPoly {
    type Output = CommPoly;
    fn add(self, rhs: &CommPoly) -> CommPoly {
        self.try_add(rhs).expect("polynomial rank mismatch")
    }
}

impl Sub for &CommPoly {
    type Output = CommPoly;
    fn sub(self, rhs: &CommPoly) -> CommPoly {
        self.try_sub(rhs).expect("polynomial rank mismatch")
    }
}

impl Mul for &CommPoly {
    type Output = CommPoly;
    fn mul(self, rhs: &CommPoly) -> CommPoly {
        self.try_mul(rhs).expect("polynomial rank mismatch")
    }
}

/// Terms in descending graded-lex order, e.g. `3/2*x1^2*x2 - x3`.
impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let constant = e.total_degree() == 0;
            let wrote = write_coefficient(&mut out, c, k == 0, "*");
            if constant {
                if wrote {
                    out.pop();
                } else {
                    out.push('1');
                }
                continue;
            }
            let factors: Vec<String> = e
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            out.push_str(&factors.join("*"));
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn x(rank: usize, i: usize) -> CommPoly {
        CommPoly::variable(rank, i).unwrap()
    }

    #[test]
    fn add_cancels() {
        let p = &x(2, 1) + &x(2, 2);
        assert_eq!(&p + &(-&x(2, 2)), x(2, 1));
        assert_eq!(&p + &CommPoly::zero(2), p);
        assert_eq!(&x(2, 1) + &x(2, 1), x(2, 1).scale(&int(2)));
    }

    #[test]
    fn mul_examples() {
        let p = &(&x(2, 1) - &x(2, 2)) * &(&x(2, 1) + &x(2, 2));
        let expected = &(&x(2, 1) * &x(2, 1)) - &(&x(2, 2) * &x(2, 2));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        assert_eq!(&p * &CommPoly::one(2), p);
        let m = &x(2, 1) * &(&x(2, 1) * &x(2, 2));
        assert_eq!(m.to_string(), "x1^2*x2");
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert!(matches!(x(2, 1).try_add(&x(3, 1)), Err(Error::RankMismatch { .. })));
        assert!(x(2, 1).try_mul(&x(3, 1)).is_err());
        assert!(CommPoly::variable(2, 3).is_err());
    }

    #[test]
    fn permute_examples() {
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let p = &x(2, 1) + &x(2, 2).scale(&int(2));
        assert_eq!(p.permute(&swap).unwrap(), &x(2, 2) + &x(2, 1).scale(&int(2)));
        let sym = &x(2, 1) * &x(2, 2);
        assert_eq!(sym.permute(&swap).unwrap(), sym);
        let c = Permutation::cycle(3, &[1, 2, 3]).unwrap();
        let q = &(&x(3, 1) * &x(3, 1)) * &x(3, 3);
        let expected = &(&x(3, 2) * &x(3, 2)) * &x(3, 1);
        assert_eq!(q.permute(&c).unwrap(), expected);
    }

    #[test]
    fn display() {
        let p = CommPoly::from_terms(
            3,
            [
                (ExponentVector::new(vec![2, 1, 0]), rat(3, 2)),
                (ExponentVector::new(vec![0, 0, 1]), int(-1)),
                (ExponentVector::zero(3), int(4)),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2*x2 - x3 + 4");
        assert_eq!(CommPoly::zero(2).to_string(), "0");
        assert_eq!(CommPoly::constant(2, int(-1)).to_string(), "-1");
        assert_eq!(CommPoly::constant(2, rat(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn exact_inverse() {
        let a = rat(7, 13);
        assert_eq!(&a * &(Rational::one() / &a), Rational::one());
    }
}
