//! Seeded random sampling of scalars, polynomials and algebra elements.

use std::fmt;

use num_traits::Signed;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::element::LieElement;
use crate::error::Result;
use crate::poly::{CommPoly, ExponentVector};
use crate::rational::{int, rat, Rational};
use crate::spec::AlgebraSpec;
use crate::symmetry::symmetric_basis;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `[-3, 3]`.
pub fn small_int<R: Rng>(rng: &mut R) -> Rational {
    int(rng.gen_range(-3..=3))
}

/// `p/q` with `p ∈ [-5, 5]`, `q ∈ [1, 3]`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// Integer combination of `elements` with coefficients in `[-3, 3]`.
pub fn combination<E: LieElement, R: Rng>(rng: &mut R, spec: &AlgebraSpec, elements: &[E]) -> Result<E> {
    let coeffs: Vec<Rational> = elements.iter().map(|_| small_int(rng)).collect();
    E::combination(spec, &coeffs, elements)
}

/// Random polynomial in `rank` variables of total degree at most `max_degree`,
/// with integer coefficients in `[-3, 3]`.
pub fn poly<R: Rng>(rng: &mut R, rank: usize, max_degree: usize) -> CommPoly {
    let mut terms = Vec::new();
    for e in exponent_vectors(rank, max_degree) {
        terms.push((e, small_int(rng)));
    }
    CommPoly::from_terms(rank, terms).expect("exponent vectors share the rank")
}

/// Every exponent vector of total degree at most `max_degree`, ascending.
pub fn exponent_vectors(rank: usize, max_degree: usize) -> Vec<ExponentVector> {
    let mut out = vec![ExponentVector::zero(rank)];
    let mut frontier = out.clone();
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for e in &frontier {
            let last = e.exponents().iter().rposition(|&k| k > 0).unwrap_or(0);
            for i in last..rank {
                let mut v = e.exponents().to_vec();
                v[i] += 1;
                next.push(ExponentVector::new(v));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out
}

/// Graded bases over a range of degrees, flattened.
pub fn graded_bases<E: LieElement>(spec: &AlgebraSpec, degrees: impl IntoIterator<Item = usize>) -> Result<Vec<E>> {
    let mut out = Vec::new();
    for d in degrees {
        out.extend(E::graded_basis(spec, d)?);
    }
    Ok(out)
}

/// Symmetric bases over a range of degrees, flattened.
pub fn symmetric_bases<E: LieElement>(spec: &AlgebraSpec, degrees: impl IntoIterator<Item = usize>) -> Result<Vec<E>> {
    let mut out = Vec::new();
    for d in degrees {
        out.extend(symmetric_basis::<E>(spec, d)?);
    }
    Ok(out)
}

/// A bracket expression over the generators, evaluable in any algebra.
///
/// `Display` writes the expression in the text syntax of the command-line tool.
#[derive(Debug, Clone, PartialEq)]
pub enum BracketTree {
    Gen(usize),
    Bracket(Box<BracketTree>, Box<BracketTree>),
    /// `a s + b t` for trees `s`, `t` of equal degree.
    Combo(Rational, Box<BracketTree>, Rational, Box<BracketTree>),
}

impl BracketTree {
    /// A random tree of the given homogeneous degree in generators `1..=rank`.
    pub fn random<R: Rng>(rng: &mut R, rank: usize, degree: usize) -> Self {
        let tree = if degree <= 1 {
            BracketTree::Gen(rng.gen_range(1..=rank))
        } else {
            let k = rng.gen_range(1..degree);
            BracketTree::Bracket(Box::new(Self::random(rng, rank, k)), Box::new(Self::random(rng, rank, degree - k)))
        };
        if rng.gen_bool(0.2) {
            let other = Self::random(rng, rank, degree);
            BracketTree::Combo(small_int(rng), Box::new(tree), small_int(rng), Box::new(other))
        } else {
            tree
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Gen(_) => 1,
            BracketTree::Bracket(a, b) => a.degree() + b.degree(),
            BracketTree::Combo(_, a, _, _) => a.degree(),
        }
    }

    pub fn eval<E: LieElement>(&self, spec: &AlgebraSpec) -> Result<E> {
        match self {
            BracketTree::Gen(i) => E::generator(spec, *i),
            BracketTree::Bracket(a, b) => a.eval::<E>(spec)?.bracket(&b.eval(spec)?),
            BracketTree::Combo(p, a, q, b) => a.eval::<E>(spec)?.scale(p).try_add(&b.eval::<E>(spec)?.scale(q)),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Gen(i) => write!(f, "x{i}"),
            BracketTree::Bracket(a, b) => write!(f, "[{a},{b}]"),
            BracketTree::Combo(p, a, q, b) => {
                let sign = if q.is_negative() { '-' } else { '+' };
                write!(f, "({p} {a} {sign} {} {b})", q.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_vectors_count() {
        // monomials of degree ≤ d in n variables: C(n + d, d)
        assert_eq!(exponent_vectors(2, 1).len(), 3);
        assert_eq!(exponent_vectors(2, 2).len(), 6);
        assert_eq!(exponent_vectors(3, 3).len(), 20);
    }

    #[test]
    fn seeded_is_deterministic() {
        let a: Vec<Rational> = (0..10).map({
            let mut r = seeded(7);
            move |_| small_rational(&mut r)
        }).collect();
        let b: Vec<Rational> = (0..10).map({
            let mut r = seeded(7);
            move |_| small_rational(&mut r)
        }).collect();
        assert_eq!(a, b);
    }
}

#[cfg(test)]
mod tree_tests {
    use super::*;
    use crate::metabelian::MetabelianElement;

    #[test]
    fn random_trees_have_requested_degree() {
        let mut rng = seeded(3);
        for d in 1..=6 {
            let t = BracketTree::random(&mut rng, 3, d);
            assert_eq!(t.degree(), d);
        }
    }

    #[test]
    fn tree_display_and_eval() {
        let t = BracketTree::Combo(
            int(2),
            Box::new(BracketTree::Bracket(Box::new(BracketTree::Gen(1)), Box::new(BracketTree::Gen(2)))),
            int(-1),
            Box::new(BracketTree::Bracket(Box::new(BracketTree::Gen(2)), Box::new(BracketTree::Gen(1)))),
        );
        assert_eq!(t.to_string(), "(2 [x1,x2] - 1 [x2,x1])");
        let spec = AlgebraSpec::metabelian(2).unwrap();
        assert_eq!(t.eval::<MetabelianElement>(&spec).unwrap().to_string(), "-3 [x2,x1]");
    }
}
