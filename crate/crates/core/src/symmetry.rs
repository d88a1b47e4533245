//! The action of `S_n` by permuting generators, invariance tests and invariant
//! subspaces of graded components.

use num_bigint::BigInt;
use num_traits::One;

use crate::element::LieElement;
use crate::error::Result;
use crate::linalg;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::spec::AlgebraSpec;

/// Outcome of a symmetry test: on failure, a permutation `π` with `π·e - e ≠ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricWitness<E> {
    pub verdict: bool,
    pub witness: Option<(Permutation, E)>,
}

impl<E> SymmetricWitness<E> {
    fn symmetric() -> Self {
        Self { verdict: true, witness: None }
    }

    pub fn is_symmetric(&self) -> bool {
        self.verdict
    }
}

/// `π·e`: relabels `x_i ↦ x_{π(i)}` and renormalizes.
pub fn act<E: LieElement>(perm: &Permutation, e: &E) -> Result<E> {
    e.permute(perm)
}

fn check_with<E: LieElement, I: IntoIterator<Item = Permutation>>(e: &E, perms: I) -> SymmetricWitness<E> {
    for perm in perms {
        let diff = act(&perm, e)
            .and_then(|p| p.try_sub(e))
            .expect("permutation degree equals the rank");
        if !diff.is_zero() {
            return SymmetricWitness { verdict: false, witness: Some((perm, diff)) };
        }
    }
    SymmetricWitness::symmetric()
}

/// Invariance under the adjacent transpositions, which generate `S_n`.
pub fn is_symmetric<E: LieElement>(e: &E) -> SymmetricWitness<E> {
    check_with(e, Permutation::adjacent_transpositions(e.spec().rank()))
}

/// Invariance checked against every element of `S_n`; exponential in `n`.
pub fn is_symmetric_exhaustive<E: LieElement>(e: &E) -> SymmetricWitness<E> {
    check_with(e, Permutation::all(e.spec().rank()))
}

fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The Reynolds operator `(1/n!) Σ_{π ∈ S_n} π·e`.
pub fn reynolds<E: LieElement>(e: &E) -> Result<E> {
    let n = e.spec().rank();
    let mut sum = E::zero(e.spec())?;
    for perm in Permutation::all(n) {
        sum = sum.try_add(&act(&perm, e)?)?;
    }
    Ok(sum.scale(&Rational::new(BigInt::one(), factorial(n))))
}

/// Stacked matrices of `τ_i - id` on the degree-`d` basis, one block per adjacent
/// transposition; column `j` belongs to the `j`-th basis element.
fn invariance_system<E: LieElement>(basis: &[E], degree: usize) -> Result<Vec<Vec<Rational>>> {
    let Some(first) = basis.first() else { return Ok(Vec::new()) };
    let dim = basis.len();
    let mut rows = Vec::new();
    for tau in Permutation::adjacent_transpositions(first.spec().rank()) {
        let columns = basis
            .iter()
            .map(|b| act(&tau, b)?.coordinates(degree))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..dim {
            rows.push(
                (0..dim)
                    .map(|j| if i == j { &columns[j][i] - Rational::one() } else { columns[j][i].clone() })
                    .collect(),
            );
        }
    }
    Ok(rows)
}

/// A basis of the `S_n`-invariants in the degree-`d` component, as primitive integer
/// combinations of the graded basis.
pub fn symmetric_basis<E: LieElement>(spec: &AlgebraSpec, degree: usize) -> Result<Vec<E>> {
    let basis = E::graded_basis(spec, degree)?;
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    if spec.rank() == 1 {
        return Ok(basis);
    }
    let system = invariance_system(&basis, degree)?;
    linalg::nullspace(&system, basis.len())
        .iter()
        .map(|v| E::combination(spec, v, &basis))
        .collect()
}

/// Rank of the Reynolds operator on the degree-`d` component; equals the dimension
/// of the invariant subspace.
pub fn reynolds_rank<E: LieElement>(spec: &AlgebraSpec, degree: usize) -> Result<usize> {
    let basis = E::graded_basis(spec, degree)?;
    if basis.is_empty() {
        return Ok(0);
    }
    let columns = basis
        .iter()
        .map(|b| reynolds(b)?.coordinates(degree))
        .collect::<Result<Vec<_>>>()?;
    let dim = basis.len();
    let rows: Vec<Vec<Rational>> = (0..dim).map(|i| (0..dim).map(|j| columns[j][i].clone()).collect()).collect();
    Ok(linalg::rank(&rows, dim))
}

/// Every homogeneous component of a symmetric element is symmetric; this splits `e`
/// into components and reports whether each is.
pub fn symmetric_components<E: LieElement>(e: &E) -> Vec<(usize, bool)> {
    e.degrees()
        .into_iter()
        .map(|d| (d, is_symmetric(&e.component(d)).verdict))
        .collect()
}
