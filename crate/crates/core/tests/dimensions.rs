use metalie_core::metabelian::bahturin_monomials;
use metalie_core::symmetry::reynolds_rank;
use metalie_core::{lyndon_words, symmetric_basis, AlgebraSpec, FreeLieElement, LieElement, MetabelianElement, Rational};

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Necklace count `(1/d) Σ_{k | d} μ(k) n^{d/k}`.
fn witt(n: usize, d: usize) -> usize {
    let sum: i64 = (1..=d).filter(|k| d.is_multiple_of(*k)).map(|k| mobius(k) * (n as i64).pow((d / k) as u32)).sum();
    (sum / d as i64) as usize
}

#[test]
fn mobius_values() {
    let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1];
    assert_eq!((1..=10).map(mobius).collect::<Vec<_>>(), expected);
}

#[test]
fn lyndon_counts_match_necklace_formula() {
    for n in 1..=3 {
        for d in 1..=6 {
            assert_eq!(lyndon_words(n, d).len(), witt(n, d), "n = {n}, d = {d}");
        }
    }
    let two: Vec<usize> = (1..=6).map(|d| lyndon_words(2, d).len()).collect();
    assert_eq!(two, [2, 1, 2, 3, 6, 9]);
}

#[test]
fn free_graded_basis_is_independent() {
    let spec = AlgebraSpec::free(2).unwrap();
    for d in 1..=6 {
        let basis = FreeLieElement::graded_basis(&spec, d).unwrap();
        for (i, b) in basis.iter().enumerate() {
            let coords = b.coordinates(d).unwrap();
            for (j, c) in coords.iter().enumerate() {
                assert_eq!(*c == Rational::from_integer(1.into()), i == j);
            }
        }
    }
}

#[test]
fn bahturin_counts() {
    for d in 2..=8 {
        assert_eq!(bahturin_monomials(2, d).len(), d - 1, "d = {d}");
    }
    for n in 2..=4 {
        for d in 2..=3 {
            assert_eq!(bahturin_monomials(n, d).len(), lyndon_words(n, d).len(), "n = {n}, d = {d}");
        }
    }
    assert_eq!(bahturin_monomials(2, 5).len(), 4);
    assert_eq!(lyndon_words(2, 5).len(), 6);
}

#[test]
fn metabelian_basis_dimension_matches_monomial_count() {
    // dim F_n^(d) = (d - 1) C(n + d - 2, d)
    let binom = |a: usize, b: usize| (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1));
    for n in 2..=4 {
        let spec = AlgebraSpec::metabelian(n).unwrap();
        for d in 2..=5 {
            let dim = MetabelianElement::graded_basis(&spec, d).unwrap().len();
            assert_eq!(dim, (d - 1) * binom(n + d - 2, d), "n = {n}, d = {d}");
        }
    }
}

#[test]
fn symmetric_dimension_by_two_routes() {
    for (n, max) in [(2, 6), (3, 5)] {
        let spec = AlgebraSpec::metabelian(n).unwrap();
        for d in 1..=max {
            let nullspace = symmetric_basis::<MetabelianElement>(&spec, d).unwrap().len();
            assert_eq!(nullspace, reynolds_rank::<MetabelianElement>(&spec, d).unwrap(), "n = {n}, d = {d}");
        }
    }
    let free = AlgebraSpec::free(2).unwrap();
    for d in 1..=5 {
        let nullspace = symmetric_basis::<FreeLieElement>(&free, d).unwrap().len();
        assert_eq!(nullspace, reynolds_rank::<FreeLieElement>(&free, d).unwrap(), "free, d = {d}");
    }
}
