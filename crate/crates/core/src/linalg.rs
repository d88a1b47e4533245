//! Exact linear algebra over the rationals.
//!
//! Rows are scaled to integers and reduced with fraction-free (Bareiss)
//! elimination; rational arithmetic only appears in back substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Row echelon form over the integers with its pivot columns.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
}

fn echelon(matrix: &[Vec<Rational>], cols: usize) -> Echelon {
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            integer_row(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

pub fn rank(matrix: &[Vec<Rational>], cols: usize) -> usize {
    echelon(matrix, cols).pivots.len()
}

/// Scales a vector to coprime integers with a positive first nonzero entry.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let ints = integer_row(v);
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.iter().map(|x| Rational::from_integer(x / &g * &sign)).collect()
}

/// Solves the echelon system for pivot variables given values of the free ones.
///
/// Only the first `cols` columns of each row take part; a trailing augmented column
/// is supplied separately through `rhs`.
fn back_substitute(ech: &Echelon, cols: usize, mut x: Vec<Rational>, rhs: Option<&[Rational]>) -> Vec<Rational> {
    for (r, &pc) in ech.pivots.iter().enumerate().rev() {
        let row = &ech.rows[r];
        let mut acc = rhs.map_or_else(Rational::zero, |b| b[r].clone());
        for j in pc + 1..cols {
            if !row[j].is_zero() {
                acc -= Rational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[pc] = acc / Rational::from_integer(row[pc].clone());
    }
    x
}

/// A basis of `{v : M v = 0}` as primitive integer vectors, one per free column, in
/// increasing order of that column.
pub fn nullspace(matrix: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let ech = echelon(matrix, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            primitive(&back_substitute(&ech, cols, x, None))
        })
        .collect()
}

/// The unique solution of `M x = b`, or an error if it is inconsistent or
/// underdetermined.
pub fn solve_unique(matrix: &[Vec<Rational>], rhs: &[Rational], cols: usize) -> Result<Vec<Rational>> {
    assert_eq!(matrix.len(), rhs.len(), "right-hand side length");
    let augmented: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    let ech = echelon(&augmented, cols + 1);
    if ech.pivots.last() == Some(&cols) {
        return Err(Error::NoUniqueSolution("inconsistent system".into()));
    }
    if ech.pivots.len() < cols {
        return Err(Error::NoUniqueSolution(format!("nullity {}", cols - ech.pivots.len())));
    }
    let b: Vec<Rational> = ech.rows.iter().map(|r| Rational::from_integer(r[cols].clone())).collect();
    Ok(back_substitute(&ech, cols, vec![Rational::zero(); cols], Some(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    fn apply(matrix: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
        matrix.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Plain rational Gauss-Jordan, used as the reference for `rank`.
    fn naive_rank(matrix: &[Vec<Rational>], cols: usize) -> usize {
        let mut a = matrix.to_vec();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let pivot = a[r][c].clone();
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &pivot;
                    for j in 0..cols {
                        let sub = &f * &a[r][j];
                        a[i][j] -= sub;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn nullspace_of_symmetry_condition() {
        // act((1 2)) - id on span{[x2,x1]x1, [x2,x1]x2}
        let a = m(&[&[-1, -1], &[-1, -1]]);
        assert_eq!(nullspace(&a, 2), vec![vec![int(1), int(-1)]]);
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert!(nullspace(&a, 2).is_empty());
        assert_eq!(rank(&a, 2), 2);
        assert_eq!(nullspace(&[], 3).len(), 3);
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(primitive(&[rat(-1, 2), rat(3, 4)]), vec![int(2), int(-3)]);
    }

    #[test]
    fn solve_examples() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve_unique(&a, &[int(3), int(5)], 2).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        let singular = m(&[&[1, 1], &[2, 2]]);
        assert!(solve_unique(&singular, &[int(1), int(2)], 2).is_err());
        assert!(solve_unique(&singular, &[int(1), int(3)], 2).is_err());
        let tall = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(solve_unique(&tall, &[int(1), int(2), int(3)], 2).unwrap(), vec![int(1), int(2)]);
    }

    fn small_matrix() -> impl Strategy<Value = (Vec<Vec<Rational>>, usize)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            (prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3), c), r), Just(c))
                .prop_map(|(rows, c)| (rows.into_iter().map(|row| row.into_iter().map(|(n, d)| rat(n, d)).collect()).collect(), c))
        })
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_killed_and_independent((a, cols) in small_matrix()) {
            let ns = nullspace(&a, cols);
            let r = naive_rank(&a, cols);
            prop_assert_eq!(rank(&a, cols), r);
            prop_assert_eq!(ns.len(), cols - r);
            for v in &ns {
                prop_assert!(apply(&a, v).iter().all(|x| x.is_zero()));
            }
            prop_assert_eq!(naive_rank(&ns, cols), ns.len());
        }
    }
}
