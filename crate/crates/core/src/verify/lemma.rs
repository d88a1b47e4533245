use num_traits::One;

use super::{require, Params, Recorder, Target, VerificationReport};
use crate::element::LieElement;
use crate::error::Result;
use crate::linalg;
use crate::metabelian::MetabelianElement;
use crate::perm::Permutation;
use crate::rational::{int, Rational};
use crate::spec::AlgebraSpec;
use crate::symmetry::{act, is_symmetric};

/// If `u = Σ α_i x_i` and `[u, v]` is symmetric for `v = x_1 + ⋯ + x_n`, then `u` is a
/// multiple of `v`.
///
/// Builds the linear system on `α` whose rows are the degree-two coordinates of
/// `τ·[x_i, v] - [x_i, v]` for every adjacent transposition `τ`, and checks that its
/// solution space is exactly the line through `(1, …, 1)`. Mutation replaces `v` by
/// the non-symmetric `x_1 + ⋯ + x_{n-1}`.
pub fn verify_lemma_linear(n: usize, mutation: bool) -> Result<VerificationReport> {
    require(n >= 2, "rank must be at least 2")?;
    let spec = AlgebraSpec::metabelian(n)?;
    let mut rec = Recorder::new(Target::LemmaLinear, Params { rank: Some(n), mutation, ..Params::default() });
    let gens = (1..=n).map(|i| MetabelianElement::generator(&spec, i)).collect::<Result<Vec<_>>>()?;
    let count = if mutation { n - 1 } else { n };
    let v = MetabelianElement::combination(&spec, &vec![Rational::one(); count], &gens)?;

    let brackets = gens.iter().map(|x| x.bracket(&v)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for tau in Permutation::adjacent_transpositions(n) {
        let columns = brackets
            .iter()
            .map(|b| act(&tau, b)?.try_sub(b)?.coordinates(2))
            .collect::<Result<Vec<_>>>()?;
        let dim = columns.first().map_or(0, Vec::len);
        for i in 0..dim {
            rows.push(columns.iter().map(|c| c[i].clone()).collect());
        }
    }
    let kernel = linalg::nullspace(&rows, n);
    let ones = vec![Rational::one(); n];
    rec.check(kernel.len() == 1 && kernel[0] == ones, || {
        (
            format!("v = {v}"),
            "solution space spanned by (1, …, 1)".into(),
            format!("nullity {} with basis {:?}", kernel.len(), kernel.iter().map(|k| k.iter().map(|r| r.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()),
        )
    });

    // u = x_1 breaks symmetry of [u, v]
    let w = gens[0].bracket(&v)?;
    rec.check(!is_symmetric(&w).verdict, || (format!("u = x1, v = {v}"), "[u, v] not symmetric".into(), format!("[u, v] = {w}")));

    // u = λ v gives [u, v] = 0
    let u = v.scale(&int(3));
    let w = u.bracket(&v)?;
    rec.check(w.is_zero(), || (format!("u = {u}"), "[u, v] = 0".into(), w.to_string()));

    // every kernel vector gives a symmetric bracket
    for k in &kernel {
        let u = MetabelianElement::combination(&spec, k, &gens)?;
        let w = u.bracket(&v)?;
        rec.check(is_symmetric(&w).verdict, || (format!("u = {u}"), "[u, v] symmetric".into(), w.to_string()));
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_for_small_ranks() {
        for n in 2..=5 {
            let r = verify_lemma_linear(n, false).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn mutation_fails() {
        for n in 2..=4 {
            assert!(!verify_lemma_linear(n, true).unwrap().passed());
        }
    }
}
