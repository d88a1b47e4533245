use itertools::Itertools;

use super::{require, Params, Recorder, Target, VerificationReport};
use crate::automorphism::{iaut_l2, phi_f, preserves_elements, preserves_symmetric};
use crate::element::LieElement;
use crate::error::Result;
use crate::metabelian::{normalize_monomial, MetabelianElement};
use crate::perm::Permutation;
use crate::poly::CommPoly;
use crate::rational::int;
use crate::sampling::{exponent_vectors, poly, seeded};
use crate::spec::AlgebraSpec;

pub const PHI_RANDOM_TRIALS: usize = 20;

fn swap(p: &CommPoly) -> Result<CommPoly> {
    p.permute(&Permutation::transposition(2, 1, 2)?)
}

/// `f(x,y) + g(x,y) + f(y,x) + g(y,x) = 0`.
pub fn symmetrized_sum_vanishes(f: &CommPoly, g: &CommPoly) -> Result<bool> {
    let fg = f.try_add(g)?;
    Ok(fg.try_add(&swap(&fg)?)?.is_zero())
}

/// Every polynomial in two variables with coefficients in `{-1, 0, 1}` and degree at
/// most `degree`.
pub fn small_polys(degree: usize) -> Result<Vec<CommPoly>> {
    let monomials = exponent_vectors(2, degree);
    let units = [int(-1), int(0), int(1)];
    (0..monomials.len())
        .map(|_| units.iter().cloned())
        .multi_cartesian_product()
        .map(|coeffs| CommPoly::from_terms(2, monomials.iter().cloned().zip(coeffs)))
        .collect()
}

/// `x + y` and `[x,y](x - y)`, the two symmetric elements the search tests.
pub fn phi_witnesses(spec: &AlgebraSpec) -> Result<[MetabelianElement; 2]> {
    let v = MetabelianElement::generator_sum(spec)?;
    let xy = normalize_monomial(1, 2, &[], spec)?;
    let t = CommPoly::variable(2, 1)?.try_sub(&CommPoly::variable(2, 2)?)?;
    Ok([v, xy.module_act(&t)?])
}

/// `x ↦ x + [x,y]f(x,y)`, `y ↦ y - [x,y]f(y,x)` preserves `L_{2,c}^{S_2}`, and among
/// the maps `x ↦ x + [x,y]f`, `y ↦ y + [x,y]g` exactly those with `g = -f(y,x)` do.
///
/// (i) random `f` of degree at most `fdeg` preserve the symmetric bases up to `c`;
/// (ii) every pair `(f, g)` with coefficients in `{-1, 0, 1}` and degree at most
/// `min(fdeg, 1)` preserves `{x + y, [x,y](x - y)}` iff `g = -f(y,x)` and
/// `f(x,y) + g(x,y) + f(y,x) + g(y,x) = 0`. Mutation uses `y ↦ y + [x,y](f(y,x) + 1)` in (i).
pub fn verify_phi_l2c(c: usize, fdeg: usize, trials: usize, seed: u64, mutation: bool) -> Result<VerificationReport> {
    require(c >= 3, "class must be at least 3")?;
    let spec = AlgebraSpec::nilpotent(2, c)?;
    let mut rec = Recorder::new(
        Target::PhiL2c,
        Params { rank: Some(2), class: Some(c), dmax: Some(fdeg), trials: Some(trials), seed: Some(seed), mutation },
    );
    let mut rng = seeded(seed);

    for _ in 0..trials {
        let f = poly(&mut rng, 2, fdeg);
        let map = if mutation {
            let g = swap(&f)?.try_add(&CommPoly::one(2))?;
            iaut_l2(&spec, &f, &g)?
        } else {
            phi_f(&f, c)?
        };
        let p = preserves_symmetric(&map, c)?;
        rec.check(p.preserved, || {
            let fail = p.failure.as_ref().expect("failure recorded");
            (format!("f = {f}"), "symmetric elements preserved".into(), format!("image of {} is {}", fail.source, fail.image))
        });
    }

    let witnesses = phi_witnesses(&spec)?;
    let candidates = small_polys(fdeg.min(1))?;
    let mut mismatches = 0;
    for f in &candidates {
        let minus_swapped = -&swap(f)?;
        for g in &candidates {
            let preserved = preserves_elements(&iaut_l2(&spec, f, g)?, &witnesses)?.preserved;
            let predicted = g == &minus_swapped && symmetrized_sum_vanishes(f, g)?;
            if preserved != predicted {
                mismatches += 1;
            }
            rec.check(preserved == predicted, || {
                (
                    format!("c = {c}, f = {f}, g = {g}"),
                    format!("preserves = {predicted}"),
                    format!("preserves = {preserved}"),
                )
            });
        }
    }
    if mismatches > 0 {
        rec.note(format!(
            "{mismatches} of {} pairs disagree with the predicted preserver set",
            candidates.len() * candidates.len()
        ));
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(c: usize) -> AlgebraSpec {
        AlgebraSpec::nilpotent(2, c).unwrap()
    }

    fn preserves(c: usize, f: &CommPoly, g: &CommPoly) -> bool {
        let s = spec(c);
        preserves_elements(&iaut_l2(&s, f, g).unwrap(), &phi_witnesses(&s).unwrap()).unwrap().preserved
    }

    #[test]
    fn small_poly_count() {
        assert_eq!(small_polys(1).unwrap().len(), 27);
        assert_eq!(small_polys(0).unwrap().len(), 3);
    }

    #[test]
    fn constant_pair_examples() {
        let one = CommPoly::one(2);
        assert!(preserves(4, &one, &-&one));
        assert!(!preserves(4, &one, &one));
        let s = spec(4);
        let image = iaut_l2(&s, &one, &one).unwrap().apply(&MetabelianElement::generator_sum(&s).unwrap()).unwrap();
        assert_eq!(image.to_string(), "x1 + x2 - 2 [x2,x1]");
    }

    #[test]
    fn linear_pair_example() {
        let x = CommPoly::variable(2, 1).unwrap();
        let y = CommPoly::variable(2, 2).unwrap();
        for c in 3..=6 {
            assert!(preserves(c, &x, &-&y));
        }
    }

    #[test]
    fn low_classes_admit_preservers_outside_the_closed_form() {
        let x = CommPoly::variable(2, 1).unwrap();
        for c in 3..=6 {
            assert_eq!(preserves(c, &x, &-&x), c <= 4, "c = {c}");
        }
    }

    #[test]
    fn random_trials_preserve() {
        for c in [3, 4, 6] {
            let r = verify_phi_l2c(c, 2, 5, 9, false).unwrap();
            assert!(r.witnesses.iter().all(|w| w.input.starts_with("c = ")), "{r}");
        }
    }

    #[test]
    fn passes_at_class_six() {
        let r = verify_phi_l2c(6, 2, 5, 9, false).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn mutation_fails() {
        assert!(!verify_phi_l2c(4, 2, 5, 9, true).unwrap().passed());
    }
}
