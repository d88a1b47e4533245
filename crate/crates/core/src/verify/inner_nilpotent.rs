use log::debug;
use rand::Rng;

use super::{require, Params, Recorder, Target, VerificationReport};
use crate::automorphism::{in_lower_central_term, inner_eps, preserves_elements, Endomorphism};
use crate::element::LieElement;
use crate::error::Result;
use crate::metabelian::MetabelianElement;
use crate::rational::int;
use crate::sampling::{combination, graded_bases, seeded, small_int, symmetric_bases};
use crate::spec::AlgebraSpec;
use crate::symmetry::{is_symmetric, symmetric_components};

/// Inner automorphisms of `L_{n,c}^{S_n}` are the `ε_u` with symmetric `u`.
///
/// Forward: random symmetric `u` (linear part included) of degrees `1..=dmax` give
/// `ε_u` preserving every symmetric basis element up to degree `c`. Converse:
/// * a non-symmetric linear part is detected in degree two of `ε_u(v) - v`,
///   `v = x_1 + ⋯ + x_n`;
/// * a symmetric linear part with a commutator part that is not symmetric modulo
///   `γ^c` is detected on a symmetric witness, `v` first.
///
/// Also checks that `ε_u` is the identity for `u ∈ γ^c` and that `ε_{u+w} = ε_u` for
/// `w ∈ γ^c`. Mutation drops the symmetry filter on forward samples.
pub fn verify_inner_nilpotent(n: usize, c: usize, dmax: usize, trials: usize, seed: u64, mutation: bool) -> Result<VerificationReport> {
    require(n >= 2, "rank must be at least 2")?;
    require(c >= 3, "class must be at least 3")?;
    require((2..=c).contains(&dmax), "dmax must lie in 2..=class")?;
    let spec = AlgebraSpec::nilpotent(n, c)?;
    let mut rec = Recorder::new(
        Target::ThmNilpotent,
        Params { rank: Some(n), class: Some(c), dmax: Some(dmax), trials: Some(trials), seed: Some(seed), mutation },
    );
    let mut rng = seeded(seed);
    let symmetric_all: Vec<MetabelianElement> = symmetric_bases(&spec, 1..=c)?;
    let symmetric_u: Vec<MetabelianElement> = symmetric_bases(&spec, 1..=dmax)?;
    let all_u: Vec<MetabelianElement> = graded_bases(&spec, 1..=dmax)?;
    let commutators: Vec<MetabelianElement> = graded_bases(&spec, 2..=dmax.min(c - 1))?;
    let top: Vec<MetabelianElement> = graded_bases(&spec, [c])?;
    let gens: Vec<MetabelianElement> = graded_bases(&spec, [1])?;
    let v = MetabelianElement::generator_sum(&spec)?;
    let preserves = |eps: &Endomorphism<MetabelianElement>| preserves_elements(eps, &symmetric_all);

    for _ in 0..trials {
        let u = combination(&mut rng, &spec, if mutation { &all_u } else { &symmetric_u })?;
        let eps = inner_eps(&u)?;
        let p = preserves(&eps)?;
        rec.check(p.preserved, || {
            let f = p.failure.as_ref().expect("failure recorded");
            (format!("u = {u}"), "ε_u preserves symmetric elements".into(), format!("image of {} is {}", f.source, f.image))
        });

        let w = combination(&mut rng, &spec, &top)?;
        let shifted = inner_eps(&u.try_add(&w)?)?;
        rec.check(shifted == eps, || (format!("u = {u}, w = {w} ∈ γ^c"), "ε_(u+w) = ε_u".into(), "maps differ".into()));
        rec.check(in_lower_central_term(&w, c) && inner_eps(&w)?.is_identity(), || {
            (format!("w = {w}"), "ε_w = 1 for w ∈ γ^c".into(), "not the identity".into())
        });
    }

    // Non-symmetric linear part.
    let mut rejected = 0;
    for _ in 0..trials {
        let ul = loop {
            let ul = combination(&mut rng, &spec, &gens)?;
            if !is_symmetric(&ul).verdict {
                break ul;
            }
            rejected += 1;
        };
        let u = ul.try_add(&combination(&mut rng, &spec, &commutators)?)?;
        let eps = inner_eps(&u)?;
        let quadratic = eps.apply(&v)?.try_sub(&v)?.component(2);
        let detected = !is_symmetric(&quadratic).verdict;
        rec.check(detected, || (format!("u = {u}"), "degree-2 part of ε_u(v) - v not symmetric".into(), quadratic.to_string()));
        let p = preserves(&eps)?;
        rec.check(!p.preserved, || (format!("u = {u}"), "ε_u breaks symmetry".into(), "all symmetric elements preserved".into()));
    }

    // Symmetric linear part, commutator part not symmetric modulo γ^c.
    for _ in 0..trials {
        let alpha = if rng.gen_bool(0.25) { int(0) } else { small_int(&mut rng) };
        let u0 = loop {
            let u0 = combination(&mut rng, &spec, &commutators)?;
            if symmetric_components(&u0).iter().any(|(_, s)| !s) {
                break u0;
            }
            rejected += 1;
        };
        let u = v.scale(&alpha).try_add(&u0)?;
        let eps = inner_eps(&u)?;
        let image = eps.apply(&v)?;
        if !is_symmetric(&image).verdict {
            rec.check(true, || unreachable!());
            continue;
        }
        debug!("v does not expose u = {u}; trying the full symmetric basis");
        let p = preserves(&eps)?;
        rec.check(!p.preserved, || (format!("u = {u}"), "ε_u breaks symmetry".into(), "all symmetric elements preserved".into()));
    }

    // u = x_1 on v: degree two of ε_u(v) - v is [v, x_1], anti-invariant for n = 2.
    let x1 = MetabelianElement::generator(&spec, 1)?;
    let quadratic = inner_eps(&x1)?.apply(&v)?.try_sub(&v)?.component(2);
    rec.check(!is_symmetric(&quadratic).verdict, || ("u = x1".into(), "non-symmetric degree-2 part".into(), quadratic.to_string()));
    let fixed = inner_eps(&v)?.apply(&v)?;
    rec.check(fixed == v, || (format!("u = {v}"), format!("ε_u(v) = {v}"), fixed.to_string()));

    if rejected > 0 {
        rec.note(format!("rejected {rejected} samples that were symmetric where a non-symmetric part was required"));
    }
    rec.note("ε_u depends only on u modulo γ^c; non-symmetric u that are symmetric modulo γ^c give the same maps as symmetric ones");
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_at_small_scale() {
        let r = verify_inner_nilpotent(2, 4, 4, 8, 5, false).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn mutation_fails() {
        assert!(!verify_inner_nilpotent(2, 4, 4, 8, 5, true).unwrap().passed());
    }

    #[test]
    fn preconditions() {
        assert!(verify_inner_nilpotent(2, 2, 2, 1, 0, false).is_err());
        assert!(verify_inner_nilpotent(2, 3, 4, 1, 0, false).is_err());
    }
}
