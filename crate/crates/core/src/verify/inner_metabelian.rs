use log::debug;

use super::{require, Params, Recorder, Target, VerificationReport};
use crate::automorphism::{inner_psi, preserves_elements, Preservation};
use crate::element::LieElement;
use crate::error::Result;
use crate::metabelian::{normalize_monomial, MetabelianElement};
use crate::sampling::{combination, graded_bases, seeded, symmetric_bases, SeededRng};
use crate::spec::AlgebraSpec;
use crate::symmetry::is_symmetric;

fn describe(p: &Preservation<MetabelianElement>) -> String {
    match &p.failure {
        None => "all symmetric basis elements preserved".into(),
        Some(f) => format!("image of {} is {} (not fixed by {})", f.source, f.image, f.permutation),
    }
}

fn nonsymmetric(rng: &mut SeededRng, spec: &AlgebraSpec, basis: &[MetabelianElement], rejected: &mut usize) -> Result<MetabelianElement> {
    loop {
        let u = combination(rng, spec, basis)?;
        if !is_symmetric(&u).verdict {
            return Ok(u);
        }
        *rejected += 1;
        debug!("rejected symmetric sample {u}");
    }
}

/// `ψ_u` preserves `F_n^{S_n}` exactly when `u ∈ (F_n')^{S_n}`.
///
/// Forward: random symmetric `u` of degrees `2..=dmax` preserve the symmetric bases
/// up to `dmax`. Converse: random non-symmetric `u` must break symmetry, and
/// `v = x_1 + ⋯ + x_n` must already expose it. Mutation drops the symmetry filter on
/// the forward samples.
pub fn verify_inner_metabelian(n: usize, dmax: usize, trials: usize, seed: u64, mutation: bool) -> Result<VerificationReport> {
    require(n >= 2, "rank must be at least 2")?;
    require(dmax >= 3, "dmax must be at least 3")?;
    let spec = AlgebraSpec::metabelian(n)?;
    let mut rec = Recorder::new(
        Target::ThmMetabelian,
        Params { rank: Some(n), dmax: Some(dmax), trials: Some(trials), seed: Some(seed), mutation, ..Params::default() },
    );
    let mut rng = seeded(seed);
    let symmetric: Vec<MetabelianElement> = symmetric_bases(&spec, 1..=dmax)?;
    let symmetric_commutators: Vec<MetabelianElement> = symmetric_bases(&spec, 2..=dmax)?;
    let commutators: Vec<MetabelianElement> = graded_bases(&spec, 2..=dmax)?;
    let v = MetabelianElement::generator_sum(&spec)?;

    for _ in 0..trials {
        let u = if mutation {
            combination(&mut rng, &spec, &commutators)?
        } else {
            combination(&mut rng, &spec, &symmetric_commutators)?
        };
        let p = preserves_elements(&inner_psi(&u)?, &symmetric)?;
        rec.check(p.preserved, || (format!("u = {u}"), "ψ_u preserves symmetric elements".into(), describe(&p)));
    }

    let mut rejected = 0;
    let mut converse = vec![normalize_monomial(2, 1, &[], &spec)?];
    for _ in 0..trials {
        converse.push(nonsymmetric(&mut rng, &spec, &commutators, &mut rejected)?);
    }
    for u in &converse {
        let psi = inner_psi(u)?;
        let image = psi.apply(&v)?;
        let by_v = !is_symmetric(&image).verdict;
        if by_v {
            rec.check(true, || unreachable!());
            continue;
        }
        let p = preserves_elements(&psi, &symmetric)?;
        rec.check(false, || {
            (
                format!("u = {u}"),
                format!("ψ_u({v}) is not symmetric"),
                format!("ψ_u(v) = {image} is symmetric; full basis: {}", describe(&p)),
            )
        });
    }
    if rejected > 0 {
        rec.note(format!("rejected {rejected} symmetric samples while drawing non-symmetric u"));
    }
    Ok(rec.finish())
}
