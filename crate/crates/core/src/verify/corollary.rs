use super::{require, Params, Recorder, Target, VerificationReport};
use crate::automorphism::{inner_psi, linear_xi, preserves_elements, Endomorphism, LinearXi};
use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::linalg::solve_unique;
use crate::metabelian::MetabelianElement;
use crate::rational::{int, Rational};
use crate::sampling::{combination, graded_bases, seeded, small_rational, symmetric_bases};
use crate::spec::AlgebraSpec;
use crate::symmetry::is_symmetric;

/// Solves `[p, w] = r` for `w` in the commutator degrees `2..=top`.
///
/// On `F_2` the map `w ↦ [p, w]` is injective on `F_2'` whenever `p` is a nonzero
/// linear element, so each degree has at most one solution.
fn solve_bracket(spec: &AlgebraSpec, p: &MetabelianElement, r: &MetabelianElement, top: usize) -> Result<MetabelianElement> {
    let mut w = MetabelianElement::zero(spec)?;
    for d in 2..=top {
        let basis = MetabelianElement::graded_basis(spec, d)?;
        let images = basis.iter().map(|b| p.bracket(b)?.coordinates(d + 1)).collect::<Result<Vec<_>>>()?;
        let rhs = r.coordinates(d + 1)?;
        let matrix: Vec<Vec<Rational>> = (0..rhs.len()).map(|row| images.iter().map(|col| col[row].clone()).collect()).collect();
        let solution = solve_unique(&matrix, &rhs, basis.len())?;
        w = w.try_add(&MetabelianElement::combination(spec, &solution, &basis)?)?;
    }
    Ok(w)
}

/// Reads `(a, b)` off the linear part of `φ`, which must have the `ξ(a, b)` shape.
fn recover_xi(phi: &Endomorphism<MetabelianElement>) -> Result<(Rational, Rational)> {
    let m = phi.linear_matrix()?;
    let (a, b) = (m[0][0].clone(), m[0][1].clone());
    if m[1][0] != b || m[1][1] != a {
        return Err(Error::NoUniqueSolution(format!("linear part {m:?} is not of the form ξ(a, b)")));
    }
    Ok((a, b))
}

/// Decomposes `φ = ξ(a, b) ∘ ψ_u` and returns `(a, b, u)`.
///
/// Since `ξ ∘ ψ_u` sends `x_i` to `ξ(x_i) + [ξ(x_i), ξ(u)]`, `w = ξ(u)` solves a linear
/// system read off the image of `x`, is confirmed on the image of `y`, and
/// `u = ξ⁻¹(w)`.
pub fn decompose_f2(phi: &Endomorphism<MetabelianElement>, top: usize) -> Result<(Rational, Rational, MetabelianElement)> {
    let spec = *phi.spec();
    let (a, b) = recover_xi(phi)?;
    let xi: LinearXi<MetabelianElement> = linear_xi(&spec, a.clone(), b.clone())?;
    let mut w = MetabelianElement::zero(&spec)?;
    for i in 1..=2 {
        let gen = MetabelianElement::generator(&spec, i)?;
        let p = xi.endomorphism().apply(&gen)?;
        let residual = phi.image(i).try_sub(&p)?;
        if i == 1 {
            w = solve_bracket(&spec, &p, &residual, top)?;
        }
        if p.bracket(&w)? != residual {
            return Err(Error::NoUniqueSolution(format!("no w with [ξ(x{i}), w] = {residual}")));
        }
    }
    Ok((a, b, xi.inverse().apply(&w)?))
}

/// Automorphisms of `F_2` preserving `F_2^{S_2}` that factor as `ξ(a, b) ∘ ψ_u` carry
/// a symmetric `u`.
///
/// Each sample builds `ξ(a, b) ∘ ψ_u` from random `a² ≠ b²` and random symmetric
/// `u ∈ F_2'` of degrees `2..dmax`, checks preservation of the symmetric bases up to
/// `dmax`, then recovers `(a, b)` and `u` from the composite alone and checks that the
/// recovered `u` is the original one and is symmetric. Mutation samples `u` from the
/// whole of `F_2'`, so the recovered `u` is not symmetric.
pub fn verify_corollary_f2(dmax: usize, samples: usize, seed: u64, mutation: bool) -> Result<VerificationReport> {
    require(dmax >= 3, "dmax must be at least 3")?;
    let spec = AlgebraSpec::metabelian(2)?;
    let mut rec = Recorder::new(
        Target::CorF2,
        Params { rank: Some(2), dmax: Some(dmax), trials: Some(samples), seed: Some(seed), mutation, ..Params::default() },
    );
    let mut rng = seeded(seed);
    let symmetric: Vec<MetabelianElement> = symmetric_bases(&spec, 1..=dmax)?;
    let symmetric_u: Vec<MetabelianElement> = symmetric_bases(&spec, 2..dmax)?;
    let all_u: Vec<MetabelianElement> = graded_bases(&spec, 2..dmax)?;
    require(!symmetric_u.is_empty(), "no symmetric commutators below dmax; raise dmax")?;

    let mut cases = vec![(int(1), int(0), MetabelianElement::zero(&spec)?)];
    while cases.len() < samples + 1 {
        let (a, b) = (small_rational(&mut rng), small_rational(&mut rng));
        if &a * &a == &b * &b {
            continue;
        }
        let u = combination(&mut rng, &spec, if mutation { &all_u } else { &symmetric_u })?;
        cases.push((a, b, u));
    }

    for (a, b, u) in &cases {
        let input = || format!("a = {a}, b = {b}, u = {u}");
        let xi: LinearXi<MetabelianElement> = linear_xi(&spec, a.clone(), b.clone())?;
        let phi = xi.endomorphism().compose(&inner_psi(u)?)?;
        let p = preserves_elements(&phi, &symmetric)?;
        let preserved = p.preserved;
        if !mutation {
            rec.check(preserved, || {
                let f = p.failure.as_ref().expect("failure recorded");
                (input(), "symmetric elements preserved".into(), format!("image of {} is {}", f.source, f.image))
            });
        }
        match decompose_f2(&phi, dmax - 1) {
            Ok((ra, rb, ru)) => {
                rec.check(&ra == a && &rb == b, || (input(), format!("(a, b) = ({a}, {b})"), format!("({ra}, {rb})")));
                rec.check(&ru == u, || (input(), format!("u = {u}"), ru.to_string()));
                let symmetric_u = is_symmetric(&ru).verdict;
                rec.check(symmetric_u, || (input(), "recovered u symmetric".into(), ru.to_string()));
            }
            Err(e) => {
                rec.check(false, || (input(), "ξ(a, b) ∘ ψ_u decomposition".into(), e.to_string()));
            }
        }
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes() {
        let r = verify_corollary_f2(5, 6, 3, false).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn mutation_fails() {
        assert!(!verify_corollary_f2(5, 6, 3, true).unwrap().passed());
    }

    #[test]
    fn decomposes_identity() {
        let spec = AlgebraSpec::metabelian(2).unwrap();
        let (a, b, u) = decompose_f2(&Endomorphism::identity(&spec).unwrap(), 3).unwrap();
        assert_eq!((a, b), (int(1), int(0)));
        assert!(u.is_zero());
    }
}
