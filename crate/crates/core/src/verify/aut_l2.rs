use rand::Rng;

use super::{require, Params, Recorder, Target, VerificationReport};
use crate::automorphism::{linear_map2, linear_xi, preserves_elements, Endomorphism, LinearXi};
use crate::element::LieElement;
use crate::error::Result;
use crate::free_lie::FreeLieElement;
use crate::rational::{int, Rational};
use crate::sampling::{seeded, small_rational, symmetric_bases, SeededRng};
use crate::spec::AlgebraSpec;
use crate::symmetry::is_symmetric;

fn nonzero_det(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> bool {
    a * d != b * c
}

/// `[[x,y],x] - [[x,y],y]`, the cubic symmetric witness in `L_2`.
pub(crate) fn cubic_witness(spec: &AlgebraSpec) -> Result<FreeLieElement> {
    let (x, y) = (FreeLieElement::generator(spec, 1)?, FreeLieElement::generator(spec, 2)?);
    let xy = x.bracket(&y)?;
    xy.bracket(&x)?.try_sub(&xy.bracket(&y)?)
}

/// `β((a - c)[[x,y],x] + (b - d)[[x,y],y])` with `β = ad - bc`.
fn cubic_image_formula(spec: &AlgebraSpec, [a, b, c, d]: [&Rational; 4]) -> Result<FreeLieElement> {
    let (x, y) = (FreeLieElement::generator(spec, 1)?, FreeLieElement::generator(spec, 2)?);
    let xy = x.bracket(&y)?;
    let beta = a * d - b * c;
    let inner = xy.bracket(&x)?.scale(&(a - c)).try_add(&xy.bracket(&y)?.scale(&(b - d)))?;
    Ok(inner.scale(&beta))
}

fn random_xi(rng: &mut SeededRng, need_nonzero_a: bool) -> (Rational, Rational) {
    loop {
        let (a, b) = (small_rational(rng), small_rational(rng));
        if &a * &a != &b * &b && !(need_nonzero_a && a == int(0)) {
            return (a, b);
        }
    }
}

/// Automorphisms of `L_2` preserving `L_2^{S_2}` are exactly `ξ(a, b)`.
///
/// (i) random `ξ(a, b)` preserve the symmetric bases up to `dmax` and compose with the
/// stated inverse to the identity; (ii) random invertible linear maps not of that
/// shape send `x + y` or `[[x,y],x] - [[x,y],y]` to a non-symmetric element; (iii) the
/// image of the cubic witness under a general linear map matches
/// `β((a - c)[[x,y],x] + (b - d)[[x,y],y])`. Mutation samples `y ↦ b x - a y`
/// in (i).
pub fn verify_aut_l2(dmax: usize, samples: usize, seed: u64, mutation: bool) -> Result<VerificationReport> {
    require(dmax >= 3, "dmax must be at least 3")?;
    let spec = AlgebraSpec::free(2)?;
    let mut rec = Recorder::new(
        Target::AutL2,
        Params { rank: Some(2), dmax: Some(dmax), trials: Some(samples), seed: Some(seed), mutation, ..Params::default() },
    );
    let mut rng = seeded(seed);
    let symmetric: Vec<FreeLieElement> = symmetric_bases(&spec, 1..=dmax)?;
    let v = FreeLieElement::generator_sum(&spec)?;
    let cubic = cubic_witness(&spec)?;
    let witnesses = [v.clone(), cubic.clone()];

    let mut cases: Vec<(Rational, Rational)> = vec![(int(2), int(1)), (int(1), int(0))];
    cases.extend((0..samples).map(|_| random_xi(&mut rng, mutation)));
    for (a, b) in &cases {
        let xi: LinearXi<FreeLieElement> = linear_xi(&spec, a.clone(), b.clone())?;
        let map = if mutation {
            linear_map2(&spec, [a, b, b, &-a])?
        } else {
            xi.endomorphism().clone()
        };
        let p = preserves_elements(&map, &symmetric)?;
        rec.check(p.preserved, || {
            let f = p.failure.as_ref().expect("failure recorded");
            (format!("a = {a}, b = {b}"), "symmetric elements preserved".into(), format!("image of {} is {}", f.source, f.image))
        });
        let round = xi.endomorphism().compose(xi.inverse())?;
        let back = xi.inverse().compose(xi.endomorphism())?;
        rec.check(round.is_identity() && back.is_identity(), || {
            (format!("a = {a}, b = {b}"), "ξ ∘ ξ⁻¹ = ξ⁻¹ ∘ ξ = 1".into(), format!("{:?}", round.images()))
        });
    }

    let mut general: Vec<[Rational; 4]> = vec![[int(1), int(0), int(0), int(2)], [int(2), int(1), int(1), int(2)]];
    let mut drawn = 0;
    while drawn < samples {
        let m = [small_rational(&mut rng), small_rational(&mut rng), small_rational(&mut rng), small_rational(&mut rng)];
        let [a, b, c, d] = &m;
        if !nonzero_det(a, b, c, d) || (a == d && b == c) {
            continue;
        }
        // bias toward maps satisfying one of the two conditions
        let m = match rng.gen_range(0..3) {
            0 => {
                let d2 = a + c - b;
                if nonzero_det(a, b, c, &d2) && !(a == &d2 && b == c) { [a.clone(), b.clone(), c.clone(), d2] } else { m.clone() }
            }
            _ => m.clone(),
        };
        general.push(m);
        drawn += 1;
    }
    for m in &general {
        let [a, b, c, d] = m;
        let refs = [a, b, c, d];
        let map: Endomorphism<FreeLieElement> = linear_map2(&spec, refs)?;
        let image = map.apply(&cubic)?;
        let formula = cubic_image_formula(&spec, refs)?;
        rec.check(image == formula, || {
            (format!("(a,b,c,d) = ({a},{b},{c},{d})"), format!("ξ(cubic) = {formula}"), image.to_string())
        });
        if a == d && b == c {
            continue;
        }
        let broken = witnesses
            .iter()
            .map(|w| map.apply(w))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .any(|img| !is_symmetric(img).verdict);
        rec.check(broken, || {
            (format!("(a,b,c,d) = ({a},{b},{c},{d})"), "x+y or the cubic witness loses symmetry".into(), "both images symmetric".into())
        });
    }
    Ok(rec.finish())
}
