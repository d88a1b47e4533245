//! Endomorphisms given by generator images, and the automorphism families of the
//! metabelian and nilpotent algebras: inner automorphisms `ψ_u`, `ε_u`, the
//! symmetric linear maps `ξ(a, b)` of rank two, and the maps
//! `x ↦ x + [x,y]f(x,y)`, `y ↦ y - [x,y]f(y,x)`.

use num_traits::{One, Zero};

use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::linalg;
use crate::metabelian::{normalize_monomial, MetabelianElement};
use crate::perm::Permutation;
use crate::poly::CommPoly;
use crate::rational::Rational;
use crate::spec::AlgebraSpec;
use crate::symmetry::{is_symmetric, symmetric_basis};

/// The endomorphism `x_i ↦ images[i-1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Endomorphism<E> {
    spec: AlgebraSpec,
    images: Vec<E>,
}

impl<E: LieElement> Endomorphism<E> {
    pub fn new(spec: &AlgebraSpec, images: Vec<E>) -> Result<Self> {
        if images.len() != spec.rank() {
            return Err(Error::ImageCount { got: images.len(), rank: spec.rank() });
        }
        for img in &images {
            spec.check_same(img.spec())?;
        }
        Ok(Self { spec: *spec, images })
    }

    pub fn identity(spec: &AlgebraSpec) -> Result<Self> {
        let images = (1..=spec.rank()).map(|i| E::generator(spec, i)).collect::<Result<_>>()?;
        Ok(Self { spec: *spec, images })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn images(&self) -> &[E] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &E {
        &self.images[i - 1]
    }

    pub fn apply(&self, e: &E) -> Result<E> {
        self.spec.check_same(e.spec())?;
        e.substitute(&self.images)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.spec.check_same(&other.spec)?;
        let images = other.images.iter().map(|img| self.apply(img)).collect::<Result<_>>()?;
        Ok(Self { spec: self.spec, images })
    }

    /// Row `i` holds the degree-one coefficients of the image of `x_{i+1}`.
    pub fn linear_matrix(&self) -> Result<Vec<Vec<Rational>>> {
        self.images.iter().map(|img| img.coordinates(1)).collect()
    }

    /// Whether the induced map on `A/A'` is invertible, which characterizes
    /// automorphisms of these relatively free nilpotent-by-abelian algebras.
    pub fn is_automorphism(&self) -> Result<bool> {
        let n = self.spec.rank();
        Ok(linalg::rank(&self.linear_matrix()?, n) == n)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, img)| E::generator(&self.spec, i + 1).is_ok_and(|g| &g == img))
    }
}

/// `ψ_u = 1 + ad u` for `u` in the commutator ideal.
pub fn inner_psi(u: &MetabelianElement) -> Result<Endomorphism<MetabelianElement>> {
    if !u.linear_terms().is_empty() {
        return Err(Error::NonzeroLinearPart);
    }
    let spec = *u.spec();
    let images = (1..=spec.rank())
        .map(|i| {
            let x = MetabelianElement::generator(&spec, i)?;
            x.try_add(&x.bracket(u)?)
        })
        .collect::<Result<_>>()?;
    Endomorphism::new(&spec, images)
}

/// True when every homogeneous component of `e` has degree at least `c`.
pub fn in_lower_central_term<E: LieElement>(e: &E, c: usize) -> bool {
    e.degrees().first().is_none_or(|&d| d >= c)
}

/// `ε_u = Σ_{k=0}^{c-1} (1/k!) ad^k u` on `L_{n,c}`, where `ad u: v ↦ [v, u]`.
pub fn inner_eps(u: &MetabelianElement) -> Result<Endomorphism<MetabelianElement>> {
    let spec = *u.spec();
    let class = spec
        .class()
        .ok_or(Error::WrongVariety { expected: "nilpotent metabelian", got: spec })?;
    let images = (1..=spec.rank())
        .map(|i| {
            let mut term = MetabelianElement::generator(&spec, i)?;
            let mut sum = term.clone();
            for k in 1..class {
                term = term.bracket(u)?.scale(&Rational::new(One::one(), k.into()));
                if term.is_zero() {
                    break;
                }
                sum = sum.try_add(&term)?;
            }
            Ok(sum)
        })
        .collect::<Result<_>>()?;
    Endomorphism::new(&spec, images)
}

/// The linear endomorphism `x ↦ a x + b y`, `y ↦ c x + d y` of a rank-two algebra.
pub fn linear_map2<E: LieElement>(spec: &AlgebraSpec, [a, b, c, d]: [&Rational; 4]) -> Result<Endomorphism<E>> {
    if spec.rank() != 2 {
        return Err(Error::RankMismatch { left: 2, right: spec.rank() });
    }
    let (x, y) = (E::generator(spec, 1)?, E::generator(spec, 2)?);
    let images = vec![x.scale(a).try_add(&y.scale(b))?, x.scale(c).try_add(&y.scale(d))?];
    Endomorphism::new(spec, images)
}

/// `ξ(a, b): x ↦ a x + b y, y ↦ b x + a y` together with its inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearXi<E> {
    pub a: Rational,
    pub b: Rational,
    forward: Endomorphism<E>,
    inverse: Endomorphism<E>,
}

impl<E: LieElement> LinearXi<E> {
    pub fn new(spec: &AlgebraSpec, a: Rational, b: Rational) -> Result<Self> {
        let det = &a * &a - &b * &b;
        if det.is_zero() {
            return Err(Error::Singular(format!("a^2 - b^2 = 0 for a = {a}, b = {b}")));
        }
        let forward = linear_map2(spec, [&a, &b, &b, &a])?;
        let (ia, ib) = (&a / &det, -(&b / &det));
        let inverse = linear_map2(spec, [&ia, &ib, &ib, &ia])?;
        Ok(Self { a, b, forward, inverse })
    }

    pub fn determinant(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b
    }

    pub fn endomorphism(&self) -> &Endomorphism<E> {
        &self.forward
    }

    /// `x ↦ c⁻¹(a x - b y)`, `y ↦ c⁻¹(-b x + a y)` with `c = a² - b²`.
    pub fn inverse(&self) -> &Endomorphism<E> {
        &self.inverse
    }
}

pub fn linear_xi<E: LieElement>(spec: &AlgebraSpec, a: Rational, b: Rational) -> Result<LinearXi<E>> {
    LinearXi::new(spec, a, b)
}

/// `x ↦ x + [x,y]f`, `y ↦ y + [x,y]g` on a rank-two metabelian algebra.
pub fn iaut_l2(spec: &AlgebraSpec, f: &CommPoly, g: &CommPoly) -> Result<Endomorphism<MetabelianElement>> {
    if spec.rank() != 2 {
        return Err(Error::RankMismatch { left: 2, right: spec.rank() });
    }
    let xy = normalize_monomial(1, 2, &[], spec)?;
    let (x, y) = (MetabelianElement::generator(spec, 1)?, MetabelianElement::generator(spec, 2)?);
    let images = vec![x.try_add(&xy.module_act(f)?)?, y.try_add(&xy.module_act(g)?)?];
    Endomorphism::new(spec, images)
}

/// `x ↦ x + [x,y]f(x,y)`, `y ↦ y - [x,y]f(y,x)` on `L_{2,c}`.
pub fn phi_f(f: &CommPoly, class: usize) -> Result<Endomorphism<MetabelianElement>> {
    let spec = AlgebraSpec::nilpotent(2, class)?;
    let swapped = f.permute(&Permutation::transposition(2, 1, 2)?)?;
    iaut_l2(&spec, f, &-&swapped)
}

/// A symmetric element whose image is not symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct PreservationFailure<E> {
    pub source: E,
    pub image: E,
    pub permutation: Permutation,
    pub difference: E,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Preservation<E> {
    pub preserved: bool,
    pub checked: usize,
    pub failure: Option<PreservationFailure<E>>,
}

/// Checks that the images of the given elements are symmetric.
pub fn preserves_elements<E: LieElement>(phi: &Endomorphism<E>, elements: &[E]) -> Result<Preservation<E>> {
    for (k, s) in elements.iter().enumerate() {
        let image = phi.apply(s)?;
        let w = is_symmetric(&image);
        if let Some((permutation, difference)) = w.witness {
            return Ok(Preservation {
                preserved: false,
                checked: k + 1,
                failure: Some(PreservationFailure { source: s.clone(), image, permutation, difference }),
            });
        }
    }
    Ok(Preservation { preserved: true, checked: elements.len(), failure: None })
}

/// Whether `φ` sends every element of the symmetric bases of degrees `1..=dmax` to a
/// symmetric element.
pub fn preserves_symmetric<E: LieElement>(phi: &Endomorphism<E>, dmax: usize) -> Result<Preservation<E>> {
    let mut checked = 0;
    for d in 1..=dmax {
        if !phi.spec.keeps_degree(d) {
            break;
        }
        let basis: Vec<E> = symmetric_basis(&phi.spec, d)?;
        let p = preserves_elements(phi, &basis)?;
        checked += p.checked;
        if !p.preserved {
            return Ok(Preservation { checked, ..p });
        }
    }
    Ok(Preservation { preserved: true, checked, failure: None })
}
