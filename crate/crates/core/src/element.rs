//! The common interface of Lie algebra elements, and a dynamically typed wrapper.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::free_lie::FreeLieElement;
use crate::metabelian::MetabelianElement;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::spec::AlgebraSpec;

/// Operations shared by elements of `L_n`, `F_n` and `L_{n,c}`.
///
/// Every algebra is graded by degree; [`LieElement::graded_basis`] and
/// [`LieElement::coordinates`] identify each graded component with `K^dim`.
pub trait LieElement: Clone + PartialEq + fmt::Debug + fmt::Display + Sized {
    fn spec(&self) -> &AlgebraSpec;

    fn zero(spec: &AlgebraSpec) -> Result<Self>;

    /// The generator `x_index`, 1-based.
    fn generator(spec: &AlgebraSpec, index: usize) -> Result<Self>;

    fn is_zero(&self) -> bool;

    fn try_add(&self, other: &Self) -> Result<Self>;

    fn scale(&self, c: &Rational) -> Self;

    /// The Lie bracket `[self, other]`.
    fn bracket(&self, other: &Self) -> Result<Self>;

    /// The relabelling `x_i ↦ x_{π(i)}`, renormalized.
    fn permute(&self, perm: &Permutation) -> Result<Self>;

    /// Homogeneous component of the given degree.
    fn component(&self, degree: usize) -> Self;

    /// Degrees with a nonzero homogeneous component, ascending.
    fn degrees(&self) -> Vec<usize>;

    /// A basis of the degree-`d` component, in canonical order.
    fn graded_basis(spec: &AlgebraSpec, degree: usize) -> Result<Vec<Self>>;

    /// Coordinates of the degree-`d` component with respect to `graded_basis(d)`.
    fn coordinates(&self, degree: usize) -> Result<Vec<Rational>>;

    /// Evaluates the element at `x_i ↦ images[i-1]`.
    fn substitute(&self, images: &[Self]) -> Result<Self>;

    fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn max_degree(&self) -> Option<usize> {
        self.degrees().last().copied()
    }

    /// `x_1 + ⋯ + x_n`.
    fn generator_sum(spec: &AlgebraSpec) -> Result<Self> {
        let mut out = Self::zero(spec)?;
        for i in 1..=spec.rank() {
            out = out.try_add(&Self::generator(spec, i)?)?;
        }
        Ok(out)
    }

    /// `Σ coeffs[i] · elements[i]`; an empty combination is the zero of `spec`.
    fn combination(spec: &AlgebraSpec, coeffs: &[Rational], elements: &[Self]) -> Result<Self> {
        let mut out = Self::zero(spec)?;
        for (c, e) in coeffs.iter().zip(elements) {
            if !c.is_zero() {
                out = out.try_add(&e.scale(c))?;
            }
        }
        Ok(out)
    }

    /// The element of degree `d` with the given coordinates.
    fn from_coordinates(spec: &AlgebraSpec, degree: usize, coords: &[Rational]) -> Result<Self> {
        let basis = Self::graded_basis(spec, degree)?;
        if basis.len() != coords.len() {
            return Err(Error::RankMismatch { left: basis.len(), right: coords.len() });
        }
        Self::combination(spec, coords, &basis)
    }
}

/// An element of any supported algebra, chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Free(FreeLieElement),
    Metabelian(MetabelianElement),
}

impl From<FreeLieElement> for Element {
    fn from(e: FreeLieElement) -> Self {
        Element::Free(e)
    }
}

impl From<MetabelianElement> for Element {
    fn from(e: MetabelianElement) -> Self {
        Element::Metabelian(e)
    }
}

impl Element {
    pub fn as_metabelian(&self) -> Option<&MetabelianElement> {
        match self {
            Element::Metabelian(e) => Some(e),
            Element::Free(_) => None,
        }
    }

    pub fn as_free(&self) -> Option<&FreeLieElement> {
        match self {
            Element::Free(e) => Some(e),
            Element::Metabelian(_) => None,
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::SpecMismatch { left: *self.spec(), right: *other.spec() }
    }

    fn lift<F, M>(spec: &AlgebraSpec, free: F, meta: M) -> Result<Self>
    where
        F: FnOnce() -> Result<FreeLieElement>,
        M: FnOnce() -> Result<MetabelianElement>,
    {
        if spec.is_free() {
            free().map(Element::Free)
        } else {
            meta().map(Element::Metabelian)
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Free(e) => e.fmt(f),
            Element::Metabelian(e) => e.fmt(f),
        }
    }
}

impl LieElement for Element {
    fn spec(&self) -> &AlgebraSpec {
        match self {
            Element::Free(e) => e.spec(),
            Element::Metabelian(e) => e.spec(),
        }
    }

    fn zero(spec: &AlgebraSpec) -> Result<Self> {
        Self::lift(spec, || FreeLieElement::zero(spec), || MetabelianElement::zero(spec))
    }

    fn generator(spec: &AlgebraSpec, index: usize) -> Result<Self> {
        Self::lift(
            spec,
            || FreeLieElement::generator(spec, index),
            || MetabelianElement::generator(spec, index),
        )
    }

    fn is_zero(&self) -> bool {
        match self {
            Element::Free(e) => e.is_zero(),
            Element::Metabelian(e) => e.is_zero(),
        }
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Element::Free(a), Element::Free(b)) => a.try_add(b).map(Element::Free),
            (Element::Metabelian(a), Element::Metabelian(b)) => a.try_add(b).map(Element::Metabelian),
            _ => Err(self.mismatch(other)),
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        match self {
            Element::Free(e) => Element::Free(e.scale(c)),
            Element::Metabelian(e) => Element::Metabelian(e.scale(c)),
        }
    }

    fn bracket(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Element::Free(a), Element::Free(b)) => a.bracket(b).map(Element::Free),
            (Element::Metabelian(a), Element::Metabelian(b)) => a.bracket(b).map(Element::Metabelian),
            _ => Err(self.mismatch(other)),
        }
    }

    fn permute(&self, perm: &Permutation) -> Result<Self> {
        match self {
            Element::Free(e) => e.permute(perm).map(Element::Free),
            Element::Metabelian(e) => e.permute(perm).map(Element::Metabelian),
        }
    }

    fn component(&self, degree: usize) -> Self {
        match self {
            Element::Free(e) => Element::Free(e.component(degree)),
            Element::Metabelian(e) => Element::Metabelian(e.component(degree)),
        }
    }

    fn degrees(&self) -> Vec<usize> {
        match self {
            Element::Free(e) => e.degrees(),
            Element::Metabelian(e) => e.degrees(),
        }
    }

    fn graded_basis(spec: &AlgebraSpec, degree: usize) -> Result<Vec<Self>> {
        if spec.is_free() {
            Ok(FreeLieElement::graded_basis(spec, degree)?.into_iter().map(Element::Free).collect())
        } else {
            Ok(MetabelianElement::graded_basis(spec, degree)?
                .into_iter()
                .map(Element::Metabelian)
                .collect())
        }
    }

    fn coordinates(&self, degree: usize) -> Result<Vec<Rational>> {
        match self {
            Element::Free(e) => e.coordinates(degree),
            Element::Metabelian(e) => e.coordinates(degree),
        }
    }

    fn substitute(&self, images: &[Self]) -> Result<Self> {
        match self {
            Element::Free(e) => {
                let images = images
                    .iter()
                    .map(|i| i.as_free().cloned().ok_or_else(|| self.mismatch(i)))
                    .collect::<Result<Vec<_>>>()?;
                e.substitute(&images).map(Element::Free)
            }
            Element::Metabelian(e) => {
                let images = images
                    .iter()
                    .map(|i| i.as_metabelian().cloned().ok_or_else(|| self.mismatch(i)))
                    .collect::<Result<Vec<_>>>()?;
                e.substitute(&images).map(Element::Metabelian)
            }
        }
    }
}
