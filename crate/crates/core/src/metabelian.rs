//! Normal forms in the free metabelian Lie algebra `F_n` and its nilpotent quotients
//! `L_{n,c}`.
//!
//! Every element is a linear part plus a combination of Bahturin monomials
//! `[x_{k1},x_{k2}]x_{k3}⋯x_{kl}` with `k1 > k2 ≤ k3 ≤ ⋯ ≤ kl`, which form a basis of
//! the commutator ideal. The tail is a multiset because the adjoint operators
//! commute on the commutator ideal of a metabelian algebra.
//!
//! Products are brought back to this basis by one oriented form of the Jacobi
//! identity,
//!
//! ```text
//! [x_a,x_b]x_m = [x_a,x_m]x_b + [x_m,x_b]x_a
//! ```
//!
//! applied while the smallest tail index is below the second head index.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::CommPoly;
use crate::rational::{write_coefficient, Rational};
use crate::spec::AlgebraSpec;

/// `[x_{k1},x_{k2}]x_{t_1}⋯x_{t_m}` with `k1 > k2 ≤ min(t)`, tail sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BahturinMonomial {
    head: (usize, usize),
    tail: Vec<usize>,
}

impl BahturinMonomial {
    /// Validates the normal-form shape; the tail may be given in any order.
    pub fn new(k1: usize, k2: usize, mut tail: Vec<usize>) -> Result<Self> {
        tail.sort_unstable();
        if k1 <= k2 || tail.first().is_some_and(|&m| m < k2) {
            return Err(Error::NotLieElement(format!(
                "[x{k1},x{k2}] with tail {tail:?} is not a Bahturin monomial"
            )));
        }
        Ok(Self { head: (k1, k2), tail })
    }

    fn from_normal(k1: usize, k2: usize, tail: Vec<usize>) -> Self {
        debug_assert!(k1 > k2 && tail.first().is_none_or(|&m| m >= k2));
        debug_assert!(tail.windows(2).all(|w| w[0] <= w[1]));
        Self { head: (k1, k2), tail }
    }

    pub fn head(&self) -> (usize, usize) {
        self.head
    }

    pub fn tail(&self) -> &[usize] {
        &self.tail
    }

    pub fn degree(&self) -> usize {
        2 + self.tail.len()
    }

    fn max_index(&self) -> usize {
        self.head.0.max(self.tail.last().copied().unwrap_or(0))
    }
}

/// Graded first, then head pair, then tail, lexicographically.
impl Ord for BahturinMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.head.cmp(&other.head))
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

impl PartialOrd for BahturinMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BahturinMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[x{},x{}]", self.head.0, self.head.1)?;
        write!(f, "{}", self.tail.iter().map(|t| format!("x{t}")).join(" "))
    }
}

/// Rewrites `[x_a,x_b]x_{tail}` into signed Bahturin monomials.
///
/// The second head index strictly decreases along every rewrite, so the recursion
/// terminates. Terms above `max_degree` are dropped.
fn rewrite(a: usize, b: usize, mut tail: Vec<usize>, max_degree: Option<usize>, sign: i8, out: &mut Vec<(BahturinMonomial, i8)>) {
    if a == b || max_degree.is_some_and(|c| tail.len() + 2 > c) {
        return;
    }
    let (a, b, sign) = if a < b { (b, a, -sign) } else { (a, b, sign) };
    tail.sort_unstable();
    match tail.first() {
        Some(&m) if m < b => {
            let rest = &tail[1..];
            let mut via_b = rest.to_vec();
            via_b.push(b);
            let mut via_a = rest.to_vec();
            via_a.push(a);
            rewrite(a, m, via_b, max_degree, sign, out);
            rewrite(m, b, via_a, max_degree, sign, out);
        }
        _ => out.push((BahturinMonomial::from_normal(a, b, tail), sign)),
    }
}

/// An element of `F_n` or `L_{n,c}` in Bahturin normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MetabelianElement {
    spec: AlgebraSpec,
    linear: BTreeMap<usize, Rational>,
    commutator: BTreeMap<BahturinMonomial, Rational>,
}

/// `[x_a,x_b]x_{tail}` in normal form.
pub fn normalize_monomial(a: usize, b: usize, tail: &[usize], spec: &AlgebraSpec) -> Result<MetabelianElement> {
    let mut out = MetabelianElement::zero(spec)?;
    for &i in [a, b].iter().chain(tail) {
        spec.check_index(i)?;
    }
    out.accumulate(a, b, tail.to_vec(), &Rational::one());
    Ok(out)
}

/// All Bahturin monomials of degree `d ≥ 2` over `n` generators, in canonical order.
pub fn bahturin_monomials(rank: usize, degree: usize) -> Vec<BahturinMonomial> {
    if degree < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for k1 in 1..=rank {
        for k2 in 1..k1 {
            for tail in (k2..=rank).combinations_with_replacement(degree - 2) {
                out.push(BahturinMonomial::from_normal(k1, k2, tail));
            }
        }
    }
    out.sort();
    out
}

impl MetabelianElement {
    fn empty(spec: &AlgebraSpec) -> Self {
        Self { spec: *spec, linear: BTreeMap::new(), commutator: BTreeMap::new() }
    }

    fn add_linear(&mut self, i: usize, c: Rational) {
        add_entry(&mut self.linear, i, c);
    }

    fn add_monomial(&mut self, m: BahturinMonomial, c: Rational) {
        if self.spec.keeps_degree(m.degree()) {
            add_entry(&mut self.commutator, m, c);
        }
    }

    /// Adds `coeff · [x_a,x_b]x_{tail}` after normalization.
    fn accumulate(&mut self, a: usize, b: usize, tail: Vec<usize>, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let mut terms = Vec::with_capacity(2);
        rewrite(a, b, tail, self.spec.class(), 1, &mut terms);
        for (m, sign) in terms {
            let c = if sign > 0 { coeff.clone() } else { -coeff.clone() };
            self.add_monomial(m, c);
        }
    }

    /// Builds an element from a linear part and already-normal monomials.
    pub fn from_parts<L, C>(spec: &AlgebraSpec, linear: L, commutator: C) -> Result<Self>
    where
        L: IntoIterator<Item = (usize, Rational)>,
        C: IntoIterator<Item = (BahturinMonomial, Rational)>,
    {
        let mut out = Self::zero(spec)?;
        for (i, c) in linear {
            spec.check_index(i)?;
            out.add_linear(i, c);
        }
        for (m, c) in commutator {
            if m.max_index() > spec.rank() {
                return Err(Error::IndexOutOfRange { index: m.max_index(), rank: spec.rank() });
            }
            out.add_monomial(m, c);
        }
        Ok(out)
    }

    /// A single basis monomial with coefficient one (dropped if truncated away).
    pub fn monomial(spec: &AlgebraSpec, m: BahturinMonomial) -> Result<Self> {
        Self::from_parts(spec, [], [(m, Rational::one())])
    }

    pub fn linear_terms(&self) -> &BTreeMap<usize, Rational> {
        &self.linear
    }

    pub fn commutator_terms(&self) -> &BTreeMap<BahturinMonomial, Rational> {
        &self.commutator
    }

    /// `v_l` in the split `v = v_l + v_0`.
    pub fn linear_part(&self) -> Self {
        Self { spec: self.spec, linear: self.linear.clone(), commutator: BTreeMap::new() }
    }

    /// `v_0` in the split `v = v_l + v_0`.
    pub fn commutator_part(&self) -> Self {
        Self { spec: self.spec, linear: BTreeMap::new(), commutator: self.commutator.clone() }
    }

    pub fn linear_coefficient(&self, i: usize) -> Rational {
        self.linear.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, m: &BahturinMonomial) -> Rational {
        self.commutator.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The action of `p ∈ K[X_n]` on the commutator ideal: `x_i` acts as `ad x_i`.
    pub fn module_act(&self, p: &CommPoly) -> Result<Self> {
        if !self.linear.is_empty() {
            return Err(Error::NonzeroLinearPart);
        }
        if p.rank() != self.spec.rank() {
            return Err(Error::RankMismatch { left: self.spec.rank(), right: p.rank() });
        }
        let mut out = Self::empty(&self.spec);
        for (m, c) in &self.commutator {
            for (e, k) in p.terms() {
                let mut tail = m.tail.clone();
                tail.extend(e.indices());
                out.accumulate(m.head.0, m.head.1, tail, &(c * k));
            }
        }
        Ok(out)
    }

    /// The image in `L_{n,c}`: every term of degree above `c` is removed.
    pub fn truncate(&self, class: usize) -> Result<Self> {
        let spec = self.spec.truncated(class)?;
        let mut out = Self::empty(&spec);
        out.linear = self.linear.clone();
        for (m, c) in &self.commutator {
            out.add_monomial(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Re-reads this element in another metabelian algebra of the same rank,
    /// truncating if the target is nilpotent.
    pub fn reinterpret(&self, spec: &AlgebraSpec) -> Result<Self> {
        if spec.rank() != self.spec.rank() {
            return Err(Error::RankMismatch { left: self.spec.rank(), right: spec.rank() });
        }
        Self::from_parts(spec, self.linear.clone(), self.commutator.clone())
    }

    fn check_spec(&self, other: &Self) -> Result<()> {
        self.spec.check_same(&other.spec)
    }
}

fn add_entry<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl LieElement for MetabelianElement {
    fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    fn zero(spec: &AlgebraSpec) -> Result<Self> {
        if spec.is_free() {
            return Err(Error::WrongVariety { expected: "metabelian or nilpotent metabelian", got: *spec });
        }
        Ok(Self::empty(spec))
    }

    fn generator(spec: &AlgebraSpec, index: usize) -> Result<Self> {
        spec.check_index(index)?;
        let mut out = Self::zero(spec)?;
        out.add_linear(index, Rational::one());
        Ok(out)
    }

    fn is_zero(&self) -> bool {
        self.linear.is_empty() && self.commutator.is_empty()
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (i, c) in &other.linear {
            out.add_linear(*i, c.clone());
        }
        for (m, c) in &other.commutator {
            add_entry(&mut out.commutator, m.clone(), c.clone());
        }
        Ok(out)
    }

    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::empty(&self.spec);
        }
        Self {
            spec: self.spec,
            linear: self.linear.iter().map(|(i, k)| (*i, k * c)).collect(),
            commutator: self.commutator.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Bilinear extension of `[x_i,x_j]`, `[M, x_k] = M x_k` and `[M, M'] = 0`.
    fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        let mut out = Self::empty(&self.spec);
        for (i, a) in &self.linear {
            for (j, b) in &other.linear {
                out.accumulate(*i, *j, Vec::new(), &(a * b));
            }
        }
        for (m, a) in &self.commutator {
            for (k, b) in &other.linear {
                let mut tail = m.tail.clone();
                tail.push(*k);
                out.accumulate(m.head.0, m.head.1, tail, &(a * b));
            }
        }
        for (k, a) in &self.linear {
            for (m, b) in &other.commutator {
                let mut tail = m.tail.clone();
                tail.push(*k);
                out.accumulate(m.head.0, m.head.1, tail, &-(a * b));
            }
        }
        Ok(out)
    }

    fn permute(&self, perm: &Permutation) -> Result<Self> {
        perm.check_degree(self.spec.rank())?;
        let mut out = Self::empty(&self.spec);
        for (i, c) in &self.linear {
            out.add_linear(perm.apply(*i), c.clone());
        }
        for (m, c) in &self.commutator {
            let tail = m.tail.iter().map(|&t| perm.apply(t)).collect();
            out.accumulate(perm.apply(m.head.0), perm.apply(m.head.1), tail, c);
        }
        Ok(out)
    }

    fn component(&self, degree: usize) -> Self {
        let mut out = Self::empty(&self.spec);
        if degree == 1 {
            out.linear = self.linear.clone();
        } else {
            out.commutator = self
                .commutator
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
        }
        out
    }

    fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if !self.linear.is_empty() {
            out.push(1);
        }
        out.extend(self.commutator.keys().map(BahturinMonomial::degree).dedup());
        out
    }

    fn graded_basis(spec: &AlgebraSpec, degree: usize) -> Result<Vec<Self>> {
        Self::zero(spec)?;
        if degree == 0 || !spec.keeps_degree(degree) {
            return Ok(Vec::new());
        }
        if degree == 1 {
            return (1..=spec.rank()).map(|i| Self::generator(spec, i)).collect();
        }
        bahturin_monomials(spec.rank(), degree)
            .into_iter()
            .map(|m| Self::monomial(spec, m))
            .collect()
    }

    fn coordinates(&self, degree: usize) -> Result<Vec<Rational>> {
        if degree == 1 {
            return Ok((1..=self.spec.rank()).map(|i| self.linear_coefficient(i)).collect());
        }
        if !self.spec.keeps_degree(degree) {
            return Ok(Vec::new());
        }
        Ok(bahturin_monomials(self.spec.rank(), degree).iter().map(|m| self.coefficient(m)).collect())
    }

    /// Substitution `x_i ↦ images[i-1]`; a monomial `[x_a,x_b]x_{t_1}⋯` becomes
    /// `[[images_a, images_b], images_{t_1}], …`.
    fn substitute(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.spec.rank() {
            return Err(Error::ImageCount { got: images.len(), rank: self.spec.rank() });
        }
        for img in images {
            self.check_spec(img)?;
        }
        let mut out = Self::empty(&self.spec);
        for (i, c) in &self.linear {
            out = out.try_add(&images[i - 1].scale(c))?;
        }
        for (m, c) in &self.commutator {
            let mut term = images[m.head.0 - 1].bracket(&images[m.head.1 - 1])?;
            for &t in &m.tail {
                if term.is_zero() {
                    break;
                }
                term = term.bracket(&images[t - 1])?;
            }
            out = out.try_add(&term.scale(c))?;
        }
        Ok(out)
    }
}

/// Linear terms by index, then monomials in basis order: `x1 - 1/2 [x2,x1]x1 x2`.
impl fmt::Display for MetabelianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in &self.linear {
            write_coefficient(&mut out, c, first, " ");
            out.push_str(&format!("x{i}"));
            first = false;
        }
        for (m, c) in &self.commutator {
            write_coefficient(&mut out, c, first, " ");
            out.push_str(&m.to_string());
            first = false;
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn f(n: usize) -> AlgebraSpec {
        AlgebraSpec::metabelian(n).unwrap()
    }

    fn x(spec: &AlgebraSpec, i: usize) -> MetabelianElement {
        MetabelianElement::generator(spec, i).unwrap()
    }

    fn mono(spec: &AlgebraSpec, a: usize, b: usize, tail: &[usize]) -> MetabelianElement {
        MetabelianElement::monomial(spec, BahturinMonomial::new(a, b, tail.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let s = f(3);
        assert!(normalize_monomial(1, 1, &[], &s).unwrap().is_zero());
        assert_eq!(normalize_monomial(1, 2, &[], &s).unwrap(), mono(&s, 2, 1, &[]).neg());
        let expected = mono(&s, 3, 1, &[2]).try_sub(&mono(&s, 2, 1, &[3])).unwrap();
        assert_eq!(normalize_monomial(3, 2, &[1], &s).unwrap(), expected);
        let c3 = AlgebraSpec::nilpotent(2, 3).unwrap();
        assert!(normalize_monomial(2, 1, &[1, 2], &c3).unwrap().is_zero());
        assert!(matches!(normalize_monomial(4, 1, &[], &s), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn bracket_examples() {
        let s = f(3);
        assert_eq!(x(&s, 2).bracket(&x(&s, 1)).unwrap(), mono(&s, 2, 1, &[]));
        assert!(mono(&s, 2, 1, &[]).bracket(&mono(&s, 3, 1, &[])).unwrap().is_zero());
        let s2 = f(2);
        let v = x(&s2, 1).try_add(&x(&s2, 2)).unwrap();
        let expected = mono(&s2, 2, 1, &[1]).try_add(&mono(&s2, 2, 1, &[2])).unwrap().neg();
        assert_eq!(v.bracket(&mono(&s2, 2, 1, &[])).unwrap(), expected);
    }

    #[test]
    fn module_act_examples() {
        let s = f(3);
        let c = mono(&s, 2, 1, &[]);
        assert_eq!(c.module_act(&CommPoly::one(3)).unwrap(), c);
        let x1 = CommPoly::variable(3, 1).unwrap();
        assert_eq!(c.module_act(&x1).unwrap(), mono(&s, 2, 1, &[1]));
        let expected = mono(&s, 3, 1, &[2]).try_sub(&mono(&s, 2, 1, &[3])).unwrap();
        assert_eq!(mono(&s, 3, 2, &[]).module_act(&x1).unwrap(), expected);
        assert_eq!(x(&s, 1).module_act(&x1), Err(Error::NonzeroLinearPart));
    }

    #[test]
    fn truncate_examples() {
        let s = f(2);
        let e = x(&s, 1).try_add(&mono(&s, 2, 1, &[1])).unwrap();
        let t = e.truncate(2).unwrap();
        assert_eq!(t.to_string(), "x1");
        assert_eq!(t.spec().class(), Some(2));
        let m = mono(&s, 2, 1, &[1, 2]);
        assert_eq!(m.truncate(4).unwrap().commutator_terms(), m.commutator_terms());
        assert!(e.truncate(1).is_err());
    }

    #[test]
    fn basis_counts() {
        let n2: Vec<String> = bahturin_monomials(2, 3).iter().map(|m| m.to_string()).collect();
        assert_eq!(n2, ["[x2,x1]x1", "[x2,x1]x2"]);
        assert_eq!(bahturin_monomials(3, 3).len(), 8);
        assert_eq!(bahturin_monomials(2, 5).len(), 4);
        let c3 = AlgebraSpec::nilpotent(2, 3).unwrap();
        assert!(MetabelianElement::graded_basis(&c3, 4).unwrap().is_empty());
        assert_eq!(MetabelianElement::graded_basis(&c3, 1).unwrap().len(), 2);
    }

    #[test]
    fn display() {
        let s = f(2);
        let e = x(&s, 2)
            .try_add(&x(&s, 1))
            .unwrap()
            .try_add(&mono(&s, 2, 1, &[1, 2]).scale(&rat(-1, 2)))
            .unwrap()
            .try_add(&mono(&s, 2, 1, &[]).scale(&int(3)))
            .unwrap();
        assert_eq!(e.to_string(), "x1 + x2 + 3 [x2,x1] - 1/2 [x2,x1]x1 x2");
        assert_eq!(MetabelianElement::zero(&s).unwrap().to_string(), "0");
        assert_eq!(normalize_monomial(1, 2, &[2], &s).unwrap().to_string(), "-[x2,x1]x2");
    }

    #[test]
    fn permute_relabels_and_renormalizes() {
        let s = f(2);
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(x(&s, 1).permute(&swap).unwrap(), x(&s, 2));
        assert_eq!(mono(&s, 2, 1, &[]).permute(&swap).unwrap(), mono(&s, 2, 1, &[]).neg());
        let sym = mono(&s, 2, 1, &[1]).try_sub(&mono(&s, 2, 1, &[2])).unwrap();
        assert_eq!(sym.permute(&swap).unwrap(), sym);
    }
}
