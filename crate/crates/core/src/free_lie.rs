//! The free Lie algebra `L_n` inside the free associative algebra `K⟨x_1,…,x_n⟩`.
//!
//! Elements are linear combinations of words; the bracket is the commutator
//! `uv - vu`. Only generators, linear combinations and brackets construct values,
//! so every element is a Lie element.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::metabelian::{BahturinMonomial, MetabelianElement};
use crate::perm::Permutation;
use crate::poly::ExponentVector;
use crate::rational::{write_coefficient, Rational};
use crate::spec::AlgebraSpec;

/// A noncommutative monomial; letters are generator indices `1..=n`.
///
/// Ordered by length first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NCWord(Vec<usize>);

impl NCWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn concat(&self, other: &Self) -> Self {
        let mut w = Vec::with_capacity(self.0.len() + other.0.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        Self(w)
    }
}

impl Ord for NCWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NCWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().map(|l| format!("x{l}")).join(""))
    }
}

/// Strictly smaller than each of its proper rotations.
pub fn is_lyndon(word: &[usize]) -> bool {
    !word.is_empty()
        && (1..word.len()).all(|k| {
            let rotation = word[k..].iter().chain(&word[..k]);
            word.iter().cmp(rotation) == Ordering::Less
        })
}

/// A word that is lexicographically smaller than all of its proper rotations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord(Vec<usize>);

impl LyndonWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if is_lyndon(&letters) {
            Ok(Self(letters))
        } else {
            Err(Error::NotLyndon(NCWord(letters).to_string()))
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w = u·v` where `v` is the lexicographically smallest proper suffix (equivalently the
    /// longest proper Lyndon suffix). `None` for single letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.0.len() < 2 {
            return None;
        }
        let split = (1..self.0.len()).min_by(|&i, &j| self.0[i..].cmp(&self.0[j..]))?;
        Some((LyndonWord(self.0[..split].to_vec()), LyndonWord(self.0[split..].to_vec())))
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(""))
    }
}

/// All Lyndon words of length `d` over `{1..n}`, in lexicographic order.
pub fn lyndon_words(n: usize, d: usize) -> Vec<LyndonWord> {
    let mut out = Vec::new();
    if n == 0 || d == 0 {
        return out;
    }
    // Duval's generation of Lyndon words of length ≤ d in lexicographic order.
    let mut w = vec![1usize];
    loop {
        if w.len() == d {
            out.push(LyndonWord(w.clone()));
        }
        let m = w.len();
        while w.len() < d {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&n) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

type Terms = BTreeMap<NCWord, Rational>;

fn add_word(terms: &mut Terms, w: NCWord, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(w) {
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

fn commutator(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (u, c) in a {
        for (v, k) in b {
            let ck = c * k;
            add_word(&mut out, u.concat(v), ck.clone());
            add_word(&mut out, v.concat(u), -ck);
        }
    }
    out
}

/// Expansions of standard bracketings, memoized by word.
#[derive(Debug, Default)]
struct DynkinCache(HashMap<Vec<usize>, Terms>);

impl DynkinCache {
    fn expand(&mut self, w: &LyndonWord) -> Terms {
        if let Some(t) = self.0.get(&w.0) {
            return t.clone();
        }
        let t = match w.standard_factorization() {
            None => Terms::from([(NCWord(w.0.clone()), Rational::one())]),
            Some((u, v)) => {
                let (tu, tv) = (self.expand(&u), self.expand(&v));
                commutator(&tu, &tv)
            }
        };
        self.0.insert(w.0.clone(), t.clone());
        t
    }
}

/// An element of `L_n`, stored as a combination of words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeLieElement {
    spec: AlgebraSpec,
    terms: Terms,
}

impl FreeLieElement {
    pub fn words(&self) -> &BTreeMap<NCWord, Rational> {
        &self.terms
    }

    /// Coefficient of a word in the associative expansion.
    pub fn word_coefficient(&self, letters: &[usize]) -> Rational {
        self.terms.get(&NCWord(letters.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_spec(&self, other: &Self) -> Result<()> {
        self.spec.check_same(&other.spec)
    }

    /// The linear image of a free Lie element; errors for words of length 0.
    fn from_terms(spec: &AlgebraSpec, terms: Terms) -> Self {
        Self { spec: *spec, terms }
    }
}

/// `e1·e2 - e2·e1`, rejecting results above the configured degree cap.
pub fn free_bracket(e1: &FreeLieElement, e2: &FreeLieElement) -> Result<FreeLieElement> {
    e1.check_spec(e2)?;
    if let (Some(d1), Some(d2)) = (e1.max_degree(), e2.max_degree()) {
        let cap = e1.spec.degree_cap();
        if d1 + d2 > cap {
            return Err(Error::DegreeCapExceeded { degree: d1 + d2, cap });
        }
    }
    Ok(FreeLieElement::from_terms(&e1.spec, commutator(&e1.terms, &e2.terms)))
}

/// The standard bracketing of a Lyndon word.
pub fn dynkin_bracket(spec: &AlgebraSpec, w: &LyndonWord) -> Result<FreeLieElement> {
    if !spec.is_free() {
        return Err(Error::WrongVariety { expected: "free", got: *spec });
    }
    if let Some(&bad) = w.0.iter().find(|&&l| l == 0 || l > spec.rank()) {
        return Err(Error::IndexOutOfRange { index: bad, rank: spec.rank() });
    }
    if w.len() > spec.degree_cap() {
        return Err(Error::DegreeCapExceeded { degree: w.len(), cap: spec.degree_cap() });
    }
    Ok(FreeLieElement::from_terms(spec, DynkinCache::default().expand(w)))
}

/// Coordinates in the Lyndon basis: `e = Σ c_w · dynkin_bracket(w)`.
///
/// Each standard bracketing has its own word as least word, with coefficient one, so
/// repeatedly cancelling the least remaining word is a triangular elimination. A
/// least word that is not Lyndon means the input was not a Lie element.
pub fn lyndon_decompose(e: &FreeLieElement) -> Result<BTreeMap<LyndonWord, Rational>> {
    let mut cache = DynkinCache::default();
    let mut rest = e.terms.clone();
    let mut out = BTreeMap::new();
    while let Some((w, c)) = rest.pop_first() {
        if !is_lyndon(&w.0) {
            return Err(Error::NotLieElement(format!("leading word {w} is not Lyndon")));
        }
        let lw = LyndonWord(w.0);
        for (u, k) in cache.expand(&lw) {
            if u.0 != lw.0 {
                add_word(&mut rest, u, -(&c * k));
            }
        }
        out.insert(lw, c);
    }
    Ok(out)
}

/// The image of `e` in `F_n` or `L_{n,c}`.
///
/// Uses the faithful representation of the free metabelian Lie algebra in which
/// `x_i` acts as a triangular matrix with `t_i` on the diagonal and the free module
/// generator `e_i` below it: a word `x_{i1} x_{i2} ⋯ x_{id}` maps to
/// `e_{i1} · t_{i2}⋯t_{id}`, and the Bahturin monomial `[x_a,x_b]x_T` maps to
/// `e_a t_b t^T - e_b t_a t^T`. Coordinates are then read off from the `e_a` terms
/// whose least variable is below `a`, and the reconstruction is checked exactly.
/// No Jacobi rewriting is involved.
pub fn project_metabelian(e: &FreeLieElement, spec: &AlgebraSpec) -> Result<MetabelianElement> {
    if spec.rank() != e.spec.rank() {
        return Err(Error::RankMismatch { left: e.spec.rank(), right: spec.rank() });
    }
    MetabelianElement::zero(spec)?;
    let rank = spec.rank();
    let mut linear = Vec::new();
    let mut module: BTreeMap<(usize, ExponentVector), Rational> = BTreeMap::new();
    let mut abelian: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
    for (w, c) in &e.terms {
        match w.0.as_slice() {
            [] => return Err(Error::NotLieElement("constant term".into())),
            [i] => linear.push((*i, c.clone())),
            [first, rest @ ..] => {
                *module.entry((*first, ExponentVector::from_indices(rank, rest))).or_insert_with(Rational::zero) += c;
                *abelian.entry(ExponentVector::from_indices(rank, &w.0)).or_insert_with(Rational::zero) += c;
            }
        }
    }
    module.retain(|_, c| !c.is_zero());
    if abelian.values().any(|c| !c.is_zero()) {
        return Err(Error::NotLieElement("nonzero abelianization in degree ≥ 2".into()));
    }

    let mut monomials = Vec::new();
    let mut rebuilt: BTreeMap<(usize, ExponentVector), Rational> = BTreeMap::new();
    for ((a, m), c) in &module {
        let Some(b) = m.min_index() else { continue };
        if b >= *a {
            continue;
        }
        let mut tail = m.indices();
        tail.remove(0);
        let mono = BahturinMonomial::new(*a, b, tail.clone())?;
        let mut second = tail;
        second.push(*a);
        *rebuilt.entry((*a, m.clone())).or_insert_with(Rational::zero) += c;
        *rebuilt.entry((b, ExponentVector::from_indices(rank, &second))).or_insert_with(Rational::zero) -= c;
        monomials.push((mono, c.clone()));
    }
    rebuilt.retain(|_, c| !c.is_zero());
    if rebuilt != module {
        return Err(Error::NotLieElement("module image is not in the span of Bahturin monomials".into()));
    }
    MetabelianElement::from_parts(spec, linear, monomials)
}

impl LieElement for FreeLieElement {
    fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    fn zero(spec: &AlgebraSpec) -> Result<Self> {
        if !spec.is_free() {
            return Err(Error::WrongVariety { expected: "free", got: *spec });
        }
        Ok(Self::from_terms(spec, Terms::new()))
    }

    fn generator(spec: &AlgebraSpec, index: usize) -> Result<Self> {
        spec.check_index(index)?;
        let mut out = Self::zero(spec)?;
        out.terms.insert(NCWord(vec![index]), Rational::one());
        Ok(out)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_word(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::from_terms(&self.spec, Terms::new());
        }
        Self::from_terms(&self.spec, self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect())
    }

    fn bracket(&self, other: &Self) -> Result<Self> {
        free_bracket(self, other)
    }

    fn permute(&self, perm: &Permutation) -> Result<Self> {
        perm.check_degree(self.spec.rank())?;
        let mut out = Terms::new();
        for (w, c) in &self.terms {
            add_word(&mut out, NCWord(w.0.iter().map(|&l| perm.apply(l)).collect()), c.clone());
        }
        Ok(Self::from_terms(&self.spec, out))
    }

    fn component(&self, degree: usize) -> Self {
        Self::from_terms(
            &self.spec,
            self.terms
                .iter()
                .filter(|(w, _)| w.degree() == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        )
    }

    fn degrees(&self) -> Vec<usize> {
        self.terms.keys().map(NCWord::degree).dedup().collect()
    }

    fn graded_basis(spec: &AlgebraSpec, degree: usize) -> Result<Vec<Self>> {
        Self::zero(spec)?;
        if degree > spec.degree_cap() {
            return Err(Error::DegreeCapExceeded { degree, cap: spec.degree_cap() });
        }
        let mut cache = DynkinCache::default();
        Ok(lyndon_words(spec.rank(), degree)
            .iter()
            .map(|w| Self::from_terms(spec, cache.expand(w)))
            .collect())
    }

    fn coordinates(&self, degree: usize) -> Result<Vec<Rational>> {
        let coords = lyndon_decompose(&self.component(degree))?;
        Ok(lyndon_words(self.spec.rank(), degree)
            .iter()
            .map(|w| coords.get(w).cloned().unwrap_or_else(Rational::zero))
            .collect())
    }

    /// Only linear substitutions `x_i ↦ Σ a_ij x_j` are admitted; each word expands
    /// into the product of its letters' images.
    fn substitute(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.spec.rank() {
            return Err(Error::ImageCount { got: images.len(), rank: self.spec.rank() });
        }
        for img in images {
            self.check_spec(img)?;
            if img.terms.keys().any(|w| w.degree() != 1) {
                return Err(Error::NonlinearFreeSubstitution);
            }
        }
        let mut out = Terms::new();
        for (w, c) in &self.terms {
            let mut product = Terms::from([(NCWord(Vec::new()), c.clone())]);
            for &l in &w.0 {
                let mut next = Terms::new();
                for (u, a) in &product {
                    for (v, b) in &images[l - 1].terms {
                        add_word(&mut next, u.concat(v), a * b);
                    }
                }
                product = next;
            }
            for (u, k) in product {
                add_word(&mut out, u, k);
            }
        }
        Ok(Self::from_terms(&self.spec, out))
    }
}

fn write_dynkin(out: &mut String, w: &LyndonWord) {
    match w.standard_factorization() {
        None => out.push_str(&format!("x{}", w.0[0])),
        Some((u, v)) => {
            out.push('[');
            write_dynkin(out, &u);
            out.push(',');
            write_dynkin(out, &v);
            out.push(']');
        }
    }
}

/// Printed in the Lyndon basis as nested brackets, graded, e.g. `x1 + [x1,[x1,x2]]`.
impl fmt::Display for FreeLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let coords = lyndon_decompose(self).map_err(|_| fmt::Error)?;
        let mut ordered: Vec<_> = coords.into_iter().collect();
        ordered.sort_by(|(u, _), (v, _)| u.len().cmp(&v.len()).then_with(|| u.cmp(v)));
        let mut out = String::new();
        for (k, (w, c)) in ordered.iter().enumerate() {
            write_coefficient(&mut out, c, k == 0, " ");
            write_dynkin(&mut out, w);
        }
        f.write_str(&out)
    }
}
