//! Grassmann algebra over face generators `a[ijk]` and auxiliary generators
//! `b1[ijkl]`, `b2[ijkl]`, with Berezin integration and nilpotent
//! exponentials.
//!
//! Every sign in the crate comes from the single total order on
//! [`GeneratorId`]: all faces (lexicographic by sorted triple) precede all
//! auxiliary generators (lexicographic by sorted tetrahedron, then slot).
//! Monomials are stored as strictly increasing generator sequences.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::coeffs::Ring;
use crate::error::{Error, Result};
use crate::par::{self, Exec};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GeneratorId {
    /// Unoriented 2-face; labels sorted ascending.
    Face([u8; 3]),
    /// `b^(slot)` of a tetrahedron; labels sorted ascending, slot 1 or 2.
    Aux { tet: [u8; 4], slot: u8 },
}

impl GeneratorId {
    /// `a_{ijk}`; any permutation of the labels names the same generator.
    pub fn face(i: u8, j: u8, k: u8) -> Self {
        let mut v = [i, j, k];
        v.sort_unstable();
        assert!(v[0] != v[1] && v[1] != v[2], "face labels must be distinct");
        GeneratorId::Face(v)
    }

    pub fn aux(tet: [u8; 4], slot: u8) -> Self {
        assert!(slot == 1 || slot == 2, "aux slot must be 1 or 2");
        let mut t = tet;
        t.sort_unstable();
        GeneratorId::Aux { tet: t, slot }
    }

    /// Parses a face written as three digits, e.g. `124` or `421`.
    pub fn parse_face(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits: Vec<u8> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(format!("face `{s}` must be three digits")))?;
        if digits.len() != 3 {
            return Err(Error::Parse(format!("face `{s}` must be three digits")));
        }
        let mut v = [digits[0], digits[1], digits[2]];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::Parse(format!("face `{s}` repeats a vertex")));
        }
        if v[0] == 0 {
            return Err(Error::Parse(format!("face `{s}` uses vertex 0")));
        }
        Ok(GeneratorId::Face(v))
    }

    pub fn is_face(&self) -> bool {
        matches!(self, GeneratorId::Face(_))
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::Face([i, j, k]) => write!(f, "a[{i}{j}{k}]"),
            GeneratorId::Aux {
                tet: [i, j, k, l],
                slot,
            } => write!(f, "b{slot}[{i}{j}{k}{l}]"),
        }
    }
}

/// Strictly increasing sequence of generators. Ordered degree-major, then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(SmallVec<[GeneratorId; 8]>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.0
    }

    pub fn contains(&self, g: &GeneratorId) -> bool {
        self.0.binary_search(g).is_ok()
    }

    /// Canonicalizes a word `g_1 g_2 ... g_n`. Returns the sign of the
    /// sorting permutation (`true` = negative) and the monomial, or `None` if
    /// a generator repeats.
    pub fn from_word(word: &[GeneratorId]) -> Option<(bool, Self)> {
        let mut v: SmallVec<[GeneratorId; 8]> = word.iter().copied().collect();
        let mut negative = false;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                negative = !negative;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((negative, Monomial(v)))
    }

    /// Like [`Monomial::from_word`] but for an already increasing list.
    pub fn from_sorted(gens: &[GeneratorId]) -> Self {
        assert!(
            gens.windows(2).all(|w| w[0] < w[1]),
            "generators must increase"
        );
        Monomial(gens.iter().copied().collect())
    }

    /// Concatenates `self` and `other` and sorts. The sign counts, for each
    /// generator of `other`, how many generators of `self` it has to pass.
    fn merge(&self, other: &Self) -> Option<(bool, Self)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut swaps = 0usize;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    swaps += a.len() - i;
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Some((swaps % 2 == 1, Monomial(out)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A finite sum of monomials with coefficients in `R`. Zero coefficients are
/// never stored; the empty monomial carries the scalar part.
#[derive(Clone)]
pub struct GrassmannElement<R: Ring> {
    ring: R,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> GrassmannElement<R> {
    pub fn zero(ring: R) -> Self {
        GrassmannElement {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(ring: R, c: R::Elem) -> Self {
        Self::from_term(ring, Monomial::one(), c)
    }

    pub fn one(ring: R) -> Self {
        let c = ring.one();
        Self::scalar(ring, c)
    }

    pub fn generator(ring: R, g: GeneratorId) -> Self {
        let c = ring.one();
        Self::from_term(ring, Monomial(smallvec::smallvec![g]), c)
    }

    pub fn from_term(ring: R, m: Monomial, c: R::Elem) -> Self {
        let mut x = Self::zero(ring);
        x.add_term(m, c);
        x
    }

    /// `c * g_1 g_2 ... g_n` for a word in any order.
    pub fn from_word(ring: R, word: &[GeneratorId], c: R::Elem) -> Self {
        match Monomial::from_word(word) {
            None => Self::zero(ring),
            Some((negative, m)) => {
                let c = if negative { ring.neg(&c) } else { c };
                Self::from_term(ring, m, c)
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    fn add_term(&mut self, m: Monomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if self.ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Terms in degree-major, then lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> R::Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn scalar_part(&self) -> R::Elem {
        self.coefficient_of(&Monomial::one())
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.degree() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| m.degree() % 2 == 1)
    }

    /// Generators occurring anywhere in the element.
    pub fn support(&self) -> BTreeSet<GeneratorId> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().copied())
            .collect()
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (m, a) in &self.terms {
            out.add_term(m.clone(), self.ring.mul(a, c));
        }
        out
    }

    fn mul_terms(
        &self,
        left: &[(&Monomial, &R::Elem)],
        other: &Self,
    ) -> BTreeMap<Monomial, R::Elem> {
        let mut acc = Self::zero(self.ring.clone());
        for (ma, ca) in left {
            for (mb, cb) in &other.terms {
                if let Some((negative, m)) = ma.merge(mb) {
                    let c = self.ring.mul(ca, cb);
                    acc.add_term(m, if negative { self.ring.neg(&c) } else { c });
                }
            }
        }
        acc.terms
    }

    /// Anticommutative product; `exec` chooses whether the left factor's
    /// terms are processed in parallel batches.
    pub fn mul_with(&self, other: &Self, exec: Exec) -> Self {
        let left: Vec<(&Monomial, &R::Elem)> = self.terms.iter().collect();
        let parts = par::map_chunks(exec, &left, 64, |chunk| self.mul_terms(chunk, other));
        let mut out = Self::zero(self.ring.clone());
        for part in parts {
            for (m, c) in part {
                out.add_term(m, c);
            }
        }
        out
    }

    /// Berezin integral over one generator: terms without `g` vanish, and
    /// `g` is moved to the rightmost position before being removed.
    pub fn berezin(&self, g: &GeneratorId) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (m, c) in &self.terms {
            if let Ok(pos) = m.0.binary_search(g) {
                let mut rest = m.0.clone();
                rest.remove(pos);
                let moves = m.degree() - 1 - pos;
                let c = if moves % 2 == 1 {
                    self.ring.neg(c)
                } else {
                    c.clone()
                };
                out.add_term(Monomial(rest), c);
            }
        }
        out
    }

    /// Iterated integral: the first generator in the list is integrated
    /// first (innermost), matching `∬ ab db da = ∫ a (∫ b db) da = 1`.
    pub fn berezin_multi(&self, gens: &[GeneratorId]) -> Self {
        gens.iter().fold(self.clone(), |acc, g| acc.berezin(g))
    }

    /// Exponential of an even element with zero scalar part; the series
    /// terminates by nilpotency.
    pub fn exp(&self) -> Result<Self> {
        self.exp_with(Exec::Sequential)
    }

    pub fn exp_with(&self, exec: Exec) -> Result<Self> {
        if !self.is_even() {
            return Err(Error::NotEven);
        }
        if !self.ring.is_zero(&self.scalar_part()) {
            return Err(Error::NonzeroScalarPart);
        }
        let mut result = Self::one(self.ring.clone());
        let mut power = Self::one(self.ring.clone());
        for k in 1.. {
            power = power.mul_with(self, exec);
            if power.is_zero() {
                break;
            }
            let kk = self.ring.from_i64(k);
            let mut scaled = Self::zero(self.ring.clone());
            for (m, c) in &power.terms {
                scaled.add_term(m.clone(), self.ring.div(c, &kk)?);
            }
            power = scaled;
            result = &result + &power;
        }
        Ok(result)
    }

    /// Partition by monomial degree; the parts sum back to `self`.
    pub fn degree_split(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Self::zero(self.ring.clone()))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Number of stored monomials per degree.
    pub fn degree_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for m in self.terms.keys() {
            *out.entry(m.degree()).or_default() += 1;
        }
        out
    }

    /// Changes the coefficient ring, e.g. evaluating symbolic coefficients
    /// at a point of a prime field.
    pub fn map_coefficients<S: Ring>(
        &self,
        ring: S,
        mut f: impl FnMut(&R::Elem) -> Result<S::Elem>,
    ) -> Result<GrassmannElement<S>> {
        let mut out = GrassmannElement::zero(ring);
        for (m, c) in &self.terms {
            let v = f(c)?;
            out.add_term(m.clone(), v);
        }
        Ok(out)
    }
}

impl<R: Ring> PartialEq for GrassmannElement<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<R: Ring> fmt::Debug for GrassmannElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders e.g. `(z1-z2)*a[123]*a[124] - (z1-z3)*a[123]*a[134]`.
impl<R: Ring> fmt::Display for GrassmannElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let mut coef = self.ring.render(c);
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if has_top_level_sum(&coef) {
                coef = format!("({coef})");
            }
            let body = match (m.degree(), coef.as_str()) {
                (0, _) => coef.clone(),
                (_, "1") => m.to_string(),
                _ => format!("{coef}*{m}"),
            };
            match (n, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ' ' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}

impl<R: Ring> Add for &GrassmannElement<R> {
    type Output = GrassmannElement<R>;
    fn add(self, rhs: &GrassmannElement<R>) -> GrassmannElement<R> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<R: Ring> Neg for &GrassmannElement<R> {
    type Output = GrassmannElement<R>;
    fn neg(self) -> GrassmannElement<R> {
        let mut out = GrassmannElement::zero(self.ring.clone());
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), self.ring.neg(c));
        }
        out
    }
}

impl<R: Ring> Sub for &GrassmannElement<R> {
    type Output = GrassmannElement<R>;
    fn sub(self, rhs: &GrassmannElement<R>) -> GrassmannElement<R> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), self.ring.neg(c));
        }
        out
    }
}

impl<R: Ring> Mul for &GrassmannElement<R> {
    type Output = GrassmannElement<R>;
    fn mul(self, rhs: &GrassmannElement<R>) -> GrassmannElement<R> {
        self.mul_with(rhs, Exec::Sequential)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{RationalFunctions, Scalar};

    type El = GrassmannElement<RationalFunctions>;
    const R: RationalFunctions = RationalFunctions;

    /// Eight abstract generators a1..a8, realized as distinct faces.
    fn a(n: usize) -> GeneratorId {
        const FACES: [[u8; 3]; 8] = [
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 5],
            [1, 3, 4],
            [1, 3, 5],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
        ];
        let [i, j, k] = FACES[n - 1];
        GeneratorId::face(i, j, k)
    }

    fn g(n: usize) -> El {
        El::generator(R, a(n))
    }

    fn mono(ns: &[usize]) -> Monomial {
        let gens: Vec<_> = ns.iter().map(|&n| a(n)).collect();
        Monomial::from_sorted(&gens)
    }

    #[test]
    fn generator_order_faces_before_aux() {
        let f = GeneratorId::face(3, 4, 5);
        let b = GeneratorId::aux([1, 2, 3, 4], 1);
        assert!(f < b);
        assert!(GeneratorId::aux([1, 2, 3, 4], 2) < GeneratorId::aux([1, 2, 3, 5], 1));
        assert_eq!(GeneratorId::face(3, 2, 1), GeneratorId::face(1, 2, 3));
        assert_eq!(b.to_string(), "b1[1234]");
        assert_eq!(f.to_string(), "a[345]");
    }

    #[test]
    fn parse_face() {
        assert_eq!(
            GeneratorId::parse_face("421").unwrap(),
            GeneratorId::face(1, 2, 4)
        );
        assert!(GeneratorId::parse_face("12").is_err());
        assert!(GeneratorId::parse_face("112").is_err());
        assert!(GeneratorId::parse_face("1x3").is_err());
    }

    #[test]
    fn addition_examples() {
        assert!((&g(1) + &(-&g(1))).is_zero());
        let x = &El::one(R) + &(&g(1) * &g(2));
        assert_eq!(x.len(), 2);
        assert_eq!(&x + &El::zero(R), x);
    }

    #[test]
    fn product_examples() {
        assert!((&g(1) * &g(1)).is_zero());
        assert_eq!(&g(2) * &g(1), -&(&g(1) * &g(2)));
        let p = &El::one(R) + &(&g(1) * &g(2));
        let q = &El::one(R) + &(&g(3) * &g(4));
        let expected = &(&(&El::one(R) + &(&g(1) * &g(2))) + &(&g(3) * &g(4)))
            + &(&(&g(1) * &g(2)) * &(&g(3) * &g(4)));
        assert_eq!(&p * &q, expected);
    }

    #[test]
    fn berezin_examples() {
        assert!(El::one(R).berezin(&a(1)).is_zero());
        assert_eq!(g(1).berezin(&a(1)), El::one(R));
        assert_eq!((&g(1) * &g(2)).berezin(&a(1)), -&g(2));
    }

    #[test]
    fn berezin_multi_examples() {
        // ∬ a b db da = 1: a = a1, b = a2, list (b, a)
        let ab = &g(1) * &g(2);
        assert_eq!(ab.berezin_multi(&[a(2), a(1)]), El::one(R));
        assert_eq!(ab.berezin_multi(&[a(1), a(2)]), -&El::one(R));
        assert_eq!(ab.berezin_multi(&[]), ab);
    }

    #[test]
    fn exp_examples() {
        let x = &g(1) * &g(2);
        assert_eq!(x.exp().unwrap(), &El::one(R) + &x);
        assert_eq!(El::zero(R).exp().unwrap(), El::one(R));
        let y = &g(3) * &g(4);
        let expected = &(&(&El::one(R) + &x) + &y) + &(&x * &y);
        assert_eq!((&x + &y).exp().unwrap(), expected);
    }

    #[test]
    fn exp_preconditions() {
        assert_eq!(g(1).exp(), Err(Error::NotEven));
        let x = &El::one(R) + &(&g(1) * &g(2));
        assert_eq!(x.exp(), Err(Error::NonzeroScalarPart));
    }

    #[test]
    fn coefficient_and_degree_split() {
        let x = &El::one(R) + &(&g(1) * &g(2));
        assert_eq!(x.coefficient_of(&mono(&[1, 2])), Scalar::one());
        assert!(x.coefficient_of(&mono(&[1, 3])).is_zero());
        let split = x.degree_split();
        assert_eq!(split.keys().copied().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(split[&0], El::one(R));
        assert_eq!(split[&2], &g(1) * &g(2));
    }

    #[test]
    fn from_word_signs() {
        let w = El::from_word(R, &[a(3), a(1), a(2)], Scalar::one());
        assert_eq!(w, &(&g(3) * &g(1)) * &g(2));
        assert!(El::from_word(R, &[a(1), a(1)], Scalar::one()).is_zero());
    }

    #[test]
    fn parity_queries() {
        let even = &El::one(R) + &(&g(1) * &g(2));
        assert!(even.is_even() && !even.is_odd());
        assert!(g(1).is_odd());
        assert!(El::zero(R).is_even() && El::zero(R).is_odd());
    }

    #[test]
    fn render_is_degree_major() {
        let x = &(&g(1) * &g(2)) + &El::scalar(R, Scalar::from_i64(-3));
        assert_eq!(x.to_string(), "-3 + a[123]*a[124]");
    }
}
