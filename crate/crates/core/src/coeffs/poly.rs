//! Sparse multivariate polynomials over the rationals.
//!
//! The variable set is fixed: the five vertex coordinates `z1..z5` plus the
//! two deformation parameters `lambda` and `mu`, which are adjoined as
//! ordinary indeterminates when working symbolically.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modp;
use crate::error::Result;

pub const NVARS: usize = 7;
pub const LAMBDA: usize = 5;
pub const MU: usize = 6;

const VAR_NAMES: [&str; NVARS] = ["z1", "z2", "z3", "z4", "z5", "lambda", "mu"];

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Exponents(pub [u8; NVARS]);

impl Exponents {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn var(v: usize) -> Self {
        let mut e = [0; NVARS];
        e[v] = 1;
        Exponents(e)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Exponents(e)
    }

    /// `self / other`, if `other` divides `self`.
    fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Exponents(e))
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with arbitrary-precision rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Exponents::default(), c);
        }
        p
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: usize) -> Self {
        assert!(v < NVARS, "variable index {v} out of range");
        let mut p = Self::zero();
        p.terms.insert(Exponents::var(v), BigRational::one());
        p
    }

    /// The linear form `z_i - z_j` for vertex labels `i, j` in `1..=5`.
    pub fn zeta_diff(i: u8, j: u8) -> Self {
        &Self::var(i as usize - 1) - &Self::var(j as usize - 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, BigRational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Exponents::degree).max().unwrap_or(0)
    }

    /// Smallest exponent of `v` over all terms; zero for the zero polynomial.
    pub fn min_degree_in(&self, v: usize) -> u8 {
        self.terms.keys().map(|e| e.0[v]).min().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    fn mul_monomial(&self, m: &Exponents, c: &BigRational) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, a)| (e.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient by the linear form `z_i - z_j` (`i < j`), or `None`
    /// when the division leaves a remainder.
    ///
    /// Synthetic division in `z_i`: writing `p = sum_k c_k z_i^k`, the
    /// quotient digits satisfy `q_{k-1} = c_k + z_j q_k`.
    pub fn exact_div_linear(&self, i: u8, j: u8) -> Option<Self> {
        assert!(i < j, "linear form must have i < j");
        let (vi, vj) = (i as usize - 1, j as usize - 1);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut by_power: BTreeMap<u8, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let k = rest.0[vi];
            rest.0[vi] = 0;
            by_power.entry(k).or_default().add_term(rest, c.clone());
        }
        let top = *by_power.keys().next_back().unwrap();
        let shift = Exponents::var(vj);
        let one = BigRational::one();

        let mut quotient = Self::zero();
        let mut carry = Self::zero();
        for k in (0..=top).rev() {
            let ck = by_power.remove(&k).unwrap_or_default();
            let digit = &ck + &carry.mul_monomial(&shift, &one);
            if k == 0 {
                return digit.is_zero().then_some(quotient);
            }
            let mut xi = Exponents::default();
            xi.0[vi] = k - 1;
            for (e, c) in &digit.terms {
                quotient.add_term(e.mul(&xi), c.clone());
            }
            carry = digit;
        }
        unreachable!()
    }

    /// Exact quotient `self / divisor` in `Q[vars]`, or `None` if the divisor
    /// does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((e, c)) = rem.leading_term() {
            let qe = e.checked_div(lead_e)?;
            let qc = c / lead_c;
            for (de, dc) in &divisor.terms {
                rem.add_term(de.mul(&qe), -(dc * &qc));
            }
            quotient.add_term(qe, qc);
        }
        Some(quotient)
    }

    /// Evaluates at a point of `F_p^NVARS`.
    pub fn eval_mod(&self, p: u64, point: &[u64; NVARS]) -> Result<u64> {
        let mut acc = 0u64;
        for (e, c) in &self.terms {
            let mut t = modp::reduce_rational(c, p)?;
            for (v, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    t = modp::mul(t, modp::pow(point[v], k as u64, p), p);
                }
            }
            acc = modp::add(acc, t, p);
        }
        Ok(acc)
    }

    /// Substitutes rational constants for some variables.
    pub fn substitute(&self, values: &[Option<BigRational>; NVARS]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let mut coef = c.clone();
            for (v, val) in values.iter().enumerate() {
                if let Some(val) = val {
                    for _ in 0..rest.0[v] {
                        coef *= val;
                    }
                    rest.0[v] = 0;
                }
            }
            out.add_term(rest, coef);
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn render_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn render_monomial(e: &Exponents) -> String {
    e.0.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| {
            if k == 1 {
                VAR_NAMES[v].to_string()
            } else {
                format!("{}^{}", VAR_NAMES[v], k)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Renders terms in descending graded-lex order, e.g. `z1^2 - 3/2*z1*z2 + 1`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = render_monomial(e);
            if mono.is_empty() {
                write!(f, "{}", render_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{}", render_rational(&abs), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
