//! Coefficient fields.
//!
//! Everything above this module is generic over [`Ring`], so the same
//! Grassmann code runs exactly over localized rational functions
//! ([`RationalFunctions`]) or fast over a prime field ([`PrimeField`]).

pub mod modp;
pub mod poly;
pub mod scalar;

use std::fmt;

use num_rational::BigRational;

pub use poly::{Exponents, MultiPoly, LAMBDA, MU, NVARS};
pub use scalar::{zeta_diff, Denominator, Scalar, PAIRS};

use crate::error::Result;

/// A commutative coefficient ring of characteristic other than two.
///
/// Ring values are contexts (the symbolic ring is zero-sized, a prime field
/// carries its modulus); elements do not need to know which ring they live in.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_rational(&self, c: &BigRational) -> Result<Self::Elem>;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;

    /// Division by a unit.
    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;

    /// Division where `y` is known to divide `x` in the ring (used by
    /// fraction-free elimination).
    fn exact_div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        self.div(x, y)
    }

    fn render(&self, x: &Self::Elem) -> String;
}

/// `Q(z1..z5, lambda, mu)` localized at the linear forms `z_i - z_j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalFunctions;

impl Ring for RationalFunctions {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn from_i64(&self, n: i64) -> Scalar {
        Scalar::from_i64(n)
    }
    fn from_rational(&self, c: &BigRational) -> Result<Scalar> {
        Ok(Scalar::from_rational(c.clone()))
    }
    fn is_zero(&self, x: &Scalar) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        x + y
    }
    fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        x - y
    }
    fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        x * y
    }
    fn neg(&self, x: &Scalar) -> Scalar {
        -x
    }
    fn div(&self, x: &Scalar, y: &Scalar) -> Result<Scalar> {
        x.checked_div(y)
    }
    fn exact_div(&self, x: &Scalar, y: &Scalar) -> Result<Scalar> {
        x.exact_div(y)
    }
    fn render(&self, x: &Scalar) -> String {
        x.to_string()
    }
}

/// Element of `F_p`, always reduced into `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(pub u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        Ok(PrimeField {
            p: modp::validate_prime(p)?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> Fp {
        Fp(v % self.p)
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField {
            p: modp::DEFAULT_PRIME,
        }
    }
}

impl Ring for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp(0)
    }
    fn one(&self) -> Fp {
        Fp(1)
    }
    fn from_i64(&self, n: i64) -> Fp {
        Fp(modp::from_i64(n, self.p))
    }
    fn from_rational(&self, c: &BigRational) -> Result<Fp> {
        modp::reduce_rational(c, self.p).map(Fp)
    }
    fn is_zero(&self, x: &Fp) -> bool {
        x.0 == 0
    }
    fn add(&self, x: &Fp, y: &Fp) -> Fp {
        Fp(modp::add(x.0, y.0, self.p))
    }
    fn sub(&self, x: &Fp, y: &Fp) -> Fp {
        Fp(modp::sub(x.0, y.0, self.p))
    }
    fn mul(&self, x: &Fp, y: &Fp) -> Fp {
        Fp(modp::mul(x.0, y.0, self.p))
    }
    fn neg(&self, x: &Fp) -> Fp {
        Fp(modp::sub(0, x.0, self.p))
    }
    fn div(&self, x: &Fp, y: &Fp) -> Result<Fp> {
        Ok(Fp(modp::mul(x.0, modp::inv(y.0, self.p)?, self.p)))
    }
    fn render(&self, x: &Fp) -> String {
        x.0.to_string()
    }
}
