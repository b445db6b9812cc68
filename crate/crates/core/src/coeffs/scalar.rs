//! Rational functions in `z1..z5` (and the deformation parameters) whose
//! denominators are products of the linear forms `z_i - z_j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::poly::{MultiPoly, NVARS};
use crate::error::{Error, Result};

/// Index pairs `(i, j)` with `1 <= i < j <= 5`, in lexicographic order.
pub const PAIRS: [(u8, u8); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

pub fn pair_index(i: u8, j: u8) -> usize {
    PAIRS
        .iter()
        .position(|&p| p == (i, j))
        .unwrap_or_else(|| panic!("({i},{j}) is not an ordered vertex pair"))
}

/// Multiset of linear factors `z_i - z_j`, stored as multiplicities.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Denominator(pub [u8; 10]);

impl Denominator {
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn factors(&self) -> impl Iterator<Item = ((u8, u8), u8)> + '_ {
        PAIRS
            .iter()
            .zip(self.0)
            .filter(|(_, c)| *c > 0)
            .map(|(&p, c)| (p, c))
    }

    fn combine(&self, other: &Self, f: impl Fn(u8, u8) -> u8) -> Self {
        Denominator(std::array::from_fn(|k| f(self.0[k], other.0[k])))
    }

    /// The product of the factors as a polynomial.
    pub fn expand(&self) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for ((i, j), c) in self.factors() {
            acc = &acc * &MultiPoly::zeta_diff(i, j).pow(c as u32);
        }
        acc
    }
}

/// An element of `Q[z1..z5, lambda, mu]` localized at the `z_i - z_j`.
///
/// Kept normalized: the numerator is not divisible by any factor still present
/// in the denominator, and zero has an empty denominator. Together with the
/// monic denominator this makes the representation canonical.
#[derive(Clone, Default)]
pub struct Scalar {
    num: MultiPoly,
    den: Denominator,
}

impl Scalar {
    pub fn new(num: MultiPoly, den: Denominator) -> Self {
        let mut s = Scalar { num, den };
        s.normalize();
        s
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        Scalar {
            num,
            den: Denominator::default(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_poly(MultiPoly::from_i64(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(v: usize) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &Denominator {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Denominator::default();
            return;
        }
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            while self.den.0[k] > 0 {
                match self.num.exact_div_linear(i, j) {
                    Some(q) => {
                        self.num = q;
                        self.den.0[k] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    pub fn is_normalized(&self) -> bool {
        let mut copy = self.clone();
        copy.normalize();
        copy.num == self.num && copy.den == self.den
    }

    /// Splits the numerator as `c * prod (z_i - z_j)^e * rest` with `rest`
    /// monic (leading coefficient one) and free of linear factors.
    pub fn factor_numerator(&self) -> (BigRational, Denominator, MultiPoly) {
        let mut rest = self.num.clone();
        let mut factors = Denominator::default();
        if rest.is_zero() {
            return (BigRational::zero(), factors, rest);
        }
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            while let Some(q) = rest.exact_div_linear(i, j) {
                rest = q;
                factors.0[k] += 1;
            }
        }
        let lead = rest.leading_term().unwrap().1.clone();
        let rest = rest.scale(&lead.recip());
        (lead, factors, rest)
    }

    /// Units of the localized ring are `c * prod (z_i - z_j)^e` with `c != 0`.
    fn as_unit(&self) -> Option<(BigRational, Denominator)> {
        let (c, factors, rest) = self.factor_numerator();
        if c.is_zero() || !rest.as_constant().is_some_and(|r| r.is_one()) {
            return None;
        }
        Some((c, factors))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, factors) = rhs
            .as_unit()
            .ok_or_else(|| Error::NonUnitDivisor(rhs.to_string()))?;
        let num = (&self.num * &rhs.den.expand()).scale(&c.recip());
        let den = self.den.combine(&factors, |a, b| a + b);
        Ok(Scalar::new(num, den))
    }

    /// Division that also accepts non-unit divisors as long as the quotient
    /// exists in the ring.
    pub fn exact_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Linear factors of the divisor move to the denominator; only the
        // remaining cofactor has to divide the numerator.
        let (c, factors, rest) = rhs.factor_numerator();
        let num = &self.num * &rhs.den.expand();
        let q = num
            .div_exact(&rest)
            .ok_or_else(|| Error::NonUnitDivisor(rhs.to_string()))?;
        let den = self.den.combine(&factors, |a, b| a + b);
        Ok(Scalar::new(q.scale(&c.recip()), den))
    }

    /// Evaluation homomorphism into `F_p`. All coordinates must be pairwise
    /// distinct mod `p`.
    pub fn eval_modp(&self, p: u64, point: &[u64; NVARS]) -> Result<u64> {
        check_distinct(p, point)?;
        let num = self.num.eval_mod(p, point)?;
        let mut den = 1;
        for ((i, j), c) in self.den.factors() {
            let d = modp::sub(point[i as usize - 1] % p, point[j as usize - 1] % p, p);
            den = modp::mul(den, modp::pow(d, c as u64, p), p);
        }
        Ok(modp::mul(num, modp::inv(den, p)?, p))
    }
}

pub fn check_distinct(p: u64, point: &[u64; NVARS]) -> Result<()> {
    for &(i, j) in &PAIRS {
        if point[i as usize - 1] % p == point[j as usize - 1] % p {
            return Err(Error::CoincidentCoordinates(i, j));
        }
    }
    Ok(())
}

/// `z_i - z_j` as a scalar; zero when `i == j`.
pub fn zeta_diff(i: u8, j: u8) -> Scalar {
    Scalar::from_poly(MultiPoly::zeta_diff(i, j))
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den.expand() == &other.num * &self.den.expand()
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return Scalar::new(&self.num + &rhs.num, self.den);
        }
        let lcm = self.den.combine(&rhs.den, u8::max);
        let lift = |s: &Scalar| {
            let missing = lcm.combine(&s.den, |a, b| a - b);
            &s.num * &missing.expand()
        };
        Scalar::new(&lift(self) + &lift(rhs), lcm)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        Scalar::new(
            &self.num * &rhs.num,
            self.den.combine(&rhs.den, |a, b| a + b),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn render_factor((i, j): (u8, u8), mult: u8) -> String {
    if mult == 1 {
        format!("(z{i}-z{j})")
    } else {
        format!("(z{i}-z{j})^{mult}")
    }
}

/// Canonical rendering with linear factors pulled out, e.g.
/// `-(z1-z2)*(z1-z5)` or `(z1-z3)/(z3-z4)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, factors, rest) = self.factor_numerator();
        if c.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = factors
            .factors()
            .map(|(p, m)| render_factor(p, m))
            .collect();
        if rest.as_constant().is_none() {
            if rest.num_terms() == 1 {
                parts.push(rest.to_string());
            } else {
                parts.push(format!("({rest})"));
            }
        }
        let abs = c.abs();
        if !abs.is_one() || parts.is_empty() {
            parts.insert(0, super::poly::render_rational(&abs));
        }
        if c.is_negative() {
            write!(f, "-")?;
        }
        write!(f, "{}", parts.join("*"))?;
        let den: Vec<String> = self
            .den
            .factors()
            .map(|(p, m)| render_factor(p, m))
            .collect();
        match den.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", den[0]),
            _ => write!(f, "/({})", den.join("*")),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
