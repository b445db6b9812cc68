//! Tetrahedron weights `f`, `g`, `h` and the coordinate/parameter setting
//! they are evaluated in.

use std::fmt;

use num_rational::BigRational;

use crate::coeffs::{PrimeField, RationalFunctions, Ring, Scalar, LAMBDA, MU, NVARS};
use crate::error::{Error, Result};
use crate::grassmann::{GeneratorId, GrassmannElement};

/// Ordered 4-tuple of distinct vertex labels from `1..=5`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tetrahedron([u8; 4]);

impl Tetrahedron {
    pub fn new(v: [u8; 4]) -> Result<Self> {
        for (k, &x) in v.iter().enumerate() {
            if !(1..=5).contains(&x) {
                return Err(Error::InvalidVertex(x));
            }
            if v[..k].contains(&x) {
                return Err(Error::RepeatedVertex(x));
            }
        }
        Ok(Tetrahedron(v))
    }

    /// Parses four digits such as `1235` or `2134`.
    pub fn parse(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(format!("tetrahedron `{s}` must be four digits")))?;
        let v: [u8; 4] = digits
            .try_into()
            .map_err(|_| Error::Parse(format!("tetrahedron `{s}` must be four digits")))?;
        Self::new(v)
    }

    pub fn vertices(&self) -> [u8; 4] {
        self.0
    }

    pub fn sorted(&self) -> Tetrahedron {
        let mut v = self.0;
        v.sort_unstable();
        Tetrahedron(v)
    }

    /// Sign of the permutation taking the sorted labels to this order.
    pub fn permutation_sign(&self) -> i64 {
        let mut inversions = 0;
        for a in 0..4 {
            for b in a + 1..4 {
                if self.0[a] > self.0[b] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Face generator spanned by three of the four positions.
    pub fn face(&self, p: usize, q: usize, r: usize) -> GeneratorId {
        GeneratorId::face(self.0[p], self.0[q], self.0[r])
    }

    /// `a_{i1i2i3}, a_{i1i2i4}, a_{i1i3i4}, a_{i2i3i4}`.
    pub fn faces(&self) -> [GeneratorId; 4] {
        [
            self.face(0, 1, 2),
            self.face(0, 1, 3),
            self.face(0, 2, 3),
            self.face(1, 2, 3),
        ]
    }

    pub fn aux(&self, slot: u8) -> GeneratorId {
        GeneratorId::aux(self.0, slot)
    }
}

impl fmt::Display for Tetrahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a}{b}{c}{d}")
    }
}

/// The five tetrahedra of the 2-3 move, in sorted form.
pub const PENTAGON_TETRAHEDRA: [Tetrahedron; 5] = [
    Tetrahedron([1, 2, 3, 4]),
    Tetrahedron([1, 2, 3, 5]),
    Tetrahedron([1, 2, 4, 5]),
    Tetrahedron([1, 3, 4, 5]),
    Tetrahedron([2, 3, 4, 5]),
];

/// Orientation sign relative to `1234`. The sorted values are fixed by
/// table; other vertex orders pick up their permutation sign.
pub fn epsilon(t: &Tetrahedron) -> i64 {
    let base = match t.sorted().0 {
        [1, 2, 3, 4] => 1,
        [1, 2, 3, 5] => -1,
        [1, 2, 4, 5] => -1,
        [1, 3, 4, 5] => 1,
        [2, 3, 4, 5] => -1,
        _ => unreachable!("labels are validated to lie in 1..=5"),
    };
    base * t.permutation_sign()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightKind {
    F,
    G,
    H,
    /// `f + eps*lambda*c*(four faces) + eps*mu`.
    Composite,
}

impl WeightKind {
    pub fn name(self) -> &'static str {
        match self {
            WeightKind::F => "f",
            WeightKind::G => "g",
            WeightKind::H => "h",
            WeightKind::Composite => "composite",
        }
    }
}

impl std::str::FromStr for WeightKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" => Ok(WeightKind::F),
            "g" => Ok(WeightKind::G),
            "h" => Ok(WeightKind::H),
            "composite" => Ok(WeightKind::Composite),
            _ => Err(Error::Parse(format!("unknown weight `{s}`"))),
        }
    }
}

/// A deformation parameter: a fresh indeterminate or an explicit rational.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Param {
    #[default]
    Symbolic,
    Value(BigRational),
}

impl std::str::FromStr for Param {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "sym" || s == "symbolic" {
            return Ok(Param::Symbolic);
        }
        s.parse::<BigRational>()
            .map(Param::Value)
            .map_err(|_| Error::Parse(format!("`{s}` is neither `sym` nor a rational")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DeformationParams {
    pub lambda: Param,
    pub mu: Param,
}

/// Coordinates `z1..z5` and deformation parameters resolved in a ring.
#[derive(Clone, Debug)]
pub struct Setting<R: Ring> {
    ring: R,
    zeta: [R::Elem; 5],
    lambda: R::Elem,
    mu: R::Elem,
}

impl Setting<RationalFunctions> {
    /// Fully symbolic: `z_i`, `lambda` and `mu` are all indeterminates.
    pub fn symbolic() -> Self {
        Self::symbolic_with(&DeformationParams::default(), None).unwrap()
    }

    /// Symbolic setting with optional explicit parameters and coordinates.
    pub fn symbolic_with(
        params: &DeformationParams,
        zeta: Option<&[BigRational; 5]>,
    ) -> Result<Self> {
        let resolve = |p: &Param, var: usize| match p {
            Param::Symbolic => Scalar::var(var),
            Param::Value(c) => Scalar::from_rational(c.clone()),
        };
        let zeta = match zeta {
            None => std::array::from_fn(Scalar::var),
            Some(values) => {
                for a in 0..5 {
                    for b in a + 1..5 {
                        if values[a] == values[b] {
                            return Err(Error::CoincidentCoordinates(a as u8 + 1, b as u8 + 1));
                        }
                    }
                }
                std::array::from_fn(|k| Scalar::from_rational(values[k].clone()))
            }
        };
        Ok(Setting {
            ring: RationalFunctions,
            zeta,
            lambda: resolve(&params.lambda, LAMBDA),
            mu: resolve(&params.mu, MU),
        })
    }
}

/// A point of `F_p^7`: coordinates and parameter values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModPoint {
    pub zeta: [u64; 5],
    pub lambda: u64,
    pub mu: u64,
}

impl ModPoint {
    pub fn assignment(&self) -> [u64; NVARS] {
        let z = self.zeta;
        [z[0], z[1], z[2], z[3], z[4], self.lambda, self.mu]
    }
}

impl Setting<PrimeField> {
    pub fn modular(field: PrimeField, point: &ModPoint) -> Result<Self> {
        crate::coeffs::scalar::check_distinct(field.modulus(), &point.assignment())?;
        Ok(Setting {
            ring: field,
            zeta: point.zeta.map(|z| field.elem(z)),
            lambda: field.elem(point.lambda),
            mu: field.elem(point.mu),
        })
    }
}

impl<R: Ring> Setting<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn zeta(&self, i: u8) -> &R::Elem {
        &self.zeta[i as usize - 1]
    }

    /// `z_i - z_j`.
    pub fn zeta_diff(&self, i: u8, j: u8) -> R::Elem {
        self.ring.sub(self.zeta(i), self.zeta(j))
    }

    pub fn lambda(&self) -> &R::Elem {
        &self.lambda
    }

    pub fn mu(&self) -> &R::Elem {
        &self.mu
    }

    pub fn with_params(&self, lambda: R::Elem, mu: R::Elem) -> Self {
        Setting {
            lambda,
            mu,
            ..self.clone()
        }
    }
}

/// Product of `z_i - z_j` over `i < j` in the vertex set of `t`.
pub fn c_factor<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> R::Elem {
    let v = t.sorted().0;
    let mut acc = s.ring.one();
    for a in 0..4 {
        for b in a + 1..4 {
            acc = s.ring.mul(&acc, &s.zeta_diff(v[a], v[b]));
        }
    }
    acc
}

/// The four face generators of `t` multiplied in canonical order.
pub fn four_face_product<R: Ring>(ring: &R, t: &Tetrahedron) -> GrassmannElement<R> {
    let mut faces = t.faces();
    faces.sort_unstable();
    GrassmannElement::from_word(ring.clone(), &faces, ring.one())
}

/// Six quadratic terms of `f` as (sign, zeta pair, first face, second face),
/// all in positions of the tetrahedron's vertex tuple.
type FTerm = (i64, (usize, usize), [usize; 3], [usize; 3]);

const F_TERMS: [FTerm; 6] = [
    (1, (0, 1), [0, 1, 2], [0, 1, 3]),
    (-1, (0, 2), [0, 1, 2], [0, 2, 3]),
    (1, (0, 3), [0, 1, 3], [0, 2, 3]),
    (1, (1, 2), [0, 1, 2], [1, 2, 3]),
    (-1, (1, 3), [0, 1, 3], [1, 2, 3]),
    (1, (2, 3), [0, 2, 3], [1, 2, 3]),
];

/// The weight `f_t` in its expanded six-term form.
pub fn weight_f<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> GrassmannElement<R> {
    let v = t.0;
    let mut out = GrassmannElement::zero(s.ring.clone());
    for (sign, (p, q), fa, fb) in F_TERMS {
        let mut c = s.zeta_diff(v[p], v[q]);
        if sign < 0 {
            c = s.ring.neg(&c);
        }
        let word = [t.face(fa[0], fa[1], fa[2]), t.face(fb[0], fb[1], fb[2])];
        out = &out + &GrassmannElement::from_word(s.ring.clone(), &word, c);
    }
    out
}

/// `f_t` as `(1/z_{i3i4}) * (first linear factor) * (second linear factor)`;
/// needs `z_{i3} != z_{i4}`.
pub fn weight_f_factored<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> Result<GrassmannElement<R>> {
    let v = t.0;
    let ring = &s.ring;
    let [f123, f124, f134, f234] = t.faces();
    let linear = |terms: [(R::Elem, GeneratorId); 3]| {
        terms
            .into_iter()
            .fold(GrassmannElement::zero(ring.clone()), |acc, (c, g)| {
                &acc + &GrassmannElement::generator(ring.clone(), g).scale(&c)
            })
    };
    let first = linear([
        (s.zeta_diff(v[1], v[2]), f123),
        (ring.neg(&s.zeta_diff(v[1], v[3])), f124),
        (s.zeta_diff(v[2], v[3]), f134),
    ]);
    let second = linear([
        (s.zeta_diff(v[0], v[2]), f123),
        (ring.neg(&s.zeta_diff(v[0], v[3])), f124),
        (s.zeta_diff(v[2], v[3]), f234),
    ]);
    let inv = ring.div(&ring.one(), &s.zeta_diff(v[2], v[3]))?;
    Ok((&first * &second).scale(&inv))
}

/// `f_t + eps_t * lambda * c_t * (four faces)`.
pub fn weight_g<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> GrassmannElement<R> {
    let ring = &s.ring;
    let coef = ring.mul(
        &ring.mul(&ring.from_i64(epsilon(t)), &s.lambda),
        &c_factor(s, t),
    );
    &weight_f(s, t) + &four_face_product(ring, t).scale(&coef)
}

/// `f_t + eps_t * mu`.
pub fn weight_h<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> GrassmannElement<R> {
    let ring = &s.ring;
    let shift = ring.mul(&ring.from_i64(epsilon(t)), &s.mu);
    &weight_f(s, t) + &GrassmannElement::scalar(ring.clone(), shift)
}

pub fn weight<R: Ring>(s: &Setting<R>, kind: WeightKind, t: &Tetrahedron) -> GrassmannElement<R> {
    match kind {
        WeightKind::F => weight_f(s, t),
        WeightKind::G => weight_g(s, t),
        WeightKind::H => weight_h(s, t),
        WeightKind::Composite => {
            let deformation = &weight_g(s, t) - &weight_f(s, t);
            &weight_h(s, t) + &deformation
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{modp, zeta_diff};
    use crate::grassmann::Monomial;

    fn tet(v: [u8; 4]) -> Tetrahedron {
        Tetrahedron::new(v).unwrap()
    }

    fn faces(list: &[[u8; 3]]) -> Monomial {
        let gens: Vec<_> = list
            .iter()
            .map(|f| GeneratorId::face(f[0], f[1], f[2]))
            .collect();
        Monomial::from_word(&gens).unwrap().1
    }

    #[test]
    fn tetrahedron_validation() {
        assert_eq!(Tetrahedron::new([1, 2, 3, 6]), Err(Error::InvalidVertex(6)));
        assert_eq!(
            Tetrahedron::new([1, 2, 2, 3]),
            Err(Error::RepeatedVertex(2))
        );
        assert_eq!(Tetrahedron::parse("2134").unwrap().vertices(), [2, 1, 3, 4]);
        assert!(Tetrahedron::parse("123").is_err());
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&tet([1, 3, 4, 5])), 1);
        assert_eq!(epsilon(&tet([1, 2, 3, 4])), 1);
        assert_eq!(epsilon(&tet([2, 1, 3, 4])), -1);
        assert_eq!(epsilon(&tet([1, 2, 3, 5])), -1);
        assert_eq!(epsilon(&tet([1, 2, 4, 5])), -1);
        assert_eq!(epsilon(&tet([2, 3, 4, 5])), -1);
    }

    #[test]
    fn c_factor_examples() {
        let s = Setting::symbolic();
        let expected = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
            .iter()
            .fold(Scalar::one(), |acc, &(i, j)| &acc * &zeta_diff(i, j));
        assert_eq!(c_factor(&s, &tet([1, 2, 3, 4])), expected);
        assert_eq!(c_factor(&s, &tet([4, 2, 1, 3])), expected);
        // (-1)(-2)(-3)(-1)(-2)(-1) = 12 at z = (0, 1, 2, 3, *)
        let pt = [0, 1, 2, 3, 4, 0, 0];
        assert_eq!(expected.eval_modp(modp::DEFAULT_PRIME, &pt).unwrap(), 12);
    }

    #[test]
    fn weight_f_coefficients() {
        let s = Setting::symbolic();
        let f = weight_f(&s, &tet([1, 2, 3, 4]));
        assert_eq!(f.len(), 6);
        assert_eq!(
            f.coefficient_of(&faces(&[[1, 2, 3], [1, 2, 4]])),
            zeta_diff(1, 2)
        );
        assert_eq!(
            f.coefficient_of(&faces(&[[1, 3, 4], [2, 3, 4]])),
            zeta_diff(3, 4)
        );
        assert_eq!(
            f.coefficient_of(&faces(&[[1, 2, 3], [1, 3, 4]])),
            -zeta_diff(1, 3)
        );
        let split = f.degree_split();
        assert_eq!(split.keys().copied().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn weight_f_orientation_flip() {
        let s = Setting::symbolic();
        assert_eq!(
            weight_f(&s, &tet([2, 1, 3, 4])),
            -&weight_f(&s, &tet([1, 2, 3, 4]))
        );
    }

    #[test]
    fn factored_matches_expanded() {
        let s = Setting::symbolic();
        for t in PENTAGON_TETRAHEDRA {
            assert_eq!(
                weight_f_factored(&s, &t).unwrap(),
                weight_f(&s, &t),
                "tetrahedron {t}"
            );
        }
    }

    #[test]
    fn weight_g_examples() {
        let s = Setting::symbolic();
        let t = tet([1, 2, 3, 4]);
        let zero_lambda = s.with_params(Scalar::zero(), s.mu().clone());
        assert_eq!(weight_g(&zero_lambda, &t), weight_f(&s, &t));

        let top = faces(&[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]);
        let lambda = Scalar::var(LAMBDA);
        assert_eq!(
            weight_g(&s, &t).coefficient_of(&top),
            &lambda * &c_factor(&s, &t)
        );

        let t5 = tet([1, 2, 3, 5]);
        let top5 = faces(&[[1, 2, 3], [1, 2, 5], [1, 3, 5], [2, 3, 5]]);
        assert_eq!(
            weight_g(&s, &t5).coefficient_of(&top5),
            -(&lambda * &c_factor(&s, &t5))
        );

        let split = weight_g(&s, &t).degree_split();
        assert_eq!(split[&2], weight_f(&s, &t));
        assert_eq!(split.keys().copied().collect::<Vec<_>>(), vec![2, 4]);
    }

    #[test]
    fn weight_h_examples() {
        let s = Setting::symbolic();
        let mu = Scalar::var(MU);
        assert_eq!(weight_h(&s, &tet([1, 2, 3, 4])).scalar_part(), mu);
        assert_eq!(weight_h(&s, &tet([1, 2, 3, 5])).scalar_part(), -mu);
        let zero_mu = s.with_params(s.lambda().clone(), Scalar::zero());
        assert_eq!(
            weight_h(&zero_mu, &tet([1, 2, 3, 4])),
            weight_f(&s, &tet([1, 2, 3, 4]))
        );
        let degrees: Vec<_> = weight_h(&s, &tet([1, 2, 4, 5]))
            .degree_split()
            .into_keys()
            .collect();
        assert_eq!(degrees, vec![0, 2]);
    }

    #[test]
    fn g_and_h_flip_with_orientation() {
        let s = Setting::symbolic();
        let sorted = tet([1, 2, 3, 4]);
        let swapped = tet([2, 1, 3, 4]);
        assert_eq!(weight_g(&s, &swapped), -&weight_g(&s, &sorted));
        assert_eq!(weight_h(&s, &swapped), -&weight_h(&s, &sorted));
    }

    #[test]
    fn symbolic_setting_rejects_coincident_zeta() {
        let v = |n: i64| BigRational::from_integer(n.into());
        let zeta = [v(0), v(1), v(2), v(3), v(3)];
        assert_eq!(
            Setting::symbolic_with(&DeformationParams::default(), Some(&zeta)).unwrap_err(),
            Error::CoincidentCoordinates(4, 5)
        );
    }

    #[test]
    fn param_parsing() {
        assert_eq!("sym".parse::<Param>().unwrap(), Param::Symbolic);
        assert_eq!(
            "3/2".parse::<Param>().unwrap(),
            Param::Value(BigRational::new(3.into(), 2.into()))
        );
        assert!("x".parse::<Param>().is_err());
    }
}
