//! Both sides of the pentagon equation for the 2-3 move
//! `1234, 1235 -> 1245, 1345, 2345`:
//!
//! ```text
//! ∫ W1234 W1235 da123 = -(1/z45) ∭ W1245 W2345 W1345 da345 da245 da145
//! ```
//!
//! with the iterated-integral convention of [`GrassmannElement::berezin_multi`].

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{PrimeField, RationalFunctions, Ring, Scalar};
use crate::error::Result;
use crate::grassmann::{GeneratorId, GrassmannElement, Monomial};
use crate::par::{self, Exec};
use crate::weights::{self, DeformationParams, ModPoint, Param, Setting, Tetrahedron, WeightKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Lhs,
    Rhs,
}

fn tet(v: [u8; 4]) -> Tetrahedron {
    Tetrahedron::new(v).expect("pentagon tetrahedra use labels 1..=5")
}

fn face(i: u8, j: u8, k: u8) -> GeneratorId {
    GeneratorId::face(i, j, k)
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Lhs => "lhs",
            Side::Rhs => "rhs",
        }
    }

    /// Tetrahedra in the order their weights are multiplied.
    pub fn product_order(self) -> Vec<Tetrahedron> {
        match self {
            Side::Lhs => vec![tet([1, 2, 3, 4]), tet([1, 2, 3, 5])],
            Side::Rhs => vec![tet([1, 2, 4, 5]), tet([2, 3, 4, 5]), tet([1, 3, 4, 5])],
        }
    }

    /// Tetrahedra in the row order of the combined form matrix.
    pub fn matrix_order(self) -> Vec<Tetrahedron> {
        match self {
            Side::Lhs => vec![tet([1, 2, 3, 4]), tet([1, 2, 3, 5])],
            Side::Rhs => vec![tet([1, 2, 4, 5]), tet([1, 3, 4, 5]), tet([2, 3, 4, 5])],
        }
    }

    /// Inner faces in integration order (first is innermost).
    pub fn inner_faces(self) -> Vec<GeneratorId> {
        match self {
            Side::Lhs => vec![face(1, 2, 3)],
            Side::Rhs => vec![face(3, 4, 5), face(2, 4, 5), face(1, 4, 5)],
        }
    }

    /// Every face of the side's tetrahedra, ascending.
    pub fn faces(self) -> Vec<GeneratorId> {
        let mut all: Vec<GeneratorId> = self
            .product_order()
            .iter()
            .flat_map(|t| t.faces())
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Faces that survive integration; the same six on both sides.
    pub fn outer_faces(self) -> Vec<GeneratorId> {
        let inner = self.inner_faces();
        self.faces()
            .into_iter()
            .filter(|f| !inner.contains(f))
            .collect()
    }

    /// Scalar in front of the integral: `1` on the left, `-1/z45` on the right.
    pub fn prefactor<R: Ring>(self, s: &Setting<R>) -> Result<R::Elem> {
        let ring = s.ring();
        match self {
            Side::Lhs => Ok(ring.one()),
            Side::Rhs => ring.div(&ring.from_i64(-1), &s.zeta_diff(4, 5)),
        }
    }
}

/// Product of the side's weights in printed order.
pub fn side_product<R: Ring>(s: &Setting<R>, kind: WeightKind, side: Side) -> GrassmannElement<R> {
    side.product_order()
        .iter()
        .map(|t| weights::weight(s, kind, t))
        .reduce(|acc, w| &acc * &w)
        .unwrap()
}

pub fn pentagon_side<R: Ring>(
    s: &Setting<R>,
    kind: WeightKind,
    side: Side,
) -> Result<GrassmannElement<R>> {
    let integrated = side_product(s, kind, side).berezin_multi(&side.inner_faces());
    Ok(integrated.scale(&side.prefactor(s)?))
}

/// `∫ W1234 W1235 da123`.
pub fn pentagon_lhs<R: Ring>(s: &Setting<R>, kind: WeightKind) -> Result<GrassmannElement<R>> {
    pentagon_side(s, kind, Side::Lhs)
}

/// `-(1/z45) ∭ W1245 W2345 W1345 da345 da245 da145`.
pub fn pentagon_rhs<R: Ring>(s: &Setting<R>, kind: WeightKind) -> Result<GrassmannElement<R>> {
    pentagon_side(s, kind, Side::Rhs)
}

#[derive(Clone, Debug)]
pub struct PentagonReport<R: Ring> {
    pub kind: WeightKind,
    pub lhs: GrassmannElement<R>,
    pub rhs: GrassmannElement<R>,
    pub residual: GrassmannElement<R>,
    pub zero: bool,
}

impl<R: Ring> PentagonReport<R> {
    pub fn lhs_degrees(&self) -> BTreeMap<usize, usize> {
        self.lhs.degree_counts()
    }

    pub fn rhs_degrees(&self) -> BTreeMap<usize, usize> {
        self.rhs.degree_counts()
    }

    pub fn residual_degrees(&self) -> BTreeMap<usize, usize> {
        self.residual.degree_counts()
    }
}

/// `lhs - rhs` for one weight family in one setting.
pub fn residual<R: Ring>(s: &Setting<R>, kind: WeightKind) -> Result<PentagonReport<R>> {
    let lhs = pentagon_lhs(s, kind)?;
    let rhs = pentagon_rhs(s, kind)?;
    let residual = &lhs - &rhs;
    Ok(PentagonReport {
        kind,
        zero: residual.is_zero(),
        lhs,
        rhs,
        residual,
    })
}

/// Degrees present in `side(kind) - side(f)`.
pub fn deformation_degrees<R: Ring>(
    s: &Setting<R>,
    kind: WeightKind,
    side: Side,
) -> Result<Vec<usize>> {
    let diff = &pentagon_side(s, kind, side)? - &pentagon_side(s, WeightKind::F, side)?;
    Ok(diff.degree_counts().into_keys().collect())
}

/// `a124 a125 a134 a135 a235`, the monomial singled out for `g`.
pub fn g_check_monomial() -> Monomial {
    Monomial::from_sorted(&[
        face(1, 2, 4),
        face(1, 2, 5),
        face(1, 3, 4),
        face(1, 3, 5),
        face(2, 3, 5),
    ])
}

/// Default degree-one monomial for `h`: `a234`.
pub fn h_check_monomial() -> Monomial {
    Monomial::from_sorted(&[face(2, 3, 4)])
}

/// Left and right coefficients of `m` for the given family.
pub fn coefficient_pair<R: Ring>(
    s: &Setting<R>,
    kind: WeightKind,
    m: &Monomial,
) -> Result<(R::Elem, R::Elem)> {
    let lhs = pentagon_lhs(s, kind)?;
    let rhs = pentagon_rhs(s, kind)?;
    Ok((lhs.coefficient_of(m), rhs.coefficient_of(m)))
}

/// Single-monomial check with symbolic parameters: the degree-5 monomial for
/// `g`, the degree-1 monomial `a234` for `h` (others for `f`/composite use the
/// `g` monomial).
pub fn check_monomial_pair(kind: WeightKind) -> Result<(Scalar, Scalar)> {
    let m = match kind {
        WeightKind::H => h_check_monomial(),
        _ => g_check_monomial(),
    };
    coefficient_pair(&Setting::symbolic(), kind, &m)
}

/// Random valid points: pairwise distinct coordinates, and random parameters
/// wherever the parameter is symbolic. Points are drawn sequentially from one
/// seeded stream so the set is independent of the execution policy.
pub fn random_points(
    field: PrimeField,
    params: &DeformationParams,
    zeta: Option<[u64; 5]>,
    trials: usize,
    seed: u64,
) -> Result<Vec<ModPoint>> {
    let p = field.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let resolve = |param: &Param, rng: &mut ChaCha8Rng| -> Result<u64> {
        match param {
            Param::Symbolic => Ok(rng.gen_range(0..p)),
            Param::Value(c) => Ok(field.from_rational(c)?.0),
        }
    };
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let z = match zeta {
            Some(z) => z.map(|v| v % p),
            None => loop {
                let z: [u64; 5] = std::array::from_fn(|_| rng.gen_range(0..p));
                let distinct = (0..5).all(|a| (a + 1..5).all(|b| z[a] != z[b]));
                if distinct {
                    break z;
                }
            },
        };
        let lambda = resolve(&params.lambda, &mut rng)?;
        let mu = resolve(&params.mu, &mut rng)?;
        out.push(ModPoint {
            zeta: z,
            lambda,
            mu,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct PointOutcome {
    pub point: ModPoint,
    pub report: PentagonReport<PrimeField>,
}

#[derive(Clone, Debug)]
pub struct ModularReport {
    pub kind: WeightKind,
    pub prime: u64,
    pub seed: u64,
    pub points: Vec<PointOutcome>,
    pub zero: bool,
}

/// Native modular residual at each point.
pub fn residual_at_points(
    kind: WeightKind,
    field: PrimeField,
    points: &[ModPoint],
    exec: Exec,
) -> Result<Vec<PointOutcome>> {
    par::map(exec, points, |pt| {
        let s = Setting::modular(field, pt)?;
        Ok(PointOutcome {
            point: *pt,
            report: residual(&s, kind)?,
        })
    })
    .into_iter()
    .collect()
}

pub fn residual_modular(
    kind: WeightKind,
    field: PrimeField,
    params: &DeformationParams,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<ModularReport> {
    let points = random_points(field, params, None, trials, seed)?;
    let outcomes = residual_at_points(kind, field, &points, exec)?;
    Ok(ModularReport {
        kind,
        prime: field.modulus(),
        seed,
        zero: outcomes.iter().all(|o| o.report.zero),
        points: outcomes,
    })
}

/// Evaluates a symbolic element at a point of `F_p`.
pub fn evaluate(
    x: &GrassmannElement<RationalFunctions>,
    field: PrimeField,
    point: &ModPoint,
) -> Result<GrassmannElement<PrimeField>> {
    let assignment = point.assignment();
    x.map_coefficients(field, |c| {
        c.eval_modp(field.modulus(), &assignment)
            .map(crate::coeffs::Fp)
    })
}

/// For each point, whether the symbolic lhs, rhs and residual (with `lambda`,
/// `mu` as indeterminates) evaluate to the natively computed modular ones.
pub fn symbolic_modular_agreement(
    kind: WeightKind,
    symbolic: &PentagonReport<RationalFunctions>,
    field: PrimeField,
    points: &[ModPoint],
    exec: Exec,
) -> Result<Vec<bool>> {
    par::map(exec, points, |pt| {
        let native = residual(&Setting::modular(field, pt)?, kind)?;
        Ok(evaluate(&symbolic.lhs, field, pt)? == native.lhs
            && evaluate(&symbolic.rhs, field, pt)? == native.rhs
            && evaluate(&symbolic.residual, field, pt)? == native.residual)
    })
    .into_iter()
    .collect()
}

/// Residual of the composite family `f + eps*lambda*c*(faces) + eps*mu`.
#[derive(Clone, Debug)]
pub struct CompositeReport {
    pub report: PentagonReport<RationalFunctions>,
    /// Rendered `(monomial, coefficient)` pairs of the residual.
    pub terms: Vec<(String, String)>,
    /// Whether every residual coefficient has a numerator divisible by
    /// `lambda * mu` (vacuous when the parameters are explicit).
    pub divisible_by_lambda_mu: bool,
}

pub fn composite_explore(
    params: &DeformationParams,
    zeta: Option<&[BigRational; 5]>,
) -> Result<CompositeReport> {
    let s = Setting::symbolic_with(params, zeta)?;
    let report = residual(&s, WeightKind::Composite)?;
    let terms = report
        .residual
        .terms()
        .map(|(m, c)| (m.to_string(), c.to_string()))
        .collect();
    let divisible_by_lambda_mu = report.residual.terms().all(|(_, c)| {
        let num = c.numerator();
        num.min_degree_in(crate::coeffs::LAMBDA) >= 1 && num.min_degree_in(crate::coeffs::MU) >= 1
    });
    Ok(CompositeReport {
        report,
        terms,
        divisible_by_lambda_mu,
    })
}
