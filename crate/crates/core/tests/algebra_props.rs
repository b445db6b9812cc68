//! Randomized checks of the coefficient-ring and Grassmann-algebra laws.

use grassmann_pentagon::coeffs::{modp, zeta_diff, MultiPoly, NVARS};
use grassmann_pentagon::weights::{weight_f, PENTAGON_TETRAHEDRA};
use grassmann_pentagon::{
    GeneratorId, GrassmannElement, RationalFunctions, Scalar, Setting, Tetrahedron,
};
use proptest::prelude::*;

type El = GrassmannElement<RationalFunctions>;

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

fn gen(n: usize) -> GeneratorId {
    let [i, j, k] = FACES[n];
    GeneratorId::face(i, j, k)
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(256)
}

/// Small polynomial coefficient `c0 + c1*z_v`.
fn coefficient() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, -3i64..=3, 0usize..5)
        .prop_map(|(c0, c1, v)| &Scalar::from_i64(c0) + &(&Scalar::from_i64(c1) * &Scalar::var(v)))
}

fn element_from(terms: Vec<(u8, Scalar)>) -> El {
    terms
        .into_iter()
        .fold(El::zero(RationalFunctions), |acc, (mask, c)| {
            let word: Vec<_> = (0..8).filter(|b| mask & (1 << b) != 0).map(gen).collect();
            &acc + &El::from_word(RationalFunctions, &word, c)
        })
}

fn element() -> impl Strategy<Value = El> {
    prop::collection::vec((any::<u8>(), coefficient()), 0..6).prop_map(element_from)
}

/// Even, scalar-free elements over the given generator mask.
fn even_element(support: u8) -> impl Strategy<Value = El> {
    prop::collection::vec((any::<u8>(), coefficient()), 0..5).prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .map(|(m, c)| (m & support, c))
            .filter(|(m, _)| m.count_ones() >= 2 && m.count_ones() % 2 == 0)
            .collect();
        element_from(terms)
    })
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, prop::array::uniform7(0u8..3)), 0..5).prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (c, e)| {
            let mut m = MultiPoly::from_i64(c);
            for (v, k) in e.iter().enumerate() {
                m = &m * &MultiPoly::var(v).pow(*k as u32);
            }
            &acc + &m
        })
    })
}

/// Rational function with a random ζ-difference denominator.
fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), prop::collection::vec(0usize..10, 0..3)).prop_map(|(num, den)| {
        den.into_iter().fold(Scalar::from_poly(num), |acc, k| {
            let (i, j) = grassmann_pentagon::coeffs::PAIRS[k];
            acc.checked_div(&zeta_diff(i, j)).unwrap()
        })
    })
}

fn valid_point() -> impl Strategy<Value = [u64; NVARS]> {
    prop::array::uniform7(0u64..modp::DEFAULT_PRIME).prop_filter("distinct coordinates", |p| {
        (0..5).all(|a| (a + 1..5).all(|b| p[a] != p[b]))
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn exact_linear_division_roundtrip(a in poly(), k in 0usize..10) {
        let (i, j) = grassmann_pentagon::coeffs::PAIRS[k];
        let lin = MultiPoly::zeta_diff(i, j);
        let q = (&a * &lin).exact_div_linear(i, j);
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn scalar_normalization_idempotent(x in scalar(), y in scalar()) {
        let s = &x * &y;
        prop_assert!(s.is_normalized());
        let again = Scalar::new(s.numerator().clone(), *s.denominator());
        prop_assert_eq!(again.numerator(), s.numerator());
        prop_assert_eq!(again.denominator(), s.denominator());
    }

    #[test]
    fn scalar_field_laws(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn eval_is_homomorphism(x in scalar(), y in scalar(), pt in valid_point()) {
        let p = modp::DEFAULT_PRIME;
        let (ex, ey) = (x.eval_modp(p, &pt).unwrap(), y.eval_modp(p, &pt).unwrap());
        prop_assert_eq!((&x * &y).eval_modp(p, &pt).unwrap(), modp::mul(ex, ey, p));
        prop_assert_eq!((&x + &y).eval_modp(p, &pt).unwrap(), modp::add(ex, ey, p));
    }

    #[test]
    fn grassmann_anticommutativity(u in 0usize..8, v in 0usize..8) {
        let (gu, gv) = (El::generator(RationalFunctions, gen(u)), El::generator(RationalFunctions, gen(v)));
        if u == v {
            prop_assert!((&gu * &gu).is_zero());
        } else {
            prop_assert_eq!(&gu * &gv, -&(&gv * &gu));
        }
    }

    #[test]
    fn grassmann_associativity(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn grassmann_distributivity(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn berezin_pulls_out_independent_factor(x in element(), y in element(), k in 0usize..8) {
        let a = gen(k);
        let g = free_part(&x, &a);
        prop_assert!(!g.support().contains(&a));
        prop_assert_eq!((&g * &y).berezin(&a), &g * &y.berezin(&a));
    }

    #[test]
    fn double_integration_vanishes(x in element(), k in 0usize..8) {
        prop_assert!(x.berezin(&gen(k)).berezin(&gen(k)).is_zero());
    }

    #[test]
    fn berezin_multi_permutation_sign(x in element(), perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()) {
        let base: Vec<GeneratorId> = (0..4).map(gen).collect();
        let permuted: Vec<GeneratorId> = perm.iter().map(|&k| base[k]).collect();
        let mut inversions = 0;
        for a in 0..4 {
            for b in a + 1..4 {
                if perm[a] > perm[b] {
                    inversions += 1;
                }
            }
        }
        let expected = x.berezin_multi(&base);
        let got = x.berezin_multi(&permuted);
        if inversions % 2 == 0 {
            prop_assert_eq!(got, expected);
        } else {
            prop_assert_eq!(got, -&expected);
        }
    }

    #[test]
    fn exp_multiplicative_disjoint(x in even_element(0b0000_1111), y in even_element(0b1111_0000)) {
        prop_assert_eq!(&x.exp().unwrap() * &y.exp().unwrap(), (&x + &y).exp().unwrap());
    }

    #[test]
    fn exp_multiplicative_overlapping(x in even_element(0b0011_1111), y in even_element(0b1111_1100)) {
        prop_assert_eq!(&x.exp().unwrap() * &y.exp().unwrap(), (&x + &y).exp().unwrap());
    }

    #[test]
    fn zeta_diff_telescopes(i in 1u8..=5, j in 1u8..=5, k in 1u8..=5) {
        prop_assert_eq!(&zeta_diff(i, j) + &zeta_diff(j, k), zeta_diff(i, k));
    }
}

/// The part of `x` that does not involve `a`.
fn free_part(x: &El, a: &GeneratorId) -> El {
    x.terms()
        .filter(|(m, _)| !m.contains(a))
        .fold(El::zero(RationalFunctions), |acc, (m, c)| {
            &acc + &El::from_term(RationalFunctions, m.clone(), c.clone())
        })
}

#[test]
fn f_antisymmetric_over_all_orderings() {
    let s = Setting::symbolic();
    for sorted in PENTAGON_TETRAHEDRA {
        let base = weight_f(&s, &sorted);
        let v = sorted.vertices();
        let mut count = 0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let idx = [a, b, c, d];
                        let Ok(t) = Tetrahedron::new(idx.map(|k| v[k])) else {
                            continue;
                        };
                        count += 1;
                        let expected = if t.permutation_sign() == 1 {
                            base.clone()
                        } else {
                            -&base
                        };
                        assert_eq!(weight_f(&s, &t), expected, "ordering {t}");
                    }
                }
            }
        }
        assert_eq!(count, 24);
    }
}
