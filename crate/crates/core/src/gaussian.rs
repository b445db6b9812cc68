//! Gaussian (fermionic) integral representations of the weights.
//!
//! Each tetrahedron `t = i1i2i3i4` carries a 2x4 matrix `A_t` coupling its
//! auxiliary generators `b1[t]`, `b2[t]` to its faces. The bilinear form
//! `Phi_t = (b1 b2) A_t (a...)^T` integrates to `f_t`:
//!
//! ```text
//! f_t = ∬ exp(Phi_t) db1 db2
//! ```
//!
//! `Gamma_t` adds a face-face term (giving `g_t`), `Psi_t` an aux-aux term
//! (giving `h_t`). For the bilinear `Phi`, coefficients of integrated
//! exponentials are minors of the stacked matrices.

use std::fmt;

use crate::coeffs::Ring;
use crate::error::{Error, Result};
use crate::grassmann::{GeneratorId, GrassmannElement, Monomial};
use crate::par::{self, Exec};
use crate::pentagon::Side;
use crate::weights::{epsilon, Setting, Tetrahedron, WeightKind};

/// Matrix with aux-generator row labels and face-generator column labels.
#[derive(Clone)]
pub struct FormMatrix<R: Ring> {
    ring: R,
    rows: Vec<GeneratorId>,
    cols: Vec<GeneratorId>,
    entries: Vec<Vec<R::Elem>>,
}

fn check_unique(labels: &[GeneratorId]) -> Result<()> {
    for (k, l) in labels.iter().enumerate() {
        if labels[..k].contains(l) {
            return Err(Error::BadLabel(l.to_string()));
        }
    }
    Ok(())
}

impl<R: Ring> FormMatrix<R> {
    pub fn zeros(ring: R, rows: Vec<GeneratorId>, cols: Vec<GeneratorId>) -> Result<Self> {
        check_unique(&rows)?;
        check_unique(&cols)?;
        let entries = vec![vec![ring.zero(); cols.len()]; rows.len()];
        Ok(FormMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> &[GeneratorId] {
        &self.rows
    }

    pub fn cols(&self) -> &[GeneratorId] {
        &self.cols
    }

    fn row_index(&self, g: &GeneratorId) -> Result<usize> {
        self.rows
            .iter()
            .position(|r| r == g)
            .ok_or_else(|| Error::BadLabel(g.to_string()))
    }

    fn col_index(&self, g: &GeneratorId) -> Result<usize> {
        self.cols
            .iter()
            .position(|c| c == g)
            .ok_or_else(|| Error::BadLabel(g.to_string()))
    }

    pub fn entry(&self, row: &GeneratorId, col: &GeneratorId) -> Result<&R::Elem> {
        Ok(&self.entries[self.row_index(row)?][self.col_index(col)?])
    }

    pub fn set(&mut self, row: &GeneratorId, col: &GeneratorId, v: R::Elem) -> Result<()> {
        let (r, c) = (self.row_index(row)?, self.col_index(col)?);
        self.entries[r][c] = v;
        Ok(())
    }

    pub fn grid(&self) -> &[Vec<R::Elem>] {
        &self.entries
    }

    /// `sum_{r,c} b_r M[r][c] a_c`.
    pub fn bilinear(&self) -> GrassmannElement<R> {
        let mut out = GrassmannElement::zero(self.ring.clone());
        for (r, row) in self.rows.iter().enumerate() {
            for (c, col) in self.cols.iter().enumerate() {
                let v = &self.entries[r][c];
                if !self.ring.is_zero(v) {
                    out = &out
                        + &GrassmannElement::from_word(self.ring.clone(), &[*row, *col], v.clone());
                }
            }
        }
        out
    }

    /// Determinant of the submatrix on the given rows and columns, taken in
    /// the listed order.
    pub fn minor(&self, rows: &[GeneratorId], cols: &[GeneratorId]) -> Result<R::Elem> {
        if rows.len() != cols.len() {
            return Err(Error::DimensionMismatch {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        check_unique(rows)?;
        check_unique(cols)?;
        let ri: Vec<usize> = rows
            .iter()
            .map(|r| self.row_index(r))
            .collect::<Result<_>>()?;
        let ci: Vec<usize> = cols
            .iter()
            .map(|c| self.col_index(c))
            .collect::<Result<_>>()?;
        let sub = ri
            .iter()
            .map(|&r| ci.iter().map(|&c| self.entries[r][c].clone()).collect())
            .collect();
        determinant(&self.ring, sub)
    }
}

/// Renders a labeled grid, one row per line.
impl<R: Ring> fmt::Display for FormMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|v| self.ring.render(v)).collect())
            .collect();
        let mut widths: Vec<usize> = self.cols.iter().map(|c| c.to_string().len()).collect();
        for row in &cells {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let label_w = self
            .rows
            .iter()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(0);
        write!(f, "{:label_w$}", "")?;
        for (c, w) in self.cols.iter().zip(&widths) {
            write!(f, "  {:>w$}", c.to_string())?;
        }
        writeln!(f)?;
        for (r, row) in self.rows.iter().zip(&cells) {
            write!(f, "{:label_w$}", r.to_string())?;
            for (cell, w) in row.iter().zip(&widths) {
                write!(f, "  {cell:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Fraction-free (Bareiss) determinant. Every elimination step divides
/// exactly in the coefficient ring.
pub fn determinant<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> Result<R::Elem> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch {
            rows: n,
            cols: m.first().map_or(0, Vec::len),
        });
    }
    if n == 0 {
        return Ok(ring.one());
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[i][j], &m[k][k]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.exact_div(&num, &prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m.swap_remove(n - 1).swap_remove(n - 1);
    Ok(if negate { ring.neg(&det) } else { det })
}

/// `A_t`: rows `b1[t], b2[t]`; columns `a_{i1i2i3}, a_{i1i2i4}, a_{i1i3i4},
/// a_{i2i3i4}`.
///
/// ```text
/// [ z_{i2i3}          -z_{i2i4}           z_{i3i4}  0 ]
/// [ z_{i1i3}/z_{i3i4} -z_{i1i4}/z_{i3i4}  0         1 ]
/// ```
pub fn matrix_a<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> Result<FormMatrix<R>> {
    let ring = s.ring();
    let v = t.vertices();
    let z = |p: usize, q: usize| s.zeta_diff(v[p], v[q]);
    let z34 = z(2, 3);
    let cols = t.faces().to_vec();
    let rows = vec![t.aux(1), t.aux(2)];
    let mut m = FormMatrix::zeros(ring.clone(), rows, cols)?;
    m.entries[0] = vec![z(1, 2), ring.neg(&z(1, 3)), z34.clone(), ring.zero()];
    m.entries[1] = vec![
        ring.div(&z(0, 2), &z34)?,
        ring.neg(&ring.div(&z(0, 3), &z34)?),
        ring.zero(),
        ring.one(),
    ];
    Ok(m)
}

/// A quadratic form `b^T M a` plus an optional extra even term.
#[derive(Clone)]
pub struct BilinearForm<R: Ring> {
    pub matrix: FormMatrix<R>,
    pub extra: GrassmannElement<R>,
}

impl<R: Ring> BilinearForm<R> {
    pub fn element(&self) -> GrassmannElement<R> {
        &self.matrix.bilinear() + &self.extra
    }

    /// Auxiliary generators in integration order.
    pub fn aux(&self) -> &[GeneratorId] {
        self.matrix.rows()
    }
}

/// `Phi_t`.
pub fn form_phi<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> Result<BilinearForm<R>> {
    Ok(BilinearForm {
        matrix: matrix_a(s, t)?,
        extra: GrassmannElement::zero(s.ring().clone()),
    })
}

/// `eps * lambda * z_{i1i3} z_{i1i4} z_{i2i3} z_{i2i4} z_{i3i4} * a_{i1i3i4} a_{i2i3i4}`.
/// The missing `z_{i1i2}` of `c_t` is supplied by `f_t` during integration.
fn gamma_term<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> GrassmannElement<R> {
    let ring = s.ring();
    let v = t.vertices();
    let mut coef = ring.mul(&ring.from_i64(epsilon(t)), s.lambda());
    for (p, q) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        coef = ring.mul(&coef, &s.zeta_diff(v[p], v[q]));
    }
    GrassmannElement::from_word(ring.clone(), &[t.face(0, 2, 3), t.face(1, 2, 3)], coef)
}

/// `eps * mu * b2 b1`.
fn psi_term<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> GrassmannElement<R> {
    let ring = s.ring();
    let coef = ring.mul(&ring.from_i64(epsilon(t)), s.mu());
    GrassmannElement::from_word(ring.clone(), &[t.aux(2), t.aux(1)], coef)
}

/// `Gamma_t = Phi_t + gamma term`.
pub fn form_gamma<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> Result<BilinearForm<R>> {
    Ok(BilinearForm {
        matrix: matrix_a(s, t)?,
        extra: gamma_term(s, t),
    })
}

/// `Psi_t = Phi_t + eps * mu * b2 b1`.
pub fn form_psi<R: Ring>(s: &Setting<R>, t: &Tetrahedron) -> Result<BilinearForm<R>> {
    Ok(BilinearForm {
        matrix: matrix_a(s, t)?,
        extra: psi_term(s, t),
    })
}

/// The form whose integral gives the weight of `kind`.
pub fn form<R: Ring>(s: &Setting<R>, kind: WeightKind, t: &Tetrahedron) -> Result<BilinearForm<R>> {
    match kind {
        WeightKind::F => form_phi(s, t),
        WeightKind::G => form_gamma(s, t),
        WeightKind::H => form_psi(s, t),
        // Gamma and Psi extras together integrate to an extra eps*mu*(face
        // term) as well, so the composite weight has no such form.
        WeightKind::Composite => Err(Error::Unsupported(
            "the composite weight has no quadratic Gaussian form".into(),
        )),
    }
}

/// `∬ exp(form) db1 db2`, with `db1` innermost.
pub fn integrate_out_aux<R: Ring>(form: &BilinearForm<R>) -> Result<GrassmannElement<R>> {
    Ok(form.element().exp()?.berezin_multi(form.aux()))
}

/// Combined matrix of one side: the per-tetrahedron `A` blocks stacked in the
/// side's row order over the side's faces in ascending order.
pub fn big_matrix<R: Ring>(s: &Setting<R>, side: Side) -> Result<FormMatrix<R>> {
    let tets = side.matrix_order();
    let rows: Vec<GeneratorId> = tets.iter().flat_map(|t| [t.aux(1), t.aux(2)]).collect();
    let mut m = FormMatrix::zeros(s.ring().clone(), rows, side.faces())?;
    for t in &tets {
        let a = matrix_a(s, t)?;
        for row in a.rows() {
            for col in a.cols() {
                m.set(row, col, a.entry(row, col)?.clone())?;
            }
        }
    }
    Ok(m)
}

/// One side of the pentagon computed as a single Gaussian integral: the
/// exponential of the summed forms, integrated over every auxiliary
/// generator and then over the inner faces.
pub fn pentagon_side_gaussian<R: Ring>(
    s: &Setting<R>,
    kind: WeightKind,
    side: Side,
    exec: Exec,
) -> Result<GrassmannElement<R>> {
    let mut total = GrassmannElement::zero(s.ring().clone());
    let mut aux = Vec::new();
    for t in side.product_order() {
        let f = form(s, kind, &t)?;
        total = &total + &f.element();
        aux.extend_from_slice(f.aux());
    }
    let integrated = total
        .exp_with(exec)?
        .berezin_multi(&aux)
        .berezin_multi(&side.inner_faces());
    Ok(integrated.scale(&side.prefactor(s)?))
}

fn check_outer_monomial(side: Side, m: &Monomial) -> Result<()> {
    let fail = |reason: String| Error::WrongSupport {
        monomial: m.to_string(),
        side: side.name(),
        reason,
    };
    if m.degree() != 3 {
        return Err(fail(format!("degree {} instead of 3", m.degree())));
    }
    let inner = side.inner_faces();
    let faces = side.faces();
    for g in m.generators() {
        if inner.contains(g) {
            return Err(fail(format!("{g} is an inner face")));
        }
        if !faces.contains(g) {
            return Err(fail(format!("{g} is not a face of this side")));
        }
    }
    Ok(())
}

/// Coefficient of a degree-3 outer monomial of the `f`-pentagon side, read
/// off a single minor of the combined matrix.
///
/// With rows `b_1..b_n`, the top part of `exp(sum_r b_r R_r)` is
/// `(-1)^{n(n-1)/2} b_1..b_n R_1..R_n`, and the coefficient of the word
/// `a_{C1}..a_{Cn}` in `R_1..R_n` is the minor on columns `C`. Taking `C` as
/// the inner faces followed by the faces of `m`, the remaining sign is read
/// from the engine by integrating that generator word exactly as the side is
/// integrated.
pub fn coefficient_via_minor<R: Ring>(s: &Setting<R>, side: Side, m: &Monomial) -> Result<R::Elem> {
    check_outer_monomial(side, m)?;
    let ring = s.ring();
    let matrix = big_matrix(s, side)?;
    let rows = matrix.rows().to_vec();
    let inner = side.inner_faces();
    let cols: Vec<GeneratorId> = inner.iter().chain(m.generators()).copied().collect();
    let det = matrix.minor(&rows, &cols)?;

    let word: Vec<GeneratorId> = rows.iter().chain(&cols).copied().collect();
    let integrated = GrassmannElement::from_word(ring.clone(), &word, ring.one())
        .berezin_multi(&rows)
        .berezin_multi(&inner);
    let word_sign = integrated.coefficient_of(m);

    let n = rows.len();
    let reorder = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let sign = ring.mul(&ring.from_i64(reorder), &word_sign);
    Ok(ring.mul(&ring.mul(&sign, &det), &side.prefactor(s)?))
}

/// All degree-3 monomials in the six outer faces (20 of them).
pub fn outer_monomials(side: Side) -> Vec<Monomial> {
    let outer = side.outer_faces();
    let mut out = Vec::new();
    for a in 0..outer.len() {
        for b in a + 1..outer.len() {
            for c in b + 1..outer.len() {
                out.push(Monomial::from_sorted(&[outer[a], outer[b], outer[c]]));
            }
        }
    }
    out
}

/// (monomial, minor-derived coefficient, directly expanded coefficient).
pub type MinorRow<R> = (Monomial, <R as Ring>::Elem, <R as Ring>::Elem);

pub fn minor_comparison<R: Ring>(
    s: &Setting<R>,
    side: Side,
    exec: Exec,
) -> Result<Vec<MinorRow<R>>> {
    let direct = crate::pentagon::pentagon_side(s, WeightKind::F, side)?;
    par::map(exec, &outer_monomials(side), |m| {
        let via = coefficient_via_minor(s, side, m)?;
        Ok((m.clone(), via, direct.coefficient_of(m)))
    })
    .into_iter()
    .collect()
}

/// Stacked rows of `t` inside the combined matrix, as an `A`-shaped block.
pub fn block_of<R: Ring>(m: &FormMatrix<R>, t: &Tetrahedron) -> Result<FormMatrix<R>> {
    let rows = vec![t.aux(1), t.aux(2)];
    let cols = t.faces().to_vec();
    let mut out = FormMatrix::zeros(m.ring.clone(), rows.clone(), cols.clone())?;
    for r in &rows {
        for c in &cols {
            out.set(r, c, m.entry(r, c)?.clone())?;
        }
    }
    Ok(out)
}

impl<R: Ring> PartialEq for FormMatrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<R: Ring> fmt::Debug for FormMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{zeta_diff, RationalFunctions, Scalar};
    use crate::weights::{weight, weight_f, PENTAGON_TETRAHEDRA};

    fn face(i: u8, j: u8, k: u8) -> GeneratorId {
        GeneratorId::face(i, j, k)
    }

    fn tet(v: [u8; 4]) -> Tetrahedron {
        Tetrahedron::new(v).unwrap()
    }

    fn div(a: Scalar, b: Scalar) -> Scalar {
        a.checked_div(&b).unwrap()
    }

    #[test]
    fn matrix_a_entries() {
        let s = Setting::symbolic();
        let t = tet([1, 2, 3, 4]);
        let a = matrix_a(&s, &t).unwrap();
        assert_eq!(
            a.entry(&t.aux(1), &face(1, 2, 3)).unwrap(),
            &zeta_diff(2, 3)
        );
        assert_eq!(a.entry(&t.aux(2), &face(2, 3, 4)).unwrap(), &Scalar::one());
        assert!(a.entry(&t.aux(1), &face(2, 3, 4)).unwrap().is_zero());
        assert_eq!(
            a.entry(&t.aux(2), &face(1, 2, 3)).unwrap(),
            &div(zeta_diff(1, 3), zeta_diff(3, 4))
        );
    }

    #[test]
    fn matrix_a_substitution() {
        let s = Setting::symbolic();
        let t = tet([1, 2, 3, 5]);
        let a = matrix_a(&s, &t).unwrap();
        assert_eq!(
            a.cols(),
            &[face(1, 2, 3), face(1, 2, 5), face(1, 3, 5), face(2, 3, 5)]
        );
        assert_eq!(
            a.entry(&t.aux(1), &face(1, 2, 5)).unwrap(),
            &-zeta_diff(2, 5)
        );
        assert_eq!(
            a.entry(&t.aux(2), &face(1, 2, 5)).unwrap(),
            &-div(zeta_diff(1, 5), zeta_diff(3, 5))
        );
    }

    #[test]
    fn phi_is_bilinear() {
        let s = Setting::symbolic();
        let phi = form_phi(&s, &tet([1, 2, 3, 4])).unwrap().element();
        assert!(phi.is_even());
        for (m, _) in phi.terms() {
            let g = m.generators();
            assert_eq!(g.len(), 2);
            assert!(g[0].is_face() && !g[1].is_face());
        }
    }

    #[test]
    fn gamma_and_psi_extra_terms() {
        let s = Setting::symbolic().with_params(Scalar::one(), Scalar::one());
        let t = tet([1, 2, 3, 4]);
        let gamma = form_gamma(&s, &t).unwrap();
        let k = [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
            .iter()
            .fold(Scalar::one(), |acc, &(i, j)| &acc * &zeta_diff(i, j));
        let expected =
            GrassmannElement::from_word(RationalFunctions, &[face(1, 3, 4), face(2, 3, 4)], k);
        assert_eq!(gamma.extra, expected);

        let psi = form_psi(&s, &t).unwrap();
        let expected =
            GrassmannElement::from_word(RationalFunctions, &[t.aux(2), t.aux(1)], Scalar::one());
        assert_eq!(psi.extra, expected);
    }

    #[test]
    fn integrate_phi_gives_f() {
        let s = Setting::symbolic();
        for t in PENTAGON_TETRAHEDRA {
            let got = integrate_out_aux(&form_phi(&s, &t).unwrap()).unwrap();
            assert_eq!(got, weight_f(&s, &t), "tetrahedron {t}");
        }
    }

    #[test]
    fn integrate_deformed_forms() {
        let s = Setting::symbolic();
        let t = tet([1, 2, 3, 5]);
        for kind in [WeightKind::G, WeightKind::H] {
            let got = integrate_out_aux(&form(&s, kind, &t).unwrap()).unwrap();
            assert_eq!(got, weight(&s, kind, &t), "{kind:?}");
        }
        assert!(matches!(
            form(&s, WeightKind::Composite, &t),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn big_matrix_entries() {
        let s = Setting::symbolic();
        let lhs = big_matrix(&s, Side::Lhs).unwrap();
        assert_eq!(lhs.rows().len(), 4);
        assert_eq!(lhs.cols().len(), 7);
        let b = |v: [u8; 4], slot| GeneratorId::aux(v, slot);
        assert_eq!(
            lhs.entry(&b([1, 2, 3, 4], 1), &face(1, 3, 4)).unwrap(),
            &zeta_diff(3, 4)
        );
        let rhs = big_matrix(&s, Side::Rhs).unwrap();
        assert_eq!(rhs.rows().len(), 6);
        assert_eq!(rhs.cols().len(), 9);
        assert_eq!(
            rhs.entry(&b([2, 3, 4, 5], 2), &face(2, 3, 4)).unwrap(),
            &div(zeta_diff(2, 4), zeta_diff(4, 5))
        );
        assert!(rhs
            .entry(&b([1, 2, 4, 5], 1), &face(3, 4, 5))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn minor_examples() {
        let s = Setting::symbolic();
        let t = tet([1, 2, 3, 4]);
        let a = matrix_a(&s, &t).unwrap();
        let rows = [t.aux(1), t.aux(2)];
        assert_eq!(
            a.minor(&rows, &[face(1, 3, 4), face(2, 3, 4)]).unwrap(),
            zeta_diff(3, 4)
        );
        assert_eq!(
            a.minor(&rows[..1], &[face(1, 2, 4)]).unwrap(),
            -zeta_diff(2, 4)
        );
        assert!(matches!(
            a.minor(&rows, &[face(1, 3, 4)]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            a.minor(&rows[..1], &[face(3, 4, 5)]),
            Err(Error::BadLabel(_))
        ));
    }

    #[test]
    fn determinant_of_diagonal() {
        let r = RationalFunctions;
        let d = [zeta_diff(1, 2), zeta_diff(3, 4), Scalar::from_i64(5)];
        let mut m = vec![vec![Scalar::zero(); 3]; 3];
        for k in 0..3 {
            m[k][k] = d[k].clone();
        }
        let expected = d.iter().fold(Scalar::one(), |acc, x| &acc * x);
        assert_eq!(determinant(&r, m).unwrap(), expected);
        assert_eq!(determinant(&r, vec![]).unwrap(), Scalar::one());
    }

    #[test]
    fn determinant_needs_pivoting() {
        let r = RationalFunctions;
        let m = vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![zeta_diff(1, 2), Scalar::from_i64(3)],
        ];
        assert_eq!(determinant(&r, m).unwrap(), -zeta_diff(1, 2));
    }

    #[test]
    fn lhs_minor_hand_value() {
        let s = Setting::symbolic();
        let m = Monomial::from_sorted(&[face(1, 2, 4), face(1, 2, 5), face(1, 3, 5)]);
        let via = coefficient_via_minor(&s, Side::Lhs, &m).unwrap();
        assert_eq!(via, -(&zeta_diff(1, 2) * &zeta_diff(1, 5)));
    }

    #[test]
    fn minor_rejects_inner_face() {
        let s = Setting::symbolic();
        let m = Monomial::from_sorted(&[face(1, 2, 3), face(1, 2, 4), face(1, 2, 5)]);
        assert!(matches!(
            coefficient_via_minor(&s, Side::Lhs, &m),
            Err(Error::WrongSupport { .. })
        ));
        let short = Monomial::from_sorted(&[face(1, 2, 4)]);
        assert!(coefficient_via_minor(&s, Side::Rhs, &short).is_err());
    }

    #[test]
    fn twenty_outer_monomials_per_side() {
        assert_eq!(outer_monomials(Side::Lhs).len(), 20);
        assert_eq!(outer_monomials(Side::Rhs), outer_monomials(Side::Lhs));
    }
}
