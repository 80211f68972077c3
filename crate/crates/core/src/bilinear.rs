//! Symplectic and pseudo-euclidean forms, anti-derivations and symplectic double extensions.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{is_isomorphism, JJAlgebra, LinearMap};
use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::linalg::{int, is_zero_vec, kernel_basis, ratio, unit, zeros, Matrix, Scalar, Subspace};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Symplectic,
    PseudoEuclidean,
}

impl FormKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FormKind::Symplectic => "symplectic",
            FormKind::PseudoEuclidean => "pseudo_euclidean",
        }
    }

    pub fn parse(s: &str) -> Result<FormKind> {
        match s {
            "symplectic" => Ok(FormKind::Symplectic),
            "pseudo" | "pseudo_euclidean" | "pseudo-euclidean" => Ok(FormKind::PseudoEuclidean),
            _ => Err(Error::Parse(format!("unknown form kind {s:?}"))),
        }
    }
}

/// f(x, y) = xᵀ M y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub kind: FormKind,
    pub matrix: Matrix,
}

impl BilinearForm {
    pub fn new(kind: FormKind, matrix: Matrix) -> Self {
        BilinearForm { kind, matrix }
    }

    pub fn from_ints(kind: FormKind, m: usize, entries: &[i64]) -> Self {
        BilinearForm { kind, matrix: Matrix::from_ints(m, m, entries) }
    }

    /// e₁…e_{2k} paired as ω(e_{2i-1}, e_{2i}) = 1.
    pub fn standard_symplectic(k: usize) -> Self {
        let mut m = Matrix::zeros(2 * k, 2 * k);
        for i in 0..k {
            m[(2 * i, 2 * i + 1)] = int(1);
            m[(2 * i + 1, 2 * i)] = int(-1);
        }
        BilinearForm { kind: FormKind::Symplectic, matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        x.iter().zip(self.matrix.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.det().is_zero()
    }
}

/// D(xy) = −D(x)y − xD(y) on basis pairs.
pub fn is_anti_derivation(a: &JJAlgebra, d: &LinearMap) -> bool {
    let m = a.dim();
    if d.dim() != m {
        return false;
    }
    (0..m).all(|i| {
        (i..m).all(|j| {
            let (x, y) = (unit(m, i), unit(m, j));
            let lhs = d.apply(a.basis_product(i, j));
            let mut rhs = a.mul(&d.apply(&x), &y);
            for (r, s) in rhs.iter_mut().zip(a.mul(&x, &d.apply(&y))) {
                *r = -(&*r + s);
            }
            lhs == rhs
        })
    })
}

fn compatibility_holds(a: &JJAlgebra, f: &BilinearForm) -> bool {
    let m = a.dim();
    let e = |i| unit(m, i);
    let p = |i: usize, j: usize| a.basis_product(i, j).to_vec();
    (0..m).all(|i| {
        (0..m).all(|j| {
            (0..m).all(|k| match f.kind {
                FormKind::Symplectic => {
                    (f.eval(&p(i, j), &e(k)) + f.eval(&p(j, k), &e(i)) + f.eval(&p(k, i), &e(j))).is_zero()
                }
                FormKind::PseudoEuclidean => f.eval(&p(i, j), &e(k)) == f.eval(&e(i), &p(j, k)),
            })
        })
    })
}

fn has_symmetry(f: &BilinearForm) -> bool {
    let t = f.matrix.transpose();
    match f.kind {
        FormKind::Symplectic => t == f.matrix.scale(&int(-1)),
        FormKind::PseudoEuclidean => t == f.matrix,
    }
}

/// (Skew)symmetry, nondegeneracy and the compatibility identity on basis triples.
pub fn verify_form(a: &JJAlgebra, f: &BilinearForm) -> bool {
    f.matrix.rows() == a.dim()
        && f.matrix.cols() == a.dim()
        && has_symmetry(f)
        && f.is_nondegenerate()
        && compatibility_holds(a, f)
}

/// All matrices (flattened row-major, m² coordinates) satisfying the linear conditions.
pub fn compatible_form_space(a: &JJAlgebra, kind: FormKind) -> Subspace {
    let m = a.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..m {
        for j in i..m {
            let mut r = zeros(m * m);
            r[i * m + j] += int(1);
            match kind {
                FormKind::Symplectic => r[j * m + i] += int(1),
                FormKind::PseudoEuclidean => r[j * m + i] -= int(1),
            }
            if !is_zero_vec(&r) {
                rows.push(r);
            }
        }
    }
    // coefficient of M[l][c] in f(e_i e_j, e_k)
    let term = |r: &mut Vec<Scalar>, i: usize, j: usize, k: usize, sign: &Scalar, first: bool| {
        for (l, c) in a.basis_product(i, j).iter().enumerate() {
            if !c.is_zero() {
                let idx = if first { l * m + k } else { k * m + l };
                r[idx] += c * sign;
            }
        }
    };
    let one = Scalar::one();
    let neg = -Scalar::one();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let mut r = zeros(m * m);
                match kind {
                    FormKind::Symplectic => {
                        term(&mut r, i, j, k, &one, true);
                        term(&mut r, j, k, i, &one, true);
                        term(&mut r, k, i, j, &one, true);
                    }
                    FormKind::PseudoEuclidean => {
                        term(&mut r, i, j, k, &one, true);
                        term(&mut r, j, k, i, &neg, false);
                    }
                }
                if !is_zero_vec(&r) {
                    rows.push(r);
                }
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(m * m);
    }
    kernel_basis(&Matrix::from_rows(m * m, &rows))
}

/// Determinant of the m×m matrix of linear polynomials, by expansion along rows with
/// minors memoized on the set of used columns.
fn symbolic_det(entries: &[Vec<Poly>], nvars: usize) -> Poly {
    fn go(row: usize, used: u32, e: &[Vec<Poly>], nvars: usize, memo: &mut HashMap<u32, Poly>) -> Poly {
        let m = e.len();
        if row == m {
            return Poly::constant(nvars, Scalar::one());
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = Poly::zero(nvars);
        let mut sign = Scalar::one();
        for c in 0..m {
            if used & (1 << c) != 0 {
                continue;
            }
            if !e[row][c].is_zero() {
                let minor = go(row + 1, used | (1 << c), e, nvars, memo);
                acc = acc.add(&e[row][c].mul(&minor).scale(&sign));
            }
            sign = -sign;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(0, 0, entries, nvars, &mut HashMap::new())
}

/// The determinant of the generic element Σ x_k B_k of a space of flattened m×m matrices.
pub fn generic_determinant(space: &Subspace) -> Poly {
    let m = (space.ambient_dim() as f64).sqrt().round() as usize;
    let basis = space.basis_vecs();
    let r = basis.len();
    let entries: Vec<Vec<Poly>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    basis.iter().enumerate().fold(Poly::zero(r), |acc, (k, b)| acc.add(&Poly::var(r, k).scale(&b[i * m + j])))
                })
                .collect()
        })
        .collect();
    symbolic_det(&entries, r)
}

/// Some element with nonzero determinant, or None when the generic determinant vanishes
/// identically. Coordinates are fixed one at a time to values in 0..=deg that keep the
/// polynomial nonzero, which always succeeds for a nonzero polynomial.
pub fn find_nondegenerate(space: &Subspace, kind: FormKind) -> Option<BilinearForm> {
    let m = (space.ambient_dim() as f64).sqrt().round() as usize;
    let det = generic_determinant(space);
    if det.is_zero() {
        return None;
    }
    let r = space.dim();
    let deg = det.degree() as i64;
    let mut p = det;
    let mut point = Vec::with_capacity(r);
    for k in 0..r {
        let (v, q) = (0..=deg)
            .map(|v| (int(v), p.substitute(k, &int(v))))
            .find(|(_, q)| !q.is_zero())
            .expect("a nonzero polynomial of degree d survives one of d + 1 values");
        point.push(v);
        p = q;
    }
    let basis = space.basis_vecs();
    let mut flat = zeros(m * m);
    for (x, b) in point.iter().zip(&basis) {
        for (f, v) in flat.iter_mut().zip(b) {
            *f += x * v;
        }
    }
    let f = BilinearForm { kind, matrix: Matrix::from_vec(m, m, flat) };
    debug_assert!(f.is_nondegenerate());
    Some(f)
}

/// g* with f(g x, y) = f(x, g* y), i.e. M⁻¹ gᵀ M.
pub fn adjoint_map(f: &BilinearForm, g: &LinearMap) -> Result<LinearMap> {
    let inv = f.matrix.inverse().ok_or(Error::Singular)?;
    Ok(LinearMap::new(inv.mul(&g.matrix().transpose()).mul(&f.matrix)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialAdmissiblePair {
    pub d_map: LinearMap,
    pub a0: Vec<Scalar>,
}

/// D ∈ Ader, A₀ ∈ Ker D, D² = −½ L_{A₀} and ω(A₀, Im D) = 0.
pub fn is_special_admissible(a: &JJAlgebra, omega: &BilinearForm, pair: &SpecialAdmissiblePair) -> bool {
    let m = a.dim();
    let d = &pair.d_map;
    if d.dim() != m || pair.a0.len() != m || omega.dim() != m {
        return false;
    }
    let Ok(l) = a.left_mult(&pair.a0) else { return false };
    is_anti_derivation(a, d)
        && is_zero_vec(&d.apply(&pair.a0))
        && d.compose(d) == l.scale(&ratio(-1, 2))
        && (0..m).all(|i| omega.eval(&pair.a0, &d.apply(&unit(m, i))).is_zero())
}

/// 𝔽e ⊕ J ⊕ 𝔽e* with basis order (e, e₁..e_m, e*).
pub fn double_extension(
    a: &JJAlgebra,
    omega: &BilinearForm,
    pair: &SpecialAdmissiblePair,
) -> Result<(JJAlgebra, BilinearForm)> {
    if !is_special_admissible(a, omega, pair) {
        return Err(Error::Precondition("not a special admissible pair".into()));
    }
    let m = a.dim();
    let n = m + 2;
    let star = m + 1;
    let d = &pair.d_map;
    let d_star = adjoint_map(omega, d)?;
    let skew = d.add(&d_star.scale(&int(-1)));
    let embed = |v: &[Scalar]| {
        let mut w = zeros(n);
        w[1..=m].clone_from_slice(v);
        w
    };
    let half = ratio(1, 2);
    let mut out = JJAlgebra::zero(format!("DE({})", a.name()), n);
    out.set_product(0, 0, embed(&pair.a0))?;
    for i in 0..m {
        let x = unit(m, i);
        let mut v = embed(&d.apply(&x));
        v[star] = &half * omega.eval(&pair.a0, &x);
        out.set_product(0, i + 1, v)?;
        for j in i..m {
            let mut v = embed(a.basis_product(i, j));
            v[star] = omega.eval(&skew.apply(&x), &unit(m, j));
            out.set_product(i + 1, j + 1, v)?;
        }
    }
    let mut w = Matrix::zeros(n, n);
    for i in 0..m {
        for j in 0..m {
            w[(i + 1, j + 1)] = omega.matrix[(i, j)].clone();
        }
    }
    w[(0, star)] = int(1);
    w[(star, 0)] = int(-1);
    let form = BilinearForm::new(FormKind::Symplectic, w);
    if !out.is_jj() || !verify_form(&out, &form) {
        return Err(Error::Precondition("double extension failed its own checks".into()));
    }
    Ok((out, form))
}

/// p: (a, f) → (b, g) is an algebra isomorphism with g(px, py) = f(x, y).
pub fn i_isometry_check(p: &LinearMap, a: &JJAlgebra, f: &BilinearForm, b: &JJAlgebra, g: &BilinearForm) -> Result<bool> {
    let m = a.dim();
    if b.dim() != m || p.dim() != m || f.dim() != m || g.dim() != m {
        return Err(Error::Dimension { expected: m, got: b.dim() });
    }
    if !is_isomorphism(p, a, b) {
        return Ok(false);
    }
    let pm = p.matrix();
    Ok(pm.transpose().mul(&g.matrix).mul(pm) == f.matrix)
}

/// The form f(x, y) = g(px, py) pulled back along p.
pub fn pull_back(g: &BilinearForm, p: &LinearMap) -> BilinearForm {
    let pm = p.matrix();
    BilinearForm::new(g.kind, pm.transpose().mul(&g.matrix).mul(pm))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub name: String,
    pub dim: usize,
    pub space_dim: usize,
    pub witness: Option<BilinearForm>,
}

impl SurveyRow {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }

    /// A witness, or the reason none exists.
    pub fn certificate(&self) -> String {
        match &self.witness {
            Some(_) => "nondegenerate witness found".into(),
            None if self.space_dim == 0 => "no compatible forms".into(),
            None => format!("generic determinant over the {}-dim compatible space is identically zero", self.space_dim),
        }
    }
}

pub fn survey_algebra(a: &JJAlgebra, kind: FormKind) -> SurveyRow {
    let space = compatible_form_space(a, kind);
    SurveyRow { name: a.name().to_string(), dim: a.dim(), space_dim: space.dim(), witness: find_nondegenerate(&space, kind) }
}

/// Existence of a nondegenerate compatible form per named algebra, in input order.
pub fn structure_survey(names: &[&str], kind: FormKind) -> Result<Vec<SurveyRow>> {
    let algebras: Vec<JJAlgebra> = names.iter().map(|n| catalog(n)).collect::<Result<_>>()?;
    Ok(algebras.par_iter().map(|a| survey_algebra(a, kind)).collect())
}
