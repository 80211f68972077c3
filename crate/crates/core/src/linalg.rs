//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn fmt_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(fmt_scalar).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: zeros(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries length must be rows * cols");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_cols(rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    /// Integer entries, row-major.
    pub fn from_ints(rows: usize, cols: usize, v: &[i64]) -> Self {
        Self::from_vec(rows, cols, v.iter().map(|&x| int(x)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|i| {
                let mut s = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det *= &piv;
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = &a[(r, c)] / &piv;
                for k in c..n {
                    let t = &f * &a[(c, k)];
                    a[(r, k)] -= t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Scalar::one();
        }
        let (red, piv) = rref(&aug);
        if piv.len() < n || !piv[..n].iter().copied().eq(0..n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced row-echelon form; zero rows are kept at the bottom.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, row);
        let inv = a[(row, c)].recip();
        for k in c..a.cols {
            if !a[(row, k)].is_zero() {
                a[(row, k)] *= &inv;
            }
        }
        for r in 0..a.rows {
            if r == row || a[(r, c)].is_zero() {
                continue;
            }
            let f = a[(r, c)].clone();
            for k in c..a.cols {
                if a[(row, k)].is_zero() {
                    continue;
                }
                let t = &f * &a[(row, k)];
                a[(r, k)] -= t;
            }
        }
        pivots.push(c);
        row += 1;
    }
    (a, pivots)
}

/// A subspace of 𝔽^n stored by its canonical reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: vec![] }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, &Matrix::identity(ambient_dim).row_vecs())
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        let (red, pivots) = rref(&Matrix::from_rows(ambient_dim, vectors));
        let rows: Vec<Vec<Scalar>> = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Subspace { ambient_dim, basis: Matrix::from_rows(ambient_dim, &rows), pivots }
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Self::span(m.rows(), &m.transpose().row_vecs())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn member(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Expansion of `v` in the rref basis. The coefficient of row r is v at pivot r.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length differs from ambient dimension");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (r, c) in coords.iter().enumerate() {
            let neg = -c;
            add_scaled(&mut rest, &neg, self.basis.row(r));
        }
        is_zero_vec(&rest).then_some(coords)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_vecs().iter().all(|v| self.member(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis_vecs();
        v.extend(other.basis_vecs());
        Subspace::span(self.ambient_dim, &v)
    }
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (red, pivots) = rref(m);
    let n = m.cols();
    let mut vecs = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = zeros(n);
        v[free] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[(r, free)].clone();
        }
        vecs.push(v);
    }
    Subspace::span(n, &vecs)
}

/// Solves `a x = b`, returning the solution that vanishes on all free columns.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), a.rows(), "right-hand side length differs from row count");
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = zeros(n);
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = red[(r, n)].clone();
    }
    Some(x)
}

/// A complement basis of `sub` inside `whole` together with the projection onto it.
#[derive(Clone, Debug)]
pub struct Quotient {
    representatives: Vec<Vec<Scalar>>,
    sub_dim: usize,
    combined: Matrix,
}

impl Quotient {
    pub fn representatives(&self) -> &[Vec<Scalar>] {
        &self.representatives
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of `v` on the representatives; `None` if `v` is outside `whole`.
    pub fn reduce(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let x = solve(&self.combined, v)?;
        Some(x[self.sub_dim..].to_vec())
    }
}

pub fn quotient_data(sub: &Subspace, whole: &Subspace) -> Result<Quotient> {
    if sub.ambient_dim() != whole.ambient_dim() || !whole.contains(sub) {
        return Err(Error::NotContained);
    }
    let mut acc = sub.clone();
    let mut reps = Vec::new();
    for v in whole.basis_vecs() {
        if !acc.member(&v) {
            acc = acc.sum(&Subspace::span(v.len(), std::slice::from_ref(&v)));
            reps.push(v);
        }
    }
    let mut cols = sub.basis_vecs();
    cols.extend(reps.iter().cloned());
    let combined = Matrix::from_cols(whole.ambient_dim(), &cols);
    Ok(Quotient { representatives: reps, sub_dim: sub.dim(), combined })
}

pub fn scalar_is_square(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Scalar::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, v: &[i64]) -> Matrix {
        Matrix::from_ints(rows, cols, v)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&Matrix::identity(2));
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);
        let (r, p) = rref(&m(2, 2, &[1, 1, 1, 1]));
        assert_eq!(r, m(2, 2, &[1, 1, 0, 0]));
        assert_eq!(p, vec![0]);
        assert_eq!(rref(&m(2, 2, &[0, 2, 3, 0])).0, Matrix::identity(2));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
        let k = kernel_basis(&m(1, 2, &[1, 1]));
        assert_eq!(k.basis_vecs(), vec![vec![int(1), int(-1)]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![ratio(3, 7), int(-2)];
        assert_eq!(solve(&Matrix::identity(2), &b), Some(b.clone()));
        assert_eq!(solve(&m(2, 2, &[1, 1, 1, 1]), &[int(1), int(0)]), None);
        assert_eq!(solve(&m(2, 2, &[2, 0, 0, 3]), &[int(1), int(1)]), Some(vec![ratio(1, 2), ratio(1, 3)]));
    }

    #[test]
    fn solve_zero_on_free_columns() {
        let a = m(1, 3, &[0, 2, 4]);
        assert_eq!(solve(&a, &[int(6)]), Some(vec![int(0), int(3), int(0)]));
    }

    #[test]
    fn membership_examples() {
        let s = Subspace::span(2, &[vec![int(1), int(-1)]]);
        assert!(s.member(&zeros(2)));
        assert!(!s.member(&[int(1), int(0)]));
        assert_eq!(s.coordinates(&[int(2), int(-2)]), Some(vec![int(2)]));
    }

    #[test]
    fn quotient_examples() {
        let whole = Subspace::span(3, &[vec![int(1), int(0), int(0)], vec![int(0), int(1), int(1)]]);
        assert!(quotient_data(&whole, &whole).unwrap().representatives().is_empty());
        let q = quotient_data(&Subspace::zero(3), &whole).unwrap();
        assert_eq!(q.representatives(), whole.basis_vecs().as_slice());
        let sub = Subspace::span(3, &[vec![int(1), int(1), int(1)]]);
        let q = quotient_data(&sub, &whole).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.reduce(&q.representatives()[0]), Some(vec![int(1)]));
        assert_eq!(q.reduce(&[int(2), int(2), int(2)]), Some(vec![int(0)]));
        let outside = Subspace::span(3, &[vec![int(0), int(0), int(1)]]);
        assert!(quotient_data(&outside, &whole).is_err());
    }

    #[test]
    fn det_and_inverse() {
        let a = m(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        assert_eq!(a.det(), int(18));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
        assert_eq!(Matrix::zeros(0, 0).det(), int(1));
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert_eq!(fmt_scalar(&ratio(4, -6)), "-2/3");
    }

    #[test]
    fn rational_squares() {
        assert_eq!(scalar_is_square(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(scalar_is_square(&int(2)), None);
        assert_eq!(scalar_is_square(&int(-4)), None);
    }
}
