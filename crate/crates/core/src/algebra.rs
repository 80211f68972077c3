//! Jacobi-Jordan algebras given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, int, is_zero_vec, unit, zeros, Matrix, Scalar, Subspace};

/// Position of the unordered pair `i <= j` in a packed upper triangle of size `m`.
pub(crate) fn pair_index(m: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * (2 * m - i + 1) / 2 + (j - i)
}

/// A commutative algebra e_i·e_j = Σ c(i,j)_k e_k. Only pairs i ≤ j are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JJAlgebra {
    name: String,
    dim: usize,
    table: Vec<Vec<Scalar>>,
}

impl JJAlgebra {
    pub fn zero(name: impl Into<String>, dim: usize) -> Self {
        JJAlgebra { name: name.into(), dim, table: vec![zeros(dim); dim * (dim + 1) / 2] }
    }

    /// Builds from 1-based sparse data `(i, j, k, c)` meaning e_i·e_j gets c·e_k.
    pub fn from_terms(name: impl Into<String>, dim: usize, terms: &[(usize, usize, usize, i64)]) -> Self {
        let mut a = Self::zero(name, dim);
        for &(i, j, k, c) in terms {
            let slot = &mut a.table[pair_index(dim, i - 1, j - 1)][k - 1];
            *slot += int(c);
        }
        a
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of e_i·e_j (0-based).
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[pair_index(self.dim, i, j)]
    }

    pub fn set_product(&mut self, i: usize, j: usize, coeffs: Vec<Scalar>) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::Index(format!("pair ({}, {}) in dimension {}", i + 1, j + 1, self.dim)));
        }
        check_len(self.dim, coeffs.len())?;
        let idx = pair_index(self.dim, i, j);
        self.table[idx] = coeffs;
        Ok(())
    }

    /// Nonzero products as `(i, j, coeffs)` with i ≤ j, 0-based.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, &[Scalar])> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                let c = self.basis_product(i, j);
                if !is_zero_vec(c) {
                    out.push((i, j, c));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|c| is_zero_vec(c))
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        check_len(self.dim, x.len())?;
        check_len(self.dim, y.len())?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    pub(crate) fn jacobiator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut s = self.mul(x, &self.mul(y, z));
        for (k, v) in s.iter_mut().zip(self.mul(y, &self.mul(z, x))) {
            *k += v;
        }
        for (k, v) in s.iter_mut().zip(self.mul(z, &self.mul(x, y))) {
            *k += v;
        }
        s
    }

    /// Index triples i ≤ j ≤ k (0-based) where the Jacobi identity fails.
    pub fn verify_jj(&self) -> Vec<(usize, usize, usize)> {
        let m = self.dim;
        let mut bad = Vec::new();
        for i in 0..m {
            for j in i..m {
                for k in j..m {
                    let s = self.jacobiator(&unit(m, i), &unit(m, j), &unit(m, k));
                    if !is_zero_vec(&s) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn is_jj(&self) -> bool {
        self.verify_jj().is_empty()
    }

    /// Left Leibniz identity x(yz) = (xy)z + y(xz) on basis triples.
    pub fn is_leibniz(&self) -> bool {
        let m = self.dim;
        let e = |i| unit(m, i);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let lhs = self.mul(&e(i), &self.mul(&e(j), &e(k)));
                    let mut rhs = self.mul(&self.mul(&e(i), &e(j)), &e(k));
                    for (r, v) in rhs.iter_mut().zip(self.mul(&e(j), &self.mul(&e(i), &e(k)))) {
                        *r += v;
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn left_mult(&self, x: &[Scalar]) -> Result<LinearMap> {
        check_len(self.dim, x.len())?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(x, &unit(self.dim, j))).collect();
        Ok(LinearMap::new(Matrix::from_cols(self.dim, &cols)))
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let m = self.dim;
        let squares: Vec<Vec<Scalar>> = self.table.clone();
        let square = Subspace::span(m, &squares);
        let cubes: Vec<Vec<Scalar>> = square
            .basis_vecs()
            .iter()
            .flat_map(|s| (0..m).map(move |i| (i, s.clone())))
            .map(|(i, s)| self.mul(&unit(m, i), &s))
            .collect();
        let cube = Subspace::span(m, &cubes);
        // x·e_j = 0 for all j: stack the left multiplications L_{e_j} as one linear system in x.
        let mut rows = Vec::new();
        for j in 0..m {
            let lj = self.left_mult(&unit(m, j)).expect("length matches");
            rows.extend(lj.matrix().row_vecs());
        }
        let ann = crate::linalg::kernel_basis(&Matrix::from_rows(m, &rows));
        Fingerprint { dim: m, square_dim: square.dim(), cube_dim: cube.dim(), annihilator_dim: ann.dim(), h2: None }
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Dimension { expected, got })
    }
}

/// Isomorphism invariants used to screen out non-isomorphic pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub square_dim: usize,
    pub cube_dim: usize,
    pub annihilator_dim: usize,
    pub h2: Option<usize>,
}

/// A linear endomorphism; column j is the image of e_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "linear maps are square");
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: Matrix::identity(n) }
    }

    pub fn zero(n: usize) -> Self {
        LinearMap { matrix: Matrix::zeros(n, n) }
    }

    pub fn from_images(images: &[Vec<Scalar>]) -> Self {
        LinearMap::new(Matrix::from_cols(images.len(), images))
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        LinearMap { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        self.matrix.inverse().map(|m| LinearMap { matrix: m })
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.add(&other.matrix) }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(c) }
    }
}

/// Transports the constants of `a` so that `p` becomes an isomorphism from the result onto `a`.
pub fn apply_basis_change(a: &JJAlgebra, p: &LinearMap) -> Result<JJAlgebra> {
    check_len(a.dim(), p.dim())?;
    let inv = p.inverse().ok_or(Error::Singular)?;
    let m = a.dim();
    let images: Vec<Vec<Scalar>> = (0..m).map(|i| p.matrix().col(i)).collect();
    let mut b = JJAlgebra::zero(a.name(), m);
    for i in 0..m {
        for j in i..m {
            let prod = a.mul(&images[i], &images[j]);
            b.set_product(i, j, inv.apply(&prod))?;
        }
    }
    Ok(b)
}

/// True iff `p` is invertible and p(x·_a y) = p(x)·_b p(y) on basis pairs.
pub fn is_isomorphism(p: &LinearMap, a: &JJAlgebra, b: &JJAlgebra) -> bool {
    let m = a.dim();
    if b.dim() != m || p.dim() != m || p.matrix().det().is_zero() {
        return false;
    }
    let images: Vec<Vec<Scalar>> = (0..m).map(|i| p.matrix().col(i)).collect();
    (0..m).all(|i| (i..m).all(|j| p.apply(a.basis_product(i, j)) == b.mul(&images[i], &images[j])))
}

/// Basis x_1..x_m, y_1..y_m, z with x_i·y_i = z.
pub fn heisenberg(m: usize) -> Result<JJAlgebra> {
    if m == 0 {
        return Err(Error::Precondition("heisenberg algebra needs m >= 1".into()));
    }
    let terms: Vec<(usize, usize, usize, i64)> = (1..=m).map(|i| (i, m + i, 2 * m + 1, 1)).collect();
    Ok(JJAlgebra::from_terms(format!("H_{m}"), 2 * m + 1, &terms))
}

pub fn direct_sum(a: &JJAlgebra, b: &JJAlgebra) -> JJAlgebra {
    let (p, q) = (a.dim(), b.dim());
    let n = p + q;
    let mut s = JJAlgebra::zero(format!("{}+{}", a.name(), b.name()), n);
    for (i, j, c) in a.nonzero_products() {
        let mut v = c.to_vec();
        v.resize(n, Scalar::zero());
        s.set_product(i, j, v).expect("in range");
    }
    for (i, j, c) in b.nonzero_products() {
        let mut v = zeros(p);
        v.extend(c.iter().cloned());
        s.set_product(p + i, p + j, v).expect("in range");
    }
    s
}

/// π(e_1), …, π(e_m) acting on a space of dimension `dim_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dim_v: usize,
    pub pi: Vec<Matrix>,
}

/// π(x)π(y) + π(y)π(x) = −π(x·y) on basis pairs.
pub fn verify_representation(a: &JJAlgebra, r: &Representation) -> Result<bool> {
    check_len(a.dim(), r.pi.len())?;
    for p in &r.pi {
        check_len(r.dim_v, p.rows())?;
        check_len(r.dim_v, p.cols())?;
    }
    let m = a.dim();
    for i in 0..m {
        for j in i..m {
            let lhs = r.pi[i].mul(&r.pi[j]).add(&r.pi[j].mul(&r.pi[i]));
            let mut rhs = Matrix::zeros(r.dim_v, r.dim_v);
            for (k, c) in a.basis_product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    rhs = rhs.sub(&r.pi[k].scale(c));
                }
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn adjoint_rep(a: &JJAlgebra) -> Representation {
    let m = a.dim();
    let pi = (0..m).map(|i| a.left_mult(&unit(m, i)).expect("length matches").matrix().clone()).collect();
    Representation { dim_v: m, pi }
}

impl Representation {
    pub fn zero(m: usize, dim_v: usize) -> Self {
        Representation { dim_v, pi: vec![Matrix::zeros(dim_v, dim_v); m] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::linalg::ratio;

    fn e(m: usize, i: usize) -> Vec<Scalar> {
        unit(m, i - 1)
    }

    #[test]
    fn pair_index_is_dense() {
        for m in 0..7 {
            let mut seen = Vec::new();
            for i in 0..m {
                for j in i..m {
                    seen.push(pair_index(m, i, j));
                    assert_eq!(pair_index(m, i, j), pair_index(m, j, i));
                }
            }
            assert_eq!(seen, (0..m * (m + 1) / 2).collect::<Vec<_>>());
        }
    }

    #[test]
    fn products() {
        let j12 = catalog("J_1_2").unwrap();
        assert_eq!(j12.product(&e(2, 1), &e(2, 1)).unwrap(), e(2, 2));
        assert_eq!(j12.product(&e(2, 1), &zeros(2)).unwrap(), zeros(2));
        let j85 = catalog("J_8_5").unwrap();
        let two_e3: Vec<Scalar> = e(5, 3).iter().map(|x| x * int(2)).collect();
        assert_eq!(j85.product(&e(5, 2), &e(5, 4)).unwrap(), two_e3);
        assert!(j12.product(&e(3, 1), &e(2, 1)).is_err());
    }

    #[test]
    fn jacobi_violation() {
        let bad = JJAlgebra::from_terms("idem", 1, &[(1, 1, 1, 1)]);
        assert_eq!(bad.verify_jj(), vec![(0, 0, 0)]);
        assert!(JJAlgebra::zero("F^4", 4).verify_jj().is_empty());
    }

    #[test]
    fn heisenberg_examples() {
        let h1 = heisenberg(1).unwrap();
        assert_eq!(h1.dim(), 3);
        assert_eq!(h1.nonzero_products().len(), 1);
        assert!(heisenberg(2).unwrap().is_jj());
        assert!(heisenberg(0).is_err());
    }

    #[test]
    fn heisenberg_matches_j13_fingerprint() {
        let h = heisenberg(1).unwrap().fingerprint();
        let j = catalog("J_1_3").unwrap().fingerprint();
        assert_eq!(h, j);
    }

    #[test]
    fn direct_sums() {
        let s = direct_sum(&catalog("J_1_2").unwrap(), &JJAlgebra::zero("F", 1));
        assert_eq!(s.nonzero_products(), catalog("J_1_2+F").unwrap().nonzero_products());
        let a = catalog("J_1_4").unwrap();
        assert_eq!(direct_sum(&a, &JJAlgebra::zero("F^0", 0)).nonzero_products(), a.nonzero_products());
        let s = direct_sum(&catalog("J_1_2").unwrap(), &catalog("J_1_3").unwrap());
        assert_eq!(s.nonzero_products(), catalog("J_1_2+J_1_3").unwrap().nonzero_products());
    }

    #[test]
    fn basis_change_examples() {
        let a = catalog("J_1_5").unwrap();
        let id = LinearMap::identity(5);
        assert_eq!(apply_basis_change(&a, &id).unwrap(), a);
        let z = JJAlgebra::zero("F^3", 3);
        let p = LinearMap::new(Matrix::from_ints(3, 3, &[1, 2, 0, 0, 1, 0, 3, 0, 1]));
        assert!(apply_basis_change(&z, &p).unwrap().is_abelian());
        assert!(apply_basis_change(&a, &LinearMap::zero(5)).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let j12 = catalog("J_1_2").unwrap();
        assert!(is_isomorphism(&LinearMap::identity(2), &j12, &j12));
        let swap = LinearMap::new(Matrix::from_ints(2, 2, &[0, 1, 1, 0]));
        assert!(!is_isomorphism(&swap, &j12, &j12));
        let scale = LinearMap::diagonal(&[int(2), int(4)]);
        assert!(is_isomorphism(&scale, &j12, &j12));
    }

    #[test]
    fn fingerprints() {
        let f = catalog("J_1_2").unwrap().fingerprint();
        assert_eq!((f.dim, f.square_dim, f.annihilator_dim), (2, 1, 1));
        let f = JJAlgebra::zero("F^3", 3).fingerprint();
        assert_eq!((f.dim, f.square_dim, f.annihilator_dim), (3, 0, 3));
        let a = catalog("J_1_3").unwrap().fingerprint();
        let b = catalog("J_1_2+F").unwrap().fingerprint();
        assert_eq!((a.annihilator_dim, b.annihilator_dim), (1, 2));
    }

    #[test]
    fn representations() {
        let j12 = catalog("J_1_2").unwrap();
        assert!(verify_representation(&j12, &adjoint_rep(&j12)).unwrap());
        assert!(verify_representation(&j12, &Representation::zero(2, 3)).unwrap());
        let bad = Representation { dim_v: 2, pi: vec![Matrix::identity(2), Matrix::zeros(2, 2)] };
        assert!(!verify_representation(&j12, &bad).unwrap());
        let short = Representation { dim_v: 2, pi: vec![Matrix::identity(2)] };
        assert!(verify_representation(&j12, &short).is_err());
    }

    #[test]
    fn leibniz() {
        assert!(catalog("J_1_4").unwrap().is_leibniz());
        assert!(!catalog("J_8_5").unwrap().is_leibniz());
        assert!(JJAlgebra::zero("F^2", 2).is_leibniz());
    }

    #[test]
    fn left_multiplications() {
        let j12 = catalog("J_1_2").unwrap();
        let l = j12.left_mult(&e(2, 1)).unwrap();
        assert_eq!(l.apply(&e(2, 1)), e(2, 2));
        assert_eq!(l.apply(&e(2, 2)), zeros(2));
        assert_eq!(j12.left_mult(&zeros(2)).unwrap(), LinearMap::zero(2));
        let j13 = catalog("J_1_3").unwrap();
        assert_eq!(j13.left_mult(&e(3, 3)).unwrap().apply(&e(3, 3)), e(3, 2));
    }

    #[test]
    fn fractional_basis_change_round_trip() {
        let a = catalog("J_2_5").unwrap();
        let p = LinearMap::diagonal(&[ratio(1, 2), int(3), int(1), ratio(-2, 5), int(7)]);
        let b = apply_basis_change(&a, &p).unwrap();
        assert!(is_isomorphism(&p, &b, &a));
        assert_eq!(b.fingerprint(), a.fingerprint());
    }
}
