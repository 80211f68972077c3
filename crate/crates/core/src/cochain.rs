//! Symmetric cochains S^n(J,J), the differential and the graded composition/bracket.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::JJAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, fmt_scalar, is_zero_vec, parse_scalar, unit, zeros, Matrix, Scalar};

pub const MAX_DEGREE: usize = 4;

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of nondecreasing tuples of length `n` over `m` values.
pub fn multiset_count(m: usize, n: usize) -> usize {
    if n == 0 {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    binom(m + n - 1, n)
}

/// dim S^n over an m-dimensional space.
pub fn cochain_space_dim(m: usize, n: usize) -> usize {
    m * multiset_count(m, n)
}

/// All nondecreasing index tuples of length `n` over `0..m`, lexicographically.
pub fn multisets(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            cur.push(v);
            go(m, n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(multiset_count(m, n));
    go(m, n, 0, &mut Vec::new(), &mut out);
    out
}

/// Lexicographic rank of a sorted tuple among `multisets(m, n)`.
pub fn multiset_rank(m: usize, sorted: &[usize]) -> usize {
    let n = sorted.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &a) in sorted.iter().enumerate() {
        let left = n - pos - 1;
        for v in prev..a {
            rank += multiset_count(m - v, left);
        }
        prev = a;
    }
    rank
}

/// A symmetric n-linear map on an m-dimensional space, stored on sorted multisets.
/// Coordinate `rank(multiset) * m + k` is the e_k-component of φ(e_multiset).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymCochain {
    dim: usize,
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl SymCochain {
    pub fn zero(dim: usize, degree: usize) -> Self {
        SymCochain { dim, degree, coeffs: zeros(cochain_space_dim(dim, degree)) }
    }

    pub fn from_coeffs(dim: usize, degree: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        let expected = cochain_space_dim(dim, degree);
        if coeffs.len() != expected {
            return Err(Error::Dimension { expected, got: coeffs.len() });
        }
        Ok(SymCochain { dim, degree, coeffs })
    }

    /// The indicator e^{multiset}_k; indices are 1-based as in the notation.
    pub fn basis(dim: usize, multiset: &[usize], k: usize) -> Result<Self> {
        let out_of_range = |i: usize| i == 0 || i > dim;
        if multiset.iter().any(|&i| out_of_range(i)) || out_of_range(k) {
            return Err(Error::Index(format!("e^{multiset:?}_{k} in dimension {dim}")));
        }
        let mut c = Self::zero(dim, multiset.len());
        let mut s: Vec<usize> = multiset.iter().map(|i| i - 1).collect();
        s.sort_unstable();
        let idx = multiset_rank(dim, &s) * dim + k - 1;
        c.coeffs[idx] = Scalar::one();
        Ok(c)
    }

    /// The cochain of a linear map (degree 1).
    pub fn from_linear(map: &crate::algebra::LinearMap) -> Self {
        let m = map.dim();
        let mut c = Self::zero(m, 1);
        for i in 0..m {
            c.slot_mut(&[i]).clone_from_slice(&map.matrix().col(i));
        }
        c
    }

    pub fn to_linear(&self) -> crate::algebra::LinearMap {
        assert_eq!(self.degree, 1, "only degree-1 cochains are linear maps");
        let images: Vec<Vec<Scalar>> = (0..self.dim).map(|i| self.on_basis(&[i]).to_vec()).collect();
        crate::algebra::LinearMap::from_images(&images)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// ‖φ‖ = n − 1.
    pub fn graded_degree(&self) -> usize {
        self.degree - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// φ(e_{i_1}, …, e_{i_n}) for any order of 0-based indices.
    pub fn on_basis(&self, idx: &[usize]) -> &[Scalar] {
        let mut s = idx.to_vec();
        s.sort_unstable();
        let r = multiset_rank(self.dim, &s);
        &self.coeffs[r * self.dim..(r + 1) * self.dim]
    }

    fn slot_mut(&mut self, sorted: &[usize]) -> &mut [Scalar] {
        let r = multiset_rank(self.dim, sorted);
        &mut self.coeffs[r * self.dim..(r + 1) * self.dim]
    }

    /// Nonzero coordinates as (sorted 0-based multiset, 0-based k, coefficient).
    pub fn terms(&self) -> Vec<(Vec<usize>, usize, Scalar)> {
        let mut out = Vec::new();
        for (r, ms) in multisets(self.dim, self.degree).into_iter().enumerate() {
            for k in 0..self.dim {
                let c = &self.coeffs[r * self.dim + k];
                if !c.is_zero() {
                    out.push((ms.clone(), k, c.clone()));
                }
            }
        }
        out
    }

    pub fn evaluate(&self, args: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
        if args.len() != self.degree {
            return Err(Error::Dimension { expected: self.degree, got: args.len() });
        }
        for a in args {
            if a.len() != self.dim {
                return Err(Error::Dimension { expected: self.dim, got: a.len() });
            }
        }
        let mut out = zeros(self.dim);
        let mut idx = Vec::with_capacity(self.degree);
        self.expand(args, &mut idx, &Scalar::one(), &mut out);
        Ok(out)
    }

    fn expand(&self, args: &[Vec<Scalar>], idx: &mut Vec<usize>, weight: &Scalar, out: &mut [Scalar]) {
        let pos = idx.len();
        if pos == args.len() {
            add_scaled(out, weight, self.on_basis(idx));
            return;
        }
        for (i, c) in args[pos].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx.push(i);
            self.expand(args, idx, &(weight * c), out);
            idx.pop();
        }
    }

    fn same_shape(&self, other: &SymCochain) {
        assert_eq!((self.dim, self.degree), (other.dim, other.degree), "cochain shapes differ");
    }

    pub fn add(&self, other: &SymCochain) -> SymCochain {
        self.same_shape(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        SymCochain { dim: self.dim, degree: self.degree, coeffs }
    }

    pub fn sub(&self, other: &SymCochain) -> SymCochain {
        self.same_shape(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        SymCochain { dim: self.dim, degree: self.degree, coeffs }
    }

    pub fn scale(&self, c: &Scalar) -> SymCochain {
        SymCochain { dim: self.dim, degree: self.degree, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &SymCochain) {
        self.same_shape(other);
        add_scaled(&mut self.coeffs, c, &other.coeffs);
    }

    /// Parses sums such as `e^{1,3}_1-2e^{2,3}_2+1/2e^{3,3}_{3}` (1-based indices).
    pub fn parse(dim: usize, text: &str) -> Result<SymCochain> {
        parse_cochain(dim, text)
    }

    /// Text notation, 1-based: `e^{1,3}_1-2e^{2,3}_2`.
    pub fn to_notation(&self) -> String {
        let terms = self.terms();
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (ms, k, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            if !mag.is_one() {
                s.push_str(&fmt_scalar(&mag));
            }
            let args: Vec<String> = ms.iter().map(|a| (a + 1).to_string()).collect();
            s.push_str(&format!("e^{{{}}}_{}", args.join(","), k + 1));
        }
        s
    }
}

impl fmt::Debug for SymCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}[m={}]({})", self.degree, self.dim, self.to_notation())
    }
}

impl fmt::Display for SymCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_notation())
    }
}

fn parse_cochain(dim: usize, text: &str) -> Result<SymCochain> {
    let src: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| Error::Parse(format!("{msg} in cochain {text:?}"));
    let mut pos = 0;
    let mut acc: Option<SymCochain> = None;
    let read_index = |pos: &mut usize| -> Result<Vec<usize>> {
        let braced = src.get(*pos) == Some(&'{');
        if braced {
            *pos += 1;
        }
        let start = *pos;
        while *pos < src.len() && (src[*pos].is_ascii_digit() || (braced && src[*pos] == ',')) {
            *pos += 1;
            if !braced {
                break;
            }
        }
        let body: String = src[start..*pos].iter().collect();
        if braced {
            if src.get(*pos) != Some(&'}') {
                return Err(err("unclosed brace"));
            }
            *pos += 1;
        }
        body.split(',').map(|t| t.parse::<usize>().map_err(|_| err("bad index"))).collect()
    };
    while pos < src.len() {
        let mut sign = Scalar::one();
        while pos < src.len() && (src[pos] == '+' || src[pos] == '-') {
            if src[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        }
        let start = pos;
        while pos < src.len() && (src[pos].is_ascii_digit() || src[pos] == '/') {
            pos += 1;
        }
        let coef_txt: String = src[start..pos].iter().collect();
        let coef = if coef_txt.is_empty() { Scalar::one() } else { parse_scalar(&coef_txt)? };
        if src.get(pos) == Some(&'*') {
            pos += 1;
        }
        if src.get(pos) != Some(&'e') || src.get(pos + 1) != Some(&'^') {
            return Err(err("expected e^"));
        }
        pos += 2;
        let args = read_index(&mut pos)?;
        if src.get(pos) != Some(&'_') {
            return Err(err("expected _"));
        }
        pos += 1;
        let k = read_index(&mut pos)?;
        if k.len() != 1 {
            return Err(err("target must be a single index"));
        }
        let term = SymCochain::basis(dim, &args, k[0])?.scale(&(sign * coef));
        acc = Some(match acc {
            None => term,
            Some(a) if a.degree == term.degree => a.add(&term),
            Some(_) => return Err(err("mixed degrees")),
        });
    }
    acc.ok_or_else(|| err("empty"))
}

/// φ₀(x, y) = x·y.
pub fn mult_cochain(a: &JJAlgebra) -> SymCochain {
    let m = a.dim();
    let mut c = SymCochain::zero(m, 2);
    for i in 0..m {
        for j in i..m {
            c.slot_mut(&[i, j]).clone_from_slice(a.basis_product(i, j));
        }
    }
    c
}

/// dψ(x,y) = ψ(xy) − xψ(y) − yψ(x) on S¹, and
/// dφ(x,y,z) = φ(x,yz) + φ(y,zx) + φ(z,xy) + xφ(y,z) + yφ(z,x) + zφ(x,y) on S².
pub fn differential(a: &JJAlgebra, phi: &SymCochain) -> Result<SymCochain> {
    if phi.dim() != a.dim() {
        return Err(Error::Dimension { expected: a.dim(), got: phi.dim() });
    }
    let m = a.dim();
    let e = |i: usize| unit(m, i);
    let apply = |idx: &[usize], v: &[Scalar]| -> Vec<Scalar> {
        // φ(e_idx…, v) with v in the last slot
        let mut out = zeros(m);
        let mut full = idx.to_vec();
        full.push(0);
        for (l, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            *full.last_mut().unwrap() = l;
            add_scaled(&mut out, c, phi.on_basis(&full));
        }
        out
    };
    match phi.degree() {
        1 => {
            let mut d = SymCochain::zero(m, 2);
            for ms in multisets(m, 2) {
                let (i, j) = (ms[0], ms[1]);
                let mut v = apply(&[], a.basis_product(i, j));
                let neg = -Scalar::one();
                add_scaled(&mut v, &neg, &a.mul(&e(i), phi.on_basis(&[j])));
                add_scaled(&mut v, &neg, &a.mul(&e(j), phi.on_basis(&[i])));
                d.slot_mut(&ms).clone_from_slice(&v);
            }
            Ok(d)
        }
        2 => {
            let mut d = SymCochain::zero(m, 3);
            let one = Scalar::one();
            for ms in multisets(m, 3) {
                let (x, y, z) = (ms[0], ms[1], ms[2]);
                let mut v = apply(&[x], a.basis_product(y, z));
                add_scaled(&mut v, &one, &apply(&[y], a.basis_product(z, x)));
                add_scaled(&mut v, &one, &apply(&[z], a.basis_product(x, y)));
                add_scaled(&mut v, &one, &a.mul(&e(x), phi.on_basis(&[y, z])));
                add_scaled(&mut v, &one, &a.mul(&e(y), phi.on_basis(&[z, x])));
                add_scaled(&mut v, &one, &a.mul(&e(z), phi.on_basis(&[x, y])));
                d.slot_mut(&ms).clone_from_slice(&v);
            }
            Ok(d)
        }
        n => Err(Error::Degree(n)),
    }
}

/// d on S³ taken as [φ₀, ·]; a convention beyond the degrees where d is defined.
pub fn extended_differential(a: &JJAlgebra, phi: &SymCochain) -> Result<SymCochain> {
    if phi.degree() != 3 {
        return Err(Error::Degree(phi.degree()));
    }
    bracket(&mult_cochain(a), phi)
}

/// Matrix of d: S^n → S^{n+1} (n = 1, 2) or of the extended d for n = 3.
pub fn differential_matrix(a: &JJAlgebra, n: usize) -> Result<Matrix> {
    let m = a.dim();
    let rows = cochain_space_dim(m, n + 1);
    let cols: Vec<Vec<Scalar>> = (0..cochain_space_dim(m, n))
        .map(|c| {
            let mut coeffs = zeros(cochain_space_dim(m, n));
            coeffs[c] = Scalar::one();
            let phi = SymCochain::from_coeffs(m, n, coeffs).expect("shape");
            let d = if n == 3 { extended_differential(a, &phi) } else { differential(a, &phi) };
            d.map(|d| d.coeffs)
        })
        .collect::<Result<_>>()?;
    Ok(Matrix::from_cols(rows, &cols))
}

/// (φψ)(x_1,…,x_{p+q−1}) = Σ_{|I| = p−1} φ(x_I, ψ(x_{∖I})).
pub fn compose(phi: &SymCochain, psi: &SymCochain) -> Result<SymCochain> {
    if phi.dim() != psi.dim() {
        return Err(Error::Dimension { expected: phi.dim(), got: psi.dim() });
    }
    let (p, q) = (phi.degree(), psi.degree());
    let r = p + q - 1;
    if r > MAX_DEGREE {
        return Err(Error::Degree(r));
    }
    let m = phi.dim();
    let mut out = SymCochain::zero(m, r);
    if phi.is_zero() || psi.is_zero() {
        return Ok(out);
    }
    let subsets = multisets_strict(r, p - 1);
    for ms in multisets(m, r) {
        let mut acc = zeros(m);
        for sub in &subsets {
            let mut inner = Vec::with_capacity(q);
            let mut outer = Vec::with_capacity(p);
            for (pos, &v) in ms.iter().enumerate() {
                if sub.contains(&pos) {
                    outer.push(v);
                } else {
                    inner.push(v);
                }
            }
            let val = psi.on_basis(&inner);
            outer.push(0);
            for (l, c) in val.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                *outer.last_mut().unwrap() = l;
                add_scaled(&mut acc, c, phi.on_basis(&outer));
            }
        }
        out.slot_mut(&ms).clone_from_slice(&acc);
    }
    Ok(out)
}

/// Strictly increasing `k`-subsets of `0..n`.
fn multisets_strict(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// [φ,ψ] = φψ − (−1)^{(p−1)(q−1)} ψφ.
pub fn bracket(phi: &SymCochain, psi: &SymCochain) -> Result<SymCochain> {
    let a = compose(phi, psi)?;
    let b = compose(psi, phi)?;
    let odd = (phi.graded_degree() * psi.graded_degree()) % 2 == 1;
    Ok(if odd { a.add(&b) } else { a.sub(&b) })
}
