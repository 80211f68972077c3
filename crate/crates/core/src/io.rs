//! JSON readers and writers. Rationals travel as "p/q" strings, indices are 1-based.

use serde::{Deserialize, Serialize};

use crate::algebra::{JJAlgebra, LinearMap};
use crate::bilinear::{BilinearForm, FormKind};
use crate::cochain::SymCochain;
use crate::deformation::FormalDeformation1;
use crate::error::{Error, Result};
use crate::linalg::{fmt_scalar, parse_scalar, Matrix, Scalar};
use crate::poly::vector_to_string;
use crate::versal::{versal_multiplication_table, MultiParamDeformation};

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(fmt_scalar).collect()
}

fn scalars(v: &[String]) -> Result<Vec<Scalar>> {
    v.iter().map(|s| parse_scalar(s)).collect()
}

fn to_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub dim: usize,
    pub products: Vec<ProductJson>,
}

impl From<&JJAlgebra> for AlgebraJson {
    fn from(a: &JJAlgebra) -> Self {
        let products = a
            .nonzero_products()
            .into_iter()
            .map(|(i, j, v)| ProductJson { i: i + 1, j: j + 1, coeffs: strings(v) })
            .collect();
        AlgebraJson { name: a.name().to_string(), dim: a.dim(), products }
    }
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<JJAlgebra> {
        let mut a = JJAlgebra::zero(self.name.clone(), self.dim);
        for p in &self.products {
            if p.i == 0 || p.j == 0 || p.i > self.dim || p.j > self.dim {
                return Err(Error::Index(format!("product ({}, {}) in dimension {}", p.i, p.j, self.dim)));
            }
            a.set_product((p.i - 1).min(p.j - 1), (p.i - 1).max(p.j - 1), scalars(&p.coeffs)?)?;
        }
        Ok(a)
    }
}

pub fn algebra_to_json(a: &JJAlgebra) -> String {
    to_string(&AlgebraJson::from(a))
}

pub fn algebra_from_json(s: &str) -> Result<JJAlgebra> {
    from_str::<AlgebraJson>(s)?.to_algebra()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub args: Vec<usize>,
    pub k: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    pub degree: usize,
    pub dim: usize,
    pub terms: Vec<TermJson>,
}

impl From<&SymCochain> for CochainJson {
    fn from(c: &SymCochain) -> Self {
        let terms = c
            .terms()
            .into_iter()
            .map(|(args, k, v)| TermJson { args: args.iter().map(|a| a + 1).collect(), k: k + 1, coeff: fmt_scalar(&v) })
            .collect();
        CochainJson { degree: c.degree(), dim: c.dim(), terms }
    }
}

impl CochainJson {
    pub fn to_cochain(&self) -> Result<SymCochain> {
        let mut c = SymCochain::zero(self.dim, self.degree);
        for t in &self.terms {
            if t.args.len() != self.degree {
                return Err(Error::Degree(t.args.len()));
            }
            c.add_scaled(&parse_scalar(&t.coeff)?, &SymCochain::basis(self.dim, &t.args, t.k)?);
        }
        Ok(c)
    }
}

pub fn cochain_to_json(c: &SymCochain) -> String {
    to_string(&CochainJson::from(c))
}

pub fn cochain_from_json(s: &str) -> Result<SymCochain> {
    from_str::<CochainJson>(s)?.to_cochain()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub kind: String,
    pub matrix: Vec<Vec<String>>,
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| strings(m.row(r))).collect()
}

fn matrix_from_rows(rows: &[Vec<String>]) -> Result<Matrix> {
    let cols = rows.first().map(Vec::len).unwrap_or(0);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    let rows = rows.iter().map(|r| scalars(r)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(cols, &rows))
}

pub fn form_to_json(f: &BilinearForm) -> String {
    to_string(&FormJson { kind: f.kind.as_str().into(), matrix: matrix_rows(&f.matrix) })
}

pub fn form_from_json(s: &str) -> Result<BilinearForm> {
    let j: FormJson = from_str(s)?;
    let matrix = matrix_from_rows(&j.matrix)?;
    if matrix.rows() != matrix.cols() {
        return Err(Error::Parse("form matrix is not square".into()));
    }
    Ok(BilinearForm::new(FormKind::parse(&j.kind)?, matrix))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationJson {
    pub base: AlgebraJson,
    pub order: usize,
    pub terms: Vec<CochainJson>,
}

pub fn deformation_to_json(d: &FormalDeformation1) -> String {
    to_string(&DeformationJson {
        base: d.base().into(),
        order: d.order(),
        terms: d.terms().iter().map(CochainJson::from).collect(),
    })
}

pub fn deformation_from_json(s: &str) -> Result<FormalDeformation1> {
    let j: DeformationJson = from_str(s)?;
    if j.terms.len() != j.order {
        return Err(Error::Parse(format!("order {} but {} terms", j.order, j.terms.len())));
    }
    let terms = j.terms.iter().map(CochainJson::to_cochain).collect::<Result<Vec<_>>>()?;
    FormalDeformation1::new(j.base.to_algebra()?, terms)
}

/// A basis change given by the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub images: Vec<Vec<String>>,
}

pub fn witness_to_json(p: &LinearMap) -> String {
    let images = (0..p.dim()).map(|i| strings(&p.matrix().col(i))).collect();
    to_string(&WitnessJson { images })
}

pub fn witness_from_json(s: &str) -> Result<LinearMap> {
    let j: WitnessJson = from_str(s)?;
    let n = j.images.len();
    let images = j.images.iter().map(|v| scalars(v)).collect::<Result<Vec<_>>>()?;
    if images.iter().any(|v| v.len() != n) {
        return Err(Error::Parse("witness must be square".into()));
    }
    Ok(LinearMap::from_images(&images))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionJson {
    pub monomial: String,
    pub cochain: CochainJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub i: usize,
    pub j: usize,
    pub product: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VersalReport {
    pub algebra: String,
    pub n_params: usize,
    pub truncation: String,
    pub first_order: Vec<CochainJson>,
    pub relations: Vec<String>,
    pub corrections: Vec<CorrectionJson>,
    pub table: Vec<TableEntryJson>,
}

impl From<&MultiParamDeformation> for VersalReport {
    fn from(m: &MultiParamDeformation) -> Self {
        let n = m.n_params();
        let corrections = m
            .corrections()
            .iter()
            .map(|(&(i, j), c)| CorrectionJson {
                monomial: crate::poly::Poly::quadratic(n, i, j).to_string(),
                cochain: c.into(),
            })
            .collect();
        let table = versal_multiplication_table(m)
            .entries
            .iter()
            .filter(|(_, v)| v.iter().any(|p| !p.is_zero()))
            .map(|((i, j), v)| TableEntryJson { i: i + 1, j: j + 1, product: vector_to_string(v) })
            .collect();
        VersalReport {
            algebra: m.base().name().to_string(),
            n_params: n,
            truncation: m.truncation().as_str().into(),
            first_order: m.first_order().iter().map(CochainJson::from).collect(),
            relations: m.relations().iter().map(ToString::to_string).collect(),
            corrections,
            table,
        }
    }
}

pub fn versal_to_json(m: &MultiParamDeformation) -> String {
    to_string(&VersalReport::from(m))
}

pub fn versal_report_from_json(s: &str) -> Result<VersalReport> {
    from_str(s)
}
