//! Universal infinitesimal deformation, its second-order extension, and Massey cubes.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{is_isomorphism, JJAlgebra, LinearMap};
use crate::cochain::{bracket, cochain_space_dim, SymCochain};
use crate::cohomology::Cohomology;
use crate::error::{Error, Result};
use crate::linalg::{int, quotient_data, ratio, rref, Matrix, Scalar, Subspace};
use crate::poly::{quadratic_exponents, vector_to_string, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// m² = 0
    FirstOrder,
    /// m³ ⊆ I
    SecondOrder,
}

impl Truncation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Truncation::FirstOrder => "m^2 = 0",
            Truncation::SecondOrder => "m^3 in I",
        }
    }
}

/// μ_t = μ₀ + Σ tᵢφᵢ + Σ t_s φ_s over 𝔽[t₁..t_n]/I, with s running over standard
/// quadratic monomials (those not leading a relation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiParamDeformation {
    base: JJAlgebra,
    first_order: Vec<SymCochain>,
    corrections: BTreeMap<(usize, usize), SymCochain>,
    relations: Vec<Poly>,
    truncation: Truncation,
}

impl MultiParamDeformation {
    pub fn base(&self) -> &JJAlgebra {
        &self.base
    }

    pub fn n_params(&self) -> usize {
        self.first_order.len()
    }

    pub fn first_order(&self) -> &[SymCochain] {
        &self.first_order
    }

    /// Corrections keyed by 0-based (i, j), i ≤ j, for the monomial t_{i+1}t_{j+1}.
    pub fn corrections(&self) -> &BTreeMap<(usize, usize), SymCochain> {
        &self.corrections
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    /// Order-1 data: α at h′ᵢ is μᵢ.
    pub fn as_infinitesimal(&self) -> InfinitesimalWithBase {
        InfinitesimalWithBase { base: self.base.clone(), alphas: self.first_order.clone() }
    }
}

/// Monomials tᵢtⱼ, i ≤ j, in lex order.
pub fn quadratic_monomials(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

pub fn universal_infinitesimal(a: &JJAlgebra) -> MultiParamDeformation {
    let reps = Cohomology::new(a).representatives();
    first_order_object(a, reps)
}

/// Same with caller-chosen representatives, which must be a basis of H².
pub fn universal_infinitesimal_with(a: &JJAlgebra, reps: Vec<SymCochain>) -> Result<MultiParamDeformation> {
    if !Cohomology::new(a).verify_representatives(&reps) {
        return Err(Error::Precondition("representatives are not a basis of H^2".into()));
    }
    Ok(first_order_object(a, reps))
}

fn first_order_object(a: &JJAlgebra, reps: Vec<SymCochain>) -> MultiParamDeformation {
    MultiParamDeformation {
        base: a.clone(),
        first_order: reps,
        corrections: BTreeMap::new(),
        relations: Vec::new(),
        truncation: Truncation::FirstOrder,
    }
}

/// B_ii = [φᵢ,φᵢ], B_ij = 2[φᵢ,φⱼ]: the coefficient of tᵢtⱼ in Σ_{i,j}[φᵢ,φⱼ]tᵢtⱼ.
fn monomial_brackets(first: &[SymCochain]) -> Vec<SymCochain> {
    quadratic_monomials(first.len())
        .par_iter()
        .map(|&(i, j)| {
            let b = bracket(&first[i], &first[j]).expect("degree-2 cochains");
            if i == j {
                b
            } else {
                b.scale(&int(2))
            }
        })
        .collect()
}

/// Relations in rref over the monomial coordinates, with their leading monomial indices.
fn relation_rows(h: &Cohomology, brackets: &[SymCochain]) -> (Matrix, Vec<usize>) {
    let ambient = cochain_space_dim(h.algebra().dim(), 3);
    let vecs: Vec<Vec<Scalar>> = brackets.iter().map(|b| b.coeffs().to_vec()).collect();
    let whole = h.b3().sum(&Subspace::span(ambient, &vecs));
    let q = quotient_data(h.b3(), &whole).expect("B³ is inside B³ + span");
    let cols: Vec<Vec<Scalar>> = vecs.iter().map(|v| q.reduce(v).expect("in the sum")).collect();
    let a = Matrix::from_cols(q.dim(), &cols);
    let (r, pivots) = rref(&a);
    let rows: Vec<Vec<Scalar>> = (0..pivots.len()).map(|k| r.row(k).to_vec()).collect();
    (Matrix::from_rows(brackets.len(), &rows), pivots)
}

/// The 3-cochain Σ_{s'} red(s')_s B_{s'} whose coboundary witness is −2φ_s.
fn standard_obstruction(s: usize, rel: &Matrix, pivots: &[usize], brackets: &[SymCochain]) -> SymCochain {
    let mut acc = brackets[s].clone();
    for (r, &p) in pivots.iter().enumerate() {
        let c = &rel[(r, s)];
        if !c.is_zero() {
            acc.add_scaled(&-c.clone(), &brackets[p]);
        }
    }
    acc
}

pub fn second_order_extension(a: &JJAlgebra) -> Result<MultiParamDeformation> {
    extend_to_second_order(&universal_infinitesimal(a))
}

/// Relations: one quadratic per basis vector of the span of the classes of B_ij in S³/B³.
/// Corrections: for each standard monomial s, dφ_s = −½ (B_s reduced modulo the relations).
pub fn extend_to_second_order(m: &MultiParamDeformation) -> Result<MultiParamDeformation> {
    let h = Cohomology::new(&m.base);
    let n = m.n_params();
    let monos = quadratic_monomials(n);
    let brackets = monomial_brackets(&m.first_order);
    let (rel, pivots) = relation_rows(&h, &brackets);
    let relations = (0..pivots.len())
        .map(|r| {
            monos.iter().enumerate().fold(Poly::zero(n), |acc, (s, &(i, j))| {
                acc.add(&Poly::quadratic(n, i, j).scale(&rel[(r, s)]))
            })
        })
        .collect();
    let standard: Vec<usize> = (0..monos.len()).filter(|s| !pivots.contains(s)).collect();
    let solved: Vec<Result<(usize, SymCochain)>> = standard
        .par_iter()
        .map(|&s| {
            let target = standard_obstruction(s, &rel, &pivots, &brackets).scale(&ratio(-1, 2));
            h.is_coboundary3(&target)
                .map(|phi| (s, phi))
                .ok_or_else(|| Error::Precondition("reduced obstruction is not a coboundary".into()))
        })
        .collect();
    let mut corrections = BTreeMap::new();
    for r in solved {
        let (s, phi) = r?;
        if !phi.is_zero() {
            corrections.insert(monos[s], phi);
        }
    }
    Ok(MultiParamDeformation {
        base: m.base.clone(),
        first_order: m.first_order.clone(),
        corrections,
        relations,
        truncation: Truncation::SecondOrder,
    })
}

fn leading_monomial(p: &Poly, monos: &[(usize, usize)]) -> Option<usize> {
    let n = p.nvars();
    monos.iter().position(|&(i, j)| !p.coeff(&quadratic_exponents(n, i, j)).is_zero())
}

/// Re-derives every correction's defining equation and compares cochains exactly.
pub fn verify_corrections(m: &MultiParamDeformation) -> bool {
    if m.truncation == Truncation::FirstOrder {
        return m.corrections.is_empty();
    }
    let n = m.n_params();
    let monos = quadratic_monomials(n);
    let brackets = monomial_brackets(&m.first_order);
    let mut rows = Vec::new();
    let mut pivots = Vec::new();
    for p in &m.relations {
        let Some(lead) = leading_monomial(p, &monos) else { return false };
        let row: Vec<Scalar> = monos
            .iter()
            .map(|&(i, j)| p.coeff(&quadratic_exponents(n, i, j)))
            .collect();
        if !row[lead].is_one() {
            return false;
        }
        pivots.push(lead);
        rows.push(row);
    }
    let rel = Matrix::from_rows(monos.len(), &rows);
    let zero = SymCochain::zero(m.base.dim(), 2);
    (0..monos.len()).filter(|s| !pivots.contains(s)).all(|s| {
        let phi = m.corrections.get(&monos[s]).unwrap_or(&zero);
        let lhs = crate::cochain::differential(&m.base, phi).expect("degree 2");
        lhs == standard_obstruction(s, &rel, &pivots, &brackets).scale(&ratio(-1, 2))
    })
}

/// Replaces leading monomials of the relations (which are monic, in rref) and truncates.
pub fn reduce_mod_relations(p: &Poly, relations: &[Poly], max_degree: u32) -> Poly {
    let n = p.nvars();
    let monos = quadratic_monomials(n);
    let mut out = p.truncate(max_degree);
    for rel in relations {
        let Some(lead) = leading_monomial(rel, &monos) else { continue };
        let (i, j) = monos[lead];
        let c = out.coeff(&quadratic_exponents(n, i, j));
        if !c.is_zero() {
            out = out.sub(&rel.scale(&c));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VersalTable {
    pub n_params: usize,
    pub dim: usize,
    /// 0-based (i, j), i ≤ j, and the components of (eᵢeⱼ)_v.
    pub entries: Vec<((usize, usize), Vec<Poly>)>,
}

impl VersalTable {
    pub fn get(&self, i: usize, j: usize) -> Option<&[Poly]> {
        let key = (i.min(j), i.max(j));
        self.entries.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_slice())
    }
}

impl fmt::Display for VersalTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), v) in &self.entries {
            if v.iter().all(Poly::is_zero) {
                continue;
            }
            let pair = if i == j { format!("e{}^2", i + 1) } else { format!("e{}e{}", i + 1, j + 1) };
            writeln!(f, "({pair})_v = {}", vector_to_string(v))?;
        }
        Ok(())
    }
}

/// (eᵢeⱼ)_v = eᵢeⱼ + Σ t_k φ_k(eᵢ,eⱼ) + Σ t_s φ_s(eᵢ,eⱼ), reduced modulo I and m³.
pub fn versal_multiplication_table(m: &MultiParamDeformation) -> VersalTable {
    let n = m.n_params();
    let dim = m.base.dim();
    let max_degree = match m.truncation {
        Truncation::FirstOrder => 1,
        Truncation::SecondOrder => 2,
    };
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in i..dim {
            let mut v: Vec<Poly> =
                m.base.basis_product(i, j).iter().map(|c| Poly::constant(n, c.clone())).collect();
            for (k, phi) in m.first_order.iter().enumerate() {
                for (c, val) in phi.on_basis(&[i, j]).iter().enumerate() {
                    v[c] = v[c].add(&Poly::var(n, k).scale(val));
                }
            }
            for (&(a, b), phi) in &m.corrections {
                for (c, val) in phi.on_basis(&[i, j]).iter().enumerate() {
                    v[c] = v[c].add(&Poly::quadratic(n, a, b).scale(val));
                }
            }
            let v = v.iter().map(|p| reduce_mod_relations(p, &m.relations, max_degree)).collect();
            entries.push(((i, j), v));
        }
    }
    VersalTable { n_params: n, dim, entries }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MasseyOutcome {
    /// 1-based index pairs (within the triple) whose bracket is not a coboundary.
    Undefined(Vec<(usize, usize)>),
    Trivial,
    Nontrivial(SymCochain),
}

impl MasseyOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            MasseyOutcome::Undefined(_) => "undefined",
            MasseyOutcome::Trivial => "trivial",
            MasseyOutcome::Nontrivial(_) => "nontrivial",
        }
    }
}

const TRIPLE_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// ⟨φ̄₁,φ̄₂,φ̄₃⟩ with witnesses dφ_ij = [φᵢ,φⱼ] ordered (12, 13, 23); solved when not given.
pub fn massey3(a: &JJAlgebra, phis: &[SymCochain; 3], witnesses: Option<&[SymCochain; 3]>) -> Result<MasseyOutcome> {
    massey3_with(&Cohomology::new(a), phis, witnesses)
}

pub fn massey3_with(
    h: &Cohomology,
    phis: &[SymCochain; 3],
    witnesses: Option<&[SymCochain; 3]>,
) -> Result<MasseyOutcome> {
    if !phis.iter().all(|p| h.is_cocycle(p)) {
        return Err(Error::NotCocycle);
    }
    let brackets: Vec<SymCochain> = TRIPLE_PAIRS.iter().map(|&(i, j)| bracket(&phis[i], &phis[j])).collect::<Result<_>>()?;
    let w: Vec<SymCochain> = match witnesses {
        Some(w) => {
            for (wi, b) in w.iter().zip(&brackets) {
                if &h.differential(wi)? != b {
                    return Err(Error::Precondition("Massey witness fails d(phi_ij) = [phi_i, phi_j]".into()));
                }
            }
            w.to_vec()
        }
        None => {
            let solved: Vec<Option<SymCochain>> = brackets.iter().map(|b| h.is_coboundary3(b)).collect();
            let bad: Vec<(usize, usize)> = TRIPLE_PAIRS
                .iter()
                .zip(&solved)
                .filter(|(_, s)| s.is_none())
                .map(|(&(i, j), _)| (i + 1, j + 1))
                .collect();
            if !bad.is_empty() {
                return Ok(MasseyOutcome::Undefined(bad));
            }
            solved.into_iter().map(|s| s.expect("checked")).collect()
        }
    };
    let (w12, w13, w23) = (&w[0], &w[1], &w[2]);
    let rep = bracket(w12, &phis[2])?.add(&bracket(w23, &phis[0])?).add(&bracket(w13, &phis[1])?);
    let z = h.z2_basis();
    let mut vecs = Vec::new();
    for p in phis {
        for zeta in &z {
            vecs.push(bracket(p, zeta)?.coeffs().to_vec());
        }
    }
    let ambient = rep.coeffs().len();
    let indeterminacy = h.b3().sum(&Subspace::span(ambient, &vecs));
    Ok(if indeterminacy.member(rep.coeffs()) { MasseyOutcome::Trivial } else { MasseyOutcome::Nontrivial(rep) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    Zero,
    Coboundary,
    NotCoboundary,
}

/// Status of [φᵢ,φⱼ] for every 0-based pair i ≤ j of the given cocycles.
pub fn bracket_pairs(h: &Cohomology, reps: &[SymCochain]) -> Vec<((usize, usize), BracketKind)> {
    quadratic_monomials(reps.len())
        .into_iter()
        .map(|(i, j)| {
            let b = bracket(&reps[i], &reps[j]).expect("degree 2");
            let kind = if b.is_zero() {
                BracketKind::Zero
            } else if h.is_coboundary3(&b).is_some() {
                BracketKind::Coboundary
            } else {
                BracketKind::NotCoboundary
            };
            ((i, j), kind)
        })
        .collect()
}

/// A 0-based triple i ≤ j ≤ k and its outcome.
pub type MasseyRow = ((usize, usize, usize), MasseyOutcome);

/// massey3 on every 0-based triple i ≤ j ≤ k of the representatives.
pub fn massey_survey(h: &Cohomology, reps: &[SymCochain]) -> Result<Vec<MasseyRow>> {
    let n = reps.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let triple = [reps[i].clone(), reps[j].clone(), reps[k].clone()];
                out.push(((i, j, k), massey3_with(h, &triple, None)?));
            }
        }
    }
    Ok(out)
}

/// An infinitesimal deformation over 𝔽 ⊕ m_B with m_B² = 0: one cocycle α per dual basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinitesimalWithBase {
    pub base: JJAlgebra,
    pub alphas: Vec<SymCochain>,
}

impl InfinitesimalWithBase {
    pub fn new(base: JJAlgebra, alphas: Vec<SymCochain>) -> Self {
        InfinitesimalWithBase { base, alphas }
    }

    /// dim m_B.
    pub fn r(&self) -> usize {
        self.alphas.len()
    }
}

pub fn alpha_cocycle(lam: &InfinitesimalWithBase, xi: usize) -> Result<SymCochain> {
    let alpha = lam.alphas.get(xi).ok_or_else(|| Error::Index(format!("dual basis element {xi}")))?;
    if !crate::cohomology::is_cocycle(&lam.base, alpha) {
        return Err(Error::NotCocycle);
    }
    Ok(alpha.clone())
}

/// Equal classes of α_{λ,m′ᵢ} and α_{λ′,m′ᵢ} for every i.
pub fn infinitesimal_equivalent(lam: &InfinitesimalWithBase, other: &InfinitesimalWithBase) -> Result<bool> {
    if lam.base != other.base || lam.r() != other.r() {
        return Err(Error::Precondition("infinitesimal deformations over different bases".into()));
    }
    let h = Cohomology::new(&lam.base);
    for xi in 0..lam.r() {
        let (a, b) = (alpha_cocycle(lam, xi)?, alpha_cocycle(other, xi)?);
        if !h.b2().member(a.sub(&b).coeffs()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Push-out along f: ℍ′ → m_B given as an r × n matrix (column i = f(h′ᵢ)): α_k = Σᵢ f_{ki} μᵢ.
pub fn pushout_order1(m: &MultiParamDeformation, f: &Matrix) -> Result<InfinitesimalWithBase> {
    if f.cols() != m.n_params() {
        return Err(Error::Dimension { expected: m.n_params(), got: f.cols() });
    }
    let alphas = (0..f.rows())
        .map(|k| {
            m.first_order.iter().enumerate().fold(SymCochain::zero(m.base.dim(), 2), |mut acc, (i, mu)| {
                acc.add_scaled(&f[(k, i)], mu);
                acc
            })
        })
        .collect();
    Ok(InfinitesimalWithBase { base: m.base.clone(), alphas })
}

/// The algebra J ⊗ (𝔽 ⊕ ℍ′) of dimension m(n+1): block 0 is 1⊗J, block i+1 is h′ᵢ⊗J.
pub fn infinitesimal_algebra(a: &JJAlgebra, mu: &[SymCochain]) -> Result<JJAlgebra> {
    let m = a.dim();
    let n = mu.len();
    let total = m * (n + 1);
    let mut out = JJAlgebra::zero(format!("{}[eta]", a.name()), total);
    for x in 0..m {
        for y in x..m {
            let mut v = vec![Scalar::zero(); total];
            v[..m].clone_from_slice(a.basis_product(x, y));
            for (i, phi) in mu.iter().enumerate() {
                v[(i + 1) * m..(i + 2) * m].clone_from_slice(phi.on_basis(&[x, y]));
            }
            out.set_product(x, y, v)?;
        }
    }
    for i in 0..n {
        for x in 0..m {
            for y in 0..m {
                let mut v = vec![Scalar::zero(); total];
                v[(i + 1) * m..(i + 2) * m].clone_from_slice(a.basis_product(x, y));
                let (p, q) = ((i + 1) * m + x, y);
                out.set_product(p.min(q), p.max(q), v)?;
            }
        }
    }
    Ok(out)
}

/// Builds ρ(1⊗x) = 1⊗x + Σ h′ᵢ⊗γᵢ(x) from dγᵢ = μ′ᵢ − μᵢ and checks it intertwines the two
/// infinitesimal multiplications.
pub fn representative_independence_check(a: &JJAlgebra, mu: &[SymCochain], mu2: &[SymCochain]) -> Result<bool> {
    if mu.len() != mu2.len() {
        return Err(Error::Precondition("lifts of different length".into()));
    }
    let h = Cohomology::new(a);
    if !mu.iter().chain(mu2).all(|p| h.is_cocycle(p)) {
        return Err(Error::NotCocycle);
    }
    let gammas: Vec<SymCochain> = mu
        .iter()
        .zip(mu2)
        .map(|(p, q)| h.is_coboundary2(&q.sub(p)).ok_or_else(|| Error::Precondition("lifts not cohomologous".into())))
        .collect::<Result<_>>()?;
    let m = a.dim();
    let total = m * (mu.len() + 1);
    let mut rho = Matrix::identity(total).entries().to_vec();
    for (i, g) in gammas.iter().enumerate() {
        for x in 0..m {
            for (k, c) in g.on_basis(&[x]).iter().enumerate() {
                rho[((i + 1) * m + k) * total + x] = c.clone();
            }
        }
    }
    let rho = LinearMap::new(Matrix::from_vec(total, total, rho));
    Ok(is_isomorphism(&rho, &infinitesimal_algebra(a, mu)?, &infinitesimal_algebra(a, mu2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::poly::parse_vector;

    fn c(m: usize, s: &str) -> SymCochain {
        SymCochain::parse(m, s).unwrap()
    }

    fn j12f_reps() -> Vec<SymCochain> {
        ["e^{1,3}_1-2e^{2,3}_2", "e^{1,3}_3", "e^{3,3}_2", "e^{3,3}_3"].iter().map(|s| c(3, s)).collect()
    }

    fn span(rel: &[Poly]) -> Matrix {
        let n = rel.first().map(Poly::nvars).unwrap_or(0);
        let monos = quadratic_monomials(n);
        let rows: Vec<Vec<Scalar>> = rel
            .iter()
            .map(|p| monos.iter().map(|&(i, j)| p.coeff(&quadratic_exponents(n, i, j))).collect())
            .collect();
        rref(&Matrix::from_rows(monos.len(), &rows)).0
    }

    #[test]
    fn universal_sizes() {
        assert_eq!(universal_infinitesimal(&catalog("J_1_2+F").unwrap()).n_params(), 4);
        assert_eq!(universal_infinitesimal(&catalog("J_1_3").unwrap()).n_params(), 2);
        let rigid = universal_infinitesimal(&catalog("J_1_2").unwrap());
        assert_eq!(rigid.n_params(), 0);
        let t = versal_multiplication_table(&second_order_extension(&catalog("J_1_2").unwrap()).unwrap());
        assert_eq!(t.to_string(), "(e1^2)_v = e2\n");
    }

    #[test]
    fn j12f_second_order() {
        let a = catalog("J_1_2+F").unwrap();
        let m = extend_to_second_order(&universal_infinitesimal_with(&a, j12f_reps()).unwrap()).unwrap();
        let expected: Vec<Poly> = ["t1^2", "t4^2", "t1t2", "t1t4", "t2t4", "t3t4 - 2t1t3"]
            .iter()
            .map(|s| Poly::parse(4, s).unwrap())
            .collect();
        assert_eq!(span(m.relations()), span(&expected));
        assert!(verify_corrections(&m));
        let t = versal_multiplication_table(&m);
        assert_eq!(t.get(1, 2).unwrap(), parse_vector(4, 3, "−2t1e2 − 2t2²e3").unwrap().as_slice());
        assert_eq!(t.get(2, 2).unwrap(), parse_vector(4, 3, "t3e2 + t4e3 − 2t2t3e1").unwrap().as_slice());
        assert_eq!(t.get(0, 2).unwrap(), parse_vector(4, 3, "t1e1 + t2e3").unwrap().as_slice());
    }

    #[test]
    fn calibration_identities() {
        let a = catalog("J_1_2+F").unwrap();
        let h = Cohomology::new(&a);
        let r = j12f_reps();
        let b22 = bracket(&r[1], &r[1]).unwrap();
        assert_eq!(h.differential(&c(3, "-2e^{2,3}_3")).unwrap(), b22.scale(&ratio(-1, 2)));
        let b23 = bracket(&r[1], &r[2]).unwrap().scale(&int(2));
        assert_eq!(h.differential(&c(3, "-2e^{3,3}_1")).unwrap(), b23.scale(&ratio(-1, 2)));
    }

    #[test]
    fn reduction() {
        let rel = vec![Poly::parse(2, "t1^2 - t2^2").unwrap()];
        let p = Poly::parse(2, "3t1^2 + t1 + t1^3").unwrap();
        assert_eq!(reduce_mod_relations(&p, &rel, 2), Poly::parse(2, "3t2^2 + t1").unwrap());
    }

    #[test]
    fn massey_j12f() {
        let a = catalog("J_1_2+F").unwrap();
        let h = Cohomology::new(&a);
        let r = j12f_reps();
        let pairs = bracket_pairs(&h, &r);
        let cob: Vec<(usize, usize)> =
            pairs.iter().filter(|(_, k)| *k == BracketKind::Coboundary).map(|(p, _)| *p).collect();
        assert_eq!(cob, vec![(1, 1), (1, 2)]);
        assert!(pairs.contains(&((2, 2), BracketKind::Zero)));
        let out = massey3(&a, &[r[1].clone(), r[1].clone(), r[2].clone()], None).unwrap();
        assert_ne!(out.label(), "undefined");
        let out = massey3(&a, &[r[0].clone(), r[1].clone(), r[2].clone()], None).unwrap();
        assert!(matches!(out, MasseyOutcome::Undefined(_)));
        let z = SymCochain::zero(3, 2);
        let zeros = [z.clone(), z.clone(), z.clone()];
        assert_eq!(massey3(&a, &zeros, None).unwrap(), MasseyOutcome::Trivial);
        assert_eq!(massey3(&a, &zeros, Some(&zeros)).unwrap(), MasseyOutcome::Trivial);
        let bad = [c(3, "e^{1,1}_1"), z.clone(), z.clone()];
        assert!(massey3(&a, &zeros, Some(&bad)).is_err());
    }

    #[test]
    fn massey_j13_undefined() {
        let a = catalog("J_1_3").unwrap();
        let h = Cohomology::new(&a);
        let r = h.representatives();
        for (_, o) in massey_survey(&h, &r).unwrap() {
            assert!(matches!(o, MasseyOutcome::Undefined(_)));
        }
    }

    #[test]
    fn infinitesimal_base_change() {
        let a = catalog("J_1_2+F").unwrap();
        let m = universal_infinitesimal_with(&a, j12f_reps()).unwrap();
        let lam = m.as_infinitesimal();
        for (i, mu) in j12f_reps().iter().enumerate() {
            assert_eq!(&alpha_cocycle(&lam, i).unwrap(), mu);
        }
        assert!(alpha_cocycle(&lam, 4).is_err());
        let pick = pushout_order1(&m, &Matrix::from_ints(1, 4, &[0, 0, 1, 0])).unwrap();
        assert_eq!(pick.alphas, vec![c(3, "e^{3,3}_2")]);
        assert_eq!(pushout_order1(&m, &Matrix::identity(4)).unwrap(), lam);
        let zero = pushout_order1(&m, &Matrix::zeros(2, 4)).unwrap();
        assert!(zero.alphas.iter().all(SymCochain::is_zero));
        let trivial = InfinitesimalWithBase::new(a.clone(), vec![SymCochain::zero(3, 2); 2]);
        assert!(infinitesimal_equivalent(&zero, &trivial).unwrap());
        let d = crate::cochain::differential(&a, &c(3, "e^1_1+e^3_2")).unwrap();
        let mut shifted = lam.clone();
        shifted.alphas[0] = shifted.alphas[0].add(&d);
        assert!(infinitesimal_equivalent(&lam, &shifted).unwrap());
        assert!(!infinitesimal_equivalent(&lam, &pushout_order1(&m, &Matrix::zeros(4, 4)).unwrap()).unwrap());
    }

    #[test]
    fn representative_independence() {
        let a = catalog("J_1_2+F").unwrap();
        let mu = j12f_reps();
        assert!(representative_independence_check(&a, &mu, &mu).unwrap());
        let mut mu2 = mu.clone();
        mu2[0] = mu2[0].add(&crate::cochain::differential(&a, &c(3, "e^1_1")).unwrap());
        assert!(representative_independence_check(&a, &mu, &mu2).unwrap());
        let mut bad = mu.clone();
        bad.swap(0, 1);
        assert!(representative_independence_check(&a, &mu, &bad).is_err());
    }
}
