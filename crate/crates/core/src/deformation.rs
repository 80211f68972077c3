//! Formal one-parameter deformations μ_t = μ₀ + Σ tⁿ φ_n truncated at a finite order.

use num_traits::{One, Zero};

use crate::algebra::{is_isomorphism, JJAlgebra, LinearMap};
use crate::catalog::catalog;
use crate::cochain::{bracket, mult_cochain, SymCochain};
use crate::cohomology::{fingerprint_with_h2, Cohomology};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, int, parse_scalar, ratio, solve, unit, zeros, Matrix, Scalar};
use crate::reference;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalDeformation1 {
    base: JJAlgebra,
    terms: Vec<SymCochain>,
}

impl FormalDeformation1 {
    pub fn new(base: JJAlgebra, terms: Vec<SymCochain>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Precondition("a deformation needs order >= 1".into()));
        }
        for t in &terms {
            if t.dim() != base.dim() || t.degree() != 2 {
                return Err(Error::Precondition("deformation terms must be 2-cochains on the base".into()));
            }
        }
        Ok(FormalDeformation1 { base, terms })
    }

    /// The one-term deformation μ₀ + tφ.
    pub fn infinitesimal(base: JJAlgebra, phi: SymCochain) -> Result<Self> {
        Self::new(base, vec![phi])
    }

    pub fn base(&self) -> &JJAlgebra {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[SymCochain] {
        &self.terms
    }

    /// φ_n, zero above the order.
    pub fn term(&self, n: usize) -> SymCochain {
        assert!(n >= 1, "terms start at order 1");
        self.terms.get(n - 1).cloned().unwrap_or_else(|| SymCochain::zero(self.base.dim(), 2))
    }

    /// ½ Σ_{i+j=n, i,j>0} [φ_i, φ_j].
    fn bracket_sum(&self, n: usize) -> SymCochain {
        let mut acc = SymCochain::zero(self.base.dim(), 3);
        for i in 1..n {
            let (a, b) = (self.term(i), self.term(n - i));
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc.add_scaled(&ratio(1, 2), &bracket(&a, &b).expect("degree 3"));
        }
        acc
    }

    fn residual(&self, n: usize) -> SymCochain {
        let d = crate::cochain::differential(&self.base, &self.term(n)).expect("degree 2");
        d.add(&self.bracket_sum(n))
    }
}

/// Orders n ≤ 2N at which dφ_n + ½Σ[φ_i,φ_j] ≠ 0, with the residual.
pub fn check_deformation(d: &FormalDeformation1) -> Vec<(usize, SymCochain)> {
    (1..=2 * d.order()).map(|n| (n, d.residual(n))).filter(|(_, r)| !r.is_zero()).collect()
}

/// ω_n = ½ Σ_{i+j=n} [φ_i, φ_j]; the deformation extends to order n iff −ω_n ∈ B³.
pub fn obstruction(d: &FormalDeformation1, n: usize) -> Result<SymCochain> {
    if let Some(k) = (1..n).find(|&k| !d.residual(k).is_zero()) {
        return Err(Error::Precondition(format!("deformation equation fails at order {k}")));
    }
    Ok(d.bracket_sum(n))
}

/// Appends φ_{N+1} solving dφ = −ω_{N+1}, if the obstruction is a coboundary.
pub fn extend(d: &FormalDeformation1) -> Result<Option<FormalDeformation1>> {
    let n = d.order() + 1;
    let omega = obstruction(d, n)?;
    let h = Cohomology::new(&d.base);
    Ok(h.is_coboundary3(&omega.scale(&int(-1))).map(|phi| {
        let mut terms = d.terms.clone();
        terms.push(phi);
        FormalDeformation1 { base: d.base.clone(), terms }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfinitesimalClass {
    /// [φ,φ] = 0: μ₀ + tφ is already a deformation.
    Real,
    /// −½[φ,φ] = dχ, but no φ₂ = χ + r (r ∈ Z²) has [φ,φ₂] ∈ B³.
    Order2ThenObstructed { witness: SymCochain },
    /// Some φ₂ = χ + r makes the order-3 obstruction a coboundary.
    ExtendsPastOrder3 { witness: SymCochain, second: SymCochain },
    /// [φ,φ] ∉ B³.
    ObstructedAt2,
}

impl InfinitesimalClass {
    pub fn is_real(&self) -> bool {
        matches!(self, InfinitesimalClass::Real)
    }

    pub fn label(&self) -> &'static str {
        match self {
            InfinitesimalClass::Real => "real",
            InfinitesimalClass::Order2ThenObstructed { .. } => "order2_then_obstructed",
            InfinitesimalClass::ExtendsPastOrder3 { .. } => "extends_past_order3",
            InfinitesimalClass::ObstructedAt2 => "obstructed_at_2",
        }
    }
}

pub fn classify_infinitesimal(a: &JJAlgebra, phi: &SymCochain) -> Result<InfinitesimalClass> {
    classify_with(&Cohomology::new(a), phi)
}

pub fn classify_with(h: &Cohomology, phi: &SymCochain) -> Result<InfinitesimalClass> {
    if !h.is_cocycle(phi) {
        return Err(Error::NotCocycle);
    }
    let sq = bracket(phi, phi)?;
    if sq.is_zero() {
        return Ok(InfinitesimalClass::Real);
    }
    let Some(chi) = h.is_coboundary3(&sq.scale(&ratio(-1, 2))) else {
        return Ok(InfinitesimalClass::ObstructedAt2);
    };
    // [φ, χ + Σ c_i z_i] ∈ B³  ⇔  −[φ,χ] ∈ span(columns of d₂, [φ,z_i]).
    let target = bracket(phi, &chi)?;
    let z = h.z2_basis();
    let mut cols: Vec<Vec<Scalar>> = (0..h.d2().cols()).map(|c| h.d2().col(c)).collect();
    let offset = cols.len();
    for zi in &z {
        cols.push(bracket(phi, zi)?.coeffs().to_vec());
    }
    let neg: Vec<Scalar> = target.coeffs().iter().map(|x| -x).collect();
    let system = Matrix::from_cols(neg.len(), &cols);
    Ok(match solve(&system, &neg) {
        None => InfinitesimalClass::Order2ThenObstructed { witness: chi },
        Some(x) => {
            let mut second = chi.clone();
            for (c, zi) in x[offset..].iter().zip(&z) {
                second.add_scaled(c, zi);
            }
            InfinitesimalClass::ExtendsPastOrder3 { witness: chi, second }
        }
    })
}

/// ψ̂_t = id + Σ ψ_i tⁱ, with ψ_i linear endomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceMap {
    maps: Vec<LinearMap>,
}

impl EquivalenceMap {
    pub fn new(maps: Vec<LinearMap>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::Precondition("an equivalence needs order >= 1".into()));
        }
        let m = maps[0].dim();
        if maps.iter().any(|p| p.dim() != m) {
            return Err(Error::Precondition("equivalence maps have different sizes".into()));
        }
        Ok(EquivalenceMap { maps })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        EquivalenceMap { maps: vec![LinearMap::zero(dim); order] }
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.maps
    }

    fn dim(&self) -> usize {
        self.maps[0].dim()
    }

    /// Coefficient of tⁿ, identity at n = 0.
    fn coeff(&self, n: usize) -> LinearMap {
        match n {
            0 => LinearMap::identity(self.dim()),
            n => self.maps.get(n - 1).cloned().unwrap_or_else(|| LinearMap::zero(self.dim())),
        }
    }

    /// The inverse series truncated at the same order.
    pub fn inverse(&self) -> EquivalenceMap {
        let mut inv: Vec<LinearMap> = vec![LinearMap::identity(self.dim())];
        for n in 1..=self.order() {
            let mut acc = LinearMap::zero(self.dim());
            for k in 1..=n {
                acc = acc.add(&self.coeff(k).compose(&inv[n - k]));
            }
            inv.push(acc.scale(&int(-1)));
        }
        EquivalenceMap { maps: inv.split_off(1) }
    }
}

fn mu(d: &FormalDeformation1, n: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if n == 0 {
        d.base.mul(x, y)
    } else if n <= d.order() {
        d.term(n).evaluate(&[x.to_vec(), y.to_vec()]).expect("shape")
    } else {
        zeros(d.base.dim())
    }
}

/// μ'_t(x,y) = ψ̂_t μ_t(ψ̂_t⁻¹x, ψ̂_t⁻¹y), truncated at the order.
pub fn apply_equivalence(d: &FormalDeformation1, e: &EquivalenceMap) -> Result<FormalDeformation1> {
    if d.order() != e.order() || d.base.dim() != e.dim() {
        return Err(Error::Precondition("deformation and equivalence orders differ".into()));
    }
    let m = d.base.dim();
    let n_max = d.order();
    let inv = e.inverse();
    let mut terms = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        // pairs i ≤ j in lex order are exactly the multiset ranks
        let mut coeffs = Vec::with_capacity(m * m * (m + 1) / 2);
        for i in 0..m {
            for j in i..m {
                let mut acc = zeros(m);
                for c in 0..=n {
                    let x = inv.coeff(c).apply(&unit(m, i));
                    for dd in 0..=n - c {
                        let y = inv.coeff(dd).apply(&unit(m, j));
                        for b in 0..=n - c - dd {
                            let w = mu(d, b, &x, &y);
                            add_scaled(&mut acc, &Scalar::one(), &e.coeff(n - b - c - dd).apply(&w));
                        }
                    }
                }
                coeffs.extend(acc);
            }
        }
        let phi = SymCochain::from_coeffs(m, 2, coeffs)?;
        terms.push(phi);
    }
    FormalDeformation1::new(d.base.clone(), terms)
}

/// ψ̂_t μ_t(x,y) = μ'_t(ψ̂_t x, ψ̂_t y) modulo t^{N+1}, on basis pairs.
pub fn is_equivalence(d: &FormalDeformation1, d2: &FormalDeformation1, e: &EquivalenceMap) -> bool {
    let m = d.base.dim();
    if d2.base != d.base || e.dim() != m {
        return false;
    }
    let n_max = d.order().max(d2.order()).max(e.order());
    for n in 0..=n_max {
        for i in 0..m {
            for j in i..m {
                let (x, y) = (unit(m, i), unit(m, j));
                let mut lhs = zeros(m);
                for b in 0..=n {
                    add_scaled(&mut lhs, &Scalar::one(), &e.coeff(n - b).apply(&mu(d, b, &x, &y)));
                }
                let mut rhs = zeros(m);
                for c in 0..=n {
                    let px = e.coeff(c).apply(&x);
                    for dd in 0..=n - c {
                        let py = e.coeff(dd).apply(&y);
                        add_scaled(&mut rhs, &Scalar::one(), &mu(d2, n - c - dd, &px, &py));
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// x·y + Σ t0ⁿ φ_n(x,y); errors if the result is not Jacobi-Jordan.
pub fn specialize(d: &FormalDeformation1, t0: &Scalar) -> Result<JJAlgebra> {
    let mut total = mult_cochain(&d.base);
    let mut power = Scalar::one();
    for phi in &d.terms {
        power *= t0;
        total.add_scaled(&power, phi);
    }
    let m = d.base.dim();
    let mut a = JJAlgebra::zero(format!("{}[t={}]", d.base.name(), t0), m);
    for i in 0..m {
        for j in i..m {
            a.set_product(i, j, total.on_basis(&[i, j]).to_vec())?;
        }
    }
    if !a.is_jj() {
        return Err(Error::Precondition(format!("specialization at t = {t0} is not a Jacobi-Jordan algebra")));
    }
    Ok(a)
}

/// True iff `p` carries `target` isomorphically onto the specialization: p(e_i) = e'_i
/// is the new basis of the deformed algebra in which it has the target's constants.
pub fn verify_jump(d: &FormalDeformation1, t0: &Scalar, p: &LinearMap, target: &JJAlgebra) -> bool {
    if t0.is_zero() {
        return false;
    }
    match specialize(d, t0) {
        Ok(s) => is_isomorphism(p, target, &s),
        Err(_) => false,
    }
}

/// Parses vectors like `e1+e3`, `2e2-2e4`, `1/2e3-1/2e4` (1-based).
pub fn parse_vector(dim: usize, text: &str) -> Result<Vec<Scalar>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::Parse(format!("bad vector {text:?}"));
    let mut v = zeros(dim);
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let neg = rest.starts_with('-');
        rest = rest.strip_prefix(['+', '-']).unwrap_or(rest);
        let e = rest.find('e').ok_or_else(err)?;
        let coef = if e == 0 { Scalar::one() } else { parse_scalar(&rest[..e])? };
        rest = &rest[e + 1..];
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let k: usize = rest[..end].parse().map_err(|_| err())?;
        if k == 0 || k > dim {
            return Err(err());
        }
        v[k - 1] += if neg { -coef } else { coef };
        rest = &rest[end..];
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessStatus {
    Verified,
    Asserted,
}

impl WitnessStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            WitnessStatus::Verified => "verified",
            WitnessStatus::Asserted => "asserted",
        }
    }
}

/// A rational witness for one arrow: deform the source by `cocycle`, specialize at `t0`,
/// and map the target basis to `images`.
#[derive(Clone, Debug)]
pub struct JumpWitness {
    pub cocycle: &'static str,
    pub t0: (i64, i64),
    pub images: &'static [&'static str],
}

#[derive(Clone, Debug)]
pub struct JumpEdge {
    pub source: String,
    pub target: String,
    pub status: WitnessStatus,
    pub note: String,
}

const ID3: &[&str] = &["e1", "e2", "e3"];
const ID4: &[&str] = &["e1", "e2", "e3", "e4"];
const ID5: &[&str] = &["e1", "e2", "e3", "e4", "e5"];

/// Bundled witnesses, keyed by (source, target).
pub fn jump_witness(source: &str, target: &str) -> Option<JumpWitness> {
    let w = |cocycle, t0, images| Some(JumpWitness { cocycle, t0, images });
    match (source, target) {
        ("J_1_2+F", "J_1_3") => w("e^{3,3}_2", (1, 1), ID3),
        ("J_1_2+F2", "J_1_4") => w("e^{1,3}_4", (1, 1), ID4),
        ("J_1_2+F2", "J_1_3+F") => w("e^{3,3}_2", (1, 1), ID4),
        ("J_1_4", "J_1_2^2") => w("e^{3,3}_2", (1, 1), &["e1+e3", "2e2+2e4", "e1-e3", "2e2-2e4"]),
        ("J_1_3+F", "J_1_2^2") => w("e^{1,1}_4", (1, 1), &["e1", "e2+e4", "e3", "e2"]),
        ("J_1_3+F", "J_2_4") => w("e^{4,4}_2", (-1, 1), &["e1", "e2", "e3+e4", "1/2e3-1/2e4"]),
        ("J_1_2+F3", "J_1_3+F2") => w("e^{3,3}_2", (1, 1), ID5),
        ("J_1_2+F3", "J_1_4+F") => w("e^{1,3}_4", (1, 1), ID5),
        ("J_1_4+F", "J_1_2^2+F") => w("e^{3,3}_2", (1, 1), &["e1+e3", "2e2+2e4", "e1-e3", "2e2-2e4", "e5"]),
        ("J_1_4+F", "J_6_5") => w("e^{1,5}_2", (1, 1), &["e1", "e2", "e3", "e5", "e4"]),
        ("J_1_3+F2", "J_1_2^2+F") => w("e^{1,1}_4", (1, 1), &["e1", "e2+e4", "e3", "e2", "e5"]),
        ("J_1_3+F2", "J_2_4+F") => w("e^{4,4}_2", (-1, 1), &["e1", "e2", "e3+e4", "1/2e3-1/2e4", "e5"]),
        ("J_1_2^2+F", "J_1_5") => w("e^{1,3}_5", (1, 1), ID5),
        ("J_1_2^2+F", "J_2_5") => w("e^{1,5}_4", (1, 1), &["e1", "e2", "e3", "e5", "e4"]),
        ("J_1_2^2+F", "J_1_2+J_1_3") => w("e^{5,5}_4", (1, 1), ID5),
        ("J_2_4+F", "J_2_5") => w("e^{3,3}_5", (1, 1), &["e3", "e5", "e1", "e4", "e2"]),
        ("J_2_4+F", "J_7_5") => w("e^{5,5}_2", (1, 1), &["e1", "e2", "e5", "e3", "e4"]),
        ("J_1_2+J_1_3", "J_4_5") => w("e^{3,3}_2", (1, 1), &["e1", "e2", "e3", "e2+e4", "e5"]),
        _ => None,
    }
}

impl JumpWitness {
    pub fn deformation(&self, source: &JJAlgebra) -> Result<FormalDeformation1> {
        let phi = SymCochain::parse(source.dim(), self.cocycle)?;
        FormalDeformation1::infinitesimal(source.clone(), phi)
    }

    pub fn map(&self, dim: usize) -> Result<LinearMap> {
        let images = self.images.iter().map(|s| parse_vector(dim, s)).collect::<Result<Vec<_>>>()?;
        Ok(LinearMap::from_images(&images))
    }

    pub fn t0(&self) -> Scalar {
        ratio(self.t0.0, self.t0.1)
    }

    pub fn check(&self, source: &JJAlgebra, target: &JJAlgebra) -> Result<bool> {
        let d = self.deformation(source)?;
        Ok(verify_jump(&d, &self.t0(), &self.map(source.dim())?, target))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Screen {
    /// Some specialization has the target's fingerprint.
    Consistent,
    /// No tried specialization has the target's fingerprint.
    NoMatch,
    /// Source and target fingerprints coincide, so the screen says nothing.
    Inseparable,
}

/// Compares fingerprints (with dim H²) of the target and of the specializations at t = ±1
/// of each listed extendible cocycle of `source` and of each sum of two of them.
pub fn fingerprint_screen(source: &JJAlgebra, target: &JJAlgebra) -> Screen {
    let want = fingerprint_with_h2(target);
    if source.dim() != target.dim() || fingerprint_with_h2(source) == want {
        return Screen::Inseparable;
    }
    let list: Vec<SymCochain> = reference::extendible(source.name())
        .unwrap_or_default()
        .iter()
        .filter_map(|s| SymCochain::parse(source.dim(), s).ok())
        .collect();
    let hits = |phi: SymCochain| {
        let Ok(d) = FormalDeformation1::infinitesimal(source.clone(), phi) else { return false };
        [int(1), int(-1)].iter().any(|t| specialize(&d, t).map(|a| fingerprint_with_h2(&a) == want).unwrap_or(false))
    };
    let found = list.iter().any(|p| hits(p.clone()))
        || (0..list.len()).any(|i| (i + 1..list.len()).any(|j| hits(list[i].add(&list[j]))));
    if found {
        Screen::Consistent
    } else {
        Screen::NoMatch
    }
}

/// The arrows of the jump diagram in dimension `dim`, each checked against its bundled
/// witness or, failing that, screened by fingerprints.
pub fn jump_graph(dim: usize) -> Result<Vec<JumpEdge>> {
    let edges = reference::jump_edges(dim).ok_or_else(|| Error::Precondition(format!("no jump diagram in dimension {dim}")))?;
    edges
        .iter()
        .map(|&(s, t)| {
            let (src, tgt) = (catalog(s)?, catalog(t)?);
            let (status, note) = match jump_witness(s, t) {
                Some(w) if w.check(&src, &tgt)? => {
                    (WitnessStatus::Verified, format!("deform by {} at t = {}", w.cocycle, w.t0()))
                }
                Some(w) => (WitnessStatus::Asserted, format!("bundled witness {} failed", w.cocycle)),
                None => {
                    let note = match fingerprint_screen(&src, &tgt) {
                        Screen::Consistent => "no bundled witness; a specialization has the target's fingerprint",
                        Screen::NoMatch => "no bundled witness; no tried specialization has the target's fingerprint",
                        Screen::Inseparable => "no bundled witness; fingerprints do not separate source and target",
                    };
                    (WitnessStatus::Asserted, note.into())
                }
            };
            Ok(JumpEdge { source: s.into(), target: t.into(), status, note })
        })
        .collect()
}

pub fn graph_to_dot(dim: usize, edges: &[JumpEdge]) -> String {
    let mut s = format!("digraph jump_dim{dim} {{\n");
    for e in edges {
        s.push_str(&format!("  \"{}\" -> \"{}\" [status={}];\n", e.source, e.target, e.status.as_str()));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: usize, s: &str) -> SymCochain {
        SymCochain::parse(m, s).unwrap()
    }

    fn j12f() -> JJAlgebra {
        catalog("J_1_2+F").unwrap()
    }

    #[test]
    fn real_deformation_checks() {
        let d = FormalDeformation1::infinitesimal(j12f(), c(3, "e^{3,3}_2")).unwrap();
        assert!(check_deformation(&d).is_empty());
        let d = FormalDeformation1::new(j12f(), vec![c(3, "e^{1,3}_3"), c(3, "-2e^{2,3}_3")]).unwrap();
        let fails: Vec<usize> = check_deformation(&d).into_iter().map(|(n, _)| n).collect();
        assert!(!fails.contains(&1) && !fails.contains(&2));
        assert!(fails.contains(&3));
        let d = FormalDeformation1::new(j12f(), vec![SymCochain::zero(3, 2); 3]).unwrap();
        assert!(check_deformation(&d).is_empty());
    }

    #[test]
    fn obstructions() {
        let phi = c(3, "e^{1,3}_3");
        let d = FormalDeformation1::infinitesimal(j12f(), phi.clone()).unwrap();
        let w = obstruction(&d, 2).unwrap();
        assert_eq!(w, bracket(&phi, &phi).unwrap().scale(&ratio(1, 2)));
        let h = Cohomology::new(&j12f());
        assert_eq!(h.is_coboundary3(&w.scale(&int(-1))).unwrap(), c(3, "-2e^{2,3}_3"));
        let zero = FormalDeformation1::infinitesimal(j12f(), SymCochain::zero(3, 2)).unwrap();
        assert!(obstruction(&zero, 2).unwrap().is_zero());
        let bad = FormalDeformation1::infinitesimal(j12f(), c(3, "e^{1,1}_1")).unwrap();
        assert!(obstruction(&bad, 2).is_err());
    }

    #[test]
    fn extension_stops_at_order_three() {
        let d = FormalDeformation1::infinitesimal(j12f(), c(3, "e^{1,3}_3")).unwrap();
        let d2 = extend(&d).unwrap().unwrap();
        assert_eq!(d2.term(2), c(3, "-2e^{2,3}_3"));
        assert!(extend(&d2).unwrap().is_none());
    }

    #[test]
    fn classifications() {
        let a = j12f();
        assert_eq!(classify_infinitesimal(&a, &c(3, "e^{3,3}_2")).unwrap(), InfinitesimalClass::Real);
        assert_eq!(
            classify_infinitesimal(&a, &c(3, "e^{1,3}_3")).unwrap(),
            InfinitesimalClass::Order2ThenObstructed { witness: c(3, "-2e^{2,3}_3") }
        );
        assert_eq!(
            classify_infinitesimal(&a, &c(3, "e^{1,3}_1-2e^{2,3}_2")).unwrap(),
            InfinitesimalClass::ObstructedAt2
        );
        assert_eq!(classify_infinitesimal(&a, &c(3, "e^{1,1}_1")), Err(Error::NotCocycle));
    }

    #[test]
    fn equivalences() {
        let a = j12f();
        let d = FormalDeformation1::new(a.clone(), vec![c(3, "e^{3,3}_2"), SymCochain::zero(3, 2)]).unwrap();
        let id = EquivalenceMap::identity(3, 2);
        assert_eq!(apply_equivalence(&d, &id).unwrap(), d);

        let trivial = FormalDeformation1::new(a.clone(), vec![SymCochain::zero(3, 2); 2]).unwrap();
        let psi1 = LinearMap::new(Matrix::from_ints(3, 3, &[1, 0, 2, 0, 0, 0, 1, 1, 0]));
        let psi2 = LinearMap::new(Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 3, 0, 0, 1]));
        let e = EquivalenceMap::new(vec![psi1.clone(), psi2]).unwrap();
        let moved = apply_equivalence(&trivial, &e).unwrap();
        assert_eq!(moved.term(1), crate::cochain::differential(&a, &SymCochain::from_linear(&psi1)).unwrap());
        assert!(is_equivalence(&trivial, &moved, &e));
        assert!(check_deformation(&moved).iter().all(|(n, _)| *n > 2));

        let back = apply_equivalence(&apply_equivalence(&d, &e).unwrap(), &e.inverse()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn inverse_series() {
        let psi = LinearMap::new(Matrix::from_ints(2, 2, &[1, 2, 0, 1]));
        let e = EquivalenceMap::new(vec![psi.clone(), psi.clone(), LinearMap::zero(2)]).unwrap();
        let inv = e.inverse();
        // (id + ψt + ψt²)(id + Σ a_n tⁿ) = id mod t⁴
        for n in 1..=3 {
            let mut acc = inv.coeff(n);
            for k in 1..=n {
                acc = acc.add(&e.coeff(k).compose(&inv.coeff(n - k)));
            }
            assert_eq!(acc, LinearMap::zero(2));
        }
    }

    #[test]
    fn specializations() {
        let a = j12f();
        let d = FormalDeformation1::infinitesimal(a.clone(), c(3, "e^{3,3}_2")).unwrap();
        assert_eq!(specialize(&d, &int(0)).unwrap().nonzero_products(), a.nonzero_products());
        let s = specialize(&d, &int(1)).unwrap();
        assert_eq!(s.nonzero_products(), catalog("J_1_3").unwrap().nonzero_products());
        let z = FormalDeformation1::infinitesimal(a.clone(), SymCochain::zero(3, 2)).unwrap();
        assert_eq!(specialize(&z, &int(7)).unwrap().nonzero_products(), a.nonzero_products());
        let bad = FormalDeformation1::infinitesimal(a, c(3, "e^{1,1}_1")).unwrap();
        assert!(specialize(&bad, &int(1)).is_err());
    }

    #[test]
    fn jumps() {
        let d = FormalDeformation1::infinitesimal(j12f(), c(3, "e^{3,3}_2")).unwrap();
        let j13 = catalog("J_1_3").unwrap();
        assert!(verify_jump(&d, &int(1), &LinearMap::identity(3), &j13));
        let half = LinearMap::diagonal(&[int(1), int(1), ratio(1, 2)]);
        assert!(verify_jump(&d, &int(4), &half, &j13));
        assert!(!verify_jump(&d, &int(4), &LinearMap::identity(3), &j13));
        assert!(!verify_jump(&d, &int(1), &LinearMap::identity(3), &j12f()));
        assert!(!verify_jump(&d, &int(0), &LinearMap::identity(3), &j12f()));
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector(4, "1/2e3-1/2e4").unwrap(), vec![int(0), int(0), ratio(1, 2), ratio(-1, 2)]);
        assert_eq!(parse_vector(2, "e1+e1").unwrap(), vec![int(2), int(0)]);
        assert!(parse_vector(2, "e3").is_err());
        assert!(parse_vector(2, "x").is_err());
    }

    #[test]
    fn small_graphs() {
        let g3 = jump_graph(3).unwrap();
        assert_eq!(g3.len(), 1);
        assert_eq!(g3[0].status, WitnessStatus::Verified);
        let g4 = jump_graph(4).unwrap();
        assert!(g4.iter().all(|e| e.status == WitnessStatus::Verified));
        assert!(jump_graph(6).is_err());
        let dot = graph_to_dot(3, &g3);
        assert!(dot.contains("\"J_1_2+F\" -> \"J_1_3\" [status=verified];"));
    }
}
