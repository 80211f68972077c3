//! Z², B², H² and coboundary tests in S³.

use rayon::prelude::*;

use crate::algebra::{Fingerprint, JJAlgebra};
use crate::catalog::catalog;
use crate::cochain::{differential, differential_matrix, SymCochain};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, quotient_data, solve, Matrix, Quotient, Scalar, Subspace};

/// Differentials and cocycle/coboundary spaces of one algebra, computed once.
#[derive(Clone, Debug)]
pub struct Cohomology {
    algebra: JJAlgebra,
    d1: Matrix,
    d2: Matrix,
    z2: Subspace,
    b2: Subspace,
    b3: Subspace,
    quotient: Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySummary {
    pub name: String,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub representatives: Vec<SymCochain>,
}

impl Cohomology {
    pub fn new(a: &JJAlgebra) -> Self {
        let d1 = differential_matrix(a, 1).expect("degree 1");
        let d2 = differential_matrix(a, 2).expect("degree 2");
        let z2 = kernel_basis(&d2);
        let b2 = Subspace::image(&d1);
        let b3 = Subspace::image(&d2);
        let quotient = quotient_data(&b2, &z2).expect("B² ⊆ Z² for a Jacobi-Jordan algebra");
        Cohomology { algebra: a.clone(), d1, d2, z2, b2, b3, quotient }
    }

    pub fn algebra(&self) -> &JJAlgebra {
        &self.algebra
    }

    pub fn z2(&self) -> &Subspace {
        &self.z2
    }

    pub fn b2(&self) -> &Subspace {
        &self.b2
    }

    pub fn b3(&self) -> &Subspace {
        &self.b3
    }

    pub fn d1(&self) -> &Matrix {
        &self.d1
    }

    pub fn d2(&self) -> &Matrix {
        &self.d2
    }

    pub fn dim_h2(&self) -> usize {
        self.quotient.dim()
    }

    fn cochain(&self, degree: usize, v: Vec<Scalar>) -> SymCochain {
        SymCochain::from_coeffs(self.algebra.dim(), degree, v).expect("shape")
    }

    pub fn representatives(&self) -> Vec<SymCochain> {
        self.quotient.representatives().iter().map(|v| self.cochain(2, v.clone())).collect()
    }

    pub fn z2_basis(&self) -> Vec<SymCochain> {
        self.z2.basis_vecs().into_iter().map(|v| self.cochain(2, v)).collect()
    }

    pub fn summary(&self) -> CohomologySummary {
        CohomologySummary {
            name: self.algebra.name().to_string(),
            dim_z2: self.z2.dim(),
            dim_b2: self.b2.dim(),
            dim_h2: self.dim_h2(),
            representatives: self.representatives(),
        }
    }

    fn check(&self, phi: &SymCochain, degree: usize) -> Result<()> {
        if phi.dim() != self.algebra.dim() {
            return Err(Error::Dimension { expected: self.algebra.dim(), got: phi.dim() });
        }
        if phi.degree() != degree {
            return Err(Error::Degree(phi.degree()));
        }
        Ok(())
    }

    pub fn is_cocycle(&self, phi: &SymCochain) -> bool {
        self.check(phi, 2).is_ok() && self.z2.member(phi.coeffs())
    }

    /// Some ψ ∈ S¹ with dψ = φ.
    pub fn is_coboundary2(&self, phi: &SymCochain) -> Option<SymCochain> {
        self.check(phi, 2).ok()?;
        solve(&self.d1, phi.coeffs()).map(|x| self.cochain(1, x))
    }

    /// Some χ ∈ S² with dχ = ω, vanishing on the free coordinates of the solve.
    pub fn is_coboundary3(&self, omega: &SymCochain) -> Option<SymCochain> {
        self.check(omega, 3).ok()?;
        solve(&self.d2, omega.coeffs()).map(|x| self.cochain(2, x))
    }

    /// Coordinates of the class of a cocycle on the deterministic representatives.
    pub fn class_coordinates(&self, phi: &SymCochain) -> Result<Vec<Scalar>> {
        self.check(phi, 2)?;
        self.quotient.reduce(phi.coeffs()).ok_or(Error::NotCocycle)
    }

    /// True iff all cochains are cocycles whose classes are independent and span H².
    pub fn verify_representatives(&self, list: &[SymCochain]) -> bool {
        if list.len() != self.dim_h2() || !list.iter().all(|p| self.is_cocycle(p)) {
            return false;
        }
        let coords: Vec<Vec<Scalar>> = list.iter().map(|p| self.class_coordinates(p).expect("cocycle")).collect();
        Matrix::from_rows(self.dim_h2(), &coords).rank() == list.len()
    }

    pub fn differential(&self, phi: &SymCochain) -> Result<SymCochain> {
        differential(&self.algebra, phi)
    }
}

pub fn z2(a: &JJAlgebra) -> Subspace {
    Cohomology::new(a).z2
}

pub fn b2(a: &JJAlgebra) -> Subspace {
    Cohomology::new(a).b2
}

pub fn b3(a: &JJAlgebra) -> Subspace {
    Cohomology::new(a).b3
}

pub fn h2(a: &JJAlgebra) -> CohomologySummary {
    Cohomology::new(a).summary()
}

pub fn is_cocycle(a: &JJAlgebra, phi: &SymCochain) -> bool {
    phi.dim() == a.dim()
        && phi.degree() == 2
        && differential(a, phi).map(|d| d.is_zero()).unwrap_or(false)
}

pub fn is_coboundary2(a: &JJAlgebra, phi: &SymCochain) -> Option<SymCochain> {
    Cohomology::new(a).is_coboundary2(phi)
}

pub fn is_coboundary3(a: &JJAlgebra, omega: &SymCochain) -> Option<SymCochain> {
    Cohomology::new(a).is_coboundary3(omega)
}

pub fn verify_representatives(a: &JJAlgebra, list: &[SymCochain]) -> bool {
    Cohomology::new(a).verify_representatives(list)
}

/// (name, dim H²) per named algebra, in input order.
pub fn h2_table(names: &[&str]) -> Result<Vec<(String, usize)>> {
    let algebras: Vec<JJAlgebra> = names.iter().map(|n| catalog(n)).collect::<Result<_>>()?;
    Ok(algebras.par_iter().map(|a| (a.name().to_string(), Cohomology::new(a).dim_h2())).collect())
}

pub fn fingerprint_with_h2(a: &JJAlgebra) -> Fingerprint {
    Fingerprint { h2: Some(Cohomology::new(a).dim_h2()), ..a.fingerprint() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::bracket;
    use crate::linalg::ratio;

    fn c(m: usize, s: &str) -> SymCochain {
        SymCochain::parse(m, s).unwrap()
    }

    #[test]
    fn j12_plus_f_spaces() {
        let a = catalog("J_1_2+F").unwrap();
        let h = Cohomology::new(&a);
        assert_eq!(h.z2().dim(), 8);
        assert_eq!(h.b2().dim(), 4);
        assert_eq!(h.dim_h2(), 4);
        assert_eq!(h.representatives().len(), 4);
    }

    #[test]
    fn trivial_algebra_spaces() {
        let a = catalog("F^2").unwrap();
        let h = Cohomology::new(&a);
        assert_eq!(h.z2().dim(), 6);
        assert_eq!(h.b2().dim(), 0);
    }

    #[test]
    fn small_table_values() {
        assert_eq!(h2(&catalog("J_1_2").unwrap()).dim_h2, 0);
        assert_eq!(h2(&catalog("J_8_5").unwrap()).dim_h2, 1);
        assert_eq!(h2(&catalog("J_7_5").unwrap()).dim_h2, 20);
    }

    #[test]
    fn summary_consistency() {
        for n in ["J_1_3", "J_1_4", "J_2_5", "J_8_5"] {
            let h = Cohomology::new(&catalog(n).unwrap());
            let s = h.summary();
            assert_eq!(s.dim_h2, s.dim_z2 - s.dim_b2);
            for r in &s.representatives {
                assert!(h.is_cocycle(r));
                assert!(h.is_coboundary2(r).is_none());
            }
            assert!(h.verify_representatives(&s.representatives));
        }
    }

    #[test]
    fn witnesses() {
        let a = catalog("J_1_2+F").unwrap();
        let h = Cohomology::new(&a);
        assert!(h.is_cocycle(&c(3, "e^{1,3}_3")));
        let phi2 = c(3, "e^{1,3}_3");
        let omega = bracket(&phi2, &phi2).unwrap().scale(&ratio(-1, 2));
        assert_eq!(h.is_coboundary3(&omega).unwrap(), c(3, "-2e^{2,3}_3"));
        assert!(h.is_coboundary2(&SymCochain::zero(3, 2)).unwrap().is_zero());
        let dpsi = h.differential(&c(3, "e^1_1+2e^3_2")).unwrap();
        let w = h.is_coboundary2(&dpsi).unwrap();
        assert_eq!(h.differential(&w).unwrap(), dpsi);
    }

    #[test]
    fn coordinate_conditions_on_cocycles() {
        // a^{1,2}_2 = −a^{1,1}_1 and a^{2,3}_2 = −2a^{1,3}_1 on every cocycle of J_{1,2}⊕F.
        let h = Cohomology::new(&catalog("J_1_2+F").unwrap());
        for z in h.z2_basis() {
            assert_eq!(z.on_basis(&[0, 1])[1], -z.on_basis(&[0, 0])[0].clone());
            assert_eq!(z.on_basis(&[1, 2])[1], -z.on_basis(&[0, 2])[0].clone() * crate::linalg::int(2));
        }
    }

    #[test]
    fn listed_representatives() {
        let j13 = catalog("J_1_3").unwrap();
        let list = [c(3, "e^{1,3}_1-2e^{2,3}_2+2e^{3,3}_3"), c(3, "e^{1,3}_3-2e^{3,3}_1")];
        assert!(verify_representatives(&j13, &list));
        assert!(!verify_representatives(&j13, &list[..1]));
        let dup = [list[0].clone(), list[0].clone()];
        assert!(!verify_representatives(&j13, &dup));
        assert!(verify_representatives(&catalog("F^0").unwrap(), &[]));
    }

    #[test]
    fn free_function_wrappers() {
        let a = catalog("J_1_4").unwrap();
        assert_eq!(z2(&a).dim(), 13);
        assert_eq!(b2(&a).dim(), 9);
        assert!(b3(&a).dim() > 0);
        assert!(is_cocycle(&a, &c(4, "e^{3,3}_2")));
        assert!(!is_cocycle(&a, &c(4, "e^{1,1}_1")));
        assert!(is_coboundary2(&a, &c(4, "e^{3,3}_2")).is_none());
        assert!(h2_table(&["J_1_9"]).is_err());
        assert_eq!(fingerprint_with_h2(&a).h2, Some(4));
    }
}
