use proptest::prelude::*;

use jj_core::algebra::{apply_basis_change, is_isomorphism, JJAlgebra, LinearMap};
use jj_core::bilinear::{
    adjoint_map, compatible_form_space, double_extension, find_nondegenerate, survey_algebra, verify_form,
    BilinearForm, FormKind, SpecialAdmissiblePair,
};
use jj_core::catalog::{catalog, NAMES};
use jj_core::cochain::{bracket, cochain_space_dim, differential, mult_cochain};
use jj_core::cohomology::{fingerprint_with_h2, Cohomology};
use jj_core::deformation::{classify_with, specialize, FormalDeformation1};
use jj_core::io::{algebra_from_json, algebra_to_json, cochain_from_json, cochain_to_json};
use jj_core::linalg::{int, kernel_basis, ratio, solve, Matrix, Scalar};
use jj_core::poly::Poly;
use jj_core::reference;
use jj_core::SymCochain;

fn small_names() -> Vec<&'static str> {
    NAMES.iter().copied().filter(|n| catalog(n).unwrap().dim() <= 4).collect()
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| Matrix::from_ints(rows, cols, &v))
}

/// L·U with L unit lower triangular and U upper triangular with nonzero diagonal.
fn invertible(n: usize) -> impl Strategy<Value = LinearMap> {
    (
        prop::collection::vec(-2i64..=2, n * n),
        prop::collection::vec(-2i64..=2, n * n),
        prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 2, 3]), n),
    )
        .prop_map(move |(l, u, d)| {
            let mut lm = Matrix::identity(n);
            let mut um = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    if j < i {
                        lm[(i, j)] = int(l[i * n + j]);
                    } else if j > i {
                        um[(i, j)] = int(u[i * n + j]);
                    } else {
                        um[(i, j)] = int(d[i]);
                    }
                }
            }
            LinearMap::new(lm.mul(&um))
        })
}

fn cochain(dim: usize, degree: usize) -> impl Strategy<Value = SymCochain> {
    prop::collection::vec(prop::sample::select(vec![0i64, 0, 0, -2, -1, 1, 2]), cochain_space_dim(dim, degree))
        .prop_map(move |v| SymCochain::from_coeffs(dim, degree, v.into_iter().map(int).collect()).unwrap())
}

fn algebra_with_map(names: Vec<&'static str>) -> impl Strategy<Value = (JJAlgebra, LinearMap)> {
    prop::sample::select(names).prop_flat_map(|n| {
        let a = catalog(n).unwrap();
        let m = a.dim();
        (Just(a), invertible(m))
    })
}

fn algebra_with_cochain(names: Vec<&'static str>, degree: usize) -> impl Strategy<Value = (JJAlgebra, SymCochain)> {
    prop::sample::select(names).prop_flat_map(move |n| {
        let a = catalog(n).unwrap();
        let m = a.dim();
        (Just(a), cochain(m, degree))
    })
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    (prop::sample::select(vec![-5i64, -3, -2, -1, 1, 2, 3, 7]), 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in (1usize..6, 1usize..7).prop_flat_map(|(r, c)| matrix(r, c))) {
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis_vecs() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn solve_consistent_systems(
        (m, x) in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (matrix(r, c), prop::collection::vec(-4i64..=4, c)))
    ) {
        let x: Vec<Scalar> = x.into_iter().map(int).collect();
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a.mul(&inv), Matrix::identity(3));
        } else {
            prop_assert_eq!(a.det(), int(0));
        }
    }

    #[test]
    fn basis_change_preserves_invariants((a, p) in algebra_with_map(small_names())) {
        let b = apply_basis_change(&a, &p).unwrap();
        prop_assert!(b.is_jj());
        prop_assert!(is_isomorphism(&p, &b, &a));
        prop_assert_eq!(a.fingerprint(), b.fingerprint());
        prop_assert_eq!(fingerprint_with_h2(&a), fingerprint_with_h2(&b));
    }

    #[test]
    fn algebra_json_round_trip((a, p) in algebra_with_map(NAMES.to_vec())) {
        let b = apply_basis_change(&a, &p).unwrap();
        prop_assert_eq!(algebra_from_json(&algebra_to_json(&b)).unwrap(), b);
    }

    #[test]
    fn cochain_json_round_trip((_, c) in algebra_with_cochain(NAMES.to_vec(), 3)) {
        prop_assert_eq!(cochain_from_json(&cochain_to_json(&c)).unwrap(), c.clone());
        prop_assert_eq!(SymCochain::parse(c.dim(), &c.to_notation()).unwrap(), c);
    }

    #[test]
    fn dd_vanishes_from_degree_one((a, phi) in algebra_with_cochain(NAMES.to_vec(), 1)) {
        let dphi = differential(&a, &phi).unwrap();
        prop_assert!(differential(&a, &dphi).unwrap().is_zero());
    }

    #[test]
    fn differential_is_a_bracket((a, phi, psi) in prop::sample::select(NAMES.to_vec()).prop_flat_map(|n| {
        let a = catalog(n).unwrap();
        let m = a.dim();
        (Just(a), cochain(m, 1), cochain(m, 2))
    })) {
        let mu = mult_cochain(&a);
        prop_assert_eq!(differential(&a, &phi).unwrap(), bracket(&mu, &phi).unwrap().scale(&int(-1)));
        prop_assert_eq!(differential(&a, &psi).unwrap(), bracket(&mu, &psi).unwrap());
    }

    #[test]
    fn bracket_of_degree_two_is_symmetric(
        (x, y) in prop::sample::select(vec![2usize, 3, 4, 5]).prop_flat_map(|m| (cochain(m, 2), cochain(m, 2)))
    ) {
        prop_assert_eq!(bracket(&x, &y).unwrap(), bracket(&y, &x).unwrap());
    }

    #[test]
    fn evaluation_is_symmetric(
        (c, args) in prop::sample::select(vec![2usize, 3, 4, 5]).prop_flat_map(|m| {
            (cochain(m, 3), prop::collection::vec(prop::collection::vec(-2i64..=2, m), 3))
        })
    ) {
        let args: Vec<Vec<Scalar>> = args.into_iter().map(|v| v.into_iter().map(int).collect()).collect();
        let v = c.evaluate(&args).unwrap();
        for perm in [[1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0]] {
            let p: Vec<Vec<Scalar>> = perm.iter().map(|&i| args[i].clone()).collect();
            prop_assert_eq!(&c.evaluate(&p).unwrap(), &v);
        }
    }

    #[test]
    fn specializing_at_zero_gives_the_base((a, phi) in algebra_with_cochain(NAMES.to_vec(), 2)) {
        let d = FormalDeformation1::new(a.clone(), vec![phi]).unwrap();
        let s = specialize(&d, &int(0)).unwrap();
        prop_assert!(is_isomorphism(&LinearMap::identity(a.dim()), &a, &s));
    }

    #[test]
    fn real_deformations_specialize_to_jj(
        (a, phi) in prop::sample::select(NAMES.iter().copied().filter(|n| {
            !reference::extendible(n).unwrap_or_default().is_empty()
        }).collect::<Vec<_>>()).prop_flat_map(|n| {
            let list = reference::extendible(n).unwrap();
            (Just(catalog(n).unwrap()), prop::sample::select(list))
        }),
        t0 in nonzero_rational()
    ) {
        let phi = SymCochain::parse(a.dim(), &phi).unwrap();
        let d = FormalDeformation1::infinitesimal(a, phi).unwrap();
        prop_assert!(jj_core::deformation::check_deformation(&d).is_empty());
        prop_assert!(specialize(&d, &t0).is_ok());
    }

    #[test]
    fn poly_display_round_trip(terms in prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -4i64..=4), 0..6)) {
        let mut p = Poly::zero(3);
        for (a, b, c, k) in terms {
            p = p.add(&Poly::monomial(3, vec![a, b, c], int(k)));
        }
        prop_assert_eq!(Poly::parse(3, &p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classification_ignores_coboundaries(
        (a, coeffs, psi) in prop::sample::select(small_names()).prop_flat_map(|n| {
            let a = catalog(n).unwrap();
            let m = a.dim();
            (Just(a), prop::collection::vec(-2i64..=2, 16), cochain(m, 1))
        })
    ) {
        let h = Cohomology::new(&a);
        let reps = h.representatives();
        let mut phi = SymCochain::zero(a.dim(), 2);
        for (r, c) in reps.iter().zip(coeffs) {
            phi.add_scaled(&int(c), r);
        }
        let shifted = phi.add(&differential(&a, &psi).unwrap());
        prop_assert_eq!(
            classify_with(&h, &phi).unwrap().label(),
            classify_with(&h, &shifted).unwrap().label()
        );
    }

    #[test]
    fn survey_is_basis_independent(
        (a, p) in algebra_with_map(small_names()),
        kind in prop::sample::select(vec![FormKind::Symplectic, FormKind::PseudoEuclidean])
    ) {
        let b = apply_basis_change(&a, &p).unwrap();
        let (ra, rb) = (survey_algebra(&a, kind), survey_algebra(&b, kind));
        prop_assert_eq!(ra.space_dim, rb.space_dim);
        prop_assert_eq!(ra.exists(), rb.exists());
        if let Some(f) = &rb.witness {
            prop_assert!(verify_form(&b, f));
        }
    }

    #[test]
    fn adjoint_identity(g in matrix(4, 4), x in prop::collection::vec(-3i64..=3, 4), y in prop::collection::vec(-3i64..=3, 4)) {
        let j14 = catalog("J_1_4").unwrap();
        let f = find_nondegenerate(&compatible_form_space(&j14, FormKind::PseudoEuclidean), FormKind::PseudoEuclidean).unwrap();
        let w = BilinearForm::from_ints(FormKind::Symplectic, 4, &reference::OMEGA_J14);
        let g = LinearMap::new(g);
        let (x, y): (Vec<Scalar>, Vec<Scalar>) = (x.into_iter().map(int).collect(), y.into_iter().map(int).collect());
        for form in [f, w] {
            let gs = adjoint_map(&form, &g).unwrap();
            prop_assert_eq!(form.eval(&g.apply(&x), &y), form.eval(&x, &gs.apply(&y)));
            prop_assert_eq!(adjoint_map(&form, &gs).unwrap(), g.clone());
        }
    }

    #[test]
    fn plane_double_extensions(s in rational(), l in rational(), a11 in rational(), a12 in nonzero_rational()) {
        let f2 = catalog("F^2").unwrap();
        let w = BilinearForm::standard_symplectic(1);
        // D = 0, A0 = s² e1 + l e2
        let pair = SpecialAdmissiblePair { d_map: LinearMap::zero(2), a0: vec![&s * &s, l.clone()] };
        let (de, form) = double_extension(&f2, &w, &pair).unwrap();
        prop_assert!(de.is_jj() && verify_form(&de, &form));
        // D² = 0 with A0 in Ker D
        let a21 = -(&a11 * &a11) / &a12;
        let d = LinearMap::from_images(&[vec![a11.clone(), a12.clone()], vec![a21, -a11.clone()]]);
        let a0 = vec![&l * &a11 / &a12, l.clone()];
        let pair = SpecialAdmissiblePair { d_map: d, a0 };
        let (de, form) = double_extension(&f2, &w, &pair).unwrap();
        prop_assert!(de.is_jj() && verify_form(&de, &form));
        prop_assert_eq!(de.dim(), 4);
    }
}
