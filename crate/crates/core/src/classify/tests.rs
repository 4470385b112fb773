use std::sync::Arc;

use super::*;
use crate::algebra::{verify, TwoTermAlgebra};
use crate::builders::{
    abelian, quaternion_automorphism, normal_form_algebra, quaternion_example, random_algebra,
    random_transport_data, skeletal_string, so3, Quaternion, RandomProfile,
};
use crate::cohomology::Cochain;
use crate::error::Error;
use crate::exactla::{int, Matrix, Rational, Tensor};
use crate::lie::Representation;
use crate::morphism::{compose, inverse, is_isomorphism, verify_morphism, Morphism};

fn string(k: i64) -> TwoTermAlgebra {
    skeletal_string(&so3(), &int(k)).unwrap()
}

fn adjoint_normal_form(dim_u: usize) -> TwoTermAlgebra {
    let q = Quadruple::new(Representation::adjoint(so3()), dim_u, Cochain::zero(3, 3, 3)).unwrap();
    normal_form_algebra(&q).unwrap()
}

fn cyclic() -> Matrix {
    // e0 → e1 → e2 → e0
    Matrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])
}

#[test]
fn quaternion_triple() {
    let l = quaternion_example(&Quaternion::from_i64(1, 2, 3, 5));
    let q = extract_triple(&l, &decompose(&l)).unwrap();
    assert_eq!(q.g(), &so3());
    assert_eq!(q.rep(), &Representation::adjoint(so3()));
    assert_eq!(q.dim_u(), 1);
    assert_eq!(q.jtilde().value(&[0, 1, 2]), &[int(2), int(3), int(5)]);
}

#[test]
fn skeletal_triple() {
    let l = string(3);
    let q = extract_triple(&l, &decompose(&l)).unwrap();
    assert_eq!(q.g(), &so3());
    assert_eq!(q.rep(), &Representation::trivial(so3(), 1));
    assert_eq!(q.dim_u(), 0);
    assert_eq!(q.jtilde().value(&[0, 1, 2]), &[int(-6)]);
}

#[test]
fn abelian_triple() {
    let l = TwoTermAlgebra::zero(3, 2);
    let q = extract_triple(&l, &decompose(&l)).unwrap();
    assert_eq!(q.g(), &abelian(3));
    assert!(q.rep().matrices().iter().all(Matrix::is_zero));
    assert!(q.jtilde().is_zero());
}

#[test]
fn transport_along_identity_is_trivial() {
    let l = quaternion_example(&Quaternion::from_i64(1, 2, 3, 5));
    let (moved, m) = transport(&l, &Matrix::identity(4), &Matrix::identity(4), &Tensor::zeros(&[4, 4, 4])).unwrap();
    assert_eq!(moved, l);
    assert!(m.is_identity());
}

#[test]
fn transport_along_cyclic_automorphism() {
    let v = Quaternion::from_i64(1, 2, 3, 5);
    let aut = quaternion_automorphism(&v).unwrap();
    let (moved, _) = transport(aut.source(), aut.phi0(), aut.phi1(), aut.big_phi()).unwrap();
    assert_eq!(&moved, &**aut.source());
}

#[test]
fn transport_rejects_singular_maps() {
    let l = string(1);
    let err = transport(&l, &Matrix::zeros(3, 3), &Matrix::identity(1), &Tensor::zeros(&[3, 3, 1]));
    assert!(matches!(err, Err(Error::Singular(_))));
}

#[test]
fn transport_preserves_validity_and_homology() {
    for seed in 0..10 {
        let l = random_algebra(seed, &RandomProfile::small()).unwrap();
        let (p0, p1, phi) = random_transport_data(seed + 100, l.n0(), l.n1(), 2);
        let (moved, m) = transport(&l, &p0, &p1, &phi).unwrap();
        assert!(verify(&moved).is_pass());
        assert!(verify_morphism(&m).is_pass());
        assert_eq!(moved.homology_dims(), l.homology_dims());
    }
}

#[test]
fn quaternion_normal_form() {
    let v = Quaternion::from_i64(1, 2, 3, 5);
    let l = quaternion_example(&v);
    let (nf, m) = normal_form(&l).unwrap();
    let q = Quadruple::new(
        Representation::adjoint(so3()),
        1,
        Cochain::from_fn(3, 3, 3, |_| vec![int(2), int(3), int(5)]),
    )
    .unwrap();
    assert_eq!(nf, normal_form_algebra(&q).unwrap());
    assert!(verify_morphism(&m).is_pass());
    assert!(is_isomorphism(&m));
}

#[test]
fn normal_form_is_idempotent() {
    for l in [quaternion_example(&Quaternion::from_i64(0, 1, 0, 0)), string(2), adjoint_normal_form(2)] {
        let (nf, _) = normal_form(&l).unwrap();
        let (again, m) = normal_form(&nf).unwrap();
        assert_eq!(again, nf);
        assert!(m.is_identity());
        assert!(is_normal_form(&nf));
    }
    assert!(!is_normal_form(&quaternion_example(&Quaternion::zero())));
}

#[test]
fn zero_algebra_normal_form() {
    let z = TwoTermAlgebra::zero(0, 0);
    let (nf, m) = normal_form(&z).unwrap();
    assert_eq!(nf, z);
    assert!(m.is_identity());
}

#[test]
fn normal_form_matches_transport() {
    let l = random_algebra(11, &RandomProfile::default()).unwrap();
    let (nf, m) = normal_form(&l).unwrap();
    let (moved, _) = transport(&l, m.phi0(), m.phi1(), m.big_phi()).unwrap();
    assert_eq!(moved, nf);
}

#[test]
fn invalid_input_is_refused() {
    let mut jac = Tensor::zeros(&[3, 3, 3, 1]);
    for (p, s) in [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1)] {
        jac.set(&[p[0], p[1], p[2], 0], int(s));
    }
    // a Jacobiator on a Lie algebra with d = 0 must be a cocycle; so(3) with
    // a nonzero J is fine, but not when d ≠ 0 forces dJ = 0
    let mut d = Matrix::zeros(3, 1);
    d[(0, 0)] = int(1);
    let s = so3();
    let l = TwoTermAlgebra::new(d, s.structure_constants().clone(), Tensor::zeros(&[3, 1, 1]), jac).unwrap();
    assert!(!verify(&l).is_pass());
    assert!(matches!(normal_form(&l), Err(Error::VerificationFailed(_))));
}

#[test]
fn skeleton_examples() {
    let s = string(1);
    assert_eq!(skeleton(&s).unwrap(), normal_form(&s).unwrap().0);
    let q = skeleton(&quaternion_example(&Quaternion::from_i64(1, 2, 3, 5))).unwrap();
    assert_eq!((q.n0(), q.n1()), (3, 3));
    assert!(q.d().is_zero());
    assert_eq!(skeleton(&adjoint_normal_form(1)).unwrap(), skeleton(&adjoint_normal_form(2)).unwrap());
}

#[test]
fn invariant_examples() {
    let i0 = invariants(&string(0)).unwrap();
    assert!(i0.jtilde_coboundary);
    assert_eq!(i0.dim_u, 0);
    assert_eq!(i0.cohomology, [1, 0, 0, 1]);
    assert_eq!(i0.killing_rank, 3);
    assert_eq!(i0.derived_series, vec![3]);
    assert_eq!(i0.center_dim, 0);
    assert!(!invariants(&string(1)).unwrap().jtilde_coboundary);
    let iq = invariants(&quaternion_example(&Quaternion::from_i64(1, 2, 3, 5))).unwrap();
    assert!(iq.jtilde_coboundary);
    assert_eq!((iq.dim_g, iq.dim_u, iq.dim_v), (3, 1, 3));
    assert_eq!(iq.cohomology, [0, 0, 0, 0]);

    let heis = crate::builders::heisenberg3();
    assert_eq!(derived_series(&heis), vec![3, 1, 0]);
    assert_eq!(lower_central_series(&heis), vec![3, 1, 0]);
    assert_eq!(center_dim(&heis), 1);
    let na = crate::builders::nonabelian2();
    assert_eq!(derived_series(&na), vec![2, 1, 0]);
    assert_eq!(lower_central_series(&na), vec![2, 1]);
    assert_eq!(center_dim(&na), 0);
}

#[test]
fn distinguish_examples() {
    let q = quaternion_example(&Quaternion::from_i64(1, 2, 3, 5));
    assert_eq!(distinguish(&q, &q).unwrap(), Comparison::Inconclusive);
    assert_eq!(
        distinguish(&adjoint_normal_form(1), &adjoint_normal_form(2)).unwrap(),
        Comparison::Distinguished("dim U")
    );
    assert_eq!(distinguish(&string(0), &string(1)).unwrap(), Comparison::Distinguished("Jtilde coboundary flag"));
    assert_eq!(distinguish(&string(1), &string(2)).unwrap(), Comparison::Inconclusive);
}

#[test]
fn certify_same_algebra() {
    let l = quaternion_example(&Quaternion::from_i64(1, 2, 3, 5));
    let m = certify_isomorphism(&l, &l, &Matrix::identity(3), &Matrix::identity(1), &Matrix::identity(3)).unwrap();
    assert!(m.is_identity());
}

#[test]
fn certify_rescaled_strings() {
    let (a, b) = (string(1), string(2));
    let m = certify_isomorphism(&a, &b, &Matrix::identity(3), &Matrix::zeros(0, 0), &Matrix::scalar(1, &int(2))).unwrap();
    assert!(verify_morphism(&m).is_pass());
    assert!(m.big_phi().is_zero());
    let maps = extract_quadruple_maps(&m).unwrap();
    assert!(maps.tau.is_identity());
    assert_eq!(maps.t_v, Matrix::scalar(1, &int(2)));
    assert_eq!(maps.f_u, Matrix::zeros(0, 0));
    assert!(maps.witness.is_zero());
}

#[test]
fn certify_failures_are_named() {
    let (s0, s1) = (string(0), string(1));
    let id3 = Matrix::identity(3);
    let none = Matrix::zeros(0, 0);
    for t in [1, 2, -5] {
        let r = certify_isomorphism(&s0, &s1, &id3, &none, &Matrix::scalar(1, &int(t)));
        assert_eq!(r.unwrap_err(), Error::NotCohomologous);
    }
    let not_lie = Matrix::from_i64(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert!(matches!(
        certify_isomorphism(&s1, &s1, &not_lie, &none, &Matrix::identity(1)),
        Err(Error::NotLieMorphism(_))
    ));
    let a = adjoint_normal_form(1);
    assert!(matches!(
        certify_isomorphism(&a, &a, &id3, &Matrix::zeros(1, 1), &id3),
        Err(Error::NotInvertible(_))
    ));
    assert!(matches!(
        certify_isomorphism(&a, &a, &id3, &Matrix::identity(1), &cyclic()),
        Err(Error::NotIntertwiner(_))
    ));
    assert!(matches!(
        certify_isomorphism(&s1, &s1, &id3, &none, &Matrix::zeros(1, 1)),
        Err(Error::NotIntertwiner(_))
    ));
}

#[test]
fn certify_with_nontrivial_primitive() {
    // J and J + δβ on the adjoint representation are related by a nonzero Φ
    let rep = Representation::adjoint(so3());
    let beta = Cochain::from_fn(2, 3, 3, |t| {
        let mut v = vec![int(0); 3];
        v[t[0]] = int(1 + t[1] as i64);
        v
    });
    let shifted = crate::cohomology::delta(&beta, &rep).unwrap();
    let base = Cochain::from_fn(3, 3, 3, |_| vec![int(1), int(0), int(2)]);
    let sum = Cochain::from_vector(
        3,
        3,
        3,
        base.vector().iter().zip(shifted.vector()).map(|(a, b)| a + b).collect::<Vec<Rational>>(),
    )
    .unwrap();
    let l = normal_form_algebra(&Quadruple::new(rep.clone(), 1, base).unwrap()).unwrap();
    let m = normal_form_algebra(&Quadruple::new(rep, 1, sum).unwrap()).unwrap();
    let iso = certify_isomorphism(&l, &m, &Matrix::identity(3), &Matrix::identity(1), &Matrix::identity(3)).unwrap();
    assert!(!iso.big_phi().is_zero());
    let maps = extract_quadruple_maps(&iso).unwrap();
    assert!(maps.tau.is_identity() && maps.t_v.is_identity() && maps.f_u.is_identity());
}

#[test]
fn identity_maps_of_normal_form() {
    let nf = adjoint_normal_form(2);
    let maps = extract_quadruple_maps(&Morphism::identity(Arc::new(nf))).unwrap();
    assert!(maps.tau.is_identity() && maps.f_u.is_identity() && maps.t_v.is_identity());
    assert!(maps.witness.is_zero());
}

#[test]
fn extract_requires_normal_forms() {
    let l = quaternion_example(&Quaternion::zero());
    let r = extract_quadruple_maps(&Morphism::identity(Arc::new(l)));
    assert!(matches!(r, Err(Error::Structural(_))));
}

#[test]
fn cyclic_automorphism_normalized_rotates_imaginary_units() {
    let aut = quaternion_automorphism(&Quaternion::from_i64(1, 2, 3, 5)).unwrap();
    let (_, to_nf) = normal_form(aut.source()).unwrap();
    let conj = compose(&compose(&inverse(&to_nf).unwrap(), &aut).unwrap(), &to_nf).unwrap();
    assert!(verify_morphism(&conj).is_pass());
    let maps = extract_quadruple_maps(&conj).unwrap();
    assert_eq!(maps.tau, cyclic());
    assert_eq!(maps.t_v, cyclic());
    assert!(maps.f_u.is_identity());
}
