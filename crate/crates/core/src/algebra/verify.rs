//! Checks the defining identities of a 2-term L∞-algebra.
//!
//! Every structure map is multilinear, so checking each identity on basis
//! tuples is equivalent to checking it everywhere. Tuples are visited in
//! lexicographic order and the first failing tuple is reported.

use std::fmt;

use super::{combinations, shuffles, TwoTermAlgebra};
use crate::exactla::{int, unit_vector, vec_add_scaled, vec_is_zero, vec_sub, vec_zero, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquationStatus {
    Pass,
    Fail { tuple: Vec<usize>, discrepancy: Vec<Rational> },
    /// Skipped because the structural check failed.
    NotChecked,
}

impl EquationStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, EquationStatus::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Structural problem found before any identity was checked.
    pub structure: Option<String>,
    pub checks: Vec<(&'static str, EquationStatus)>,
}

impl VerificationReport {
    pub fn is_pass(&self) -> bool {
        self.structure.is_none() && self.checks.iter().all(|(_, s)| s.is_pass())
    }

    pub fn status(&self, name: &str) -> Option<&EquationStatus> {
        self.checks.iter().find(|(n, _)| *n == name).map(|(_, s)| s)
    }

    /// Name of the first failing check.
    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks
            .iter()
            .find(|(_, s)| matches!(s, EquationStatus::Fail { .. }))
            .map(|(n, _)| *n)
    }

    pub(crate) fn from_checks(checks: Vec<(&'static str, EquationStatus)>) -> Self {
        Self { structure: None, checks }
    }

    pub(crate) fn structural(msg: String, names: &[&'static str]) -> Self {
        Self {
            structure: Some(msg),
            checks: names.iter().map(|n| (*n, EquationStatus::NotChecked)).collect(),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.structure {
            None => writeln!(f, "structure: pass")?,
            Some(msg) => writeln!(f, "structure: FAIL {msg}")?,
        }
        for (name, status) in &self.checks {
            match status {
                EquationStatus::Pass => writeln!(f, "{name}: pass")?,
                EquationStatus::NotChecked => writeln!(f, "{name}: not checked")?,
                EquationStatus::Fail { tuple, discrepancy } => {
                    let t: Vec<String> = tuple.iter().map(|x| x.to_string()).collect();
                    let d: Vec<String> = discrepancy.iter().map(|x| x.to_string()).collect();
                    writeln!(f, "{name}: FAIL at ({}) discrepancy [{}]", t.join(","), d.join(", "))?
                }
            }
        }
        Ok(())
    }
}

pub const D_EQUIVARIANCE: &str = "d_equivariance";
pub const D_SYMMETRY: &str = "d_symmetry";
pub const JACOBI_HOMOTOPY: &str = "jacobi_homotopy";
pub const JACOBI_HOMOTOPY_MIXED: &str = "jacobi_homotopy_mixed";
pub const JACOBIATOR_COHERENCE: &str = "jacobiator_coherence";

const CHECK_NAMES: [&str; 5] =
    [D_EQUIVARIANCE, D_SYMMETRY, JACOBI_HOMOTOPY, JACOBI_HOMOTOPY_MIXED, JACOBIATOR_COHERENCE];

/// First tuple whose discrepancy is nonzero.
pub(crate) fn first_failure<I>(tuples: I, mut discrepancy: impl FnMut(&[usize]) -> Vec<Rational>) -> EquationStatus
where
    I: IntoIterator<Item = Vec<usize>>,
{
    for t in tuples {
        let disc = discrepancy(&t);
        if !vec_is_zero(&disc) {
            return EquationStatus::Fail { tuple: t, discrepancy: disc };
        }
    }
    EquationStatus::Pass
}

pub(crate) fn pairs(a: usize, b: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..a).flat_map(move |i| (0..b).map(move |j| vec![i, j]))
}

/// Runs the structural check, then all five identities.
pub fn verify(l: &TwoTermAlgebra) -> VerificationReport {
    if let Err(e) = l.check_structure() {
        return VerificationReport::structural(e.to_string(), &CHECK_NAMES);
    }
    let (n0, n1) = (l.n0(), l.n1());
    let d = l.d();

    // d([x, v]) = [x, d v]
    let equivariance = first_failure(pairs(n0, n1), |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = l.differential(l.b01().fiber(&[i, j]));
        let rhs = l.bracket00(&unit_vector(n0, i), &d.column(j));
        vec_sub(&lhs, &rhs)
    });

    // [d u, v] = [u, d v], i.e. [d u, v] + [d v, u] = 0
    let symmetry = first_failure(pairs(n1, n1), |t| {
        let (u, v) = (t[0], t[1]);
        let a = l.bracket01(&d.column(u), &unit_vector(n1, v));
        let b = l.bracket01(&d.column(v), &unit_vector(n1, u));
        a.iter().zip(&b).map(|(p, q)| p + q).collect()
    });

    // d J(x,y,z) = [x,[y,z]] - [[x,y],z] - [y,[x,z]]
    let jacobi = first_failure(combinations(n0, 3), |t| {
        let (x, y, z) = (unit_vector(n0, t[0]), unit_vector(n0, t[1]), unit_vector(n0, t[2]));
        let lhs = l.differential(l.jac().fiber(&[t[0], t[1], t[2]]));
        let rhs = jacobi_defect(l, &x, &y, &z);
        vec_sub(&lhs, &rhs)
    });

    // J(d v, y, z) = [v,[y,z]] - [[v,y],z] - [y,[v,z]]
    let mixed = first_failure(
        (0..n1).flat_map(|v| (0..n0).flat_map(move |y| (y + 1..n0).map(move |z| vec![v, y, z]))),
        |t| {
            let (v, y, z) = (unit_vector(n1, t[0]), unit_vector(n0, t[1]), unit_vector(n0, t[2]));
            let lhs = l.jacobiator(&d.column(t[0]), &y, &z);
            let rhs = mixed_jacobi_defect(l, &v, &y, &z);
            vec_sub(&lhs, &rhs)
        },
    );

    let coherence = first_failure(combinations(n0, 4), |t| coherence_defect(l, t));

    VerificationReport::from_checks(vec![
        (D_EQUIVARIANCE, equivariance),
        (D_SYMMETRY, symmetry),
        (JACOBI_HOMOTOPY, jacobi),
        (JACOBI_HOMOTOPY_MIXED, mixed),
        (JACOBIATOR_COHERENCE, coherence),
    ])
}

/// `[x,[y,z]] - [[x,y],z] - [y,[x,z]]` on `L0`.
pub(crate) fn jacobi_defect(l: &TwoTermAlgebra, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
    let a = l.bracket00(x, &l.bracket00(y, z));
    let b = l.bracket00(&l.bracket00(x, y), z);
    let c = l.bracket00(y, &l.bracket00(x, z));
    a.iter().zip(&b).zip(&c).map(|((p, q), r)| p - q - r).collect()
}

/// `[v,[y,z]] - [[v,y],z] - [y,[v,z]]` for `v ∈ L1`, written with the
/// stored `[L0, L1]` bracket and `[v, w] = -[w, v]`.
pub(crate) fn mixed_jacobi_defect(l: &TwoTermAlgebra, v: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
    let a = l.bracket01(&l.bracket00(y, z), v);
    let b = l.bracket01(z, &l.bracket01(y, v));
    let c = l.bracket01(y, &l.bracket01(z, v));
    a.iter().zip(&b).zip(&c).map(|((p, q), r)| -p - q + r).collect()
}

/// Left side of the Jacobiator coherence identity on basis vectors `t`.
fn coherence_defect(l: &TwoTermAlgebra, t: &[usize]) -> Vec<Rational> {
    let n0 = l.n0();
    let mut out = vec_zero(l.n1());
    for s in shuffles(1, 3).iter() {
        let x = t[s.perm[0]];
        let j = l.jac().fiber(&[t[s.perm[1]], t[s.perm[2]], t[s.perm[3]]]);
        let term = l.bracket01_basis(x, j);
        vec_add_scaled(&mut out, &int(s.sign as i64), &term);
    }
    for s in shuffles(2, 2).iter() {
        let br = l.b00().fiber(&[t[s.perm[0]], t[s.perm[1]]]);
        let mut term = vec_zero(l.n1());
        for k in 0..n0 {
            vec_add_scaled(&mut term, &br[k], l.jac().fiber(&[k, t[s.perm[2]], t[s.perm[3]]]));
        }
        vec_add_scaled(&mut out, &int(-(s.sign as i64)), &term);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TwoTermAlgebra;
    use crate::exactla::{int, Matrix, Tensor};

    #[test]
    fn zero_algebras_pass() {
        for (a, b) in [(0, 0), (3, 2), (5, 5)] {
            assert!(verify(&TwoTermAlgebra::zero(a, b)).is_pass());
        }
    }

    #[test]
    fn broken_jacobi_detected() {
        // [e0,e1] = e1, [e1,e2] = e0 on a 3-dim L0 with L1 = 0 fails Jacobi
        // since there is no Jacobiator to absorb it.
        let mut b00 = Tensor::zeros(&[3, 3, 3]);
        b00.set(&[0, 1, 1], int(1));
        b00.set(&[1, 0, 1], int(-1));
        b00.set(&[1, 2, 0], int(1));
        b00.set(&[2, 1, 0], int(-1));
        let l = TwoTermAlgebra::new(Matrix::zeros(3, 0), b00, Tensor::zeros(&[3, 0, 0]), Tensor::zeros(&[3, 3, 3, 0])).unwrap();
        let r = verify(&l);
        assert!(!r.is_pass());
        assert_eq!(r.first_failure(), Some(JACOBI_HOMOTOPY));
    }

    #[test]
    fn structural_failure_skips_equations() {
        let mut b00 = Tensor::zeros(&[1, 1, 1]);
        b00.set(&[0, 0, 0], int(1));
        let l = TwoTermAlgebra::new(Matrix::zeros(1, 0), b00, Tensor::zeros(&[1, 0, 0]), Tensor::zeros(&[1, 1, 1, 0])).unwrap();
        let r = verify(&l);
        assert_eq!(r.structure.as_deref(), Some("b00 antisymmetry violated at (0,0)"));
        assert!(r.checks.iter().all(|(_, s)| *s == EquationStatus::NotChecked));
    }

    fn perturbed_quaternion(out: usize) -> TwoTermAlgebra {
        let l = crate::builders::quaternion_example(&crate::builders::Quaternion::from_i64(1, 2, 3, 5));
        let mut b00 = l.b00().clone();
        *b00.get_mut(&[1, 2, out]) += int(1);
        *b00.get_mut(&[2, 1, out]) -= int(1);
        TwoTermAlgebra::new(l.d().clone(), b00, l.b01().clone(), l.jac().clone()).unwrap()
    }

    #[test]
    fn quaternion_examples_pass() {
        for v in [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [1, 2, 3, 5]] {
            let q = crate::builders::Quaternion::from_i64(v[0], v[1], v[2], v[3]);
            assert!(verify(&crate::builders::quaternion_example(&q)).is_pass());
        }
    }

    #[test]
    fn real_component_in_bracket_stays_valid() {
        // the real unit is central and every 2-cochain on Im H with trivial
        // coefficients is a cocycle, so this perturbation is harmless
        assert!(verify(&perturbed_quaternion(0)).is_pass());
    }

    #[test]
    fn imaginary_perturbation_breaks_jacobi_homotopy() {
        let r = verify(&perturbed_quaternion(1));
        assert_eq!(r.first_failure(), Some(JACOBI_HOMOTOPY));
        assert!(matches!(r.status(JACOBI_HOMOTOPY), Some(EquationStatus::Fail { .. })));
    }

    #[test]
    fn coherence_vanishes_on_repeated_arguments() {
        let l = crate::builders::quaternion_example(&crate::builders::Quaternion::from_i64(1, 2, 3, 5));
        for t in [[1, 1, 2, 3], [0, 2, 2, 3], [1, 2, 3, 3], [0, 1, 0, 2]] {
            assert!(vec_is_zero(&coherence_defect(&l, &t)));
        }
    }
}
