//! Morphisms `(φ, Φ)` of 2-term L∞-algebras.
//!
//! `φ` is a degree-0 chain map given by `phi0: L0 → L0'` and
//! `phi1: L1 → L1'`; `Φ: Λ²L0 → L1'` is stored as a tensor
//! `[n0][n0][n1']` (antisymmetric in the two `L0` slots).

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::verify::{first_failure, pairs};
use crate::algebra::{combinations, shuffles, TwoTermAlgebra, VerificationReport};
use crate::error::Error;
use crate::exactla::{int, invert, vec_add_scaled, vec_sub, vec_zero, Matrix, Rational, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<TwoTermAlgebra>,
    target: Arc<TwoTermAlgebra>,
    phi0: Matrix,
    phi1: Matrix,
    big_phi: Tensor,
}

pub const CHAIN_MAP: &str = "chain_map";
pub const BRACKET_HOMOTOPY: &str = "bracket_homotopy";
pub const MIXED_HOMOTOPY: &str = "mixed_bracket_homotopy";
pub const JACOBIATOR_COMPATIBILITY: &str = "jacobiator_compatibility";

const CHECK_NAMES: [&str; 4] = [CHAIN_MAP, BRACKET_HOMOTOPY, MIXED_HOMOTOPY, JACOBIATOR_COMPATIBILITY];

impl Morphism {
    /// Checks dimensions and antisymmetry of `Φ`.
    pub fn new(
        source: Arc<TwoTermAlgebra>,
        target: Arc<TwoTermAlgebra>,
        phi0: Matrix,
        phi1: Matrix,
        big_phi: Tensor,
    ) -> Result<Self, Error> {
        let (n0, n1) = (source.n0(), source.n1());
        let (m0, m1) = (target.n0(), target.n1());
        if (phi0.rows(), phi0.cols()) != (m0, n0) {
            return Err(Error::DimensionMismatch(format!(
                "phi0 is {}×{}, expected {m0}×{n0}",
                phi0.rows(),
                phi0.cols()
            )));
        }
        if (phi1.rows(), phi1.cols()) != (m1, n1) {
            return Err(Error::DimensionMismatch(format!(
                "phi1 is {}×{}, expected {m1}×{n1}",
                phi1.rows(),
                phi1.cols()
            )));
        }
        if big_phi.shape() != [n0, n0, m1] {
            return Err(Error::DimensionMismatch(format!(
                "Phi has shape {:?}, expected {:?}",
                big_phi.shape(),
                [n0, n0, m1]
            )));
        }
        for i in 0..n0 {
            for j in i..n0 {
                let ok = big_phi
                    .fiber(&[i, j])
                    .iter()
                    .zip(big_phi.fiber(&[j, i]))
                    .all(|(a, b)| (a + b).is_zero());
                if !ok {
                    return Err(Error::Structural(format!("Phi antisymmetry violated at ({i},{j})")));
                }
            }
        }
        Ok(Self { source, target, phi0, phi1, big_phi })
    }

    /// `(id, 0)`.
    pub fn identity(l: Arc<TwoTermAlgebra>) -> Self {
        let (n0, n1) = (l.n0(), l.n1());
        Self {
            source: l.clone(),
            target: l,
            phi0: Matrix::identity(n0),
            phi1: Matrix::identity(n1),
            big_phi: Tensor::zeros(&[n0, n0, n1]),
        }
    }

    pub fn source(&self) -> &Arc<TwoTermAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<TwoTermAlgebra> {
        &self.target
    }

    pub fn phi0(&self) -> &Matrix {
        &self.phi0
    }

    pub fn phi1(&self) -> &Matrix {
        &self.phi1
    }

    pub fn big_phi(&self) -> &Tensor {
        &self.big_phi
    }

    /// `Φ(x ∧ y)` for `x, y ∈ L0`.
    pub fn homotopy(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec_zero(self.target.n1());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    vec_add_scaled(&mut out, &(xi * yj), self.big_phi.fiber(&[i, j]));
                }
            }
        }
        out
    }

    /// `(φ, 0)` and `(id, 0)` style comparison: `φ` is the identity and `Φ = 0`.
    pub fn is_identity(&self) -> bool {
        self.phi0.is_identity() && self.phi1.is_identity() && self.big_phi.is_zero()
    }
}

/// Checks the chain-map condition and the three homotopy identities on all
/// basis tuples.
pub fn verify_morphism(m: &Morphism) -> VerificationReport {
    let (l, lp) = (&*m.source, &*m.target);
    for (side, a) in [("source", l), ("target", lp)] {
        if let Err(e) = a.check_structure() {
            return VerificationReport::structural(format!("{side}: {e}"), &CHECK_NAMES);
        }
    }
    let (n0, n1) = (l.n0(), l.n1());
    let phi0t = m.phi0.transpose();
    let phi1t = m.phi1.transpose();

    // φ d = d' φ
    let commutator = m.phi0.mul(l.d()).sub(&lp.d().mul(&m.phi1));
    let chain = first_failure((0..n1).map(|j| vec![j]), |t| commutator.column(t[0]));

    // [φ e_i, φ e_j]'
    let pulled_b00 = lp.b00().contract_axis(0, &phi0t).contract_axis(1, &phi0t);
    let bracket = first_failure(combinations(n0, 2), |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = lp.differential(m.big_phi.fiber(&[i, j]));
        let rhs = vec_sub(&m.phi0.mul_vec(l.b00().fiber(&[i, j])), pulled_b00.fiber(&[i, j]));
        vec_sub(&lhs, &rhs)
    });

    // Φ(d v, y) = φ[v, y] - [φ v, φ y]', with [v, y] = -[y, v]
    let pulled_b01 = lp.b01().contract_axis(0, &phi0t).contract_axis(1, &phi1t);
    let mixed = first_failure(pairs(n1, n0), |t| {
        let (v, y) = (t[0], t[1]);
        let mut lhs = vec_zero(lp.n1());
        for k in 0..n0 {
            vec_add_scaled(&mut lhs, &l.d()[(k, v)], m.big_phi.fiber(&[k, y]));
        }
        let phi_vy: Vec<Rational> = m.phi1.mul_vec(l.b01().fiber(&[y, v])).iter().map(|x| -x).collect();
        let bracket_img: Vec<Rational> = pulled_b01.fiber(&[y, v]).iter().map(|x| -x).collect();
        vec_sub(&lhs, &vec_sub(&phi_vy, &bracket_img))
    });

    // φ J(x1,x2,x3) - J'(φx1,φx2,φx3) = Σ_{sh(1,2)} ± ([φ x_σ1, Φ(x_σ2, x_σ3)]' + Φ(x_σ1, [x_σ2, x_σ3]))
    let pulled_jac = lp
        .jac()
        .contract_axis(0, &phi0t)
        .contract_axis(1, &phi0t)
        .contract_axis(2, &phi0t);
    let phi_left = lp.b01().contract_axis(0, &phi0t);
    let sh = shuffles(1, 2);
    let jacobiator = first_failure(combinations(n0, 3), |t| {
        let lhs = vec_sub(&m.phi1.mul_vec(l.jac().fiber(&[t[0], t[1], t[2]])), pulled_jac.fiber(&[t[0], t[1], t[2]]));
        let mut rhs = vec_zero(lp.n1());
        for s in sh.iter() {
            let (a, b, c) = (t[s.perm[0]], t[s.perm[1]], t[s.perm[2]]);
            let sign = int(s.sign as i64);
            let w = m.big_phi.fiber(&[b, c]);
            let mut term = vec_zero(lp.n1());
            for (jj, wj) in w.iter().enumerate() {
                vec_add_scaled(&mut term, wj, phi_left.fiber(&[a, jj]));
            }
            let br = l.b00().fiber(&[b, c]);
            for (k, ck) in br.iter().enumerate() {
                vec_add_scaled(&mut term, ck, m.big_phi.fiber(&[a, k]));
            }
            vec_add_scaled(&mut rhs, &sign, &term);
        }
        vec_sub(&lhs, &rhs)
    });

    VerificationReport::from_checks(vec![
        (CHAIN_MAP, chain),
        (BRACKET_HOMOTOPY, bracket),
        (MIXED_HOMOTOPY, mixed),
        (JACOBIATOR_COMPATIBILITY, jacobiator),
    ])
}

/// Composite "apply `first`, then `second`":
/// `(φ₂ ∘ φ₁, Ψ)` with `Ψ(x, y) = Φ₂(φ₁x, φ₁y) + φ₂(Φ₁(x, y))`.
pub fn compose(first: &Morphism, second: &Morphism) -> Result<Morphism, Error> {
    if first.target.n0() != second.source.n0() || first.target.n1() != second.source.n1() {
        return Err(Error::DimensionMismatch("composable morphisms need matching middle algebra".into()));
    }
    if first.target != second.source {
        return Err(Error::DimensionMismatch(
            "target of the first morphism differs from source of the second".into(),
        ));
    }
    let p0t = first.phi0.transpose();
    let pulled = second.big_phi.contract_axis(0, &p0t).contract_axis(1, &p0t);
    let pushed = first.big_phi.contract_axis(2, &second.phi1);
    Ok(Morphism {
        source: first.source.clone(),
        target: second.target.clone(),
        phi0: second.phi0.mul(&first.phi0),
        phi1: second.phi1.mul(&first.phi1),
        big_phi: pulled.add(&pushed),
    })
}

/// `(φ⁻¹, Φ')` with `Φ'(x, y) = -φ⁻¹ Φ(φ⁻¹x, φ⁻¹y)`.
pub fn inverse(m: &Morphism) -> Result<Morphism, Error> {
    let inv0 = invert(&m.phi0).ok_or_else(|| Error::NotInvertible("phi0".into()))?;
    let inv1 = invert(&m.phi1).ok_or_else(|| Error::NotInvertible("phi1".into()))?;
    let big_phi = m.big_phi.change_basis(&inv0, &inv1).scale(&int(-1));
    Ok(Morphism {
        source: m.target.clone(),
        target: m.source.clone(),
        phi0: inv0,
        phi1: inv1,
        big_phi,
    })
}

/// Both components of `φ` are linear isomorphisms.
pub fn is_isomorphism(m: &Morphism) -> bool {
    invert(&m.phi0).is_some() && invert(&m.phi1).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    #[test]
    fn identity_passes_and_is_iso() {
        let l = Arc::new(TwoTermAlgebra::zero(2, 3));
        let id = Morphism::identity(l);
        assert!(verify_morphism(&id).is_pass());
        assert!(is_isomorphism(&id));
        assert_eq!(inverse(&id).unwrap(), id);
    }

    #[test]
    fn singular_phi_is_not_iso() {
        let l = Arc::new(TwoTermAlgebra::zero(2, 1));
        let m = Morphism::new(l.clone(), l, Matrix::zeros(2, 2), Matrix::identity(1), Tensor::zeros(&[2, 2, 1])).unwrap();
        assert!(!is_isomorphism(&m));
        assert_eq!(inverse(&m), Err(Error::NotInvertible("phi0".into())));
    }

    #[test]
    fn inclusion_is_not_iso() {
        let small = Arc::new(TwoTermAlgebra::zero(1, 0));
        let big = Arc::new(TwoTermAlgebra::zero(2, 0));
        let m = Morphism::new(small, big, Matrix::from_i64(&[&[1], &[0]]), Matrix::zeros(0, 0), Tensor::zeros(&[1, 1, 0])).unwrap();
        assert!(verify_morphism(&m).is_pass());
        assert!(!is_isomorphism(&m));
    }

    #[test]
    fn rejects_non_antisymmetric_phi() {
        let l = Arc::new(TwoTermAlgebra::zero(2, 1));
        let mut p = Tensor::zeros(&[2, 2, 1]);
        p.set(&[0, 1, 0], int(1));
        let r = Morphism::new(l.clone(), l, Matrix::identity(2), Matrix::identity(1), p);
        assert!(matches!(r, Err(Error::Structural(_))));
    }
}
