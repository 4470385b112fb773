use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{antisymmetrize3, verify, TwoTermAlgebra};
use crate::builders::{assemble_normal_form, normal_form_algebra};
use crate::classify::decompose::{decompose, Decomposition};
use crate::classify::Quadruple;
use crate::cohomology::Cochain;
use crate::error::Error;
use crate::exactla::{int, invert, vec_add_scaled, vec_zero, Matrix, Rational, Tensor};
use crate::lie::{LieAlgebra, Representation};
use crate::morphism::{is_isomorphism, verify_morphism, Morphism};

/// Reads off `(g, U, ρ, J)` from a decomposition:
/// `[y,z]_g = [y,z]^g`, `ρ(x)v = [x,v]^{ker d}` and
/// `J(x1,x2,x3) = J^{ker d} - Σ_{sh(1,2)} ± [x_σ1, h([x_σ2, x_σ3])]^{ker d}`.
pub fn extract_triple(l: &TwoTermAlgebra, dec: &Decomposition) -> Result<Quadruple, Error> {
    if dec.g_basis().ambient_dim() != l.n0() || dec.kerd_basis().ambient_dim() != l.n1() {
        return Err(Error::DimensionMismatch("decomposition belongs to a different algebra".into()));
    }
    let (dg, dv) = (dec.dim_g(), dec.dim_v());
    let g = dec.g_basis().to_matrix();
    let k = dec.kerd_basis().to_matrix();
    let to_g = dec.g_projection();
    let to_ker = dec.kerd_projection();

    let sc = l.b00().change_basis(&g, &to_g);
    let lie = LieAlgebra::new_unchecked(sc)?;

    let gt = g.transpose();
    // [g_a, w]^{ker d} for w ∈ L1
    let act = l.b01().contract_axis(0, &gt).contract_axis(2, &to_ker);
    let on_kernel = act.contract_axis(1, &k.transpose());
    let rho = (0..dg)
        .map(|a| {
            let mut m = Matrix::zeros(dv, dv);
            for c in 0..dv {
                for (w, x) in on_kernel.fiber(&[a, c]).iter().enumerate() {
                    m[(w, c)] = x.clone();
                }
            }
            m
        })
        .collect();
    let rep = Representation::new_unchecked(lie, dv, rho)?;

    let jac_g = l.jac().change_basis(&g, &to_ker);
    let lifted = l.b00().change_basis(&g, dec.h());
    let n1 = l.n1();
    let correction = |a: usize, b: usize, c: usize| {
        let mut out = vec_zero(dv);
        let w = lifted.fiber(&[b, c]);
        for j in 0..n1 {
            if !w[j].is_zero() {
                vec_add_scaled(&mut out, &w[j], act.fiber(&[a, j]));
            }
        }
        out
    };
    let jtilde = Cochain::from_fn(3, dg, dv, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let mut out = jac_g.fiber(&[a, b, c]).to_vec();
        let sum = [(a, b, c, 1), (b, a, c, -1), (c, a, b, 1)];
        for (x, y, z, sign) in sum {
            let term = correction(x, y, z);
            let s = int(-sign);
            vec_add_scaled(&mut out, &s, &term);
        }
        out
    });
    let q = Quadruple::new_unchecked(rep, dec.dim_u(), jtilde);
    q.check()
        .map_err(|e| Error::Internal(format!("extracted data is inconsistent: {e}")))?;
    Ok(q)
}

/// Induces the structure of `L` on the same spaces along the invertible
/// `φ = (phi0, phi1)` with homotopy `Φ`, so that `(φ, Φ)` becomes an
/// isomorphism `L → L'`.
pub fn transport(
    l: &TwoTermAlgebra,
    phi0: &Matrix,
    phi1: &Matrix,
    big_phi: &Tensor,
) -> Result<(TwoTermAlgebra, Morphism), Error> {
    let (n0, n1) = (l.n0(), l.n1());
    if (phi0.rows(), phi0.cols()) != (n0, n0) || (phi1.rows(), phi1.cols()) != (n1, n1) {
        return Err(Error::DimensionMismatch(format!(
            "transport needs square maps of sizes {n0} and {n1}"
        )));
    }
    if big_phi.shape() != [n0, n0, n1] {
        return Err(Error::DimensionMismatch(format!(
            "Phi has shape {:?}, expected {:?}",
            big_phi.shape(),
            [n0, n0, n1]
        )));
    }
    let inv0 = invert(phi0).ok_or_else(|| Error::Singular("phi0".into()))?;
    let inv1 = invert(phi1).ok_or_else(|| Error::Singular("phi1".into()))?;
    let report = verify(l);
    if !report.is_pass() {
        return Err(Error::VerificationFailed(format!("input algebra:\n{report}")));
    }
    let inv0t = inv0.transpose();

    let d_new = phi0.mul(l.d()).mul(&inv1);
    let phi_new_args = big_phi.contract_axis(0, &inv0t).contract_axis(1, &inv0t);
    let b00_new = l.b00().change_basis(&inv0, phi0).sub(&phi_new_args.contract_axis(2, &d_new));
    let b01_new = l
        .b01()
        .contract_axis(0, &inv0t)
        .contract_axis(1, &inv1.transpose())
        .contract_axis(2, phi1)
        .sub(&big_phi.contract_axis(0, &inv0t).contract_axis(1, &l.d().mul(&inv1).transpose()));

    // J' evaluated on φ(e_a), φ(e_b), φ(e_c), then pulled back along φ⁻¹
    let act = b01_new.contract_axis(0, &phi0.transpose());
    let pushed_jac = l.jac().contract_axis(3, phi1);
    let b00 = l.b00();
    let term = |a: usize, b: usize, c: usize| {
        let mut out = vec_zero(n1);
        let w = big_phi.fiber(&[b, c]);
        for j in 0..n1 {
            if !w[j].is_zero() {
                vec_add_scaled(&mut out, &w[j], act.fiber(&[a, j]));
            }
        }
        let bc = b00.fiber(&[b, c]);
        for m in 0..n0 {
            if !bc[m].is_zero() {
                vec_add_scaled(&mut out, &bc[m], big_phi.fiber(&[a, m]));
            }
        }
        out
    };
    let jac_on_image = antisymmetrize3(n0, n1, |a, b, c| {
        let mut out = pushed_jac.fiber(&[a, b, c]).to_vec();
        for (x, y, z, sign) in [(a, b, c, -1), (b, a, c, 1), (c, a, b, -1)] {
            vec_add_scaled(&mut out, &int(sign), &term(x, y, z));
        }
        out
    });
    let jac_new = jac_on_image
        .contract_axis(0, &inv0t)
        .contract_axis(1, &inv0t)
        .contract_axis(2, &inv0t);

    let target = TwoTermAlgebra::new(d_new, b00_new, b01_new, jac_new)?;
    let report = verify(&target);
    if !report.is_pass() {
        return Err(Error::Internal(format!("transported algebra fails verification:\n{report}")));
    }
    let m = Morphism::new(Arc::new(l.clone()), Arc::new(target.clone()), phi0.clone(), phi1.clone(), big_phi.clone())?;
    let report = verify_morphism(&m);
    if !report.is_pass() {
        return Err(Error::Internal(format!("transport morphism fails verification:\n{report}")));
    }
    Ok((target, m))
}

/// Normal form with the extracted quadruple, for callers that need both.
pub(crate) fn normalize(l: &TwoTermAlgebra) -> Result<(Quadruple, Morphism), Error> {
    let report = verify(l);
    if !report.is_pass() {
        return Err(Error::VerificationFailed(format!("input algebra:\n{report}")));
    }
    let dec = decompose(l);
    let q = extract_triple(l, &dec)?;
    let target = assemble_normal_form(&q);
    let (n0, n1) = (l.n0(), l.n1());
    let (dg, dv) = (dec.dim_g(), dec.dim_v());

    let phi0 = dec.degree0_coords().clone();
    let phi1 = dec.f().mul(dec.degree1_coords());

    let h = dec.h();
    let g_part = dec.g_basis().to_matrix().mul(&dec.g_projection());
    let to_ker = dec.kerd_projection();
    let to_imd = dec.imd_projection();
    let lifts: Vec<Vec<Rational>> = h.columns();
    let g_parts: Vec<Vec<Rational>> = g_part.columns();
    let mut big_phi = Tensor::zeros(&[n0, n0, n1]);
    for a in 0..n0 {
        for b in 0..n0 {
            // [e_a, h(e_b)] + [h(e_a), e_b^g]
            let mut w = l.bracket01_basis(a, &lifts[b]);
            let back = l.bracket01(&g_parts[b], &lifts[a]);
            vec_add_scaled(&mut w, &int(-1), &back);
            let out = big_phi.fiber_mut(&[a, b]);
            out[..dv].clone_from_slice(&to_ker.mul_vec(&w));
            out[dv..].clone_from_slice(&to_imd.mul_vec(l.b00().fiber(&[a, b])));
        }
    }
    debug_assert_eq!(dg + dec.dim_u(), n0);
    let m = Morphism::new(Arc::new(l.clone()), Arc::new(target), phi0, phi1, big_phi)?;
    let report = verify_morphism(&m);
    if !report.is_pass() || !is_isomorphism(&m) {
        return Err(Error::Internal(format!("normalizing morphism fails verification:\n{report}")));
    }
    Ok((q, m))
}

/// The normal form `L^{g, im d, ρ, J}` of `L` and the isomorphism from `L`
/// onto it.
pub fn normal_form(l: &TwoTermAlgebra) -> Result<(TwoTermAlgebra, Morphism), Error> {
    let (_, m) = normalize(l)?;
    Ok(((**m.target()).clone(), m))
}

/// The normal form with `U` dropped; `d = 0`.
pub fn skeleton(l: &TwoTermAlgebra) -> Result<TwoTermAlgebra, Error> {
    let (q, _) = normalize(l)?;
    normal_form_algebra(&q.with_dim_u(0))
}

/// True when `L` equals its own normal form.
pub fn is_normal_form(l: &TwoTermAlgebra) -> bool {
    let dec = decompose(l);
    match extract_triple(l, &dec) {
        Ok(q) => assemble_normal_form(&q) == *l,
        Err(_) => false,
    }
}
