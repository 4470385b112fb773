//! The normal-form algebra and the worked examples built on it.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{antisymmetrize2, antisymmetrize3, verify, TwoTermAlgebra};
use crate::builders::catalog::killing_form;
use crate::builders::quaternion::Quaternion;
use crate::classify::Quadruple;
use crate::cohomology::Cochain;
use crate::error::Error;
use crate::exactla::{int, vec_zero, Matrix, Rational, Tensor};
use crate::lie::{LieAlgebra, Representation};
use crate::morphism::Morphism;

/// `L^{g,U,ρ,J}`: `L0 = g ⊕ U`, `L1 = V ⊕ U` (in that basis order), `d`
/// the projection onto `U`, brackets from `g` and `ρ`, Jacobiator `J` on the
/// `g` components.
pub fn normal_form_algebra(q: &Quadruple) -> Result<TwoTermAlgebra, Error> {
    q.check()?;
    let algebra = assemble_normal_form(q);
    let report = verify(&algebra);
    if !report.is_pass() {
        return Err(Error::Internal(format!("normal form fails verification:\n{report}")));
    }
    Ok(algebra)
}

pub(crate) fn assemble_normal_form(q: &Quadruple) -> TwoTermAlgebra {
    let (dg, du, dv) = (q.g().dim(), q.dim_u(), q.dim_v());
    let (n0, n1) = (dg + du, dv + du);
    let mut d = Matrix::zeros(n0, n1);
    for i in 0..du {
        d[(dg + i, dv + i)] = int(1);
    }
    let sc = q.g().structure_constants();
    let mut b00 = Tensor::zeros(&[n0, n0, n0]);
    for a in 0..dg {
        for b in 0..dg {
            b00.fiber_mut(&[a, b])[..dg].clone_from_slice(sc.fiber(&[a, b]));
        }
    }
    let mut b01 = Tensor::zeros(&[n0, n1, n1]);
    for a in 0..dg {
        let rho = q.rep().rho(a);
        for v in 0..dv {
            let out = b01.fiber_mut(&[a, v]);
            for w in 0..dv {
                out[w] = rho[(w, v)].clone();
            }
        }
    }
    let j = q.jtilde();
    let jac = antisymmetrize3(n0, n1, |a, b, c| {
        let mut out = vec_zero(n1);
        if c < dg {
            out[..dv].clone_from_slice(j.value(&[a, b, c]));
        }
        out
    });
    TwoTermAlgebra::new(d, b00, b01, jac).expect("shapes match by construction")
}

fn imaginary_product(p: usize, q: usize) -> Vec<Rational> {
    if p == 0 || q == 0 {
        return vec_zero(4);
    }
    (&Quaternion::unit(p) * &Quaternion::unit(q)).im().coeffs.to_vec()
}

/// `ℍ ⊕ ℍ` with `d = Re`, brackets `Im(Im x · Im y)` in both degrees and
/// `J(i, j, k) = Im v`.
pub fn quaternion_example(v: &Quaternion) -> TwoTermAlgebra {
    let mut d = Matrix::zeros(4, 4);
    d[(0, 0)] = int(1);
    let mut b00 = Tensor::zeros(&[4, 4, 4]);
    for p in 0..4 {
        for q in 0..4 {
            b00.fiber_mut(&[p, q]).clone_from_slice(&imaginary_product(p, q));
        }
    }
    let b01 = b00.clone();
    let im_v = v.im().coeffs.to_vec();
    let jac = antisymmetrize3(4, 4, |a, b, c| {
        if (a, b, c) == (1, 2, 3) {
            im_v.clone()
        } else {
            vec_zero(4)
        }
    });
    TwoTermAlgebra::new(d, b00, b01, jac).expect("quaternion shapes are fixed")
}

/// The automorphism of [`quaternion_example`] rotating `i → j → k → i` in
/// both degrees, with `Φ(i∧j) = Re(v(i-j))k` and cyclic.
pub fn quaternion_automorphism(v: &Quaternion) -> Result<Morphism, Error> {
    let l = Arc::new(quaternion_example(v));
    let mut p = Matrix::zeros(4, 4);
    p[(0, 0)] = int(1);
    p[(2, 1)] = int(1);
    p[(3, 2)] = int(1);
    p[(1, 3)] = int(1);
    let coefficient = |a: usize, b: usize| (v * &Quaternion::unit(a).sub(&Quaternion::unit(b))).re();
    // (a, b, out): Φ(e_a ∧ e_b) = Re(v(e_a - e_b)) e_out
    let table = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];
    let big_phi = antisymmetrize2(4, 4, |x, y| {
        let mut out = vec_zero(4);
        for &(a, b, o) in &table {
            if (a, b) == (x, y) {
                out[o] = coefficient(a, b);
            } else if (b, a) == (x, y) {
                out[o] = -coefficient(a, b);
            }
        }
        out
    });
    Morphism::new(l.clone(), l, p.clone(), p, big_phi)
}

/// `L^{g,0,ℝ,J}` with `J(x, y, z) = k·K(x, [y, z])`, `K` the Killing form.
pub fn skeletal_string(g: &LieAlgebra, k: &Rational) -> Result<TwoTermAlgebra, Error> {
    let killing = killing_form(g);
    let n = g.dim();
    let sc = g.structure_constants();
    let jtilde = Cochain::from_fn(3, n, 1, |t| {
        let yz = sc.fiber(&[t[1], t[2]]);
        let pairing: Rational = (0..n)
            .filter(|&m| !yz[m].is_zero())
            .map(|m| &killing[(t[0], m)] * &yz[m])
            .sum();
        vec![pairing * k]
    });
    let q = Quadruple::new(Representation::trivial(g.clone(), 1), 0, jtilde)?;
    normal_form_algebra(&q)
}

#[cfg(test)]
/// Nonzero `J(e_a, e_b, e_c)` over increasing triples.
pub(crate) fn jacobiator_table(l: &TwoTermAlgebra) -> Vec<(Vec<usize>, Vec<Rational>)> {
    crate::algebra::combinations(l.n0(), 3)
        .into_iter()
        .map(|t| {
            let v = l.jac().fiber(&t).to_vec();
            (t, v)
        })
        .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
        .collect()
}
