
use crate::algebra::TwoTermAlgebra;
use crate::classify::decompose::decompose;
use crate::classify::normal::{extract_triple, is_normal_form, normalize};
use crate::classify::Quadruple;
use crate::cohomology::{cohomologous, delta, Cochain};
use crate::error::Error;
use crate::exactla::{invert, Matrix, Tensor};
use crate::lie::Representation;
use crate::morphism::{compose, inverse, is_isomorphism, verify_morphism, Morphism};

/// The data `(τ, f_U, t_V, Φ̃)` read off an isomorphism of normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrupleMaps {
    pub tau: Matrix,
    pub f_u: Matrix,
    pub t_v: Matrix,
    pub witness: Cochain,
}

fn require_invertible(m: &Matrix, name: &str) -> Result<(), Error> {
    match invert(m) {
        Some(_) => Ok(()),
        None => Err(Error::NotInvertible(name.into())),
    }
}

fn check_maps(
    ql: &Quadruple,
    qm: &Quadruple,
    chi: &Matrix,
    f_u: &Matrix,
    t_v: &Matrix,
) -> Result<Cochain, Error> {
    let (gl, gm) = (ql.g(), qm.g());
    if (chi.rows(), chi.cols()) != (gm.dim(), gl.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "chi is {}×{}, expected {}×{}",
            chi.rows(),
            chi.cols(),
            gm.dim(),
            gl.dim()
        )));
    }
    gl.check_morphism(gm, chi)?;
    if !chi.is_square() || invert(chi).is_none() {
        return Err(Error::NotLieMorphism("chi is not invertible".into()));
    }
    if (f_u.rows(), f_u.cols()) != (qm.dim_u(), ql.dim_u()) {
        return Err(Error::NotInvertible(format!(
            "fU is {}×{} but dim U = {} and dim U' = {}",
            f_u.rows(),
            f_u.cols(),
            ql.dim_u(),
            qm.dim_u()
        )));
    }
    require_invertible(f_u, "fU")?;
    ql.rep().check_intertwiner(qm.rep(), chi, t_v)?;
    if !t_v.is_square() || invert(t_v).is_none() {
        return Err(Error::NotIntertwiner("tV is not invertible".into()));
    }
    cohomologous(ql.jtilde(), ql.rep(), qm.jtilde(), qm.rep(), chi, t_v)?.ok_or(Error::NotCohomologous)
}

/// Builds the isomorphism `L → M` determined by a Lie isomorphism `chi`, a
/// linear isomorphism `f_u` of the `U` parts and an intertwiner `t_v`, all
/// given in the normal-form bases of `L` and `M`.
pub fn certify_isomorphism(
    l: &TwoTermAlgebra,
    m: &TwoTermAlgebra,
    chi: &Matrix,
    f_u: &Matrix,
    t_v: &Matrix,
) -> Result<Morphism, Error> {
    let (ql, to_l) = normalize(l)?;
    let (qm, to_m) = normalize(m)?;
    let primitive = check_maps(&ql, &qm, chi, f_u, t_v)?;

    let (ln, mn) = (to_l.target().clone(), to_m.target().clone());
    let (dg, dv, dv_m) = (ql.g().dim(), ql.dim_v(), qm.dim_v());
    let (n0, n1_m) = (ln.n0(), mn.n1());
    let phi0 = chi.block_diag(f_u);
    let phi1 = t_v.block_diag(f_u);
    let mut big_phi = Tensor::zeros(&[n0, n0, n1_m]);
    for a in 0..dg {
        for b in 0..dg {
            if a != b {
                big_phi.fiber_mut(&[a, b])[..dv_m].clone_from_slice(&primitive.evaluate(&[a, b]));
            }
        }
    }
    debug_assert_eq!(ln.n1(), dv + ql.dim_u());
    let core = Morphism::new(ln, mn, phi0, phi1, big_phi)?;
    let report = verify_morphism(&core);
    if !report.is_pass() {
        return Err(Error::Internal(format!("assembled isomorphism fails verification:\n{report}")));
    }
    let result = compose(&compose(&to_l, &core)?, &inverse(&to_m)?)?;
    let report = verify_morphism(&result);
    if !report.is_pass() || !is_isomorphism(&result) {
        return Err(Error::Internal(format!("composed isomorphism fails verification:\n{report}")));
    }
    Ok(result)
}

fn quadruple_of(l: &TwoTermAlgebra, role: &str) -> Result<Quadruple, Error> {
    if !is_normal_form(l) {
        return Err(Error::Structural(format!("{role} is not in normal form")));
    }
    extract_triple(l, &decompose(l))
}

/// Recovers `(τ, f_U, t_V, Φ̃)` from an isomorphism between normal forms and
/// re-checks every relation between them.
pub fn extract_quadruple_maps(m: &Morphism) -> Result<QuadrupleMaps, Error> {
    let report = verify_morphism(m);
    if !report.is_pass() {
        return Err(Error::VerificationFailed(format!("{report}")));
    }
    if !is_isomorphism(m) {
        return Err(Error::NotInvertible("morphism".into()));
    }
    let ql = quadruple_of(m.source(), "source")?;
    let qm = quadruple_of(m.target(), "target")?;
    let (dg, du, dv) = (ql.g().dim(), ql.dim_u(), ql.dim_v());
    let (dg2, du2, dv2) = (qm.g().dim(), qm.dim_u(), qm.dim_v());
    let internal = |what: &str| Error::Internal(format!("isomorphism of normal forms: {what}"));
    if (dg, du, dv) != (dg2, du2, dv2) {
        return Err(internal("dimensions differ"));
    }
    let (phi0, phi1) = (m.phi0(), m.phi1());
    let tau = phi0.submatrix(0, dg, 0, dg);
    if !phi0.submatrix(0, dg, dg, dg + du).is_zero() {
        return Err(internal("U is not mapped into U'"));
    }
    let f_u = phi0.submatrix(dg, dg + du, dg, dg + du);
    if !phi1.submatrix(dv, dv + du, 0, dv).is_zero() {
        return Err(internal("V is not mapped into V'"));
    }
    let t_v = phi1.submatrix(0, dv, 0, dv);
    let big_phi = m.big_phi();
    let witness = Cochain::from_fn(2, dg, dv, |t| big_phi.fiber(&[t[0], t[1]])[..dv].to_vec());

    ql.g().check_morphism(qm.g(), &tau).map_err(|e| internal(&e.to_string()))?;
    for (mat, name) in [(&tau, "tau"), (&f_u, "fU"), (&t_v, "tV")] {
        require_invertible(mat, name).map_err(|e| internal(&e.to_string()))?;
    }
    ql.rep()
        .check_intertwiner(qm.rep(), &tau, &t_v)
        .map_err(|e| internal(&e.to_string()))?;
    let pulled: Representation = qm.rep().pullback(ql.g(), &tau)?;
    let lhs = ql.jtilde().push_forward(&t_v).sub(&qm.jtilde().pull_back(&tau));
    if delta(&witness, &pulled)? != lhs {
        return Err(internal("witness does not relate the cocycles"));
    }
    Ok(QuadrupleMaps { tau, f_u, t_v, witness })
}
