//! The Chevalley–Eilenberg complex `C(g, ρ, V)` of alternating maps
//! `Λⁿg → V`.
//!
//! A cochain is stored on strictly increasing index tuples (lexicographic),
//! with the `V` index running fastest. This is the coordinate order of the
//! columns of [`delta_matrix`].

use num_traits::Zero;

use crate::algebra::{binomial, combination_rank, combinations, shuffles, sort_with_sign};
use crate::error::Error;
use crate::exactla::{int, determinant, kernel_basis, solve, vec_add_scaled, vec_zero, Matrix, Rational};
use crate::lie::{LieAlgebra, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    dim_g: usize,
    dim_v: usize,
    values: Vec<Rational>,
}

impl Cochain {
    pub fn zero(degree: usize, dim_g: usize, dim_v: usize) -> Self {
        Self { degree, dim_g, dim_v, values: vec_zero(binomial(dim_g, degree) * dim_v) }
    }

    /// Builds from the coordinate vector (layout as documented on the module).
    pub fn from_vector(degree: usize, dim_g: usize, dim_v: usize, values: Vec<Rational>) -> Result<Self, Error> {
        let expect = binomial(dim_g, degree) * dim_v;
        if values.len() != expect {
            return Err(Error::DimensionMismatch(format!(
                "cochain has {} coordinates, expected {expect}",
                values.len()
            )));
        }
        Ok(Self { degree, dim_g, dim_v, values })
    }

    /// Evaluates `f` on increasing tuples.
    pub fn from_fn(degree: usize, dim_g: usize, dim_v: usize, mut f: impl FnMut(&[usize]) -> Vec<Rational>) -> Self {
        let mut values = Vec::with_capacity(binomial(dim_g, degree) * dim_v);
        for t in combinations(dim_g, degree) {
            let v = f(&t);
            assert_eq!(v.len(), dim_v);
            values.extend(v);
        }
        Self { degree, dim_g, dim_v, values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn vector(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Value on the `r`-th increasing tuple.
    pub fn value_by_rank(&self, r: usize) -> &[Rational] {
        &self.values[r * self.dim_v..(r + 1) * self.dim_v]
    }

    /// Value on an increasing tuple.
    pub fn value(&self, increasing: &[usize]) -> &[Rational] {
        self.value_by_rank(combination_rank(self.dim_g, increasing))
    }

    pub fn set(&mut self, increasing: &[usize], v: &[Rational]) {
        assert_eq!(v.len(), self.dim_v);
        let r = combination_rank(self.dim_g, increasing);
        self.values[r * self.dim_v..(r + 1) * self.dim_v].clone_from_slice(v);
    }

    /// Alternating extension to an arbitrary tuple of basis indices.
    pub fn evaluate(&self, tuple: &[usize]) -> Vec<Rational> {
        assert_eq!(tuple.len(), self.degree);
        match sort_with_sign(tuple) {
            None => vec_zero(self.dim_v),
            Some((s, sign)) => {
                let v = self.value(&s);
                if sign > 0 {
                    v.to_vec()
                } else {
                    v.iter().map(|x| -x).collect()
                }
            }
        }
    }

    /// Multilinear alternating extension to arbitrary vectors.
    pub fn evaluate_vectors(&self, xs: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(xs.len(), self.degree);
        let cols = Matrix::from_columns(self.dim_g, xs);
        let mut out = vec_zero(self.dim_v);
        for (r, t) in combinations(self.dim_g, self.degree).iter().enumerate() {
            let minor = determinant(&cols.select_rows(t));
            vec_add_scaled(&mut out, &minor, self.value_by_rank(r));
        }
        out
    }

    /// `x ↦ t(f(x))` for a linear map `t: V → W`.
    pub fn push_forward(&self, t: &Matrix) -> Cochain {
        assert_eq!(t.cols(), self.dim_v);
        let mut values = Vec::with_capacity(self.values.len() / self.dim_v.max(1) * t.rows());
        for r in 0..binomial(self.dim_g, self.degree) {
            values.extend(t.mul_vec(self.value_by_rank(r)));
        }
        Cochain { degree: self.degree, dim_g: self.dim_g, dim_v: t.rows(), values }
    }

    /// `(x_1..x_n) ↦ f(ψx_1, .., ψx_n)` for `ψ: g' → g`, a `dim_g × dim g'` matrix.
    pub fn pull_back(&self, psi: &Matrix) -> Cochain {
        assert_eq!(psi.rows(), self.dim_g);
        let lam = exterior_power(psi, self.degree);
        let src_dim = psi.cols();
        let mut out = Cochain::zero(self.degree, src_dim, self.dim_v);
        for (c, _) in combinations(src_dim, self.degree).iter().enumerate() {
            let mut acc = vec_zero(self.dim_v);
            for r in 0..lam.rows() {
                vec_add_scaled(&mut acc, &lam[(r, c)], self.value_by_rank(r));
            }
            out.values[c * self.dim_v..(c + 1) * self.dim_v].clone_from_slice(&acc);
        }
        out
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert_eq!((self.degree, self.dim_g, self.dim_v), (other.degree, other.dim_g, other.dim_v));
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Cochain { values, ..*self }
    }
}

/// `Λⁿ m`: rows and columns indexed by increasing `n`-tuples, entries the
/// corresponding minors.
pub fn exterior_power(m: &Matrix, n: usize) -> Matrix {
    let rows = combinations(m.rows(), n);
    let cols = combinations(m.cols(), n);
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for (c, ct) in cols.iter().enumerate() {
        let sub = Matrix::from_columns(m.rows(), &ct.iter().map(|&j| m.column(j)).collect::<Vec<_>>());
        for (r, rt) in rows.iter().enumerate() {
            out[(r, c)] = determinant(&sub.select_rows(rt));
        }
    }
    out
}

fn check_compatible(f: &Cochain, rep: &Representation) -> Result<(), Error> {
    if f.dim_g != rep.algebra().dim() || f.dim_v != rep.dim_v() {
        return Err(Error::DimensionMismatch(format!(
            "cochain on ({}, {}) against representation on ({}, {})",
            f.dim_g,
            f.dim_v,
            rep.algebra().dim(),
            rep.dim_v()
        )));
    }
    Ok(())
}

/// The Chevalley–Eilenberg differential:
///
/// `(δf)(x_1..x_{n+1}) = Σ_{sh(1,n)} ± ρ(x_σ1) f(x_σ2, ..)
///                      - Σ_{sh(2,n-1)} ± f([x_σ1, x_σ2], x_σ3, ..)`.
///
/// When `n + 1 > dim g` the result lives in the zero space.
pub fn delta(f: &Cochain, rep: &Representation) -> Result<Cochain, Error> {
    check_compatible(f, rep)?;
    let g = rep.algebra();
    let n = f.degree;
    let (dg, dv) = (f.dim_g, f.dim_v);
    let sh1 = shuffles(1, n);
    let sh2 = if n >= 1 { Some(shuffles(2, n - 1)) } else { None };
    Ok(Cochain::from_fn(n + 1, dg, dv, |x| {
        let mut out = vec_zero(dv);
        for s in sh1.iter() {
            let rest: Vec<usize> = s.perm[1..].iter().map(|&p| x[p]).collect();
            let fv = f.value(&rest);
            let term = rep.rho(x[s.perm[0]]).mul_vec(fv);
            vec_add_scaled(&mut out, &int(s.sign as i64), &term);
        }
        if let Some(sh2) = &sh2 {
            for s in sh2.iter() {
                let br = g.bracket_basis(x[s.perm[0]], x[s.perm[1]]);
                let mut args: Vec<usize> = Vec::with_capacity(n);
                args.push(0);
                args.extend(s.perm[2..].iter().map(|&p| x[p]));
                let coeff = int(-(s.sign as i64));
                for (k, c) in br.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    args[0] = k;
                    let fv = f.evaluate(&args);
                    vec_add_scaled(&mut out, &(&coeff * c), &fv);
                }
            }
        }
        out
    }))
}

/// Matrix of `δ: Cₙ → Cₙ₊₁` in the increasing-tuple ⊗ `V` coordinates.
pub fn delta_matrix(n: usize, rep: &Representation) -> Matrix {
    let (dg, dv) = (rep.algebra().dim(), rep.dim_v());
    let cols = binomial(dg, n) * dv;
    let rows = binomial(dg, n + 1) * dv;
    let mut m = Matrix::zeros(rows, cols);
    if rows == 0 {
        return m;
    }
    for c in 0..cols {
        let mut basis = vec_zero(cols);
        basis[c] = int(1);
        let f = Cochain { degree: n, dim_g: dg, dim_v: dv, values: basis };
        let df = delta(&f, rep).expect("dimensions agree by construction");
        for (r, v) in df.values.into_iter().enumerate() {
            m[(r, c)] = v;
        }
    }
    m
}

pub fn is_cocycle(f: &Cochain, rep: &Representation) -> Result<bool, Error> {
    Ok(delta(f, rep)?.is_zero())
}

/// A primitive `g` with `δg = f`, or `None` when `f` is not a coboundary.
/// `f` must be a cocycle of degree at least 1.
pub fn coboundary_primitive(f: &Cochain, rep: &Representation) -> Result<Option<Cochain>, Error> {
    check_compatible(f, rep)?;
    if f.degree == 0 {
        return Err(Error::DimensionMismatch("degree-0 cochains have no primitives".into()));
    }
    if !is_cocycle(f, rep)? {
        return Err(Error::NotCocycle);
    }
    Ok(solve_primitive(f, rep))
}

fn solve_primitive(f: &Cochain, rep: &Representation) -> Option<Cochain> {
    let a = delta_matrix(f.degree - 1, rep);
    let b = Matrix::from_columns(a.rows(), &[f.values.clone()]);
    solve(&a, &b).map(|x| Cochain {
        degree: f.degree - 1,
        dim_g: f.dim_g,
        dim_v: f.dim_v,
        values: x.column(0),
    })
}

/// `dim Hⁿ = dim ker δₙ - rank δₙ₋₁`.
pub fn cohomology_dim(n: usize, rep: &Representation) -> usize {
    let dn = delta_matrix(n, rep);
    let kernel = dn.cols() - dn.rank();
    let boundary = if n == 0 { 0 } else { delta_matrix(n - 1, rep).rank() };
    kernel - boundary
}

/// Basis of the `n`-cocycles.
pub fn cocycle_basis(n: usize, rep: &Representation) -> Vec<Cochain> {
    let (dg, dv) = (rep.algebra().dim(), rep.dim_v());
    kernel_basis(&delta_matrix(n, rep))
        .basis()
        .iter()
        .map(|v| Cochain { degree: n, dim_g: dg, dim_v: dv, values: v.clone() })
        .collect()
}

/// Cocycles whose classes form a basis of `Hⁿ`: kernel vectors of `δₙ`
/// chosen greedily so each one leaves the span of the coboundaries and the
/// previous choices.
pub fn cohomology_representatives(n: usize, rep: &Representation) -> Vec<Cochain> {
    let cocycles = cocycle_basis(n, rep);
    let mut span: Vec<Vec<Rational>> = if n == 0 {
        Vec::new()
    } else {
        let b = delta_matrix(n - 1, rep);
        crate::exactla::image_basis(&b).basis().to_vec()
    };
    let len = binomial(rep.algebra().dim(), n) * rep.dim_v();
    let mut rank = Matrix::from_columns(len, &span).rank();
    let mut reps = Vec::new();
    for z in cocycles {
        span.push(z.values.clone());
        let r = Matrix::from_columns(len, &span).rank();
        if r > rank {
            rank = r;
            reps.push(z);
        } else {
            span.pop();
        }
    }
    reps
}

/// Decides whether `j ∈ Cₙ(g, ρ, V)` and `k ∈ Cₙ(h, σ, W)` are cohomologous
/// through the given `ψ: g → h` and intertwiner `t: V → W`, i.e. finds
/// `Φ ∈ Cₙ₋₁(g, σ∘ψ, W)` with `t∘j - ψ*k = δΦ`.
///
/// Returns `Ok(None)` when no such `Φ` exists for these maps.
pub fn cohomologous(
    j: &Cochain,
    source: &Representation,
    k: &Cochain,
    target: &Representation,
    psi: &Matrix,
    t: &Matrix,
) -> Result<Option<Cochain>, Error> {
    check_compatible(j, source)?;
    check_compatible(k, target)?;
    if j.degree != k.degree {
        return Err(Error::DimensionMismatch(format!(
            "degrees {} and {} differ",
            j.degree, k.degree
        )));
    }
    if j.degree == 0 {
        return Err(Error::DimensionMismatch("degree-0 cochains have no primitives".into()));
    }
    let g: &LieAlgebra = source.algebra();
    g.check_morphism(target.algebra(), psi)?;
    source.check_intertwiner(target, psi, t)?;
    let pulled = target.pullback(g, psi)?;
    let lhs = j.push_forward(t).sub(&k.pull_back(psi));
    Ok(solve_primitive(&lhs, &pulled))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, Tensor};

    fn so3() -> LieAlgebra {
        let mut sc = Tensor::zeros(&[3, 3, 3]);
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            sc.set(&[i, j, k], int(1));
            sc.set(&[j, i, k], int(-1));
        }
        LieAlgebra::new(sc).unwrap()
    }

    #[test]
    fn abelian_trivial_delta_vanishes() {
        let rep = Representation::trivial(LieAlgebra::abelian(3), 2);
        for n in 0..=3 {
            assert!(delta_matrix(n, &rep).is_zero());
        }
    }

    #[test]
    fn so3_one_cochain_example() {
        // f(e1) = 1, others 0; (δf)(e2, e3) = -f([e2, e3]) = -1
        let rep = Representation::trivial(so3(), 1);
        let mut f = Cochain::zero(1, 3, 1);
        f.set(&[0], &[int(1)]);
        let df = delta(&f, &rep).unwrap();
        assert_eq!(df.value(&[1, 2]), &[int(-1)]);
        assert_eq!(df.value(&[0, 1]), &[int(0)]);
        assert_eq!(df.value(&[0, 2]), &[int(0)]);
    }

    #[test]
    fn delta_matrix_shapes() {
        let triv = Representation::trivial(so3(), 1);
        let m = delta_matrix(2, &triv);
        assert_eq!((m.rows(), m.cols()), (1, 3));
        assert_eq!(m.rank(), 0);
        let ad = Representation::adjoint(so3());
        let m = delta_matrix(2, &ad);
        assert_eq!((m.rows(), m.cols()), (3, 9));
        assert_eq!(m.rank(), 3);
        let m = delta_matrix(3, &ad);
        assert_eq!((m.rows(), m.cols()), (0, 3));
    }

    #[test]
    fn top_degree_cocycle_not_coboundary_for_trivial() {
        let rep = Representation::trivial(so3(), 1);
        let mut j = Cochain::zero(3, 3, 1);
        j.set(&[0, 1, 2], &[int(1)]);
        assert!(is_cocycle(&j, &rep).unwrap());
        assert_eq!(coboundary_primitive(&j, &rep).unwrap(), None);
        let z = Cochain::zero(3, 3, 1);
        assert_eq!(coboundary_primitive(&z, &rep).unwrap(), Some(Cochain::zero(2, 3, 1)));
    }

    #[test]
    fn adjoint_three_cocycles_are_exact() {
        let rep = Representation::adjoint(so3());
        let mut j = Cochain::zero(3, 3, 3);
        j.set(&[0, 1, 2], &[int(2), int(3), int(5)]);
        let g = coboundary_primitive(&j, &rep).unwrap().expect("H^3 = 0");
        assert_eq!(delta(&g, &rep).unwrap(), j);
    }

    #[test]
    fn non_cocycle_rejected() {
        let rep = Representation::trivial(so3(), 1);
        let mut f = Cochain::zero(1, 3, 1);
        f.set(&[0], &[int(1)]);
        assert_eq!(coboundary_primitive(&f, &rep), Err(Error::NotCocycle));
    }

    #[test]
    fn cohomologous_examples() {
        let g = so3();
        let rep = Representation::trivial(g.clone(), 1);
        let id3 = Matrix::identity(3);
        let mut j = Cochain::zero(3, 3, 1);
        j.set(&[0, 1, 2], &[int(1)]);
        let phi = cohomologous(&j, &rep, &j, &rep, &id3, &Matrix::identity(1)).unwrap();
        assert_eq!(phi, Some(Cochain::zero(2, 3, 1)));

        let mut k = Cochain::zero(3, 3, 1);
        k.set(&[0, 1, 2], &[int(2)]);
        let phi = cohomologous(&j, &rep, &k, &rep, &id3, &Matrix::scalar(1, &int(2))).unwrap();
        assert_eq!(phi, Some(Cochain::zero(2, 3, 1)));

        let zero = Cochain::zero(3, 3, 1);
        assert_eq!(cohomologous(&j, &rep, &zero, &rep, &id3, &Matrix::identity(1)).unwrap(), None);

        assert!(matches!(
            cohomologous(&j, &rep, &j, &rep, &Matrix::scalar(3, &int(2)), &Matrix::identity(1)),
            Err(Error::NotLieMorphism(_))
        ));
        let ad = Representation::adjoint(g);
        let mut ja = Cochain::zero(3, 3, 3);
        ja.set(&[0, 1, 2], &[int(1), int(0), int(0)]);
        let bad_t = Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
        assert!(matches!(
            cohomologous(&ja, &ad, &ja, &ad, &id3, &bad_t),
            Err(Error::NotIntertwiner(_))
        ));
    }

    #[test]
    fn evaluate_vectors_matches_basis_values() {
        let mut f = Cochain::zero(2, 3, 1);
        f.set(&[0, 1], &[int(1)]);
        f.set(&[1, 2], &[int(4)]);
        let e = |i: usize| crate::exactla::unit_vector(3, i);
        assert_eq!(f.evaluate_vectors(&[e(1), e(0)]), vec![int(-1)]);
        // f(e0 + e2, e1) = f(e0,e1) + f(e2,e1) = 1 - 4
        let x: Vec<Rational> = vec![int(1), int(0), int(1)];
        assert_eq!(f.evaluate_vectors(&[x, e(1)]), vec![int(-3)]);
    }
}
