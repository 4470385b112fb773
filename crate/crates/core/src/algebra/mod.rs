//! 2-term L∞-algebras given by structure constants.
//!
//! An algebra is a two-stage complex `L1 → L0` (the differential `d`) with a
//! degree-0 graded antisymmetric bracket and a Jacobiator
//! `J: Λ³L0 → L1`. Both spaces carry standard bases `e_0..` (for `L0`) and
//! `f_0..` (for `L1`). The bracket of two `L1` elements vanishes for degree
//! reasons and is not stored.

mod shuffle;
pub(crate) mod verify;

pub use shuffle::{
    binomial, combination_rank, combinations, permutation_sign, shuffles, sort_with_sign, Shuffle,
    ShuffleSet,
};
pub use verify::{verify, EquationStatus, VerificationReport};

use num_traits::Zero;

use crate::error::Error;
use crate::exactla::{vec_add_scaled, vec_zero, Matrix, Rational, Tensor};

/// Structure constants of a finite-dimensional 2-term L∞-algebra.
///
/// * `d` is `n0 × n1`; column `j` is `d(f_j)`.
/// * `b00[i][j][k]` is the `e_k` coefficient of `[e_i, e_j]`.
/// * `b01[i][j][k]` is the `f_k` coefficient of `[e_i, f_j]`.
/// * `jac[i][j][k][l]` is the `f_l` coefficient of `J(e_i, e_j, e_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermAlgebra {
    n0: usize,
    n1: usize,
    d: Matrix,
    b00: Tensor,
    b01: Tensor,
    jac: Tensor,
}

/// An element of `L0 ⊕ L1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVector {
    pub l0: Vec<Rational>,
    pub l1: Vec<Rational>,
}

impl GradedVector {
    pub fn zero(n0: usize, n1: usize) -> Self {
        Self { l0: vec_zero(n0), l1: vec_zero(n1) }
    }

    pub fn degree0(l0: Vec<Rational>, n1: usize) -> Self {
        Self { l0, l1: vec_zero(n1) }
    }

    pub fn degree1(n0: usize, l1: Vec<Rational>) -> Self {
        Self { l0: vec_zero(n0), l1 }
    }

    pub fn is_zero(&self) -> bool {
        self.l0.iter().chain(&self.l1).all(Zero::is_zero)
    }
}

impl TwoTermAlgebra {
    /// Assembles an algebra after checking tensor shapes. Antisymmetry is
    /// checked separately by [`TwoTermAlgebra::check_structure`].
    pub fn new(d: Matrix, b00: Tensor, b01: Tensor, jac: Tensor) -> Result<Self, Error> {
        let (n0, n1) = (d.rows(), d.cols());
        let expect = |name: &str, t: &Tensor, shape: &[usize]| {
            if t.shape() == shape {
                Ok(())
            } else {
                Err(Error::DimensionMismatch(format!(
                    "{name} has shape {:?}, expected {:?}",
                    t.shape(),
                    shape
                )))
            }
        };
        expect("b00", &b00, &[n0, n0, n0])?;
        expect("b01", &b01, &[n0, n1, n1])?;
        expect("jac", &jac, &[n0, n0, n0, n1])?;
        Ok(Self { n0, n1, d, b00, b01, jac })
    }

    /// The algebra with every structure map zero.
    pub fn zero(n0: usize, n1: usize) -> Self {
        Self {
            n0,
            n1,
            d: Matrix::zeros(n0, n1),
            b00: Tensor::zeros(&[n0, n0, n0]),
            b01: Tensor::zeros(&[n0, n1, n1]),
            jac: Tensor::zeros(&[n0, n0, n0, n1]),
        }
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn d(&self) -> &Matrix {
        &self.d
    }

    pub fn b00(&self) -> &Tensor {
        &self.b00
    }

    pub fn b01(&self) -> &Tensor {
        &self.b01
    }

    pub fn jac(&self) -> &Tensor {
        &self.jac
    }

    /// Antisymmetry of `b00` in its two slots and of `jac` in its three.
    pub fn check_structure(&self) -> Result<(), Error> {
        let n0 = self.n0;
        for i in 0..n0 {
            for j in i..n0 {
                let ok = self
                    .b00
                    .fiber(&[i, j])
                    .iter()
                    .zip(self.b00.fiber(&[j, i]))
                    .all(|(a, b)| (a + b).is_zero());
                if !ok {
                    return Err(Error::Structural(format!(
                        "b00 antisymmetry violated at ({i},{j})"
                    )));
                }
            }
        }
        for i in 0..n0 {
            for j in 0..n0 {
                for k in 0..n0 {
                    let base = self.jac.fiber(&[i, j, k]);
                    let sorted = [i, j, k];
                    let Some((s, sign)) = sort_with_sign(&sorted) else {
                        if base.iter().any(|x| !x.is_zero()) {
                            return Err(Error::Structural(format!(
                                "jac antisymmetry violated at ({i},{j},{k})"
                            )));
                        }
                        continue;
                    };
                    let canon = self.jac.fiber(&s);
                    let ok = base.iter().zip(canon).all(|(a, c)| {
                        if sign > 0 {
                            a == c
                        } else {
                            (a + c).is_zero()
                        }
                    });
                    if !ok {
                        return Err(Error::Structural(format!(
                            "jac antisymmetry violated at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn differential(&self, v: &[Rational]) -> Vec<Rational> {
        self.d.mul_vec(v)
    }

    /// `[x, y]` for `x, y ∈ L0`.
    pub fn bracket00(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec_zero(self.n0);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vec_add_scaled(&mut out, &(xi * yj), self.b00.fiber(&[i, j]));
            }
        }
        out
    }

    /// `[x, v]` for `x ∈ L0`, `v ∈ L1`.
    pub fn bracket01(&self, x: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec_zero(self.n1);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                vec_add_scaled(&mut out, &(xi * vj), self.b01.fiber(&[i, j]));
            }
        }
        out
    }

    /// `[e_i, v]` for a basis vector of `L0`.
    pub(crate) fn bracket01_basis(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec_zero(self.n1);
        for (j, vj) in v.iter().enumerate() {
            vec_add_scaled(&mut out, vj, self.b01.fiber(&[i, j]));
        }
        out
    }

    /// `J(x, y, z)` for `x, y, z ∈ L0`.
    pub fn jacobiator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let mut out = vec_zero(self.n1);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    vec_add_scaled(&mut out, &(&xy * zk), self.jac.fiber(&[i, j, k]));
                }
            }
        }
        out
    }

    /// The graded bracket on `L0 ⊕ L1`: `[x, v] = -[v, x]` across degrees and
    /// `[u, v] = 0` on `L1`.
    pub fn bracket(&self, x: &GradedVector, y: &GradedVector) -> Result<GradedVector, Error> {
        for g in [x, y] {
            if g.l0.len() != self.n0 || g.l1.len() != self.n1 {
                return Err(Error::DimensionMismatch("graded vector dimensions".into()));
            }
        }
        let l0 = self.bracket00(&x.l0, &y.l0);
        let a = self.bracket01(&x.l0, &y.l1);
        let b = self.bracket01(&y.l0, &x.l1);
        let l1 = a.iter().zip(&b).map(|(p, q)| p - q).collect();
        Ok(GradedVector { l0, l1 })
    }

    /// Homology dimensions `(n0 - rank d, n1 - rank d)`.
    pub fn homology_dims(&self) -> (usize, usize) {
        let r = self.d.rank();
        (self.n0 - r, self.n1 - r)
    }
}

/// Alternating 3-slot tensor from values on increasing triples.
pub(crate) fn antisymmetrize3(n: usize, out_dim: usize, mut value: impl FnMut(usize, usize, usize) -> Vec<Rational>) -> Tensor {
    let mut t = Tensor::zeros(&[n, n, n, out_dim]);
    for c in combinations(n, 3) {
        let v = value(c[0], c[1], c[2]);
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let neg: Vec<Rational> = v.iter().map(|x| -x).collect();
        for p in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
            t.fiber_mut(&[c[p[0]], c[p[1]], c[p[2]]]).clone_from_slice(&v);
        }
        for p in [[1, 0, 2], [0, 2, 1], [2, 1, 0]] {
            t.fiber_mut(&[c[p[0]], c[p[1]], c[p[2]]]).clone_from_slice(&neg);
        }
    }
    t
}

/// Alternating 2-slot tensor from values on increasing pairs.
pub(crate) fn antisymmetrize2(n: usize, out_dim: usize, mut value: impl FnMut(usize, usize) -> Vec<Rational>) -> Tensor {
    let mut t = Tensor::zeros(&[n, n, out_dim]);
    for i in 0..n {
        for j in i + 1..n {
            let v = value(i, j);
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            let neg: Vec<Rational> = v.iter().map(|x| -x).collect();
            t.fiber_mut(&[i, j]).clone_from_slice(&v);
            t.fiber_mut(&[j, i]).clone_from_slice(&neg);
        }
    }
    t
}
