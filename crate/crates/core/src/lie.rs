//! Lie algebras by structure constants and their representations.

use num_traits::Zero;

use crate::algebra::combinations;
use crate::error::Error;
use crate::exactla::{invert, unit_vector, vec_add_scaled, vec_zero, Matrix, Rational, Tensor};

/// `sc[i][j][k]` is the `e_k` coefficient of `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    sc: Tensor,
}

impl LieAlgebra {
    /// Checks antisymmetry and the Jacobi identity on basis triples.
    pub fn new(sc: Tensor) -> Result<Self, Error> {
        let g = Self::new_unchecked(sc)?;
        g.check()?;
        Ok(g)
    }

    pub(crate) fn new_unchecked(sc: Tensor) -> Result<Self, Error> {
        let s = sc.shape();
        if s.len() != 3 || s[0] != s[1] || s[1] != s[2] {
            return Err(Error::DimensionMismatch(format!(
                "structure constants must be n×n×n, got {s:?}"
            )));
        }
        Ok(Self { dim: s[0], sc })
    }

    pub fn abelian(n: usize) -> Self {
        Self { dim: n, sc: Tensor::zeros(&[n, n, n]) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &Tensor {
        &self.sc
    }

    pub fn check(&self) -> Result<(), Error> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let ok = self
                    .sc
                    .fiber(&[i, j])
                    .iter()
                    .zip(self.sc.fiber(&[j, i]))
                    .all(|(a, b)| (a + b).is_zero());
                if !ok {
                    return Err(Error::Structural(format!(
                        "Lie bracket antisymmetry violated at ({i},{j})"
                    )));
                }
            }
        }
        for t in combinations(n, 3) {
            let (x, y, z) = (unit_vector(n, t[0]), unit_vector(n, t[1]), unit_vector(n, t[2]));
            let a = self.bracket(&x, &self.bracket(&y, &z));
            let b = self.bracket(&y, &self.bracket(&z, &x));
            let c = self.bracket(&z, &self.bracket(&x, &y));
            if a.iter().zip(&b).zip(&c).any(|((p, q), r)| !(p + q + r).is_zero()) {
                return Err(Error::Structural(format!(
                    "Jacobi identity violated at ({},{},{})",
                    t[0], t[1], t[2]
                )));
            }
        }
        Ok(())
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        self.sc.fiber(&[i, j])
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec_zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    vec_add_scaled(&mut out, &(xi * yj), self.sc.fiber(&[i, j]));
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`: column `j` is `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.bracket_basis(i, j).to_vec()).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// `psi: self → target` (a `target.dim × self.dim` matrix) preserves
    /// brackets on all basis pairs.
    pub fn check_morphism(&self, target: &LieAlgebra, psi: &Matrix) -> Result<(), Error> {
        if psi.rows() != target.dim || psi.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "Lie map is {}×{}, expected {}×{}",
                psi.rows(),
                psi.cols(),
                target.dim,
                self.dim
            )));
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = psi.mul_vec(self.bracket_basis(i, j));
                let rhs = target.bracket(&psi.column(i), &psi.column(j));
                if lhs != rhs {
                    return Err(Error::NotLieMorphism(format!(
                        "bracket not preserved on basis pair ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Transports the bracket along an invertible change of basis `p`
    /// (new coordinates = `p` · old coordinates).
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra, Error> {
        let pinv = invert(p).ok_or_else(|| Error::Singular("change of basis".into()))?;
        Ok(LieAlgebra { dim: self.dim, sc: self.sc.change_basis(&pinv, p) })
    }
}

/// A representation `ρ: g → gl(V)`, one matrix per basis element of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    algebra: LieAlgebra,
    dim_v: usize,
    rho: Vec<Matrix>,
}

impl Representation {
    /// Checks shapes and `ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x)` on basis pairs.
    pub fn new(algebra: LieAlgebra, dim_v: usize, rho: Vec<Matrix>) -> Result<Self, Error> {
        let r = Self::new_unchecked(algebra, dim_v, rho)?;
        r.check()?;
        Ok(r)
    }

    pub(crate) fn new_unchecked(algebra: LieAlgebra, dim_v: usize, rho: Vec<Matrix>) -> Result<Self, Error> {
        if rho.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a {}-dimensional Lie algebra",
                rho.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = rho.iter().find(|m| m.rows() != dim_v || m.cols() != dim_v) {
            return Err(Error::DimensionMismatch(format!(
                "action matrix is {}×{}, expected {dim_v}×{dim_v}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Self { algebra, dim_v, rho })
    }

    pub fn check(&self) -> Result<(), Error> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(self.algebra.bracket_basis(i, j));
                let rhs = self.rho[i].mul(&self.rho[j]).sub(&self.rho[j].mul(&self.rho[i]));
                if lhs != rhs {
                    return Err(Error::Structural(format!(
                        "representation law violated at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn trivial(algebra: LieAlgebra, dim_v: usize) -> Self {
        let rho = vec![Matrix::zeros(dim_v, dim_v); algebra.dim()];
        Self { algebra, dim_v, rho }
    }

    pub fn adjoint(algebra: LieAlgebra) -> Self {
        let rho = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        let dim_v = algebra.dim();
        Self { algebra, dim_v, rho }
    }

    /// `V ⊕ W` with block-diagonal action. Both must act on the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Result<Self, Error> {
        if self.algebra != other.algebra {
            return Err(Error::DimensionMismatch("direct sum over different Lie algebras".into()));
        }
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Self { algebra: self.algebra.clone(), dim_v: self.dim_v + other.dim_v, rho })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// `ρ(x)` for an arbitrary element `x`.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim_v, self.dim_v);
        for (xi, r) in x.iter().zip(&self.rho) {
            if !xi.is_zero() {
                m = m.add(&r.scale(xi));
            }
        }
        m
    }

    /// `σ ∘ ψ` as a representation of `source`, where `ψ: source → self.algebra`.
    pub fn pullback(&self, source: &LieAlgebra, psi: &Matrix) -> Result<Representation, Error> {
        source.check_morphism(&self.algebra, psi)?;
        let rho = (0..source.dim()).map(|i| self.act(&psi.column(i))).collect();
        Ok(Representation { algebra: source.clone(), dim_v: self.dim_v, rho })
    }

    /// `t: V → W` satisfies `t ∘ ρ(x) = σ(ψ(x)) ∘ t` for every basis `x`.
    pub fn check_intertwiner(&self, target: &Representation, psi: &Matrix, t: &Matrix) -> Result<(), Error> {
        if t.rows() != target.dim_v || t.cols() != self.dim_v {
            return Err(Error::DimensionMismatch(format!(
                "intertwiner is {}×{}, expected {}×{}",
                t.rows(),
                t.cols(),
                target.dim_v,
                self.dim_v
            )));
        }
        for i in 0..self.algebra.dim() {
            let lhs = t.mul(&self.rho[i]);
            let rhs = target.act(&psi.column(i)).mul(t);
            if lhs != rhs {
                return Err(Error::NotIntertwiner(format!("fails on basis element {i}")));
            }
        }
        Ok(())
    }

    /// Dimension of the invariants `{v : ρ(x)v = 0 ∀x}`.
    pub fn invariants_dim(&self) -> usize {
        let stacked = self
            .rho
            .iter()
            .fold(Matrix::zeros(0, self.dim_v), |acc, m| acc.vstack(m));
        self.dim_v - stacked.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn so3() -> LieAlgebra {
        let mut sc = Tensor::zeros(&[3, 3, 3]);
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            sc.set(&[i, j, k], int(1));
            sc.set(&[j, i, k], int(-1));
        }
        LieAlgebra::new(sc).unwrap()
    }

    #[test]
    fn jacobi_violation_caught() {
        let mut sc = Tensor::zeros(&[3, 3, 3]);
        sc.set(&[0, 1, 1], int(1));
        sc.set(&[1, 0, 1], int(-1));
        sc.set(&[1, 2, 0], int(1));
        sc.set(&[2, 1, 0], int(-1));
        assert!(matches!(LieAlgebra::new(sc), Err(Error::Structural(_))));
    }

    #[test]
    fn adjoint_is_a_representation() {
        let r = Representation::adjoint(so3());
        assert!(r.check().is_ok());
        assert_eq!(r.invariants_dim(), 0);
        assert_eq!(Representation::trivial(so3(), 2).invariants_dim(), 2);
    }

    #[test]
    fn bad_representation_rejected() {
        let g = so3();
        let mut rho = vec![Matrix::zeros(1, 1); 3];
        rho[0] = Matrix::identity(1);
        assert!(Representation::new(g, 1, rho).is_err());
    }

    #[test]
    fn identity_is_morphism_and_intertwiner() {
        let g = so3();
        let id = Matrix::identity(3);
        g.check_morphism(&g, &id).unwrap();
        let ad = Representation::adjoint(g.clone());
        ad.check_intertwiner(&ad, &id, &id).unwrap();
        assert!(matches!(
            ad.check_intertwiner(&ad, &id, &Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]])),
            Err(Error::NotIntertwiner(_))
        ));
        assert!(matches!(
            g.check_morphism(&g, &Matrix::scalar(3, &int(2))),
            Err(Error::NotLieMorphism(_))
        ));
    }
}
