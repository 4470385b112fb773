use num_traits::{One, Zero};

use super::matrix::{rref, solve, Matrix};
use super::rational::Rational;
use crate::error::Error;

/// A subspace of ℚⁿ given by an ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    /// Checks lengths and linear independence.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Result<Self, Error> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "basis vector of length {} in ambient dimension {ambient_dim}",
                v.len()
            )));
        }
        let s = Self { ambient_dim, basis };
        if s.to_matrix().rank() != s.basis.len() {
            return Err(Error::Structural("subspace basis is linearly dependent".into()));
        }
        Ok(s)
    }

    pub(crate) fn new_unchecked(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Self {
        Self { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::new_unchecked(ambient_dim, Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Basis vectors as columns of an `ambient_dim × dim` matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let b = Matrix::from_columns(self.ambient_dim, &[v.to_vec()]);
        solve(&self.to_matrix(), &b).map(|x| x.column(0))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Null space basis, one vector per free column of the rref, in
/// increasing column order.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.iter().peekable();
    for c in 0..n {
        if pivot_iter.peek() == Some(&&c) {
            pivot_iter.next();
            continue;
        }
        let mut v = unit_vector(n, c);
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[(row, c)].clone();
        }
        basis.push(v);
    }
    Subspace::new_unchecked(n, basis)
}

/// Column space basis: the original columns of `m` at the pivot positions.
pub fn image_basis(m: &Matrix) -> Subspace {
    let (_, pivots) = rref(m);
    let basis = pivots.iter().map(|&c| m.column(c)).collect();
    Subspace::new_unchecked(m.rows(), basis)
}

/// Standard basis vectors, chosen greedily by increasing index, that extend
/// `s` to a basis of the ambient space.
pub fn complement(s: &Subspace) -> Subspace {
    let n = s.ambient_dim();
    let mut current = s.basis().to_vec();
    let mut rank = s.dim();
    let mut added = Vec::new();
    for i in 0..n {
        if rank == n {
            break;
        }
        current.push(unit_vector(n, i));
        let r = Matrix::from_columns(n, &current).rank();
        if r > rank {
            rank = r;
            added.push(unit_vector(n, i));
        } else {
            current.pop();
        }
    }
    Subspace::new_unchecked(n, added)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::int;

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
        let k = kernel_basis(&Matrix::zeros(2, 3));
        assert_eq!(k.basis(), &[unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)]);

        // real-part map on quaternion coordinates (1, i, j, k)
        let re = Matrix::from_i64(&[&[1, 0, 0, 0]]);
        let k = kernel_basis(&re);
        assert_eq!(k.basis(), &[unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)]);
    }

    #[test]
    fn image_examples() {
        assert_eq!(image_basis(&Matrix::identity(2)).dim(), 2);
        assert_eq!(image_basis(&Matrix::zeros(3, 2)).dim(), 0);
        let mut d = Matrix::zeros(4, 4);
        d[(0, 0)] = int(1);
        assert_eq!(image_basis(&d).basis(), &[unit_vector(4, 0)]);
    }

    #[test]
    fn complement_examples() {
        let s = Subspace::new(2, vec![unit_vector(2, 0)]).unwrap();
        assert_eq!(complement(&s).basis(), &[unit_vector(2, 1)]);
        assert_eq!(complement(&Subspace::zero(3)).dim(), 3);
        let diag = Subspace::new(2, vec![vec![int(1), int(1)]]).unwrap();
        assert_eq!(complement(&diag).basis(), &[unit_vector(2, 0)]);
    }

    #[test]
    fn dependent_basis_rejected() {
        let r = Subspace::new(2, vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert!(r.is_err());
    }
}
