use crate::algebra::TwoTermAlgebra;
use crate::exactla::{complement, image_basis, invert, kernel_basis, Matrix, Subspace};

/// A splitting `L0 = g ⊕ im d`, `L1 = ker d ⊕ U` together with the maps
/// `f: ker d ⊕ U → ker d ⊕ im d` (`v ⊕ u ↦ v ⊕ du`) and
/// `h: L0 → U`, `h(x) = f⁻¹(x^{im d})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    g_basis: Subspace,
    imd_basis: Subspace,
    kerd_basis: Subspace,
    u_basis: Subspace,
    f: Matrix,
    h: Matrix,
    // standard coordinates → (g, im d) and (ker d, U) coordinates
    degree0_coords: Matrix,
    degree1_coords: Matrix,
}

/// Deterministic decomposition: `im d` from the pivot columns of `d`, `ker d`
/// from the free columns, and greedy standard-basis complements.
pub fn decompose(l: &TwoTermAlgebra) -> Decomposition {
    let d = l.d();
    let imd_basis = image_basis(d);
    let g_basis = complement(&imd_basis);
    let kerd_basis = kernel_basis(d);
    let u_basis = complement(&kerd_basis);
    let dg = g_basis.dim();
    let dv = kerd_basis.dim();
    let du = u_basis.dim();

    let degree0_coords = invert(&g_basis.to_matrix().hstack(&imd_basis.to_matrix()))
        .expect("g and im d span L0");
    let degree1_coords = invert(&kerd_basis.to_matrix().hstack(&u_basis.to_matrix()))
        .expect("ker d and U span L1");
    let imd_coords = degree0_coords.submatrix(dg, l.n0(), 0, l.n0());
    // d restricted to U, in (U, im d) coordinates
    let c = imd_coords.mul(d).mul(&u_basis.to_matrix());
    let f = Matrix::identity(dv).block_diag(&c);
    let c_inv = invert(&c).expect("d maps U isomorphically onto im d");
    let h = u_basis.to_matrix().mul(&c_inv).mul(&imd_coords);
    debug_assert_eq!(c.rows(), du);
    Decomposition { g_basis, imd_basis, kerd_basis, u_basis, f, h, degree0_coords, degree1_coords }
}

impl Decomposition {
    pub fn g_basis(&self) -> &Subspace {
        &self.g_basis
    }

    pub fn imd_basis(&self) -> &Subspace {
        &self.imd_basis
    }

    pub fn kerd_basis(&self) -> &Subspace {
        &self.kerd_basis
    }

    pub fn u_basis(&self) -> &Subspace {
        &self.u_basis
    }

    /// Square matrix of `f` in `(ker d, U) → (ker d, im d)` coordinates.
    pub fn f(&self) -> &Matrix {
        &self.f
    }

    /// `h` as an `n1 × n0` matrix with image in `U`.
    pub fn h(&self) -> &Matrix {
        &self.h
    }

    pub fn dim_g(&self) -> usize {
        self.g_basis.dim()
    }

    pub fn dim_u(&self) -> usize {
        self.u_basis.dim()
    }

    pub fn dim_v(&self) -> usize {
        self.kerd_basis.dim()
    }

    /// Standard coordinates of `L0` to `(g, im d)` coordinates.
    pub fn degree0_coords(&self) -> &Matrix {
        &self.degree0_coords
    }

    /// Standard coordinates of `L1` to `(ker d, U)` coordinates.
    pub fn degree1_coords(&self) -> &Matrix {
        &self.degree1_coords
    }

    /// `x ↦ x^g` in `g` coordinates.
    pub(crate) fn g_projection(&self) -> Matrix {
        let n0 = self.degree0_coords.cols();
        self.degree0_coords.submatrix(0, self.dim_g(), 0, n0)
    }

    /// `x ↦ x^{im d}` in `im d` coordinates.
    pub(crate) fn imd_projection(&self) -> Matrix {
        let n0 = self.degree0_coords.cols();
        self.degree0_coords.submatrix(self.dim_g(), n0, 0, n0)
    }

    /// `v ↦ v^{ker d}` in `ker d` coordinates.
    pub(crate) fn kerd_projection(&self) -> Matrix {
        let n1 = self.degree1_coords.cols();
        self.degree1_coords.submatrix(0, self.dim_v(), 0, n1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{quaternion_example, skeletal_string, so3, Quaternion};
    use crate::exactla::{int, unit_vector};

    #[test]
    fn quaternion_splitting() {
        let l = quaternion_example(&Quaternion::from_i64(1, 2, 3, 5));
        let dec = decompose(&l);
        assert_eq!((dec.dim_g(), dec.dim_u(), dec.dim_v()), (3, 1, 3));
        assert_eq!(dec.g_basis().basis(), &[unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)]);
        assert_eq!(dec.u_basis().basis(), &[unit_vector(4, 0)]);
        assert!(dec.f().is_identity());
        assert!(dec.h().mul(&dec.g_basis().to_matrix()).is_zero());
        assert_eq!(dec.h().mul_vec(&unit_vector(4, 0)), unit_vector(4, 0));
    }

    #[test]
    fn skeletal_splitting() {
        let l = skeletal_string(&so3(), &int(1)).unwrap();
        let dec = decompose(&l);
        assert_eq!((dec.dim_g(), dec.dim_u(), dec.dim_v()), (3, 0, 1));
        assert!(dec.h().is_zero());
    }

    #[test]
    fn invertible_differential() {
        let d = Matrix::from_i64(&[&[1, 1], &[0, 2]]);
        let l = TwoTermAlgebra::new(
            d.clone(),
            crate::exactla::Tensor::zeros(&[2, 2, 2]),
            crate::exactla::Tensor::zeros(&[2, 2, 2]),
            crate::exactla::Tensor::zeros(&[2, 2, 2, 2]),
        )
        .unwrap();
        let dec = decompose(&l);
        assert_eq!((dec.dim_g(), dec.dim_u(), dec.dim_v()), (0, 2, 0));
        // f on U is d; h inverts d
        assert!(d.mul(dec.h()).is_identity());
    }
}
