//! Exact dense linear algebra over ℚ.

mod matrix;
mod rational;
mod subspace;
mod tensor;

pub use matrix::{determinant, invert, rref, solve, Matrix};
pub use rational::{format_rational, frac, int, one, parse_rational, zero, Rational};
pub use subspace::{complement, image_basis, kernel_basis, Subspace};
pub(crate) use subspace::unit_vector;
pub use tensor::Tensor;

use num_traits::Zero;

pub(crate) fn vec_zero(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub(crate) fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn vec_add_scaled(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += s * b;
        }
    }
}

pub(crate) fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
