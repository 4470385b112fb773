//! Seeded random algebras: a catalog normal form moved along a random
//! isomorphism.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{antisymmetrize2, TwoTermAlgebra};
use crate::builders::catalog::catalog_pairs;
use crate::builders::examples::normal_form_algebra;
use crate::classify::{transport, Quadruple};
use crate::cohomology::{cocycle_basis, Cochain};
use crate::error::Error;
use crate::exactla::{int, invert, vec_add_scaled, vec_zero, Matrix, Tensor};

/// Bounds for [`random_algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomProfile {
    pub max_n0: usize,
    pub max_n1: usize,
    pub max_dim_u: usize,
    /// Entries of the random maps are drawn from `-entry_bound..=entry_bound`.
    pub entry_bound: i64,
}

impl Default for RandomProfile {
    fn default() -> Self {
        Self { max_n0: 8, max_n1: 8, max_dim_u: 3, entry_bound: 2 }
    }
}

impl RandomProfile {
    /// Only the zero algebra fits.
    pub fn zero() -> Self {
        Self { max_n0: 0, max_n1: 0, max_dim_u: 0, entry_bound: 2 }
    }

    pub fn small() -> Self {
        Self { max_n0: 4, max_n1: 4, max_dim_u: 1, entry_bound: 2 }
    }

    /// `default`, `small` or `zero`.
    pub fn by_name(name: &str) -> Result<Self, Error> {
        match name {
            "default" => Ok(Self::default()),
            "small" => Ok(Self::small()),
            "zero" => Ok(Self::zero()),
            _ => Err(Error::Parse(format!("unknown random profile '{name}'"))),
        }
    }
}

fn entry(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = int(entry(rng, bound));
        }
    }
    m
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n, bound.max(1));
        if invert(&m).is_some() {
            return m;
        }
    }
}

/// Random invertible `phi0`, `phi1` and antisymmetric `Φ` for an algebra of
/// dimensions `(n0, n1)`.
pub fn random_transport_data(seed: u64, n0: usize, n1: usize, bound: i64) -> (Matrix, Matrix, Tensor) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    transport_data(&mut rng, n0, n1, bound)
}

fn transport_data(rng: &mut ChaCha8Rng, n0: usize, n1: usize, bound: i64) -> (Matrix, Matrix, Tensor) {
    let phi0 = random_invertible(rng, n0, bound);
    let phi1 = random_invertible(rng, n1, bound);
    let big_phi = antisymmetrize2(n0, n1, |_, _| (0..n1).map(|_| int(entry(rng, bound))).collect());
    (phi0, phi1, big_phi)
}

/// A random permutation matrix of size `n`.
pub fn random_permutation(seed: u64, n: usize) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut p = Matrix::zeros(n, n);
    for (from, &to) in order.iter().enumerate() {
        p[(to, from)] = int(1);
    }
    p
}

/// Deterministic in `seed`: picks a catalog `(g, ρ)` and a `U` within the
/// profile, a random 3-cocycle, builds the normal form and transports it
/// along a random isomorphism.
pub fn random_algebra(seed: u64, profile: &RandomProfile) -> Result<TwoTermAlgebra, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<_> = catalog_pairs()
        .into_iter()
        .filter(|(_, rep)| rep.algebra().dim() <= profile.max_n0 && rep.dim_v() <= profile.max_n1)
        .collect();
    let (_, rep) = candidates
        .choose(&mut rng)
        .cloned()
        .ok_or_else(|| Error::Parse("no catalog entry fits the profile".into()))?;
    let (dg, dv) = (rep.algebra().dim(), rep.dim_v());
    let max_u = profile.max_dim_u.min(profile.max_n0 - dg).min(profile.max_n1 - dv);
    let dim_u = rng.gen_range(0..=max_u);

    let bound = profile.entry_bound;
    let mut values = vec_zero(Cochain::zero(3, dg, dv).vector().len());
    for z in cocycle_basis(3, &rep) {
        let c = int(entry(&mut rng, bound));
        vec_add_scaled(&mut values, &c, z.vector());
    }
    let jtilde = Cochain::from_vector(3, dg, dv, values)?;
    let nf = normal_form_algebra(&Quadruple::new(rep, dim_u, jtilde)?)?;
    let (phi0, phi1, big_phi) = transport_data(&mut rng, nf.n0(), nf.n1(), bound);
    Ok(transport(&nf, &phi0, &phi1, &big_phi)?.0)
}
