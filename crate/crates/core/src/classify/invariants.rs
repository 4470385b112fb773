use std::fmt;

use num_traits::Zero;

use crate::algebra::TwoTermAlgebra;
use crate::builders::killing_form;
use crate::classify::normal::normalize;
use crate::cohomology::{coboundary_primitive, cohomology_dim};
use crate::error::Error;
use crate::exactla::{image_basis, kernel_basis, unit_vector, Matrix, Rational, Subspace};
use crate::lie::LieAlgebra;

/// Isomorphism invariants of a 2-term algebra. Equal vectors are necessary,
/// not sufficient, for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantVector {
    pub n0: usize,
    pub n1: usize,
    pub dim_g: usize,
    pub dim_u: usize,
    pub dim_v: usize,
    pub h0: usize,
    pub h1: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub center_dim: usize,
    pub killing_rank: usize,
    /// `dim Hⁿ(g, ρ, V)` for `n = 0..=3`.
    pub cohomology: [usize; 4],
    pub jtilde_coboundary: bool,
}

/// Outcome of comparing two invariant vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// Not isomorphic; names the first differing invariant.
    Distinguished(&'static str),
    Inconclusive,
}

pub fn invariants(l: &TwoTermAlgebra) -> Result<InvariantVector, Error> {
    let (q, _) = normalize(l)?;
    let g = q.g();
    let (h0, h1) = l.homology_dims();
    let mut cohomology = [0; 4];
    for (n, slot) in cohomology.iter_mut().enumerate() {
        *slot = cohomology_dim(n, q.rep());
    }
    Ok(InvariantVector {
        n0: l.n0(),
        n1: l.n1(),
        dim_g: g.dim(),
        dim_u: q.dim_u(),
        dim_v: q.dim_v(),
        h0,
        h1,
        derived_series: derived_series(g),
        lower_central_series: lower_central_series(g),
        center_dim: center_dim(g),
        killing_rank: killing_form(g).rank(),
        cohomology,
        jtilde_coboundary: coboundary_primitive(q.jtilde(), q.rep())?.is_some(),
    })
}

impl InvariantVector {
    /// `(name, rendered value)` in comparison order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let mut out = vec![
            ("dim U", self.dim_u.to_string()),
            ("dim g", self.dim_g.to_string()),
            ("dim V", self.dim_v.to_string()),
            ("n0", self.n0.to_string()),
            ("n1", self.n1.to_string()),
            ("h0", self.h0.to_string()),
            ("h1", self.h1.to_string()),
            ("derived series", list(&self.derived_series)),
            ("lower central series", list(&self.lower_central_series)),
            ("center dim", self.center_dim.to_string()),
            ("Killing rank", self.killing_rank.to_string()),
        ];
        for (name, dim) in ["H^0", "H^1", "H^2", "H^3"].into_iter().zip(self.cohomology) {
            out.push((name, dim.to_string()));
        }
        out.push(("Jtilde coboundary flag", self.jtilde_coboundary.to_string()));
        out
    }

    pub fn compare(&self, other: &InvariantVector) -> Comparison {
        self.fields()
            .into_iter()
            .zip(other.fields())
            .find(|(a, b)| a.1 != b.1)
            .map_or(Comparison::Inconclusive, |(a, _)| Comparison::Distinguished(a.0))
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in self.fields() {
            writeln!(f, "{}={value}", name.replace(' ', "_"))?;
        }
        Ok(())
    }
}

/// Compares invariant vectors field by field.
pub fn distinguish(l: &TwoTermAlgebra, m: &TwoTermAlgebra) -> Result<Comparison, Error> {
    Ok(invariants(l)?.compare(&invariants(m)?))
}

fn bracket_span(g: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let n = g.dim();
    let columns: Vec<Vec<Rational>> = a
        .basis()
        .iter()
        .flat_map(|x| b.basis().iter().map(move |y| g.bracket(x, y)))
        .collect();
    if columns.is_empty() {
        return Subspace::zero(n);
    }
    image_basis(&Matrix::from_columns(n, &columns))
}

fn whole(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    Subspace::new(n, (0..n).map(|i| unit_vector(n, i)).collect()).expect("standard basis")
}

/// Dimensions of `g ⊇ [g,g] ⊇ ...` until the series stabilises.
pub fn derived_series(g: &LieAlgebra) -> Vec<usize> {
    let mut current = whole(g);
    let mut dims = vec![current.dim()];
    loop {
        let next = bracket_span(g, &current, &current);
        if next.dim() == current.dim() {
            return dims;
        }
        dims.push(next.dim());
        current = next;
    }
}

/// Dimensions of `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...` until the series stabilises.
pub fn lower_central_series(g: &LieAlgebra) -> Vec<usize> {
    let all = whole(g);
    let mut current = all.clone();
    let mut dims = vec![current.dim()];
    loop {
        let next = bracket_span(g, &all, &current);
        if next.dim() == current.dim() {
            return dims;
        }
        dims.push(next.dim());
        current = next;
    }
}

pub fn center_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let sc = g.structure_constants();
    // row (j, k), column i: coefficient of e_k in [e_i, e_j]
    let mut m = Matrix::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in sc.fiber(&[i, j]).iter().enumerate() {
                if !c.is_zero() {
                    m[(j * n + k, i)] = c.clone();
                }
            }
        }
    }
    kernel_basis(&m).dim()
}
