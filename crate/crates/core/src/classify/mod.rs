//! Decomposition, normal forms and isomorphism classification.

mod certify;
mod decompose;
mod invariants;
mod normal;
mod quadruple;

pub use certify::{certify_isomorphism, extract_quadruple_maps, QuadrupleMaps};
pub use decompose::{decompose, Decomposition};
pub use invariants::{
    center_dim, derived_series, distinguish, invariants, lower_central_series, Comparison,
    InvariantVector,
};
pub use normal::{extract_triple, is_normal_form, normal_form, skeleton, transport};
pub use quadruple::Quadruple;

#[cfg(test)]
mod tests;
