//! Constructors for example algebras, normal forms and random instances.

mod catalog;
mod examples;
mod quaternion;
mod random;

pub use catalog::{
    abelian, catalog_pairs, heisenberg3, killing_form, lie_by_name, nonabelian2,
    representation_by_name, sl2, so3,
};
pub(crate) use examples::assemble_normal_form;
pub use examples::{quaternion_automorphism, normal_form_algebra, quaternion_example, skeletal_string};
pub use quaternion::Quaternion;
pub use random::{random_algebra, random_permutation, random_transport_data, RandomProfile};
