//! Finite groups with conjugacy data and their class functions.

pub mod builtins;
mod class_function;
mod finite_group;
pub mod io;
mod subgroup;

pub use class_function::{inner_product_elementwise, ClassFunction, DualFunctional};
pub(crate) use finite_group::validate_permutation;
pub use finite_group::FiniteGroup;
pub use subgroup::{
    all_subgroups, closure, double_cosets, induce_cf, mackey_check, restrict_cf, SubgroupEmbedding,
};
