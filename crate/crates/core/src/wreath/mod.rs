//! The wreath product `G_n = G^n ⋊ S_n`: elements, types and class functions.

mod brute;
mod class_fn;
mod element;
mod types;

pub use brute::{
    brute_force_classes, centralizer_checks, class_equation_sum, conjugacy_by_type_check,
    wreath_order, WreathGroup,
};
pub use class_fn::{
    degree_one, sigma_r_c, sigma_rho, sign_char, trivial_char, WreathClassFunction,
};
pub(crate) use class_fn::{z_inv, z_rat};
pub(crate) use element::mul_unchecked;
pub use element::{
    cycle_products, representative, type_of, wreath_inverse, wreath_mul, WreathElement,
};
pub use types::{enumerate_types, enumerate_types_by_count, Partition, WreathType};
