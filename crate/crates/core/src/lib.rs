//! Exact computations in the wreath-product Fock space `F_G = ⊕_n C(G ≀ S_n)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalars`]: rationals, cyclotomic values and truncated power series;
//! * [`group`]: finite groups, class functions, induction and restriction;
//! * [`wreath`]: the wreath products `G_n`, their types and class functions;
//! * [`fock`]: the graded Hopf algebra on `F_G`;
//! * [`lambda`]: outer tensor powers, `φ^n`, `ch_n`, `ω_n` and the H/E series;
//! * [`heisenberg`]: creation/annihilation operators and a super Fock model;
//! * [`gset`]: finite G-sets, orbifold Euler characteristics, the McKay table.
//!
//! Everything is exact. Brute-force element-level models live alongside the
//! structural implementations and serve as oracles.

pub mod error;
pub mod exec;
pub mod fock;
pub mod group;
pub mod gset;
pub mod heisenberg;
pub mod lambda;
pub mod report;
pub mod scalars;
pub mod suite;
pub mod wreath;

pub use error::{Error, Result};
pub use exec::Exec;
