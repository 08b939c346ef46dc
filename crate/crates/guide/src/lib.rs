//! The chapters of the `curveloc` guide, compiled as doctests.
#![doc = include_str!("../../../book/src/overview.md")]

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/groebner.md")]
pub mod groebner {}

#[doc = include_str!("../../../book/src/weyl.md")]
pub mod weyl {}

#[doc = include_str!("../../../book/src/annihilators.md")]
pub mod annihilators {}

#[doc = include_str!("../../../book/src/kappa.md")]
pub mod kappa {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
